#include "clusterfin/cyclic_orient.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

#include "clusterfin/errors.hpp"
#include "clusterfin/gf2.hpp"

namespace clusterfin {

namespace {

constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();

// BFS distance between two vertices in an adjacency-list graph restricted to
// the currently placed edges.
std::size_t placed_distance(const std::vector<std::vector<std::size_t>>& adj,
                            std::size_t from, std::size_t to) {
  if (from == to) return 0;
  std::vector<std::size_t> dist(adj.size(), kInf);
  std::queue<std::size_t> queue;
  dist[from] = 0;
  queue.push(from);
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop();
    for (std::size_t w : adj[v]) {
      if (dist[w] != kInf) continue;
      dist[w] = dist[v] + 1;
      if (w == to) return dist[w];
      queue.push(w);
    }
  }
  return kInf;
}

}  // namespace

EdgeOrdering order_edges(const Graph& g) {
  const std::size_t n = g.vertex_count();
  EdgeOrdering ordering;
  std::vector<char> placed(g.edges().size(), 0);
  std::vector<char> seen(n, 0);

  // Spanning forest by BFS from the minimal vertex of each component.
  for (std::size_t root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = 1;
    std::queue<std::size_t> queue;
    queue.push(root);
    while (!queue.empty()) {
      std::size_t v = queue.front();
      queue.pop();
      for (std::size_t w : g.neighbors(v)) {
        if (seen[w]) continue;
        seen[w] = 1;
        std::size_t e = *g.edge_index(v, w);
        placed[e] = 1;
        ordering.edges.push_back(g.edges()[e]);
        queue.push(w);
      }
    }
  }
  ordering.split_point = ordering.edges.size();

  // Remaining edges: greedily the one whose endpoints are closest in the
  // graph of already-placed edges; ties go to the lexicographically smallest
  // edge.  Every suffix edge then becomes the maximal edge of at least one
  // chordless cycle.
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& [u, v] : ordering.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::size_t remaining = g.edges().size() - ordering.edges.size();
  while (remaining > 0) {
    std::size_t best = kInf, best_dist = kInf;
    for (std::size_t e = 0; e < g.edges().size(); ++e) {
      if (placed[e]) continue;
      std::size_t d = placed_distance(adj, g.edges()[e].first, g.edges()[e].second);
      if (d < best_dist) {
        best_dist = d;
        best = e;
      }
    }
    placed[best] = 1;
    ordering.edges.push_back(g.edges()[best]);
    adj[g.edges()[best].first].push_back(g.edges()[best].second);
    adj[g.edges()[best].second].push_back(g.edges()[best].first);
    --remaining;
  }
  return ordering;
}

bool is_cyclically_orientable_count(const Graph& g) {
  std::size_t cycles = chordless_cycles(g).size();
  std::size_t rhs_edges = g.edges().size();
  std::size_t rhs_vertices = g.vertex_count();
  std::size_t rhs_components = connected_components(g).size();
  return cycles + rhs_vertices == rhs_edges + rhs_components;
}

bool check_exact_sequence(const Graph& g) {
  const auto components = connected_components(g);
  const auto cycles = chordless_cycles(g);
  const std::size_t V = g.vertex_count();
  const std::size_t E = g.edges().size();
  const std::size_t C = components.size();

  GF2Matrix con_to_ver(V, C);
  for (std::size_t c = 0; c < C; ++c)
    for (std::size_t v : components[c]) con_to_ver.set(v, c, true);

  GF2Matrix ver_to_edg(E, V);
  for (std::size_t e = 0; e < E; ++e) {
    ver_to_edg.set(e, g.edges()[e].first, true);
    ver_to_edg.set(e, g.edges()[e].second, true);
  }

  GF2Matrix edg_to_cyc(cycles.size(), E);
  for (std::size_t z = 0; z < cycles.size(); ++z)
    for (auto [u, v] : cycles[z].edge_pairs())
      edg_to_cyc.set(z, *g.edge_index(u, v), true);

  // Composites vanish, so exactness is a statement about ranks alone:
  // injectivity at Con, kernel = image at Ver and Edg, surjectivity at Cyc.
  std::size_t r1 = gf2_rank(con_to_ver);
  std::size_t r2 = gf2_rank(ver_to_edg);
  std::size_t r3 = gf2_rank(edg_to_cyc);
  return r1 == C && r2 == V - r1 && r3 == E - r2 && r3 == cycles.size();
}

namespace {

// Position of each edge in the ordering, plus the cycles in which each edge
// is maximal.
struct OrderedCycles {
  EdgeOrdering ordering;
  std::vector<std::size_t> position;       // edge index -> position
  std::vector<ChordlessCycle> cycles;
  std::vector<std::size_t> maximal_edge;   // cycle -> edge index
  std::vector<std::vector<std::size_t>> cycles_of_max;  // edge index -> cycles
};

OrderedCycles analyze_ordering(const Graph& g) {
  OrderedCycles oc;
  oc.ordering = order_edges(g);
  oc.position.assign(g.edges().size(), 0);
  for (std::size_t p = 0; p < oc.ordering.edges.size(); ++p)
    oc.position[*g.edge_index(oc.ordering.edges[p].first,
                              oc.ordering.edges[p].second)] = p;
  oc.cycles = chordless_cycles(g);
  oc.cycles_of_max.assign(g.edges().size(), {});
  for (std::size_t z = 0; z < oc.cycles.size(); ++z) {
    std::size_t best = 0, best_pos = 0;
    bool first = true;
    for (auto [u, v] : oc.cycles[z].edge_pairs()) {
      std::size_t e = *g.edge_index(u, v);
      if (first || oc.position[e] > best_pos) {
        best = e;
        best_pos = oc.position[e];
        first = false;
      }
    }
    oc.maximal_edge.push_back(best);
    oc.cycles_of_max[best].push_back(z);
  }
  return oc;
}

}  // namespace

bool check_edge_ordering_criterion(const Graph& g) {
  OrderedCycles oc = analyze_ordering(g);
  for (const auto& cycles : oc.cycles_of_max)
    if (cycles.size() > 1) return false;
  return true;
}

bool orientation_respects_cycles(const Graph& g, const Orientation& o) {
  for (const auto& z : chordless_cycles(g)) {
    bool all_forward = true, all_backward = true;
    for (auto [u, v] : z.edge_pairs()) {
      std::size_t e = *g.edge_index(u, v);
      bool along = (u < v) == (o.forward[e] > 0);
      (along ? all_backward : all_forward) = false;
    }
    if (!all_forward && !all_backward) return false;
  }
  return true;
}

namespace {

// Induced paths from `from` to `to` in the placed subgraph; stops once
// `limit` chains are collected.
void enumerate_chains(const std::vector<std::vector<std::size_t>>& adj,
                      const std::vector<std::vector<char>>& adjacent,
                      std::vector<std::size_t>& path, std::vector<char>& on_path,
                      std::size_t to, std::size_t limit,
                      std::vector<std::vector<std::size_t>>& chains) {
  if (chains.size() >= limit) return;
  std::size_t last = path.back();
  for (std::size_t w : adj[last]) {
    if (chains.size() >= limit) return;
    if (on_path[w]) continue;
    if (w == to) {
      bool chord = false;
      for (std::size_t t = 0; t + 1 < path.size(); ++t)
        if (adjacent[w][path[t]]) {
          chord = true;
          break;
        }
      if (!chord) {
        auto chain = path;
        chain.push_back(w);
        chains.push_back(std::move(chain));
      }
      continue;
    }
    bool chord = false;
    for (std::size_t t = 0; t + 1 < path.size(); ++t)
      if (adjacent[w][path[t]]) {
        chord = true;
        break;
      }
    if (chord) continue;
    path.push_back(w);
    on_path[w] = 1;
    enumerate_chains(adj, adjacent, path, on_path, to, limit, chains);
    on_path[w] = 0;
    path.pop_back();
  }
}

}  // namespace

std::optional<Orientation> construct_orientation(const Graph& g) {
  if (!is_cyclically_orientable_count(g)) return std::nullopt;

  const std::size_t n = g.vertex_count();
  EdgeOrdering ordering = order_edges(g);
  Orientation orientation;
  orientation.forward.assign(g.edges().size(), 0);

  // Placed subgraph state.
  std::vector<std::vector<std::size_t>> adj(n);
  std::vector<std::vector<char>> adjacent(n, std::vector<char>(n, 0));
  std::vector<std::size_t> placed_edges;

  auto place = [&](std::size_t u, std::size_t v, bool u_to_v) {
    std::size_t e = *g.edge_index(u, v);
    orientation.forward[e] = ((u < v) == u_to_v) ? 1 : -1;
    adj[u].push_back(v);
    adj[v].push_back(u);
    adjacent[u][v] = adjacent[v][u] = 1;
    placed_edges.push_back(e);
  };

  for (std::size_t p = 0; p < ordering.edges.size(); ++p) {
    auto [u, v] = ordering.edges[p];
    if (p < ordering.split_point) {
      place(u, v, true);  // forest edges carry no cycle yet; any direction works
      continue;
    }

    std::vector<std::vector<std::size_t>> chains;
    std::vector<std::size_t> path{u};
    std::vector<char> on_path(n, 0);
    on_path[u] = 1;
    enumerate_chains(adj, adjacent, path, on_path, v, 2, chains);

    if (chains.empty()) {
      place(u, v, true);
      continue;
    }
    if (chains.size() > 1)
      throw std::logic_error(
          "construct_orientation: suffix edge closes more than one chordless "
          "cycle on a cyclically orientable graph");

    // Reorient so the unique chain u = i_1 -> ... -> i_t = v runs linearly,
    // flipping each wrong chain edge together with the hanging subgraphs
    // attached to its two endpoints (those flips are pairwise disjoint),
    // then close the cycle with v -> u.
    const auto& chain = chains[0];
    std::vector<char> on_chain(n, 0);
    for (std::size_t x : chain) on_chain[x] = 1;

    // Components of the placed graph minus the chain.
    std::vector<std::size_t> comp(n, kInf);
    std::size_t comp_count = 0;
    for (std::size_t root = 0; root < n; ++root) {
      if (on_chain[root] || comp[root] != kInf) continue;
      comp[root] = comp_count;
      std::queue<std::size_t> queue;
      queue.push(root);
      while (!queue.empty()) {
        std::size_t x = queue.front();
        queue.pop();
        for (std::size_t y : adj[x])
          if (!on_chain[y] && comp[y] == kInf) {
            comp[y] = comp_count;
            queue.push(y);
          }
      }
      ++comp_count;
    }

    auto edge_points_from = [&](std::size_t a, std::size_t b) {
      std::size_t e = *g.edge_index(a, b);
      return (orientation.forward[e] > 0) == (a < b);
    };
    auto flip_edge = [&](std::size_t a, std::size_t b) {
      std::size_t e = *g.edge_index(a, b);
      orientation.forward[e] = -orientation.forward[e];
    };

    for (std::size_t pidx = 0; pidx + 1 < chain.size(); ++pidx) {
      std::size_t a = chain[pidx], b = chain[pidx + 1];
      if (edge_points_from(a, b)) continue;
      // Hanging components joined with both a and b.
      std::vector<char> comp_adj_a(comp_count, 0), comp_adj_b(comp_count, 0);
      for (std::size_t x : adj[a])
        if (!on_chain[x]) comp_adj_a[comp[x]] = 1;
      for (std::size_t x : adj[b])
        if (!on_chain[x]) comp_adj_b[comp[x]] = 1;
      std::vector<char> in_gamma(n, 0);
      for (std::size_t x = 0; x < n; ++x)
        if (!on_chain[x] && comp_adj_a[comp[x]] && comp_adj_b[comp[x]])
          in_gamma[x] = 1;
      flip_edge(a, b);
      for (std::size_t e : placed_edges) {
        auto [x, y] = g.edges()[e];
        bool x_in = in_gamma[x], y_in = in_gamma[y];
        if ((x_in && y_in) || (x_in && (y == a || y == b)) ||
            (y_in && (x == a || x == b)))
          orientation.forward[e] = -orientation.forward[e];
      }
    }
    place(u, v, false);  // v -> u closes the cycle along the chain
  }

  if (!orientation_respects_cycles(g, orientation))
    throw std::logic_error("construct_orientation: soundness check failed");
  return orientation;
}

bool brute_force_orientable(const Graph& g, std::size_t max_edges) {
  const std::size_t E = g.edges().size();
  if (E > max_edges || E >= 63)
    throw CapExceededError("brute_force_orientable: too many edges");
  const auto cycles = chordless_cycles(g);
  if (cycles.empty()) return true;

  // Per cycle: bitmask of its edges and the pattern of a clockwise
  // traversal; an orientation works iff it matches the pattern or its
  // complement on every cycle's bits.
  std::vector<std::uint64_t> cycle_mask(cycles.size(), 0), cycle_pattern(cycles.size(), 0);
  for (std::size_t z = 0; z < cycles.size(); ++z)
    for (auto [u, v] : cycles[z].edge_pairs()) {
      std::size_t e = *g.edge_index(u, v);
      cycle_mask[z] |= std::uint64_t(1) << e;
      if (u < v) cycle_pattern[z] |= std::uint64_t(1) << e;
    }

  const std::uint64_t total = std::uint64_t(1) << E;
  for (std::uint64_t orient = 0; orient < total; ++orient) {
    bool ok = true;
    for (std::size_t z = 0; z < cycles.size(); ++z) {
      std::uint64_t masked = orient & cycle_mask[z];
      if (masked != cycle_pattern[z] && masked != (cycle_pattern[z] ^ cycle_mask[z])) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

SignAssignment assign_signs(const Graph& g) {
  if (!is_cyclically_orientable_count(g))
    throw NotOrientableError("assign_signs: graph is not cyclically orientable");

  OrderedCycles oc = analyze_ordering(g);
  SignAssignment assignment;
  assignment.signs.assign(g.edges().size(), 0);

  // Walk edges in order: free edges default to +1, an edge maximal in its
  // (unique) cycle is forced so the cycle's sign product is -1.  All other
  // edges of that cycle precede it, hence are already signed.
  for (std::size_t p = 0; p < oc.ordering.edges.size(); ++p) {
    std::size_t e = *g.edge_index(oc.ordering.edges[p].first,
                                  oc.ordering.edges[p].second);
    const auto& owned = oc.cycles_of_max[e];
    if (owned.empty()) {
      assignment.signs[e] = 1;
      continue;
    }
    if (owned.size() > 1)
      throw NotOrientableError(
          "assign_signs: an edge is maximal in two chordless cycles");
    int product = 1;
    for (auto [u, v] : oc.cycles[owned[0]].edge_pairs()) {
      std::size_t other = *g.edge_index(u, v);
      if (other != e) product *= assignment.signs[other];
    }
    assignment.signs[e] = -product;
  }

  if (!signs_satisfy_cycle_condition(g, assignment))
    throw std::logic_error("assign_signs: sign product check failed");
  return assignment;
}

bool signs_satisfy_cycle_condition(const Graph& g, const SignAssignment& s) {
  for (const auto& z : chordless_cycles(g)) {
    int product = 1;
    for (auto [u, v] : z.edge_pairs()) product *= s.signs[*g.edge_index(u, v)];
    if (product != -1) return false;
  }
  return true;
}

}  // namespace clusterfin
