#include "clusterfin/diagram.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>

#include "clusterfin/errors.hpp"
#include "clusterfin/quasi_cartan.hpp"

namespace clusterfin {

namespace {

using boost::multiprecision::abs;

// Eq-style invariant of valid diagrams: the weight product along every cycle
// is a perfect square.  Checking a fundamental cycle basis suffices, since
// products multiply over symmetric differences of cycles.
void check_square_cycle_condition(std::size_t n,
                                  const std::vector<DiagramEdge>& edges,
                                  const Graph& skeleton) {
  std::vector<std::size_t> parent(n, SIZE_MAX), depth(n, 0);
  std::vector<char> seen(n, 0);
  std::vector<char> tree_edge(edges.size(), 0);
  auto weight_of = [&](std::size_t u, std::size_t v) -> const Int& {
    auto idx = skeleton.edge_index(u, v);
    return edges[*idx].weight;
  };
  for (std::size_t root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = 1;
    std::queue<std::size_t> queue;
    queue.push(root);
    while (!queue.empty()) {
      std::size_t v = queue.front();
      queue.pop();
      for (std::size_t w : skeleton.neighbors(v)) {
        if (seen[w]) continue;
        seen[w] = 1;
        parent[w] = v;
        depth[w] = depth[v] + 1;
        tree_edge[*skeleton.edge_index(v, w)] = 1;
        queue.push(w);
      }
    }
  }
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (tree_edge[e]) continue;
    std::size_t u = edges[e].i, v = edges[e].j;
    Int product = edges[e].weight;
    while (u != v) {
      if (depth[u] < depth[v]) std::swap(u, v);
      product *= weight_of(u, parent[u]);
      u = parent[u];
    }
    if (!is_perfect_square(product))
      throw MalformedDiagramError(
          "diagram violates the perfect-square cycle condition");
  }
}

}  // namespace

Diagram::Diagram(std::size_t n, std::vector<DiagramEdge> edges) : n_(n) {
  std::vector<Graph::Edge> pairs;
  pairs.reserve(edges.size());
  for (auto& e : edges) {
    if (e.i == e.j) throw MalformedDiagramError("diagram edge is a self-loop");
    if (e.i > e.j) {
      std::swap(e.i, e.j);
      if (e.direction != EdgeDirection::none)
        e.direction = e.direction == EdgeDirection::forward
                          ? EdgeDirection::backward
                          : EdgeDirection::forward;
    }
    if (e.i >= n || e.j >= n)
      throw MalformedDiagramError("diagram edge endpoint out of range");
    if (e.weight < 1) throw MalformedDiagramError("diagram edge weight < 1");
    pairs.emplace_back(e.i, e.j);
  }
  std::sort(edges.begin(), edges.end(),
            [](const DiagramEdge& a, const DiagramEdge& b) {
              return std::pair(a.i, a.j) < std::pair(b.i, b.j);
            });
  try {
    skeleton_ = Graph(n, std::move(pairs));
  } catch (const std::invalid_argument& err) {
    throw MalformedDiagramError(err.what());
  }
  edges_ = std::move(edges);
  check_square_cycle_condition(n_, edges_, skeleton_);
}

const DiagramEdge* Diagram::edge(std::size_t u, std::size_t v) const {
  auto idx = skeleton_.edge_index(u, v);
  if (!idx) return nullptr;
  return &edges_[*idx];
}

bool Diagram::directed_from(std::size_t from, std::size_t to) const {
  const DiagramEdge* e = edge(from, to);
  if (!e || e->direction == EdgeDirection::none) return false;
  bool forward = e->direction == EdgeDirection::forward;
  return forward == (from == e->i);
}

Diagram diagram_of_skew(const SkewSymmetrizableMatrix& b) {
  const std::size_t n = b.size();
  std::vector<DiagramEdge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (b.b(i, j) == 0) continue;
      DiagramEdge e;
      e.i = i;
      e.j = j;
      e.weight = abs(b.b(i, j) * b.b(j, i));
      e.direction = b.b(i, j) > 0 ? EdgeDirection::forward : EdgeDirection::backward;
      edges.push_back(std::move(e));
    }
  return Diagram(n, std::move(edges));
}

Diagram diagram_of_quasi_cartan(const QuasiCartanMatrix& a) {
  const std::size_t n = a.size();
  std::vector<DiagramEdge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (a.a(i, j) == 0) continue;
      DiagramEdge e;
      e.i = i;
      e.j = j;
      e.weight = a.a(i, j) * a.a(j, i);
      e.sign = -sign_of(a.a(i, j));
      edges.push_back(std::move(e));
    }
  return Diagram(n, std::move(edges));
}

std::vector<ChordlessCycle> chordless_cycles(const Diagram& g) {
  return chordless_cycles(g.skeleton());
}

std::vector<std::vector<std::size_t>> connected_components(const Diagram& g) {
  return connected_components(g.skeleton());
}

bool cycle_is_cyclically_oriented(const Diagram& g, const ChordlessCycle& z) {
  bool all_forward = true, all_backward = true;
  for (auto [u, v] : z.edge_pairs()) {
    if (g.directed_from(u, v))
      all_backward = false;
    else if (g.directed_from(v, u))
      all_forward = false;
    else
      return false;  // undirected edge
  }
  return all_forward || all_backward;
}

Diagram diagram_mutate(const Diagram& g, std::size_t k) {
  const std::size_t n = g.vertex_count();
  if (k >= n) throw std::out_of_range("diagram_mutate: vertex out of range");
  for (const auto& e : g.edges())
    if (e.direction == EdgeDirection::none)
      throw MalformedDiagramError("diagram_mutate requires a directed diagram");

  // (u,v) -> (weight, directed u->v?)
  std::map<std::pair<std::size_t, std::size_t>, std::pair<Int, bool>> out;
  for (const auto& e : g.edges()) {
    bool fwd = e.direction == EdgeDirection::forward;
    if (e.i == k || e.j == k) fwd = !fwd;  // reverse edges at k
    out[{e.i, e.j}] = {e.weight, fwd};
  }

  std::vector<std::size_t> into_k, from_k;
  for (std::size_t v : g.skeleton().neighbors(k))
    (g.directed_from(v, k) ? into_k : from_k).push_back(v);

  for (std::size_t i : into_k)
    for (std::size_t j : from_k) {
      if (i == j) continue;
      const Int& a = g.edge(i, k)->weight;
      const Int& b = g.edge(k, j)->weight;
      const DiagramEdge* ij = g.edge(i, j);
      Int c = ij ? ij->weight : Int(0);
      // eps = +1 iff i -> k -> j -> i is an oriented cycle in g.
      int eps = (ij && g.directed_from(j, i)) ? 1 : -1;
      Int root;
      if (!is_perfect_square(a * b * c, &root))
        throw MalformedDiagramError(
            "diagram_mutate: abc is not a perfect square");
      Int c_new = a * b + c - 2 * eps * root;
      auto key = std::minmax(i, j);
      if (c_new == 0) {
        out.erase({key.first, key.second});
        continue;
      }
      // Sign in front of sqrt(c'): positive iff sqrt(ab) > eps sqrt(c),
      // i.e. always for eps = -1 and iff ab > c for eps = +1.  Positive
      // means {i,j,k} is oriented in the mutated diagram, whose edges at k
      // run k -> i and j -> k, so the edge becomes i -> j.
      bool oriented_after = eps == -1 || a * b > c;
      bool i_to_j = oriented_after;
      bool fwd = (key.first == i) ? i_to_j : !i_to_j;
      out[{key.first, key.second}] = {std::move(c_new), fwd};
    }

  std::vector<DiagramEdge> edges;
  edges.reserve(out.size());
  for (auto& [key, value] : out) {
    DiagramEdge e;
    e.i = key.first;
    e.j = key.second;
    e.weight = std::move(value.first);
    e.direction = value.second ? EdgeDirection::forward : EdgeDirection::backward;
    edges.push_back(std::move(e));
  }
  return Diagram(n, std::move(edges));
}

Diagram induced_subdiagram(const Diagram& g, std::vector<std::size_t> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  std::vector<std::size_t> position(g.vertex_count(), SIZE_MAX);
  for (std::size_t p = 0; p < vertices.size(); ++p) {
    if (vertices[p] >= g.vertex_count())
      throw std::invalid_argument("induced_subdiagram: vertex out of range");
    position[vertices[p]] = p;
  }
  std::vector<DiagramEdge> edges;
  for (const auto& e : g.edges())
    if (position[e.i] != SIZE_MAX && position[e.j] != SIZE_MAX) {
      DiagramEdge copy = e;
      copy.i = position[e.i];
      copy.j = position[e.j];
      edges.push_back(std::move(copy));
    }
  return Diagram(vertices.size(), std::move(edges));
}

std::string to_string(ForbiddenPattern pattern) {
  switch (pattern) {
    case ForbiddenPattern::c2_tilde: return "C~2";
    case ForbiddenPattern::cn_tilde: return "C~n";
    case ForbiddenPattern::b3_tilde: return "B~3";
    case ForbiddenPattern::d4_tilde: return "D~4";
    case ForbiddenPattern::g2_tilde: return "G~2";
  }
  return "?";
}

namespace {

const Int& edge_weight(const Diagram& g, std::size_t u, std::size_t v) {
  return g.edge(u, v)->weight;
}

// Induced paths starting with a weight-2 edge, interior edges of weight 1,
// closed by another weight-2 edge: C~2 at two edges, C~n beyond.
bool find_c_tilde(const Diagram& g, std::size_t min_edges,
                  std::size_t max_edges, std::vector<std::size_t>& witness) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> path;
  std::vector<char> on_path(n, 0);

  auto extend = [&](auto&& self) -> bool {
    std::size_t last = path.back();
    for (std::size_t w : g.skeleton().neighbors(last)) {
      if (on_path[w]) continue;
      bool chord = false;
      for (std::size_t t = 0; t + 1 < path.size(); ++t)
        if (g.skeleton().adjacent(w, path[t])) {
          chord = true;
          break;
        }
      if (chord) continue;
      const Int& w_last = edge_weight(g, last, w);
      if (w_last == 2 && path.size() >= min_edges) {
        witness = path;
        witness.push_back(w);
        return true;
      }
      if (w_last == 1 && path.size() < max_edges) {
        path.push_back(w);
        on_path[w] = 1;
        if (self(self)) return true;
        on_path[w] = 0;
        path.pop_back();
      }
    }
    return false;
  };

  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v : g.skeleton().neighbors(u)) {
      if (edge_weight(g, u, v) != 2) continue;
      path.assign({u, v});
      on_path[u] = on_path[v] = 1;
      bool found = extend(extend);
      on_path[u] = on_path[v] = 0;
      if (found) return true;
    }
  return false;
}

}  // namespace

std::optional<ForbiddenSubdiagram> contains_forbidden_subdiagram(const Diagram& g) {
  const std::size_t n = g.vertex_count();
  const Graph& sk = g.skeleton();
  std::vector<std::size_t> witness;

  // C~2: induced path with weights 2,2.
  if (find_c_tilde(g, 2, 2, witness))
    return ForbiddenSubdiagram{ForbiddenPattern::c2_tilde, witness};
  // C~n, n > 2: induced path with end weights 2 and unit interior.
  if (find_c_tilde(g, 3, n, witness))
    return ForbiddenSubdiagram{ForbiddenPattern::cn_tilde, witness};

  // B~3: center with a weight-2 edge and two weight-1 edges to pairwise
  // non-adjacent vertices.
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t x : sk.neighbors(c)) {
      if (edge_weight(g, c, x) != 2) continue;
      const auto& nb = sk.neighbors(c);
      for (std::size_t yi = 0; yi < nb.size(); ++yi)
        for (std::size_t zi = yi + 1; zi < nb.size(); ++zi) {
          std::size_t y = nb[yi], z = nb[zi];
          if (y == x || z == x) continue;
          if (edge_weight(g, c, y) != 1 || edge_weight(g, c, z) != 1) continue;
          if (sk.adjacent(x, y) || sk.adjacent(x, z) || sk.adjacent(y, z))
            continue;
          return ForbiddenSubdiagram{ForbiddenPattern::b3_tilde, {c, x, y, z}};
        }
    }

  // D~4: center with four weight-1 edges to pairwise non-adjacent vertices.
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::size_t> unit;
    for (std::size_t v : sk.neighbors(c))
      if (edge_weight(g, c, v) == 1) unit.push_back(v);
    const std::size_t m = unit.size();
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = a + 1; b < m; ++b)
        for (std::size_t cc = b + 1; cc < m; ++cc)
          for (std::size_t dd = cc + 1; dd < m; ++dd) {
            std::size_t q[4] = {unit[a], unit[b], unit[cc], unit[dd]};
            bool independent = true;
            for (int s = 0; s < 4 && independent; ++s)
              for (int t = s + 1; t < 4; ++t)
                if (sk.adjacent(q[s], q[t])) {
                  independent = false;
                  break;
                }
            if (independent)
              return ForbiddenSubdiagram{ForbiddenPattern::d4_tilde,
                                         {c, q[0], q[1], q[2], q[3]}};
          }
  }

  // G~2: induced path whose first edge has weight 3 (second edge any weight).
  for (std::size_t c = 0; c < n; ++c) {
    const auto& nb = sk.neighbors(c);
    for (std::size_t x : nb)
      for (std::size_t y : nb) {
        if (x == y || sk.adjacent(x, y)) continue;
        if (edge_weight(g, c, x) == 3)
          return ForbiddenSubdiagram{ForbiddenPattern::g2_tilde, {x, c, y}};
      }
  }
  return std::nullopt;
}

CycleShape weighted_cycle_shape(const std::vector<Int>& w) {
  const std::size_t p = w.size();
  if (p < 3) return CycleShape::not_positive;
  if (std::all_of(w.begin(), w.end(), [](const Int& x) { return x == 1; }))
    return CycleShape::all_unit;
  if (p == 3) {
    std::vector<Int> sorted = w;
    std::sort(sorted.begin(), sorted.end());
    if (sorted[0] == 1 && sorted[1] == 2 && sorted[2] == 2)
      return CycleShape::triangle_221;
  }
  if (p == 4) {
    bool even = w[0] == 2 && w[1] == 1 && w[2] == 2 && w[3] == 1;
    bool odd = w[0] == 1 && w[1] == 2 && w[2] == 1 && w[3] == 2;
    if (even || odd) return CycleShape::square_2121;
  }
  return CycleShape::not_positive;
}

std::optional<DynkinShape> classify_dynkin_tree(const Diagram& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("classify_dynkin_tree: empty diagram");
  if (g.edges().size() + 1 != n || connected_components(g).size() != 1)
    throw std::invalid_argument("classify_dynkin_tree: not a connected tree");
  if (n == 1) return DynkinShape{'A', 1};

  std::size_t weight2 = 0, weight3 = 0;
  for (const auto& e : g.edges()) {
    if (e.weight == 1) continue;
    if (e.weight == 2)
      ++weight2;
    else if (e.weight == 3)
      ++weight3;
    else
      return std::nullopt;
  }
  if (weight3 > 0)
    return (n == 2 && weight3 == 1) ? std::optional(DynkinShape{'G', 2})
                                    : std::nullopt;
  if (weight2 > 1) return std::nullopt;

  std::vector<std::size_t> degree(n, 0);
  for (const auto& e : g.edges()) {
    ++degree[e.i];
    ++degree[e.j];
  }
  std::size_t max_degree = *std::max_element(degree.begin(), degree.end());

  if (weight2 == 1) {
    if (max_degree > 2) return std::nullopt;  // fork with a weight-2 edge
    // Path; locate the weight-2 edge.
    const DiagramEdge* heavy = nullptr;
    for (const auto& e : g.edges())
      if (e.weight == 2) heavy = &e;
    bool at_end = degree[heavy->i] == 1 || degree[heavy->j] == 1;
    if (at_end) return DynkinShape{'B', n};
    if (n == 4) return DynkinShape{'F', 4};
    return std::nullopt;
  }

  // All weights 1.
  if (max_degree <= 2) return DynkinShape{'A', n};
  if (max_degree > 3) return std::nullopt;
  std::size_t branches = std::count(degree.begin(), degree.end(), 3);
  if (branches != 1) return std::nullopt;
  std::size_t center = std::find(degree.begin(), degree.end(), 3) - degree.begin();

  // Arm lengths from the branch vertex.
  std::vector<std::size_t> arms;
  for (std::size_t start : g.skeleton().neighbors(center)) {
    std::size_t length = 1, prev = center, cur = start;
    while (degree[cur] == 2) {
      for (std::size_t next : g.skeleton().neighbors(cur))
        if (next != prev) {
          prev = cur;
          cur = next;
          break;
        }
      ++length;
    }
    arms.push_back(length);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] != 1) return std::nullopt;
  if (arms[1] == 1) return DynkinShape{'D', n};  // n = arms[2] + 3 >= 4
  if (arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4)
    return DynkinShape{'E', arms[2] + 4};
  return std::nullopt;
}

QuasiFiniteCheck is_quasi_finite(const Diagram& g, std::size_t cap) {
  const std::size_t n = g.vertex_count();
  if (n > cap)
    throw CapExceededError("is_quasi_finite: vertex count exceeds cap");

  const auto cycles = chordless_cycles(g);

  // Chordless cycles of a non-positive shape are reported first; a bad
  // cycle usually drags non-Dynkin trees along with it.
  for (const auto& z : cycles) {
    std::vector<Int> weights;
    for (auto [u, v] : z.edge_pairs()) weights.push_back(g.edge(u, v)->weight);
    if (weighted_cycle_shape(weights) == CycleShape::not_positive)
      return {false, QuasiFiniteViolation::bad_cycle, z.vertices};
  }

  // Every induced tree must be a Dynkin diagram.
  for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
    std::vector<std::size_t> subset;
    for (std::size_t v = 0; v < n; ++v)
      if (mask & (std::size_t(1) << v)) subset.push_back(v);
    Diagram sub = induced_subdiagram(g, subset);
    if (sub.edges().size() + 1 != subset.size()) continue;
    if (connected_components(sub).size() != 1) continue;
    if (!classify_dynkin_tree(sub))
      return {false, QuasiFiniteViolation::non_dynkin_tree, subset};
  }

  // (iii) no even-attachment wheel over a unit-weight cycle, except a vertex
  // joined to two adjacent cycle vertices by two weight-1 edges.
  for (const auto& z : cycles) {
    bool all_unit = true;
    for (auto [u, v] : z.edge_pairs())
      if (g.edge(u, v)->weight != 1) {
        all_unit = false;
        break;
      }
    if (!all_unit) continue;
    std::vector<char> on_cycle(n, 0);
    for (std::size_t v : z.vertices) on_cycle[v] = 1;
    for (std::size_t k = 0; k < n; ++k) {
      if (on_cycle[k]) continue;
      std::vector<std::size_t> attached;
      bool heavy = false;
      for (std::size_t v : z.vertices)
        if (const DiagramEdge* e = g.edge(k, v)) {
          attached.push_back(v);
          if (e->weight > 2) heavy = true;
        }
      if (heavy || attached.size() < 2 || attached.size() % 2 != 0) continue;
      if (attached.size() == 2 && g.skeleton().adjacent(attached[0], attached[1]) &&
          g.edge(k, attached[0])->weight == 1 && g.edge(k, attached[1])->weight == 1)
        continue;  // the lemma's single exception
      std::vector<std::size_t> witness = z.vertices;
      witness.push_back(k);
      return {false, QuasiFiniteViolation::forbidden_wheel, witness};
    }
  }
  return {true, std::nullopt, {}};
}

}  // namespace clusterfin
