#include "clusterfin/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace clusterfin {

Graph::Graph(std::size_t n, std::vector<Edge> edge_list) : n_(n) {
  for (auto& [u, v] : edge_list) {
    if (u >= n || v >= n) throw std::invalid_argument("Graph: vertex out of range");
    if (u == v) throw std::invalid_argument("Graph: self-loop");
    if (u > v) std::swap(u, v);
  }
  std::sort(edge_list.begin(), edge_list.end());
  if (std::adjacent_find(edge_list.begin(), edge_list.end()) != edge_list.end())
    throw std::invalid_argument("Graph: duplicate edge");
  edges_ = std::move(edge_list);
  adjacency_.assign(n_ * n_, 0);
  neighbors_.assign(n_, {});
  for (const auto& [u, v] : edges_) {
    adjacency_[u * n_ + v] = adjacency_[v * n_ + u] = 1;
    neighbors_[u].push_back(v);
    neighbors_[v].push_back(u);
  }
  for (auto& list : neighbors_) std::sort(list.begin(), list.end());
}

std::optional<std::size_t> Graph::edge_index(std::size_t u, std::size_t v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
  if (it == edges_.end() || *it != Edge{u, v}) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

std::vector<std::pair<std::size_t, std::size_t>> ChordlessCycle::edge_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(vertices.size());
  for (std::size_t t = 0; t < vertices.size(); ++t)
    pairs.emplace_back(vertices[t], vertices[(t + 1) % vertices.size()]);
  return pairs;
}

ChordlessCycle ChordlessCycle::canonical(std::vector<std::size_t> cycle) {
  if (cycle.size() < 3)
    throw std::invalid_argument("ChordlessCycle: fewer than 3 vertices");
  auto min_it = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), min_it, cycle.end());
  // Second vertex decides between the two traversal directions.
  if (cycle[1] > cycle.back())
    std::reverse(cycle.begin() + 1, cycle.end());
  return ChordlessCycle{std::move(cycle)};
}

namespace {

// Grows induced paths [m, v1, ..., vt] with m the minimal cycle vertex.  A
// candidate w > m adjacent to vt must avoid all interior vertices; when it
// is also adjacent to m it closes a chordless cycle (kept when v1 < w, which
// picks one traversal direction), otherwise the path is extended.
void extend_chordless(const Graph& g, std::vector<std::size_t>& path,
                      std::vector<char>& on_path,
                      std::vector<ChordlessCycle>& out) {
  const std::size_t m = path.front();
  const std::size_t last = path.back();
  for (std::size_t w : g.neighbors(last)) {
    if (w <= m || on_path[w]) continue;
    bool touches_interior = false;
    for (std::size_t t = 1; t + 1 < path.size(); ++t)
      if (g.adjacent(w, path[t])) {
        touches_interior = true;
        break;
      }
    if (touches_interior) continue;
    if (g.adjacent(w, m)) {
      if (path.size() >= 2 && path[1] < w) {
        std::vector<std::size_t> cycle = path;
        cycle.push_back(w);
        out.push_back(ChordlessCycle{std::move(cycle)});
      }
      continue;  // extending past w would put a chord {m,w} in any closure
    }
    path.push_back(w);
    on_path[w] = 1;
    extend_chordless(g, path, on_path, out);
    on_path[w] = 0;
    path.pop_back();
  }
}

}  // namespace

std::vector<ChordlessCycle> chordless_cycles(const Graph& g) {
  std::vector<ChordlessCycle> out;
  std::vector<char> on_path(g.vertex_count(), 0);
  std::vector<std::size_t> path;
  for (std::size_t m = 0; m < g.vertex_count(); ++m) {
    for (std::size_t a : g.neighbors(m)) {
      if (a <= m) continue;
      path.assign({m, a});
      on_path[m] = on_path[a] = 1;
      extend_chordless(g, path, on_path, out);
      on_path[m] = on_path[a] = 0;
    }
  }
  std::sort(out.begin(), out.end(),
            [](const ChordlessCycle& x, const ChordlessCycle& y) {
              return x.vertices < y.vertices;
            });
  return out;
}

std::vector<std::vector<std::size_t>> connected_components(const Graph& g) {
  std::vector<std::vector<std::size_t>> components;
  std::vector<char> seen(g.vertex_count(), 0);
  for (std::size_t root = 0; root < g.vertex_count(); ++root) {
    if (seen[root]) continue;
    std::vector<std::size_t> comp;
    std::queue<std::size_t> queue;
    queue.push(root);
    seen[root] = 1;
    while (!queue.empty()) {
      std::size_t v = queue.front();
      queue.pop();
      comp.push_back(v);
      for (std::size_t w : g.neighbors(v))
        if (!seen[w]) {
          seen[w] = 1;
          queue.push(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  return components;
}

}  // namespace clusterfin
