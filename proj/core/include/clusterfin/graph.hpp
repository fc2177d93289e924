#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace clusterfin {

/// Simple undirected graph.  Edges are normalized to (min, max), stored
/// sorted, and indexable; vertex ids are 0-based.
class Graph {
 public:
  using Edge = std::pair<std::size_t, std::size_t>;

  Graph() = default;
  Graph(std::size_t n, std::vector<Edge> edge_list);

  std::size_t vertex_count() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }

  bool adjacent(std::size_t u, std::size_t v) const {
    return adjacency_[u * n_ + v] != 0;
  }
  const std::vector<std::size_t>& neighbors(std::size_t u) const {
    return neighbors_[u];
  }
  std::optional<std::size_t> edge_index(std::size_t u, std::size_t v) const;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<char> adjacency_;
  std::vector<std::vector<std::size_t>> neighbors_;  // sorted ascending
};

/// Induced cycle on p >= 3 vertices.  The stored order is the canonical
/// representative: starts at the minimal vertex and continues with the lex
/// smaller of the two traversal directions.
struct ChordlessCycle {
  std::vector<std::size_t> vertices;

  std::size_t length() const { return vertices.size(); }
  /// Consecutive vertex pairs, including the closing pair.
  std::vector<std::pair<std::size_t, std::size_t>> edge_pairs() const;

  static ChordlessCycle canonical(std::vector<std::size_t> cycle);

  bool operator==(const ChordlessCycle&) const = default;
};

/// All chordless cycles, each exactly once in canonical form, sorted
/// lexicographically.
std::vector<ChordlessCycle> chordless_cycles(const Graph& g);

/// Vertex partition into connected components, sorted by minimal vertex.
std::vector<std::vector<std::size_t>> connected_components(const Graph& g);

}  // namespace clusterfin
