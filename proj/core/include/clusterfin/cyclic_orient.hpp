#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "clusterfin/graph.hpp"

namespace clusterfin {

/// Linear edge order whose prefix of length |Ver| - |Con| is a spanning
/// forest and whose suffix edges each close at least one chordless cycle in
/// which they are maximal.
struct EdgeOrdering {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::size_t split_point = 0;
};

/// Spanning forest first (BFS from minimal vertices, neighbors ascending),
/// then the remaining edges greedily by minimal endpoint distance in the
/// graph of already-placed edges, ties broken lexicographically.
EdgeOrdering order_edges(const Graph& g);

/// Counting criterion: |Cyc| = |Edg| - |Ver| + |Con|.
bool is_cyclically_orientable_count(const Graph& g);

/// Exactness of 0 -> F2^Con -> F2^Ver -> F2^Edg -> F2^Cyc -> 0, decided by
/// GF(2) ranks of the three incidence maps.
bool check_exact_sequence(const Graph& g);

/// Injectivity of cycle -> maximal edge under order_edges.
bool check_edge_ordering_criterion(const Graph& g);

/// Orientation of a graph's edge list: forward[e] = +1 means the edge points
/// from its smaller to its larger endpoint.
struct Orientation {
  std::vector<std::int8_t> forward;
};

bool orientation_respects_cycles(const Graph& g, const Orientation& o);

/// Builds an orientation in which every chordless cycle is cyclically
/// oriented, or nullopt when g is not cyclically orientable.  Edges are
/// inserted in order_edges order; a suffix edge closing a unique chain gets
/// the chain reoriented linearly first (flipping whole hanging subgraphs),
/// then closes its cycle.
std::optional<Orientation> construct_orientation(const Graph& g);

/// Oracle: tries all 2^|Edg| orientations.  |Edg| <= max_edges or
/// CapExceededError.
bool brute_force_orientable(const Graph& g, std::size_t max_edges = 20);

/// Edge sign assignment, parallel to Graph::edges().  Produced by
/// assign_signs it satisfies: product of signs along every chordless cycle
/// is -1; unique up to simultaneous sign changes at vertices.
struct SignAssignment {
  std::vector<int> signs;  // +1 / -1

  bool operator==(const SignAssignment&) const = default;
};

/// Greedy assignment along order_edges: a free edge (maximal in no chordless
/// cycle) gets +1, otherwise the sign is forced by the unique cycle the edge
/// is maximal in.  Throws NotOrientableError when g is not cyclically
/// orientable.
SignAssignment assign_signs(const Graph& g);

/// True when the product of signs along every chordless cycle is -1.
bool signs_satisfy_cycle_condition(const Graph& g, const SignAssignment& s);

}  // namespace clusterfin
