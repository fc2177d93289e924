#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "clusterfin/graph.hpp"
#include "clusterfin/numeric.hpp"
#include "clusterfin/skew_matrix.hpp"

namespace clusterfin {

struct QuasiCartanMatrix;

/// Direction of an edge stored with endpoints i < j.
enum class EdgeDirection : int { none = 0, forward = 1, backward = -1 };

struct DiagramEdge {
  std::size_t i = 0;  // i < j
  std::size_t j = 0;
  Int weight;                                        // >= 1
  EdgeDirection direction = EdgeDirection::none;     // set for diagrams of B
  int sign = 0;                                      // +1/-1 for diagrams of A, else 0

  bool operator==(const DiagramEdge&) const = default;
};

/// Edge-weighted graph on matrix indices.  Built from a skew-symmetrizable
/// matrix it carries directions and no signs; built from a quasi-Cartan
/// matrix it carries signs and no directions.  Construction verifies that
/// the weight product along every cycle of a cycle basis is a perfect
/// square (hence along every cycle).
class Diagram {
 public:
  Diagram() = default;
  Diagram(std::size_t n, std::vector<DiagramEdge> edges);

  std::size_t vertex_count() const { return n_; }
  const std::vector<DiagramEdge>& edges() const { return edges_; }
  const Graph& skeleton() const { return skeleton_; }

  /// Edge between u and v, or nullptr.
  const DiagramEdge* edge(std::size_t u, std::size_t v) const;

  /// True when the edge exists and points from `from` to `to`.
  bool directed_from(std::size_t from, std::size_t to) const;

  bool operator==(const Diagram& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<DiagramEdge> edges_;
  Graph skeleton_;
};

/// Directed diagram of B: an edge {i,j} for each B_ij != 0, oriented i -> j
/// when B_ij > 0, with weight |B_ij B_ji|.
Diagram diagram_of_skew(const SkewSymmetrizableMatrix& b);

/// Signed diagram of A: an edge {i,j} for each A_ij != 0 with weight
/// A_ij A_ji and sign -sgn(A_ij).
Diagram diagram_of_quasi_cartan(const QuasiCartanMatrix& a);

std::vector<ChordlessCycle> chordless_cycles(const Diagram& g);
std::vector<std::vector<std::size_t>> connected_components(const Diagram& g);

/// True when the cycle's edges all run the same way around in g.
bool cycle_is_cyclically_oriented(const Diagram& g, const ChordlessCycle& z);

/// Diagram mutation at k for directed diagrams: edges at k are reversed and
/// every oriented two-edge path i -> k -> j with weights a, b and third-edge
/// weight c (0 when absent) is rewired with
///     c' = ab + c - 2 eps sqrt(abc),
/// eps = +1 iff {i,j,k} is an oriented cycle, the new direction of {i,j}
/// given by the sign in front of sqrt(c') in  +-sqrt(c) +- sqrt(c') = sqrt(ab).
Diagram diagram_mutate(const Diagram& g, std::size_t k);

/// Keeps the listed vertices (relabeled 0..k-1 in sorted order) and the
/// induced edges, with weights, directions and signs intact.
Diagram induced_subdiagram(const Diagram& g, std::vector<std::size_t> vertices);

enum class ForbiddenPattern { c2_tilde, cn_tilde, b3_tilde, d4_tilde, g2_tilde };

std::string to_string(ForbiddenPattern pattern);

struct ForbiddenSubdiagram {
  ForbiddenPattern pattern;
  std::vector<std::size_t> vertices;
};

/// Searches induced subgraphs (weights only) for the non-positive patterns
/// C~2, C~n (n > 2), B~3, D~4 and G~2; returns the first witness in a fixed
/// deterministic order, or nullopt.
std::optional<ForbiddenSubdiagram> contains_forbidden_subdiagram(const Diagram& g);

/// Shape classes of edge-weighted cycles that admit a positive quasi-Cartan
/// matrix: (a) all weights 1, (b) triangle 2,2,1, (c) 4-cycle 2,1,2,1.
enum class CycleShape { all_unit, triangle_221, square_2121, not_positive };

CycleShape weighted_cycle_shape(const std::vector<Int>& cyclic_weights);

struct DynkinShape {
  char family = 'A';  // 'B' is used for the end-weight-2 path (same diagram as C)
  std::size_t rank = 0;

  bool operator==(const DynkinShape&) const = default;
};

/// Classifies a connected edge-weighted tree as a Dynkin diagram, or nullopt.
/// Throws std::invalid_argument when g is not a connected tree.
std::optional<DynkinShape> classify_dynkin_tree(const Diagram& g);

enum class QuasiFiniteViolation { non_dynkin_tree, bad_cycle, forbidden_wheel };

struct QuasiFiniteCheck {
  bool ok = false;
  std::optional<QuasiFiniteViolation> violation;
  std::vector<std::size_t> witness_vertices;
};

/// Exhaustive quasi-finiteness test at desk scale: every induced tree is a
/// Dynkin diagram, every chordless cycle has a positive shape, and no
/// even-attachment wheel over a unit cycle (other than the two-adjacent-
/// vertices weight-1 exception) occurs as an induced subgraph.
QuasiFiniteCheck is_quasi_finite(const Diagram& g, std::size_t cap = 12);

}  // namespace clusterfin
