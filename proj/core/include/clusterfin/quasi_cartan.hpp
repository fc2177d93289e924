#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "clusterfin/cyclic_orient.hpp"
#include "clusterfin/diagram.hpp"
#include "clusterfin/int_matrix.hpp"
#include "clusterfin/skew_matrix.hpp"

namespace clusterfin {

/// Symmetrizable integer matrix with every diagonal entry equal to 2;
/// transpose entries share their sign and d_i a_ij = d_j a_ji.
struct QuasiCartanMatrix {
  IntMatrix a;
  Symmetrizer d;

  std::size_t size() const { return a.size(); }
  bool operator==(const QuasiCartanMatrix&) const = default;
};

/// Validates diagonal, sign pattern and symmetrizability; computes the
/// normalized symmetrizer.  Throws NotSymmetrizableError.
QuasiCartanMatrix make_quasi_cartan(IntMatrix a);

/// The symmetrized matrix C = D A.
IntMatrix symmetrized(const QuasiCartanMatrix& a);

/// Companion A of B determined by an edge sign assignment on Gamma(B):
/// A_ij = -eps_ij |B_ij|, diagonal 2, same symmetrizer as B.
struct CompanionCertificate {
  QuasiCartanMatrix companion;
  SkewSymmetrizableMatrix source;
  SignAssignment signs;  // parallel to diagram_of_skew(source).skeleton().edges()
};

/// Throws SignDomainMismatchError unless s covers exactly the edges of
/// Gamma(B).
CompanionCertificate companion_from_signs(const SkewSymmetrizableMatrix& b,
                                          const SignAssignment& s);

/// Sylvester criterion on C = D A: all leading principal minors positive.
bool is_positive(const QuasiCartanMatrix& a);

/// Index (0-based) of the first non-positive leading principal minor of
/// C = D A, or nullopt when a is positive.
std::optional<std::size_t> first_nonpositive_minor(const QuasiCartanMatrix& a);

struct CycleSignCheck {
  bool ok = true;
  std::optional<ChordlessCycle> violating_cycle;
};

/// Necessary condition for positivity: along every chordless cycle Z of
/// Gamma(A) the product of (-A_ij) is negative, i.e. the edge signs multiply
/// to -1.
CycleSignCheck check_cycle_sign_condition(const QuasiCartanMatrix& a);

/// k-compatibility: whenever B_ik > 0 and B_kj > 0,
/// sgn(A_ik A_kj A_ji) = sgn(B_ji).  Throws NotACompanionError when a is not
/// a companion of b.
bool is_k_compatible(const QuasiCartanMatrix& a,
                     const SkewSymmetrizableMatrix& b, std::size_t k);

struct CompanionMutation {
  QuasiCartanMatrix companion;  // k-compatible companion of mutate(b, k)
  IntMatrix transition;         // J - F;  C' = transition^T C transition
};

/// Companion mutation A' = (J - E) A (J - F) where J flips index k, E holds
/// the column-k entries A_ik with B_ik > 0 and F the row-k entries A_kj with
/// B_kj < 0.  Requires a k-compatible companion (NotKCompatibleError).
CompanionMutation companion_mutate(const QuasiCartanMatrix& a,
                                   const SkewSymmetrizableMatrix& b,
                                   std::size_t k);

/// Entrywise form of the same mutation:
///   A'_kk = 2,  A'_ik = sgn(B_ik) A_ik,  A'_kj = -sgn(B_kj) A_kj,
///   A'_ij = A_ij - sgn(A_ik A_kj) [B_ik B_kj]_+   (i, j != k).
/// Kept as an independent route for cross-checking the product form.
IntMatrix companion_mutate_entrywise(const QuasiCartanMatrix& a,
                                     const SkewSymmetrizableMatrix& b,
                                     std::size_t k);

/// Gram equivalence over a shared symmetrizer: det(e) = +-1 and
/// D A' = e^T (D A) e.  Throws SymmetrizerMismatchError.
bool gram_equivalent(const QuasiCartanMatrix& a, const QuasiCartanMatrix& a2,
                     const IntMatrix& e);

struct CycleClassification {
  CycleShape shape = CycleShape::not_positive;
  bool sign_ok = false;  // product of edge signs equals -1
};

/// Shape and sign classification of a signed cycle diagram.  Throws
/// MalformedCycleError when z is not a single signed cycle.
CycleClassification classify_cycle_diagram(const Diagram& z);

}  // namespace clusterfin
