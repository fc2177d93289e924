#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "clusterfin/int_matrix.hpp"
#include "clusterfin/numeric.hpp"

namespace clusterfin {

/// Positive diagonal D with D*B skew-symmetric (resp. D*A symmetric).
/// Normalized so that on every connected component of the associated diagram
/// the gcd of the diagonal entries is 1, which makes symmetrizers comparable.
struct Symmetrizer {
  std::vector<Int> diag;

  std::size_t size() const { return diag.size(); }
  bool operator==(const Symmetrizer&) const = default;
};

struct SkewSymmetrizableMatrix {
  IntMatrix b;
  Symmetrizer d;

  std::size_t size() const { return b.size(); }
  bool operator==(const SkewSymmetrizableMatrix&) const = default;
};

/// Finds the normalized symmetrizer of b, or nullopt when b is not
/// skew-symmetrizable.  Values are propagated along a spanning tree of the
/// nonzero pattern (d_j = d_i |b_ij| / |b_ji|) and every entry pair is
/// re-verified afterwards, so a returned symmetrizer is always certified.
std::optional<Symmetrizer> try_find_symmetrizer(const IntMatrix& b);

/// Throwing variant of try_find_symmetrizer.
Symmetrizer find_symmetrizer(const IntMatrix& b);

/// Symmetric-side analogue used for quasi-Cartan matrices: positive D with
/// D*a symmetric, same normalization.
std::optional<Symmetrizer> try_find_symmetric_symmetrizer(const IntMatrix& a);

SkewSymmetrizableMatrix make_skew_symmetrizable(IntMatrix b);

/// Matrix mutation in direction k:
///   B'_ij = -B_ij                                if i = k or j = k,
///   B'_ij = B_ij + sgn(B_ik) [B_ik B_kj]_+       otherwise.
/// The symmetrizer is unchanged.  Involutive.
SkewSymmetrizableMatrix mutate(const SkewSymmetrizableMatrix& m, std::size_t k);

/// Entry-level mutation used where the symmetrizer is carried separately.
IntMatrix mutate_entries(const IntMatrix& b, std::size_t k);

}  // namespace clusterfin
