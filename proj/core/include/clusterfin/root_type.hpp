#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "clusterfin/quasi_cartan.hpp"

namespace clusterfin {

/// Lattice vector in the standard basis e_1 ... e_n.
using RootVector = std::vector<Int>;

/// Image of v under the reflection s_i, the linear extension of
/// s_i(e_j) = e_j - A_ij e_i.
RootVector reflect(const QuasiCartanMatrix& a, std::size_t i,
                   const RootVector& v);

struct RootClosure {
  bool exceeded = false;
  std::set<RootVector> roots;  // stable closure when !exceeded
};

/// Closure of {+-e_1, ..., +-e_n} under all reflections, by worklist
/// iteration; `exceeded` is set as soon as the closure grows past cap.
RootClosure enumerate_roots(const QuasiCartanMatrix& a, std::size_t cap);

/// Generous default cap: twice the E8 root count per matrix index.
inline std::size_t default_root_cap(std::size_t n) { return 2 * 240 * n; }

struct TypeComponent {
  char family = 'A';  // A, B, C, D, E, F, G
  std::size_t rank = 0;

  auto operator<=>(const TypeComponent&) const = default;
};

/// Multiset of irreducible families/ranks, canonically named: E-rank in
/// {6,7,8}, F4, G2, B/C-rank >= 2, D-rank >= 4 (low-rank aliases such as D3
/// or C2 are reported as A3 resp. B2).
struct CartanKillingType {
  std::vector<TypeComponent> components;  // sorted

  std::string str() const;
  bool operator==(const CartanKillingType&) const = default;
};

/// Cartan-Killing type of a positive quasi-Cartan matrix, read off the
/// reflection orbit: components of the root set under non-orthogonality,
/// then (rank, root count, long/short counts) lookup per component.
/// Throws NotPositiveError.
CartanKillingType cartan_killing_type(const QuasiCartanMatrix& a);

/// The n x n skew-symmetric matrix with above-diagonal entries -1 (j-i = 1),
/// +1 (j-i = 2) and 0 beyond; its diagram is a chain of n-2 oriented
/// triangles.
SkewSymmetrizableMatrix bn_matrix(std::size_t n);

/// The companion of bn_matrix(n) whose above-diagonal entries coincide with
/// it; det(an_companion(n)) is the sequence d_n.
QuasiCartanMatrix an_companion(std::size_t n);

/// d_0 ... d_limit with d_0 = 1 and d_n = det(an_companion(n)), exact.
std::vector<Int> dn_sequence(std::size_t limit);

/// Textbook Cartan matrix of the given family ('A'..'G') and rank, with its
/// normalized symmetrizer.  Used as regression fixtures for the root orbit.
QuasiCartanMatrix cartan_matrix(char family, std::size_t rank);

}  // namespace clusterfin
