#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "clusterfin/numeric.hpp"

namespace clusterfin {

/// Dense square matrix over arbitrary-precision integers, row major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), entries_(n * n) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);

  std::size_t size() const { return n_; }

  const Int& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * n_ + j];
  }
  Int& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }

  /// Row-major entry vector; used as an exact dedup key by the explorer.
  const std::vector<Int>& entries() const { return entries_; }

  IntMatrix transposed() const;

  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<Int> entries_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

/// Exact determinant by fraction-free Bareiss elimination with row pivoting.
Int determinant(IntMatrix m);

/// Exact determinants of the top-left 1x1 ... nxn submatrices.  Each minor is
/// eliminated independently so that zero leading minors are handled.
std::vector<Int> leading_principal_minors(const IntMatrix& m);

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

}  // namespace clusterfin
