#include "clusterfin/gf2.hpp"

#include <stdexcept>

namespace clusterfin {

namespace {

void xor_row_into(GF2Matrix& m, std::size_t src, std::size_t dst) {
  for (std::size_t c = 0; c < m.cols(); ++c)
    m.set(dst, c, m.at(dst, c) ^ m.at(src, c));
}

}  // namespace

std::size_t gf2_rank(GF2Matrix m) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && m.at(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != rank)
      for (std::size_t c = 0; c < m.cols(); ++c) {
        std::uint8_t t = m.at(rank, c);
        m.set(rank, c, m.at(pivot, c));
        m.set(pivot, c, t);
      }
    for (std::size_t r = rank + 1; r < m.rows(); ++r)
      if (m.at(r, col)) xor_row_into(m, rank, r);
    ++rank;
  }
  return rank;
}

std::optional<GF2Solution> gf2_solve(const GF2Matrix& m,
                                     const std::vector<std::uint8_t>& rhs) {
  if (rhs.size() != m.rows())
    throw std::invalid_argument("gf2_solve: rhs length must match row count");

  // Augmented reduction to reduced row echelon form.
  GF2Matrix a(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) a.set(r, c, m.at(r, c));
    a.set(r, m.cols(), rhs[r] & 1);
  }

  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < a.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < a.rows() && a.at(pivot, col) == 0) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != row)
      for (std::size_t c = 0; c < a.cols(); ++c) {
        std::uint8_t t = a.at(row, c);
        a.set(row, c, a.at(pivot, c));
        a.set(pivot, c, t);
      }
    for (std::size_t r = 0; r < a.rows(); ++r)
      if (r != row && a.at(r, col)) xor_row_into(a, row, r);
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t r = row; r < a.rows(); ++r)
    if (a.at(r, m.cols())) return std::nullopt;

  GF2Solution sol;
  sol.particular.assign(m.cols(), 0);
  std::vector<char> is_pivot(m.cols(), 0);
  for (std::size_t r = 0; r < pivot_col.size(); ++r) {
    sol.particular[pivot_col[r]] = a.at(r, m.cols());
    is_pivot[pivot_col[r]] = 1;
  }
  for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<std::uint8_t> basis(m.cols(), 0);
    basis[free_col] = 1;
    for (std::size_t r = 0; r < pivot_col.size(); ++r)
      basis[pivot_col[r]] = a.at(r, free_col);
    sol.nullspace.push_back(std::move(basis));
  }
  return sol;
}

}  // namespace clusterfin
