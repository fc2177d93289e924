#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace clusterfin {

/// Dense matrix over the two-element field; entries stored as 0/1 bytes.
class GF2Matrix {
 public:
  GF2Matrix() = default;
  GF2Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), bits_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::uint8_t at(std::size_t r, std::size_t c) const {
    return bits_[r * cols_ + c];
  }
  void set(std::size_t r, std::size_t c, bool value) {
    bits_[r * cols_ + c] = value ? 1 : 0;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint8_t> bits_;
};

std::size_t gf2_rank(GF2Matrix m);

struct GF2Solution {
  std::vector<std::uint8_t> particular;
  std::vector<std::vector<std::uint8_t>> nullspace;  // basis of homogeneous solutions
};

/// Full solution set of m x = rhs, or nullopt when the system is
/// inconsistent.  Free variables of the particular solution are set to 0.
std::optional<GF2Solution> gf2_solve(const GF2Matrix& m,
                                     const std::vector<std::uint8_t>& rhs);

}  // namespace clusterfin
