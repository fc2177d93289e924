#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "clusterfin/errors.hpp"
#include "clusterfin/gf2.hpp"
#include "clusterfin/int_matrix.hpp"
#include "clusterfin/random_inputs.hpp"
#include "clusterfin/skew_matrix.hpp"

using namespace clusterfin;

namespace {

IntMatrix mat(const std::vector<std::vector<int>>& rows) {
  std::vector<std::vector<Int>> converted;
  for (const auto& row : rows) converted.emplace_back(row.begin(), row.end());
  return IntMatrix::from_rows(converted);
}

// Independent oracle: cofactor expansion along the first row.
Int naive_determinant(const IntMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Int det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c) == 0) continue;
    IntMatrix minor(n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t col = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == c) continue;
        minor(i - 1, col++) = m(i, j);
      }
    }
    Int term = m(0, c) * naive_determinant(minor);
    det += (c % 2 == 0) ? term : -term;
  }
  return det;
}

}  // namespace

TEST_CASE("find_symmetrizer on the spec examples") {
  CHECK(find_symmetrizer(mat({{0, 1}, {-1, 0}})).diag == std::vector<Int>{1, 1});
  CHECK(find_symmetrizer(mat({{0, 1}, {-2, 0}})).diag == std::vector<Int>{2, 1});
  CHECK_THROWS_AS(find_symmetrizer(mat({{0, 1}, {1, 0}})),
                  NotSkewSymmetrizableError);
}

TEST_CASE("find_symmetrizer rejects one-sided zeros and bad cycles") {
  CHECK_THROWS_AS(find_symmetrizer(mat({{0, 1}, {0, 0}})),
                  NotSkewSymmetrizableError);
  CHECK_THROWS_AS(find_symmetrizer(mat({{1, 1}, {-1, 0}})),
                  NotSkewSymmetrizableError);
  // Triangle whose |b_ij|/|b_ji| ratios multiply to 2 around the cycle.
  CHECK_THROWS_AS(find_symmetrizer(mat({{0, 1, -1}, {-2, 0, 1}, {1, -1, 0}})),
                  NotSkewSymmetrizableError);
}

TEST_CASE("find_symmetrizer certifies and normalizes per component") {
  IntMatrix b = mat({{0, 1, 0, 0}, {-2, 0, 0, 0}, {0, 0, 0, 3}, {0, 0, -2, 0}});
  Symmetrizer d = find_symmetrizer(b);
  CHECK(d.diag == std::vector<Int>{2, 1, 2, 3});
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      CHECK(d.diag[i] * b(i, j) == -d.diag[j] * b(j, i));
}

TEST_CASE("mutate matches the worked examples") {
  auto b2 = make_skew_symmetrizable(mat({{0, 1}, {-1, 0}}));
  CHECK(mutate(b2, 0).b == mat({{0, -1}, {1, 0}}));

  auto path = make_skew_symmetrizable(mat({{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}}));
  CHECK(mutate(path, 1).b == mat({{0, -1, 1}, {1, 0, -1}, {-1, 1, 0}}));
}

TEST_CASE("mutate is involutive and keeps the symmetrizer, randomized") {
  Rng rng(7);
  std::uniform_int_distribution<std::size_t> pick_n(1, 5);
  for (int trial = 0; trial < 500; ++trial) {
    std::size_t n = pick_n(rng);
    auto b = random_skew_symmetrizable(rng, n, 0.6);
    std::uniform_int_distribution<std::size_t> pick_k(0, n - 1);
    std::size_t k = pick_k(rng);
    auto once = mutate(b, k);
    CHECK(once.d == b.d);
    CHECK(mutate(once, k).b == b.b);
  }
}

TEST_CASE("mutate rejects out-of-range directions") {
  auto b = make_skew_symmetrizable(mat({{0, 1}, {-1, 0}}));
  CHECK_THROWS_AS(mutate(b, 2), std::out_of_range);
}

TEST_CASE("leading principal minors on the spec examples") {
  CHECK(leading_principal_minors(IntMatrix::identity(3)) ==
        std::vector<Int>{1, 1, 1});
  CHECK(leading_principal_minors(mat({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}})) ==
        std::vector<Int>{2, 3, 4});
  CHECK(leading_principal_minors(mat({{0, 1}, {1, 0}})) ==
        std::vector<Int>{0, -1});
}

TEST_CASE("minors agree with cofactor expansion on random small matrices") {
  Rng rng(11);
  std::uniform_int_distribution<int> entry(-3, 3);
  std::uniform_int_distribution<std::size_t> pick_n(1, 5);
  for (int trial = 0; trial < 10000; ++trial) {
    std::size_t n = pick_n(rng);
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = entry(rng);
    auto minors = leading_principal_minors(m);
    for (std::size_t k = 1; k <= n; ++k) {
      IntMatrix sub(k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(i, j);
      CHECK(minors[k - 1] == naive_determinant(sub));
    }
  }
}

TEST_CASE("gf2_rank basics") {
  CHECK(gf2_rank(GF2Matrix(3, 4)) == 0);
  GF2Matrix id(4, 4);
  for (std::size_t i = 0; i < 4; ++i) id.set(i, i, true);
  CHECK(gf2_rank(id) == 4);
  GF2Matrix ones(2, 2);
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) ones.set(r, c, true);
  CHECK(gf2_rank(ones) == 1);
}

TEST_CASE("gf2_solve on the spec examples") {
  GF2Matrix id(2, 2);
  id.set(0, 0, true);
  id.set(1, 1, true);
  auto sol = gf2_solve(id, {1, 0});
  REQUIRE(sol.has_value());
  CHECK(sol->particular == std::vector<std::uint8_t>{1, 0});
  CHECK(sol->nullspace.empty());

  GF2Matrix row(1, 2);
  row.set(0, 0, true);
  row.set(0, 1, true);
  sol = gf2_solve(row, {1});
  REQUIRE(sol.has_value());
  CHECK(sol->particular == std::vector<std::uint8_t>{1, 0});
  REQUIRE(sol->nullspace.size() == 1);
  CHECK(sol->nullspace[0] == std::vector<std::uint8_t>{1, 1});

  GF2Matrix column(2, 1);
  column.set(0, 0, true);
  column.set(1, 0, true);
  CHECK_FALSE(gf2_solve(column, {1, 0}).has_value());
}

TEST_CASE("gf2_solve solutions substitute back, randomized") {
  Rng rng(13);
  std::uniform_int_distribution<std::size_t> dim(1, 8);
  std::bernoulli_distribution bit(0.4);
  for (int trial = 0; trial < 2000; ++trial) {
    GF2Matrix m(dim(rng), dim(rng));
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) m.set(r, c, bit(rng));
    std::vector<std::uint8_t> rhs(m.rows());
    for (auto& x : rhs) x = bit(rng);
    auto sol = gf2_solve(m, rhs);
    if (!sol) continue;
    // particular plus a random nullspace combination reproduces rhs
    std::vector<std::uint8_t> x = sol->particular;
    for (const auto& basis : sol->nullspace)
      if (bit(rng))
        for (std::size_t c = 0; c < x.size(); ++c) x[c] ^= basis[c];
    for (std::size_t r = 0; r < m.rows(); ++r) {
      std::uint8_t acc = 0;
      for (std::size_t c = 0; c < m.cols(); ++c) acc ^= m.at(r, c) & x[c];
      CHECK(acc == rhs[r]);
    }
  }
}
