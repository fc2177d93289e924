#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "clusterfin/errors.hpp"
#include "clusterfin/random_inputs.hpp"
#include "clusterfin/recognizer.hpp"
#include "clusterfin/root_type.hpp"

using namespace clusterfin;

namespace {

IntMatrix mat(const std::vector<std::vector<int>>& rows) {
  std::vector<std::vector<Int>> converted;
  for (const auto& row : rows) converted.emplace_back(row.begin(), row.end());
  return IntMatrix::from_rows(converted);
}

RootVector basis_vector(std::size_t n, std::size_t i) {
  RootVector e(n, Int(0));
  e[i] = 1;
  return e;
}

CartanKillingType type_of(const std::vector<std::pair<char, std::size_t>>& cs) {
  CartanKillingType t;
  for (auto [f, r] : cs) t.components.push_back({f, r});
  return t;
}

}  // namespace

TEST_CASE("reflections") {
  auto a2 = cartan_matrix('A', 2);
  CHECK(reflect(a2, 0, basis_vector(2, 0)) == RootVector{-1, 0});
  CHECK(reflect(a2, 0, basis_vector(2, 1)) == RootVector{1, 1});

  Rng rng(61);
  std::uniform_int_distribution<int> coord(-4, 4);
  for (int trial = 0; trial < 200; ++trial) {
    RootVector v{coord(rng), coord(rng)};
    for (std::size_t i = 0; i < 2; ++i)
      CHECK(reflect(a2, i, reflect(a2, i, v)) == v);
  }
}

TEST_CASE("root closure on the spec examples") {
  auto decoupled = make_quasi_cartan(mat({{2, 0}, {0, 2}}));
  auto closure = enumerate_roots(decoupled, 100);
  CHECK_FALSE(closure.exceeded);
  CHECK(closure.roots.size() == 4);

  auto a2 = enumerate_roots(cartan_matrix('A', 2), 100);
  CHECK_FALSE(a2.exceeded);
  CHECK(a2.roots.size() == 6);
  CHECK(a2.roots.count(RootVector{1, 1}) == 1);

  auto affine = enumerate_roots(make_quasi_cartan(mat({{2, -2}, {-2, 2}})), 500);
  CHECK(affine.exceeded);
}

TEST_CASE("root closures are stable under reflections and negation") {
  for (char family : {'A', 'B', 'G'}) {
    std::size_t rank = family == 'A' ? 3 : 2;
    auto a = cartan_matrix(family, rank);
    auto closure = enumerate_roots(a, default_root_cap(rank));
    REQUIRE_FALSE(closure.exceeded);
    for (const auto& root : closure.roots) {
      RootVector negated = root;
      for (auto& x : negated) x = -x;
      CHECK(closure.roots.count(negated) == 1);
      for (std::size_t i = 0; i < rank; ++i)
        CHECK(closure.roots.count(reflect(a, i, root)) == 1);
    }
  }
}

TEST_CASE("root count and length fixtures for the classical families") {
  struct Fixture {
    char family;
    std::size_t rank;
    std::size_t roots;
    std::size_t short_roots;  // 0 means simply-laced
  };
  const Fixture fixtures[] = {
      {'A', 1, 2, 0},  {'A', 4, 20, 0},  {'B', 2, 8, 4},  {'B', 3, 18, 6},
      {'C', 3, 18, 12}, {'D', 4, 24, 0}, {'F', 4, 48, 24}, {'G', 2, 12, 6},
  };
  for (const auto& f : fixtures) {
    auto a = cartan_matrix(f.family, f.rank);
    auto closure = enumerate_roots(a, default_root_cap(f.rank));
    REQUIRE_FALSE(closure.exceeded);
    CHECK(closure.roots.size() == f.roots);

    const IntMatrix c = symmetrized(a);
    std::vector<Int> norms;
    for (const auto& root : closure.roots) {
      Int norm = 0;
      for (std::size_t i = 0; i < f.rank; ++i)
        for (std::size_t j = 0; j < f.rank; ++j)
          norm += root[i] * c(i, j) * root[j];
      norms.push_back(norm);
    }
    const Int min_norm = *std::min_element(norms.begin(), norms.end());
    const Int max_norm = *std::max_element(norms.begin(), norms.end());
    const std::size_t shorts = std::count(norms.begin(), norms.end(), min_norm);
    if (f.short_roots == 0) {
      CHECK(min_norm == max_norm);
    } else {
      CHECK(shorts == f.short_roots);
      CHECK(min_norm < max_norm);
    }
  }
}

TEST_CASE("cartan_killing_type of the built-in family") {
  CHECK(cartan_killing_type(an_companion(1)) == type_of({{'A', 1}}));
  CHECK(cartan_killing_type(an_companion(4)) == type_of({{'D', 4}}));
  CHECK(cartan_killing_type(an_companion(6)) == type_of({{'E', 6}}));
  CHECK(cartan_killing_type(make_quasi_cartan(mat({{2, 0}, {0, 2}}))) ==
        type_of({{'A', 1}, {'A', 1}}));
  CHECK(cartan_killing_type(an_companion(5)).str() == "D5");
  CHECK_THROWS_AS(cartan_killing_type(an_companion(9)), NotPositiveError);
}

TEST_CASE("canonical names avoid low-rank aliases") {
  // C2 is reported as B2, D3 as A3
  CHECK(cartan_killing_type(cartan_matrix('C', 2)) == type_of({{'B', 2}}));
  auto d3_like = make_quasi_cartan(
      mat({{2, -1, -1}, {-1, 2, 0}, {-1, 0, 2}}));
  CHECK(cartan_killing_type(d3_like) == type_of({{'A', 3}}));
}

TEST_CASE("bn_matrix and an_companion") {
  CHECK(bn_matrix(2).b == mat({{0, -1}, {1, 0}}));
  CHECK(bn_matrix(3).b == mat({{0, -1, 1}, {1, 0, -1}, {-1, 1, 0}}));
  CHECK(an_companion(1).a == mat({{2}}));
  CHECK(an_companion(3).a == mat({{2, -1, 1}, {-1, 2, -1}, {1, -1, 2}}));
  CHECK(determinant(an_companion(2).a) == 3);

  for (std::size_t n = 3; n <= 9; ++n) {
    Diagram gamma = diagram_of_skew(bn_matrix(n));
    auto cycles = chordless_cycles(gamma);
    CHECK(cycles.size() == n - 2);
    for (const auto& z : cycles) CHECK(cycle_is_cyclically_oriented(gamma, z));
  }
}

TEST_CASE("dn_sequence values and periodicity") {
  auto d = dn_sequence(24);
  const int first_eight[] = {2, 3, 4, 4, 4, 3, 2, 1};
  CHECK(d[0] == 1);
  for (std::size_t n = 1; n <= 8; ++n) CHECK(d[n] == first_eight[n - 1]);
  for (std::size_t n = 9; n <= 11; ++n) CHECK(d[n] == 0);
  for (std::size_t n = 0; n + 12 <= 24; ++n) CHECK(d[n + 12] == d[n]);
  CHECK(d[13] == 2);
}

TEST_CASE("the orbit is finite exactly on positive matrices, exhaustively") {
  // all symmetrizable sign assignments with |A_ij| <= 2, n <= 3
  std::vector<std::pair<int, int>> options{{0, 0}};
  for (int a = 1; a <= 2; ++a)
    for (int b = 1; b <= 2; ++b) {
      options.emplace_back(a, b);
      options.emplace_back(-a, -b);
    }
  for (std::size_t n = 1; n <= 3; ++n) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    std::vector<std::size_t> choice(pairs.size(), 0);
    while (true) {
      IntMatrix m(n);
      for (std::size_t i = 0; i < n; ++i) m(i, i) = 2;
      for (std::size_t p = 0; p < pairs.size(); ++p) {
        m(pairs[p].first, pairs[p].second) = options[choice[p]].first;
        m(pairs[p].second, pairs[p].first) = options[choice[p]].second;
      }
      if (auto d = try_find_symmetric_symmetrizer(m)) {
        QuasiCartanMatrix a{m, *d};
        bool finite = !enumerate_roots(a, default_root_cap(n)).exceeded;
        CHECK(finite == is_positive(a));
      }
      std::size_t p = 0;
      while (p < choice.size() && ++choice[p] == options.size()) choice[p++] = 0;
      if (p == choice.size()) break;
    }
  }
}

TEST_CASE("type is invariant under sign flips and companion mutation") {
  Rng rng(67);
  std::uniform_int_distribution<std::size_t> pick_n(2, 6);
  std::bernoulli_distribution coin(0.5);
  int finite_cases = 0;
  while (finite_cases < 60) {
    auto b = random_skew_symmetrizable(rng, pick_n(rng), 0.5);
    auto report = recognize(b);
    if (report.verdict != Verdict::finite) continue;
    ++finite_cases;
    const auto& cert =
        std::get<OrientedCyclesAndPositiveCompanion>(report.witness).certificate;
    const auto& a = cert.companion;
    CartanKillingType type = cartan_killing_type(a);

    IntMatrix flip = IntMatrix::identity(a.size());
    for (std::size_t v = 0; v < a.size(); ++v)
      if (coin(rng)) flip(v, v) = -1;
    auto flipped = make_quasi_cartan(flip * a.a * flip);
    CHECK(cartan_killing_type(flipped) == type);

    std::uniform_int_distribution<std::size_t> pick_k(0, a.size() - 1);
    std::size_t k = pick_k(rng);
    REQUIRE(is_k_compatible(a, b, k));  // oriented cycles + positivity force it
    auto mutation = companion_mutate(a, b, k);
    CHECK(cartan_killing_type(mutation.companion) == type);
  }
}
