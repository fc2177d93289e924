#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "clusterfin/diagram.hpp"
#include "clusterfin/errors.hpp"
#include "clusterfin/quasi_cartan.hpp"
#include "clusterfin/random_inputs.hpp"
#include "clusterfin/root_type.hpp"

using namespace clusterfin;

namespace {

IntMatrix mat(const std::vector<std::vector<int>>& rows) {
  std::vector<std::vector<Int>> converted;
  for (const auto& row : rows) converted.emplace_back(row.begin(), row.end());
  return IntMatrix::from_rows(converted);
}

Diagram weighted(std::size_t n,
                 const std::vector<std::tuple<int, int, int>>& edges) {
  std::vector<DiagramEdge> list;
  for (auto [i, j, w] : edges)
    list.push_back(DiagramEdge{static_cast<std::size_t>(i),
                               static_cast<std::size_t>(j), Int(w),
                               EdgeDirection::none, 0});
  return Diagram(n, std::move(list));
}

// Subset-enumeration oracle: a vertex set is a chordless cycle iff its
// induced subgraph is 2-regular and connected.
std::set<std::vector<std::size_t>> brute_force_cycle_sets(
    std::size_t n, const std::vector<std::uint8_t>& adj_rows) {
  std::set<std::vector<std::size_t>> sets;
  for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
    if (std::popcount(mask) < 3) continue;
    bool two_regular = true;
    for (std::size_t v = 0; v < n && two_regular; ++v)
      if (mask & (std::size_t(1) << v))
        two_regular = std::popcount(std::size_t(adj_rows[v]) & mask) == 2;
    if (!two_regular) continue;
    // connectivity within the subset
    std::size_t start = std::countr_zero(mask);
    std::size_t seen = std::size_t(1) << start, frontier = seen;
    while (frontier) {
      std::size_t next = 0;
      for (std::size_t v = 0; v < n; ++v)
        if (frontier & (std::size_t(1) << v))
          next |= std::size_t(adj_rows[v]) & mask;
      frontier = next & ~seen;
      seen |= next;
    }
    if (seen != mask) continue;
    std::vector<std::size_t> vertices;
    for (std::size_t v = 0; v < n; ++v)
      if (mask & (std::size_t(1) << v)) vertices.push_back(v);
    sets.insert(std::move(vertices));
  }
  return sets;
}

}  // namespace

TEST_CASE("diagram_of_skew on the spec examples") {
  auto g1 = diagram_of_skew(make_skew_symmetrizable(mat({{0, 1}, {-1, 0}})));
  REQUIRE(g1.edges().size() == 1);
  CHECK(g1.edges()[0].weight == 1);
  CHECK(g1.directed_from(0, 1));

  auto g2 = diagram_of_skew(make_skew_symmetrizable(mat({{0, 1}, {-2, 0}})));
  CHECK(g2.edges()[0].weight == 2);
  CHECK(g2.directed_from(0, 1));

  auto g4 = diagram_of_skew(bn_matrix(4));
  auto cycles = chordless_cycles(g4);
  REQUIRE(cycles.size() == 2);
  CHECK(cycles[0].vertices == std::vector<std::size_t>{0, 1, 2});
  CHECK(cycles[1].vertices == std::vector<std::size_t>{1, 2, 3});
  for (const auto& z : cycles) CHECK(cycle_is_cyclically_oriented(g4, z));
  CHECK(g4.edge(1, 2) != nullptr);  // the shared edge
}

TEST_CASE("diagram_of_quasi_cartan weights and signs") {
  auto a2 = diagram_of_quasi_cartan(make_quasi_cartan(mat({{2, -1}, {-1, 2}})));
  REQUIRE(a2.edges().size() == 1);
  CHECK(a2.edges()[0].weight == 1);
  CHECK(a2.edges()[0].sign == 1);

  auto flipped = diagram_of_quasi_cartan(make_quasi_cartan(mat({{2, 1}, {1, 2}})));
  CHECK(flipped.edges()[0].sign == -1);

  auto a3 = diagram_of_quasi_cartan(an_companion(3));
  REQUIRE(a3.edges().size() == 3);
  int product = 1;
  for (const auto& e : a3.edges()) {
    CHECK(e.weight == 1);
    product *= e.sign;
  }
  CHECK(product == -1);
}

TEST_CASE("diagram construction enforces the square cycle condition") {
  CHECK_THROWS_AS(weighted(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 2}}),
                  MalformedDiagramError);
  CHECK_NOTHROW(weighted(3, {{0, 1, 2}, {1, 2, 2}, {0, 2, 1}}));
  CHECK_THROWS_AS(weighted(2, {{0, 0, 1}}), MalformedDiagramError);
  CHECK_THROWS_AS(weighted(2, {{0, 1, 0}}), MalformedDiagramError);
}

TEST_CASE("chordless cycles: named examples") {
  // trees have none
  CHECK(chordless_cycles(Graph(5, {{0, 1}, {1, 2}, {1, 3}, {3, 4}})).empty());
  // the 4-cycle
  auto square = chordless_cycles(Graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}));
  REQUIRE(square.size() == 1);
  CHECK(square[0].vertices == std::vector<std::size_t>{0, 1, 2, 3});
  // Gamma(B(5)): the three triangles of consecutive indices
  auto b5 = chordless_cycles(diagram_of_skew(bn_matrix(5)));
  REQUIRE(b5.size() == 3);
  CHECK(b5[0].vertices == std::vector<std::size_t>{0, 1, 2});
  CHECK(b5[1].vertices == std::vector<std::size_t>{1, 2, 3});
  CHECK(b5[2].vertices == std::vector<std::size_t>{2, 3, 4});
  // K4 has only its four triangles
  CHECK(chordless_cycles(Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}))
            .size() == 4);
}

TEST_CASE("chordless cycles agree with subset enumeration on all graphs, n <= 7") {
  for (std::size_t n = 1; n <= 7; ++n) {
    std::vector<Graph::Edge> all_pairs;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) all_pairs.emplace_back(i, j);
    for (std::size_t mask = 0; mask < (std::size_t(1) << all_pairs.size()); ++mask) {
      std::vector<Graph::Edge> edges;
      std::vector<std::uint8_t> adj_rows(n, 0);
      for (std::size_t p = 0; p < all_pairs.size(); ++p)
        if (mask & (std::size_t(1) << p)) {
          edges.push_back(all_pairs[p]);
          adj_rows[all_pairs[p].first] |= std::uint8_t(1) << all_pairs[p].second;
          adj_rows[all_pairs[p].second] |= std::uint8_t(1) << all_pairs[p].first;
        }
      Graph g(n, std::move(edges));
      auto found = chordless_cycles(g);
      std::set<std::vector<std::size_t>> found_sets;
      for (const auto& z : found) {
        // validity: consecutive pairs adjacent, nothing else
        for (std::size_t s = 0; s < z.length(); ++s)
          for (std::size_t t = s + 1; t < z.length(); ++t) {
            bool consecutive = (t == s + 1) || (s == 0 && t + 1 == z.length());
            REQUIRE(g.adjacent(z.vertices[s], z.vertices[t]) == consecutive);
          }
        auto sorted = z.vertices;
        std::sort(sorted.begin(), sorted.end());
        REQUIRE(found_sets.insert(sorted).second);  // no duplicates
      }
      REQUIRE(found_sets == brute_force_cycle_sets(n, adj_rows));
    }
  }
}

TEST_CASE("connected components are deterministic") {
  CHECK(connected_components(Graph(3, {})) ==
        std::vector<std::vector<std::size_t>>{{0}, {1}, {2}});
  CHECK(connected_components(Graph(4, {{0, 1}, {1, 2}, {2, 3}})).size() == 1);
  CHECK(connected_components(Graph(4, {{0, 2}, {1, 3}})) ==
        std::vector<std::vector<std::size_t>>{{0, 2}, {1, 3}});
}

TEST_CASE("diagram_mutate rewires oriented two-paths") {
  auto path = diagram_of_skew(
      make_skew_symmetrizable(mat({{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}})));
  auto triangle = diagram_mutate(path, 1);
  REQUIRE(triangle.edges().size() == 3);
  for (const auto& e : triangle.edges()) CHECK(e.weight == 1);
  auto cycles = chordless_cycles(triangle);
  REQUIRE(cycles.size() == 1);
  CHECK(cycle_is_cyclically_oriented(triangle, cycles[0]));

  // mutating at the apex of the oriented triangle removes the third edge
  CHECK(diagram_mutate(triangle, 1) == path);
}

TEST_CASE("diagram_mutate commutes with matrix mutation and is involutive") {
  Rng rng(23);
  std::uniform_int_distribution<std::size_t> pick_n(2, 5);
  for (int trial = 0; trial < 2000; ++trial) {
    std::size_t n = pick_n(rng);
    auto b = random_skew_symmetrizable(rng, n, 0.55);
    std::uniform_int_distribution<std::size_t> pick_k(0, n - 1);
    std::size_t k = pick_k(rng);
    Diagram gamma = diagram_of_skew(b);
    Diagram mutated = diagram_mutate(gamma, k);
    CHECK(mutated == diagram_of_skew(mutate(b, k)));
    CHECK(diagram_mutate(mutated, k) == gamma);
  }
}

TEST_CASE("forbidden subdiagram search") {
  // Dynkin A5: nothing to find
  auto a5 = weighted(5, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}});
  CHECK_FALSE(contains_forbidden_subdiagram(a5).has_value());

  auto c2 = weighted(3, {{0, 1, 2}, {1, 2, 2}});
  REQUIRE(contains_forbidden_subdiagram(c2).has_value());
  CHECK(contains_forbidden_subdiagram(c2)->pattern == ForbiddenPattern::c2_tilde);

  auto cn = weighted(5, {{0, 1, 2}, {1, 2, 1}, {2, 3, 1}, {3, 4, 2}});
  REQUIRE(contains_forbidden_subdiagram(cn).has_value());
  CHECK(contains_forbidden_subdiagram(cn)->pattern == ForbiddenPattern::cn_tilde);

  auto b3 = weighted(4, {{0, 1, 2}, {1, 2, 1}, {1, 3, 1}});
  REQUIRE(contains_forbidden_subdiagram(b3).has_value());
  CHECK(contains_forbidden_subdiagram(b3)->pattern == ForbiddenPattern::b3_tilde);

  auto d4 = weighted(5, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {0, 4, 1}});
  REQUIRE(contains_forbidden_subdiagram(d4).has_value());
  CHECK(contains_forbidden_subdiagram(d4)->pattern == ForbiddenPattern::d4_tilde);

  auto g2 = weighted(3, {{0, 1, 3}, {1, 2, 1}});
  REQUIRE(contains_forbidden_subdiagram(g2).has_value());
  CHECK(contains_forbidden_subdiagram(g2)->pattern == ForbiddenPattern::g2_tilde);

  // weights 2,2,1 on a triangle: the ends of the heavy path are adjacent,
  // so no C~2 is induced
  auto triangle221 = weighted(3, {{0, 1, 2}, {1, 2, 2}, {0, 2, 1}});
  CHECK_FALSE(contains_forbidden_subdiagram(triangle221).has_value());
}

TEST_CASE("Dynkin tree classifier") {
  auto shape = [](const Diagram& g) { return classify_dynkin_tree(g); };

  CHECK(shape(weighted(1, {})) == DynkinShape{'A', 1});
  CHECK(shape(weighted(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}})) == DynkinShape{'A', 4});
  CHECK(shape(weighted(2, {{0, 1, 2}})) == DynkinShape{'B', 2});
  CHECK(shape(weighted(3, {{0, 1, 1}, {1, 2, 2}})) == DynkinShape{'B', 3});
  CHECK(shape(weighted(4, {{0, 1, 1}, {1, 2, 2}, {2, 3, 1}})) == DynkinShape{'F', 4});
  CHECK(shape(weighted(2, {{0, 1, 3}})) == DynkinShape{'G', 2});
  CHECK(shape(weighted(4, {{0, 1, 1}, {1, 2, 1}, {1, 3, 1}})) == DynkinShape{'D', 4});
  CHECK(shape(weighted(6, {{0, 2, 1}, {2, 3, 1}, {1, 3, 1}, {3, 4, 1}, {4, 5, 1}})) ==
        DynkinShape{'E', 6});

  // not Dynkin: interior heavy edge on a 5-path, G~2, D~4, E9-style arm
  CHECK_FALSE(shape(weighted(5, {{0, 1, 1}, {1, 2, 2}, {2, 3, 1}, {3, 4, 1}})));
  CHECK_FALSE(shape(weighted(3, {{0, 1, 3}, {1, 2, 1}})));
  CHECK_FALSE(shape(weighted(5, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {0, 4, 1}})));
  CHECK_FALSE(shape(
      weighted(9, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {4, 5, 1},
                   {5, 6, 1}, {6, 7, 1}, {2, 8, 1}})));
  CHECK_THROWS_AS(shape(weighted(3, {{0, 1, 1}})), std::invalid_argument);
}

TEST_CASE("weighted cycle shapes") {
  auto w = [](std::initializer_list<int> xs) {
    std::vector<Int> out;
    for (int x : xs) out.emplace_back(x);
    return out;
  };
  CHECK(weighted_cycle_shape(w({1, 1, 1, 1, 1})) == CycleShape::all_unit);
  CHECK(weighted_cycle_shape(w({2, 2, 1})) == CycleShape::triangle_221);
  CHECK(weighted_cycle_shape(w({1, 2, 2})) == CycleShape::triangle_221);
  CHECK(weighted_cycle_shape(w({2, 1, 2, 1})) == CycleShape::square_2121);
  CHECK(weighted_cycle_shape(w({1, 2, 1, 2})) == CycleShape::square_2121);
  CHECK(weighted_cycle_shape(w({2, 2, 1, 1})) == CycleShape::not_positive);
  CHECK(weighted_cycle_shape(w({3, 3, 1})) == CycleShape::not_positive);
  CHECK(weighted_cycle_shape(w({2, 2, 2, 2})) == CycleShape::not_positive);
}

TEST_CASE("is_quasi_finite") {
  for (std::size_t n = 1; n <= 8; ++n)
    CHECK(is_quasi_finite(diagram_of_quasi_cartan(cartan_matrix('A', n))).ok);
  CHECK(is_quasi_finite(diagram_of_quasi_cartan(cartan_matrix('F', 4))).ok);

  auto heavy_path = weighted(3, {{0, 1, 2}, {1, 2, 2}});
  auto c2 = is_quasi_finite(heavy_path);
  CHECK_FALSE(c2.ok);
  CHECK(c2.violation == QuasiFiniteViolation::non_dynkin_tree);

  auto bad_square = weighted(4, {{0, 1, 2}, {1, 2, 2}, {2, 3, 1}, {0, 3, 1}});
  auto square = is_quasi_finite(bad_square);
  CHECK_FALSE(square.ok);
  CHECK(square.violation == QuasiFiniteViolation::bad_cycle);

  // wheel: unit 4-cycle plus a hub joined to all four vertices
  auto wheel = weighted(5, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {0, 3, 1},
                            {0, 4, 1}, {1, 4, 1}, {2, 4, 1}, {3, 4, 1}});
  auto hub = is_quasi_finite(wheel);
  CHECK_FALSE(hub.ok);
  CHECK(hub.violation == QuasiFiniteViolation::forbidden_wheel);

  // p = 1 wheel: hub joined to two opposite vertices of the square
  auto theta = weighted(5, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {0, 3, 1},
                            {0, 4, 1}, {2, 4, 1}});
  auto crossed = is_quasi_finite(theta);
  CHECK_FALSE(crossed.ok);
  CHECK(crossed.violation == QuasiFiniteViolation::forbidden_wheel);

  // the lemma's exception: hub joined to two adjacent vertices, both unit
  auto ear = weighted(5, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {0, 3, 1},
                          {0, 4, 1}, {1, 4, 1}});
  CHECK(is_quasi_finite(ear).ok);

  CHECK_THROWS_AS(is_quasi_finite(weighted(13, {}), 12), CapExceededError);
}

TEST_CASE("induced subdiagram keeps weights and directions") {
  auto g4 = diagram_of_skew(bn_matrix(4));
  auto sub = induced_subdiagram(g4, {1, 2, 3});
  CHECK(sub.vertex_count() == 3);
  CHECK(sub.edges().size() == 3);
  auto cycles = chordless_cycles(sub);
  REQUIRE(cycles.size() == 1);
  CHECK(cycle_is_cyclically_oriented(sub, cycles[0]));
}
