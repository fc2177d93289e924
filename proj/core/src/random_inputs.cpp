#include "clusterfin/random_inputs.hpp"

#include "clusterfin/int_matrix.hpp"

namespace clusterfin {

Graph random_graph(Rng& rng, std::size_t n, double edge_prob) {
  std::bernoulli_distribution keep(edge_prob);
  std::vector<Graph::Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (keep(rng)) edges.emplace_back(i, j);
  return Graph(n, std::move(edges));
}

SkewSymmetrizableMatrix random_skew_symmetrizable(Rng& rng, std::size_t n,
                                                  double edge_prob,
                                                  unsigned max_multiple,
                                                  unsigned max_diag) {
  std::bernoulli_distribution keep(edge_prob);
  std::bernoulli_distribution flip(0.5);
  std::uniform_int_distribution<unsigned> diag(1, max_diag);
  std::uniform_int_distribution<unsigned> multiple(1, max_multiple);

  std::vector<Int> d(n);
  for (auto& value : d) value = diag(rng);

  IntMatrix b(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!keep(rng)) continue;
      Int g = boost::multiprecision::gcd(d[i], d[j]);
      Int m = multiple(rng);
      b(i, j) = m * d[j] / g;
      b(j, i) = -m * d[i] / g;
      if (flip(rng)) {
        b(i, j) = -b(i, j);
        b(j, i) = -b(j, i);
      }
    }
  return make_skew_symmetrizable(std::move(b));
}

SignAssignment random_sign_assignment(Rng& rng, std::size_t edge_count) {
  std::bernoulli_distribution flip(0.5);
  SignAssignment s;
  s.signs.reserve(edge_count);
  for (std::size_t e = 0; e < edge_count; ++e)
    s.signs.push_back(flip(rng) ? -1 : 1);
  return s;
}

}  // namespace clusterfin
