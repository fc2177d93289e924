#include "clusterfin/quasi_cartan.hpp"

#include <algorithm>
#include <stdexcept>

#include "clusterfin/errors.hpp"

namespace clusterfin {

namespace {

using boost::multiprecision::abs;

void validate_quasi_cartan(const IntMatrix& a, const Symmetrizer& d) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (a(i, i) != 2)
      throw NotSymmetrizableError("quasi-Cartan matrix needs diagonal 2");
    for (std::size_t j = 0; j < n; ++j)
      if (d.diag[i] * a(i, j) != d.diag[j] * a(j, i))
        throw NotSymmetrizableError("matrix is not symmetrizable by D");
  }
}

}  // namespace

QuasiCartanMatrix make_quasi_cartan(IntMatrix a) {
  auto d = try_find_symmetric_symmetrizer(a);
  if (!d)
    throw NotSymmetrizableError(
        "matrix is not symmetrizable: sign pattern or cycle consistency "
        "violated");
  QuasiCartanMatrix out{std::move(a), std::move(*d)};
  validate_quasi_cartan(out.a, out.d);
  return out;
}

IntMatrix symmetrized(const QuasiCartanMatrix& a) {
  const std::size_t n = a.size();
  IntMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c(i, j) = a.d.diag[i] * a.a(i, j);
  return c;
}

CompanionCertificate companion_from_signs(const SkewSymmetrizableMatrix& b,
                                          const SignAssignment& s) {
  const Diagram gamma = diagram_of_skew(b);
  const Graph& skeleton = gamma.skeleton();
  if (s.signs.size() != skeleton.edges().size())
    throw SignDomainMismatchError(
        "sign assignment does not cover exactly the edges of the diagram");
  for (int sign : s.signs)
    if (sign != 1 && sign != -1)
      throw SignDomainMismatchError("sign assignment contains a non-sign");

  const std::size_t n = b.size();
  IntMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) a(i, i) = 2;
  for (std::size_t e = 0; e < skeleton.edges().size(); ++e) {
    auto [i, j] = skeleton.edges()[e];
    a(i, j) = -s.signs[e] * abs(b.b(i, j));
    a(j, i) = -s.signs[e] * abs(b.b(j, i));
  }
  QuasiCartanMatrix companion{std::move(a), b.d};
  validate_quasi_cartan(companion.a, companion.d);
  return CompanionCertificate{std::move(companion), b, s};
}

bool is_positive(const QuasiCartanMatrix& a) {
  return !first_nonpositive_minor(a).has_value();
}

std::optional<std::size_t> first_nonpositive_minor(const QuasiCartanMatrix& a) {
  const auto minors = leading_principal_minors(symmetrized(a));
  for (std::size_t k = 0; k < minors.size(); ++k)
    if (minors[k] <= 0) return k;
  return std::nullopt;
}

CycleSignCheck check_cycle_sign_condition(const QuasiCartanMatrix& a) {
  const Diagram gamma = diagram_of_quasi_cartan(a);
  for (const auto& z : chordless_cycles(gamma)) {
    int product = 1;
    for (auto [u, v] : z.edge_pairs()) product *= gamma.edge(u, v)->sign;
    if (product != -1) return {false, z};
  }
  return {true, std::nullopt};
}

namespace {

void require_companion(const QuasiCartanMatrix& a,
                       const SkewSymmetrizableMatrix& b) {
  if (a.size() != b.size())
    throw NotACompanionError("companion size mismatch");
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (i != j && abs(a.a(i, j)) != abs(b.b(i, j)))
        throw NotACompanionError(
            "matrix is not a companion: |A_ij| != |B_ij|");
}

}  // namespace

bool is_k_compatible(const QuasiCartanMatrix& a,
                     const SkewSymmetrizableMatrix& b, std::size_t k) {
  if (k >= b.size()) throw std::out_of_range("is_k_compatible: index");
  require_companion(a, b);
  const std::size_t n = b.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (b.b(i, k) <= 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b.b(k, j) <= 0) continue;
      if (sign_of(a.a(i, k) * a.a(k, j) * a.a(j, i)) != sign_of(b.b(j, i)))
        return false;
    }
  }
  return true;
}

CompanionMutation companion_mutate(const QuasiCartanMatrix& a,
                                   const SkewSymmetrizableMatrix& b,
                                   std::size_t k) {
  if (k >= b.size()) throw std::out_of_range("companion_mutate: index");
  if (!is_k_compatible(a, b, k))
    throw NotKCompatibleError("companion is not k-compatible with the matrix");

  const std::size_t n = b.size();
  IntMatrix j_minus_e = IntMatrix::identity(n);
  IntMatrix j_minus_f = IntMatrix::identity(n);
  j_minus_e(k, k) = -1;
  j_minus_f(k, k) = -1;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == k) continue;
    if (b.b(i, k) > 0) j_minus_e(i, k) = -a.a(i, k);
    if (b.b(k, i) < 0) j_minus_f(k, i) = -a.a(k, i);
  }

  QuasiCartanMatrix mutated{j_minus_e * a.a * j_minus_f, a.d};
  validate_quasi_cartan(mutated.a, mutated.d);
  return CompanionMutation{std::move(mutated), std::move(j_minus_f)};
}

IntMatrix companion_mutate_entrywise(const QuasiCartanMatrix& a,
                                     const SkewSymmetrizableMatrix& b,
                                     std::size_t k) {
  if (k >= b.size())
    throw std::out_of_range("companion_mutate_entrywise: index");
  const std::size_t n = b.size();
  IntMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == k && j == k) {
        out(i, j) = 2;
      } else if (j == k) {
        out(i, j) = sign_of(b.b(i, k)) * a.a(i, k);
      } else if (i == k) {
        out(i, j) = -sign_of(b.b(k, j)) * a.a(k, j);
      } else {
        Int plus_part = b.b(i, k) * b.b(k, j);
        if (plus_part < 0) plus_part = 0;
        out(i, j) = a.a(i, j) - sign_of(a.a(i, k) * a.a(k, j)) * plus_part;
      }
    }
  return out;
}

bool gram_equivalent(const QuasiCartanMatrix& a, const QuasiCartanMatrix& a2,
                     const IntMatrix& e) {
  if (a.d != a2.d)
    throw SymmetrizerMismatchError("gram_equivalent: symmetrizers differ");
  if (a.size() != a2.size() || e.size() != a.size())
    throw SymmetrizerMismatchError("gram_equivalent: size mismatch");
  Int det = determinant(e);
  if (det != 1 && det != -1) return false;
  return e.transposed() * symmetrized(a) * e == symmetrized(a2);
}

CycleClassification classify_cycle_diagram(const Diagram& z) {
  const std::size_t n = z.vertex_count();
  if (n < 3 || z.edges().size() != n)
    throw MalformedCycleError("cycle diagram must have p >= 3 vertices and p edges");
  for (const auto& e : z.edges())
    if (e.sign == 0)
      throw MalformedCycleError("cycle diagram must be signed on every edge");
  for (std::size_t v = 0; v < n; ++v)
    if (z.skeleton().neighbors(v).size() != 2)
      throw MalformedCycleError("cycle diagram must be 2-regular");
  if (connected_components(z).size() != 1)
    throw MalformedCycleError("cycle diagram must be connected");

  // Walk the cycle once to list weights in cyclic order.
  std::vector<Int> weights;
  int sign_product = 1;
  std::size_t prev = 0, cur = z.skeleton().neighbors(0)[0];
  const DiagramEdge* first = z.edge(prev, cur);
  weights.push_back(first->weight);
  sign_product *= first->sign;
  while (cur != 0) {
    const auto& nb = z.skeleton().neighbors(cur);
    std::size_t next = nb[0] == prev ? nb[1] : nb[0];
    const DiagramEdge* e = z.edge(cur, next);
    weights.push_back(e->weight);
    sign_product *= e->sign;
    prev = cur;
    cur = next;
  }
  return CycleClassification{weighted_cycle_shape(weights), sign_product == -1};
}

}  // namespace clusterfin
