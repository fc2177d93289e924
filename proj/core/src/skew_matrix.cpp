#include "clusterfin/skew_matrix.hpp"

#include <queue>
#include <stdexcept>
#include <string>

#include "clusterfin/errors.hpp"

namespace clusterfin {

namespace {

using boost::multiprecision::abs;
using boost::multiprecision::gcd;
using boost::multiprecision::lcm;

// Shared symmetrizer search.  `skew` selects the sign discipline: transpose
// entries must have opposite signs (and zero diagonal) or equal signs.  The
// magnitude propagation d_j = d_i |m_ij| / |m_ji| is identical in both cases.
std::optional<Symmetrizer> find_diagonal(const IntMatrix& m, bool skew) {
  const std::size_t n = m.size();

  for (std::size_t i = 0; i < n; ++i) {
    if (skew && m(i, i) != 0) return std::nullopt;
    for (std::size_t j = i + 1; j < n; ++j) {
      const Int& x = m(i, j);
      const Int& y = m(j, i);
      if ((x == 0) != (y == 0)) return std::nullopt;
      if (x == 0) continue;
      const Int prod = x * y;
      if (skew ? prod > 0 : prod < 0) return std::nullopt;
    }
  }

  std::vector<Rational> value(n, Rational(0));
  std::vector<int> component(n, -1);
  int comp_count = 0;
  for (std::size_t root = 0; root < n; ++root) {
    if (component[root] >= 0) continue;
    const int comp = comp_count++;
    component[root] = comp;
    value[root] = 1;
    std::queue<std::size_t> queue;
    queue.push(root);
    while (!queue.empty()) {
      std::size_t i = queue.front();
      queue.pop();
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i || m(i, j) == 0) continue;
        Rational propagated =
            value[i] * Rational(abs(m(i, j)), abs(m(j, i)));
        if (component[j] < 0) {
          component[j] = comp;
          value[j] = propagated;
          queue.push(j);
        } else if (value[j] != propagated) {
          return std::nullopt;  // inconsistent around a cycle
        }
      }
    }
  }

  // Clear denominators and reduce to gcd 1, per component.
  Symmetrizer d;
  d.diag.assign(n, Int(1));
  for (int comp = 0; comp < comp_count; ++comp) {
    Int denom_lcm = 1;
    for (std::size_t v = 0; v < n; ++v)
      if (component[v] == comp)
        denom_lcm = lcm(denom_lcm, Int(denominator(value[v])));
    Int numer_gcd = 0;
    for (std::size_t v = 0; v < n; ++v)
      if (component[v] == comp) {
        d.diag[v] = Int(numerator(value[v])) * (denom_lcm / Int(denominator(value[v])));
        numer_gcd = gcd(numer_gcd, d.diag[v]);
      }
    for (std::size_t v = 0; v < n; ++v)
      if (component[v] == comp) d.diag[v] /= numer_gcd;
  }

  // Certify: the construction never returns an unchecked symmetrizer.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Int lhs = d.diag[i] * m(i, j);
      Int rhs = d.diag[j] * m(j, i);
      if (skew ? lhs != -rhs : lhs != rhs) return std::nullopt;
    }
  return d;
}

}  // namespace

std::optional<Symmetrizer> try_find_symmetrizer(const IntMatrix& b) {
  return find_diagonal(b, /*skew=*/true);
}

Symmetrizer find_symmetrizer(const IntMatrix& b) {
  auto d = try_find_symmetrizer(b);
  if (!d)
    throw NotSkewSymmetrizableError(
        "matrix is not skew-symmetrizable: sign pattern or cycle consistency "
        "violated");
  return *d;
}

std::optional<Symmetrizer> try_find_symmetric_symmetrizer(const IntMatrix& a) {
  return find_diagonal(a, /*skew=*/false);
}

SkewSymmetrizableMatrix make_skew_symmetrizable(IntMatrix b) {
  Symmetrizer d = find_symmetrizer(b);
  return SkewSymmetrizableMatrix{std::move(b), std::move(d)};
}

IntMatrix mutate_entries(const IntMatrix& b, std::size_t k) {
  const std::size_t n = b.size();
  if (k >= n)
    throw std::out_of_range("mutate: index " + std::to_string(k) +
                            " out of range for size " + std::to_string(n));
  IntMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == k || j == k) {
        out(i, j) = -b(i, j);
      } else {
        Int prod = b(i, k) * b(k, j);
        if (prod > 0)
          out(i, j) = b(i, j) + sign_of(b(i, k)) * prod;
        else
          out(i, j) = b(i, j);
      }
    }
  return out;
}

SkewSymmetrizableMatrix mutate(const SkewSymmetrizableMatrix& m, std::size_t k) {
  SkewSymmetrizableMatrix out{mutate_entries(m.b, k), m.d};
  // The symmetrizer is mutation-invariant; keep that certified.
  const std::size_t n = out.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (out.d.diag[i] * out.b(i, j) != -out.d.diag[j] * out.b(j, i))
        throw std::logic_error("mutate: symmetrizer invariant broken");
  return out;
}

}  // namespace clusterfin
