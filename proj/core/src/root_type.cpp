#include "clusterfin/root_type.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>

#include "clusterfin/errors.hpp"

namespace clusterfin {

RootVector reflect(const QuasiCartanMatrix& a, std::size_t i,
                   const RootVector& v) {
  if (i >= a.size()) throw std::out_of_range("reflect: index");
  if (v.size() != a.size()) throw std::invalid_argument("reflect: vector size");
  RootVector out = v;
  Int pairing = 0;
  for (std::size_t j = 0; j < v.size(); ++j) pairing += a.a(i, j) * v[j];
  out[i] -= pairing;
  return out;
}

RootClosure enumerate_roots(const QuasiCartanMatrix& a, std::size_t cap) {
  const std::size_t n = a.size();
  RootClosure closure;
  std::deque<RootVector> worklist;
  auto add = [&](RootVector v) {
    if (closure.roots.insert(v).second) worklist.push_back(std::move(v));
  };
  for (std::size_t i = 0; i < n; ++i) {
    RootVector e(n, Int(0)), me(n, Int(0));
    e[i] = 1;
    me[i] = -1;
    add(std::move(e));
    add(std::move(me));
  }
  while (!worklist.empty()) {
    if (closure.roots.size() > cap) {
      closure.exceeded = true;
      return closure;
    }
    RootVector v = std::move(worklist.front());
    worklist.pop_front();
    for (std::size_t i = 0; i < n; ++i) add(reflect(a, i, v));
  }
  closure.exceeded = closure.roots.size() > cap;
  return closure;
}

namespace {

struct DisjointSets {
  std::vector<std::size_t> parent;

  explicit DisjointSets(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t(0));
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t x, std::size_t y) { parent[find(x)] = find(y); }
};

// Rank of a set of integer vectors over the rationals, by fraction-free
// elimination.
std::size_t lattice_rank(std::vector<RootVector> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      Int scale = rows[r][col];
      for (std::size_t c = 0; c < cols; ++c)
        rows[r][c] = rows[r][c] * rows[rank][col] - scale * rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

struct ComponentProfile {
  std::size_t rank = 0;
  std::size_t count = 0;
  std::size_t short_count = 0;  // roots of minimal squared length
  std::size_t long_count = 0;   // roots of maximal squared length
  Int ratio;                    // long/short norm ratio, 1 when simply laced
};

TypeComponent classify_component(const ComponentProfile& p) {
  const std::size_t r = p.rank;
  const std::size_t N = p.count;
  if (p.ratio == 1) {
    if (N == r * (r + 1)) return {'A', r};
    if (r >= 4 && N == 2 * r * (r - 1)) return {'D', r};
    if (r >= 6 && r <= 8) {
      const std::size_t e_counts[3] = {72, 126, 240};
      if (N == e_counts[r - 6]) return {'E', r};
    }
  } else if (p.ratio == 2) {
    if (r == 2 && N == 8) return {'B', 2};  // canonical name for the B2=C2 class
    if (r == 4 && N == 48 && p.short_count == 24) return {'F', 4};
    if (N == 2 * r * r && p.short_count == 2 * r) return {'B', r};
    if (N == 2 * r * r && p.long_count == 2 * r) return {'C', r};
  } else if (p.ratio == 3) {
    if (r == 2 && N == 12) return {'G', 2};
  }
  throw std::logic_error("classify_component: root system outside the finite table");
}

}  // namespace

std::string CartanKillingType::str() const {
  if (components.empty()) return "(empty)";
  std::string out;
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (i) out += '+';
    out += components[i].family;
    out += std::to_string(components[i].rank);
  }
  return out;
}

CartanKillingType cartan_killing_type(const QuasiCartanMatrix& a) {
  if (!is_positive(a))
    throw NotPositiveError("cartan_killing_type requires a positive matrix");
  const std::size_t n = a.size();
  CartanKillingType type;
  if (n == 0) return type;

  RootClosure closure = enumerate_roots(a, default_root_cap(n));
  if (closure.exceeded)
    throw std::logic_error("cartan_killing_type: root cap hit on a positive matrix");

  const std::vector<RootVector> roots(closure.roots.begin(), closure.roots.end());
  const IntMatrix c = symmetrized(a);

  // Scalar products against C once per root.
  std::vector<RootVector> c_times(roots.size(), RootVector(n, Int(0)));
  std::vector<Int> norm(roots.size());
  for (std::size_t r = 0; r < roots.size(); ++r) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) c_times[r][i] += c(i, j) * roots[r][j];
    Int value = 0;
    for (std::size_t i = 0; i < n; ++i) value += roots[r][i] * c_times[r][i];
    norm[r] = value;
  }

  // Irreducible pieces = components of the non-orthogonality relation.
  DisjointSets sets(roots.size());
  for (std::size_t x = 0; x < roots.size(); ++x)
    for (std::size_t y = x + 1; y < roots.size(); ++y) {
      if (sets.find(x) == sets.find(y)) continue;
      Int dot = 0;
      for (std::size_t i = 0; i < n; ++i) dot += roots[x][i] * c_times[y][i];
      if (dot != 0) sets.unite(x, y);
    }

  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t r = 0; r < roots.size(); ++r)
    groups[sets.find(r)].push_back(r);

  for (const auto& [repr, members] : groups) {
    ComponentProfile profile;
    profile.count = members.size();
    std::vector<RootVector> span;
    Int min_norm = norm[members[0]], max_norm = norm[members[0]];
    for (std::size_t r : members) {
      span.push_back(roots[r]);
      min_norm = std::min(min_norm, norm[r]);
      max_norm = std::max(max_norm, norm[r]);
    }
    profile.rank = lattice_rank(std::move(span));
    for (std::size_t r : members) {
      if (norm[r] == min_norm) ++profile.short_count;
      if (norm[r] == max_norm) ++profile.long_count;
    }
    if (max_norm % min_norm != 0)
      throw std::logic_error("cartan_killing_type: non-integral length ratio");
    profile.ratio = max_norm / min_norm;
    if (profile.short_count + profile.long_count != profile.count &&
        profile.ratio != 1)
      throw std::logic_error("cartan_killing_type: more than two root lengths");
    type.components.push_back(classify_component(profile));
  }
  std::sort(type.components.begin(), type.components.end());
  return type;
}

SkewSymmetrizableMatrix bn_matrix(std::size_t n) {
  if (n < 1) throw std::invalid_argument("bn_matrix: n >= 1 required");
  IntMatrix b(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (j - i == 1)
        b(i, j) = -1;
      else if (j - i == 2)
        b(i, j) = 1;
      else
        continue;
      b(j, i) = -b(i, j);
    }
  return make_skew_symmetrizable(std::move(b));
}

QuasiCartanMatrix an_companion(std::size_t n) {
  if (n < 1) throw std::invalid_argument("an_companion: n >= 1 required");
  const SkewSymmetrizableMatrix b = bn_matrix(n);
  IntMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = 2;
    for (std::size_t j = i + 1; j < n; ++j) {
      a(i, j) = b.b(i, j);
      a(j, i) = b.b(i, j);  // symmetric companion: the symmetrizer is trivial
    }
  }
  return make_quasi_cartan(std::move(a));
}

std::vector<Int> dn_sequence(std::size_t limit) {
  if (limit < 1) throw std::invalid_argument("dn_sequence: limit >= 1 required");
  std::vector<Int> d;
  d.reserve(limit + 1);
  d.push_back(1);  // d_0
  // The A(n) family is nested, but zero determinants (d_9, d_10, d_11)
  // rule out reading all minors off one elimination; each is computed
  // independently.
  const QuasiCartanMatrix big = an_companion(limit);
  for (const Int& minor : leading_principal_minors(big.a)) d.push_back(minor);
  return d;
}

QuasiCartanMatrix cartan_matrix(char family, std::size_t rank) {
  auto path = [](IntMatrix& a, std::size_t from, std::size_t to) {
    a(from, to) = -1;
    a(to, from) = -1;
  };
  IntMatrix a(rank);
  for (std::size_t i = 0; i < rank; ++i) a(i, i) = 2;
  switch (family) {
    case 'A': {
      if (rank < 1) throw std::invalid_argument("cartan_matrix: A rank >= 1");
      for (std::size_t i = 0; i + 1 < rank; ++i) path(a, i, i + 1);
      break;
    }
    case 'B': {
      if (rank < 2) throw std::invalid_argument("cartan_matrix: B rank >= 2");
      for (std::size_t i = 0; i + 2 < rank; ++i) path(a, i, i + 1);
      a(rank - 2, rank - 1) = -1;  // alpha_{n-1} long, alpha_n short
      a(rank - 1, rank - 2) = -2;
      break;
    }
    case 'C': {
      if (rank < 2) throw std::invalid_argument("cartan_matrix: C rank >= 2");
      for (std::size_t i = 0; i + 2 < rank; ++i) path(a, i, i + 1);
      a(rank - 2, rank - 1) = -2;  // alpha_n long
      a(rank - 1, rank - 2) = -1;
      break;
    }
    case 'D': {
      if (rank < 4) throw std::invalid_argument("cartan_matrix: D rank >= 4");
      for (std::size_t i = 0; i + 3 < rank; ++i) path(a, i, i + 1);
      path(a, rank - 4, rank - 3);
      path(a, rank - 3, rank - 2);
      path(a, rank - 3, rank - 1);
      break;
    }
    case 'E': {
      if (rank < 6 || rank > 8)
        throw std::invalid_argument("cartan_matrix: E rank in {6,7,8}");
      // Chain 0-2-3-4-... with node 1 hanging off node 3.
      path(a, 0, 2);
      path(a, 2, 3);
      path(a, 1, 3);
      for (std::size_t i = 3; i + 1 < rank; ++i) path(a, i, i + 1);
      break;
    }
    case 'F': {
      if (rank != 4) throw std::invalid_argument("cartan_matrix: F rank = 4");
      path(a, 0, 1);
      a(1, 2) = -1;  // alpha_2 long, alpha_3 short
      a(2, 1) = -2;
      path(a, 2, 3);
      break;
    }
    case 'G': {
      if (rank != 2) throw std::invalid_argument("cartan_matrix: G rank = 2");
      a(0, 1) = -3;  // alpha_1 short, alpha_2 long
      a(1, 0) = -1;
      break;
    }
    default:
      throw std::invalid_argument("cartan_matrix: family must be A..G");
  }
  return make_quasi_cartan(std::move(a));
}

}  // namespace clusterfin
