#include "clusterfin/numeric.hpp"

#include <stdexcept>

namespace clusterfin {

Int isqrt(const Int& x) {
  if (x < 0) throw std::domain_error("isqrt of negative value");
  return boost::multiprecision::sqrt(x);
}

bool is_perfect_square(const Int& x, Int* root) {
  if (x < 0) return false;
  Int r = boost::multiprecision::sqrt(x);
  if (r * r != x) return false;
  if (root) *root = r;
  return true;
}

}  // namespace clusterfin
