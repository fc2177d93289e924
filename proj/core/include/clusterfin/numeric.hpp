#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace clusterfin {

// Exact integers and rationals.  Entry growth under repeated mutation and
// minor expansion is unbounded, so fixed-width arithmetic never appears on a
// decision path.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline int sign_of(const Int& x) { return x.sign(); }

/// Floor of the integer square root; x must be non-negative.
Int isqrt(const Int& x);

/// Tests whether x is a perfect square; on success stores the non-negative
/// root through `root` when given.
bool is_perfect_square(const Int& x, Int* root = nullptr);

}  // namespace clusterfin
