#pragma once

#include <cstddef>
#include <random>

#include "clusterfin/cyclic_orient.hpp"
#include "clusterfin/graph.hpp"
#include "clusterfin/skew_matrix.hpp"

namespace clusterfin {

using Rng = std::mt19937_64;

/// Erdos-Renyi style graph with the given edge probability.
Graph random_graph(Rng& rng, std::size_t n, double edge_prob);

/// Random skew-symmetrizable matrix built from a random positive diagonal:
/// for an edge {i,j}, b_ij = m d_j / g and b_ji = -m d_i / g with
/// g = gcd(d_i, d_j), so D B is skew-symmetric by construction.  The
/// returned symmetrizer is re-derived and normalized.
SkewSymmetrizableMatrix random_skew_symmetrizable(Rng& rng, std::size_t n,
                                                  double edge_prob,
                                                  unsigned max_multiple = 2,
                                                  unsigned max_diag = 3);

SignAssignment random_sign_assignment(Rng& rng, std::size_t edge_count);

}  // namespace clusterfin
