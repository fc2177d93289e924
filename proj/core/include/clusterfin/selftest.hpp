#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "clusterfin/recognizer.hpp"

namespace clusterfin {

struct SweepOutcome {
  bool pass = false;
  std::string summary;
};

/// Recomputes the determinant table and Cartan-Killing types of the built-in
/// A(n) family for n = 1..8, checks d_9 = d_10 = d_11 = 0 and the period-12
/// recurrence d_{n+12} = d_n for n <= dn_limit.
SweepOutcome run_table1_selftest(std::size_t dn_limit = 40);

/// Agreement of the four cyclic-orientability deciders (counting, exact
/// sequence, edge ordering, brute force) over all connected graphs on up to
/// max_vertices vertices plus random graphs on 7-8 vertices, together with
/// the bound |Cyc| >= |Edg| - |Ver| + |Con| on every instance.
SweepOutcome run_criteria_selftest(std::size_t max_vertices = 6,
                                   std::size_t random_graphs = 500,
                                   std::uint64_t seed = 20240901);

/// Exhaustive agreement of recognize() with the mutation-class explorer over
/// all skew-symmetrizable matrices with n <= max_n and entries in
/// [-entry_bound, entry_bound], wherever the oracle is conclusive.
SweepOutcome run_oracle_selftest(std::size_t max_n = 3,
                                 unsigned entry_bound = 2,
                                 const ExploreCaps& caps = {});

}  // namespace clusterfin
