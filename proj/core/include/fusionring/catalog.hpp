#pragma once

#include "fusionring/ring.hpp"

#include <string>
#include <vector>

namespace fusionring {

/// Built-in rings, all validated. Recognized names:
///   fibonacci, ising, rep_s3, fib_x_fib, fib_x_cyclic_5, group_s3 (noncommutative)
///   and cyclic_<n> for 1 <= n <= 32.
/// Throws std::out_of_range for unknown names.
FusionRing catalog(const std::string& name);

/// Names of the fixed entries plus a representative cyclic ring.
std::vector<std::string> catalog_names();

/// Group ring Z[G] of a finite group given by its multiplication table
/// (element 0 must be the identity).
FusionRing group_ring(const std::vector<std::vector<Index>>& table, std::string name);

}  // namespace fusionring
