#pragma once

// Exact lattice basis reduction over the integers.

#include <boost/multiprecision/gmp.hpp>

#include <vector>

namespace fusionring {

using Integer = boost::multiprecision::mpz_int;
using IntVector = std::vector<Integer>;

/// LLL-reduces the rows of `basis` in place using the all-integer variant
/// (exact Gram-Schmidt numerators and denominators, no floating point).
/// delta = delta_num / delta_den must lie in (1/4, 1). Throws NumericalError
/// if the rows are linearly dependent.
void lll_reduce(std::vector<IntVector>& basis, long delta_num = 99, long delta_den = 100);

/// Nearest integer to a / b for b > 0, halves rounded up.
Integer round_div(const Integer& a, const Integer& b);

/// Squared Euclidean length.
Integer norm2(const IntVector& v);

}  // namespace fusionring
