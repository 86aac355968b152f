#include "fusionring/lattice.hpp"

#include "fusionring/errors.hpp"

#include <stdexcept>

namespace fusionring {

namespace {

Integer dot(const IntVector& a, const IntVector& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    s += a[i] * b[i];
  }
  return s;
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) {
    --q;
  }
  return q;
}

}  // namespace

Integer round_div(const Integer& a, const Integer& b) { return floor_div(2 * a + b, 2 * b); }

Integer norm2(const IntVector& v) { return dot(v, v); }

// Integral LLL after Cohen, "A Course in Computational Algebraic Number
// Theory", Algorithm 2.6.7. Indices below are 1-based to follow it; d[0] = 1.
void lll_reduce(std::vector<IntVector>& basis, long delta_num, long delta_den) {
  if (!(4 * delta_num > delta_den && delta_num < delta_den && delta_den > 0)) {
    throw std::invalid_argument("LLL parameter must lie in (1/4, 1)");
  }
  const std::size_t n = basis.size();
  if (n <= 1) {
    if (n == 1 && norm2(basis[0]) == 0) {
      throw NumericalError("LLL input rows are linearly dependent");
    }
    return;
  }
  auto b = [&](std::size_t i) -> IntVector& { return basis[i - 1]; };
  std::vector<Integer> d(n + 1, 0);
  std::vector<std::vector<Integer>> lam(n + 1, std::vector<Integer>(n + 1, 0));

  auto red = [&](std::size_t k, std::size_t l) {
    if (2 * abs(lam[k][l]) <= d[l]) {
      return;
    }
    const Integer q = round_div(lam[k][l], d[l]);
    IntVector& bk = b(k);
    const IntVector& bl = b(l);
    for (std::size_t c = 0; c < bk.size(); ++c) {
      bk[c] -= q * bl[c];
    }
    lam[k][l] -= q * d[l];
    for (std::size_t i = 1; i < l; ++i) {
      lam[k][i] -= q * lam[l][i];
    }
  };

  std::size_t kmax = 1;
  auto swap = [&](std::size_t k) {
    std::swap(b(k), b(k - 1));
    for (std::size_t j = 1; j + 2 <= k; ++j) {
      std::swap(lam[k][j], lam[k - 1][j]);
    }
    const Integer l = lam[k][k - 1];
    const Integer big = (d[k - 2] * d[k] + l * l) / d[k - 1];
    for (std::size_t i = k + 1; i <= kmax; ++i) {
      const Integer t = lam[i][k];
      lam[i][k] = (d[k] * lam[i][k - 1] - l * t) / d[k - 1];
      lam[i][k - 1] = (big * t + l * lam[i][k]) / d[k];
    }
    d[k - 1] = big;
  };

  d[0] = 1;
  d[1] = norm2(b(1));
  if (d[1] == 0) {
    throw NumericalError("LLL input rows are linearly dependent");
  }
  std::size_t k = 2;
  while (k <= n) {
    if (k > kmax) {
      kmax = k;
      for (std::size_t j = 1; j <= k; ++j) {
        Integer u = dot(b(k), b(j));
        for (std::size_t i = 1; i < j; ++i) {
          u = (d[i] * u - lam[k][i] * lam[j][i]) / d[i - 1];
        }
        if (j < k) {
          lam[k][j] = u;
        } else {
          d[k] = u;
          if (u == 0) {
            throw NumericalError("LLL input rows are linearly dependent");
          }
        }
      }
    }
    red(k, k - 1);
    const Integer& l = lam[k][k - 1];
    if (delta_den * d[k] * d[k - 2] < delta_num * d[k - 1] * d[k - 1] - delta_den * l * l) {
      swap(k);
      k = std::max<std::size_t>(2, k - 1);
      continue;
    }
    for (std::size_t l2 = k - 1; l2-- > 1;) {
      red(k, l2);
    }
    ++k;
  }
}

}  // namespace fusionring
