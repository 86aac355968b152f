#include "support.hpp"

#include <fusionring/errors.hpp>
#include <fusionring/lattice.hpp>

#include <boost/multiprecision/gmp.hpp>

#include <random>

using namespace fusionring;
using Q = boost::multiprecision::mpq_rational;

namespace {

// Rational Gram-Schmidt used to verify the reduction conditions.
struct Gso {
  std::vector<std::vector<Q>> mu;
  std::vector<Q> bstar2;
};

Gso gram_schmidt(const std::vector<IntVector>& b) {
  const std::size_t n = b.size();
  std::vector<std::vector<Q>> bs(n);
  Gso g;
  g.mu.assign(n, std::vector<Q>(n, 0));
  g.bstar2.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    bs[i].assign(b[i].begin(), b[i].end());
    for (std::size_t j = 0; j < i; ++j) {
      Q dot = 0;
      for (std::size_t c = 0; c < b[i].size(); ++c) {
        dot += Q(b[i][c]) * bs[j][c];
      }
      g.mu[i][j] = dot / g.bstar2[j];
      for (std::size_t c = 0; c < b[i].size(); ++c) {
        bs[i][c] -= g.mu[i][j] * bs[j][c];
      }
    }
    for (const auto& x : bs[i]) {
      g.bstar2[i] += x * x;
    }
  }
  return g;
}

void check_reduced(const std::vector<IntVector>& b, const Q& delta) {
  const Gso g = gram_schmidt(b);
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      CHECK(abs(g.mu[i][j]) <= Q(1, 2));
    }
    if (i > 0) {
      const Q& m = g.mu[i][i - 1];
      CHECK(g.bstar2[i] >= (delta - m * m) * g.bstar2[i - 1]);
    }
  }
}

Q gram_determinant(const std::vector<IntVector>& b) {
  Q det = 1;
  for (const auto& x : gram_schmidt(b).bstar2) {
    det *= x;
  }
  return det;
}

}  // namespace

TEST_CASE("round_div") {
  CHECK(round_div(7, 2) == 4);
  CHECK(round_div(-7, 2) == -3);
  CHECK(round_div(5, 3) == 2);
  CHECK(round_div(-5, 3) == -2);
  CHECK(round_div(6, 3) == 2);
  CHECK(round_div(0, 5) == 0);
}

TEST_CASE("textbook example") {
  std::vector<IntVector> b = {{1, 1, 1}, {-1, 0, 2}, {3, 5, 6}};
  const Q det = gram_determinant(b);
  lll_reduce(b);
  check_reduced(b, Q(99, 100));
  CHECK(gram_determinant(b) == det);
  CHECK(norm2(b[0]) <= 3);
}

TEST_CASE("random bases: reduction conditions and lattice invariants") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + trial % 6;
    const std::size_t dim = n + trial % 3;
    std::vector<IntVector> b(n, IntVector(dim));
    for (auto& row : b) {
      for (auto& x : row) {
        x = static_cast<long>(rng() % 2001) - 1000;
        x *= static_cast<long>(1 + rng() % 1000);
      }
    }
    const Q det = gram_determinant(b);
    if (det == 0) {
      continue;
    }
    auto reduced = b;
    lll_reduce(reduced, 3, 4);
    check_reduced(reduced, Q(3, 4));
    CHECK(gram_determinant(reduced) == det);
  }
}

TEST_CASE("integer relation recovery: phi^2 - phi - 1") {
  // rows (e_k, round(2^80 phi^k)) for k = 0, 1, 2
  PrecisionScope scope(256);
  const Real phi = (1 + boost::multiprecision::sqrt(Real(5))) / 2;
  std::vector<IntVector> b(3, IntVector(4, 0));
  Real p(1);
  for (std::size_t k = 0; k < 3; ++k) {
    b[k][k] = 1;
    const Real scaled = boost::multiprecision::round(p * pow2(80));
    const std::string digits = scaled.str(0, std::ios_base::fixed);
    b[k][3] = Integer(digits.substr(0, digits.find('.')));
    p *= phi;
  }
  lll_reduce(b);
  IntVector c(b[0].begin(), b[0].begin() + 3);
  if (c[2] < 0) {
    for (auto& x : c) {
      x = -x;
    }
  }
  CHECK(c == IntVector{-1, -1, 1});
}

TEST_CASE("dependent rows and invalid parameters throw") {
  std::vector<IntVector> dep = {{1, 2}, {2, 4}};
  CHECK_THROWS_AS(lll_reduce(dep), NumericalError);
  std::vector<IntVector> zero = {{0, 0}};
  CHECK_THROWS_AS(lll_reduce(zero), NumericalError);
  std::vector<IntVector> ok = {{1, 0}, {0, 1}};
  CHECK_THROWS_AS(lll_reduce(ok, 1, 4), std::invalid_argument);
  CHECK_THROWS_AS(lll_reduce(ok, 1, 1), std::invalid_argument);
  std::vector<IntVector> empty;
  CHECK_NOTHROW(lll_reduce(empty));
}
