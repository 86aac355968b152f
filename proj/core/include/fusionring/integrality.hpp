#pragma once

// Algebraic-integrality criteria built on the character table: the numbers
// lambda_s and J_{n,s}, the s-Isaacs and strongly Isaacs tests, and the
// integer-relation engine that decides algebraic integrality numerically.

#include "fusionring/lattice.hpp"
#include "fusionring/report.hpp"
#include "fusionring/ring.hpp"
#include "fusionring/spectra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fusionring {

/// Pseudounitary normalization: dimC = fpdim and dimZ[s] = dimC / alpha_s.
struct CenterDims {
  Real dimC;
  std::vector<Real> dimZ;
};

CenterDims center_dims(const Spectrum& spectrum);

/// dimC^s dimZ[rho]^{1-s} rho(b_i) / d_i.
Complex lambda_s(const Spectrum& spectrum, const CenterDims& cd, const Rational& s, Index rho,
                 Index i);

/// dimC^{(n-2)s} (dimZ[rho_1] ... dimZ[rho_n])^{1-s} I_n(rho_1..rho_n), n = chars.size() >= 2.
Complex J_ns(const Spectrum& spectrum, const CenterDims& cd, const Rational& s,
             const std::vector<Index>& chars);

enum class Integrality { Yes, No, Inconclusive };

std::string to_string(Integrality v);

struct MinPolyResult {
  std::vector<Integer> coefficients;  // constant term first; empty when inconclusive
  int degree = 0;
  Real residual{0};  // |p(v)|
  Integrality verdict = Integrality::Inconclusive;

  /// Human-readable form such as "x^2 - x - 1".
  std::string str() const;
};

/// Integer-relation search on (1, v, ..., v^d) for d = 1..maxdeg by lattice
/// reduction at scale 2^{bits/2}. A candidate is accepted when
/// |p(v)| < 2^{-bits/4} max(1, sum_k |c_k| |v|^k) and the same polynomial
/// is found again at scale 2^{bits/2 + bits/8}. Yes iff the accepted
/// polynomial is monic, no iff it is not; inconclusive when nothing is
/// accepted. Results are cached per (value, maxdeg, bits).
MinPolyResult minimal_polynomial(const Complex& v, int maxdeg, unsigned precision_bits);

/// lambda_s(rho, X) is tested for every character and basis element. maxdeg
/// defaults to rank * den(s).
CriterionReport isaacs_check(const FusionRing& ring, const Spectrum& spectrum, const Rational& s,
                             const Settings& settings = {}, std::optional<int> maxdeg = {});

/// fpdim^{2s+1} / d_X^2 tested for integrality for every X; a necessary
/// consequence of passing isaacs_check at s >= 1/2. maxdeg defaults to
/// 2 * rank * den(s).
CriterionReport frobenius_type_check(const FusionRing& ring, const Spectrum& spectrum,
                                     const Rational& s, const Settings& settings = {},
                                     std::optional<int> maxdeg = {});

/// max over (rho, Y) of
///   | sum_eta dimZ[eta]^s J_{n,s}(rho,..,rho,eta) conj(eta(Y)) / dimZ[rho]^{2(1-s)}
///     - dimC dimZ[rho]^{s-1} rho(Y) lambda_s(rho, Y)^{n-2} |.
ResidualReport isaacs_equivalence_check(const FusionRing& ring, const Spectrum& spectrum,
                                        const Rational& s, int n, const Settings& settings = {});

/// J_{n,0}(rho_1..rho_n) / (dimC sqrt(dimZ[rho_1] dimZ[rho_2])) tested for
/// integrality for n = 3..nmax, every character multiset and every choice of
/// the two denominator slots. maxdeg defaults to 2 * rank.
CriterionReport strongly_isaacs_check(const FusionRing& ring, const Spectrum& spectrum, int nmax,
                                      const Settings& settings = {},
                                      std::optional<int> maxdeg = {});

}  // namespace fusionring
