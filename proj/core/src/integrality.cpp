#include "fusionring/integrality.hpp"

#include "fusionring/errors.hpp"
#include "fusionring/tuples.hpp"

#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fusionring {

using boost::multiprecision::sqrt;

namespace {

const char* kNormalizationNote =
    "pseudounitary normalization: dimC = fpdim and dimZ[rho] = dimC / alpha_rho";

Complex In_value(const Spectrum& spectrum, const std::vector<Index>& chars) {
  const long n = static_cast<long>(chars.size());
  Complex total;
  for (Index i = 0; i < spectrum.dims.size(); ++i) {
    Complex term(ipow(spectrum.dims[i], 2 - n));
    for (Index s : chars) {
      term *= spectrum.chars[s][i];
    }
    total += term;
  }
  return total;
}

// x^{1-s} for x > 0 without needing a negative rational exponent.
Real complement_power(const Real& x, const Rational& s) { return x / rpow(x, s); }

Integer to_integer(const Real& x) {
  Integer z;
  mpfr_get_z(z.backend().data(), x.backend().data(), MPFR_RNDN);
  return z;
}

Real to_real(const Integer& z) {
  Real x;
  mpfr_set_z(x.backend().data(), z.backend().data(), MPFR_RNDN);
  return x;
}

// Shortest vector of the relation lattice for degree d at scale 2^e,
// returned as a primitive polynomial with positive leading coefficient.
std::vector<Integer> relation(const std::vector<Complex>& powers, int d, long e) {
  const Real scale = pow2(e);
  const auto dim = static_cast<std::size_t>(d + 1);
  std::vector<IntVector> basis(dim, IntVector(dim + 2, 0));
  for (std::size_t j = 0; j < dim; ++j) {
    basis[j][j] = 1;
    basis[j][dim] = to_integer(Real(scale * powers[j].re));
    basis[j][dim + 1] = to_integer(Real(scale * powers[j].im));
  }
  lll_reduce(basis);
  std::vector<Integer> c(basis[0].begin(), basis[0].begin() + static_cast<long>(dim));
  while (c.size() > 1 && c.back() == 0) {
    c.pop_back();
  }
  Integer g = 0;
  for (const auto& x : c) {
    g = gcd(g, abs(x));
  }
  if (g > 1) {
    for (auto& x : c) {
      x /= g;
    }
  }
  if (c.back() < 0) {
    for (auto& x : c) {
      x = -x;
    }
  }
  return c;
}

std::string monomial(int k) {
  if (k == 0) {
    return "";
  }
  return k == 1 ? "x" : "x^" + std::to_string(k);
}

std::mutex cache_mutex;
std::map<std::string, MinPolyResult> cache;

MinPolyResult search(const Complex& v, int maxdeg, unsigned bits) {
  std::vector<Complex> powers(static_cast<std::size_t>(maxdeg) + 1);
  powers[0] = Complex(Real(1));
  for (std::size_t k = 1; k < powers.size(); ++k) {
    powers[k] = powers[k - 1] * v;
  }
  const long e1 = static_cast<long>(bits / 2);
  const long e2 = e1 + static_cast<long>(bits / 8);
  const Real threshold = pow2(-static_cast<long>(bits / 4));

  MinPolyResult out;
  for (int d = 1; d <= maxdeg; ++d) {
    std::vector<Integer> c = relation(powers, d, e1);
    if (c.size() < 2) {
      continue;
    }
    Complex value;
    Real size(1);
    for (std::size_t k = 0; k < c.size(); ++k) {
      const Real ck = to_real(c[k]);
      value += powers[k] * ck;
      size += abs(ck) * abs(powers[k]);
    }
    const Real residual = abs(value);
    if (residual >= threshold * size) {
      continue;
    }
    if (relation(powers, d, e2) != c) {
      continue;
    }
    out.coefficients = std::move(c);
    out.degree = static_cast<int>(out.coefficients.size()) - 1;
    out.residual = residual;
    out.verdict = out.coefficients.back() == 1 ? Integrality::Yes : Integrality::No;
    return out;
  }
  return out;
}

// Shared bookkeeping for the integrality-based criteria.
struct IntegralityTally {
  CriterionReport& report;
  int maxdeg;
  unsigned bits;
  int digits;
  std::size_t yes = 0;

  void test(const Complex& v, std::vector<long> indices, const std::string& what) {
    const MinPolyResult mp = minimal_polynomial(v, maxdeg, bits);
    switch (mp.verdict) {
      case Integrality::Yes:
        ++yes;
        break;
      case Integrality::No: {
        Integer margin = 1 - mp.coefficients.back();
        report.witnesses.push_back({std::move(indices), to_decimal(v, digits), margin.str(),
                                    what + " has minimal polynomial " + mp.str() +
                                        ", which is not monic"});
        break;
      }
      case Integrality::Inconclusive:
        report.unresolved.push_back({std::move(indices), to_decimal(v, digits), "0",
                                     what + ": no integer relation up to degree " +
                                         std::to_string(maxdeg)});
        break;
    }
  }

  void finish(std::size_t total) {
    report.notes.push_back(std::to_string(yes) + " of " + std::to_string(total) +
                           " values confirmed algebraic integers");
    report.settle();
  }
};

void require_commutative(const FusionRing& ring, const char* what) {
  if (!ring.is_commutative()) {
    throw DomainError(std::string(what) + " requires a commutative ring");
  }
}

}  // namespace

std::string to_string(Integrality v) {
  switch (v) {
    case Integrality::Yes:
      return "yes";
    case Integrality::No:
      return "no";
    case Integrality::Inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

std::string MinPolyResult::str() const {
  if (coefficients.empty()) {
    return "";
  }
  std::string s;
  for (int k = static_cast<int>(coefficients.size()) - 1; k >= 0; --k) {
    const Integer& c = coefficients[static_cast<std::size_t>(k)];
    if (c == 0) {
      continue;
    }
    const Integer mag = abs(c);
    if (s.empty()) {
      s += c < 0 ? "-" : "";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    if (mag != 1 || k == 0) {
      s += mag.str();
      if (k > 0) {
        s += "*";
      }
    }
    s += monomial(k);
  }
  return s;
}

CenterDims center_dims(const Spectrum& spectrum) {
  CenterDims cd;
  cd.dimC = spectrum.fpdim;
  for (const Real& alpha : spectrum.codegrees) {
    cd.dimZ.push_back(spectrum.fpdim / alpha);
  }
  return cd;
}

Complex lambda_s(const Spectrum& spectrum, const CenterDims& cd, const Rational& s, Index rho,
                 Index i) {
  const Real factor = rpow(cd.dimC, s) * complement_power(cd.dimZ[rho], s) / spectrum.dims[i];
  return spectrum.chars[rho][i] * factor;
}

Complex J_ns(const Spectrum& spectrum, const CenterDims& cd, const Rational& s,
             const std::vector<Index>& chars) {
  if (chars.size() < 2) {
    throw std::invalid_argument("J_{n,s} needs n >= 2");
  }
  const long n = static_cast<long>(chars.size());
  Real prod(1);
  for (Index c : chars) {
    prod *= cd.dimZ[c];
  }
  const Real factor = rpow(cd.dimC, Rational{(n - 2) * s.num, s.den}) * complement_power(prod, s);
  return In_value(spectrum, chars) * factor;
}

MinPolyResult minimal_polynomial(const Complex& v, int maxdeg, unsigned precision_bits) {
  if (maxdeg < 1) {
    throw std::invalid_argument("minimal_polynomial needs maxdeg >= 1");
  }
  PrecisionScope scope(precision_bits);
  const Complex x(Real(v.re), Real(v.im));
  const int digits = decimal_digits_for(precision_bits);
  const std::string key = to_decimal(x.re, digits) + "," + to_decimal(x.im, digits) + "|" +
                          std::to_string(maxdeg) + "|" + std::to_string(precision_bits);
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    if (auto it = cache.find(key); it != cache.end()) {
      return it->second;
    }
  }
  MinPolyResult out = search(x, maxdeg, precision_bits);
  std::lock_guard<std::mutex> lock(cache_mutex);
  cache.emplace(key, out);
  return out;
}

CriterionReport isaacs_check(const FusionRing& ring, const Spectrum& spectrum, const Rational& s,
                             const Settings& settings, std::optional<int> maxdeg) {
  require_commutative(ring, "isaacs_check");
  PrecisionScope scope(settings.precision_bits);
  const int deg = maxdeg.value_or(static_cast<int>(ring.rank() * s.den));
  CriterionReport report = make_report(ring.name(), "isaacs(s=" + s.str() + ")", settings);
  report.parameters.emplace_back("s", s.str());
  report.parameters.emplace_back("maxdeg", std::to_string(deg));
  report.notes.push_back(kNormalizationNote);

  const CenterDims cd = center_dims(spectrum);
  IntegralityTally tally{report, deg, settings.precision_bits, settings.digits()};
  std::size_t total = 0;
  for (Index rho = 0; rho < spectrum.size(); ++rho) {
    for (Index i = 0; i < spectrum.dims.size(); ++i) {
      ++total;
      tally.test(lambda_s(spectrum, cd, s, rho, i),
                 {static_cast<long>(rho), static_cast<long>(i)},
                 "lambda_" + s.str() + "(rho_" + std::to_string(rho) + ", b_" +
                     std::to_string(i) + ")");
    }
  }
  tally.finish(total);
  return report;
}

CriterionReport frobenius_type_check(const FusionRing& ring, const Spectrum& spectrum,
                                     const Rational& s, const Settings& settings,
                                     std::optional<int> maxdeg) {
  PrecisionScope scope(settings.precision_bits);
  const int deg = maxdeg.value_or(static_cast<int>(2 * ring.rank() * s.den));
  CriterionReport report = make_report(ring.name(), "frobenius-type(s=" + s.str() + ")", settings);
  report.parameters.emplace_back("s", s.str());
  report.parameters.emplace_back("maxdeg", std::to_string(deg));
  report.notes.push_back("tests fpdim^(2s+1) / d_X^2 for every basis element X");

  const Real top = rpow(spectrum.fpdim, Rational{2 * s.num + s.den, s.den});
  IntegralityTally tally{report, deg, settings.precision_bits, settings.digits()};
  for (Index i = 0; i < spectrum.dims.size(); ++i) {
    tally.test(Complex(Real(top / (spectrum.dims[i] * spectrum.dims[i]))),
               {static_cast<long>(i)}, "fpdim^(2s+1) / d_" + std::to_string(i) + "^2");
  }
  tally.finish(spectrum.dims.size());
  return report;
}

ResidualReport isaacs_equivalence_check(const FusionRing& ring, const Spectrum& spectrum,
                                        const Rational& s, int n, const Settings& settings) {
  require_commutative(ring, "isaacs_equivalence_check");
  if (n < 2) {
    throw std::invalid_argument("isaacs_equivalence_check needs n >= 2");
  }
  PrecisionScope scope(settings.precision_bits);
  const CenterDims cd = center_dims(spectrum);
  const std::size_t k = spectrum.size();

  ResidualReport out;
  out.check = "isaacs-equivalence(s=" + s.str() + ",n=" + std::to_string(n) + ")";
  out.max_residual = Real(0);
  std::vector<Index> chars(static_cast<std::size_t>(n));
  for (Index rho = 0; rho < k; ++rho) {
    std::vector<Complex> J(k);
    for (Index eta = 0; eta < k; ++eta) {
      std::fill(chars.begin(), chars.end() - 1, rho);
      chars.back() = eta;
      J[eta] = J_ns(spectrum, cd, s, chars) * rpow(cd.dimZ[eta], s);
    }
    const Real zr = cd.dimZ[rho];
    const Real denom = ipow(complement_power(zr, s), 2);
    const Real rhs_scale = cd.dimC * rpow(zr, s) / zr;
    for (Index y = 0; y < spectrum.dims.size(); ++y) {
      ++out.evaluated;
      Complex lhs;
      for (Index eta = 0; eta < k; ++eta) {
        lhs += J[eta] * conj(spectrum.chars[eta][y]);
      }
      lhs /= denom;
      const Complex rhs = spectrum.chars[rho][y] * rhs_scale *
                          ipow(lambda_s(spectrum, cd, s, rho, y), n - 2);
      const Real res = abs(lhs - rhs);
      if (out.worst.empty() || res > out.max_residual) {
        out.max_residual = res;
        out.worst = {static_cast<long>(rho), static_cast<long>(y)};
      }
    }
  }
  return out;
}

CriterionReport strongly_isaacs_check(const FusionRing& ring, const Spectrum& spectrum, int nmax,
                                      const Settings& settings, std::optional<int> maxdeg) {
  require_commutative(ring, "strongly_isaacs_check");
  if (nmax < 3) {
    throw std::invalid_argument("strongly_isaacs_check needs nmax >= 3");
  }
  PrecisionScope scope(settings.precision_bits);
  const int deg = maxdeg.value_or(static_cast<int>(2 * ring.rank()));
  CriterionReport report =
      make_report(ring.name(), "strong-isaacs(n<=" + std::to_string(nmax) + ")", settings);
  report.parameters.emplace_back("nmax", std::to_string(nmax));
  report.parameters.emplace_back("maxdeg", std::to_string(deg));
  report.notes.push_back(kNormalizationNote);
  report.notes.push_back(
      "tuples are listed with the two denominator characters in slots 1 and 2; every choice of "
      "denominator pair is tested");

  const CenterDims cd = center_dims(spectrum);
  const Rational zero{0, 1};
  IntegralityTally tally{report, deg, settings.precision_bits, settings.digits()};
  std::size_t total = 0;
  for (int n = 3; n <= nmax; ++n) {
    for_each_multiset(spectrum.size(), static_cast<std::size_t>(n), [&](const std::vector<Index>& t) {
      const Complex J = J_ns(spectrum, cd, zero, t);
      std::set<std::pair<Index, Index>> pairs;
      for (std::size_t p = 0; p < t.size(); ++p) {
        for (std::size_t q = p + 1; q < t.size(); ++q) {
          if (!pairs.insert({t[p], t[q]}).second) {
            continue;
          }
          std::vector<long> arranged = {static_cast<long>(t[p]), static_cast<long>(t[q])};
          for (std::size_t r = 0; r < t.size(); ++r) {
            if (r != p && r != q) {
              arranged.push_back(static_cast<long>(t[r]));
            }
          }
          const Real denom = cd.dimC * sqrt(Real(cd.dimZ[t[p]] * cd.dimZ[t[q]]));
          ++total;
          std::ostringstream what;
          what << "J_{" << n << ",0}(";
          for (std::size_t a = 0; a < arranged.size(); ++a) {
            what << (a ? "," : "") << arranged[a];
          }
          what << ") / (dimC sqrt(dimZ dimZ))";
          tally.test(J / denom, std::move(arranged), what.str());
        }
      }
    });
  }
  tally.finish(total);
  return report;
}

}  // namespace fusionring
