#include "fusionring/numeric.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace fusionring {

namespace {

unsigned bits_to_digits10(unsigned bits) {
  // Boost maps digits10 back to bits with a small round-up, so this never
  // lands below the requested precision.
  return static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) + 1;
}

}  // namespace

PrecisionScope::PrecisionScope(unsigned bits) : saved_digits10_(Real::default_precision()) {
  if (bits < kMinPrecisionBits) {
    throw std::invalid_argument("precision must be at least 64 bits");
  }
  Real::default_precision(bits_to_digits10(bits));
}

PrecisionScope::~PrecisionScope() { Real::default_precision(saved_digits10_); }

unsigned current_precision_bits() {
  Real probe(0);
  return static_cast<unsigned>(mpfr_get_prec(probe.backend().data()));
}

Real pow2(long exponent) {
  Real x(1);
  mpfr_mul_2si(x.backend().data(), x.backend().data(), exponent, MPFR_RNDN);
  return x;
}

Real default_tolerance(unsigned bits) { return pow2(-static_cast<long>(bits / 2)); }

Complex operator/(const Complex& a, const Complex& b) {
  Real den = norm2(b);
  return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}

Complex ipow(const Complex& z, long exponent) {
  if (exponent < 0) {
    return Complex(Real(1)) / ipow(z, -exponent);
  }
  Complex result(Real(1));
  Complex base = z;
  while (exponent > 0) {
    if (exponent & 1) {
      result *= base;
    }
    exponent >>= 1;
    if (exponent > 0) {
      base *= base;
    }
  }
  return result;
}

Real ipow(const Real& x, long exponent) {
  if (exponent < 0) {
    return Real(1) / ipow(x, -exponent);
  }
  Real result(1);
  Real base = x;
  while (exponent > 0) {
    if (exponent & 1) {
      result *= base;
    }
    exponent >>= 1;
    if (exponent > 0) {
      base *= base;
    }
  }
  return result;
}

Rational Rational::parse(const std::string& text) {
  auto parse_long = [&](const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument("invalid rational '" + text + "'");
    }
    return std::stol(s);
  };
  Rational r;
  if (auto slash = text.find('/'); slash != std::string::npos) {
    r.num = parse_long(text.substr(0, slash));
    r.den = parse_long(text.substr(slash + 1));
  } else if (auto dot = text.find('.'); dot != std::string::npos) {
    std::string frac = text.substr(dot + 1);
    if (frac.size() > 9) {
      throw std::invalid_argument("too many decimals in '" + text + "'");
    }
    r.den = 1;
    for (std::size_t k = 0; k < frac.size(); ++k) {
      r.den *= 10;
    }
    r.num = parse_long(text.substr(0, dot)) * r.den + (frac.empty() ? 0 : parse_long(frac));
  } else {
    r.num = parse_long(text);
  }
  if (r.den == 0) {
    throw std::invalid_argument("zero denominator in '" + text + "'");
  }
  long g = std::gcd(r.num, r.den);
  if (g > 1) {
    r.num /= g;
    r.den /= g;
  }
  return r;
}

std::string Rational::str() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

Real Rational::value() const { return Real(num) / Real(den); }

Real rpow(const Real& x, const Rational& s) {
  if (s.is_integer()) {
    return ipow(x, s.num);
  }
  return boost::multiprecision::pow(x, s.value());
}

std::string to_decimal(const Real& x, int digits) {
  if (x == 0) {
    return "0";
  }
  return x.str(digits, std::ios_base::scientific);
}

std::string to_decimal(const Complex& z, int digits) {
  std::string s = to_decimal(z.re, digits);
  if (z.im != 0) {
    s += (z.im < 0 ? " - " : " + ") + to_decimal(Real(boost::multiprecision::abs(z.im)), digits) +
         "i";
  }
  return s;
}

int decimal_digits_for(unsigned bits) {
  return static_cast<int>(std::floor(bits * 0.30102999566398120)) - 5;
}

Real uniform_signed(std::mt19937_64& rng) {
  // 53 random bits mapped to [-1, 1).
  std::uint64_t raw = rng() >> 11;
  Real x(static_cast<double>(raw));
  x = ldexp(x, -52);
  return x - 1;
}

}  // namespace fusionring
