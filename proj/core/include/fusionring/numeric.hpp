#pragma once

// Arbitrary-precision scalars used throughout the spectral and integrality
// engines. Real is a variable-precision MPFR float; every value created while
// a PrecisionScope is alive carries that scope's precision.

#include <boost/multiprecision/mpfr.hpp>

#include <compare>
#include <cstdint>
#include <random>
#include <string>

namespace fusionring {

using Real = boost::multiprecision::mpfr_float;

inline constexpr unsigned kDefaultPrecisionBits = 256;
inline constexpr unsigned kMinPrecisionBits = 64;

/// Sets the working precision (in bits) for the lifetime of the object and
/// restores the previous setting on destruction.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned bits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_digits10_;
};

/// Working precision in bits as currently configured.
unsigned current_precision_bits();

/// 2^exponent at working precision.
Real pow2(long exponent);

/// Default acceptance tolerance 2^{-bits/2}.
Real default_tolerance(unsigned bits);

struct Complex {
  Real re;
  Real im;

  Complex() : re(0), im(0) {}
  Complex(Real r) : re(std::move(r)), im(0) {}  // NOLINT: implicit by design of arithmetic
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  Complex(long r) : re(r), im(0) {}  // NOLINT

  Complex& operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Complex& operator*=(const Complex& o) {
    Real r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  Complex& operator*=(const Real& s) {
    re *= s;
    im *= s;
    return *this;
  }
  Complex& operator/=(const Real& s) {
    re /= s;
    im /= s;
    return *this;
  }
};

inline Complex operator+(Complex a, const Complex& b) { return a += b; }
inline Complex operator-(Complex a, const Complex& b) { return a -= b; }
inline Complex operator*(Complex a, const Complex& b) { return a *= b; }
inline Complex operator*(Complex a, const Real& s) { return a *= s; }
inline Complex operator*(const Real& s, Complex a) { return a *= s; }
inline Complex operator/(Complex a, const Real& s) { return a /= s; }
inline Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
Complex operator/(const Complex& a, const Complex& b);

inline Complex conj(const Complex& z) { return {z.re, -z.im}; }
inline Real norm2(const Complex& z) { return z.re * z.re + z.im * z.im; }
inline Real abs(const Complex& z) { return boost::multiprecision::sqrt(norm2(z)); }

/// Integer power by repeated squaring (exponent may be negative).
Complex ipow(const Complex& z, long exponent);
Real ipow(const Real& x, long exponent);

/// A nonnegative rational exponent such as 0, 1/2 or 1.
struct Rational {
  long num = 0;
  long den = 1;

  /// Parses "p", "p/q" or a terminating decimal such as "0.5".
  static Rational parse(const std::string& text);
  std::string str() const;
  Real value() const;
  bool is_integer() const { return den == 1; }
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num * b.den == b.num * a.den;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return a.num * b.den <=> b.num * a.den;
  }
};

/// x^s for x > 0; exact repeated squaring when s is an integer.
Real rpow(const Real& x, const Rational& s);

/// Scientific-notation decimal string with the given number of significant
/// digits. Deterministic for a fixed precision.
std::string to_decimal(const Real& x, int digits);
std::string to_decimal(const Complex& z, int digits);

/// Number of significant digits that is meaningful at the given precision.
int decimal_digits_for(unsigned bits);

/// Uniform real in [-1, 1) built from raw 64-bit draws, so sequences are
/// identical across standard library implementations.
Real uniform_signed(std::mt19937_64& rng);

}  // namespace fusionring
