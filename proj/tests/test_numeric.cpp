#include "support.hpp"

#include <fusionring/report.hpp>

#include <random>
#include <stdexcept>

using namespace fusionring;

TEST_CASE("precision scope sets and restores the working precision") {
  const unsigned before = current_precision_bits();
  {
    PrecisionScope outer(256);
    CHECK(current_precision_bits() >= 256);
    {
      PrecisionScope inner(512);
      CHECK(current_precision_bits() >= 512);
      const Real third = Real(1) / 3;
      CHECK(third.precision() >= 154);
    }
    CHECK(current_precision_bits() >= 256);
    CHECK(current_precision_bits() < 512);
  }
  CHECK(current_precision_bits() == before);
  CHECK_THROWS_AS(PrecisionScope(32), std::invalid_argument);
}

TEST_CASE("pow2 and default tolerance") {
  PrecisionScope scope(256);
  CHECK(pow2(0) == 1);
  CHECK(pow2(10) == 1024);
  CHECK(pow2(-2) == Real(0.25));
  CHECK(default_tolerance(256) == pow2(-128));
}

TEST_CASE("complex arithmetic") {
  PrecisionScope scope(128);
  const Complex i(Real(0), Real(1));
  const Complex z = i * i;
  CHECK(z.re == -1);
  CHECK(z.im == 0);
  const Complex q = Complex(Real(1), Real(2)) / Complex(Real(3), Real(4));
  // (1+2i)/(3+4i) = (11 + 2i)/25
  CHECK(abs(q - Complex(Real(11) / 25, Real(2) / 25)) < pow2(-120));
  CHECK(norm2(Complex(Real(3), Real(4))) == 25);
  CHECK(abs(Complex(Real(3), Real(4))) == 5);
  CHECK(conj(i).im == -1);
}

TEST_CASE("integer powers") {
  PrecisionScope scope(128);
  CHECK(ipow(Real(2), 10) == 1024);
  CHECK(ipow(Real(2), -2) == Real(0.25));
  CHECK(ipow(Real(7), 0) == 1);
  const Complex i(Real(0), Real(1));
  const Complex i4 = ipow(i, 4);
  CHECK(abs(i4 - Complex(Real(1))) < pow2(-120));
  const Complex im1 = ipow(i, -1);
  CHECK(abs(im1 - Complex(Real(0), Real(-1))) < pow2(-120));
}

TEST_CASE("rational parsing") {
  const Rational half = Rational::parse("1/2");
  CHECK(half.num == 1);
  CHECK(half.den == 2);
  CHECK(Rational::parse("0.5") == half);
  CHECK(Rational::parse("2/4") == half);
  CHECK(Rational::parse("3").is_integer());
  CHECK(Rational::parse("0").num == 0);
  CHECK(Rational::parse("4/2").str() == "2");
  CHECK(Rational::parse("1/2").str() == "1/2");
  CHECK(Rational::parse("1/3") < half);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("a"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("-1"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/"), std::invalid_argument);
}

TEST_CASE("rational powers") {
  PrecisionScope scope(256);
  const Real tol = pow2(-250);
  CHECK(abs(rpow(Real(9), Rational{1, 2}) - 3) < tol);
  CHECK(rpow(Real(5), Rational{0, 1}) == 1);
  CHECK(rpow(Real(5), Rational{2, 1}) == 25);
  CHECK(abs(rpow(Real(8), Rational{2, 3}) - 4) < pow2(-240));
}

TEST_CASE("decimal output is deterministic and prints zero plainly") {
  PrecisionScope scope(256);
  CHECK(to_decimal(Real(0), 20) == "0");
  const Real third = Real(1) / 3;
  CHECK(to_decimal(third, 10) == to_decimal(Real(1) / 3, 10));
  CHECK(to_decimal(Real(2), 5).find("2.0000") == 0);
  const std::string z = to_decimal(Complex(Real(1), Real(-2)), 5);
  CHECK(z.find(" - ") != std::string::npos);
  CHECK(z.back() == 'i');
  CHECK(decimal_digits_for(256) > 60);
}

TEST_CASE("uniform_signed is in range and reproducible") {
  PrecisionScope scope(128);
  std::mt19937_64 a(42);
  std::mt19937_64 b(42);
  for (int k = 0; k < 1000; ++k) {
    const Real x = uniform_signed(a);
    CHECK(x >= -1);
    CHECK(x < 1);
    CHECK(x == uniform_signed(b));
  }
}

TEST_CASE("settings tolerance") {
  PrecisionScope scope(256);
  Settings s;
  CHECK(s.tolerance() == pow2(-128));
  CHECK(s.tolerance_string() == "2^-128");
  s.tolerance_exp10 = -40;
  CHECK(abs(s.tolerance() - Real("1e-40")) < Real("1e-70"));
  CHECK(s.tolerance_string() == "1e-40");
}
