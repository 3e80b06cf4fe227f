#include <cmath>
#include <complex>
#include <numbers>

#include "braidloc/cyclo.hpp"
#include "braidloc/error.hpp"
#include "doctest.h"

using braidloc::CycNum;
using braidloc::Rational;

namespace {

std::complex<double> root(int m, int k) { return std::polar(1.0, 2 * std::numbers::pi * k / m); }

}  // namespace

TEST_CASE("powers of i") {
  const CycNum i = CycNum::zeta(4);
  CHECK(i * i == CycNum(-1));
  CHECK(i.pow(4) == CycNum(1));
  CHECK(i.pow(-1) == -i);
}

TEST_CASE("zeta_m^m = 1 and the sum of all m-th roots vanishes") {
  for (int m : {1, 2, 3, 5, 8, 9, 12, 15, 16, 24, 30}) {
    CAPTURE(m);
    CHECK(CycNum::zeta(m).pow(m) == CycNum(1));
    CycNum sum;
    for (int k = 0; k < m; ++k) sum += CycNum::zeta(m, k);
    if (m > 1) CHECK(sum.is_zero());
  }
}

TEST_CASE("square roots from roots of unity") {
  const CycNum sqrt2 = CycNum::zeta(8) + CycNum::zeta(8, 7);
  CHECK(sqrt2 * sqrt2 == CycNum(2));
  CHECK(sqrt2.is_rational() == false);
  const CycNum sqrt_m3 = CycNum(1) + CycNum(2) * CycNum::zeta(3);
  CHECK(sqrt_m3 * sqrt_m3 == CycNum(-3));
  CHECK((CycNum(1) + CycNum(2) * CycNum::zeta(3)).abs2() == CycNum(3));
}

TEST_CASE("conductor is minimal") {
  CHECK(CycNum::zeta(12, 4).conductor() == 3);
  CHECK(CycNum::zeta(6, 3).conductor() == 1);
  CHECK(CycNum::zeta(10, 2).conductor() == 5);
  CHECK((CycNum::zeta(24) * CycNum::zeta(24, 23)).conductor() == 1);
  // zeta_6 = -zeta_3^2 lives in Q(zeta_3)
  CHECK(CycNum::zeta(6).conductor() == 3);
}

TEST_CASE("numeric values agree with std::polar") {
  for (int m : {3, 5, 7, 8, 12, 20}) {
    for (int k = 0; k < m; ++k) {
      const auto z = CycNum::zeta(m, k).to_complex();
      CHECK(std::abs(z - root(m, k)) < 1e-12);
    }
  }
  const CycNum x = CycNum::parse("1/3*z7^2-5/2*z7^3+4");
  const auto expected = 1.0 / 3 * root(7, 2) - 2.5 * root(7, 3) + 4.0;
  CHECK(std::abs(x.to_complex() - expected) < 1e-12);
}

TEST_CASE("field operations") {
  const CycNum a = CycNum::parse("1+2*z5^1-z5^3");
  const CycNum b = CycNum::parse("3/4*z5^2");
  CHECK(a * a.inv() == CycNum(1));
  CHECK((a + b) - b == a);
  CHECK((a * b) / b == a);
  CHECK(std::abs(a.conj().to_complex() - std::conj(a.to_complex())) < 1e-12);
  CHECK(CycNum::zeta(5).conj() == CycNum::zeta(5, 4));
  CHECK(std::abs(a.abs2().to_complex() - std::norm(a.to_complex())) < 1e-12);
  CHECK_THROWS_AS(CycNum().inv(), braidloc::Error);
}

TEST_CASE("quadratic Gauss sums square to (-1)^((p-1)/2) p") {
  for (int p : {3, 5, 7, 11, 13}) {
    CycNum g;
    for (long j = 0; j < p; ++j) g += CycNum::zeta(p, j * j % p);
    const long sign = (p % 4 == 1) ? 1 : -1;
    CHECK(g * g == CycNum(sign * p));
  }
}

TEST_CASE("literal round trip and accepted forms") {
  for (const char* text : {"0", "3/4", "-7", "1/2*z8^1+1/2*z8^7", "-1/3*z3^0-2/3*z3^1", "2/5*z24^1+2/5*z24^5"}) {
    const CycNum x = CycNum::parse(text);
    CHECK(CycNum::parse(x.to_literal()) == x);
  }
  CHECK(CycNum::parse("z12^-1") == CycNum::zeta(12, 11));
  CHECK(CycNum::parse("z16^1") == CycNum::zeta(16));
  CHECK(CycNum::parse("\xE2\x88\x92" "1") == CycNum(-1));  // U+2212 minus sign
  CHECK(CycNum::parse(" 1 + z4^1 ") == CycNum(1) + CycNum::zeta(4));
  CHECK(CycNum(Rational(3, 4)).to_literal() == "3/4");
  CHECK(CycNum().to_literal() == "0");
}

TEST_CASE("malformed literals are parse errors") {
  for (const char* text : {"", "abc", "z0^1", "1/0", "z8^", "2**z3^1", "z3^1+"}) {
    CAPTURE(text);
    try {
      (void)CycNum::parse(text);
      FAIL("accepted malformed literal");
    } catch (const braidloc::Error& e) {
      CHECK(e.code() == braidloc::ErrorCode::ParseError);
    }
  }
}

TEST_CASE("cyclotomic polynomials and totients") {
  CHECK(braidloc::euler_phi(1) == 1);
  CHECK(braidloc::euler_phi(12) == 4);
  CHECK(braidloc::euler_phi(100) == 40);
  const auto phi12 = braidloc::cyclotomic_polynomial(12);  // x^4 - x^2 + 1
  REQUIRE(phi12.size() == 5);
  CHECK(phi12[0] == 1);
  CHECK(phi12[1] == 0);
  CHECK(phi12[2] == -1);
  CHECK(phi12[3] == 0);
  CHECK(phi12[4] == 1);
}

TEST_CASE("approximate scalars") {
  using braidloc::Backend;
  using braidloc::Scalar;
  const Scalar z = Scalar::parse("1.5-2i", Backend::Approx);
  CHECK(z.to_complex() == std::complex<double>(1.5, -2));
  const Scalar w = Scalar::parse("z4^1", Backend::Approx);
  CHECK(w.backend() == Backend::Approx);
  CHECK(std::abs(w.to_complex() - std::complex<double>(0, 1)) < 1e-15);
  CHECK((Scalar(CycNum(2)) * w).equals(Scalar(std::complex<double>(0, 2))));
}
