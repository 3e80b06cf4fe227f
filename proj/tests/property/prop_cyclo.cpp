#include <complex>

#include "doctest.h"
#include "generators.hpp"

using namespace proptest;

namespace {

bool close(std::complex<double> a, std::complex<double> b, double tol = 1e-10) {
  return std::abs(a - b) <= tol * std::max(1.0, std::abs(b));
}

}  // namespace

TEST_CASE("cyclo: field axioms in Q(zeta_24)") {
  for (int c = 0; c < kCases; ++c) {
    CAPTURE(c);
    Gen g(101, c);
    const CycNum x = g.cyc(24, 4), y = g.cyc(24, 4), z = g.cyc(24, 4);
    CHECK((x + y) * z == x * z + y * z);
    CHECK((x * y).conj() == x.conj() * y.conj());
    CHECK((x * y).abs2() == x.abs2() * y.abs2());
    CHECK(x.abs2() == x.abs2().conj());
    if (!y.is_zero()) CHECK((x / y) * y == x);
  }
}

TEST_CASE("cyclo: numeric evaluation is a ring homomorphism") {
  for (int c = 0; c < kCases; ++c) {
    CAPTURE(c);
    Gen g(102, c);
    // one field of conductor <= 120, or two small fields meeting in their compositum
    const bool same = g.coin();
    const int m1 = same ? g.integer(1, 120) : g.integer(1, 24);
    const int m2 = same ? m1 : g.integer(1, 24);
    CAPTURE(m1);
    CAPTURE(m2);
    const CycNum x = g.cyc(m1), y = g.cyc(m2);
    CHECK(close((x + y).to_complex(), x.to_complex() + y.to_complex()));
    CHECK(close((x * y).to_complex(), x.to_complex() * y.to_complex()));
    CHECK(close(x.conj().to_complex(), std::conj(x.to_complex())));
  }
}

TEST_CASE("cyclo: rational values descend to conductor 1") {
  for (int c = 0; c < kCases; ++c) {
    CAPTURE(c);
    Gen g(103, c);
    const Rational r = g.rational();
    std::vector<Rational> coeffs(12, Rational(0));
    coeffs[0] = r;
    // add multiples of the vanishing sums z^s (1 + z^4 + z^8) and z^s (1 + z^6)
    for (int t = 0; t < 3; ++t) {
      const Rational a = g.rational();
      const int s = g.integer(0, 11);
      if (g.coin()) {
        for (int k : {0, 4, 8}) coeffs[(s + k) % 12] += a;
      } else {
        for (int k : {0, 6}) coeffs[(s + k) % 12] += a;
      }
    }
    const CycNum x = CycNum::make(12, coeffs);
    CHECK(x.conductor() == 1);
    CHECK(x == CycNum(r));
  }
}

TEST_CASE("cyclo: literal round trip") {
  for (int c = 0; c < kCases; ++c) {
    CAPTURE(c);
    Gen g(104, c);
    const CycNum x = g.cyc(g.integer(1, 60), 4);
    CHECK(CycNum::parse(x.to_literal()) == x);
  }
}
