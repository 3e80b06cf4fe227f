#include "braidloc/gaussian.hpp"
#include "doctest.h"
#include "generators.hpp"

using namespace proptest;

namespace {

// u_1^{a_1} ... u_{n-1}^{a_{n-1}} for the exponent digits of `index` in base p.
SqMatrix monomial(const gaussian::ESRep& es, long index) {
  SqMatrix m = SqMatrix::identity(es.u.front().dim(), Backend::Exact);
  for (const auto& u : es.u) {
    m = m * u.pow(index % es.p);
    index /= es.p;
  }
  return m;
}

}  // namespace

TEST_CASE("gaussian: ES relations in the regular and localized forms") {
  for (int p : {3, 5, 7}) {
    CAPTURE(p);
    const auto es = gaussian::es_rep(p, 3);
    CHECK(gaussian::check_es_relations(es.u, p, es.omega));
    CHECK(gaussian::check_es_relations(gaussian::localized_u(p, 3), p, es.omega));
    CHECK(gaussian::local_u(p).pow(p).is_identity());
  }
}

TEST_CASE("gaussian: generators normalize the monomial group") {
  const gaussian::ESRep es3 = gaussian::es_rep(3, 3), es4 = gaussian::es_rep(3, 4);
  const auto rep3 = gaussian::gaussian_rep(es3), rep4 = gaussian::gaussian_rep(es4);
  for (int c = 0; c < kCases; ++c) {
    CAPTURE(c);
    Gen g(601, c);
    const bool big = g.coin();
    const auto& es = big ? es4 : es3;
    const auto& rep = big ? rep4 : rep3;
    const int dim = es.u.front().dim();
    const int i = g.integer(0, es.n - 2);
    const SqMatrix m = monomial(es, g.integer(1, dim - 1));
    const SqMatrix conj = rep.generators[i] * m * rep.inverses[i];
    // a scalar multiple of a monomial has a single nonzero entry in column 0
    int row = -1, nonzero = 0;
    for (int r = 0; r < dim; ++r)
      if (!conj.entry(r, 0).is_zero()) {
        row = r;
        ++nonzero;
      }
    REQUIRE(nonzero == 1);
    const SqMatrix target = monomial(es, row);
    const Scalar scale = conj.entry(row, 0) / target.entry(row, 0);
    CHECK(conj.equals(target.scaled(scale)));
  }
}

TEST_CASE("gaussian: local and regular representations have proportional characters") {
  const auto regular = gaussian::gaussian_rep(gaussian::es_rep(3, 3));
  const auto local = braid::rep_from_r(gaussian::local_r(3), 3);
  for (int c = 0; c < kCases; ++c) {
    CAPTURE(c);
    Gen g(602, c);
    const auto w = g.word(3, 8);
    const Scalar tr_local = braid::eval(local, w).trace();
    const Scalar tr_regular = braid::eval(regular, w).trace();
    CHECK(tr_local.equals(tr_regular * Scalar(3L)));
  }
}
