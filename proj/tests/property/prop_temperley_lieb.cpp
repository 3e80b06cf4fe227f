#include "braidloc/builtins.hpp"
#include "braidloc/error.hpp"
#include "braidloc/fusion.hpp"
#include "braidloc/temperley_lieb.hpp"
#include "doctest.h"
#include "generators.hpp"

using namespace proptest;

TEST_CASE("tl: multiplicities pair with dimensions to m^n at ell = 6") {
  for (int n = 1; n <= 9; ++n) {
    CAPTURE(n);
    const auto mu = tl::multiplicity_solve(6, n, 3);
    REQUIRE(mu);
    const auto d = tl::simple_dims(6, n);
    REQUIRE(mu->labels == d.labels);
    BigInt pairing = 0, power = 1;
    for (std::size_t i = 0; i < d.values.size(); ++i) pairing += mu->values[i] * d.values[i];
    for (int i = 0; i < n; ++i) power *= 3;
    CHECK(pairing == power);
  }
}

TEST_CASE("tl: path-counted dimensions satisfy d_{n+1} = G_n^T d_n") {
  for (int ell = 3; ell <= 12; ++ell) {
    const auto ring = fusion::catalog("sl2_level", ell - 2);
    const auto b = fusion::bratteli(ring, 1, 9);
    for (std::size_t n = 0; n + 1 < b.dims.size(); ++n) {
      CAPTURE(ell);
      CAPTURE(n + 1);
      const auto& g = b.inclusions[n];
      std::vector<BigInt> next(b.levels[n + 1].size(), 0);
      for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g[i].size(); ++j) next[j] += BigInt(g[i][j]) * b.dims[n][i];
      CHECK(next == b.dims[n + 1]);
    }
  }
}

TEST_CASE("tl: Jones-Wenzl projectors are idempotent and killed by lower generators") {
  for (int c = 0; c < kCases; ++c) {
    CAPTURE(c);
    Gen g(401, c);
    // The U_q sl2 R-matrix has eigenvalues q (three times) and -1; -q R^-1 swaps
    // the multiplicities, so its E is the rank-one projector with loop parameter q/(1+q)^2.
    const int m = g.integer(3, 16);
    int k = g.integer(1, m - 1);
    if (2 * k == m) k = 1;  // q = -1 has no TL image
    const CycNum q = CycNum::zeta(m, k);
    CAPTURE(m);
    CAPTURE(k);
    const auto spec = ybe::make_spec(inverse(uqsl2_matrix(q)).scaled(Scalar(-q)), 2);
    const int n = g.integer(2, 4);
    const auto tl = tl::tl_from_r(spec, n, Scalar(q));
    REQUIRE(tl::check_tl_relations(tl));
    const Scalar q_hat(CycNum::zeta(2 * m, k));
    std::vector<tl::JWProjector> seq;
    try {
      seq = tl::jones_wenzl_sequence(tl, n, q_hat);
    } catch (const Error& e) {
      REQUIRE(e.code() == ErrorCode::VanishingQuantumInteger);
      bool vanishes = false;
      for (int j = 2; j <= n; ++j) vanishes = vanishes || tl::quantum_integer(q_hat, j).is_zero();
      CHECK(vanishes);
      continue;
    }
    for (const auto& p : seq) {
      CHECK((p.matrix * p.matrix).equals(p.matrix));
      for (int i = 1; i < p.k; ++i) CHECK((tl.E[i - 1] * p.matrix).is_zero());
      const auto tr = p.matrix.trace().exact().as_integer();
      REQUIRE(tr);
      CHECK(tl::common_kernel_dim(tl, p.k) == tr->get_si());
    }
  }
}

TEST_CASE("tl: loc6 generators are annihilated by (R + I)(R - e^{-pi i/3} I)") {
  const auto spec = ybe::make_spec(builtin_matrix("loc6"));
  const std::vector<Scalar> roots = {Scalar(-1L), Scalar(CycNum::zeta(6, 5))};
  for (int n = 2; n <= 4; ++n)
    for (int i = 1; i < n; ++i) {
      CAPTURE(n);
      CAPTURE(i);
      CHECK(annihilator_check(amplify(spec.matrix, i, n, 3), roots));
    }
}
