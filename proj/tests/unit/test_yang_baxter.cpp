#include "braidloc/builtins.hpp"
#include "braidloc/error.hpp"
#include "braidloc/yang_baxter.hpp"
#include "doctest.h"

using namespace braidloc;
using namespace braidloc::ybe;

namespace {

SqMatrix flip(int d) {
  std::vector<Scalar> e(static_cast<std::size_t>(d * d) * (d * d), Scalar(0L));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) e[(j * d + i) * d * d + (i * d + j)] = Scalar(1L);
  return SqMatrix::from_entries(d * d, e, Backend::Exact);
}

}  // namespace

TEST_CASE("YBE holds for the shipped unitary solutions") {
  for (const char* name : {"dye4", "inf9", "loc6", "level2"}) {
    CAPTURE(name);
    const auto spec = make_spec(builtin_matrix(name));
    CHECK(check_ybe(spec.matrix, spec.local_dim));
    CHECK(is_unitary(spec.matrix));
  }
  const auto m = make_spec(builtin_matrix("uqsl2_m"));
  CHECK(check_ybe(m.matrix, 2));
  CHECK_FALSE(is_unitary(m.matrix));
}

TEST_CASE("identity, flip and their failures") {
  CHECK(check_ybe(SqMatrix::identity(4, Backend::Exact), 2));
  CHECK(check_ybe(flip(2), 2));
  CHECK(check_ybe(flip(3), 3));
  // a generic non-solution: upper triangular perturbation of the flip
  SqMatrix bad = flip(2) + SqMatrix::from_entries(4, {0L, 1L, 0L, 0L, 0L, 0L, 0L, 0L, 0L, 0L, 0L, 0L, 0L, 0L, 0L, 0L},
                                                   Backend::Exact);
  CHECK_FALSE(check_ybe(bad, 2));
}

TEST_CASE("make_spec infers and validates the local dimension") {
  CHECK(make_spec(builtin_matrix("loc6")).local_dim == 3);
  CHECK_THROWS_AS(make_spec(SqMatrix::identity(5, Backend::Exact)), Error);
  CHECK_THROWS_AS(make_spec(SqMatrix::identity(4, Backend::Exact), 3), Error);
  try {
    make_spec(SqMatrix::zero(4, Backend::Exact));
    FAIL("zero matrix accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotInvertible);
  }
}

TEST_CASE("generalized YBE") {
  // k = 2, m = 1 is the ordinary YBE
  const auto g = check_gybe(builtin_matrix("dye4"), 2, 2, 1);
  CHECK(g.gybe);
  REQUIRE(g.far_commutation);
  CHECK(*g.far_commutation);
  // the flip on two slots of dimension d is a solution of the (2, 1) relation; R = flip (x) flip on
  // four slots is a k = 4, m = 2 solution (transpositions of slot pairs)
  const SqMatrix f = flip(2);
  CHECK(check_gybe(f, 2, 2, 1).gybe);
  const SqMatrix pair_swap = place(f, 1, 2, 4, 2) * place(f, 0, 2, 4, 2) * place(f, 2, 2, 4, 2) * place(f, 1, 2, 4, 2);
  const auto g2 = check_gybe(pair_swap, 2, 4, 2);
  CHECK(g2.gybe);
  REQUIRE(g2.far_commutation);
  CHECK(*g2.far_commutation);
  // far commutation is only reported when the relation itself holds
  const SqMatrix bad = f + SqMatrix::identity(4, Backend::Exact);
  const auto g3 = check_gybe(bad, 2, 2, 1);
  CHECK_FALSE(g3.gybe);
  CHECK_FALSE(g3.far_commutation.has_value());
  CHECK_THROWS_AS(check_gybe(f, 2, 1, 1), Error);
}

TEST_CASE("projective order") {
  // eigenvalues -1 and e^{-pi i/3}; their ratio e^{4 pi i/3} has order 3
  const auto loc6 = projective_order(builtin_matrix("loc6"), 12);
  CHECK(loc6.status == OrderResult::Status::Finite);
  CHECK(loc6.order == 3);
  // flip: order 2, identity: order 1
  CHECK(projective_order(flip(2), 10).order == 2);
  CHECK(projective_order(SqMatrix::identity(4, Backend::Exact), 10).order == 1);
  // the order found is minimal
  const auto dye = projective_order(builtin_matrix("dye4"), 16);
  CHECK(dye.status == OrderResult::Status::Finite);
  CHECK(builtin_matrix("dye4").pow(dye.order).scalar_value().has_value());
  for (long k = 1; k < dye.order; ++k) CHECK_FALSE(builtin_matrix("dye4").pow(k).scalar_value().has_value());
  CHECK(projective_order(builtin_matrix("inf9"), 500).status == OrderResult::Status::ExceedsBound);
  const auto approx = projective_order(builtin_matrix("loc6").to_backend(Backend::Approx), 12);
  CHECK(approx.order == 3);
}
