#include "braidloc/braid_rep.hpp"
#include "braidloc/builtins.hpp"
#include "braidloc/error.hpp"
#include "doctest.h"

using namespace braidloc;
using namespace braidloc::braid;

namespace {

SqMatrix flip2() {
  return SqMatrix::from_entries(4, {1L, 0L, 0L, 0L, 0L, 0L, 1L, 0L, 0L, 1L, 0L, 0L, 0L, 0L, 0L, 1L}, Backend::Exact);
}

RepSpec rep_of(const SqMatrix& r, int n) { return rep_from_r(ybe::make_spec(r), n); }

}  // namespace

TEST_CASE("trivial R gives identity generators") {
  const RepSpec rep = rep_of(SqMatrix::identity(4, Backend::Exact), 3);
  REQUIRE(rep.generators.size() == 2);
  for (const auto& g : rep.generators) CHECK(g.is_identity());
  CHECK(rep.dim() == 8);
  CHECK(probe_image(rep, 10).order == 1);
}

TEST_CASE("the flip gives the symmetric group") {
  const RepSpec rep3 = rep_of(flip2(), 3);
  const SqMatrix s1s2 = rep3.generators[0] * rep3.generators[1];
  CHECK_FALSE(s1s2.is_identity());
  CHECK_FALSE(s1s2.pow(2).is_identity());
  CHECK(s1s2.pow(3).is_identity());
  const auto p3 = probe_image(rep3, 100);
  CHECK(p3.status == ProbeResult::Status::Finite);
  CHECK(p3.order == 6);  // |S_3|
  const auto p4 = probe_image(rep_of(flip2(), 4), 100);
  CHECK(p4.order == 24);  // |S_4|
}

TEST_CASE("word evaluation") {
  const RepSpec rep = rep_of(builtin_matrix("dye4"), 3);
  CHECK(eval(rep, BraidWord::parse("", 3)).is_identity());
  CHECK(eval(rep, BraidWord::parse("1 -1", 3)).is_identity());
  CHECK(eval(rep, BraidWord::parse("1 2 1", 3)).equals(eval(rep, BraidWord::parse("2 1 2", 3))));
  const SqMatrix w1 = eval(rep, BraidWord::parse("1 2", 3)), w2 = eval(rep, BraidWord::parse("-2 1", 3));
  CHECK(eval(rep, BraidWord::parse("1 2 -2 1", 3)).equals(w1 * w2));
}

TEST_CASE("braid word parsing") {
  CHECK(BraidWord::parse("1 2 \xE2\x88\x92" "1", 3).letters == std::vector<int>{1, 2, -1});
  CHECK(BraidWord::parse("1,2,-1", 3).letters == std::vector<int>{1, 2, -1});
  CHECK_THROWS_AS(BraidWord::parse("1 3", 3), Error);
  CHECK_THROWS_AS(BraidWord::parse("0", 3), Error);
  CHECK_THROWS_AS(BraidWord::parse("1 x", 3), Error);
}

TEST_CASE("braid relations") {
  CHECK(check_braid_relations(rep_of(builtin_matrix("loc6"), 4)));
  CHECK(check_braid_relations(rep_of(builtin_matrix("dye4"), 4)));
  // replace sigma_3 by a matrix that does not commute with sigma_1
  RepSpec rep = rep_of(flip2(), 4);
  auto gens = rep.generators;
  gens[2] = place(builtin_matrix("dye4"), 0, 2, 4, 2);
  CHECK_FALSE(check_braid_relations(rep_from_generators(4, gens)));
}

TEST_CASE("YBE is enforced unless skipped") {
  const SqMatrix bad = flip2() + SqMatrix::identity(4, Backend::Exact).scaled(Scalar(2L));
  const auto spec = ybe::make_spec(bad);
  try {
    rep_from_r(spec, 3);
    FAIL("non-solution accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::YbeFailure);
  }
  const RepSpec forced = rep_from_r(spec, 3, true);
  CHECK_FALSE(check_braid_relations(forced));
}

TEST_CASE("level-2 images are finite") {
  const RepSpec rep = rep_of(builtin_matrix("level2"), 2);
  CHECK(probe_image(rep, 1000).order == 4);
  const auto p3 = probe_image(rep_of(builtin_matrix("level2"), 3), 1000);
  CHECK(p3.status == ProbeResult::Status::Finite);
  CHECK(p3.order == 24);
}

TEST_CASE("probing is bounded and exact-only") {
  const auto p = probe_image(rep_of(builtin_matrix("uqsl2_m"), 3), 300);
  CHECK(p.status == ProbeResult::Status::ExceedsBound);
  CHECK(p.elements_explored > 300);
  const RepSpec approx = rep_of(builtin_matrix("dye4").to_backend(Backend::Approx), 3);
  CHECK_THROWS_AS(probe_image(approx, 10), Error);
}
