#include <complex>
#include <vector>

#include "braidloc/error.hpp"
#include "braidloc/matrix.hpp"
#include "doctest.h"

using namespace braidloc;

namespace {

SqMatrix exact(int dim, const std::vector<const char*>& literals) {
  std::vector<Scalar> entries;
  for (const char* s : literals) entries.emplace_back(CycNum::parse(s));
  return SqMatrix::from_entries(dim, entries, Backend::Exact);
}

// Naive Kronecker product written entry by entry.
SqMatrix naive_kron(const SqMatrix& a, const SqMatrix& b) {
  const int n = a.dim(), m = b.dim();
  std::vector<Scalar> e(static_cast<std::size_t>(n * m) * (n * m));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l) e[(i * m + k) * (n * m) + (j * m + l)] = a.entry(i, j) * b.entry(k, l);
  return SqMatrix::from_entries(n * m, e, a.backend());
}

}  // namespace

TEST_CASE("identity and products") {
  const SqMatrix a = exact(2, {"1", "z3^1", "1/2", "-2"});
  const SqMatrix id = SqMatrix::identity(2, Backend::Exact);
  CHECK((id * a).equals(a));
  CHECK((a * id).equals(a));
  const SqMatrix sq = a * a;
  // [[1 + z3/2, z3 - 2 z3], [1/2 - 1, z3/2 + 4]]
  CHECK(sq.entry(0, 0).exact() == CycNum::parse("1+1/2*z3^1"));
  CHECK(sq.entry(0, 1).exact() == CycNum::parse("-z3^1"));
  CHECK(sq.entry(1, 0).exact() == CycNum::parse("-1/2"));
  CHECK(sq.entry(1, 1).exact() == CycNum::parse("1/2*z3^1+4"));
  CHECK(a.trace().exact() == CycNum(-1));
}

TEST_CASE("mixed conductors are embedded") {
  const SqMatrix a = exact(2, {"z4^1", "0", "0", "1"});
  const SqMatrix b = exact(2, {"z3^1", "0", "0", "z3^2"});
  const SqMatrix c = a * b;
  CHECK(c.entry(0, 0).exact() == CycNum::zeta(4) * CycNum::zeta(3));
  CHECK(c.entry(0, 0).exact().conductor() == 12);
}

TEST_CASE("large numerators take the multiprecision path") {
  // 2^70 does not fit the 128-bit fast path after a product of sums
  const SqMatrix a = exact(2, {"1180591620717411303424", "1", "1", "1180591620717411303424*z5^1"});
  const SqMatrix p = a * a;
  const CycNum big = CycNum::parse("1180591620717411303424");
  CHECK(p.entry(0, 0).exact() == big * big + CycNum(1));
  CHECK(p.entry(1, 1).exact() == CycNum(1) + big * big * CycNum::zeta(5, 2));
  CHECK(p.entry(0, 1).exact() == big + big * CycNum::zeta(5));
}

TEST_CASE("kron and amplify match a naive construction") {
  const SqMatrix r = exact(4, {"1", "0", "0", "0", "0", "0", "z8^1", "0", "0", "2", "0", "0", "0", "0", "0", "-1"});
  const SqMatrix i2 = SqMatrix::identity(2, Backend::Exact);
  CHECK(kron(r, i2).equals(naive_kron(r, i2)));
  CHECK(amplify(r, 1, 3, 2).equals(naive_kron(r, i2)));
  CHECK(amplify(r, 2, 3, 2).equals(naive_kron(i2, r)));
  CHECK(place(r, 1, 2, 4, 2).equals(naive_kron(naive_kron(i2, r), i2)));
  CHECK_THROWS_AS(amplify(r, 3, 3, 2), Error);
  CHECK_THROWS_AS(amplify(r, 1, 3, 3), Error);
}

TEST_CASE("adjoint, transpose and unitarity") {
  const SqMatrix a = exact(2, {"1", "z4^1", "2", "z8^1"});
  CHECK(a.adjoint().entry(0, 1).exact() == CycNum(2));
  CHECK(a.adjoint().entry(1, 0).exact() == -CycNum::zeta(4));
  CHECK(a.adjoint().entry(1, 1).exact() == CycNum::zeta(8, 7));
  CHECK_FALSE(is_unitary(a));
  const CycNum h = (CycNum::zeta(8) + CycNum::zeta(8, 7)).inv();  // 1/sqrt 2
  const SqMatrix hadamard = SqMatrix::from_entries(2, {Scalar(h), Scalar(h), Scalar(h), Scalar(-h)}, Backend::Exact);
  CHECK(is_unitary(hadamard));
  CHECK((hadamard * hadamard).is_identity());
}

TEST_CASE("inverse") {
  const SqMatrix a = exact(3, {"2", "1", "0", "z3^1", "1", "0", "0", "1/3", "5"});
  const SqMatrix inv = inverse(a);
  CHECK((a * inv).is_identity());
  CHECK((inv * a).is_identity());
  const SqMatrix singular = exact(2, {"1", "2", "2", "4"});
  CHECK_FALSE(is_invertible(singular));
  CHECK_THROWS_AS(inverse(singular), Error);
}

TEST_CASE("scalar detection and powers") {
  const SqMatrix s = exact(2, {"z5^2", "0", "0", "z5^2"});
  REQUIRE(s.scalar_value());
  CHECK(s.scalar_value()->exact() == CycNum::zeta(5, 2));
  const SqMatrix shift = exact(3, {"0", "0", "1", "1", "0", "0", "0", "1", "0"});
  CHECK_FALSE(shift.scalar_value());
  CHECK(shift.pow(3).is_identity());
  CHECK(shift.pow(0).is_identity());
}

TEST_CASE("annihilator and spectrum multiplicities") {
  const SqMatrix d = exact(3, {"1", "0", "0", "0", "1", "0", "0", "0", "-1"});
  CHECK(annihilator_check(d, {Scalar(1L), Scalar(-1L)}));
  CHECK_FALSE(annihilator_check(d, {Scalar(1L)}));
  CHECK(spectrum_multiplicities(d, {Scalar(1L), Scalar(-1L)}) == std::vector<long>{2, 1});
  const SqMatrix da = d.to_backend(Backend::Approx);
  CHECK(spectrum_multiplicities(da, {Scalar(std::complex<double>(1)), Scalar(std::complex<double>(-1))}) ==
        std::vector<long>{2, 1});
}

TEST_CASE("approximate backend mirrors the exact one") {
  const SqMatrix a = exact(2, {"1", "z4^1", "1/2", "z8^3"});
  const SqMatrix b = exact(2, {"z3^1", "2", "0", "-1"});
  const SqMatrix exact_product = a * b;
  const SqMatrix approx_product = a.to_backend(Backend::Approx) * b.to_backend(Backend::Approx);
  CHECK(approx_product.equals(exact_product, 1e-12));
  CHECK_THROWS_AS(a * b.to_backend(Backend::Approx), Error);
}

TEST_CASE("JSON round trip") {
  const SqMatrix a = exact(2, {"1/2*z8^1+1/2*z8^7", "0", "-3", "z12^5"});
  const SqMatrix back = matrix_from_json(matrix_to_json(a));
  CHECK(back.equals(a));
  const SqMatrix approx = matrix_from_json(matrix_to_json(a.to_backend(Backend::Approx)));
  CHECK(approx.backend() == Backend::Approx);
  CHECK(approx.equals(a.to_backend(Backend::Approx), 1e-12));
  const SqMatrix converted = matrix_from_json(matrix_to_json(a), Backend::Approx);
  CHECK(converted.backend() == Backend::Approx);
}

TEST_CASE("malformed matrix JSON") {
  auto code_of = [](const nlohmann::json& j) {
    try {
      (void)matrix_from_json(j);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Internal;
  };
  CHECK(code_of(nlohmann::json::array()) == ErrorCode::ParseError);
  CHECK(code_of({{"dim", 2}, {"entries", {{"1", "0"}}}}) == ErrorCode::ParseError);
  CHECK(code_of({{"dim", 2}, {"entries", {{"1", "0"}, {"0"}}}}) == ErrorCode::ParseError);
  CHECK(code_of({{"dim", 1}, {"entries", {{"z0^1"}}}}) == ErrorCode::ParseError);
}
