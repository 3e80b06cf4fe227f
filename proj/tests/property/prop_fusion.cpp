#include <cmath>

#include "braidloc/fusion.hpp"
#include "braidloc/temperley_lieb.hpp"
#include "doctest.h"
#include "generators.hpp"

using namespace proptest;
using namespace braidloc::fusion;

namespace {

std::vector<FusionRing> full_rings() {
  std::vector<FusionRing> rings;
  for (int k = 1; k <= 10; ++k) rings.push_back(catalog("sl2_level", k));
  rings.push_back(catalog("fibonacci"));
  rings.push_back(catalog("ising"));
  for (int N : {3, 5, 7}) rings.push_back(catalog("so_level1_odd", N));
  for (int N : {4, 6, 8, 10}) rings.push_back(catalog("so_level1_even", N));
  return rings;
}

IntMatrix mul(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size();
  IntMatrix c(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

IntMatrix transpose(const IntMatrix& a) {
  IntMatrix t(a.size(), std::vector<long>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) t[j][i] = a[i][j];
  return t;
}

FusionRing relabel(const FusionRing& ring, const std::vector<int>& perm) {
  // label x moves to position perm[x]
  FusionRing out;
  out.name = ring.name;
  const int n = ring.rank();
  out.labels.resize(n);
  out.fusion.assign(n, std::nullopt);
  for (int x = 0; x < n; ++x) out.labels[perm[x]] = ring.labels[x];
  out.unit = perm[ring.unit];
  for (int x = 0; x < n; ++x) {
    if (!ring.has_matrix(x)) continue;
    IntMatrix m(n, std::vector<long>(n, 0));
    const auto& src = ring.matrix(x);
    for (int z = 0; z < n; ++z)
      for (int y = 0; y < n; ++y) m[perm[z]][perm[y]] = src[z][y];
    out.fusion[perm[x]] = m;
  }
  return out;
}

}  // namespace

TEST_CASE("fusion: catalog rings are commutative with normal fusion matrices and FP eigenvectors") {
  for (const auto& ring : full_rings()) {
    CAPTURE(ring.name);
    const int n = ring.rank();
    CHECK(ring.matrix(ring.unit) == mul(ring.matrix(ring.unit), ring.matrix(ring.unit)));
    IntMatrix sum(n, std::vector<long>(n, 0));
    for (int x = 0; x < n; ++x) {
      const auto& nx = ring.matrix(x);
      CHECK(mul(nx, transpose(nx)) == mul(transpose(nx), nx));
      for (int y = 0; y < n; ++y) {
        CHECK(mul(nx, ring.matrix(y)) == mul(ring.matrix(y), nx));
        CHECK(nx[y][ring.unit] == (x == y ? 1 : 0));  // x (x) 1 = x
      }
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) sum[i][j] += nx[i][j];
    }
    // FP dimensions: PF vector of the sum of all fusion matrices, unit normalized
    auto v = perron_frobenius(sum).vector;
    const double unit = v[ring.unit];
    for (auto& e : v) e /= unit;
    for (int x = 0; x < n; ++x) {
      const auto& nx = ring.matrix(x);
      for (int i = 0; i < n; ++i) {
        double s = 0;
        for (int j = 0; j < n; ++j) s += static_cast<double>(nx[i][j]) * v[j];
        CHECK(s == doctest::Approx(v[x] * v[i]).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("fusion: normalized block powers converge to the FP direction") {
  std::vector<std::pair<FusionRing, int>> cases;
  for (int k = 1; k <= 8; ++k) cases.emplace_back(catalog("sl2_level", k), 1);
  cases.emplace_back(catalog("fibonacci"), 1);
  cases.emplace_back(catalog("ising"), 1);
  for (int N : {3, 5, 7}) {
    auto r = catalog("so_level2_odd", N);
    const int eps = r.index_of("eps");
    cases.emplace_back(std::move(r), eps);
  }
  for (int c = 0; c < kCases; ++c) {
    CAPTURE(c);
    Gen g(501, c);
    const auto& [ring, x] = cases[g.integer(0, static_cast<int>(cases.size()) - 1)];
    CAPTURE(ring.name);
    const auto data = period_and_blocks(ring, x);
    const auto& block = data.blocks[g.integer(0, static_cast<int>(data.blocks.size()) - 1)];
    const auto pf = perron_frobenius(block);
    const std::size_t n = block.size();
    std::vector<double> v(n);
    for (auto& e : v) e = g.integer(1, 1000) / 100.0;
    for (int s = 0; s < 200; ++s) {
      std::vector<double> w(n, 0);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) w[i] += static_cast<double>(block[i][j]) * v[j] / pf.value;
      v = w;
    }
    double vmax = 0;
    for (double e : v) vmax = std::max(vmax, e);
    for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(v[i] / vmax - pf.vector[i]) < 1e-8);
  }
}

TEST_CASE("fusion: the localization verdict is invariant under relabeling") {
  std::vector<std::pair<FusionRing, std::string>> cases;
  for (int k = 1; k <= 10; ++k) cases.emplace_back(catalog("sl2_level", k), "X");
  cases.emplace_back(catalog("fibonacci"), "Y");
  cases.emplace_back(catalog("ising"), "X");
  cases.emplace_back(catalog("so_level1_even", 6), "X_eps");
  cases.emplace_back(catalog("so_level1_even", 8), "X_eps");
  for (int N : {3, 5}) cases.emplace_back(catalog("so_level2_odd", N), "eps");
  std::vector<LocalizationReport> base;
  for (const auto& [ring, label] : cases) base.push_back(localization_obstruction(ring, ring.index_of(label)));
  for (int c = 0; c < kCases; ++c) {
    CAPTURE(c);
    Gen g(502, c);
    const int which = g.integer(0, static_cast<int>(cases.size()) - 1);
    const auto& [ring, label] = cases[which];
    CAPTURE(ring.name);
    const FusionRing shuffled = relabel(ring, g.permutation(ring.rank()));
    shuffled.validate();
    const auto r = localization_obstruction(shuffled, shuffled.index_of(label));
    CHECK(r.verdict == base[which].verdict);
    CHECK(r.m == base[which].m);
    CHECK(r.period == base[which].period);
    CHECK(r.fpdim_sq == base[which].fpdim_sq);
  }
}

TEST_CASE("fusion: sl2 level 4 simple dimensions equal Bratteli path counts") {
  const auto ring = catalog("sl2_level", 4);
  const auto b = bratteli(ring, 1, 9);
  for (int n = 1; n <= 9; ++n) {
    CAPTURE(n);
    const auto d = braidloc::tl::simple_dims(6, n);
    CHECK(d.values == b.dims[n - 1]);
    std::vector<std::string> labels;
    for (int a : b.levels[n - 1]) labels.push_back(ring.labels[a]);
    CHECK(d.labels == labels);
  }
}
