#include <string>

#include "braidloc/error.hpp"
#include "braidloc/fusion.hpp"

namespace braidloc::fusion {

namespace {

IntMatrix zeros(int n) { return IntMatrix(n, std::vector<long>(n, 0)); }

std::string sl2_label(int k, int weight) {
  if (weight == 0) return "1";
  if (weight == 1) return "X";
  if (k == 2 && weight == 2) return "Z";
  if (k == 3) return weight == 2 ? "Y" : "Z";
  if (k == 4) return weight == 2 ? "Y" : weight == 3 ? "X'" : "Z";
  return "V" + std::to_string(weight);
}

// Truncated Clebsch-Gordan rule of su(2) at level k.
FusionRing sl2_level(int k) {
  if (k < 1) fail(ErrorCode::InvalidArgument, "sl2_level requires k >= 1");
  FusionRing ring;
  ring.name = "sl2_level(" + std::to_string(k) + ")";
  for (int a = 0; a <= k; ++a) ring.labels.push_back(sl2_label(k, a));
  ring.unit = 0;
  for (int a = 0; a <= k; ++a) {
    IntMatrix m = zeros(k + 1);
    for (int b = 0; b <= k; ++b)
      for (int c = std::abs(a - b); c <= std::min(a + b, 2 * k - a - b); c += 2) m[c][b] = 1;
    ring.fusion.emplace_back(std::move(m));
  }
  return ring;
}

// Ring with the given labels and full multiplication table mult[x][y] -> list of z.
FusionRing from_table(std::string name, std::vector<std::string> labels,
                      const std::vector<std::vector<std::vector<int>>>& table) {
  FusionRing ring;
  ring.name = std::move(name);
  ring.labels = std::move(labels);
  ring.unit = 0;
  const int n = ring.rank();
  for (int x = 0; x < n; ++x) {
    IntMatrix m = zeros(n);
    for (int y = 0; y < n; ++y)
      for (int z : table[x][y]) ++m[z][y];
    ring.fusion.emplace_back(std::move(m));
  }
  return ring;
}

FusionRing fibonacci() {
  return from_table("fibonacci", {"1", "Y"}, {{{0}, {1}}, {{1}, {0, 1}}});
}

FusionRing ising_like(std::string name, std::vector<std::string> labels) {
  // 1, sigma (dim sqrt 2), psi
  return from_table(std::move(name), std::move(labels),
                    {{{0}, {1}, {2}}, {{1}, {0, 2}, {1}}, {{2}, {1}, {0}}});
}

FusionRing so_level1_even(int N) {
  if (N < 4 || N % 2 != 0) fail(ErrorCode::InvalidArgument, "so_level1_even requires even N >= 4");
  const int r = N / 2;
  // labels: 0, lambda_1, lambda_{r-1}, lambda_r as group elements
  std::vector<std::vector<std::vector<int>>> table(4, std::vector<std::vector<int>>(4));
  if (r % 2 == 1) {
    // Z/4 generated by lambda_r: lambda_r^2 = lambda_1, lambda_r^3 = lambda_{r-1}
    const int elem[4] = {0, 2, 3, 1};
    int label_of[4];
    for (int l = 0; l < 4; ++l) label_of[elem[l]] = l;
    for (int x = 0; x < 4; ++x)
      for (int y = 0; y < 4; ++y) table[x][y] = {label_of[(elem[x] + elem[y]) % 4]};
  } else {
    // Z/2 x Z/2: lambda_1 = (1,1), lambda_{r-1} = (1,0), lambda_r = (0,1)
    const int elem[4] = {0, 3, 2, 1};
    int label_of[4];
    for (int l = 0; l < 4; ++l) label_of[elem[l]] = l;
    for (int x = 0; x < 4; ++x)
      for (int y = 0; y < 4; ++y) table[x][y] = {label_of[elem[x] ^ elem[y]]};
  }
  return from_table("so_level1_even(" + std::to_string(N) + ")", {"1", "X_1", "X_eps'", "X_eps"}, table);
}

// Only the spin object's fusion matrix is determined by the printed rules.
FusionRing so_level2_odd(int N) {
  if (N < 3 || N % 2 == 0) fail(ErrorCode::InvalidArgument, "so_level2_odd requires odd N >= 3");
  const int r = (N - 1) / 2;
  FusionRing ring;
  ring.name = "so_level2_odd(" + std::to_string(N) + ")";
  ring.labels = {"1", "2lambda1"};
  for (int i = 1; i <= r; ++i) ring.labels.push_back("gamma" + std::to_string(i));
  ring.labels.push_back("eps");
  ring.labels.push_back("eps'");
  const int n = ring.rank(), unit = 0, two = 1, eps = n - 2, epsp = n - 1;
  ring.unit = unit;
  IntMatrix m = zeros(n);
  m[eps][unit] = 1;                                   // eps (x) 1 = eps
  m[unit][eps] = 1;                                   // eps (x) eps = 1 + sum gamma
  for (int i = 0; i < r; ++i) m[2 + i][eps] = 1;
  for (int i = 0; i < r; ++i) m[eps][2 + i] = m[epsp][2 + i] = 1;  // eps (x) gamma = eps + eps'
  m[two][epsp] = 1;                                   // eps (x) eps' = 2lambda1 + sum gamma
  for (int i = 0; i < r; ++i) m[2 + i][epsp] = 1;
  m[epsp][two] = 1;                                   // eps (x) 2lambda1 = eps'
  ring.fusion.assign(n, std::nullopt);
  ring.fusion[unit] = zeros(n);
  for (int i = 0; i < n; ++i) (*ring.fusion[unit])[i][i] = 1;
  ring.fusion[eps] = std::move(m);
  return ring;
}

}  // namespace

std::vector<std::string> catalog_names() {
  return {"sl2_level", "fibonacci", "ising", "so_level1_odd", "so_level1_even", "so_level2_odd", "so_level2_even"};
}

FusionRing catalog(std::string_view name, int param) {
  FusionRing ring;
  if (name == "sl2_level") {
    ring = sl2_level(param);
  } else if (name == "fibonacci") {
    ring = fibonacci();
  } else if (name == "ising") {
    ring = ising_like("ising", {"1", "X", "Z"});
  } else if (name == "so_level1_odd") {
    if (param < 3 || param % 2 == 0) fail(ErrorCode::InvalidArgument, "so_level1_odd requires odd N >= 3");
    ring = ising_like("so_level1_odd(" + std::to_string(param) + ")", {"1", "X_eps", "X_1"});
  } else if (name == "so_level1_even") {
    ring = so_level1_even(param);
  } else if (name == "so_level2_odd") {
    ring = so_level2_odd(param);
  } else if (name == "so_level2_even") {
    fail(ErrorCode::Unsupported, "so_level2_even: fusion rules are not available");
  } else {
    fail(ErrorCode::InvalidArgument, "unknown catalog ring '" + std::string(name) + "'");
  }
  ring.validate();
  return ring;
}

}  // namespace braidloc::fusion
