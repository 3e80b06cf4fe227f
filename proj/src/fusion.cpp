#include "braidloc/fusion.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <set>

#include "braidloc/error.hpp"

namespace braidloc::fusion {

// FusionRing ----------------------------------------------------------------------

int FusionRing::index_of(std::string_view label) const {
  for (int i = 0; i < rank(); ++i)
    if (labels[i] == label) return i;
  fail(ErrorCode::InvalidArgument, "unknown object label '" + std::string(label) + "' in ring " + name);
}

const IntMatrix& FusionRing::matrix(int x) const {
  if (x < 0 || x >= rank()) fail(ErrorCode::InvalidArgument, "object index out of range");
  if (!fusion[x]) fail(ErrorCode::Unsupported, "fusion matrix of '" + labels[x] + "' is not available in " + name);
  return *fusion[x];
}

namespace {

IntMatrix identity_int(int n) {
  IntMatrix m(n, std::vector<long>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t rows = a.size(), inner = b.size(), cols = b.empty() ? 0 : b[0].size();
  IntMatrix c(rows, std::vector<long>(cols, 0));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

IntMatrix transpose(const IntMatrix& a) {
  if (a.empty()) return {};
  IntMatrix t(a[0].size(), std::vector<long>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
  return t;
}

}  // namespace

void FusionRing::validate() const {
  const int n = rank();
  if (n < 1) fail(ErrorCode::InvalidArgument, "fusion ring has no objects");
  if (static_cast<int>(fusion.size()) != n) fail(ErrorCode::InvalidArgument, "fusion matrix list has wrong length");
  if (unit < 0 || unit >= n) fail(ErrorCode::InvalidArgument, "unit index out of range");
  std::set<std::string> unique(labels.begin(), labels.end());
  if (static_cast<int>(unique.size()) != n) fail(ErrorCode::InvalidArgument, "duplicate object labels");
  for (int x = 0; x < n; ++x) {
    if (!fusion[x]) continue;
    const IntMatrix& m = *fusion[x];
    if (static_cast<int>(m.size()) != n)
      fail(ErrorCode::InvalidArgument, "fusion matrix of '" + labels[x] + "' has wrong shape");
    for (const auto& row : m) {
      if (static_cast<int>(row.size()) != n)
        fail(ErrorCode::InvalidArgument, "fusion matrix of '" + labels[x] + "' has wrong shape");
      for (long v : row)
        if (v < 0) fail(ErrorCode::InvalidArgument, "negative fusion coefficient for '" + labels[x] + "'");
    }
    // N_x e_unit = e_x
    for (int z = 0; z < n; ++z)
      if (m[z][unit] != (z == x ? 1 : 0))
        fail(ErrorCode::InvalidArgument, "'" + labels[x] + "' (x) unit is not '" + labels[x] + "'");
    const IntMatrix t = transpose(m);
    if (multiply(m, t) != multiply(t, m))
      fail(ErrorCode::InvalidArgument, "fusion matrix of '" + labels[x] + "' is not normal");
  }
  if (fusion[unit] && *fusion[unit] != identity_int(n))
    fail(ErrorCode::InvalidArgument, "fusion matrix of the unit is not the identity");
}

FusionRing FusionRing::from_json(const nlohmann::json& j) {
  try {
    FusionRing ring;
    ring.name = j.value("name", std::string("custom"));
    ring.labels = j.at("labels").get<std::vector<std::string>>();
    const auto& unit = j.at("unit");
    ring.fusion.assign(ring.labels.size(), std::nullopt);
    ring.unit = unit.is_string() ? ring.index_of(unit.get<std::string>()) : unit.get<int>();
    for (const auto& [label, m] : j.at("N").items()) ring.fusion[ring.index_of(label)] = m.get<IntMatrix>();
    if (!ring.fusion[ring.unit]) ring.fusion[ring.unit] = identity_int(ring.rank());
    ring.validate();
    return ring;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ParseError, std::string("malformed fusion ring JSON: ") + e.what());
  }
}

nlohmann::json FusionRing::to_json() const {
  nlohmann::json n = nlohmann::json::object();
  for (int x = 0; x < rank(); ++x)
    if (fusion[x]) n[labels[x]] = *fusion[x];
  return {{"name", name}, {"labels", labels}, {"unit", labels[unit]}, {"N", n}};
}

// Perron-Frobenius ----------------------------------------------------------------

PerronFrobenius perron_frobenius(const IntMatrix& a) {
  const std::size_t n = a.size();
  if (n == 0) fail(ErrorCode::InvalidArgument, "empty matrix");
  std::vector<double> v(n, 1.0), w(n);
  PerronFrobenius out;
  for (int iter = 0; iter < 200000; ++iter) {
    // w = (I + A) v
    for (std::size_t i = 0; i < n; ++i) {
      double s = v[i];
      for (std::size_t j = 0; j < n; ++j) s += static_cast<double>(a[i][j]) * v[j];
      w[i] = s;
    }
    double lo = INFINITY, hi = 0, top = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const double r = w[i] / v[i];
      lo = std::min(lo, r);
      hi = std::max(hi, r);
      top = std::max(top, w[i]);
    }
    for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / top;
    out.lower = lo - 1;
    out.upper = hi - 1;
    if (hi - lo <= 1e-14 * hi) break;
  }
  out.value = 0.5 * (out.lower + out.upper);
  out.vector = v;
  return out;
}

namespace {

using Poly = std::vector<Rational>;  // constant term first

void trim(Poly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

Rational eval(const Poly& p, const Rational& x) {
  Rational acc = 0;
  for (std::size_t k = p.size(); k-- > 0;) acc = acc * x + p[k];
  return acc;
}

Poly derivative(const Poly& p) {
  Poly d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * static_cast<long>(k));
  trim(d);
  return d;
}

Poly remainder(Poly a, const Poly& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    const Rational f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= f * b[k];
    trim(a);
  }
  return a;
}

int sign_changes(const std::vector<Poly>& seq, const Rational& x) {
  int changes = 0, last = 0;
  for (const Poly& p : seq) {
    const int s = sgn(eval(p, x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

// Number of distinct real roots of p in (a, b]; p must not vanish at a.
int count_real_roots(const Poly& p, const Rational& a, const Rational& b) {
  std::vector<Poly> seq{p, derivative(p)};
  trim(seq[0]);
  if (seq[0].size() <= 1) return 0;
  while (true) {
    Poly r = remainder(seq[seq.size() - 2], seq.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    seq.push_back(std::move(r));
  }
  return sign_changes(seq, a) - sign_changes(seq, b);
}

}  // namespace

std::vector<BigInt> characteristic_polynomial(const IntMatrix& a) {
  // Faddeev-LeVerrier over the integers (all divisions are exact).
  const std::size_t n = a.size();
  std::vector<BigInt> c(n + 1);
  c[n] = 1;
  std::vector<std::vector<BigInt>> A(n, std::vector<BigInt>(n)), M(n, std::vector<BigInt>(n)),
      AM(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) A[i][j] = a[i][j];
    M[i][i] = 1;
  }
  for (std::size_t k = 1; k <= n; ++k) {
    BigInt tr = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        BigInt s = 0;
        for (std::size_t l = 0; l < n; ++l)
          if (sgn(A[i][l]) != 0) s += A[i][l] * M[l][j];
        AM[i][j] = s;
        if (i == j) tr += s;
      }
    c[n - k] = -tr / static_cast<long>(k);
    M = AM;
    for (std::size_t i = 0; i < n; ++i) M[i][i] += c[n - k];
  }
  return c;
}

std::optional<BigInt> certify_integer_radius(const IntMatrix& a, double lower, double upper) {
  const double pad = 1e-9 * std::max(1.0, std::abs(upper));
  Rational lo(lower - pad), hi(upper + pad);
  if (lo < 0) lo = 0;
  BigInt first, last;
  mpz_cdiv_q(first.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  mpz_fdiv_q(last.get_mpz_t(), hi.get_num_mpz_t(), hi.get_den_mpz_t());
  if (first > last) return std::nullopt;
  if (first != last)
    fail(ErrorCode::Uncertified, "Perron-Frobenius bracket contains several integers");
  const BigInt c = first;
  std::vector<BigInt> chi = characteristic_polynomial(a);
  auto eval_int = [](const std::vector<BigInt>& p, const BigInt& x) {
    BigInt acc = 0;
    for (std::size_t k = p.size(); k-- > 0;) acc = acc * x + p[k];
    return acc;
  };
  if (eval_int(chi, c) != 0) return std::nullopt;
  // Remove every factor (x - c); the rest must have no real root in the bracket.
  std::vector<BigInt> h = chi;
  while (h.size() > 1 && eval_int(h, c) == 0) {
    std::vector<BigInt> q(h.size() - 1);
    BigInt carry = 0;
    for (std::size_t k = h.size() - 1; k-- > 0;) {
      carry = h[k + 1] + carry * c;
      q[k] = carry;
    }
    h = std::move(q);
  }
  Poly hq(h.begin(), h.end());
  if (sgn(eval(hq, lo)) == 0 || count_real_roots(hq, lo, hi) != 0)
    fail(ErrorCode::Uncertified, "cannot separate the Perron-Frobenius eigenvalue from nearby roots");
  return c;
}

// Graph helpers -------------------------------------------------------------------

std::vector<int> generated_labels(const FusionRing& ring, int x) {
  const IntMatrix& m = ring.matrix(x);
  std::vector<char> seen(ring.rank(), 0);
  std::deque<int> queue{ring.unit};
  seen[ring.unit] = 1;
  while (!queue.empty()) {
    int y = queue.front();
    queue.pop_front();
    for (int z = 0; z < ring.rank(); ++z)
      if (m[z][y] > 0 && !seen[z]) {
        seen[z] = 1;
        queue.push_back(z);
      }
  }
  std::vector<int> out;
  for (int z = 0; z < ring.rank(); ++z)
    if (seen[z]) out.push_back(z);
  return out;
}

namespace {

// N_x restricted to the labels generated by x; throws Reducible when the
// fusion graph on them is not strongly connected.
IntMatrix restricted_matrix(const FusionRing& ring, int x, std::vector<int>& labels) {
  labels = generated_labels(ring, x);
  const IntMatrix& m = ring.matrix(x);
  const std::size_t n = labels.size();
  IntMatrix a(n, std::vector<long>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[labels[i]][labels[j]];
  // every label must lead back to the unit
  const auto unit_pos = static_cast<std::size_t>(
      std::find(labels.begin(), labels.end(), ring.unit) - labels.begin());
  std::vector<char> back(n, 0);
  std::deque<std::size_t> queue{unit_pos};
  back[unit_pos] = 1;
  while (!queue.empty()) {
    std::size_t z = queue.front();
    queue.pop_front();
    for (std::size_t y = 0; y < n; ++y)
      if (a[z][y] > 0 && !back[y]) {
        back[y] = 1;
        queue.push_back(y);
      }
  }
  if (std::find(back.begin(), back.end(), 0) != back.end())
    fail(ErrorCode::Reducible, "'" + ring.labels[x] + "' does not generate a strongly connected fusion graph");
  return a;
}

IntMatrix matrix_power(const IntMatrix& a, int p) {
  IntMatrix r = identity_int(static_cast<int>(a.size()));
  for (int k = 0; k < p; ++k) r = multiply(r, a);
  return r;
}

}  // namespace

FpdimResult fpdim(const FusionRing& ring, int x) {
  std::vector<int> labels;
  const IntMatrix a = restricted_matrix(ring, x, labels);
  const PerronFrobenius pf = perron_frobenius(a);
  FpdimResult out;
  out.approx = pf.value;
  out.exact_sq = certify_integer_radius(multiply(a, a), pf.lower * pf.lower, pf.upper * pf.upper);
  return out;
}

PeriodData period_and_blocks(const FusionRing& ring, int x) {
  std::vector<int> labels;
  const IntMatrix a = restricted_matrix(ring, x, labels);
  const std::size_t n = labels.size();
  const auto unit_pos = static_cast<std::size_t>(
      std::find(labels.begin(), labels.end(), ring.unit) - labels.begin());
  std::vector<long> level(n, -1);
  std::deque<std::size_t> queue{unit_pos};
  level[unit_pos] = 0;
  while (!queue.empty()) {
    std::size_t y = queue.front();
    queue.pop_front();
    for (std::size_t z = 0; z < n; ++z)
      if (a[z][y] > 0 && level[z] < 0) {
        level[z] = level[y] + 1;
        queue.push_back(z);
      }
  }
  long g = 0;
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t z = 0; z < n; ++z)
      if (a[z][y] > 0) g = std::gcd(g, std::abs(level[y] + 1 - level[z]));
  PeriodData out;
  out.period = static_cast<int>(g == 0 ? 1 : g);
  out.classes.assign(out.period, {});
  std::vector<std::vector<std::size_t>> positions(out.period);
  for (std::size_t v = 0; v < n; ++v) {
    out.classes[level[v] % out.period].push_back(labels[v]);
    positions[level[v] % out.period].push_back(v);
  }
  const IntMatrix ap = matrix_power(a, out.period);
  for (const auto& pos : positions) {
    IntMatrix block(pos.size(), std::vector<long>(pos.size()));
    for (std::size_t i = 0; i < pos.size(); ++i)
      for (std::size_t j = 0; j < pos.size(); ++j) block[i][j] = ap[pos[i]][pos[j]];
    out.blocks.push_back(std::move(block));
  }
  return out;
}

BratteliData bratteli(const FusionRing& ring, int x, int depth) {
  if (depth < 1) fail(ErrorCode::InvalidArgument, "Bratteli depth must be >= 1");
  const IntMatrix& m = ring.matrix(x);
  const int r = ring.rank();
  BratteliData out;
  out.base = x;
  out.levels.push_back({x});
  out.dims.push_back({BigInt(1)});
  // full multiplicity vector of x^{(x) n}, kept as an independent check on d_n
  std::vector<BigInt> mult(r);
  mult[x] = 1;
  for (int n = 1; n < depth; ++n) {
    const auto& cur = out.levels.back();
    std::vector<int> next;
    for (int z = 0; z < r; ++z)
      for (int y : cur)
        if (m[z][y] > 0) {
          next.push_back(z);
          break;
        }
    IntMatrix g(cur.size(), std::vector<long>(next.size()));
    for (std::size_t a = 0; a < cur.size(); ++a)
      for (std::size_t b = 0; b < next.size(); ++b) g[a][b] = m[next[b]][cur[a]];
    std::vector<BigInt> d(next.size());
    for (std::size_t b = 0; b < next.size(); ++b)
      for (std::size_t a = 0; a < cur.size(); ++a)
        if (g[a][b] != 0) d[b] += out.dims.back()[a] * g[a][b];
    std::vector<BigInt> next_mult(r);
    for (int z = 0; z < r; ++z)
      for (int y = 0; y < r; ++y)
        if (m[z][y] != 0 && sgn(mult[y]) != 0) next_mult[z] += mult[y] * m[z][y];
    for (std::size_t b = 0; b < next.size(); ++b)
      if (next_mult[next[b]] != d[b]) fail(ErrorCode::Internal, "Bratteli dimension recursion mismatch");
    mult = std::move(next_mult);
    out.inclusions.push_back(std::move(g));
    out.levels.push_back(std::move(next));
    out.dims.push_back(std::move(d));
  }

  try {
    out.period = period_and_blocks(ring, x).period;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Reducible) throw;
    out.period = 1;
  }
  const int p = out.period;
  const int levels = static_cast<int>(out.levels.size());
  auto periodic_at = [&](int n) {  // 1-based level n
    if (out.levels[n - 1] != out.levels[n - 1 + p]) return false;
    if (n - 1 + p < static_cast<int>(out.inclusions.size()) &&
        out.inclusions[n - 1] != out.inclusions[n - 1 + p])
      return false;
    return true;
  };
  out.depth = 0;
  for (int n = levels - p; n >= 1; --n) {
    if (!periodic_at(n)) break;
    out.depth = n;
  }
  return out;
}

const char* to_string(Verdict v) {
  return v == Verdict::Obstructed ? "Obstructed" : "NecessaryConditionsPass";
}

namespace {

// Basis of the rational nullspace of a (square) integer matrix.
std::vector<std::vector<Rational>> nullspace(const std::vector<std::vector<Rational>>& m0) {
  auto m = m0;
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && sgn(m[piv][c]) == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    const Rational inv = 1 / m[r][c];
    for (auto& v : m[r]) v *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(m[i][c]) == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (std::find(pivot_col.begin(), pivot_col.end(), static_cast<int>(free)) != pivot_col.end()) continue;
    std::vector<Rational> v(cols);
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -m[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

// Scales a rational vector to coprime integers with positive entries, or
// returns nullopt when its entries do not share one strict sign.
std::optional<std::vector<BigInt>> primitive_positive(std::vector<Rational> v) {
  int sign = 0;
  for (const auto& x : v) {
    const int s = sgn(x);
    if (s == 0) return std::nullopt;
    if (sign == 0) sign = s;
    if (s != sign) return std::nullopt;
  }
  BigInt den = 1, g = 0;
  for (const auto& x : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  std::vector<BigInt> out;
  for (const auto& x : v) {
    BigInt z = Rational(x * den * sign).get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
    out.push_back(z);
  }
  for (auto& z : out) z /= g;
  return out;
}

BigInt power(long base, int e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(e));
  return r;
}

}  // namespace

LocalizationReport localization_obstruction(const FusionRing& ring, int x, int depth) {
  if (depth < 1) fail(ErrorCode::InvalidArgument, "depth must be >= 1");
  LocalizationReport rep;
  const FpdimResult fd = fpdim(ring, x);
  rep.fpdim = fd.approx;
  rep.fpdim_sq = fd.exact_sq;
  const int p = period_and_blocks(ring, x).period;
  rep.period = p;

  // Extend the diagram until the periodic part covers two full periods.
  const int rank = static_cast<int>(generated_labels(ring, x).size());
  const int cap = std::max(depth, 4 * rank + 4 * p + 8);
  int used = depth;
  BratteliData br = bratteli(ring, x, used);
  while ((br.depth == 0 || br.depth + 2 * p - 1 > used) && used < cap) {
    used = std::min(cap, std::max(used + p, br.depth == 0 ? used * 2 : br.depth + 2 * p - 1));
    br = bratteli(ring, x, used);
  }
  rep.depth_used = used;
  rep.depth_k = br.depth;
  if (br.depth == 0 || br.depth + 2 * p - 1 > used) {
    rep.verdict = fd.exact_sq ? Verdict::NecessaryConditionsPass : Verdict::Obstructed;
    rep.note = "tensor power diagram did not become periodic within depth " + std::to_string(used);
    if (rep.verdict == Verdict::NecessaryConditionsPass)
      fail(ErrorCode::Uncertified, rep.note);
    return rep;
  }
  const int k = br.depth;
  bool all_integral = true;
  for (int i = 0; i < p; ++i) {
    BlockData block;
    block.level = k + i;
    block.labels = br.levels[k + i - 1];
    IntMatrix g = identity_int(static_cast<int>(block.labels.size()));
    for (int j = 0; j < p; ++j) g = multiply(g, br.inclusions[k + i + j - 1]);
    block.matrix = g;
    const PerronFrobenius pf = perron_frobenius(g);
    block.lambda_approx = pf.value;
    block.lambda = certify_integer_radius(g, pf.lower, pf.upper);
    if (block.lambda) {
      std::vector<std::vector<Rational>> shifted(g.size(), std::vector<Rational>(g.size()));
      for (std::size_t a = 0; a < g.size(); ++a)
        for (std::size_t b = 0; b < g.size(); ++b)
          shifted[a][b] = Rational(g[a][b]) - (a == b ? Rational(*block.lambda) : Rational(0));
      const auto basis = nullspace(shifted);
      if (basis.size() == 1) block.candidate = primitive_positive(basis[0]);
    } else {
      all_integral = false;
    }
    rep.blocks.push_back(std::move(block));
  }
  rep.verdict = (fd.exact_sq && all_integral) ? Verdict::NecessaryConditionsPass : Verdict::Obstructed;
  if (rep.verdict == Verdict::Obstructed) {
    rep.note = !fd.exact_sq ? "FPdim^2 is not an integer" : "a block Perron-Frobenius eigenvalue is not an integer";
    return rep;
  }
  for (const auto& b : rep.blocks)
    if (!b.candidate) {
      rep.note = "block eigenspace is not spanned by one positive vector; no localization vectors emitted";
      return rep;
    }

  const long m_max = std::max(1L, fd.exact_sq->get_si());
  for (long m = 1; m <= m_max; ++m) {
    std::vector<std::vector<Rational>> a;
    bool ok = true;
    for (int n = k; n <= used && ok; ++n) {
      const auto& v = *rep.blocks[(n - k) % p].candidate;
      const auto& d = br.dims[n - 1];
      BigInt pairing = 0;
      for (std::size_t t = 0; t < v.size(); ++t) pairing += v[t] * d[t];
      const Rational scale(power(m, n), pairing);
      std::vector<Rational> an;
      for (const auto& vt : v) {
        Rational val = scale * vt;
        val.canonicalize();
        if (val.get_den() != 1 || sgn(val) <= 0) ok = false;
        an.push_back(val);
      }
      a.push_back(std::move(an));
    }
    for (int n = k; n < used && ok; ++n) {
      const IntMatrix& g = br.inclusions[n - 1];
      const auto& an = a[n - k];
      const auto& next = a[n - k + 1];
      for (std::size_t r = 0; r < g.size() && ok; ++r) {
        Rational s = 0;
        for (std::size_t c = 0; c < next.size(); ++c) s += Rational(g[r][c]) * next[c];
        if (s != an[r] * m) ok = false;
      }
    }
    if (!ok) continue;
    rep.m = m;
    for (int n = k; n <= used; ++n) {
      LevelVector lv;
      lv.level = n;
      lv.labels = br.levels[n - 1];
      for (const auto& val : a[n - k]) lv.values.push_back(val.get_num());
      rep.a_vectors.push_back(std::move(lv));
    }
    return rep;
  }
  rep.note = "no m <= FPdim^2 gives integral localization vectors through depth " + std::to_string(used);
  return rep;
}

namespace {

nlohmann::json big_json(const BigInt& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

nlohmann::json big_vec_json(const std::vector<BigInt>& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& z : v) out.push_back(big_json(z));
  return out;
}

nlohmann::json label_list(const FusionRing& ring, const std::vector<int>& idx) {
  nlohmann::json out = nlohmann::json::array();
  for (int i : idx) out.push_back(ring.labels[i]);
  return out;
}

}  // namespace

nlohmann::json to_json(const FusionRing& ring, const LocalizationReport& r) {
  nlohmann::json blocks = nlohmann::json::array();
  for (const auto& b : r.blocks) {
    blocks.push_back({{"level", b.level},
                      {"labels", label_list(ring, b.labels)},
                      {"matrix", b.matrix},
                      {"lambda_approx", b.lambda_approx},
                      {"lambda_integral", b.lambda.has_value()},
                      {"lambda", b.lambda ? big_json(*b.lambda) : nlohmann::json(nullptr)},
                      {"candidate_vector", b.candidate ? big_vec_json(*b.candidate) : nlohmann::json(nullptr)}});
  }
  nlohmann::json avec = nlohmann::json::array();
  for (const auto& lv : r.a_vectors)
    avec.push_back({{"level", lv.level}, {"labels", label_list(ring, lv.labels)}, {"values", big_vec_json(lv.values)}});
  return {{"fpdim", r.fpdim},
          {"fpdim_sq_integer", r.fpdim_sq.has_value()},
          {"fpdim_sq", r.fpdim_sq ? big_json(*r.fpdim_sq) : nlohmann::json(nullptr)},
          {"period", r.period},
          {"depth_k", r.depth_k},
          {"depth_used", r.depth_used},
          {"blocks", blocks},
          {"verdict", to_string(r.verdict)},
          {"m", r.m ? nlohmann::json(*r.m) : nlohmann::json(nullptr)},
          {"a_vectors", avec},
          {"note", r.note}};
}

nlohmann::json to_json(const FusionRing& ring, const BratteliData& data) {
  nlohmann::json levels = nlohmann::json::array();
  for (std::size_t n = 0; n < data.levels.size(); ++n)
    levels.push_back({{"level", n + 1},
                      {"labels", label_list(ring, data.levels[n])},
                      {"dims", big_vec_json(data.dims[n])},
                      {"inclusion", n < data.inclusions.size() ? nlohmann::json(data.inclusions[n])
                                                               : nlohmann::json(nullptr)}});
  return {{"object", ring.labels[data.base]}, {"period", data.period}, {"depth_k", data.depth}, {"levels", levels}};
}

}  // namespace braidloc::fusion
