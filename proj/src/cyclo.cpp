#include "braidloc/cyclo.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <ostream>
#include <sstream>

#include "braidloc/error.hpp"
#include "internal/field_ops.hpp"

namespace braidloc {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid_argument";
    case ErrorCode::ParseError: return "parse_error";
    case ErrorCode::BackendMismatch: return "backend_mismatch";
    case ErrorCode::DimensionMismatch: return "dimension_mismatch";
    case ErrorCode::NotInvertible: return "not_invertible";
    case ErrorCode::YbeFailure: return "ybe_failure";
    case ErrorCode::NotIdempotent: return "not_idempotent";
    case ErrorCode::VanishingQuantumInteger: return "vanishing_quantum_integer";
    case ErrorCode::Reducible: return "reducible";
    case ErrorCode::Unsupported: return "unsupported";
    case ErrorCode::Uncertified: return "uncertified";
    case ErrorCode::Internal: return "internal";
  }
  return "unknown";
}

int euler_phi(int m) {
  if (m < 1) fail(ErrorCode::InvalidArgument, "euler_phi: m must be positive");
  int result = m;
  int n = m;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

using Poly = std::vector<BigInt>;  // constant term first

// Exact division by a monic polynomial.
Poly divide_monic(Poly num, const Poly& den) {
  const std::size_t dn = den.size() - 1;
  if (num.size() < den.size()) return {0};
  Poly quot(num.size() - dn);
  for (std::size_t k = num.size(); k-- > dn;) {
    BigInt c = num[k];
    quot[k - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[k - dn + j] -= c * den[j];
  }
  return quot;
}

std::mutex& poly_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

std::vector<BigInt> cyclotomic_polynomial(int m) {
  if (m < 1) fail(ErrorCode::InvalidArgument, "cyclotomic_polynomial: m must be positive");
  static std::map<int, Poly> cache;
  {
    std::lock_guard lock(poly_mutex());
    if (auto it = cache.find(m); it != cache.end()) return it->second;
  }
  // x^m - 1 = prod_{d | m} Phi_d
  Poly p(static_cast<std::size_t>(m) + 1);
  p[0] = -1;
  p[m] = 1;
  for (int d = 1; d < m; ++d)
    if (m % d == 0) p = divide_monic(std::move(p), cyclotomic_polynomial(d));
  std::lock_guard lock(poly_mutex());
  cache.emplace(m, p);
  return p;
}

namespace {

std::int64_t to_i64(const BigInt& v) {
  if (!v.fits_slong_p()) fail(ErrorCode::Unsupported, "cyclotomic table coefficient exceeds 64 bits");
  return v.get_si();
}

std::unique_ptr<CyclotomicField> build_field(int m) {
  auto F = std::make_unique<CyclotomicField>();
  F->conductor = m;
  F->degree = euler_phi(m);
  const int d = F->degree;
  for (const BigInt& c : cyclotomic_polynomial(m)) F->modulus.push_back(to_i64(c));

  F->power_table.assign(static_cast<std::size_t>(m) * d, 0);
  std::vector<BigInt> cur(d + 1);
  cur[0] = 1;
  for (int k = 0; k < m; ++k) {
    if (k > 0) {
      // multiply by x, then eliminate the x^d term with Phi_m
      for (int j = d; j > 0; --j) cur[j] = cur[j - 1];
      cur[0] = 0;
      if (cur[d] != 0) {
        BigInt c = cur[d];
        for (int j = 0; j <= d; ++j) cur[j] -= c * F->modulus[j];
      }
    }
    for (int j = 0; j < d; ++j) {
      std::int64_t v = to_i64(cur[j]);
      F->power_table[static_cast<std::size_t>(k) * d + j] = v;
      F->max_power_coeff = std::max<std::int64_t>(F->max_power_coeff, v < 0 ? -v : v);
    }
  }
  F->roots.resize(m);
  for (int k = 0; k < m; ++k) {
    long double angle = 2.0L * std::numbers::pi_v<long double> * k / m;
    F->roots[k] = {static_cast<double>(std::cos(angle)), static_cast<double>(std::sin(angle))};
  }
  return F;
}

}  // namespace

const CyclotomicField& cyclotomic_field(int conductor) {
  if (conductor < 1) fail(ErrorCode::InvalidArgument, "conductor must be positive");
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<CyclotomicField>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(conductor); it != cache.end()) return *it->second;
  }
  auto built = build_field(conductor);
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.emplace(conductor, std::move(built));
  return *it->second;
}

namespace detail {

bool solve_rational(std::vector<Rational> A, std::vector<Rational> b, int n,
                    std::vector<Rational>& x) {
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (sgn(A[r * n + col]) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return false;
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(A[piv * n + j], A[col * n + j]);
      std::swap(b[piv], b[col]);
    }
    Rational inv = 1 / A[col * n + col];
    for (int j = col; j < n; ++j) A[col * n + j] *= inv;
    b[col] *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == col || sgn(A[r * n + col]) == 0) continue;
      Rational f = A[r * n + col];
      for (int j = col; j < n; ++j) A[r * n + j] -= f * A[col * n + j];
      b[r] -= f * b[col];
    }
  }
  x = std::move(b);
  return true;
}

std::vector<Rational> field_inverse(const CyclotomicField& F, const Rational* a) {
  const int d = F.degree;
  if (all_zero(a, d)) fail(ErrorCode::NotInvertible, "inverse of zero");
  // column j of the multiplication-by-a matrix is a * x^j
  std::vector<Rational> M(static_cast<std::size_t>(d) * d);
  std::vector<Rational> basis(d), col(d);
  for (int j = 0; j < d; ++j) {
    std::fill(basis.begin(), basis.end(), Rational(0));
    basis[j] = 1;
    field_mul(F, a, basis.data(), col.data());
    for (int i = 0; i < d; ++i) M[i * d + j] = col[i];
  }
  std::vector<Rational> rhs(d), x;
  rhs[0] = 1;
  if (!solve_rational(std::move(M), std::move(rhs), d, x))
    fail(ErrorCode::Internal, "multiplication matrix of a nonzero element is singular");
  return x;
}

}  // namespace detail

namespace {

// Data for testing whether an element of Q(zeta_m) lies in Q(zeta_d) and
// recovering its coordinates there: a set of phi(d) coordinate rows on which
// the embedding is invertible, and that inverse.
struct Descent {
  std::vector<int> rows;
  std::vector<Rational> inverse;  // phi(d) x phi(d), row-major
};

const Descent& descent(int m, int d) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::unique_ptr<Descent>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find({m, d}); it != cache.end()) return *it->second;
  }
  const CyclotomicField& big = cyclotomic_field(m);
  const CyclotomicField& small = cyclotomic_field(d);
  const int D = big.degree, e = small.degree, step = m / d;
  // B[i][j] = coefficient i of zeta_m^(j*step)
  auto B = [&](int i, int j) { return big.power(j * step)[i]; };

  auto result = std::make_unique<Descent>();
  std::vector<std::vector<Rational>> echelon;  // reduced copies of chosen rows
  std::vector<int> pivots;
  for (int i = 0; i < D && static_cast<int>(result->rows.size()) < e; ++i) {
    std::vector<Rational> row(e);
    for (int j = 0; j < e; ++j) row[j] = B(i, j);
    for (std::size_t r = 0; r < echelon.size(); ++r) {
      if (sgn(row[pivots[r]]) == 0) continue;
      Rational f = row[pivots[r]] / echelon[r][pivots[r]];
      for (int j = 0; j < e; ++j) row[j] -= f * echelon[r][j];
    }
    auto nz = std::find_if(row.begin(), row.end(), [](const Rational& q) { return sgn(q) != 0; });
    if (nz == row.end()) continue;
    pivots.push_back(static_cast<int>(nz - row.begin()));
    echelon.push_back(std::move(row));
    result->rows.push_back(i);
  }
  if (static_cast<int>(result->rows.size()) != e)
    fail(ErrorCode::Internal, "field embedding is not injective");
  result->inverse.assign(static_cast<std::size_t>(e) * e, 0);
  for (int c = 0; c < e; ++c) {
    std::vector<Rational> A(static_cast<std::size_t>(e) * e), rhs(e), x;
    for (int r = 0; r < e; ++r)
      for (int j = 0; j < e; ++j) A[r * e + j] = B(result->rows[r], j);
    rhs[c] = 1;
    detail::solve_rational(std::move(A), std::move(rhs), e, x);
    for (int r = 0; r < e; ++r) result->inverse[r * e + c] = x[r];
  }
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.emplace(std::make_pair(m, d), std::move(result));
  return *it->second;
}

// If x (in Q(zeta_m)) lies in Q(zeta_d), writes its coordinates there.
bool try_descend(int m, int d, const std::vector<Rational>& x, std::vector<Rational>& out) {
  const Descent& ds = descent(m, d);
  const int e = euler_phi(d);
  out.assign(e, 0);
  for (int r = 0; r < e; ++r)
    for (int c = 0; c < e; ++c) {
      const Rational& f = ds.inverse[r * e + c];
      if (sgn(f) != 0) out[r] += f * x[ds.rows[c]];
    }
  std::vector<Rational> back(x.size());
  detail::embed(cyclotomic_field(d), cyclotomic_field(m), out.data(), back.data());
  return back == x;
}

long lcm_checked(long a, long b) {
  long l = std::lcm(a, b);
  if (l > 100000) fail(ErrorCode::Unsupported, "cyclotomic conductor too large");
  return l;
}

}  // namespace

CycNum::CycNum() : conductor_(1), coeffs_(1) {}
CycNum::CycNum(long value) : conductor_(1), coeffs_{Rational(value)} {}
CycNum::CycNum(const Rational& value) : conductor_(1), coeffs_{value} {
  coeffs_[0].canonicalize();
}

CycNum CycNum::from_reduced(int m, std::vector<Rational> reduced) {
  CycNum out;
  bool rational = true;
  for (std::size_t j = 1; j < reduced.size(); ++j)
    if (sgn(reduced[j]) != 0) {
      rational = false;
      break;
    }
  if (rational || m == 1) {
    out.coeffs_[0] = reduced.empty() ? Rational(0) : reduced[0];
    return out;
  }
  std::vector<Rational> y;
  for (int d = 3; d < m; ++d) {
    if (m % d != 0 || d % 4 == 2) continue;
    if (try_descend(m, d, reduced, y)) {
      out.conductor_ = d;
      out.coeffs_ = std::move(y);
      return out;
    }
  }
  out.conductor_ = m;
  out.coeffs_ = std::move(reduced);
  return out;
}

CycNum CycNum::make(int m, std::span<const Rational> coeffs) {
  if (m < 1) fail(ErrorCode::InvalidArgument, "cyc_make: conductor must be >= 1");
  const CyclotomicField& F = cyclotomic_field(m);
  std::vector<Rational> reduced(F.degree);
  std::vector<Rational> folded(std::min<std::size_t>(coeffs.size(), m));
  for (std::size_t k = 0; k < coeffs.size(); ++k) folded[k % m] += coeffs[k];
  detail::reduce_accumulate(F, folded.data(), static_cast<int>(folded.size()), reduced.data());
  return from_reduced(m, std::move(reduced));
}

CycNum CycNum::zeta(int m, long k) {
  if (m < 1) fail(ErrorCode::InvalidArgument, "zeta: conductor must be >= 1");
  long e = k % m;
  if (e < 0) e += m;
  std::vector<Rational> c(static_cast<std::size_t>(e) + 1);
  c[e] = 1;
  return make(m, c);
}

std::vector<Rational> CycNum::coeffs_in(int M) const {
  if (M % conductor_ != 0) fail(ErrorCode::InvalidArgument, "coeffs_in: conductor does not divide target");
  if (M == conductor_) return coeffs_;
  const CyclotomicField& to = cyclotomic_field(M);
  std::vector<Rational> out(to.degree);
  detail::embed(cyclotomic_field(conductor_), to, coeffs_.data(), out.data());
  return out;
}

bool CycNum::is_zero() const { return conductor_ == 1 && sgn(coeffs_[0]) == 0; }

std::optional<Rational> CycNum::as_rational() const {
  if (conductor_ != 1) return std::nullopt;
  return coeffs_[0];
}

std::optional<BigInt> CycNum::as_integer() const {
  if (conductor_ != 1 || coeffs_[0].get_den() != 1) return std::nullopt;
  return BigInt(coeffs_[0].get_num());
}

CycNum CycNum::conj() const {
  if (conductor_ == 1) return *this;
  const CyclotomicField& F = cyclotomic_field(conductor_);
  CycNum out;
  out.conductor_ = conductor_;
  out.coeffs_.assign(F.degree, 0);
  detail::conj(F, coeffs_.data(), out.coeffs_.data());
  return out;
}

CycNum CycNum::inv() const {
  if (is_zero()) fail(ErrorCode::NotInvertible, "inverse of zero");
  CycNum out;
  out.conductor_ = conductor_;
  out.coeffs_ = detail::field_inverse(cyclotomic_field(conductor_), coeffs_.data());
  return out;
}

CycNum CycNum::abs2() const { return *this * conj(); }

CycNum CycNum::pow(long e) const {
  if (e < 0) return inv().pow(-e);
  CycNum result(1), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

std::complex<double> CycNum::to_complex() const {
  const CyclotomicField& F = cyclotomic_field(conductor_);
  std::complex<long double> acc = 0;
  for (int j = 0; j < F.degree; ++j) {
    if (sgn(coeffs_[j]) == 0) continue;
    long double c = coeffs_[j].get_d();
    acc += c * std::complex<long double>(F.roots[j].real(), F.roots[j].imag());
  }
  return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

CycNum CycNum::operator-() const {
  CycNum out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CycNum& CycNum::operator+=(const CycNum& rhs) {
  if (conductor_ == rhs.conductor_) {
    std::vector<Rational> sum = coeffs_;
    for (std::size_t j = 0; j < sum.size(); ++j) sum[j] += rhs.coeffs_[j];
    return *this = from_reduced(conductor_, std::move(sum));
  }
  const int M = static_cast<int>(lcm_checked(conductor_, rhs.conductor_));
  std::vector<Rational> a = coeffs_in(M), b = rhs.coeffs_in(M);
  for (std::size_t j = 0; j < a.size(); ++j) a[j] += b[j];
  return *this = from_reduced(M, std::move(a));
}

CycNum& CycNum::operator-=(const CycNum& rhs) { return *this += -rhs; }

CycNum& CycNum::operator*=(const CycNum& rhs) {
  if (conductor_ == 1 && rhs.conductor_ == 1) {
    coeffs_[0] *= rhs.coeffs_[0];
    return *this;
  }
  if (rhs.conductor_ == 1) {
    if (sgn(rhs.coeffs_[0]) == 0) return *this = CycNum();
    for (auto& c : coeffs_) c *= rhs.coeffs_[0];
    return *this;
  }
  if (conductor_ == 1) {
    Rational f = coeffs_[0];
    *this = rhs;
    return *this *= CycNum(f);
  }
  const int M = static_cast<int>(lcm_checked(conductor_, rhs.conductor_));
  const CyclotomicField& F = cyclotomic_field(M);
  std::vector<Rational> a = coeffs_in(M), b = rhs.coeffs_in(M), out(F.degree);
  detail::field_mul(F, a.data(), b.data(), out.data());
  return *this = from_reduced(M, std::move(out));
}

CycNum& CycNum::operator/=(const CycNum& rhs) { return *this *= rhs.inv(); }

bool operator==(const CycNum& a, const CycNum& b) {
  return a.conductor_ == b.conductor_ && a.coeffs_ == b.coeffs_;
}

std::size_t CycNum::hash() const {
  std::size_t h = static_cast<std::size_t>(conductor_) * 0x9e3779b97f4a7c15ULL;
  for (const Rational& c : coeffs_) {
    std::size_t part = mpz_size(c.get_num_mpz_t()) ? mpz_getlimbn(c.get_num_mpz_t(), 0) : 0;
    part ^= mpz_getlimbn(c.get_den_mpz_t(), 0) * 31;
    if (sgn(c) < 0) part = ~part;
    h ^= part + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

// Literal grammar ---------------------------------------------------------------

std::string CycNum::to_literal() const {
  if (conductor_ == 1) return coeffs_[0].get_str();
  std::string out;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    const Rational& c = coeffs_[j];
    if (sgn(c) == 0) continue;
    if (sgn(c) > 0 && !out.empty()) out += '+';
    out += c.get_str();
    out += "*z" + std::to_string(conductor_) + "^" + std::to_string(j);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const CycNum& x) { return os << x.to_literal(); }

namespace {

std::string normalize_literal(std::string_view text) {
  std::string s;
  s.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    unsigned char ch = static_cast<unsigned char>(text[i]);
    // U+2212 MINUS SIGN
    if (ch == 0xE2 && i + 2 < text.size() && static_cast<unsigned char>(text[i + 1]) == 0x88 &&
        static_cast<unsigned char>(text[i + 2]) == 0x92) {
      s += '-';
      i += 2;
      continue;
    }
    if (!std::isspace(ch)) s += static_cast<char>(ch);
  }
  return s;
}

struct LiteralParser {
  const std::string& s;
  std::size_t pos = 0;

  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorCode::ParseError, "cannot parse literal '" + s + "': " + what);
  }
  bool peek(char c) const { return pos < s.size() && s[pos] == c; }
  BigInt integer() {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) error("expected digits at position " + std::to_string(start));
    return BigInt(s.substr(start, pos - start));
  }
  long small_integer(bool allow_sign) {
    bool neg = false;
    if (allow_sign && (peek('-') || peek('+'))) neg = s[pos++] == '-';
    BigInt v = integer();
    if (!v.fits_slong_p()) error("integer out of range");
    return neg ? -v.get_si() : v.get_si();
  }
};

}  // namespace

CycNum CycNum::parse(std::string_view literal) {
  const std::string s = normalize_literal(literal);
  LiteralParser p{s};
  if (s.empty()) p.error("empty literal");
  struct Term {
    Rational coeff;
    long m, k;
  };
  std::vector<Term> terms;
  long M = 1;
  while (p.pos < s.size()) {
    int sign = 1;
    if (p.peek('+') || p.peek('-')) {
      sign = s[p.pos++] == '-' ? -1 : 1;
    } else if (!terms.empty()) {
      p.error("expected '+' or '-' at position " + std::to_string(p.pos));
    }
    Rational coeff(1);
    bool have_coeff = false;
    if (p.pos < s.size() && std::isdigit(static_cast<unsigned char>(s[p.pos]))) {
      BigInt num = p.integer();
      BigInt den(1);
      if (p.peek('/')) {
        ++p.pos;
        den = p.integer();
        if (den == 0) p.error("zero denominator");
      }
      coeff = Rational(num, den);
      coeff.canonicalize();
      have_coeff = true;
      if (p.peek('*')) {
        ++p.pos;
        if (!p.peek('z')) p.error("expected 'z' after '*'");
      }
    }
    long m = 1, k = 0;
    if (p.peek('z')) {
      ++p.pos;
      m = p.small_integer(false);
      if (m < 1) p.error("conductor must be >= 1");
      k = 1;
      if (p.peek('^')) {
        ++p.pos;
        k = p.small_integer(true);
      }
    } else if (!have_coeff) {
      p.error("expected a rational or z-term at position " + std::to_string(p.pos));
    }
    terms.push_back({sign * coeff, m, k});
    M = lcm_checked(M, m);
  }
  std::vector<Rational> poly(static_cast<std::size_t>(M));
  for (const Term& t : terms) {
    long e = (t.k % t.m + t.m) % t.m * (M / t.m);
    poly[e % M] += t.coeff;
  }
  return make(static_cast<int>(M), poly);
}

// Scalar -------------------------------------------------------------------------

const char* to_string(Backend backend) noexcept {
  return backend == Backend::Exact ? "exact" : "approx";
}

Backend parse_backend(std::string_view name) {
  if (name == "exact") return Backend::Exact;
  if (name == "approx") return Backend::Approx;
  fail(ErrorCode::InvalidArgument, "unknown backend '" + std::string(name) + "'");
}

const CycNum& Scalar::exact() const {
  if (auto* p = std::get_if<CycNum>(&value_)) return *p;
  fail(ErrorCode::BackendMismatch, "exact value requested from an approximate scalar");
}

std::complex<double> Scalar::to_complex() const {
  if (auto* p = std::get_if<CycNum>(&value_)) return p->to_complex();
  return std::get<std::complex<double>>(value_);
}

Scalar Scalar::parse(std::string_view text, Backend backend) {
  if (backend == Backend::Exact) return Scalar(CycNum::parse(text));
  if (text.find('z') != std::string_view::npos) return Scalar(CycNum::parse(text).to_complex());
  return Scalar(parse_complex(text));
}

std::string Scalar::to_string() const {
  if (auto* p = std::get_if<CycNum>(&value_)) return p->to_literal();
  return format_complex(std::get<std::complex<double>>(value_));
}

bool Scalar::equals(const Scalar& other, double tol) const {
  if (is_exact() && other.is_exact()) return exact() == other.exact();
  return std::abs(to_complex() - other.to_complex()) < tol;
}

bool Scalar::is_zero(double tol) const {
  if (is_exact()) return exact().is_zero();
  return std::abs(to_complex()) < tol;
}

namespace {
template <class Op>
Scalar combine(const Scalar& a, const Scalar& b, Op op) {
  if (a.is_exact() && b.is_exact()) return Scalar(op(a.exact(), b.exact()));
  return Scalar(op(a.to_complex(), b.to_complex()));
}
}  // namespace

Scalar operator+(const Scalar& a, const Scalar& b) {
  return combine(a, b, [](const auto& x, const auto& y) { return x + y; });
}
Scalar operator-(const Scalar& a, const Scalar& b) {
  return combine(a, b, [](const auto& x, const auto& y) { return x - y; });
}
Scalar operator*(const Scalar& a, const Scalar& b) {
  return combine(a, b, [](const auto& x, const auto& y) { return x * y; });
}
Scalar operator/(const Scalar& a, const Scalar& b) {
  if (b.is_zero(0.0)) fail(ErrorCode::NotInvertible, "division by zero scalar");
  return combine(a, b, [](const auto& x, const auto& y) { return x / y; });
}

std::complex<double> parse_complex(std::string_view text) {
  const std::string s = normalize_literal(text);
  auto bad = [&]() -> std::complex<double> {
    fail(ErrorCode::ParseError, "cannot parse complex number '" + s + "'");
  };
  if (s.empty()) return bad();
  const char* begin = s.c_str();
  const char* end = begin + s.size();
  auto unit_imag = [&](const char* p, double& out) -> const char* {
    // "i", "+i", "-i"
    double sign = 1;
    if (*p == '+' || *p == '-') sign = (*p++ == '-') ? -1 : 1;
    if (*p != 'i') return nullptr;
    out = sign;
    return p + 1;
  };
  double im = 0;
  if (const char* q = unit_imag(begin, im); q == end) return {0, im};
  char* next = nullptr;
  double first = std::strtod(begin, &next);
  if (next == begin) return bad();
  if (next == end) return {first, 0};
  if (*next == 'i' && next + 1 == end) return {0, first};
  if (*next != '+' && *next != '-') return bad();
  if (const char* q = unit_imag(next, im); q == end) return {first, im};
  const char* start = next;
  double second = std::strtod(start, &next);
  if (next == start || *next != 'i' || next + 1 != end) return bad();
  return {first, second};
}

std::string format_complex(std::complex<double> z) {
  std::ostringstream os;
  os.precision(17);
  double re = z.real() == 0 ? 0.0 : z.real();
  double im = z.imag() == 0 ? 0.0 : z.imag();
  os << re << (std::signbit(im) ? '-' : '+') << std::abs(im) << 'i';
  return os.str();
}

}  // namespace braidloc
