#include "braidloc/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "braidloc/error.hpp"
#include "internal/field_ops.hpp"
#include "internal/parallel.hpp"

namespace braidloc {

namespace {

int lcm_conductor(int a, int b) {
  long l = std::lcm(static_cast<long>(a), static_cast<long>(b));
  if (l > 100000) fail(ErrorCode::Unsupported, "cyclotomic conductor too large");
  return static_cast<int>(l);
}

void check_same_dim(int a, int b, const char* op) {
  if (a != b)
    fail(ErrorCode::DimensionMismatch, std::string(op) + ": dimensions " + std::to_string(a) +
                                           " and " + std::to_string(b) + " differ");
}

void set_i128(BigInt& z, __int128 v) {
  if (v >= INT64_MIN && v <= INT64_MAX) {
    z = static_cast<long>(v);
    return;
  }
  const bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  mpz_set_ui(z.get_mpz_t(), static_cast<unsigned long>(u >> 64));
  mpz_mul_2exp(z.get_mpz_t(), z.get_mpz_t(), 64);
  mpz_add_ui(z.get_mpz_t(), z.get_mpz_t(), static_cast<unsigned long>(u));
  if (neg) mpz_neg(z.get_mpz_t(), z.get_mpz_t());
}

int ceil_log2(std::uint64_t v) {
  int b = 0;
  while ((std::uint64_t{1} << b) < v && b < 63) ++b;
  return b;
}

std::size_t max_bits(const std::vector<BigInt>& v) {
  std::size_t bits = 0;
  for (const BigInt& x : v)
    if (sgn(x) != 0) bits = std::max(bits, mpz_sizeinbase(x.get_mpz_t(), 2));
  return bits;
}

int checked_dim(long long dim) {
  if (dim < 1 || dim > 200000) fail(ErrorCode::InvalidArgument, "matrix dimension out of range");
  return static_cast<int>(dim);
}

}  // namespace

// ExactMatrix ---------------------------------------------------------------------

struct ExactMatrixAccess {
  static std::vector<BigInt>& num(ExactMatrix& m) { return m.num_; }
  static BigInt& den(ExactMatrix& m) { return m.den_; }
};

ExactMatrix::ExactMatrix(int dim, int conductor)
    : dim_(dim), conductor_(conductor), degree_(euler_phi(conductor)) {
  if (dim < 0) fail(ErrorCode::InvalidArgument, "negative matrix dimension");
  num_.resize(static_cast<std::size_t>(dim) * dim * degree_);
}

ExactMatrix ExactMatrix::identity(int dim) {
  ExactMatrix m(dim, 1);
  for (int i = 0; i < dim; ++i) m.num_[static_cast<std::size_t>(i) * dim + i] = 1;
  return m;
}

ExactMatrix ExactMatrix::from_entries(int dim, const std::vector<CycNum>& entries) {
  if (entries.size() != static_cast<std::size_t>(dim) * dim)
    fail(ErrorCode::DimensionMismatch, "entry count does not match dimension");
  int M = 1;
  BigInt den = 1;
  for (const CycNum& x : entries) {
    M = lcm_conductor(M, x.conductor());
    for (const Rational& c : x.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  }
  ExactMatrix m(dim, M);
  m.den_ = den;
  for (std::size_t e = 0; e < entries.size(); ++e) {
    if (entries[e].is_zero()) continue;
    std::vector<Rational> c = entries[e].coeffs_in(M);
    for (int t = 0; t < m.degree_; ++t) {
      Rational scaled = c[t] * den;
      m.num_[e * m.degree_ + t] = scaled.get_num();
    }
  }
  m.normalize();
  return m;
}

void ExactMatrix::normalize() {
  BigInt g = den_;
  bool any = false;
  for (const BigInt& x : num_) {
    if (sgn(x) == 0) continue;
    any = true;
    if (g == 1) break;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  }
  if (!any) {
    den_ = 1;
    return;
  }
  if (g == 1) return;
  for (BigInt& x : num_)
    if (sgn(x) != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
}

bool ExactMatrix::entry_is_zero(int i, int j) const {
  return detail::all_zero(num_entry(i, j), degree_);
}

CycNum ExactMatrix::entry(int i, int j) const {
  if (entry_is_zero(i, j)) return CycNum();
  const BigInt* p = num_entry(i, j);
  std::vector<Rational> c(degree_);
  for (int t = 0; t < degree_; ++t) {
    c[t] = Rational(p[t], den_);
    c[t].canonicalize();
  }
  return CycNum::from_reduced(conductor_, std::move(c));
}

CycNum ExactMatrix::trace() const {
  std::vector<Rational> c(degree_);
  for (int i = 0; i < dim_; ++i) {
    const BigInt* p = num_entry(i, i);
    for (int t = 0; t < degree_; ++t) c[t] += p[t];
  }
  for (auto& x : c) x /= den_;
  return CycNum::from_reduced(conductor_, std::move(c));
}

ExactMatrix ExactMatrix::embedded(int M) const {
  if (M == conductor_) return *this;
  if (M % conductor_ != 0) fail(ErrorCode::InvalidArgument, "embedded: conductor does not divide target");
  ExactMatrix out(dim_, M);
  out.den_ = den_;
  const CyclotomicField& from = cyclotomic_field(conductor_);
  const CyclotomicField& to = cyclotomic_field(M);
  const std::size_t n2 = static_cast<std::size_t>(dim_) * dim_;
  for (std::size_t e = 0; e < n2; ++e) {
    const BigInt* src = num_.data() + e * degree_;
    if (detail::all_zero(src, degree_)) continue;
    detail::embed(from, to, src, out.num_.data() + e * out.degree_);
  }
  out.normalize();
  return out;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix out(dim_, conductor_);
  out.den_ = den_;
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      std::copy_n(num_entry(i, j), degree_,
                  out.num_.data() + (static_cast<std::size_t>(j) * dim_ + i) * degree_);
  return out;
}

ExactMatrix ExactMatrix::adjoint() const {
  ExactMatrix out(dim_, conductor_);
  out.den_ = den_;
  const CyclotomicField& F = cyclotomic_field(conductor_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) {
      if (entry_is_zero(i, j)) continue;
      BigInt* dst = out.num_.data() + (static_cast<std::size_t>(j) * dim_ + i) * degree_;
      if (conductor_ == 1)
        dst[0] = num_entry(i, j)[0];
      else
        detail::conj(F, num_entry(i, j), dst);
    }
  return out;
}

ExactMatrix ExactMatrix::scaled(const CycNum& c) const {
  if (c.is_zero()) return ExactMatrix(dim_, conductor_);
  const int L = lcm_conductor(conductor_, c.conductor());
  ExactMatrix a = embedded(L);
  std::vector<Rational> cq = c.coeffs_in(L);
  BigInt cden = 1;
  for (const Rational& x : cq) mpz_lcm(cden.get_mpz_t(), cden.get_mpz_t(), x.get_den_mpz_t());
  std::vector<BigInt> cnum(a.degree_);
  for (int t = 0; t < a.degree_; ++t) cnum[t] = Rational(cq[t] * cden).get_num();
  const CyclotomicField& F = cyclotomic_field(L);
  const std::size_t n2 = static_cast<std::size_t>(dim_) * dim_;
  std::vector<BigInt> tmp(a.degree_);
  for (std::size_t e = 0; e < n2; ++e) {
    BigInt* p = a.num_.data() + e * a.degree_;
    if (detail::all_zero(p, a.degree_)) continue;
    detail::field_mul(F, p, cnum.data(), tmp.data());
    std::copy(tmp.begin(), tmp.end(), p);
  }
  a.den_ *= cden;
  a.normalize();
  return a;
}

bool ExactMatrix::is_zero() const {
  return std::all_of(num_.begin(), num_.end(), [](const BigInt& x) { return sgn(x) == 0; });
}

std::optional<CycNum> ExactMatrix::scalar_value() const {
  if (dim_ == 0) return CycNum();
  const BigInt* d0 = num_entry(0, 0);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) {
      const BigInt* p = num_entry(i, j);
      if (i == j) {
        if (!std::equal(p, p + degree_, d0)) return std::nullopt;
      } else if (!detail::all_zero(p, degree_)) {
        return std::nullopt;
      }
    }
  return entry(0, 0);
}

namespace {

ExactMatrix add_sub(const ExactMatrix& a0, const ExactMatrix& b0, bool subtract) {
  check_same_dim(a0.dim(), b0.dim(), subtract ? "subtract" : "add");
  const int L = lcm_conductor(a0.conductor(), b0.conductor());
  ExactMatrix a = a0.embedded(L);
  const ExactMatrix b = b0.embedded(L);
  BigInt den;
  mpz_lcm(den.get_mpz_t(), a.den().get_mpz_t(), b.den().get_mpz_t());
  BigInt fa = den / a.den(), fb = den / b.den();
  std::vector<BigInt>& an = ExactMatrixAccess::num(a);
  const std::vector<BigInt>& bn = b.num();
  for (std::size_t e = 0; e < an.size(); ++e) {
    if (fa != 1) an[e] *= fa;
    if (sgn(bn[e]) == 0) continue;
    if (subtract)
      mpz_submul(an[e].get_mpz_t(), bn[e].get_mpz_t(), fb.get_mpz_t());
    else
      mpz_addmul(an[e].get_mpz_t(), bn[e].get_mpz_t(), fb.get_mpz_t());
  }
  ExactMatrixAccess::den(a) = den;
  a.normalize();
  return a;
}

// Per-row lists of columns holding a nonzero entry.
std::vector<std::vector<int>> nonzero_columns(const ExactMatrix& m) {
  std::vector<std::vector<int>> out(m.dim());
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j)
      if (!m.entry_is_zero(i, j)) out[i].push_back(j);
  return out;
}

void multiply_small(const ExactMatrix& a, const ExactMatrix& b, const CyclotomicField& F,
                    std::vector<BigInt>& out) {
  const int n = a.dim(), D = a.degree(), W = 2 * D - 1, M = F.conductor;
  std::vector<std::int64_t> a64(a.num().size()), b64(b.num().size());
  for (std::size_t e = 0; e < a64.size(); ++e) a64[e] = a.num()[e].get_si();
  for (std::size_t e = 0; e < b64.size(); ++e) b64[e] = b.num()[e].get_si();
  const auto nza = nonzero_columns(a), nzb = nonzero_columns(b);

  detail::parallel_for(static_cast<std::size_t>(n), 8, [&](std::size_t begin, std::size_t end) {
    std::vector<__int128> acc(static_cast<std::size_t>(n) * W);
    std::vector<char> mark(n);
    std::vector<int> touched;
    std::vector<__int128> red(D);
    for (std::size_t i = begin; i < end; ++i) {
      touched.clear();
      for (int k : nza[i]) {
        const std::int64_t* ap = a64.data() + (i * n + k) * D;
        for (int j : nzb[k]) {
          const std::int64_t* bp = b64.data() + (static_cast<std::size_t>(k) * n + j) * D;
          __int128* c = acc.data() + static_cast<std::size_t>(j) * W;
          if (!mark[j]) {
            mark[j] = 1;
            touched.push_back(j);
          }
          for (int s = 0; s < D; ++s) {
            if (ap[s] == 0) continue;
            const __int128 as = ap[s];
            for (int t = 0; t < D; ++t) c[s + t] += as * bp[t];
          }
        }
      }
      for (int j : touched) {
        __int128* c = acc.data() + static_cast<std::size_t>(j) * W;
        for (int t = 0; t < D; ++t) red[t] = c[t];
        for (int k = D; k < W; ++k) {
          if (c[k] == 0) continue;
          const std::int64_t* row = F.power(k % M);
          for (int t = 0; t < D; ++t)
            if (row[t] != 0) red[t] += c[k] * row[t];
        }
        BigInt* dst = out.data() + (i * n + j) * D;
        for (int t = 0; t < D; ++t) set_i128(dst[t], red[t]);
        std::fill(c, c + W, 0);
        mark[j] = 0;
      }
    }
  });
}

void multiply_big(const ExactMatrix& a, const ExactMatrix& b, const CyclotomicField& F,
                  std::vector<BigInt>& out) {
  const int n = a.dim(), D = a.degree(), W = 2 * D - 1;
  const auto nza = nonzero_columns(a), nzb = nonzero_columns(b);
  detail::parallel_for(static_cast<std::size_t>(n), 4, [&](std::size_t begin, std::size_t end) {
    std::vector<BigInt> acc(static_cast<std::size_t>(n) * W);
    std::vector<char> mark(n);
    std::vector<int> touched;
    for (std::size_t i = begin; i < end; ++i) {
      touched.clear();
      for (int k : nza[i]) {
        const BigInt* ap = a.num_entry(static_cast<int>(i), k);
        for (int j : nzb[k]) {
          const BigInt* bp = b.num_entry(k, j);
          BigInt* c = acc.data() + static_cast<std::size_t>(j) * W;
          if (!mark[j]) {
            mark[j] = 1;
            touched.push_back(j);
          }
          for (int s = 0; s < D; ++s) {
            if (sgn(ap[s]) == 0) continue;
            for (int t = 0; t < D; ++t)
              if (sgn(bp[t]) != 0) mpz_addmul(c[s + t].get_mpz_t(), ap[s].get_mpz_t(), bp[t].get_mpz_t());
          }
        }
      }
      for (int j : touched) {
        BigInt* c = acc.data() + static_cast<std::size_t>(j) * W;
        BigInt* dst = out.data() + (i * n + j) * D;
        detail::reduce_accumulate(F, c, W, dst);
        for (int k = 0; k < W; ++k) c[k] = 0;
        mark[j] = 0;
      }
    }
  });
}

}  // namespace

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) { return add_sub(a, b, false); }
ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) { return add_sub(a, b, true); }

ExactMatrix operator*(const ExactMatrix& a0, const ExactMatrix& b0) {
  check_same_dim(a0.dim(), b0.dim(), "multiply");
  const int L = lcm_conductor(a0.conductor(), b0.conductor());
  const ExactMatrix a = a0.embedded(L), b = b0.embedded(L);
  const CyclotomicField& F = cyclotomic_field(L);
  ExactMatrix out(a.dim(), L);
  const std::size_t bits_a = max_bits(a.num()), bits_b = max_bits(b.num());
  const int D = a.degree();
  const std::size_t bound = bits_a + bits_b + ceil_log2(static_cast<std::uint64_t>(a.dim())) +
                            ceil_log2(D) + ceil_log2(2 * D) +
                            ceil_log2(static_cast<std::uint64_t>(F.max_power_coeff) + 1) + 2;
  if (bits_a <= 62 && bits_b <= 62 && bound <= 126)
    multiply_small(a, b, F, ExactMatrixAccess::num(out));
  else
    multiply_big(a, b, F, ExactMatrixAccess::num(out));
  ExactMatrixAccess::den(out) = a.den() * b.den();
  out.normalize();
  return out;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.dim_ != b.dim_) return false;
  if (a.conductor_ == b.conductor_) return a.den_ == b.den_ && a.num_ == b.num_;
  const int L = lcm_conductor(a.conductor_, b.conductor_);
  const ExactMatrix ea = a.embedded(L), eb = b.embedded(L);
  return ea.den_ == eb.den_ && ea.num_ == eb.num_;
}

ExactMatrix ExactMatrix::kron_identity(int left, const ExactMatrix& a, int right) {
  const int n = a.dim_;
  const int dim = checked_dim(static_cast<long long>(left) * n * right);
  ExactMatrix out(dim, a.conductor_);
  out.den_ = a.den_;
  const int D = a.degree_;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (a.entry_is_zero(x, y)) continue;
      const BigInt* src = a.num_entry(x, y);
      for (int l = 0; l < left; ++l)
        for (int r = 0; r < right; ++r) {
          const std::size_t row = (static_cast<std::size_t>(l) * n + x) * right + r;
          const std::size_t col = (static_cast<std::size_t>(l) * n + y) * right + r;
          std::copy_n(src, D, out.num_.data() + (row * dim + col) * D);
        }
    }
  return out;
}

ExactMatrix kron(const ExactMatrix& a0, const ExactMatrix& b0) {
  const int L = lcm_conductor(a0.conductor(), b0.conductor());
  const ExactMatrix a = a0.embedded(L), b = b0.embedded(L);
  const CyclotomicField& F = cyclotomic_field(L);
  const int na = a.dim(), nb = b.dim(), D = a.degree();
  const int dim = checked_dim(static_cast<long long>(na) * nb);
  ExactMatrix out(dim, L);
  std::vector<BigInt>& num = ExactMatrixAccess::num(out);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < na; ++j) {
      if (a.entry_is_zero(i, j)) continue;
      for (int k = 0; k < nb; ++k)
        for (int l = 0; l < nb; ++l) {
          if (b.entry_is_zero(k, l)) continue;
          const std::size_t row = static_cast<std::size_t>(i) * nb + k;
          const std::size_t col = static_cast<std::size_t>(j) * nb + l;
          detail::field_mul(F, a.num_entry(i, j), b.num_entry(k, l), num.data() + (row * dim + col) * D);
        }
    }
  ExactMatrixAccess::den(out) = a.den() * b.den();
  out.normalize();
  return out;
}

// ApproxMatrix --------------------------------------------------------------------

ApproxMatrix ApproxMatrix::identity(int dim) {
  ApproxMatrix m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1;
  return m;
}

ApproxMatrix ApproxMatrix::adjoint() const {
  ApproxMatrix out(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

std::complex<double> ApproxMatrix::trace() const {
  std::complex<double> t = 0;
  for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double ApproxMatrix::max_abs() const {
  double m = 0;
  for (const auto& z : a_) m = std::max(m, std::abs(z));
  return m;
}

ApproxMatrix operator+(const ApproxMatrix& a, const ApproxMatrix& b) {
  check_same_dim(a.dim_, b.dim_, "add");
  ApproxMatrix out = a;
  for (std::size_t e = 0; e < out.a_.size(); ++e) out.a_[e] += b.a_[e];
  return out;
}

ApproxMatrix operator-(const ApproxMatrix& a, const ApproxMatrix& b) {
  check_same_dim(a.dim_, b.dim_, "subtract");
  ApproxMatrix out = a;
  for (std::size_t e = 0; e < out.a_.size(); ++e) out.a_[e] -= b.a_[e];
  return out;
}

ApproxMatrix operator*(const ApproxMatrix& a, const ApproxMatrix& b) {
  check_same_dim(a.dim_, b.dim_, "multiply");
  const int n = a.dim_;
  ApproxMatrix out(n);
  detail::parallel_for(static_cast<std::size_t>(n), 16, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i)
      for (int k = 0; k < n; ++k) {
        const std::complex<double> aik = a(static_cast<int>(i), k);
        if (aik == 0.0) continue;
        const std::complex<double>* brow = b.a_.data() + static_cast<std::size_t>(k) * n;
        std::complex<double>* orow = out.a_.data() + i * n;
        for (int j = 0; j < n; ++j) orow[j] += aik * brow[j];
      }
  });
  return out;
}

ApproxMatrix ApproxMatrix::scaled(std::complex<double> c) const {
  ApproxMatrix out = *this;
  for (auto& z : out.a_) z *= c;
  return out;
}

ApproxMatrix ApproxMatrix::kron_identity(int left, const ApproxMatrix& a, int right) {
  const int n = a.dim_;
  const int dim = checked_dim(static_cast<long long>(left) * n * right);
  ApproxMatrix out(dim);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const auto v = a(x, y);
      if (v == 0.0) continue;
      for (int l = 0; l < left; ++l)
        for (int r = 0; r < right; ++r)
          out((l * n + x) * right + r, (l * n + y) * right + r) = v;
    }
  return out;
}

ApproxMatrix kron(const ApproxMatrix& a, const ApproxMatrix& b) {
  const int na = a.dim(), nb = b.dim();
  ApproxMatrix out(checked_dim(static_cast<long long>(na) * nb));
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < na; ++j) {
      if (a(i, j) == 0.0) continue;
      for (int k = 0; k < nb; ++k)
        for (int l = 0; l < nb; ++l) out(i * nb + k, j * nb + l) = a(i, j) * b(k, l);
    }
  return out;
}

// SqMatrix ------------------------------------------------------------------------

namespace {

void require_same_backend(const SqMatrix& a, const SqMatrix& b, const char* op) {
  if (a.backend() != b.backend())
    fail(ErrorCode::BackendMismatch, std::string(op) + ": operands use different backends");
}

std::complex<double> exact_entry_complex(const ExactMatrix& m, int i, int j) {
  if (m.entry_is_zero(i, j)) return 0;
  const CyclotomicField& F = cyclotomic_field(m.conductor());
  const BigInt* p = m.num_entry(i, j);
  std::complex<long double> acc = 0;
  for (int t = 0; t < m.degree(); ++t) {
    if (sgn(p[t]) == 0) continue;
    long double c = Rational(p[t], m.den()).get_d();
    acc += c * std::complex<long double>(F.roots[t].real(), F.roots[t].imag());
  }
  return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

}  // namespace

SqMatrix SqMatrix::identity(int dim, Backend backend) {
  if (backend == Backend::Exact) return ExactMatrix::identity(dim);
  return ApproxMatrix::identity(dim);
}

SqMatrix SqMatrix::zero(int dim, Backend backend) {
  if (backend == Backend::Exact) return ExactMatrix(dim, 1);
  return ApproxMatrix(dim);
}

SqMatrix SqMatrix::from_entries(int dim, const std::vector<Scalar>& entries, Backend backend) {
  if (entries.size() != static_cast<std::size_t>(dim) * dim)
    fail(ErrorCode::DimensionMismatch, "entry count does not match dimension");
  if (backend == Backend::Exact) {
    std::vector<CycNum> exact;
    exact.reserve(entries.size());
    for (const Scalar& s : entries) exact.push_back(s.exact());
    return ExactMatrix::from_entries(dim, exact);
  }
  ApproxMatrix m(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) m(i, j) = entries[static_cast<std::size_t>(i) * dim + j].to_complex();
  return m;
}

int SqMatrix::dim() const {
  return std::visit([](const auto& m) { return m.dim(); }, m_);
}

const ExactMatrix& SqMatrix::exact() const {
  if (auto* p = std::get_if<ExactMatrix>(&m_)) return *p;
  fail(ErrorCode::BackendMismatch, "operation requires the exact backend");
}

const ApproxMatrix& SqMatrix::approx() const {
  if (auto* p = std::get_if<ApproxMatrix>(&m_)) return *p;
  fail(ErrorCode::BackendMismatch, "operation requires the approx backend");
}

SqMatrix SqMatrix::to_backend(Backend backend) const {
  if (backend == this->backend()) return *this;
  if (backend == Backend::Exact)
    fail(ErrorCode::BackendMismatch, "cannot convert an approximate matrix to the exact backend");
  const ExactMatrix& e = exact();
  ApproxMatrix m(e.dim());
  for (int i = 0; i < e.dim(); ++i)
    for (int j = 0; j < e.dim(); ++j) m(i, j) = exact_entry_complex(e, i, j);
  return m;
}

Scalar SqMatrix::entry(int i, int j) const {
  if (is_exact()) return exact().entry(i, j);
  return approx()(i, j);
}

Scalar SqMatrix::trace() const {
  if (is_exact()) return exact().trace();
  return approx().trace();
}

SqMatrix SqMatrix::adjoint() const {
  return std::visit([](const auto& m) { return SqMatrix(m.adjoint()); }, m_);
}

SqMatrix SqMatrix::scaled(const Scalar& c) const {
  if (is_exact()) {
    if (!c.is_exact()) fail(ErrorCode::BackendMismatch, "approximate scalar applied to exact matrix");
    return exact().scaled(c.exact());
  }
  return approx().scaled(c.to_complex());
}

SqMatrix SqMatrix::pow(long e) const {
  if (e < 0) fail(ErrorCode::InvalidArgument, "negative matrix power");
  SqMatrix result = identity(dim(), backend()), base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

bool SqMatrix::is_zero(double tol) const {
  if (is_exact()) return exact().is_zero();
  return approx().max_abs() < tol;
}

bool SqMatrix::is_identity(double tol) const { return equals(identity(dim(), backend()), tol); }

std::optional<Scalar> SqMatrix::scalar_value(double tol) const {
  if (is_exact()) {
    auto v = exact().scalar_value();
    if (!v) return std::nullopt;
    return Scalar(*v);
  }
  const ApproxMatrix& a = approx();
  const std::complex<double> d0 = a(0, 0);
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) {
      const std::complex<double> expect = i == j ? d0 : 0.0;
      if (std::abs(a(i, j) - expect) >= tol) return std::nullopt;
    }
  return Scalar(d0);
}

bool SqMatrix::equals(const SqMatrix& other, double tol) const {
  if (dim() != other.dim()) return false;
  if (is_exact() && other.is_exact()) return exact() == other.exact();
  const ApproxMatrix a = to_backend(Backend::Approx).approx();
  const ApproxMatrix b = other.to_backend(Backend::Approx).approx();
  return (a - b).max_abs() < tol;
}

SqMatrix operator+(const SqMatrix& a, const SqMatrix& b) {
  require_same_backend(a, b, "add");
  if (a.is_exact()) return a.exact() + b.exact();
  return a.approx() + b.approx();
}

SqMatrix operator-(const SqMatrix& a, const SqMatrix& b) {
  require_same_backend(a, b, "subtract");
  if (a.is_exact()) return a.exact() - b.exact();
  return a.approx() - b.approx();
}

SqMatrix operator*(const SqMatrix& a, const SqMatrix& b) {
  require_same_backend(a, b, "multiply");
  if (a.is_exact()) return a.exact() * b.exact();
  return a.approx() * b.approx();
}

SqMatrix kron(const SqMatrix& a, const SqMatrix& b) {
  require_same_backend(a, b, "kron");
  if (a.is_exact()) return kron(a.exact(), b.exact());
  return kron(a.approx(), b.approx());
}

namespace {

long long int_pow(int base, int e) {
  long long r = 1;
  for (int k = 0; k < e; ++k) {
    r *= base;
    if (r > 200000) fail(ErrorCode::InvalidArgument, "tensor power dimension too large");
  }
  return r;
}

}  // namespace

SqMatrix place(const SqMatrix& a, int first, int width, int slots, int d) {
  if (d < 1 || width < 1 || first < 0 || first + width > slots)
    fail(ErrorCode::InvalidArgument, "slot placement out of range");
  if (int_pow(d, width) != a.dim())
    fail(ErrorCode::DimensionMismatch, "operator dimension " + std::to_string(a.dim()) +
                                           " is not d^" + std::to_string(width));
  const int left = static_cast<int>(int_pow(d, first));
  const int right = static_cast<int>(int_pow(d, slots - first - width));
  if (a.is_exact()) return ExactMatrix::kron_identity(left, a.exact(), right);
  return ApproxMatrix::kron_identity(left, a.approx(), right);
}

SqMatrix amplify(const SqMatrix& r, int i, int n, int d) {
  if (n < 2) fail(ErrorCode::InvalidArgument, "amplify: n must be >= 2");
  if (i < 1 || i > n - 1)
    fail(ErrorCode::InvalidArgument, "amplify: index " + std::to_string(i) + " out of range 1.." +
                                         std::to_string(n - 1));
  if (static_cast<long long>(d) * d != r.dim())
    fail(ErrorCode::DimensionMismatch, "amplify: matrix dimension " + std::to_string(r.dim()) +
                                           " is not d^2 for d = " + std::to_string(d));
  return place(r, i - 1, 2, n, d);
}

bool is_unitary(const SqMatrix& a, double tol) { return (a * a.adjoint()).is_identity(tol); }

bool annihilator_check(const SqMatrix& a, const std::vector<Scalar>& roots, double tol) {
  const SqMatrix id = SqMatrix::identity(a.dim(), a.backend());
  SqMatrix p = id;
  for (const Scalar& r : roots) p = p * (a - id.scaled(r));
  return p.is_zero(tol);
}

namespace {

// Gauss-Jordan solve of a small dense system over CycNum.
std::vector<CycNum> solve_cyc(std::vector<CycNum> A, std::vector<CycNum> b, int n) {
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!A[r * n + col].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) fail(ErrorCode::NotInvertible, "singular linear system");
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(A[piv * n + j], A[col * n + j]);
      std::swap(b[piv], b[col]);
    }
    const CycNum inv = A[col * n + col].inv();
    for (int j = col; j < n; ++j) A[col * n + j] *= inv;
    b[col] *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == col || A[r * n + col].is_zero()) continue;
      const CycNum f = A[r * n + col];
      for (int j = col; j < n; ++j)
        if (!A[col * n + j].is_zero()) A[r * n + j] -= f * A[col * n + j];
      b[r] -= f * b[col];
    }
  }
  return b;
}

std::vector<std::complex<double>> solve_complex(std::vector<std::complex<double>> A,
                                                std::vector<std::complex<double>> b, int n,
                                                double tol) {
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(A[r * n + col]) > std::abs(A[piv * n + col])) piv = r;
    if (std::abs(A[piv * n + col]) < tol) fail(ErrorCode::NotInvertible, "singular linear system");
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(A[piv * n + j], A[col * n + j]);
      std::swap(b[piv], b[col]);
    }
    const auto inv = 1.0 / A[col * n + col];
    for (int j = col; j < n; ++j) A[col * n + j] *= inv;
    b[col] *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const auto f = A[r * n + col];
      if (f == 0.0) continue;
      for (int j = col; j < n; ++j) A[r * n + j] -= f * A[col * n + j];
      b[r] -= f * b[col];
    }
  }
  return b;
}

}  // namespace

std::vector<long> spectrum_multiplicities(const SqMatrix& a, const std::vector<Scalar>& roots,
                                          double tol) {
  const int m = static_cast<int>(roots.size());
  if (m == 0) fail(ErrorCode::InvalidArgument, "spectrum_multiplicities: no roots given");
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (roots[i].equals(roots[j], tol))
        fail(ErrorCode::NotInvertible, "spectrum_multiplicities: duplicate roots (singular Vandermonde)");

  std::vector<Scalar> traces;
  SqMatrix power = SqMatrix::identity(a.dim(), a.backend());
  for (int k = 0; k < m; ++k) {
    traces.push_back(power.trace());
    if (k + 1 < m) power = power * a;
  }
  std::vector<long> out(m);
  if (a.is_exact()) {
    std::vector<CycNum> V(static_cast<std::size_t>(m) * m), t(m);
    for (int k = 0; k < m; ++k) {
      t[k] = traces[k].exact();
      for (int j = 0; j < m; ++j) V[k * m + j] = roots[j].exact().pow(k);
    }
    std::vector<CycNum> x = solve_cyc(std::move(V), std::move(t), m);
    for (int j = 0; j < m; ++j) {
      auto v = x[j].as_integer();
      if (!v || !v->fits_slong_p())
        fail(ErrorCode::InvalidArgument, "trace system has non-integral solution " + x[j].to_literal());
      out[j] = v->get_si();
    }
    return out;
  }
  std::vector<std::complex<double>> V(static_cast<std::size_t>(m) * m), t(m);
  for (int k = 0; k < m; ++k) {
    t[k] = traces[k].to_complex();
    for (int j = 0; j < m; ++j) V[k * m + j] = std::pow(roots[j].to_complex(), k);
  }
  auto x = solve_complex(std::move(V), std::move(t), m, 1e-14);
  for (int j = 0; j < m; ++j) {
    const double r = std::round(x[j].real());
    if (std::abs(x[j] - r) > 1e-6 * std::max(1.0, std::abs(r)))
      fail(ErrorCode::InvalidArgument, "trace system has non-integral solution " + format_complex(x[j]));
    out[j] = static_cast<long>(r);
  }
  return out;
}

SqMatrix inverse(const SqMatrix& a, double tol) {
  const SqMatrix adj = a.adjoint();
  if ((a * adj).is_identity(tol)) return adj;
  const int n = a.dim();
  if (a.is_exact()) {
    // Gauss-Jordan on [A | I] over CycNum.
    std::vector<CycNum> A(static_cast<std::size_t>(n) * n), X(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) A[i * n + j] = a.exact().entry(i, j);
      X[i * n + i] = 1;
    }
    for (int col = 0; col < n; ++col) {
      int piv = -1;
      for (int r = col; r < n; ++r)
        if (!A[r * n + col].is_zero()) {
          piv = r;
          break;
        }
      if (piv < 0) fail(ErrorCode::NotInvertible, "matrix is singular");
      if (piv != col)
        for (int j = 0; j < n; ++j) {
          std::swap(A[piv * n + j], A[col * n + j]);
          std::swap(X[piv * n + j], X[col * n + j]);
        }
      const CycNum inv = A[col * n + col].inv();
      for (int j = 0; j < n; ++j) {
        if (!A[col * n + j].is_zero()) A[col * n + j] *= inv;
        if (!X[col * n + j].is_zero()) X[col * n + j] *= inv;
      }
      for (int r = 0; r < n; ++r) {
        if (r == col || A[r * n + col].is_zero()) continue;
        const CycNum f = A[r * n + col];
        for (int j = 0; j < n; ++j) {
          if (!A[col * n + j].is_zero()) A[r * n + j] -= f * A[col * n + j];
          if (!X[col * n + j].is_zero()) X[r * n + j] -= f * X[col * n + j];
        }
      }
    }
    return ExactMatrix::from_entries(n, X);
  }
  std::vector<std::complex<double>> A(a.approx().data());
  ApproxMatrix X = ApproxMatrix::identity(n);
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(A[r * n + col]) > std::abs(A[piv * n + col])) piv = r;
    if (std::abs(A[piv * n + col]) < tol) fail(ErrorCode::NotInvertible, "matrix is singular");
    if (piv != col)
      for (int j = 0; j < n; ++j) {
        std::swap(A[piv * n + j], A[col * n + j]);
        std::swap(X(piv, j), X(col, j));
      }
    const auto inv = 1.0 / A[col * n + col];
    for (int j = 0; j < n; ++j) {
      A[col * n + j] *= inv;
      X(col, j) *= inv;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const auto f = A[r * n + col];
      if (f == 0.0) continue;
      for (int j = 0; j < n; ++j) {
        A[r * n + j] -= f * A[col * n + j];
        X(r, j) -= f * X(col, j);
      }
    }
  }
  return X;
}

bool is_invertible(const SqMatrix& a, double tol) {
  try {
    inverse(a, tol);
    return true;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotInvertible) return false;
    throw;
  }
}

// JSON ----------------------------------------------------------------------------

SqMatrix matrix_from_json(const nlohmann::json& j, std::optional<Backend> backend_override) {
  try {
    if (!j.is_object()) fail(ErrorCode::ParseError, "matrix JSON must be an object");
    const Backend backend = parse_backend(j.value("backend", std::string("exact")));
    const auto& rows = j.at("entries");
    if (!rows.is_array() || rows.empty()) fail(ErrorCode::ParseError, "'entries' must be a non-empty array");
    const int dim = j.contains("dim") ? j.at("dim").get<int>() : static_cast<int>(rows.size());
    if (dim < 1 || rows.size() != static_cast<std::size_t>(dim))
      fail(ErrorCode::ParseError, "'entries' must have 'dim' rows");
    std::vector<Scalar> entries;
    entries.reserve(static_cast<std::size_t>(dim) * dim);
    for (const auto& row : rows) {
      if (!row.is_array() || row.size() != static_cast<std::size_t>(dim))
        fail(ErrorCode::ParseError, "every row of 'entries' must have 'dim' entries");
      for (const auto& v : row) {
        if (v.is_string()) {
          entries.push_back(Scalar::parse(v.get<std::string>(), backend));
        } else if (v.is_number_integer()) {
          entries.push_back(Scalar(CycNum(v.get<long>())));
        } else if (v.is_number() && backend == Backend::Approx) {
          entries.push_back(Scalar(std::complex<double>(v.get<double>(), 0)));
        } else {
          fail(ErrorCode::ParseError, "unsupported matrix entry " + v.dump());
        }
      }
    }
    SqMatrix m = SqMatrix::from_entries(dim, entries, backend);
    if (backend_override) m = m.to_backend(*backend_override);
    return m;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ParseError, std::string("malformed matrix JSON: ") + e.what());
  }
}

nlohmann::json matrix_to_json(const SqMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < m.dim(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < m.dim(); ++j) row.push_back(m.entry(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return {{"dim", m.dim()}, {"backend", to_string(m.backend())}, {"entries", std::move(rows)}};
}

}  // namespace braidloc
