#include "braidloc/yang_baxter.hpp"

#include <cmath>
#include <cstdint>

#include "braidloc/error.hpp"

namespace braidloc::ybe {

namespace {

int infer_local_dim(int dim) {
  int d = static_cast<int>(std::lround(std::sqrt(static_cast<double>(dim))));
  if (d * d != dim)
    fail(ErrorCode::DimensionMismatch, "matrix dimension " + std::to_string(dim) + " is not a perfect square");
  return d;
}

}  // namespace

RMatrixSpec make_spec(SqMatrix matrix, int d, double tol) {
  if (d == 0) d = infer_local_dim(matrix.dim());
  if (d < 1 || static_cast<long long>(d) * d != matrix.dim())
    fail(ErrorCode::DimensionMismatch, "R-matrix dimension " + std::to_string(matrix.dim()) +
                                           " is not d^2 for d = " + std::to_string(d));
  if (!is_invertible(matrix, tol)) fail(ErrorCode::NotInvertible, "R-matrix is not invertible");
  return {d, std::move(matrix)};
}

bool check_ybe(const SqMatrix& r, int d, double tol) {
  const SqMatrix r1 = amplify(r, 1, 3, d), r2 = amplify(r, 2, 3, d);
  return (r1 * r2 * r1).equals(r2 * r1 * r2, tol);
}

GybeResult check_gybe(const SqMatrix& r, int d, int k, int m, double tol) {
  if (k < 2 || m < 1) fail(ErrorCode::InvalidArgument, "gYBE requires k >= 2 and m >= 1");
  GybeResult out;
  const SqMatrix a = place(r, 0, k, k + m, d), b = place(r, m, k, k + m, d);
  out.gybe = (a * b * a).equals(b * a * b, tol);
  if (!out.gybe) return out;
  bool commute = true;
  for (int shift = 2 * m; shift < k && commute; shift += m) {
    const SqMatrix x = place(r, 0, k, k + shift, d), y = place(r, shift, k, k + shift, d);
    commute = (x * y).equals(y * x, tol);
  }
  out.far_commutation = commute;
  return out;
}

namespace {

using u64 = std::uint64_t;

u64 mulmod(u64 a, u64 b, u64 p) {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % p);
}

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> out;
  for (u64 q = 2; q * q <= n; ++q) {
    if (n % q) continue;
    out.push_back(q);
    while (n % q == 0) n /= q;
  }
  if (n > 1) out.push_back(n);
  return out;
}

// A prime p = 1 (mod M) below 2^62 (skipping `after` and smaller) together
// with a primitive M-th root of unity modulo p.
struct SplitPrime {
  u64 p;
  u64 root;
};

SplitPrime split_prime(u64 M, u64 below) {
  u64 p = (below - 1) / M * M + 1;
  if (p >= below) p -= M;
  for (;; p -= M) {
    BigInt z = static_cast<unsigned long>(p);
    if (mpz_probab_prime_p(z.get_mpz_t(), 40) == 0) continue;
    const auto factors = prime_factors(M);
    for (u64 g = 2;; ++g) {
      u64 r = powmod(g, (p - 1) / M, p);
      bool primitive = r != 0;
      for (u64 q : factors)
        if (powmod(r, M / q, p) == 1) primitive = false;
      if (primitive) return {p, r};
    }
  }
}

// Reduction of the numerator matrix of A modulo p, with zeta_M -> root.
std::vector<u64> reduce_mod(const ExactMatrix& a, const SplitPrime& sp) {
  const int n = a.dim(), D = a.degree();
  std::vector<u64> powers(D);
  powers[0] = 1;
  for (int t = 1; t < D; ++t) powers[t] = mulmod(powers[t - 1], sp.root, sp.p);
  std::vector<u64> out(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const BigInt* c = a.num_entry(i, j);
      u64 v = 0;
      for (int t = 0; t < D; ++t) {
        if (sgn(c[t]) == 0) continue;
        u64 ct = mpz_fdiv_ui(c[t].get_mpz_t(), static_cast<unsigned long>(sp.p));
        v = (v + mulmod(ct, powers[t], sp.p)) % sp.p;
      }
      out[static_cast<std::size_t>(i) * n + j] = v;
    }
  return out;
}

std::vector<u64> mul_mod(const std::vector<u64>& a, const std::vector<u64>& b, int n, u64 p) {
  std::vector<u64> c(static_cast<std::size_t>(n) * n);
  std::vector<unsigned __int128> row(n);
  for (int i = 0; i < n; ++i) {
    std::fill(row.begin(), row.end(), 0);
    for (int k = 0; k < n; ++k) {
      const u64 aik = a[static_cast<std::size_t>(i) * n + k];
      if (aik == 0) continue;
      for (int j = 0; j < n; ++j) {
        row[j] += static_cast<unsigned __int128>(aik) * b[static_cast<std::size_t>(k) * n + j];
        // keep the accumulator far from overflow
        if (row[j] >> 124) row[j] %= p;
      }
    }
    for (int j = 0; j < n; ++j) c[static_cast<std::size_t>(i) * n + j] = static_cast<u64>(row[j] % p);
  }
  return c;
}

bool is_scalar_mod(const std::vector<u64>& a, int n) {
  const u64 d0 = a[0];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (a[static_cast<std::size_t>(i) * n + j] != (i == j ? d0 : 0)) return false;
  return true;
}

OrderResult exact_order(const ExactMatrix& a, long bound) {
  if (a.is_zero()) fail(ErrorCode::NotInvertible, "projective order of the zero matrix");
  const int n = a.dim();
  const u64 M = static_cast<u64>(a.conductor());
  const SplitPrime p1 = split_prime(M, u64{1} << 62);
  const SplitPrime p2 = split_prime(M, p1.p);
  const auto a1 = reduce_mod(a, p1), a2 = reduce_mod(a, p2);
  auto pow1 = a1, pow2 = a2;
  for (long k = 1; k <= bound; ++k) {
    if (k > 1) {
      pow1 = mul_mod(pow1, a1, n, p1.p);
      pow2 = mul_mod(pow2, a2, n, p2.p);
    }
    if (!is_scalar_mod(pow1, n) || !is_scalar_mod(pow2, n)) continue;
    if (SqMatrix(a).pow(k).exact().scalar_value()) return {OrderResult::Status::Finite, k};
  }
  return {OrderResult::Status::ExceedsBound, 0};
}

OrderResult approx_order(const ApproxMatrix& a, long bound, double tol) {
  const double scale = a.max_abs();
  if (scale == 0) fail(ErrorCode::NotInvertible, "projective order of the zero matrix");
  const ApproxMatrix base = a.scaled(1.0 / scale);
  ApproxMatrix p = base;
  for (long k = 1; k <= bound; ++k) {
    if (k > 1) p = p * base;
    const double m = p.max_abs();
    if (m == 0) fail(ErrorCode::NotInvertible, "matrix power vanished");
    p = p.scaled(1.0 / m);
    if (SqMatrix(p).scalar_value(tol)) return {OrderResult::Status::Finite, k};
  }
  return {OrderResult::Status::ExceedsBound, 0};
}

}  // namespace

OrderResult projective_order(const SqMatrix& a, long bound, double tol) {
  if (bound < 1) fail(ErrorCode::InvalidArgument, "order bound must be >= 1");
  if (a.is_exact()) return exact_order(a.exact(), bound);
  return approx_order(a.approx(), bound, tol);
}

}  // namespace braidloc::ybe
