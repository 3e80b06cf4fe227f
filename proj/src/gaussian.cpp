#include "braidloc/gaussian.hpp"

#include <algorithm>

#include "braidloc/error.hpp"

namespace braidloc::gaussian {

namespace {

long mod(long a, long p) { return ((a % p) + p) % p; }

void require_params(int p, int omega_exponent) {
  if (!is_odd_prime(p)) fail(ErrorCode::InvalidArgument, "p must be an odd prime, got " + std::to_string(p));
  if (mod(omega_exponent, p) == 0)
    fail(ErrorCode::InvalidArgument, "omega exponent must be coprime to p");
}

long ipow(long b, int e) {
  long r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

bool is_odd_prime(long p) {
  if (p < 3 || p % 2 == 0) return false;
  for (long q = 3; q * q <= p; q += 2)
    if (p % q == 0) return false;
  return true;
}

ESRep es_rep(int p, int n, int omega_exponent) {
  require_params(p, omega_exponent);
  if (n < 2) fail(ErrorCode::InvalidArgument, "ES representation needs n >= 2");
  const int g = n - 1;
  if (ipow(p, g) > 20000) fail(ErrorCode::InvalidArgument, "p^(n-1) exceeds 20000");
  const int dim = static_cast<int>(ipow(p, g));
  ESRep out;
  out.p = p;
  out.omega_exponent = static_cast<int>(mod(omega_exponent, p));
  out.omega = CycNum::zeta(p, out.omega_exponent);
  out.n = n;
  // monomial index: sum a_i p^(i-1); u_i passes u_1..u_{i-2} freely and
  // u_{i-1}^a with u_i u_{i-1}^a = omega^{2a} u_{i-1}^a u_i
  std::vector<long> stride(g);
  for (int i = 0; i < g; ++i) stride[i] = ipow(p, i);
  for (int i = 0; i < g; ++i) {
    std::vector<CycNum> entries(static_cast<std::size_t>(dim) * dim);
    for (long col = 0; col < dim; ++col) {
      const long ai = col / stride[i] % p;
      const long prev = i > 0 ? col / stride[i - 1] % p : 0;
      const long row = col + (ai == p - 1 ? -(p - 1) : 1) * stride[i];
      entries[static_cast<std::size_t>(row) * dim + col] = CycNum::zeta(p, mod(2 * prev * out.omega_exponent, p));
    }
    out.u.emplace_back(ExactMatrix::from_entries(dim, entries));
  }
  if (!check_es_relations(out.u, p, out.omega))
    fail(ErrorCode::Internal, "ES relations fail in the regular representation");
  return out;
}

bool check_es_relations(const std::vector<SqMatrix>& u, int p, const CycNum& omega) {
  const int g = static_cast<int>(u.size());
  const CycNum w2 = omega.pow(-2);
  for (int i = 0; i < g; ++i) {
    if (!u[i].pow(p).is_identity()) return false;
    if (i + 1 < g && !(u[i] * u[i + 1]).equals((u[i + 1] * u[i]).scaled(w2))) return false;
    for (int j = i + 2; j < g; ++j)
      if (!(u[i] * u[j]).equals(u[j] * u[i])) return false;
  }
  return true;
}

CycNum gauss_sum(int p, int omega_exponent) {
  require_params(p, omega_exponent);
  CycNum g;
  for (long j = 0; j < p; ++j) g += CycNum::zeta(p, mod(j * j * omega_exponent, p));
  return g;
}

CycNum auto_zeta(int p, int omega_exponent) {
  return gauss_sum(p, omega_exponent).conj() / CycNum(static_cast<long>(p));
}

SqMatrix gaussian_element(const SqMatrix& x, int p, const CycNum& omega, const CycNum& zeta) {
  SqMatrix sum = SqMatrix::zero(x.dim(), x.backend());
  SqMatrix power = SqMatrix::identity(x.dim(), x.backend());
  for (long j = 0; j < p; ++j) {
    if (j > 0) power = power * x;
    sum = sum + power.scaled(omega.pow(j * j));
  }
  return sum.scaled(zeta);
}

namespace {

CycNum checked_zeta(int p, int omega_exponent, const std::optional<CycNum>& zeta) {
  if (!zeta) return auto_zeta(p, omega_exponent);
  if (zeta->abs2() != CycNum(Rational(1, p)))
    fail(ErrorCode::InvalidArgument, "normalization zeta must satisfy |zeta|^2 = 1/p");
  return *zeta;
}

}  // namespace

braid::RepSpec gaussian_rep(const ESRep& es, const std::optional<CycNum>& zeta) {
  const CycNum z = checked_zeta(es.p, es.omega_exponent, zeta);
  std::vector<SqMatrix> gens;
  for (const auto& u : es.u) {
    gens.push_back(gaussian_element(u, es.p, es.omega, z));
    if (!is_unitary(gens.back())) fail(ErrorCode::Internal, "Gaussian generator is not unitary");
  }
  braid::RepSpec rep = braid::rep_from_generators(es.n, std::move(gens));
  if (!braid::check_braid_relations(rep)) fail(ErrorCode::Internal, "Gaussian generators violate the braid relations");
  return rep;
}

SqMatrix local_u(int p, int omega_exponent) {
  require_params(p, omega_exponent);
  const int dim = p * p;
  std::vector<CycNum> entries(static_cast<std::size_t>(dim) * dim);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) {
      const int col = i * p + j, row = ((i + 1) % p) * p + (j + 1) % p;
      entries[static_cast<std::size_t>(row) * dim + col] = CycNum::zeta(p, mod((i - j) * omega_exponent, p));
    }
  SqMatrix u = ExactMatrix::from_entries(dim, entries);
  if (!u.pow(p).is_identity() || !is_unitary(u)) fail(ErrorCode::Internal, "U^p = I or unitarity fails");
  return u;
}

std::vector<SqMatrix> localized_u(int p, int n, int omega_exponent) {
  if (n < 2) fail(ErrorCode::InvalidArgument, "localized form needs n >= 2");
  const SqMatrix u = local_u(p, omega_exponent);
  std::vector<SqMatrix> out;
  for (int i = 0; i + 1 < n; ++i) out.push_back(place(u, i, 2, n, p));
  return out;
}

ybe::RMatrixSpec local_r(int p, const std::optional<CycNum>& zeta, int omega_exponent) {
  const CycNum z = checked_zeta(p, omega_exponent, zeta);
  const CycNum omega = CycNum::zeta(p, mod(omega_exponent, p));
  const SqMatrix u = local_u(p, omega_exponent);
  // far-apart U_i act on disjoint slots, so three slots cover every relation
  if (!check_es_relations(localized_u(p, 3, omega_exponent), p, omega))
    fail(ErrorCode::Internal, "U_i violate the ES relations");
  SqMatrix r = gaussian_element(u, p, omega, z);
  if (!is_unitary(r)) fail(ErrorCode::Internal, "localizing R-matrix is not unitary");
  if (!ybe::check_ybe(r, p)) fail(ErrorCode::YbeFailure, "localizing R-matrix fails the YBE");
  return ybe::make_spec(std::move(r), p);
}

TraceCriterion trace_criterion(int p, int n, int omega_exponent) {
  require_params(p, omega_exponent);
  if (n < 2) fail(ErrorCode::InvalidArgument, "trace criterion needs n >= 2");
  const int g = n - 1;
  if (ipow(p, 2 * n - 1) > 50'000'000L) fail(ErrorCode::InvalidArgument, "trace criterion too large");
  const long slots_dim = ipow(p, n), monos = ipow(p, g);
  TraceCriterion out;
  out.identity_trace = BigInt(static_cast<unsigned long>(slots_dim));
  std::vector<int> digits(n), a(g);
  std::vector<long> phase_count(p);
  for (long mono = 1; mono < monos; ++mono) {
    for (int i = 0, rest = static_cast<int>(mono); i < g; ++i, rest /= p) a[i] = rest % p;
    std::fill(phase_count.begin(), phase_count.end(), 0);
    for (long basis = 0; basis < slots_dim; ++basis) {
      for (int s = 0, rest = static_cast<int>(basis); s < n; ++s, rest /= p) digits[s] = rest % p;
      const std::vector<int> start = digits;
      long phase = 0;
      // rightmost factor acts first; U on slots (s, s+1) sends (x, y) to (x+1, y+1) with omega^{x-y}
      for (int i = g - 1; i >= 0; --i)
        for (int t = 0; t < a[i]; ++t) {
          phase += digits[i] - digits[i + 1];
          digits[i] = (digits[i] + 1) % p;
          digits[i + 1] = (digits[i + 1] + 1) % p;
        }
      if (digits == start) ++phase_count[mod(phase * omega_exponent, p)];
    }
    ++out.monomials;
    // sum_c count[c] omega^c vanishes iff all counts agree
    if (!std::all_of(phase_count.begin(), phase_count.end(), [&](long c) { return c == phase_count[0]; }))
      ++out.nonzero_traces;
  }
  out.passed = out.nonzero_traces == 0;
  return out;
}

}  // namespace braidloc::gaussian
