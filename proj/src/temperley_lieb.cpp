#include "braidloc/temperley_lieb.hpp"

#include <Eigen/Dense>

#include "braidloc/error.hpp"
#include "braidloc/fusion.hpp"

namespace braidloc::tl {

namespace {

// c with a = c b, for b nonzero; nullopt when a is not a multiple of b.
std::optional<Scalar> proportionality(const SqMatrix& a, const SqMatrix& b, double tol) {
  const int n = b.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Scalar bij = b.entry(i, j);
      if (bij.is_zero(tol)) continue;
      const Scalar c = a.entry(i, j) / bij;
      if (a.equals(b.scaled(c), tol)) return c;
      return std::nullopt;
    }
  return Scalar(0L);
}

Scalar scalar_pow(const Scalar& x, int e) {
  Scalar out(1L);
  for (int i = 0; i < e; ++i) out = out * x;
  return out;
}

}  // namespace

TLImage tl_from_r(const ybe::RMatrixSpec& r, int n, const Scalar& q_ev, double tol) {
  if (n < 2) fail(ErrorCode::InvalidArgument, "TL image needs n >= 2");
  const int d = r.local_dim;
  if (!ybe::check_ybe(r.matrix, d, tol)) fail(ErrorCode::YbeFailure, "R-matrix does not satisfy the YBE");
  const Scalar denom = q_ev + Scalar(1L);
  if (denom.is_zero(tol)) fail(ErrorCode::InvalidArgument, "q_ev + 1 must be nonzero");
  const Backend backend = r.matrix.backend();
  const SqMatrix local =
      (r.matrix + SqMatrix::identity(r.matrix.dim(), backend)).scaled(Scalar(1L) / denom);
  if (!(local * local).equals(local, tol))
    fail(ErrorCode::NotIdempotent, "(R + I)/(q_ev + 1) is not idempotent");

  TLImage out;
  out.n = n;
  out.d = d;
  out.q = q_ev;
  for (int i = 1; i < n; ++i) out.E.push_back(place(local, i - 1, 2, n, d));
  // the loop parameter is read off on three strands
  const SqMatrix e1 = place(local, 0, 2, 3, d), e2 = place(local, 1, 2, 3, d);
  out.delta_inv_sq = proportionality(e1 * e2 * e1, e1, tol);
  if (out.delta_inv_sq && !(e2 * e1 * e2).equals(e2.scaled(*out.delta_inv_sq), tol))
    out.delta_inv_sq.reset();
  return out;
}

bool check_tl_relations(const TLImage& tl, double tol) {
  const int m = static_cast<int>(tl.E.size());
  for (const auto& e : tl.E)
    if (!(e * e).equals(e, tol)) return false;
  if (m >= 2 && !tl.delta_inv_sq) return false;
  for (int i = 0; i + 1 < m; ++i) {
    const SqMatrix& a = tl.E[i];
    const SqMatrix& b = tl.E[i + 1];
    if (!(a * b * a).equals(a.scaled(*tl.delta_inv_sq), tol)) return false;
    if (!(b * a * b).equals(b.scaled(*tl.delta_inv_sq), tol)) return false;
  }
  for (int i = 0; i < m; ++i)
    for (int j = i + 2; j < m; ++j)
      if (!(tl.E[i] * tl.E[j]).equals(tl.E[j] * tl.E[i], tol)) return false;
  return true;
}

Scalar quantum_integer(const Scalar& q, int j) {
  if (j < 0) fail(ErrorCode::InvalidArgument, "quantum integer index must be >= 0");
  const Scalar qinv = Scalar(1L) / q;
  const Scalar den = q - qinv;
  if (den.is_zero()) return Scalar(static_cast<long>(j));  // q = +-1 limit, up to sign
  return (scalar_pow(q, j) - scalar_pow(qinv, j)) / den;
}

std::vector<JWProjector> jones_wenzl_sequence(const TLImage& tl, int k, const std::optional<Scalar>& q_hat,
                                              double tol) {
  if (k < 1 || k > tl.n) fail(ErrorCode::InvalidArgument, "Jones-Wenzl level must satisfy 1 <= k <= n");
  if (k >= 3 && !tl.delta_inv_sq)
    fail(ErrorCode::InvalidArgument, "E_1 E_2 E_1 is not a multiple of E_1; no loop parameter");
  const Scalar beta = tl.delta_inv_sq.value_or(Scalar(0L));
  if (q_hat) {
    const Scalar two = quantum_integer(*q_hat, 2);
    if (two.is_zero(tol)) fail(ErrorCode::VanishingQuantumInteger, "[2] vanishes at the working root");
    if (k >= 3 && !(beta * two * two).equals(Scalar(1L), tol))
      fail(ErrorCode::InvalidArgument, "loop parameter is not 1/[2]^2 at the working root");
  }

  const Backend backend = tl.E.front().backend();
  const int dim = tl.E.front().dim();
  std::vector<JWProjector> out;
  out.push_back({1, SqMatrix::identity(dim, backend)});
  Scalar c(1L);
  for (int j = 1; j < k; ++j) {
    if (j > 1) {
      const Scalar den = Scalar(1L) - beta * c;
      if (den.is_zero(tol))
        fail(ErrorCode::VanishingQuantumInteger,
             "Jones-Wenzl coefficient undefined at level " + std::to_string(j + 1));
      c = Scalar(1L) / den;
    }
    if (q_hat) {
      const Scalar next = quantum_integer(*q_hat, j + 1);
      if (next.is_zero(tol))
        fail(ErrorCode::VanishingQuantumInteger, "[" + std::to_string(j + 1) + "] vanishes at the working root");
      const Scalar expected = quantum_integer(*q_hat, 2) * quantum_integer(*q_hat, j) / next;
      if (!expected.equals(c, tol))
        fail(ErrorCode::Internal, "Jones-Wenzl coefficient disagrees with quantum integers");
    }
    const SqMatrix& p = out.back().matrix;
    const SqMatrix pe = p * tl.E[j - 1];
    out.push_back({j + 1, p - (pe * p).scaled(c)});
  }

  for (const auto& jw : out) {
    const SqMatrix& p = jw.matrix;
    if (jw.k > 1 && !(p * p).equals(p, tol))
      fail(ErrorCode::Internal, "Jones-Wenzl projector p_" + std::to_string(jw.k) + " is not idempotent");
    for (int i = 0; i + 1 < jw.k; ++i)
      if (!(tl.E[i] * p).is_zero(tol) || !(p * tl.E[i]).is_zero(tol))
        fail(ErrorCode::Internal, "Jones-Wenzl projector p_" + std::to_string(jw.k) + " is not killed by E_" +
                                      std::to_string(i + 1));
  }
  return out;
}

JWProjector jones_wenzl(const TLImage& tl, int k, const std::optional<Scalar>& q_hat, double tol) {
  return jones_wenzl_sequence(tl, k, q_hat, tol).back();
}

int common_kernel_dim(const TLImage& tl, int k, double tol) {
  if (k < 1 || k > tl.n) fail(ErrorCode::InvalidArgument, "level must satisfy 1 <= k <= n");
  const int dim = tl.E.front().dim();
  Eigen::MatrixXcd gram = Eigen::MatrixXcd::Zero(dim, dim);
  for (int i = 0; i + 1 < k; ++i) {
    const ApproxMatrix a = tl.E[i].to_backend(Backend::Approx).approx();
    Eigen::MatrixXcd e(dim, dim);
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < dim; ++c) e(r, c) = a(r, c);
    gram.noalias() += e.adjoint() * e;
  }
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(gram, Eigen::EigenvaluesOnly);
  int kernel = 0;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i)
    if (std::abs(solver.eigenvalues()[i]) < tol) ++kernel;
  return kernel;
}

LabeledVector simple_dims(int ell, int n) {
  if (ell < 3) fail(ErrorCode::InvalidArgument, "simple_dims requires ell >= 3");
  if (n < 1) fail(ErrorCode::InvalidArgument, "simple_dims requires n >= 1");
  const fusion::FusionRing ring = fusion::catalog("sl2_level", ell - 2);
  const fusion::BratteliData data = fusion::bratteli(ring, ring.index_of("X"), n);
  LabeledVector out;
  for (int label : data.levels.back()) out.labels.push_back(ring.labels[label]);
  out.values = data.dims.back();
  return out;
}

CycNum sl2_fpdim(int ell, int weight) {
  if (ell < 3 || weight < 0 || weight > ell - 2) fail(ErrorCode::InvalidArgument, "weight out of range");
  return quantum_integer(Scalar(CycNum::zeta(2 * ell)), weight + 1).exact();
}

std::optional<LabeledVector> multiplicity_solve(int ell, int n, long m) {
  if (m < 1) fail(ErrorCode::InvalidArgument, "multiplicity_solve requires m >= 1");
  const fusion::FusionRing ring = fusion::catalog("sl2_level", ell - 2);
  const fusion::BratteliData data = fusion::bratteli(ring, ring.index_of("X"), n);
  const auto& level = data.levels.back();
  const auto& dims = data.dims.back();
  // in the sl2 catalog a label's index is its weight
  std::vector<CycNum> f;
  CycNum pairing;
  for (std::size_t a = 0; a < level.size(); ++a) {
    f.push_back(sl2_fpdim(ell, level[a]));
    pairing += f.back() * CycNum(Rational(dims[a]));
  }
  BigInt total = 1;
  for (int i = 0; i < n; ++i) total *= m;
  const CycNum scale = CycNum(Rational(total)) / pairing;
  LabeledVector out;
  for (std::size_t a = 0; a < level.size(); ++a) {
    const auto v = (scale * f[a]).as_integer();
    if (!v || sgn(*v) <= 0) return std::nullopt;
    out.labels.push_back(ring.labels[level[a]]);
    out.values.push_back(*v);
  }
  return out;
}

}  // namespace braidloc::tl
