#pragma once

// Temperley-Lieb idempotents in the image of an R-matrix, Jones-Wenzl
// projectors, and the dimension and multiplicity arithmetic of the
// level-truncated sl2 tower.

#include <optional>
#include <string>
#include <vector>

#include "braidloc/cyclo.hpp"
#include "braidloc/matrix.hpp"
#include "braidloc/yang_baxter.hpp"

namespace braidloc::tl {

/// Idempotents E_1..E_{n-1} on (C^d)^{(x) n} with E_i E_{i+-1} E_i = delta_inv_sq E_i.
struct TLImage {
  int n = 2;
  int d = 1;
  Scalar q;                            // the non-(-1) eigenvalue of R
  std::optional<Scalar> delta_inv_sq;  // unset when E_1 E_2 E_1 is not a multiple of E_1
  std::vector<SqMatrix> E;
};

/// E_i = (R_i + I)/(q_ev + 1). Fails with NotIdempotent when the local E is
/// not idempotent, i.e. when R has eigenvalues outside {-1, q_ev}.
TLImage tl_from_r(const ybe::RMatrixSpec& r, int n, const Scalar& q_ev, double tol = kDefaultTolerance);

/// E_i^2 = E_i, E_i E_{i+-1} E_i = delta_inv_sq E_i and far commutation.
bool check_tl_relations(const TLImage& tl, double tol = kDefaultTolerance);

struct JWProjector {
  int k = 1;
  SqMatrix matrix;
};

/// p_1 = I, p_{j+1} = p_j - c_j p_j E_j p_j with c_1 = 1 and
/// c_j = 1/(1 - delta_inv_sq c_{j-1}), which is [2][j]/[j+1] in quantum
/// integers. When `q_hat` is given, delta_inv_sq must equal 1/[2]^2 at q_hat
/// and the coefficients are also computed from quantum integers and compared.
/// Returns p_1..p_k; each is checked to be idempotent and killed by E_i, i < j.
/// Throws VanishingQuantumInteger when a coefficient is undefined before level k.
std::vector<JWProjector> jones_wenzl_sequence(const TLImage& tl, int k, const std::optional<Scalar>& q_hat = {},
                                              double tol = kDefaultTolerance);
JWProjector jones_wenzl(const TLImage& tl, int k, const std::optional<Scalar>& q_hat = {},
                        double tol = kDefaultTolerance);

/// Quantum integer [j] = (q^j - q^-j)/(q - q^-1).
Scalar quantum_integer(const Scalar& q, int j);

/// Dimension of the common kernel of E_1..E_{k-1}, computed in double
/// precision from the Hermitian sum of E_i^* E_i. The image of p_k is this
/// kernel, so it equals the trace of p_k.
int common_kernel_dim(const TLImage& tl, int k, double tol = 1e-8);

struct LabeledVector {
  std::vector<std::string> labels;
  std::vector<BigInt> values;
};

/// Dimensions of the simple modules of the semisimple TL quotient on n strands
/// at a 2*ell-th root of unity, by path counting in the Bratteli diagram of
/// tensor powers of X in sl2 at level ell - 2.
LabeledVector simple_dims(int ell, int n);

/// Frobenius-Perron dimension [a+1] of the weight-a simple of sl2 at level ell - 2.
CycNum sl2_fpdim(int ell, int weight);

/// The unique vector proportional to the FP dimensions of the level-n labels
/// with <mu, dims> = m^n, when its entries are positive integers.
std::optional<LabeledVector> multiplicity_solve(int ell, int n, long m);

}  // namespace braidloc::tl
