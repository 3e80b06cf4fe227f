#pragma once

// The algebra ES(omega, n-1) with u_i^p = 1, u_i u_{i+1} = omega^-2 u_{i+1} u_i
// and far commutation, the Gaussian braid representation through it, and its
// localization by a p^2 x p^2 R-matrix.

#include <optional>
#include <vector>

#include "braidloc/braid_rep.hpp"
#include "braidloc/cyclo.hpp"
#include "braidloc/matrix.hpp"
#include "braidloc/yang_baxter.hpp"

namespace braidloc::gaussian {

struct ESRep {
  int p = 3;
  int omega_exponent = 1;
  CycNum omega;  // zeta_p^omega_exponent
  int n = 2;
  std::vector<SqMatrix> u;  // left-regular images of u_1..u_{n-1}, dimension p^{n-1}
};

bool is_odd_prime(long p);

/// Left-regular representation on the normal-form monomials
/// u_1^{a_1}...u_{n-1}^{a_{n-1}}; the defining relations are asserted.
ESRep es_rep(int p, int n, int omega_exponent = 1);

/// u_i^p = I, u_i u_{i+1} = omega^-2 u_{i+1} u_i, u_i u_j = u_j u_i for |i-j| > 1.
bool check_es_relations(const std::vector<SqMatrix>& u, int p, const CycNum& omega);

/// Gauss sum sum_j omega^{j^2}.
CycNum gauss_sum(int p, int omega_exponent = 1);
/// conj(g)/p, the normalization that makes every generator unitary.
CycNum auto_zeta(int p, int omega_exponent = 1);

/// zeta sum_j omega^{j^2} x^j.
SqMatrix gaussian_element(const SqMatrix& x, int p, const CycNum& omega, const CycNum& zeta);

/// sigma_i -> zeta sum_j omega^{j^2} u_i^j. A given zeta must satisfy
/// |zeta|^2 = 1/p. Unitarity and the braid relations are asserted.
braid::RepSpec gaussian_rep(const ESRep& es, const std::optional<CycNum>& zeta = {});

/// U(b_i (x) b_j) = omega^{i-j} b_{i+1} (x) b_{j+1} on C^p (x) C^p.
SqMatrix local_u(int p, int omega_exponent = 1);

/// R = zeta sum_j omega^{j^2} U^j. Unitarity, the YBE and the relations of
/// u_i -> U_i on three slots are asserted.
ybe::RMatrixSpec local_r(int p, const std::optional<CycNum>& zeta = {}, int omega_exponent = 1);

/// Images U_i = I (x) U (x) I of u_1..u_{n-1} on (C^p)^{(x) n}.
std::vector<SqMatrix> localized_u(int p, int n, int omega_exponent = 1);

struct TraceCriterion {
  bool passed = false;
  long monomials = 0;        // non-identity normal-form monomials checked
  long nonzero_traces = 0;   // among them, monomials with nonzero trace
  BigInt identity_trace;     // trace of the identity, p^n
};
/// Traces of all normal-form monomials U_1^{a_1}...U_{n-1}^{a_{n-1}} on
/// (C^p)^{(x) n}: zero for every non-identity monomial. Since the monomials
/// span ES(omega, n-1), this makes u_i -> U_i faithful.
TraceCriterion trace_criterion(int p, int n, int omega_exponent = 1);

}  // namespace braidloc::gaussian
