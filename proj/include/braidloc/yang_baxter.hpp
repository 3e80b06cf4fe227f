#pragma once

// Yang-Baxter equation checks and projective order probing.

#include <optional>

#include "braidloc/matrix.hpp"

namespace braidloc::ybe {

/// A braided vector space: local dimension d and an operator on C^d (x) C^d.
struct RMatrixSpec {
  int local_dim = 0;
  SqMatrix matrix;
};

/// Builds a spec after checking dim = d^2 and invertibility. d = 0 infers d
/// from the dimension.
RMatrixSpec make_spec(SqMatrix matrix, int d = 0, double tol = kDefaultTolerance);

/// (R x I)(I x R)(R x I) = (I x R)(R x I)(I x R) on (C^d)^{(x)3}.
bool check_ybe(const SqMatrix& r, int d, double tol = kDefaultTolerance);

struct GybeResult {
  bool gybe = false;
  /// Only computed when the relation itself holds.
  std::optional<bool> far_commutation;
};

/// Generalized relation for R acting on k slots with shift m:
/// (R x Id_m)(Id_m x R)(R x Id_m) = (Id_m x R)(R x Id_m)(Id_m x R).
/// Copies of R placed at slot offsets differing by t*m (t >= 2) must also
/// commute; only overlapping placements (t*m < k) are nontrivial.
GybeResult check_gybe(const SqMatrix& r, int d, int k, int m, double tol = kDefaultTolerance);

struct OrderResult {
  enum class Status { Finite, ExceedsBound };
  Status status = Status::ExceedsBound;
  long order = 0;  // valid when Finite
};

/// Smallest k <= bound with A^k a scalar multiple of I.
///
/// Exact backend: powers are screened through reductions of the numerator
/// matrix modulo two large primes splitting the conductor (a scalar power
/// stays scalar under any ring homomorphism), and every candidate surviving
/// the screen is confirmed by exact computation. The answer is exact.
OrderResult projective_order(const SqMatrix& a, long bound, double tol = kDefaultTolerance);

}  // namespace braidloc::ybe
