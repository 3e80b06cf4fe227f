#pragma once

// Dense square matrices over the exact (cyclotomic) or approximate (complex
// double) backend, with the tensor-product helpers used by every module.

#include <complex>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "braidloc/cyclo.hpp"

namespace braidloc {

/// Exact matrix over Q(zeta_M): integer numerator polynomials (power basis of
/// Q(zeta_M), `degree` coefficients per entry) over one positive common
/// denominator. The pair is kept content-reduced, so for a fixed conductor
/// the representation of a value is unique.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(int dim, int conductor);  // zero matrix

  static ExactMatrix identity(int dim);
  static ExactMatrix from_entries(int dim, const std::vector<CycNum>& entries);

  int dim() const { return dim_; }
  int conductor() const { return conductor_; }
  int degree() const { return degree_; }
  const BigInt& den() const { return den_; }
  const std::vector<BigInt>& num() const { return num_; }
  const BigInt* num_entry(int i, int j) const {
    return num_.data() + (static_cast<std::size_t>(i) * dim_ + j) * degree_;
  }

  CycNum entry(int i, int j) const;
  bool entry_is_zero(int i, int j) const;
  CycNum trace() const;

  /// Same values, coefficients expressed in Q(zeta_M); conductor() must divide M.
  ExactMatrix embedded(int M) const;

  ExactMatrix adjoint() const;
  ExactMatrix transpose() const;
  ExactMatrix scaled(const CycNum& c) const;
  bool is_zero() const;
  /// The scalar c with A = c I, if there is one.
  std::optional<CycNum> scalar_value() const;

  friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);

  /// I_left (x) A (x) I_right, built by copying.
  static ExactMatrix kron_identity(int left, const ExactMatrix& a, int right);
  friend ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b);

  /// Removes the common content of numerators and denominator.
  void normalize();

 private:
  friend struct ExactMatrixAccess;
  int dim_ = 0;
  int conductor_ = 1;
  int degree_ = 1;
  std::vector<BigInt> num_;
  BigInt den_ = 1;
};

/// Matrix of complex doubles.
class ApproxMatrix {
 public:
  ApproxMatrix() = default;
  explicit ApproxMatrix(int dim) : dim_(dim), a_(static_cast<std::size_t>(dim) * dim) {}

  static ApproxMatrix identity(int dim);

  int dim() const { return dim_; }
  std::complex<double>& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * dim_ + j]; }
  const std::complex<double>& operator()(int i, int j) const {
    return a_[static_cast<std::size_t>(i) * dim_ + j];
  }
  const std::vector<std::complex<double>>& data() const { return a_; }

  ApproxMatrix adjoint() const;
  std::complex<double> trace() const;
  double max_abs() const;

  friend ApproxMatrix operator+(const ApproxMatrix& a, const ApproxMatrix& b);
  friend ApproxMatrix operator-(const ApproxMatrix& a, const ApproxMatrix& b);
  friend ApproxMatrix operator*(const ApproxMatrix& a, const ApproxMatrix& b);
  ApproxMatrix scaled(std::complex<double> c) const;

  static ApproxMatrix kron_identity(int left, const ApproxMatrix& a, int right);
  friend ApproxMatrix kron(const ApproxMatrix& a, const ApproxMatrix& b);

 private:
  int dim_ = 0;
  std::vector<std::complex<double>> a_;
};

/// Square matrix over one backend. All binary operations require both
/// operands to share the backend and dimension.
class SqMatrix {
 public:
  SqMatrix() = default;
  SqMatrix(ExactMatrix m) : m_(std::move(m)) {}  // NOLINT
  SqMatrix(ApproxMatrix m) : m_(std::move(m)) {}  // NOLINT

  static SqMatrix identity(int dim, Backend backend);
  static SqMatrix zero(int dim, Backend backend);
  /// Row-major entries; every entry must have the requested backend's type
  /// (exact entries are converted when backend is Approx).
  static SqMatrix from_entries(int dim, const std::vector<Scalar>& entries, Backend backend);

  Backend backend() const {
    return std::holds_alternative<ExactMatrix>(m_) ? Backend::Exact : Backend::Approx;
  }
  bool is_exact() const { return backend() == Backend::Exact; }
  int dim() const;

  const ExactMatrix& exact() const;
  const ApproxMatrix& approx() const;
  SqMatrix to_backend(Backend backend) const;

  Scalar entry(int i, int j) const;
  Scalar trace() const;

  SqMatrix adjoint() const;
  SqMatrix scaled(const Scalar& c) const;
  SqMatrix pow(long e) const;  // e >= 0

  bool is_zero(double tol = kDefaultTolerance) const;
  bool is_identity(double tol = kDefaultTolerance) const;
  std::optional<Scalar> scalar_value(double tol = kDefaultTolerance) const;
  /// Exact: literal equality. Approx (or mixed): max entry deviation < tol.
  bool equals(const SqMatrix& other, double tol = kDefaultTolerance) const;

  friend SqMatrix operator+(const SqMatrix& a, const SqMatrix& b);
  friend SqMatrix operator-(const SqMatrix& a, const SqMatrix& b);
  friend SqMatrix operator*(const SqMatrix& a, const SqMatrix& b);

 private:
  std::variant<ExactMatrix, ApproxMatrix> m_;
};

SqMatrix kron(const SqMatrix& a, const SqMatrix& b);

/// I^{(i-1)} (x) R (x) I^{(n-i-1)} on (C^d)^{(x) n}; dim(R) must be d^2.
SqMatrix amplify(const SqMatrix& r, int i, int n, int d);
/// Places an operator on `width` consecutive slots starting at slot `first`
/// (0-based) of `slots` slots of dimension d.
SqMatrix place(const SqMatrix& a, int first, int width, int slots, int d);

bool is_unitary(const SqMatrix& a, double tol = kDefaultTolerance);

/// Whether prod_r (A - r I) vanishes.
bool annihilator_check(const SqMatrix& a, const std::vector<Scalar>& roots,
                       double tol = kDefaultTolerance);
/// Eigenvalue multiplicities recovered from tr(A^k) = sum_j m_j r_j^k; only
/// meaningful when annihilator_check holds. Throws on duplicate roots or
/// non-integral solutions.
std::vector<long> spectrum_multiplicities(const SqMatrix& a, const std::vector<Scalar>& roots,
                                          double tol = kDefaultTolerance);

/// Inverse via Gauss-Jordan elimination; throws NotInvertible when singular.
SqMatrix inverse(const SqMatrix& a, double tol = kDefaultTolerance);
bool is_invertible(const SqMatrix& a, double tol = kDefaultTolerance);

/// JSON matrix format: {"dim": n, "backend": "exact"|"approx", "entries": [[...], ...]}.
/// `backend_override` converts after parsing (exact data may be read approximately).
SqMatrix matrix_from_json(const nlohmann::json& j, std::optional<Backend> backend_override = {});
nlohmann::json matrix_to_json(const SqMatrix& m);

}  // namespace braidloc
