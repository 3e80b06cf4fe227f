#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_m).
//
// A CycNum stores its value in the power basis 1, z, ..., z^(phi(m)-1) of the
// smallest cyclotomic field that contains it, so two equal values always have
// identical representations. Mixed-conductor arithmetic embeds both operands
// into Q(zeta_lcm) and then descends again.

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace braidloc {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Tables shared by every element of Q(zeta_m).
struct CyclotomicField {
  int conductor = 1;
  int degree = 1;  // phi(conductor)
  std::vector<std::int64_t> modulus;  // Phi_m, constant term first, monic
  // Row k (0 <= k < conductor) holds x^k mod Phi_m, `degree` entries each.
  std::vector<std::int64_t> power_table;
  std::vector<std::complex<double>> roots;  // e^{2 pi i k / m}
  std::int64_t max_power_coeff = 1;

  const std::int64_t* power(int k) const {
    return power_table.data() + static_cast<std::size_t>(k) * degree;
  }
};

/// Returns the (cached, immutable) tables for Q(zeta_m). Thread-safe.
const CyclotomicField& cyclotomic_field(int conductor);

int euler_phi(int m);
std::vector<BigInt> cyclotomic_polynomial(int m);

/// Exact element of a cyclotomic field.
class CycNum {
 public:
  CycNum();
  CycNum(long value);  // NOLINT: integers convert implicitly
  CycNum(const Rational& value);  // NOLINT

  /// Interprets `coeffs` as a polynomial in zeta_m (any length) and returns the
  /// canonical reduced value. Throws on m < 1.
  static CycNum make(int m, std::span<const Rational> coeffs);
  /// zeta_m^k for any integer k.
  static CycNum zeta(int m, long k = 1);
  /// Parses the literal grammar, e.g. "1/2*z8^1+1/2*z8^7".
  static CycNum parse(std::string_view literal);

  int conductor() const { return conductor_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  /// Coefficients after embedding into Q(zeta_M); conductor() must divide M.
  std::vector<Rational> coeffs_in(int M) const;

  bool is_zero() const;
  bool is_rational() const { return conductor_ == 1; }
  std::optional<Rational> as_rational() const;
  std::optional<BigInt> as_integer() const;

  CycNum conj() const;
  CycNum inv() const;
  CycNum abs2() const;
  CycNum pow(long e) const;

  std::complex<double> to_complex() const;
  std::string to_literal() const;
  std::size_t hash() const;

  CycNum operator-() const;
  CycNum& operator+=(const CycNum& rhs);
  CycNum& operator-=(const CycNum& rhs);
  CycNum& operator*=(const CycNum& rhs);
  CycNum& operator/=(const CycNum& rhs);

  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
  friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }
  friend bool operator==(const CycNum& a, const CycNum& b);
  friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

  /// Builds a value from reduced coefficients in Q(zeta_m) and descends to
  /// the minimal conductor.
  static CycNum from_reduced(int m, std::vector<Rational> reduced);

 private:
  int conductor_ = 1;
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const CycNum& x);

enum class Backend { Exact, Approx };

inline constexpr double kDefaultTolerance = 1e-9;

const char* to_string(Backend backend) noexcept;
Backend parse_backend(std::string_view name);

/// Matrix entry: exact cyclotomic value or a complex double.
class Scalar {
 public:
  Scalar() : value_(CycNum()) {}
  Scalar(CycNum x) : value_(std::move(x)) {}  // NOLINT
  Scalar(std::complex<double> z) : value_(z) {}  // NOLINT
  Scalar(long v) : value_(CycNum(v)) {}  // NOLINT

  Backend backend() const {
    return std::holds_alternative<CycNum>(value_) ? Backend::Exact : Backend::Approx;
  }
  bool is_exact() const { return backend() == Backend::Exact; }
  const CycNum& exact() const;
  std::complex<double> to_complex() const;

  /// Literal or "a+bi" decimal string; the backend picks the interpretation.
  static Scalar parse(std::string_view text, Backend backend);
  std::string to_string() const;

  bool equals(const Scalar& other, double tol = kDefaultTolerance) const;
  bool is_zero(double tol = kDefaultTolerance) const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);

 private:
  std::variant<CycNum, std::complex<double>> value_;
};

/// Parses "a", "bi", "a+bi", "a-bi", "i", "-i" with decimal/exponent numbers.
std::complex<double> parse_complex(std::string_view text);
std::string format_complex(std::complex<double> z);

}  // namespace braidloc

template <>
struct std::hash<braidloc::CycNum> {
  std::size_t operator()(const braidloc::CycNum& x) const { return x.hash(); }
};
