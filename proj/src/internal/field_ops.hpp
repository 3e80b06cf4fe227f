#pragma once

// Coefficient-level arithmetic inside a fixed field Q(zeta_m). Elements are
// plain arrays of `degree` coefficients; T is Rational or BigInt (the latter
// for the integral representation used by exact matrices).

#include <vector>

#include "braidloc/cyclo.hpp"
#include "braidloc/error.hpp"

namespace braidloc::detail {

template <class T>
inline bool all_zero(const T* a, int n) {
  for (int i = 0; i < n; ++i)
    if (sgn(a[i]) != 0) return false;
  return true;
}

/// out[j] += sum_k c[k] * (x^k mod Phi)[j], for a dense polynomial c.
template <class T>
inline void reduce_accumulate(const CyclotomicField& F, const T* c, int len, T* out) {
  const int d = F.degree;
  for (int k = 0; k < len; ++k) {
    if (sgn(c[k]) == 0) continue;
    if (k < d) {
      out[k] += c[k];
      continue;
    }
    const std::int64_t* row = F.power(k % F.conductor);
    for (int j = 0; j < d; ++j)
      if (row[j] != 0) out[j] += c[k] * static_cast<long>(row[j]);
  }
}

/// out = a * b (reduced). out must not alias a or b.
template <class T>
inline void field_mul(const CyclotomicField& F, const T* a, const T* b, T* out) {
  const int d = F.degree;
  if (d == 1) {
    out[0] = a[0] * b[0];
    return;
  }
  std::vector<T> tmp(2 * d - 1);
  for (int s = 0; s < d; ++s) {
    if (sgn(a[s]) == 0) continue;
    for (int t = 0; t < d; ++t)
      if (sgn(b[t]) != 0) tmp[s + t] += a[s] * b[t];
  }
  for (int j = 0; j < d; ++j) out[j] = 0;
  reduce_accumulate(F, tmp.data(), 2 * d - 1, out);
}

/// Image of a under the Galois automorphism zeta -> zeta^g (g coprime to m).
template <class T>
inline void galois(const CyclotomicField& F, const T* a, long g, T* out) {
  const int d = F.degree;
  const long m = F.conductor;
  for (int j = 0; j < d; ++j) out[j] = 0;
  for (int j = 0; j < d; ++j) {
    if (sgn(a[j]) == 0) continue;
    long e = ((g % m) * j) % m;
    if (e < 0) e += m;
    const std::int64_t* row = F.power(static_cast<int>(e));
    for (int i = 0; i < d; ++i)
      if (row[i] != 0) out[i] += a[j] * static_cast<long>(row[i]);
  }
}

template <class T>
inline void conj(const CyclotomicField& F, const T* a, T* out) {
  galois(F, a, F.conductor - 1, out);
}

/// Embeds a from Q(zeta_m) into Q(zeta_M), m | M.
template <class T>
inline void embed(const CyclotomicField& from, const CyclotomicField& to, const T* a, T* out) {
  const int step = to.conductor / from.conductor;
  for (int j = 0; j < to.degree; ++j) out[j] = 0;
  for (int j = 0; j < from.degree; ++j) {
    if (sgn(a[j]) == 0) continue;
    const std::int64_t* row = to.power(j * step);
    for (int i = 0; i < to.degree; ++i)
      if (row[i] != 0) out[i] += a[j] * static_cast<long>(row[i]);
  }
}

/// Solves A x = b over Q by Gauss-Jordan elimination; A is n x n row-major.
/// Returns false when A is singular.
bool solve_rational(std::vector<Rational> A, std::vector<Rational> b, int n,
                    std::vector<Rational>& x);

/// Multiplicative inverse in Q(zeta_m); throws on zero.
std::vector<Rational> field_inverse(const CyclotomicField& F, const Rational* a);

}  // namespace braidloc::detail
