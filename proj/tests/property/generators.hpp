#pragma once

// Random inputs for the property cases. Every case draws from its own
// generator seeded by (suite seed, case index) so failures are reproducible.

#include <cstdint>
#include <random>
#include <vector>

#include "braidloc/braid_rep.hpp"
#include "braidloc/cyclo.hpp"
#include "braidloc/matrix.hpp"

namespace proptest {

using namespace braidloc;

inline constexpr int kCases = 200;

class Gen {
 public:
  Gen(std::uint64_t suite, int index);

  int integer(int lo, int hi);  // inclusive
  bool coin() { return integer(0, 1) == 1; }
  Rational rational(int max_num = 9, int max_den = 6);
  Rational nonzero_rational(int max_num = 9, int max_den = 6);
  /// Sparse random element of Q(zeta_m).
  CycNum cyc(int m, int terms = 3);
  CycNum nonzero_cyc(int m, int terms = 3);
  CycNum root_of_unity(int m) { return CycNum::zeta(m, integer(0, m - 1)); }
  SqMatrix exact_matrix(int dim, int m, double density = 0.6);
  /// Integer unitriangular matrix times a signed permutation: invertible with
  /// an exact inverse of bounded size.
  SqMatrix invertible(int dim, int m);
  /// Products of permutations, diagonal roots of unity and the normalized
  /// 2x2 Hadamard matrix in the first two coordinates.
  SqMatrix unitary(int dim);
  std::vector<int> permutation(int n);
  braid::BraidWord word(int strands, int max_len);

 private:
  std::mt19937_64 rng_;
};

}  // namespace proptest
