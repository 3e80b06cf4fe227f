#pragma once

// Fusion rings, Bratteli diagrams of tensor powers, Perron-Frobenius data and
// the combinatorial localization test.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "braidloc/cyclo.hpp"

namespace braidloc::fusion {

using IntMatrix = std::vector<std::vector<long>>;

/// Grothendieck ring data. fusion[x], when present, is N_x with
/// (N_x)[z][y] = dim Hom(x (x) y, z).
struct FusionRing {
  std::string name;
  std::vector<std::string> labels;
  int unit = 0;
  std::vector<std::optional<IntMatrix>> fusion;

  int rank() const { return static_cast<int>(labels.size()); }
  int index_of(std::string_view label) const;
  const IntMatrix& matrix(int x) const;  // throws Unsupported when absent
  bool has_matrix(int x) const { return fusion.at(x).has_value(); }

  /// Shape, non-negativity, unit = identity, normality of every N_x.
  void validate() const;

  static FusionRing from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

/// Catalog rings. `param` is the level k for sl2_level and N otherwise.
FusionRing catalog(std::string_view name, int param = 0);
std::vector<std::string> catalog_names();

/// Perron-Frobenius eigenvalue of a non-negative integer matrix, bracketed by
/// Collatz-Wielandt bounds from power iteration on I + A.
struct PerronFrobenius {
  double value = 0;
  double lower = 0, upper = 0;
  std::vector<double> vector;  // positive, max-normalized
};
PerronFrobenius perron_frobenius(const IntMatrix& a);

/// Decides whether the spectral radius of `a` (known to lie in [lower, upper])
/// is an integer; returns it if so. Exact: characteristic polynomial plus a
/// Sturm count. Throws Uncertified when the bracket is too wide to decide.
std::optional<BigInt> certify_integer_radius(const IntMatrix& a, double lower, double upper);

std::vector<BigInt> characteristic_polynomial(const IntMatrix& a);  // constant term first, monic

/// Labels reachable from the unit by repeated fusion with x, in label order.
std::vector<int> generated_labels(const FusionRing& ring, int x);

struct FpdimResult {
  double approx = 0;
  std::optional<BigInt> exact_sq;  // FPdim(x)^2 when it is an integer
};
/// Throws Reducible when x does not generate a strongly connected diagram.
FpdimResult fpdim(const FusionRing& ring, int x);

struct PeriodData {
  int period = 1;
  std::vector<std::vector<int>> classes;  // label indices by path-length residue from the unit
  std::vector<IntMatrix> blocks;          // diagonal blocks of N_x^p on each class
};
PeriodData period_and_blocks(const FusionRing& ring, int x);

struct BratteliData {
  int base = 0;
  std::vector<std::vector<int>> levels;   // levels[n-1]: labels in x^{(x) n}
  std::vector<IntMatrix> inclusions;      // inclusions[n-1] = G_n, |level n| x |level n+1|
  std::vector<std::vector<BigInt>> dims;  // dims[n-1] = d_n
  int period = 1;
  int depth = 0;  // first level from which levels and G_n repeat with the period; 0 if not seen
};
BratteliData bratteli(const FusionRing& ring, int x, int depth);

struct BlockData {
  int level = 0;  // starting level k + i of the product G_{k+i} ... G_{k+i+p-1}
  std::vector<int> labels;
  IntMatrix matrix;
  double lambda_approx = 0;
  std::optional<BigInt> lambda;  // set when integral
  std::optional<std::vector<BigInt>> candidate;  // primitive integer FP eigenvector
};

struct LevelVector {
  int level = 0;
  std::vector<int> labels;
  std::vector<BigInt> values;
};

enum class Verdict { Obstructed, NecessaryConditionsPass };
const char* to_string(Verdict v);

struct LocalizationReport {
  double fpdim = 0;
  std::optional<BigInt> fpdim_sq;
  int period = 1;
  int depth_k = 0;
  int depth_used = 0;
  std::vector<BlockData> blocks;
  Verdict verdict = Verdict::Obstructed;
  std::optional<long> m;
  std::vector<LevelVector> a_vectors;  // a_n for n = k..depth_used when m is found
  std::string note;
};

/// FPdim^2 integrality, integrality of the block eigenvalues Lambda_i, the
/// candidate localization vectors and, when all pass, the smallest m with
/// integral positive a_n satisfying m^n = <a_n, d_n> and m a_n = G_n a_{n+1}.
LocalizationReport localization_obstruction(const FusionRing& ring, int x, int depth = 12);

nlohmann::json to_json(const FusionRing& ring, const LocalizationReport& report);
nlohmann::json to_json(const FusionRing& ring, const BratteliData& data);

}  // namespace braidloc::fusion
