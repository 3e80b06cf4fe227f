#pragma once

// Braid group representations: generator images, word evaluation and
// projective image probing.

#include <string_view>
#include <vector>

#include "braidloc/matrix.hpp"
#include "braidloc/yang_baxter.hpp"

namespace braidloc::braid {

/// Word in sigma_1..sigma_{n-1}; letter +i is sigma_i, -i its inverse.
struct BraidWord {
  int strands = 2;
  std::vector<int> letters;

  /// Whitespace-separated signed integers such as "1 2 -1" (U+2212 accepted).
  static BraidWord parse(std::string_view text, int strands);
  void validate() const;
};

struct RepSpec {
  int n = 2;
  std::vector<SqMatrix> generators;  // images of sigma_1..sigma_{n-1}
  std::vector<SqMatrix> inverses;

  int dim() const { return generators.empty() ? 1 : generators.front().dim(); }
  Backend backend() const { return generators.empty() ? Backend::Exact : generators.front().backend(); }
};

/// sigma_i -> amplify(R, i, n, d). Rejects R failing the YBE unless
/// `skip_ybe_check` is set.
RepSpec rep_from_r(const ybe::RMatrixSpec& r, int n, bool skip_ybe_check = false,
                   double tol = kDefaultTolerance);

/// Explicit generator images (n-1 matrices of equal dimension and backend).
RepSpec rep_from_generators(int n, std::vector<SqMatrix> generators, double tol = kDefaultTolerance);

SqMatrix eval(const RepSpec& rep, const BraidWord& word);

/// Far commutation and the braid relation for all applicable indices.
bool check_braid_relations(const RepSpec& rep, double tol = kDefaultTolerance);

struct ProbeResult {
  enum class Status { Finite, ExceedsBound };
  Status status = Status::ExceedsBound;
  long order = 0;  // projective order of the image when Finite
  long elements_explored = 0;
};

/// Breadth-first closure of the generated group modulo scalars. Elements are
/// made canonical by dividing by their first nonzero entry (row-major) and
/// hashed exactly. Exact backend only.
ProbeResult probe_image(const RepSpec& rep, long bound);

}  // namespace braidloc::braid
