#pragma once

// Report-producing front ends for each subcommand. Every function loads its
// inputs, runs the requested checks and returns a Report; mathematical
// failures become failed checks, malformed input throws braidloc::Error.

#include <optional>
#include <string>

#include "braidloc/cyclo.hpp"
#include "braidloc/report.hpp"

namespace braidloc::cmd {

struct YbeOptions {
  std::string matrix;  // "builtin:NAME" or JSON file path
  int d = 0;           // 0: inferred
  int gybe_k = 0, gybe_m = 0;
  long order_bound = 0;  // 0: skip the projective order
  Backend backend = Backend::Exact;
};
Report ybe_check(const YbeOptions& o);

struct RepOptions {
  std::string action = "check";  // probe | eval | check
  std::string matrix;
  int d = 0;
  int n = 3;
  long bound = 20000;
  std::string word;  // for eval
  Backend backend = Backend::Exact;
};
Report rep_command(const RepOptions& o);

struct TlOptions {
  std::string matrix;
  int d = 0;
  std::string q;  // eigenvalue literal of R other than -1
  int n = 4;
  int jw = 0;    // highest Jones-Wenzl level; 0: none
  int ell = 0;   // 0: inferred from the loop parameter
  long m = 0;    // 0: the local dimension
  bool cross_check = false;
  Backend backend = Backend::Exact;
};
Report tl_verify(const TlOptions& o);

struct FusionOptions {
  std::string catalog;  // catalog ring name, or empty when ring_file is set
  int param = 0;        // level k for sl2_level, N otherwise
  std::string ring_file;
  std::string object = "X";
  int depth = 12;
  std::string expect;  // "", "obstructed" or "pass"
};
Report fusion_analyze(const FusionOptions& o);

struct GaussianOptions {
  int p = 3;
  int n = 3;
  int omega_exponent = 1;
  bool localize = false;
  std::string zeta;           // literal; empty: conj(g)/p
  std::string out_dir;        // when set, generator matrices are written there
  bool include_matrices = false;
};
Report gaussian_build(const GaussianOptions& o);

struct SuiteOptions {
  bool quick = false;
};
/// Every acceptance check of the toolkit in one report.
Report paper_suite(const SuiteOptions& o);

}  // namespace braidloc::cmd
