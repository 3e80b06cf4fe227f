// Command-line front end; talks to the library only through the C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "braidloc/braidloc.h"

namespace {

struct Globals {
  std::string backend = "exact";
  std::string output;
  bool timing = false;
};

int finish(braidloc_status status, braidloc_report* report, const Globals& g) {
  if (status != BRAIDLOC_OK) {
    std::cerr << "braidloc: " << braidloc_status_name(status) << ": " << braidloc_last_error() << "\n";
    return braidloc_status_is_usage_error(status) ? 2 : 1;
  }
  const std::string json = braidloc_report_json(report);
  const bool passed = braidloc_report_passed(report) != 0;
  braidloc_report_free(report);
  if (g.output.empty()) {
    std::cout << json << "\n";
  } else {
    std::ofstream out(g.output);
    if (!out) {
      std::cerr << "braidloc: cannot write " << g.output << "\n";
      return 2;
    }
    out << json << "\n";
  }
  return passed ? 0 : 1;
}

braidloc_backend backend_of(const Globals& g) {
  return g.backend == "approx" ? BRAIDLOC_BACKEND_APPROX : BRAIDLOC_BACKEND_EXACT;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Braided vector spaces, braid group images, Temperley-Lieb projectors and fusion ring analysis"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--backend", g.backend, "Arithmetic backend")->check(CLI::IsMember({"exact", "approx"}));
  app.add_option("--output,-o", g.output, "Write the JSON report to this file instead of stdout");
  app.add_flag("--timing", g.timing, "Record wall_time in the report");
  app.set_version_flag("--version", braidloc_version());

  // ybe check
  auto* ybe = app.add_subcommand("ybe", "Yang-Baxter checks")->require_subcommand(1);
  auto* ybe_check = ybe->add_subcommand("check", "Check the YBE, unitarity and optional gYBE / projective order");
  std::string ybe_matrix;
  int ybe_d = 0;
  std::vector<int> gybe;
  long order_bound = 0;
  ybe_check->add_option("matrix", ybe_matrix, "Matrix JSON file or builtin:NAME")->required();
  ybe_check->add_option("--d", ybe_d, "Local dimension (inferred when omitted)");
  ybe_check->add_option("--gybe", gybe, "Generalized YBE with parameters k m")->expected(2);
  ybe_check->add_option("--order-bound", order_bound, "Search the projective order up to this bound");

  // rep probe|eval|check
  auto* rep = app.add_subcommand("rep", "Braid group representations from an R-matrix")->require_subcommand(1);
  std::string rep_matrix, word;
  int rep_d = 0, rep_n = 3;
  long bound = 20000;
  std::string rep_action;
  for (const char* action : {"probe", "eval", "check"}) {
    auto* sub = rep->add_subcommand(action, std::string(action) == "probe"   ? "Projective image order by closure"
                                            : std::string(action) == "eval" ? "Evaluate a braid word"
                                                                             : "Check the braid relations");
    sub->add_option("--r", rep_matrix, "Matrix JSON file or builtin:NAME")->required();
    sub->add_option("--d", rep_d, "Local dimension");
    sub->add_option("--n", rep_n, "Number of strands");
    if (std::string(action) == "probe") sub->add_option("--bound", bound, "Closure size bound");
    if (std::string(action) == "eval") sub->add_option("--word", word, "Signed generator indices, e.g. \"1 2 -1\"")->required();
    sub->callback([&rep_action, action] { rep_action = action; });
  }

  // tl verify
  auto* tl = app.add_subcommand("tl", "Temperley-Lieb image of an R-matrix")->require_subcommand(1);
  auto* tl_verify = tl->add_subcommand("verify", "TL relations, Jones-Wenzl projectors, dimensions and multiplicities");
  braidloc_tl_options tlo;
  braidloc_tl_options_init(&tlo);
  std::string tl_matrix, tl_q;
  tl_verify->add_option("--r", tl_matrix, "Matrix JSON file or builtin:NAME")->required();
  tl_verify->add_option("--d", tlo.d, "Local dimension");
  tl_verify->add_option("--q", tl_q, "Eigenvalue of R other than -1, e.g. z6^5")->required();
  tl_verify->add_option("--n", tlo.n, "Number of strands");
  tl_verify->add_option("--jw", tlo.jw, "Compute Jones-Wenzl projectors up to this level");
  tl_verify->add_option("--ell", tlo.ell, "Root of unity order 2*ell (inferred from the loop parameter)");
  tl_verify->add_option("--m", tlo.m, "Target m in <mu, d> = m^n (defaults to the local dimension)");
  bool cross_check = false;
  tl_verify->add_flag("--cross-check", cross_check, "Compare projector ranks with common kernels in floating point");

  // fusion analyze
  auto* fusion = app.add_subcommand("fusion", "Fusion ring analysis")->require_subcommand(1);
  auto* fusion_analyze = fusion->add_subcommand("analyze", "Localization obstruction for an object");
  braidloc_fusion_options fo;
  braidloc_fusion_options_init(&fo);
  std::string catalog, ring_file, object = "X", expect;
  int level_k = -1, rank_n = -1;
  auto* cat_opt = fusion_analyze->add_option("--catalog", catalog, "Catalog ring name");
  auto* ring_opt = fusion_analyze->add_option("--ring", ring_file, "Ring JSON file {labels, unit, N}");
  cat_opt->excludes(ring_opt);
  fusion_analyze->add_option("--k", level_k, "Level for sl2_level");
  fusion_analyze->add_option("--N", rank_n, "N for the so_* families");
  fusion_analyze->add_option("--object", object, "Object label");
  fusion_analyze->add_option("--depth", fo.depth, "Bratteli depth");
  fusion_analyze->add_option("--expect", expect, "Add a check on the verdict")->check(CLI::IsMember({"obstructed", "pass"}));

  // gaussian build
  auto* gaussian = app.add_subcommand("gaussian", "Gaussian representations")->require_subcommand(1);
  auto* gaussian_build = gaussian->add_subcommand("build", "Build and verify the Gaussian representation");
  braidloc_gaussian_options go;
  braidloc_gaussian_options_init(&go);
  std::string zeta, out_dir;
  bool localize = false, matrices = false;
  gaussian_build->add_option("--p", go.p, "Odd prime");
  gaussian_build->add_option("--n", go.n, "Number of strands");
  gaussian_build->add_option("--omega-exp", go.omega_exponent, "omega = zeta_p^k");
  gaussian_build->add_option("--zeta", zeta, "Normalization literal (default conj(gauss sum)/p)");
  gaussian_build->add_flag("--localize", localize, "Also build and verify the localizing R-matrix");
  gaussian_build->add_option("--out", out_dir, "Directory for generator matrix JSON files");
  gaussian_build->add_flag("--matrices", matrices, "Embed generator matrices in the report");

  // paper-suite
  auto* suite = app.add_subcommand("paper-suite", "Run every acceptance check of the toolkit");
  bool quick = false;
  suite->add_flag("--quick", quick, "Smaller probe bounds, skip p = 7");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  braidloc_report* report = nullptr;
  braidloc_status status = BRAIDLOC_OK;
  if (ybe_check->parsed()) {
    braidloc_ybe_options o;
    braidloc_ybe_options_init(&o);
    o.matrix = ybe_matrix.c_str();
    o.d = ybe_d;
    if (gybe.size() == 2) {
      o.gybe_k = gybe[0];
      o.gybe_m = gybe[1];
    }
    o.order_bound = order_bound;
    o.backend = backend_of(g);
    o.timing = g.timing;
    status = braidloc_ybe_check(&o, &report);
  } else if (rep->parsed()) {
    braidloc_rep_options o;
    braidloc_rep_options_init(&o);
    o.action = rep_action.c_str();
    o.matrix = rep_matrix.c_str();
    o.d = rep_d;
    o.n = rep_n;
    o.bound = bound;
    o.word = word.c_str();
    o.backend = backend_of(g);
    o.timing = g.timing;
    status = braidloc_rep_run(&o, &report);
  } else if (tl_verify->parsed()) {
    tlo.matrix = tl_matrix.c_str();
    tlo.q = tl_q.c_str();
    tlo.cross_check = cross_check;
    tlo.backend = backend_of(g);
    tlo.timing = g.timing;
    status = braidloc_tl_verify(&tlo, &report);
  } else if (fusion_analyze->parsed()) {
    fo.catalog = catalog.empty() ? nullptr : catalog.c_str();
    fo.ring_file = ring_file.empty() ? nullptr : ring_file.c_str();
    fo.param = level_k >= 0 ? level_k : (rank_n >= 0 ? rank_n : 0);
    fo.object = object.c_str();
    fo.expect = expect.empty() ? nullptr : expect.c_str();
    fo.timing = g.timing;
    status = braidloc_fusion_analyze(&fo, &report);
  } else if (gaussian_build->parsed()) {
    go.zeta = zeta.empty() ? nullptr : zeta.c_str();
    go.out_dir = out_dir.empty() ? nullptr : out_dir.c_str();
    go.localize = localize;
    go.include_matrices = matrices;
    go.timing = g.timing;
    status = braidloc_gaussian_build(&go, &report);
  } else if (suite->parsed()) {
    braidloc_suite_options o;
    braidloc_suite_options_init(&o);
    o.quick = quick;
    o.timing = g.timing;
    status = braidloc_run_suite(&o, &report);
  }
  return finish(status, report, g);
}
