#include "braidloc/commands.hpp"

#include <filesystem>
#include <fstream>

#include "braidloc/braid_rep.hpp"
#include "braidloc/builtins.hpp"
#include "braidloc/error.hpp"
#include "braidloc/fusion.hpp"
#include "braidloc/gaussian.hpp"
#include "braidloc/temperley_lieb.hpp"
#include "braidloc/yang_baxter.hpp"

namespace braidloc::cmd {

namespace {

ojson big_json(const BigInt& z) {
  if (z.fits_slong_p()) return ojson(z.get_si());
  return ojson(z.get_str());
}

ojson labeled_json(const tl::LabeledVector& v) {
  ojson out = ojson::object();
  for (std::size_t i = 0; i < v.labels.size(); ++i) out[v.labels[i]] = big_json(v.values[i]);
  return out;
}

// Mathematical failures become failed checks; input errors propagate.
bool is_usage_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument:
    case ErrorCode::ParseError:
    case ErrorCode::DimensionMismatch:
    case ErrorCode::BackendMismatch:
    case ErrorCode::Unsupported:
      return true;
    default:
      return false;
  }
}

template <class F>
bool guarded(Report& report, const std::string& name, F&& body) {
  try {
    body();
    return true;
  } catch (const Error& e) {
    if (is_usage_error(e.code())) throw;
    report.add(name, false, {{"error", to_string(e.code())}, {"message", e.what()}});
    return false;
  }
}

SqMatrix load(Report& report, const std::string& source, Backend backend) {
  if (source.empty()) fail(ErrorCode::InvalidArgument, "a matrix source is required");
  SqMatrix m = load_matrix(source, backend);
  report.inputs()["matrix"] = ojson(matrix_to_json(m));
  return m;
}

ojson order_json(const ybe::OrderResult& r) {
  if (r.status == ybe::OrderResult::Status::Finite) return {{"status", "finite"}, {"order", r.order}};
  return {{"status", "exceeds_bound"}, {"order", nullptr}};
}

ojson probe_json(const braid::ProbeResult& r) {
  const bool finite = r.status == braid::ProbeResult::Status::Finite;
  return {{"status", finite ? "finite" : "exceeds_bound"},
          {"order", finite ? ojson(r.order) : ojson(nullptr)},
          {"elements_explored", r.elements_explored}};
}

// Smallest ell in 3..64 with delta_inv_sq (q + 1/q)^2 = 1 at q = zeta_{2 ell}.
std::optional<int> infer_ell(const Scalar& beta) {
  for (int ell = 3; ell <= 64; ++ell) {
    const CycNum q = CycNum::zeta(2 * ell);
    const CycNum two = q + q.inv();
    if ((beta * Scalar(two * two)).equals(Scalar(1L))) return ell;
  }
  return std::nullopt;
}

}  // namespace

Report ybe_check(const YbeOptions& o) {
  Report report("ybe check", to_string(o.backend));
  report.inputs()["arguments"] = {{"matrix", o.matrix}, {"d", o.d}, {"gybe_k", o.gybe_k}, {"gybe_m", o.gybe_m},
                                  {"order_bound", o.order_bound}};
  SqMatrix m = load(report, o.matrix, o.backend);
  ybe::RMatrixSpec spec;
  if (!guarded(report, "invertible", [&] { spec = ybe::make_spec(m, o.d); })) return report;
  report.add("invertible", true);
  const bool ybe_ok = ybe::check_ybe(spec.matrix, spec.local_dim);
  report.add("ybe", ybe_ok);
  report.fields()["d"] = spec.local_dim;
  report.fields()["ybe"] = ybe_ok;
  report.fields()["unitary"] = is_unitary(spec.matrix);
  if (o.gybe_k > 0 || o.gybe_m > 0) {
    const auto g = ybe::check_gybe(spec.matrix, spec.local_dim, o.gybe_k, o.gybe_m);
    report.add("gybe", g.gybe, {{"k", o.gybe_k}, {"m", o.gybe_m}});
    report.fields()["gybe"] = g.gybe;
    if (g.far_commutation) {
      report.add("far_commutation", *g.far_commutation);
      report.fields()["far_commutation"] = *g.far_commutation;
    }
  }
  if (o.order_bound > 0) {
    const auto r = ybe::projective_order(spec.matrix, o.order_bound);
    report.fields()["projective_order"] = order_json(r);
    report.add("projective_order",
               r.status == ybe::OrderResult::Status::Finite ? CheckStatus::Pass : CheckStatus::Bounded,
               {{"bound", o.order_bound}});
  }
  return report;
}

Report rep_command(const RepOptions& o) {
  if (o.action != "probe" && o.action != "eval" && o.action != "check")
    fail(ErrorCode::InvalidArgument, "rep action must be probe, eval or check");
  Report report("rep " + o.action, to_string(o.backend));
  report.inputs()["arguments"] = {{"matrix", o.matrix}, {"d", o.d}, {"n", o.n}, {"bound", o.bound}, {"word", o.word}};
  if (o.action == "probe" && o.backend != Backend::Exact)
    fail(ErrorCode::BackendMismatch, "image probing requires the exact backend");
  if (o.n < 2) fail(ErrorCode::InvalidArgument, "n must be >= 2");
  std::optional<braid::BraidWord> word;
  if (o.action == "eval") word = braid::BraidWord::parse(o.word, o.n);
  SqMatrix m = load(report, o.matrix, o.backend);
  ybe::RMatrixSpec spec;
  if (!guarded(report, "invertible", [&] { spec = ybe::make_spec(m, o.d); })) return report;
  braid::RepSpec rep;
  if (!guarded(report, "ybe", [&] { rep = braid::rep_from_r(spec, o.n); })) return report;
  report.add("ybe", true);
  report.fields()["n"] = o.n;
  report.fields()["dim"] = rep.dim();
  if (o.action == "check") {
    const bool ok = braid::check_braid_relations(rep);
    report.add("braid_relations", ok);
    report.fields()["braid_relations"] = ok;
  } else if (o.action == "eval") {
    const SqMatrix result = braid::eval(rep, *word);
    report.add("eval", true, {{"letters", word->letters.size()}});
    report.fields()["trace"] = result.trace().to_string();
    report.fields()["result"] = ojson(matrix_to_json(result));
  } else {
    const auto r = braid::probe_image(rep, o.bound);
    report.fields()["probe"] = probe_json(r);
    report.add("probe_image",
               r.status == braid::ProbeResult::Status::Finite ? CheckStatus::Pass : CheckStatus::Bounded,
               {{"bound", o.bound}});
  }
  return report;
}

Report tl_verify(const TlOptions& o) {
  Report report("tl verify", to_string(o.backend));
  report.inputs()["arguments"] = {{"matrix", o.matrix}, {"d", o.d}, {"q", o.q}, {"n", o.n}, {"jw", o.jw},
                                  {"ell", o.ell}, {"m", o.m}, {"cross_check", o.cross_check}};
  if (o.q.empty()) fail(ErrorCode::InvalidArgument, "--q (the eigenvalue of R other than -1) is required");
  if (o.jw < 0 || o.jw > o.n) fail(ErrorCode::InvalidArgument, "--jw must lie in 0..n");
  const Scalar q = Scalar::parse(o.q, o.backend);
  SqMatrix m = load(report, o.matrix, o.backend);
  ybe::RMatrixSpec spec;
  if (!guarded(report, "invertible", [&] { spec = ybe::make_spec(m, o.d); })) return report;
  const bool ybe_ok = ybe::check_ybe(spec.matrix, spec.local_dim);
  report.add("ybe", ybe_ok);
  if (!ybe_ok) return report;

  const std::vector<Scalar> roots = {Scalar(-1L), q};
  const bool annihilated = annihilator_check(spec.matrix, roots);
  report.add("annihilator", annihilated, {{"roots", {"-1", q.to_string()}}});
  if (annihilated) {
    guarded(report, "spectrum", [&] {
      const auto mult = spectrum_multiplicities(spec.matrix, roots);
      report.fields()["spectrum"] = {{"-1", mult[0]}, {q.to_string(), mult[1]}};
    });
  }

  tl::TLImage image;
  if (!guarded(report, "idempotent", [&] { image = tl::tl_from_r(spec, o.n, q); })) return report;
  report.add("idempotent", true);
  report.fields()["delta_inv_sq"] = image.delta_inv_sq ? ojson(image.delta_inv_sq->to_string()) : ojson(nullptr);
  const bool relations = tl::check_tl_relations(image);
  report.add("tl_relations", relations);
  report.fields()["relations"] = relations;

  std::optional<int> ell = o.ell > 0 ? std::optional<int>(o.ell) : std::nullopt;
  if (!ell && image.delta_inv_sq) ell = infer_ell(*image.delta_inv_sq);
  report.fields()["ell"] = ell ? ojson(*ell) : ojson(nullptr);

  if (o.jw > 0) {
    std::optional<Scalar> q_hat;
    if (ell) q_hat = Scalar::parse(CycNum::zeta(2 * *ell).to_literal(), o.backend);
    guarded(report, "jones_wenzl", [&] {
      const auto seq = tl::jones_wenzl_sequence(image, o.jw, q_hat);
      ojson nonzero = ojson::array(), zero = ojson::array(), traces = ojson::object();
      for (const auto& p : seq) {
        (p.matrix.is_zero() ? zero : nonzero).push_back(p.k);
        traces[std::to_string(p.k)] = p.matrix.trace().to_string();
      }
      report.add("jones_wenzl", true, {{"levels", o.jw}, {"idempotent_and_killed_by_lower_E", true}});
      report.fields()["jw_nonzero"] = nonzero;
      report.fields()["jw_zero"] = zero;
      report.fields()["jw_traces"] = traces;
      if (o.cross_check) {
        ojson kernels = ojson::object();
        bool agree = true;
        for (const auto& p : seq) {
          const int kernel = tl::common_kernel_dim(image, p.k);
          const long rank = std::lround(p.matrix.trace().to_complex().real());
          kernels[std::to_string(p.k)] = kernel;
          agree = agree && kernel == rank;
        }
        report.add("common_kernel", agree, {{"kernel_dims", kernels}});
      }
    });
  }

  if (ell) {
    const long mm = o.m > 0 ? o.m : spec.local_dim;
    const auto dims = tl::simple_dims(*ell, o.n);
    report.fields()["dims"] = labeled_json(dims);
    const auto mu = tl::multiplicity_solve(*ell, o.n, mm);
    report.fields()["m"] = mm;
    if (mu) {
      report.fields()["multiplicities"] = labeled_json(*mu);
      BigInt total = 0, expected = 1;
      for (std::size_t i = 0; i < mu->values.size(); ++i) total += mu->values[i] * dims.values[i];
      for (int i = 0; i < o.n; ++i) expected *= mm;
      report.add("dimension_identity", total == expected,
                 {{"sum", big_json(total)}, {"m_pow_n", big_json(expected)}});
    } else {
      report.fields()["multiplicities"] = "infeasible";
    }
  }
  return report;
}

Report fusion_analyze(const FusionOptions& o) {
  Report report("fusion analyze", "exact");
  report.inputs()["arguments"] = {{"catalog", o.catalog}, {"param", o.param}, {"ring_file", o.ring_file},
                                  {"object", o.object}, {"depth", o.depth}, {"expect", o.expect}};
  if (!o.expect.empty() && o.expect != "obstructed" && o.expect != "pass")
    fail(ErrorCode::InvalidArgument, "--expect must be 'obstructed' or 'pass'");
  fusion::FusionRing ring;
  if (!o.ring_file.empty()) {
    std::ifstream in(o.ring_file);
    if (!in) fail(ErrorCode::InvalidArgument, "cannot open ring file '" + o.ring_file + "'");
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      fail(ErrorCode::ParseError, std::string("ring file: ") + e.what());
    }
    ring = fusion::FusionRing::from_json(j);
  } else if (!o.catalog.empty()) {
    ring = fusion::catalog(o.catalog, o.param);
  } else {
    fail(ErrorCode::InvalidArgument, "either --catalog or --ring is required");
  }
  report.inputs()["ring"] = ojson(ring.to_json());
  const int x = ring.index_of(o.object);
  report.fields()["ring"] = ring.name;
  report.fields()["object"] = o.object;
  guarded(report, "analysis", [&] {
    const auto result = fusion::localization_obstruction(ring, x, o.depth);
    report.add("analysis", true, {{"fpdim_sq_certified", true}});
    report.fields()["localization"] = ojson(fusion::to_json(ring, result));
    if (!o.expect.empty()) {
      const bool obstructed = result.verdict == fusion::Verdict::Obstructed;
      report.add("expected_verdict", obstructed == (o.expect == "obstructed"),
                 {{"expected", o.expect}, {"verdict", fusion::to_string(result.verdict)}});
    }
  });
  return report;
}

Report gaussian_build(const GaussianOptions& o) {
  Report report("gaussian build", "exact");
  report.inputs()["arguments"] = {{"p", o.p}, {"n", o.n}, {"omega_exponent", o.omega_exponent},
                                  {"localize", o.localize}, {"zeta", o.zeta}};
  std::optional<CycNum> zeta;
  if (!o.zeta.empty()) zeta = CycNum::parse(o.zeta);
  gaussian::ESRep es;
  if (!guarded(report, "es_relations", [&] { es = gaussian::es_rep(o.p, o.n, o.omega_exponent); })) return report;
  report.add("es_relations", true, {{"dim", es.u.empty() ? 1 : es.u.front().dim()}});
  const CycNum z = zeta ? *zeta : gaussian::auto_zeta(o.p, o.omega_exponent);
  report.fields()["omega"] = es.omega.to_literal();
  report.fields()["zeta"] = z.to_literal();
  report.fields()["zeta_convention"] = zeta ? "given" : "conj(gauss_sum)/p";

  std::vector<std::pair<std::string, SqMatrix>> outputs;
  braid::RepSpec rep;
  if (guarded(report, "braid_relations", [&] { rep = gaussian::gaussian_rep(es, zeta); })) {
    report.add("unitary", true);
    report.add("braid_relations", true);
    report.fields()["dim"] = rep.dim();
    for (std::size_t i = 0; i < rep.generators.size(); ++i)
      outputs.emplace_back("sigma_" + std::to_string(i + 1), rep.generators[i]);
  }
  if (o.localize) {
    guarded(report, "localization", [&] {
      const ybe::RMatrixSpec r = gaussian::local_r(o.p, zeta, o.omega_exponent);
      report.add("local_u", true, {{"U^p = I", true}, {"unitary", true}});
      report.add("localized_relations", true);
      report.add("local_r_unitary", true);
      report.add("local_r_ybe", true);
      outputs.emplace_back("R", r.matrix);
    });
    guarded(report, "trace_criterion", [&] {
      const auto tc = gaussian::trace_criterion(o.p, o.n, o.omega_exponent);
      report.add("trace_criterion", tc.passed,
                 {{"monomials", tc.monomials}, {"nonzero_traces", tc.nonzero_traces},
                  {"identity_trace", big_json(tc.identity_trace)}});
    });
  }

  if (!o.out_dir.empty()) {
    std::filesystem::create_directories(o.out_dir);
    ojson files = ojson::array();
    for (const auto& [name, mat] : outputs) {
      const auto path = std::filesystem::path(o.out_dir) / (name + ".json");
      std::ofstream out(path);
      if (!out) fail(ErrorCode::InvalidArgument, "cannot write '" + path.string() + "'");
      out << matrix_to_json(mat).dump(2) << "\n";
      files.push_back(path.filename().string());
    }
    report.fields()["files"] = files;
  }
  if (o.include_matrices) {
    ojson mats = ojson::object();
    for (const auto& [name, mat] : outputs) mats[name] = ojson(matrix_to_json(mat));
    report.fields()["matrices"] = mats;
  }
  return report;
}

}  // namespace braidloc::cmd
