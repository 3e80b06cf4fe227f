#include "braidloc/braidloc.h"

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "braidloc/builtins.hpp"
#include "braidloc/commands.hpp"
#include "braidloc/error.hpp"
#include "braidloc/matrix.hpp"
#include "braidloc/yang_baxter.hpp"

struct braidloc_matrix {
  braidloc::SqMatrix m;
};

struct braidloc_report {
  std::string json;
  bool passed = false;
};

namespace {

thread_local std::string last_error;

braidloc_status status_of(braidloc::ErrorCode code) {
  return static_cast<braidloc_status>(static_cast<int>(code));
}

template <class F>
braidloc_status guard(F&& body) {
  try {
    last_error.clear();
    body();
    return BRAIDLOC_OK;
  } catch (const braidloc::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return BRAIDLOC_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return BRAIDLOC_ERR_UNKNOWN;
  } catch (...) {
    last_error = "unknown error";
    return BRAIDLOC_ERR_UNKNOWN;
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) braidloc::fail(braidloc::ErrorCode::InvalidArgument, std::string(what) + " must not be null");
}

std::string str_or(const char* s, const char* fallback = "") { return s ? s : fallback; }

braidloc::Backend backend_of(braidloc_backend b) {
  return b == BRAIDLOC_BACKEND_APPROX ? braidloc::Backend::Approx : braidloc::Backend::Exact;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class F>
braidloc_status run_report(int timing, braidloc_report** out, F&& make) {
  return guard([&] {
    require(out, "report out-parameter");
    *out = nullptr;
    const auto start = std::chrono::steady_clock::now();
    braidloc::Report report = make();
    if (timing)
      report.set_wall_time(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
    auto* r = new braidloc_report;
    r->json = report.to_json().dump(2);
    r->passed = report.passed();
    *out = r;
  });
}

}  // namespace

extern "C" {

const char* braidloc_version(void) { return "0.1.0"; }

const char* braidloc_last_error(void) { return last_error.c_str(); }

const char* braidloc_status_name(braidloc_status status) {
  if (status == BRAIDLOC_OK) return "ok";
  if (status >= BRAIDLOC_ERR_INVALID_ARGUMENT && status <= BRAIDLOC_ERR_INTERNAL)
    return braidloc::to_string(static_cast<braidloc::ErrorCode>(static_cast<int>(status)));
  return "unknown";
}

int braidloc_status_is_usage_error(braidloc_status status) {
  switch (status) {
    case BRAIDLOC_ERR_INVALID_ARGUMENT:
    case BRAIDLOC_ERR_PARSE:
    case BRAIDLOC_ERR_BACKEND_MISMATCH:
    case BRAIDLOC_ERR_DIMENSION_MISMATCH:
    case BRAIDLOC_ERR_UNSUPPORTED:
      return 1;
    default:
      return 0;
  }
}

void braidloc_string_free(char* s) { std::free(s); }

braidloc_status braidloc_matrix_load(const char* source, braidloc_backend backend, braidloc_matrix** out) {
  return guard([&] {
    require(source, "source");
    require(out, "matrix out-parameter");
    *out = new braidloc_matrix{braidloc::load_matrix(source, backend_of(backend))};
  });
}

braidloc_status braidloc_matrix_parse(const char* json_text, braidloc_backend backend, braidloc_matrix** out) {
  return guard([&] {
    require(json_text, "json_text");
    require(out, "matrix out-parameter");
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
      braidloc::fail(braidloc::ErrorCode::ParseError, e.what());
    }
    *out = new braidloc_matrix{braidloc::matrix_from_json(j, backend_of(backend))};
  });
}

void braidloc_matrix_free(braidloc_matrix* m) { delete m; }

int braidloc_matrix_dim(const braidloc_matrix* m) { return m ? m->m.dim() : 0; }

braidloc_status braidloc_matrix_to_json(const braidloc_matrix* m, char** out) {
  return guard([&] {
    require(m, "matrix");
    require(out, "string out-parameter");
    *out = dup_string(braidloc::matrix_to_json(m->m).dump());
  });
}

braidloc_status braidloc_matrix_entry(const braidloc_matrix* m, int i, int j, double* re, double* im) {
  return guard([&] {
    require(m, "matrix");
    require(re, "re");
    require(im, "im");
    if (i < 0 || j < 0 || i >= m->m.dim() || j >= m->m.dim())
      braidloc::fail(braidloc::ErrorCode::InvalidArgument, "entry index out of range");
    const auto z = m->m.entry(i, j).to_complex();
    *re = z.real();
    *im = z.imag();
  });
}

braidloc_status braidloc_matrix_check_ybe(const braidloc_matrix* m, int d, int* out) {
  return guard([&] {
    require(m, "matrix");
    require(out, "out");
    const auto spec = braidloc::ybe::make_spec(m->m, d);
    *out = braidloc::ybe::check_ybe(spec.matrix, spec.local_dim) ? 1 : 0;
  });
}

braidloc_status braidloc_matrix_is_unitary(const braidloc_matrix* m, int* out) {
  return guard([&] {
    require(m, "matrix");
    require(out, "out");
    *out = braidloc::is_unitary(m->m) ? 1 : 0;
  });
}

braidloc_status braidloc_cyc_to_complex(const char* literal, double* re, double* im) {
  return guard([&] {
    require(literal, "literal");
    require(re, "re");
    require(im, "im");
    const auto z = braidloc::CycNum::parse(literal).to_complex();
    *re = z.real();
    *im = z.imag();
  });
}

const char* braidloc_report_json(const braidloc_report* r) { return r ? r->json.c_str() : ""; }

int braidloc_report_passed(const braidloc_report* r) { return r && r->passed ? 1 : 0; }

void braidloc_report_free(braidloc_report* r) { delete r; }

void braidloc_ybe_options_init(braidloc_ybe_options* o) {
  if (!o) return;
  *o = braidloc_ybe_options{};
  o->backend = BRAIDLOC_BACKEND_EXACT;
}

void braidloc_rep_options_init(braidloc_rep_options* o) {
  if (!o) return;
  *o = braidloc_rep_options{};
  o->action = "check";
  o->n = 3;
  o->bound = 20000;
}

void braidloc_tl_options_init(braidloc_tl_options* o) {
  if (!o) return;
  *o = braidloc_tl_options{};
  o->n = 4;
}

void braidloc_fusion_options_init(braidloc_fusion_options* o) {
  if (!o) return;
  *o = braidloc_fusion_options{};
  o->object = "X";
  o->depth = 12;
}

void braidloc_gaussian_options_init(braidloc_gaussian_options* o) {
  if (!o) return;
  *o = braidloc_gaussian_options{};
  o->p = 3;
  o->n = 3;
  o->omega_exponent = 1;
}

void braidloc_suite_options_init(braidloc_suite_options* o) {
  if (!o) return;
  *o = braidloc_suite_options{};
}

braidloc_status braidloc_ybe_check(const braidloc_ybe_options* o, braidloc_report** out) {
  if (!o) return guard([] { require(nullptr, "options"); });
  return run_report(o->timing, out, [&] {
    braidloc::cmd::YbeOptions c;
    c.matrix = str_or(o->matrix);
    c.d = o->d;
    c.gybe_k = o->gybe_k;
    c.gybe_m = o->gybe_m;
    c.order_bound = o->order_bound;
    c.backend = backend_of(o->backend);
    return braidloc::cmd::ybe_check(c);
  });
}

braidloc_status braidloc_rep_run(const braidloc_rep_options* o, braidloc_report** out) {
  if (!o) return guard([] { require(nullptr, "options"); });
  return run_report(o->timing, out, [&] {
    braidloc::cmd::RepOptions c;
    c.action = str_or(o->action, "check");
    c.matrix = str_or(o->matrix);
    c.d = o->d;
    c.n = o->n;
    c.bound = o->bound;
    c.word = str_or(o->word);
    c.backend = backend_of(o->backend);
    return braidloc::cmd::rep_command(c);
  });
}

braidloc_status braidloc_tl_verify(const braidloc_tl_options* o, braidloc_report** out) {
  if (!o) return guard([] { require(nullptr, "options"); });
  return run_report(o->timing, out, [&] {
    braidloc::cmd::TlOptions c;
    c.matrix = str_or(o->matrix);
    c.d = o->d;
    c.q = str_or(o->q);
    c.n = o->n;
    c.jw = o->jw;
    c.ell = o->ell;
    c.m = o->m;
    c.cross_check = o->cross_check != 0;
    c.backend = backend_of(o->backend);
    return braidloc::cmd::tl_verify(c);
  });
}

braidloc_status braidloc_fusion_analyze(const braidloc_fusion_options* o, braidloc_report** out) {
  if (!o) return guard([] { require(nullptr, "options"); });
  return run_report(o->timing, out, [&] {
    braidloc::cmd::FusionOptions c;
    c.catalog = str_or(o->catalog);
    c.param = o->param;
    c.ring_file = str_or(o->ring_file);
    c.object = str_or(o->object, "X");
    c.depth = o->depth;
    c.expect = str_or(o->expect);
    return braidloc::cmd::fusion_analyze(c);
  });
}

braidloc_status braidloc_gaussian_build(const braidloc_gaussian_options* o, braidloc_report** out) {
  if (!o) return guard([] { require(nullptr, "options"); });
  return run_report(o->timing, out, [&] {
    braidloc::cmd::GaussianOptions c;
    c.p = o->p;
    c.n = o->n;
    c.omega_exponent = o->omega_exponent;
    c.localize = o->localize != 0;
    c.zeta = str_or(o->zeta);
    c.out_dir = str_or(o->out_dir);
    c.include_matrices = o->include_matrices != 0;
    return braidloc::cmd::gaussian_build(c);
  });
}

braidloc_status braidloc_run_suite(const braidloc_suite_options* o, braidloc_report** out) {
  if (!o) return guard([] { require(nullptr, "options"); });
  return run_report(o->timing, out, [&] {
    braidloc::cmd::SuiteOptions c;
    c.quick = o->quick != 0;
    return braidloc::cmd::paper_suite(c);
  });
}

}  // extern "C"
