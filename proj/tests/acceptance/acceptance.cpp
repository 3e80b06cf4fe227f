// Acceptance gate: one pass/fail line per criterion, nonzero exit if any fails.

#define DOCTEST_CONFIG_IMPLEMENT
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>

#include "braidloc/braid_rep.hpp"
#include "braidloc/builtins.hpp"
#include "braidloc/fusion.hpp"
#include "braidloc/gaussian.hpp"
#include "braidloc/temperley_lieb.hpp"
#include "braidloc/yang_baxter.hpp"
#include "doctest.h"

using namespace braidloc;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << " FAILED: " << what << ";";
    }
  }
};

BigInt pow_int(long b, int e) {
  BigInt r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

void criterion1(Outcome& o) {
  for (const char* name : {"dye4", "inf9", "loc6"}) {
    const auto spec = ybe::make_spec(builtin_matrix(name));
    o.require(ybe::check_ybe(spec.matrix, spec.local_dim), std::string("ybe ") + name);
    o.require(is_unitary(spec.matrix), std::string("unitary ") + name);
  }
  for (int p : {3, 5, 7}) {
    const auto spec = gaussian::local_r(p);
    o.require(ybe::check_ybe(spec.matrix, p), "ybe local_r(" + std::to_string(p) + ")");
    o.require(is_unitary(spec.matrix), "unitary local_r(" + std::to_string(p) + ")");
  }
  o.detail << " 6 matrices";
}

void criterion2(Outcome& o) {
  const auto spec = ybe::make_spec(builtin_matrix("loc6"));
  const Scalar q(CycNum::zeta(6, 5));
  const std::vector<Scalar> roots = {Scalar(-1L), q};
  o.require(annihilator_check(spec.matrix, roots), "annihilator");
  const auto mult = spectrum_multiplicities(spec.matrix, roots);
  o.require(mult == std::vector<long>{6, 3}, "multiplicities");
  const auto tl4 = tl::tl_from_r(spec, 4, q);
  o.require(tl::check_tl_relations(tl4), "TL relations n=4");
  o.require(tl4.delta_inv_sq && tl4.delta_inv_sq->is_exact() && tl4.delta_inv_sq->exact() == CycNum(Rational(1, 3)),
            "loop parameter 1/3");
  const auto tl5 = tl::tl_from_r(spec, 5, q);
  const auto seq = tl::jones_wenzl_sequence(tl5, 5, Scalar(CycNum::zeta(12)));
  o.require(tl5.E.front().dim() == 243, "dimension 243");
  for (const auto& p : seq) {
    if (p.k < 2) continue;
    const bool zero = p.matrix.is_zero();
    o.require(zero == (p.k == 5), "p" + std::to_string(p.k));
    o.detail << " p" << p.k << (zero ? "=0" : "!=0");
  }
}

// Closed forms at ell = 6 keyed by label; labels with dimension 0 do not occur at level n.
std::map<std::string, BigInt> expected_dims(int n) {
  if (n % 2 == 1) {
    const BigInt t = pow_int(3, (n - 1) / 2);
    return {{"X", (t + 1) / 2}, {"X'", (t - 1) / 2}};
  }
  const BigInt t = pow_int(3, n / 2 - 1);
  return {{"1", (t + 1) / 2}, {"Y", t}, {"Z", (t - 1) / 2}};
}

std::map<std::string, BigInt> expected_multiplicities(int n) {
  const BigInt t = pow_int(3, (n + 1) / 2);
  if (n % 2 == 1) return {{"X", t}, {"X'", t}};
  return {{"1", t}, {"Y", 2 * t}, {"Z", t}};
}

// Values of `v` agree with `expected` on its labels; every other expected label has dimension 0.
bool matches(const tl::LabeledVector& v, const std::map<std::string, BigInt>& expected,
             const std::map<std::string, BigInt>& dims) {
  for (std::size_t i = 0; i < v.labels.size(); ++i) {
    const auto it = expected.find(v.labels[i]);
    if (it == expected.end() || it->second != v.values[i]) return false;
  }
  for (const auto& [label, dim] : dims)
    if (std::find(v.labels.begin(), v.labels.end(), label) == v.labels.end() && dim != 0) return false;
  return true;
}

void criterion3(Outcome& o) {
  for (int n = 1; n <= 9; ++n) {
    const auto expected = expected_dims(n);
    o.require(matches(tl::simple_dims(6, n), expected, expected), "n=" + std::to_string(n));
  }
  o.detail << " n=1..9";
}

void criterion4(Outcome& o) {
  for (int n = 1; n <= 8; ++n) {
    const auto mu = tl::multiplicity_solve(6, n, 3);
    if (!mu) {
      o.require(false, "n=" + std::to_string(n) + " infeasible");
      continue;
    }
    const auto d = tl::simple_dims(6, n);
    BigInt pairing = 0;
    for (std::size_t i = 0; i < d.values.size(); ++i) pairing += mu->values[i] * d.values[i];
    o.require(matches(*mu, expected_multiplicities(n), expected_dims(n)), "mu n=" + std::to_string(n));
    o.require(pairing == pow_int(3, n), "pairing n=" + std::to_string(n));
  }
  o.detail << " n=1..8";
}

void criterion5(Outcome& o) {
  o.detail << " passing ell:";
  for (int ell = 3; ell <= 12; ++ell) {
    const auto ring = fusion::catalog("sl2_level", ell - 2);
    const auto r = fusion::localization_obstruction(ring, ring.index_of("X"));
    const bool pass = r.verdict == fusion::Verdict::NecessaryConditionsPass;
    if (pass) o.detail << " " << ell;
    o.require(pass == (ell == 3 || ell == 4 || ell == 6), "ell=" + std::to_string(ell));
  }
  const auto fib = fusion::catalog("fibonacci");
  const auto f = fusion::fpdim(fib, fib.index_of("Y"));
  o.require(std::abs(f.approx - 1.6180340) < 1e-6, "Fibonacci FPdim");
  o.require(!f.exact_sq, "Fibonacci FPdim^2 non-integer");
  char buf[64];
  std::snprintf(buf, sizeof buf, "; Fibonacci FPdim %.7f", f.approx);
  o.detail << buf;
}

void criterion6(Outcome& o) {
  const auto sl = fusion::catalog("sl2_level", 4);
  const int p = fusion::period_and_blocks(sl, sl.index_of("X")).period;
  o.require(p == 2, "sl2_level(4) period");
  o.detail << " sl2_level(4) p=" << p;
  for (int N : {3, 5, 7}) {
    const auto ring = fusion::catalog("so_level2_odd", N);
    const int x = ring.index_of("eps");
    const int period = fusion::period_and_blocks(ring, x).period;
    const auto f = fusion::fpdim(ring, x);
    o.require(period == 2, "so_level2_odd(" + std::to_string(N) + ") period");
    o.require(f.exact_sq && *f.exact_sq == N, "so_level2_odd(" + std::to_string(N) + ") FPdim^2");
    o.detail << "; N=" << N << " p=" << period << " FPdim^2=" << (f.exact_sq ? f.exact_sq->get_str() : "?");
  }
}

void criterion7(Outcome& o) {
  for (int p : {3, 5, 7}) {
    const auto es = gaussian::es_rep(p, 3);
    const std::string tag = "p=" + std::to_string(p);
    o.require(gaussian::check_es_relations(es.u, p, es.omega), "regular " + tag);
    o.require(gaussian::check_es_relations(gaussian::localized_u(p, 3), p, es.omega), "localized " + tag);
    o.require(gaussian::local_u(p).pow(p).is_identity(), "U^p " + tag);
    const auto tc = gaussian::trace_criterion(p, 3);
    o.require(tc.passed && tc.monomials == static_cast<long>(p) * p - 1, "trace criterion " + tag);
    o.detail << " " << tag << ":" << tc.monomials << " traceless";
  }
}

void criterion8(Outcome& o) {
  const auto gamma = gaussian::gaussian_rep(gaussian::es_rep(3, 3));
  const auto g = braid::probe_image(gamma, 1000);
  const bool finite = g.status == braid::ProbeResult::Status::Finite;
  o.detail << " gamma3(B3) p=3 order " << (finite ? std::to_string(g.order) : "unbounded") << " (expected 12);";
  o.require(finite && g.order == 12, "gamma3 order");

  const auto inf = ybe::projective_order(builtin_matrix("inf9"), 10000);
  const bool inf_exceeds = inf.status == ybe::OrderResult::Status::ExceedsBound;
  o.detail << " inf9 " << (inf_exceeds ? "ExceedsBound" : "Finite") << " at 10^4;";
  o.require(inf_exceeds, "inf9");

  const auto m = braid::rep_from_r(ybe::make_spec(builtin_matrix("uqsl2_m?q=z16^1")), 3);
  const auto mp = braid::probe_image(m, 20000);
  const bool m_exceeds = mp.status == braid::ProbeResult::Status::ExceedsBound;
  o.detail << " M-matrix n=3 " << (m_exceeds ? "ExceedsBound" : "Finite") << " at 2*10^4";
  o.require(m_exceeds, "M-matrix");
}

void criterion9(Outcome& o) {
  doctest::Context ctx;
  ctx.setOption("minimal", true);
  ctx.setOption("no-version", true);
  const int rc = ctx.run();
  o.require(rc == 0, "property cases");
  o.detail << " property runner exit " << rc;
}

struct Criterion {
  int number;
  const char* title;
  double limit_seconds;  // 0: no limit
  std::function<void(Outcome&)> run;
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "YBE and unitarity of the named matrices", 10, criterion1},
      {2, "loc6 Temperley-Lieb pipeline", 60, criterion2},
      {3, "simple-module dimension formulas at ell = 6", 0, criterion3},
      {4, "multiplicity identities at ell = 6, m = 3", 0, criterion4},
      {5, "localization sweep over sl2 levels", 0, criterion5},
      {6, "period detection", 0, criterion6},
      {7, "Gaussian relations and trace criterion", 0, criterion7},
      {8, "braid image probes", 300, criterion8},
      {9, "randomized property suite", 0, criterion9},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail << " error: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && secs >= c.limit_seconds) {
      o.ok = false;
      o.detail << " FAILED: runtime limit " << c.limit_seconds << " s";
    }
    if (!o.ok) ++failures;
    std::printf("[%s] criterion %d: %s (%.2f s)%s\n", o.ok ? "PASS" : "FAIL", c.number, c.title, secs,
                o.detail.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d of 9 criteria passed\n", 9 - failures);
  return failures == 0 ? 0 : 1;
}
