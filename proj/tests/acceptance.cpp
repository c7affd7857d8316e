// Copyright cartan-spinors contributors.
// SPDX-License-Identifier: Apache-2.0

// Acceptance run: one PASS/FAIL line per criterion, each against its time
// budget. Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cartan/cartan.h"
#include "cartan/verify.hpp"

using namespace cartan;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

void need(Outcome& o, bool cond, const std::string& what) {
  if (cond) return;
  if (o.ok) o.detail = what;
  o.ok = false;
}

VerifyConfig config(int n, int m, int samples, std::uint64_t seed = 1) {
  VerifyConfig c;
  c.n = n;
  c.m = m;
  c.samples = samples;
  c.seed = seed;
  return c;
}

// All checks of a suite pass; the failing ones are named.
void suite_passes(Outcome& o, Suite s, const VerifyConfig& c) {
  for (const auto& ch : run_suite(s, c).checks) {
    std::ostringstream os;
    os << ch.check_name << " n=" << c.n << " residual " << ch.residual;
    need(o, ch.pass, os.str());
  }
}

Outcome clifford() {
  Outcome o;
  for (int n = 1; n <= 8; ++n) {
    const auto r = run_suite(Suite::clifford, config(n, 1, 100));
    bool span_seen = false;
    for (const auto& ch : r.checks) {
      need(o, ch.pass && ch.residual == 0.0, ch.check_name + " n=" + std::to_string(n));
      if (ch.check_name == "clifford.cartan_span_dimension") span_seen = true;
    }
    if (n % 2 == 1 && n >= 3) need(o, span_seen, "no span check at n=" + std::to_string(n));
  }
  for (int n : {3, 5, 7}) {
    const auto cartan = build_rep(n, RepKind::cartan);
    const std::size_t expected = 2 * (std::size_t{1} << (n - 1));  // 2 * 4^((n-1)/2)
    need(o, represented_span_dimension(cartan) == expected, "span dimension at n=" + std::to_string(n));
  }
  o.detail = o.ok ? "n=1..8 exact; Cartan span 2*4^((n-1)/2) for n=3,5,7" : o.detail;
  return o;
}

Outcome lifts() {
  Outcome o;
  double worst = 0;
  for (int n = 2; n <= 6; ++n)
    for (const auto& ch : run_suite(Suite::bundle, config(n, 1, 100)).checks) {
      if (ch.check_name.rfind("bundle.lift_involution", 0) != 0 && ch.check_name.rfind("bundle.equivariance", 0) != 0) continue;
      need(o, ch.samples == 100, ch.check_name + " sample count");
      need(o, ch.residual <= 1e-12, ch.check_name + " n=" + std::to_string(n));
      worst = std::max(worst, ch.residual);
    }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.1e", worst);
  if (o.ok) o.detail = std::string("n=2..6, 100 samples, worst residual ") + buf;
  return o;
}

Outcome splitting() {
  Outcome o;
  for (int n = 2; n <= 7; ++n) {
    const BundleContext ctx(n);
    Sampler rng(1000 + static_cast<std::uint64_t>(n));
    const auto b = splitting_behavior(ctx, 20, rng);
    const std::string tag = " n=" + std::to_string(n);
    need(o, b.violations == 0, "violations" + tag);
    need(o, b.samples == 20, "sample count" + tag);
    if (n % 2 == 0)
      need(o, b.even_swaps, "even_swaps" + tag);
    else
      need(o, b.odd_preserves, "odd_preserves" + tag);
  }
  if (o.ok) o.detail = "even n swap, odd n preserve, 20 samples, no violations";
  return o;
}

Outcome curvature() {
  Outcome o;
  for (int n = 2; n <= 5; ++n) suite_passes(o, Suite::curvature, config(n, 3, 1));
  if (o.ok) o.detail = "exact zero on full degree<=3 bases, n=2..5";
  return o;
}

Outcome lichnerowicz() {
  Outcome o;
  for (int n = 2; n <= 5; ++n) suite_passes(o, Suite::lichnerowicz, config(n, 3, 1));
  if (o.ok) o.detail = "D^2 - Laplacian - n(n-1)/4 vanishes on full degree<=3 bases, n=2..5";
  return o;
}

Outcome killing() {
  Outcome o;
  for (int n = 2; n <= 6; ++n) {
    suite_passes(o, Suite::killing, config(n, 1, 5));
    // Independent of the suite: D(1-x)e_c = n/2 (1-x)e_c exactly.
    const BundleContext ctx(n);
    for (std::size_t c = 0; c < ctx.spinor_dim(); ++c) {
      std::vector<GaussRational> phi0(ctx.spinor_dim());
      phi0[c] = GaussRational(1);
      const auto f = killing_field(ctx, phi0, KillingSign::minus);
      const auto df = dirac_apply(ctx, f);
      need(o, harmonic_reduce(df - f * GaussRational(Rational(n, 2))).is_zero(), "D eigenvalue n/2 at n=" + std::to_string(n));
    }
  }
  if (o.ok) o.detail = "lambda=-1/2 in rp_plus, +1/2 in rp_minus, D = n/2 exactly, other lambda rejected by margin, n=2..6";
  return o;
}

Outcome spectra() {
  Outcome o;
  std::ostringstream summary;
  for (int n : {2, 3}) {
    const BundleContext ctx(n);
    for (int m = 1; m <= 3; ++m) {
      const std::string tag = " n=" + std::to_string(n) + " m=" + std::to_string(m);
      const auto s = compute_spectrum(n, BundleSelector::sphere, m, Mode::exact);
      const auto p = compute_spectrum(n, BundleSelector::rp_plus, m, Mode::exact);
      const auto q = compute_spectrum(n, BundleSelector::rp_minus, m, Mode::exact);
      // (a) symmetry and (b) partition over non-truncated eigenvalues.
      for (const auto* t : {&s, &p, &q})
        for (const auto& e : t->entries) {
          if (e.truncated) continue;
          const double l = e.eigenvalue;
          need(o, s.multiplicity(l) == s.multiplicity(-l), "symmetry at " + std::to_string(l) + tag);
          need(o, s.multiplicity(l) == p.multiplicity(l) + q.multiplicity(l), "partition at " + std::to_string(l) + tag);
        }
      // (c) monogenic oracle: (1 -+ X)P with DP = 0, P of degree k.
      std::map<long long, std::size_t> oracle;  // 2*mu -> count
      for (int k = 0; k <= std::min(2, m - 1); ++k)
        for (const auto& poly : monogenic_kernel(n + 1, k)) {
          const auto xp = position_times(ctx, poly);
          for (int sign : {-1, 1}) {
            const auto f = harmonic_reduce(poly + xp * GaussRational(sign));
            const auto df = dirac_apply(ctx, f);
            const GaussRational mu = detail::eigenvalue_ratio(f, df);
            need(o, harmonic_reduce(df - f * mu).is_zero(), "oracle field is not an eigenfield" + tag);
            oracle[std::llround(2 * mu.to_complex().real())] += 1;
          }
        }
      for (const auto& [twice_mu, count] : oracle)
        need(o, s.multiplicity(twice_mu / 2.0) >= count,
             "oracle eigenvalue " + std::to_string(twice_mu / 2.0) + " x" + std::to_string(count) + tag);
      // ... and every exact sphere eigenvalue is one the oracle produced.
      for (const auto& e : s.entries)
        if (!e.truncated)
          need(o, oracle.count(std::llround(2 * e.eigenvalue)) == 1 && std::abs(2 * e.eigenvalue - std::round(2 * e.eigenvalue)) < 1e-8,
               "table eigenvalue " + std::to_string(e.eigenvalue) + " has no oracle field" + tag);
      // (d) Killing eigenvalues.
      const std::size_t dim = ctx.spinor_dim();
      need(o, s.multiplicity(n / 2.0) >= dim && s.multiplicity(-n / 2.0) >= dim, "+-n/2 multiplicity" + tag);
      summary << (summary.tellp() > 0 ? "; " : "") << tag.substr(1) << " (basis " << s.basis_dim << ")";
    }
  }
  if (o.ok) o.detail = "symmetry, partition, monogenic oracle k<=2, +-n/2 >= dim spinor for " + summary.str();
  return o;
}

std::string report_once() {
  cartan_config c;
  cartan_config_default(&c);
  c.seed = 42;
  cartan_session* s = nullptr;
  if (cartan_session_create(&c, &s) != CARTAN_OK) return {};
  int pass = 0;
  std::string out;
  if (cartan_report(s, 1, &pass) == CARTAN_OK && pass) out = cartan_result_json(s);
  cartan_session_destroy(s);
  return out;
}

Outcome determinism() {
  Outcome o;
  const std::string a = report_once();
  const std::string b = report_once();
  need(o, !a.empty(), "report failed");
  need(o, a == b, "reports differ");
  if (o.ok) o.detail = "two seeded reports (n=3, m=2, all suites, three spectra) byte-identical, " + std::to_string(a.size()) + " bytes";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double limit_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"clifford suite", 10, clifford},          {"lift suite", 5, lifts},
      {"splitting suite", 10, splitting},        {"curvature identity", 60, curvature},
      {"lichnerowicz identity", 120, lichnerowicz}, {"killing suite", 10, killing},
      {"spectrum consistency", 300, spectra},    {"determinism", 60, determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs < c.limit_seconds;
    const bool pass = o.ok && in_time;
    if (!pass) ++failures;
    std::printf("%s criterion %zu (%s): %s [%.2f s, limit %.0f s%s]\n", pass ? "PASS" : "FAIL", i + 1, c.name,
                o.detail.c_str(), secs, c.limit_seconds, in_time ? "" : ", over budget");
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
