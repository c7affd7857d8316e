// Copyright cartan-spinors contributors.
// SPDX-License-Identifier: Apache-2.0

#include "cartan/verify.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace cartan {

namespace {

// Each suite draws from its own stream so that results do not depend on
// which other suites ran before it.
Sampler suite_sampler(const VerifyConfig& c, Suite s) {
  return Sampler(c.seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(s) + 1);
}

CheckResult make_check(std::string name, int n, int samples, double residual, double threshold) {
  CheckResult c;
  c.check_name = std::move(name);
  c.n = n;
  c.samples = samples;
  c.residual = residual;
  c.threshold = threshold;
  c.pass = std::isfinite(residual) && residual <= threshold;
  return c;
}

template <class S>
double tol(double floating) {
  return ScalarTraits<S>::mode == Mode::exact ? 0.0 : floating;
}

// ---------------------------------------------------------------------------

void clifford_suite(const VerifyConfig& cfg, VerificationReport& rep) {
  const int n = cfg.n;
  if (n < 1 || n > 8) throw Error(ErrorCode::usage, "clifford suite needs 1 <= n <= 8");
  Sampler rng = suite_sampler(cfg, Suite::clifford);
  const auto alg = build_algebra(n);
  const Blade dim = static_cast<Blade>(alg.dimension());

  double bad = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const auto ei = AlgebraElement::generator(n, i), ej = AlgebraElement::generator(n, j);
      const auto ac = multiply(alg, ei, ej) + multiply(alg, ej, ei);
      if (!(ac == AlgebraElement::scalar(n, i == j ? -2 : 0))) ++bad;
    }
  rep.add(make_check("clifford.generator_relations", n, n * n, bad, 0));

  std::vector<RepKind> kinds = n % 2 == 0 ? std::vector<RepKind>{RepKind::dirac}
                                          : std::vector<RepKind>{RepKind::pauli, RepKind::cartan};
  for (auto kind : kinds) {
    const auto r = build_rep(n, kind);
    const auto id = Matrix<GaussRational>::identity(r.dim());
    double worst = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        auto d = r.gamma(i) * r.gamma(j) + r.gamma(j) * r.gamma(i);
        if (i == j) d += id * GaussRational(2);
        worst = std::max(worst, d.max_abs());
      }
    rep.add(make_check(std::string("clifford.representation_relations.") + to_string(kind), n, n * n, worst, 0));
  }

  // alpha is an involution on every blade, negates generators, and respects
  // products e_i X for every generator and blade; by induction on the grade
  // of the left factor this is multiplicativity on all of Cliff(n).
  bad = 0;
  for (Blade a = 0; a < dim; ++a) {
    const auto ea = AlgebraElement::blade(n, a);
    const auto aa = involution_alpha(ea);
    if (!(involution_alpha(aa) == ea)) ++bad;
    for (int i = 1; i <= n; ++i) {
      const auto ei = AlgebraElement::generator(n, i);
      if (!(involution_alpha(multiply(alg, ei, ea)) == multiply(alg, involution_alpha(ei), aa))) ++bad;
    }
  }
  for (int i = 1; i <= n; ++i) {
    const auto ei = AlgebraElement::generator(n, i);
    if (!(involution_alpha(ei) == ei * GaussRational(-1))) ++bad;
  }
  rep.add(make_check("clifford.alpha_involution", n, static_cast<int>(dim), bad, 0));

  const auto main_rep = build_rep(n, n % 2 == 0 ? RepKind::dirac : RepKind::cartan);
  bad = 0;
  for (int s = 0; s < cfg.samples; ++s) {
    const auto a = AlgebraElement::blade(n, static_cast<Blade>(rng.integer(0, static_cast<int>(dim) - 1)));
    const auto b = AlgebraElement::blade(n, static_cast<Blade>(rng.integer(0, static_cast<int>(dim) - 1)));
    if (!(represent(main_rep, multiply(alg, a, b)) == represent(main_rep, a) * represent(main_rep, b))) ++bad;
  }
  rep.add(make_check("clifford.representation_homomorphism", n, cfg.samples, bad, 0));

  if (n % 2 == 1) {
    const auto vol = AlgebraElement::volume(n);
    rep.add(make_check("clifford.alpha_volume", n, 1, (involution_alpha(vol) + vol).is_zero() ? 0.0 : 1.0, 0));
    const std::size_t span = represented_span_dimension(main_rep);
    const std::size_t expected = 2 * (std::size_t{1} << (n - 1));
    auto c = make_check("clifford.cartan_span_dimension", n, 1,
                        std::abs(static_cast<double>(span) - static_cast<double>(expected)), 0);
    c.details = {{"span_dimension", span}, {"expected", expected}};
    rep.add(std::move(c));
    const auto vs = volume_splitting(main_rep);
    const bool ok = vs.commutes_with_generators && vs.subspaces_invariant && vs.plus_dim == vs.minus_dim &&
                    vs.plus_dim + vs.minus_dim == main_rep.dim();
    rep.add(make_check("clifford.volume_splitting", n, 1, ok ? 0.0 : 1.0, 0));
  }
}

template <class S>
void bundle_suite(const VerifyConfig& cfg, VerificationReport& rep) {
  const int n = cfg.n;
  const BundleContext ctx(n);
  Sampler rng = suite_sampler(cfg, Suite::bundle);
  const int samples = cfg.samples;

  for (auto sign : {LiftSign::plus, LiftSign::minus}) {
    double eq = 0, inv = 0;
    for (int s = 0; s < samples; ++s) {
      const auto x = rng.sphere_point(n);
      const auto t = project_tangent(x, rng.ambient(n));
      const Eigen::VectorXcd phi = rng.spinor(ctx.spinor_dim());
      eq = std::max(eq, equivariance_defect(ctx, sign, t, phi));
      const auto once = lift_g(ctx, sign, x, phi);
      const auto twice = lift_g(ctx, sign, once.x, once.phi);
      inv = std::max(inv, (twice.phi - phi).norm() + (twice.x.vector() - x.vector()).norm());
    }
    const std::string suffix = sign == LiftSign::plus ? "plus" : "minus";
    rep.add(make_check("bundle.lift_involution." + suffix, n, samples, inv, 1e-12));
    rep.add(make_check("bundle.equivariance." + suffix, n, samples, eq, 1e-12));
  }
  rep.add(make_check("bundle.skew_adjointness", n, samples, skew_adjointness_defect(ctx, samples, rng), 1e-12));

  const int field_samples = std::min(samples, 4);
  double proj = 0, leib = 0, metric = 0;
  for (int s = 0; s < field_samples; ++s) {
    const auto phi = harmonic_reduce(rng.field<S>(n, 2));
    const auto p = project_section(ctx, BundleSelector::rp_plus, phi);
    const auto q = project_section(ctx, BundleSelector::rp_minus, phi);
    proj = std::max({proj, (p + q - phi).max_coeff_norm(), (project_section(ctx, BundleSelector::rp_plus, p) - p).max_coeff_norm(),
                     (project_section(ctx, BundleSelector::rp_minus, q) - q).max_coeff_norm(),
                     project_section(ctx, BundleSelector::rp_plus, q).max_coeff_norm(),
                     section_check(ctx, BundleSelector::rp_plus, p), section_check(ctx, BundleSelector::rp_minus, q)});
    std::vector<S> a(static_cast<std::size_t>(n + 1));
    for (auto& v : a) v = ScalarTraits<S>::from_int(rng.integer(-3, 3));
    const auto v = TangentField<S>::projected(n, a);
    const auto w = TangentField<S>::coordinate(n, rng.integer(0, n));
    leib = std::max(leib, leibniz_defect(ctx, v, w, phi));
    const auto psi = harmonic_reduce(rng.field<S>(n, 2));
    std::vector<SpherePoint> pts;
    for (int k = 0; k < 10; ++k) pts.push_back(rng.sphere_point(n));
    metric = std::max(metric, metric_defect(ctx, v, phi, psi, pts) / (1 + phi.max_coeff_norm() * psi.max_coeff_norm()));
  }
  rep.add(make_check("bundle.section_projectors", n, field_samples, proj, tol<S>(1e-12)));
  rep.add(make_check("bundle.leibniz", n, field_samples, leib, tol<S>(1e-10)));
  rep.add(make_check("bundle.metric_compatibility", n, field_samples, metric, 1e-11));
}

template <class S>
void curvature_suite(const VerifyConfig& cfg, VerificationReport& rep) {
  const int n = cfg.n;
  const BundleContext ctx(n);
  const FieldBasis<S> basis(n, cfg.m);
  const auto frame = coordinate_frame<S>(n);
  double worst = 0;
  for (const auto& f : basis.fields())
    for (int a = 0; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b) worst = std::max(worst, curvature_defect(ctx, frame[static_cast<std::size_t>(a)], frame[static_cast<std::size_t>(b)], f));
  auto c = make_check("curvature.identity", n, static_cast<int>(basis.size()), worst, tol<S>(1e-10));
  c.details = {{"degree_bound", cfg.m}, {"basis_dim", basis.size()}, {"frame_pairs", n * (n + 1) / 2}};
  rep.add(std::move(c));
}

template <class S>
void lichnerowicz_suite(const VerifyConfig& cfg, VerificationReport& rep) {
  const int n = cfg.n;
  const BundleContext ctx(n);
  const FieldBasis<S> basis(n, cfg.m);
  double worst = 0;
  for (const auto& f : basis.fields()) worst = std::max(worst, lichnerowicz_defect(ctx, f));
  auto c = make_check("lichnerowicz.identity", n, static_cast<int>(basis.size()), worst, tol<S>(1e-9));
  c.details = {{"degree_bound", cfg.m}, {"basis_dim", basis.size()}, {"tau", n * (n - 1)}};
  rep.add(std::move(c));
}

template <class S>
void killing_suite(const VerifyConfig& cfg, VerificationReport& rep) {
  const int n = cfg.n;
  const BundleContext ctx(n);
  Sampler rng = suite_sampler(cfg, Suite::killing);
  const int points = std::max(1, std::min(cfg.samples, 5));

  std::vector<std::vector<S>> spinors;
  for (std::size_t c = 0; c < ctx.spinor_dim(); ++c) {
    std::vector<S> v(ctx.spinor_dim());
    v[c] = ScalarTraits<S>::from_int(1);
    spinors.push_back(v);
  }
  spinors.push_back(rng.integer_spinor<S>(ctx.spinor_dim()));

  double minus_res = 0, minus_member = 0, plus_res = 0, plus_member = 0, eig = 0, wrong_margin = 0;
  double consistency = 0, margin_shortfall = 0;
  const Rational bad_lambdas[] = {Rational(0), Rational(1, 4), Rational(-1, 3), Rational(1), Rational(-3, 2)};
  for (const auto& phi0 : spinors) {
    const auto fm = killing_field(ctx, phi0, KillingSign::minus);
    const auto fp = killing_field(ctx, phi0, KillingSign::plus);
    const auto rm = killing_verify(ctx, fm, Rational(-1, 2), points, rng);
    const auto rp = killing_verify(ctx, fp, Rational(1, 2), points, rng);
    minus_res = std::max(minus_res, rm.residual);
    plus_res = std::max(plus_res, rp.residual);
    minus_member = std::max(minus_member, rm.rp_plus_residual);
    plus_member = std::max(plus_member, rp.rp_minus_residual);
    eig = std::max({eig, std::abs(rm.dirac_eigenvalue - n / 2.0) + rm.dirac_residual,
                    std::abs(rp.dirac_eigenvalue + n / 2.0) + rp.dirac_residual});
    consistency = std::max({consistency, rm.curvature_consistency / (1 + rm.field_norm),
                            rp.curvature_consistency / (1 + rp.field_norm)});
    // The opposite Killing number must be rejected.
    const auto wrong = killing_verify(ctx, fm, Rational(1, 2), 1, rng);
    if (wrong.residual <= tol<S>(1e-10)) wrong_margin += 1;
    if (n >= 2)
      for (const auto& lam : bad_lambdas) {
        const auto r = killing_verify(ctx, fm, lam, points, rng);
        const double l = lam.to_double();
        const double margin = std::abs(2 * l * l - 0.5) * r.field_norm;
        margin_shortfall = std::max(margin_shortfall, margin * (1 - 1e-9) - r.curvature_consistency);
        if (r.residual <= tol<S>(1e-10)) wrong_margin += 1;
      }
  }
  const int count = static_cast<int>(spinors.size());
  rep.add(make_check("killing.minus_half", n, count, minus_res, tol<S>(1e-10)));
  rep.add(make_check("killing.rp_plus_membership", n, count, minus_member, tol<S>(1e-10)));
  rep.add(make_check("killing.plus_half", n, count, plus_res, tol<S>(1e-10)));
  rep.add(make_check("killing.rp_minus_membership", n, count, plus_member, tol<S>(1e-10)));
  rep.add(make_check("killing.dirac_eigenvalue", n, count, eig, tol<S>(1e-10)));
  rep.add(make_check("killing.curvature_consistency", n, count * points, consistency, 1e-10));
  rep.add(make_check("killing.rejects_other_lambda", n, count, wrong_margin, 0));
  rep.add(make_check("killing.curvature_margin", n, count * points, std::max(0.0, margin_shortfall), 0));
}

void splitting_suite(const VerifyConfig& cfg, VerificationReport& rep) {
  const int n = cfg.n;
  const BundleContext ctx(n);
  Sampler rng = suite_sampler(cfg, Suite::splitting);
  const int samples = std::max(cfg.samples, 20);
  const auto d = static_cast<Eigen::Index>(ctx.spinor_dim());
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(d, d);
  double alg = 0;
  for (int s = 0; s < samples; ++s) {
    const auto x = rng.sphere_point(n);
    const auto f = splitting_operator(ctx, x);
    const Eigen::MatrixXcd xm = ctx.clifford(x.vector());
    if (n % 2 == 0) {
      alg = std::max(alg, (f.f * f.f - id).norm());
    } else {
      const int k = (n - 1) / 2;
      alg = std::max(alg, (f.f * f.f - (k % 2 == 0 ? -1.0 : 1.0) * id).norm());
      alg = std::max(alg, (f.f * xm + xm * f.f).norm());
      const Eigen::MatrixXcd t = ctx.clifford(project_tangent(x, rng.ambient(n)).t);
      alg = std::max(alg, (f.f * t - t * f.f).norm() / (1 + t.norm()));
    }
  }
  rep.add(make_check("splitting.operator_algebra", n, samples, alg, 1e-12));
  const auto b = splitting_behavior(ctx, samples, rng);
  auto c = make_check("splitting.parity_behavior", n, samples,
                      static_cast<double>(b.violations) + ((n % 2 == 0) ? !b.even_swaps : !b.odd_preserves), 0);
  c.details = {{"even_swaps", b.even_swaps},
               {"odd_preserves", b.odd_preserves},
               {"swaps", b.swaps},
               {"preserves", b.preserves},
               {"max_residual", b.max_residual}};
  rep.add(std::move(c));
}

template <class S>
void run_templated(Suite suite, const VerifyConfig& cfg, VerificationReport& rep) {
  switch (suite) {
    case Suite::clifford: clifford_suite(cfg, rep); break;
    case Suite::bundle: bundle_suite<S>(cfg, rep); break;
    case Suite::curvature: curvature_suite<S>(cfg, rep); break;
    case Suite::lichnerowicz: lichnerowicz_suite<S>(cfg, rep); break;
    case Suite::killing: killing_suite<S>(cfg, rep); break;
    case Suite::splitting: splitting_suite(cfg, rep); break;
    case Suite::all:
      for (auto s : {Suite::clifford, Suite::bundle, Suite::curvature, Suite::lichnerowicz, Suite::killing, Suite::splitting})
        run_templated<S>(s, cfg, rep);
      break;
  }
}

}  // namespace

const char* to_string(Suite s) {
  switch (s) {
    case Suite::clifford: return "clifford";
    case Suite::bundle: return "bundle";
    case Suite::curvature: return "curvature";
    case Suite::lichnerowicz: return "lichnerowicz";
    case Suite::killing: return "killing";
    case Suite::splitting: return "splitting";
    case Suite::all: return "all";
  }
  return "?";
}

Suite parse_suite(const std::string& s) {
  for (auto v : {Suite::clifford, Suite::bundle, Suite::curvature, Suite::lichnerowicz, Suite::killing, Suite::splitting, Suite::all})
    if (s == to_string(v)) return v;
  throw Error(ErrorCode::usage, "unknown suite '" + s + "'");
}

Mode parse_mode(const std::string& s) {
  if (s == "exact") return Mode::exact;
  if (s == "float") return Mode::floating;
  throw Error(ErrorCode::usage, "unknown mode '" + s + "' (expected exact or float)");
}

void validate(const VerifyConfig& c) {
  if (c.n < 1 || c.n > max_sphere_dim) throw Error(ErrorCode::usage, "n must be in [1, 7], got " + std::to_string(c.n));
  if (c.m < 0 || c.m > 6) throw Error(ErrorCode::usage, "m must be in [0, 6], got " + std::to_string(c.m));
  if (c.samples < 1) throw Error(ErrorCode::usage, "samples must be at least 1");
}

void VerificationReport::add(CheckResult c) {
  pass = pass && c.pass;
  checks.push_back(std::move(c));
}

VerificationReport run_suite(Suite suite, const VerifyConfig& config) {
  if (suite != Suite::clifford) validate(config);
  VerificationReport rep;
  rep.suite = to_string(suite);
  if (config.mode == Mode::exact)
    run_templated<GaussRational>(suite, config, rep);
  else
    run_templated<Complex>(suite, config, rep);
  return rep;
}

nlohmann::ordered_json to_json(const CheckResult& c) {
  nlohmann::ordered_json j;
  j["check_name"] = c.check_name;
  j["n"] = c.n;
  j["samples"] = c.samples;
  j["max_residual"] = c.residual;
  j["threshold"] = c.threshold;
  j["pass"] = c.pass;
  if (!c.details.is_null()) j["details"] = c.details;
  return j;
}

nlohmann::ordered_json to_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  auto checks = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  j["checks"] = std::move(checks);
  j["pass"] = r.pass;
  return j;
}

nlohmann::ordered_json to_json(const VerifyConfig& c) {
  nlohmann::ordered_json j;
  j["n"] = c.n;
  j["m"] = c.m;
  j["mode"] = to_string(c.mode);
  j["samples"] = c.samples;
  j["seed"] = c.seed;
  return j;
}

std::string render_text(const VerificationReport& r) {
  std::ostringstream os;
  char buf[160];
  for (const auto& c : r.checks) {
    std::snprintf(buf, sizeof buf, "%-4s %-42s n=%d  residual %.3e  (threshold %.1e)\n", c.pass ? "ok" : "FAIL",
                  c.check_name.c_str(), c.n, c.residual, c.threshold);
    os << buf;
  }
  os << "suite " << r.suite << ": " << (r.pass ? "pass" : "FAIL") << "\n";
  return os.str();
}

}  // namespace cartan
