// Copyright cartan-spinors contributors.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <map>

#include "cartan/dirac_spectrum.hpp"

using namespace cartan;

namespace {

using F = PolySpinorField<GaussRational>;

std::vector<GaussRational> basis_spinor(std::size_t dim, std::size_t c) {
  std::vector<GaussRational> v(dim);
  v[c] = GaussRational(1);
  return v;
}

// D Phi(x) = sum_i e_i . (dPhi(e_i) + 1/2 e_i . x . Phi)(x) over an orthonormal
// frame at x, with derivatives taken from the polynomial directly.
Eigen::VectorXcd dirac_pointwise(const BundleContext& ctx, const PolySpinorField<Complex>& phi, const SpherePoint& x) {
  const int n = ctx.n();
  const Eigen::VectorXcd at = evaluate(phi, x);
  std::vector<PolySpinorField<Complex>> partials;
  for (int b = 0; b <= n; ++b) {
    PolySpinorField<Complex> d(n, phi.dim());
    for (std::size_t c = 0; c < phi.dim(); ++c) d.component(c) = phi.component(c).derivative(b);
    partials.push_back(std::move(d));
  }
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(at.size());
  const Eigen::MatrixXcd xm = ctx.clifford(x.vector());
  for (const auto& e : tangent_frame(x)) {
    Eigen::VectorXcd nab = 0.5 * ctx.clifford(e) * (xm * at);
    for (int b = 0; b <= n; ++b) nab += e(b) * evaluate(partials[static_cast<std::size_t>(b)], x);
    out += ctx.clifford(e) * nab;
  }
  return out;
}

std::map<double, std::size_t> as_map(const SpectrumTable& t) {
  std::map<double, std::size_t> m;
  for (const auto& e : t.entries)
    if (!e.truncated) m[std::round(e.eigenvalue * 1e6) / 1e6] += e.multiplicity;
  return m;
}

}  // namespace

TEST_CASE("Killing fields are eigenfields with eigenvalue +-n/2") {
  for (int n = 1; n <= 6; ++n) {
    BundleContext ctx(n);
    const GaussRational half_n(Rational(n, 2));
    for (std::size_t c = 0; c < ctx.spinor_dim(); ++c) {
      const auto phi0 = basis_spinor(ctx.spinor_dim(), c);
      const F minus = killing_field(ctx, phi0, KillingSign::minus);
      const F plus = killing_field(ctx, phi0, KillingSign::plus);
      CHECK(dirac_apply(ctx, minus) == minus * half_n);
      CHECK(dirac_apply(ctx, plus) == plus * (-half_n));
      CHECK(minus.component(c).coefficient(Monomial{}) == GaussRational(1));
    }
  }
  BundleContext ctx(3);
  CHECK(dirac_apply(ctx, F(3, 4)).is_zero());
  CHECK_THROWS_AS(killing_field(ctx, std::vector<GaussRational>(4), KillingSign::minus), Error);
}

TEST_CASE("Laplacian examples and the Lichnerowicz identity") {
  for (int n = 1; n <= 5; ++n) {
    BundleContext ctx(n);
    const auto phi0 = basis_spinor(ctx.spinor_dim(), 0);
    const F c = F::constant(n, phi0);
    const GaussRational quarter_n(Rational(n, 4));
    // Independent of laplace_apply: D^2 - tau/4 on constants.
    const F expected = harmonic_reduce(dirac_apply(ctx, dirac_apply(ctx, c)) - c * GaussRational(Rational(n * (n - 1), 4)));
    CHECK(expected == c * quarter_n);
    CHECK(laplace_apply(ctx, c) == c * quarter_n);
    const F k = killing_field(ctx, phi0, KillingSign::minus);
    CHECK(laplace_apply(ctx, k) == k * quarter_n);
    CHECK(laplace_apply(ctx, F(n, ctx.spinor_dim())).is_zero());
    CHECK(lichnerowicz_defect(ctx, c) == 0.0);
    CHECK(lichnerowicz_defect(ctx, k) == 0.0);
  }
  Sampler rng(4);
  BundleContext ctx2(2);
  CHECK(lichnerowicz_defect(ctx2, harmonic_reduce(rng.field<GaussRational>(2, 3))) == 0.0);
  for (int n = 2; n <= 3; ++n) {
    BundleContext ctx(n);
    FieldBasis<GaussRational> basis(n, 2);
    double worst = 0.0;
    for (const auto& f : basis.fields()) worst = std::max(worst, lichnerowicz_defect(ctx, f));
    CHECK(worst == 0.0);
  }
  BundleContext ctx4(4);
  CHECK(lichnerowicz_defect(ctx4, harmonic_reduce(rng.field<Complex>(4, 2))) <= 1e-9);
}

TEST_CASE("overcomplete-frame D agrees with pointwise orthonormal-frame assembly") {
  Sampler rng(8);
  for (int n = 1; n <= 5; ++n) {
    BundleContext ctx(n);
    const auto phi = harmonic_reduce(rng.field<GaussRational>(n, 3));
    const auto dphi = dirac_apply(ctx, phi).cast<Complex>();
    const auto fphi = phi.cast<Complex>();
    double worst = 0.0;
    for (int s = 0; s < 10; ++s) {
      const auto x = rng.sphere_point(n);
      worst = std::max(worst, (evaluate(dphi, x) - dirac_pointwise(ctx, fphi, x)).norm());
    }
    CHECK(worst < 1e-10 * (1 + phi.max_coeff_norm()));
  }
}

TEST_CASE("killing_verify") {
  Sampler rng(2);
  for (int n = 2; n <= 6; ++n) {
    BundleContext ctx(n);
    const auto phi0 = rng.integer_spinor<GaussRational>(ctx.spinor_dim());
    const F minus = killing_field(ctx, phi0, KillingSign::minus);
    const F plus = killing_field(ctx, phi0, KillingSign::plus);
    const auto a = killing_verify(ctx, minus, Rational(-1, 2), 4, rng);
    CHECK(a.residual == 0.0);
    CHECK(a.killing);
    CHECK(a.rp_plus_residual == 0.0);
    CHECK(a.rp_minus_residual > 0.0);
    CHECK(a.dirac_eigenvalue == doctest::Approx(n / 2.0));
    CHECK(a.dirac_residual == 0.0);
    CHECK(a.curvature_consistency < 1e-10 * (1 + a.field_norm));
    const auto b = killing_verify(ctx, plus, Rational(1, 2), 4, rng);
    CHECK(b.residual == 0.0);
    CHECK(b.rp_minus_residual == 0.0);
    CHECK(b.dirac_eigenvalue == doctest::Approx(-n / 2.0));
    const auto wrong = killing_verify(ctx, minus, Rational(1, 2), 4, rng);
    CHECK(wrong.residual > 0.0);
    CHECK(!wrong.killing);
    for (const Rational& lam : {Rational(0), Rational(1), Rational(1, 3), Rational(-2)}) {
      const auto r = killing_verify(ctx, minus, lam, 4, rng);
      const double margin = std::abs(2 * lam.to_double() * lam.to_double() - 0.5) * r.field_norm;
      CHECK(r.curvature_consistency >= margin * (1 - 1e-9));
      CHECK(r.residual > 0.0);
    }
  }
  auto j = to_json(KillingReport{});
  CHECK(j.contains("curvature_consistency"));
}

TEST_CASE("monogenic kernel") {
  for (int N = 2; N <= 5; ++N) {
    const auto rep = spinor_module_rep(N - 1);
    CHECK(monogenic_kernel(N, 0).size() == rep.dim());
    for (int k = 0; k <= 3; ++k)
      for (const auto& p : monogenic_kernel(N, k)) {
        CHECK(ambient_dirac(rep, p).is_zero());
        CHECK(p.is_zero() == false);
        CHECK(p.degree() == k);
      }
  }
  // Read off, not asserted a priori: N=3, k=1.
  const auto k1 = monogenic_kernel(3, 1);
  MESSAGE("monogenic kernel dimension for N=3, k=1: " << k1.size());
  CHECK(k1.size() == 4);
}

TEST_CASE("monogenic oracle fields are Dirac eigenfields") {
  for (int n = 2; n <= 4; ++n) {
    BundleContext ctx(n);
    for (int k = 0; k <= 2; ++k)
      for (const auto& p : monogenic_kernel(n + 1, k)) {
        const F xp = position_times(ctx, p);
        for (int s : {-1, 1}) {
          const F f = harmonic_reduce(p + xp * GaussRational(s));
          const F df = dirac_apply(ctx, f);
          const GaussRational mu = detail::eigenvalue_ratio(f, df);
          CHECK(harmonic_reduce(df - f * mu).is_zero());
          CHECK(mu == GaussRational(Rational(-s * (n + 2 * k), 2)));
        }
      }
  }
}

TEST_CASE("operator matrix dimensions and self-adjointness") {
  BundleContext c2(2), c3(3);
  const auto s2 = operator_matrix<GaussRational>(c2, BundleSelector::sphere, 1);
  CHECK(s2.basis.size() == 8);
  CHECK(s2.hermitian_defect == 0.0);
  CHECK(operator_matrix<GaussRational>(c3, BundleSelector::sphere, 1).basis.size() == 20);
  const auto p2 = operator_matrix<GaussRational>(c2, BundleSelector::rp_plus, 1);
  const auto m2 = operator_matrix<GaussRational>(c2, BundleSelector::rp_minus, 1);
  CHECK(p2.hermitian_defect == 0.0);
  MESSAGE("n=2, m=1 section dimensions: rp_plus " << p2.basis.size() << ", rp_minus " << m2.basis.size());
  for (const auto& f : p2.basis) CHECK(section_check(c2, BundleSelector::rp_plus, f) == 0.0);
  for (const auto& f : m2.basis) CHECK(section_check(c2, BundleSelector::rp_minus, f) == 0.0);
  CHECK_THROWS_AS(operator_matrix<GaussRational>(c2, BundleSelector::sphere, 0), Error);
}

TEST_CASE("spectrum examples") {
  BundleContext c2(2), c3(3);
  SUBCASE("n=2 sphere m=2") {
    const auto t = spectrum<GaussRational>(c2, BundleSelector::sphere, 2);
    std::size_t total = 0;
    for (const auto& e : t.entries) total += e.multiplicity;
    CHECK(total == t.basis_dim);
    CHECK(t.max_imag <= 1e-9);
    CHECK(t.closure_residual <= 1e-9);
    double smallest = 1e9;
    for (const auto& e : t.entries)
      if (!e.truncated) smallest = std::min(smallest, std::abs(e.eigenvalue));
    CHECK(smallest == doctest::Approx(1.0));
    CHECK(t.multiplicity(1.0) + t.multiplicity(-1.0) >= 4);
  }
  SUBCASE("n=2 m=1 exact characteristic polynomial") {
    for (auto sel : {BundleSelector::sphere, BundleSelector::rp_plus, BundleSelector::rp_minus}) {
      const auto t = spectrum<GaussRational>(c2, sel, 1);
      CHECK(t.charpoly_checked);
      CHECK(t.charpoly_ok);
    }
  }
  SUBCASE("n=3 m=2: +-3/2 present, rp tables partition the sphere table") {
    const auto s = spectrum<GaussRational>(c3, BundleSelector::sphere, 2);
    const auto p = spectrum<GaussRational>(c3, BundleSelector::rp_plus, 2);
    const auto q = spectrum<GaussRational>(c3, BundleSelector::rp_minus, 2);
    CHECK(s.multiplicity(1.5) >= 4);
    CHECK(s.multiplicity(-1.5) >= 4);
    CHECK(p.multiplicity(1.5) >= 4);
    for (const auto& [lam, mult] : as_map(s)) {
      CHECK(mult == s.multiplicity(-lam));
      CHECK(mult == p.multiplicity(lam) + q.multiplicity(lam));
    }
  }
  SUBCASE("float mode agrees with exact mode") {
    const auto a = spectrum<GaussRational>(c2, BundleSelector::rp_plus, 2);
    const auto b = spectrum<Complex>(c2, BundleSelector::rp_plus, 2);
    CHECK(as_map(a) == as_map(b));
  }
  SUBCASE("rendering") {
    const auto t = compute_spectrum(2, BundleSelector::sphere, 1, Mode::exact);
    const auto j = to_json(t);
    CHECK(j["space"] == "sphere");
    CHECK(j["entries"].size() == t.entries.size());
    CHECK(render_text(t).find("eigenvalue") != std::string::npos);
  }
}
