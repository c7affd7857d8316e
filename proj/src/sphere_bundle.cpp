// Copyright cartan-spinors contributors.
// SPDX-License-Identifier: Apache-2.0

#include "cartan/sphere_bundle.hpp"

#include <cmath>

namespace cartan {

const char* to_string(BundleSelector s) {
  switch (s) {
    case BundleSelector::sphere: return "sphere";
    case BundleSelector::rp_plus: return "rp_plus";
    case BundleSelector::rp_minus: return "rp_minus";
  }
  return "?";
}

BundleSelector parse_selector(const std::string& s) {
  if (s == "sphere") return BundleSelector::sphere;
  if (s == "rp_plus") return BundleSelector::rp_plus;
  if (s == "rp_minus") return BundleSelector::rp_minus;
  throw Error(ErrorCode::usage, "unknown space '" + s + "' (expected sphere, rp_plus or rp_minus)");
}

BundleContext::BundleContext(int n) : n_(n), rep_(spinor_module_rep(n)) {}

Eigen::MatrixXcd BundleContext::clifford(const Eigen::VectorXd& v) const {
  if (v.size() != n_ + 1) throw Error(ErrorCode::dimension_mismatch, "ambient vector has the wrong dimension");
  const auto d = static_cast<Eigen::Index>(rep_.dim());
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(d, d);
  for (int a = 0; a <= n_; ++a) out += v(a) * rep_.gamma_numeric(a);
  return out;
}

TangentVector project_tangent(const SpherePoint& x, const Eigen::VectorXd& a) {
  const Eigen::VectorXd xv = x.vector();
  if (a.size() != xv.size()) throw Error(ErrorCode::dimension_mismatch, "ambient vector has the wrong dimension");
  return {x, a - a.dot(xv) * xv};
}

TangentVector antipodal_differential(const TangentVector& v) { return {v.x.antipode(), -v.t}; }

Eigen::VectorXcd mu(const BundleContext& ctx, const TangentVector& v, const Eigen::VectorXcd& phi) {
  if (std::abs(v.t.dot(v.x.vector())) > 1e-9)
    throw Error(ErrorCode::tangency, "Clifford multiplication by a non-tangent vector");
  return ctx.clifford(v.t) * phi;
}

FiberPoint lift_g(const BundleContext& ctx, LiftSign sign, const SpherePoint& x, const Eigen::VectorXcd& phi) {
  Eigen::VectorXcd out = ctx.clifford(x.vector()) * phi;
  if (sign == LiftSign::minus) out = -out;
  return {x.antipode(), out};
}

double equivariance_defect(const BundleContext& ctx, LiftSign sign, const TangentVector& v, const Eigen::VectorXcd& phi) {
  const FiberPoint a = lift_g(ctx, sign, v.x, mu(ctx, v, phi));
  const FiberPoint lifted = lift_g(ctx, sign, v.x, phi);
  const Eigen::VectorXcd b = mu(ctx, antipodal_differential(v), lifted.phi);
  return (a.phi - b).norm();
}

std::vector<Eigen::VectorXd> tangent_frame(const SpherePoint& x) {
  const int n = x.n();
  const Eigen::VectorXd xv = x.vector();
  std::vector<Eigen::VectorXd> frame;
  std::vector<bool> used(static_cast<std::size_t>(n + 1), false);
  while (static_cast<int>(frame.size()) < n) {
    bool found = false;
    for (int c = 0; c <= n && !found; ++c) {
      if (used[static_cast<std::size_t>(c)]) continue;
      Eigen::VectorXd v = Eigen::VectorXd::Unit(n + 1, c);
      for (int pass = 0; pass < 2; ++pass) {
        v -= v.dot(xv) * xv;
        for (const auto& e : frame) v -= v.dot(e) * e;
      }
      if (v.norm() > 0.5) {
        frame.push_back(v / v.norm());
        used[static_cast<std::size_t>(c)] = true;
        found = true;
      }
    }
    if (!found) throw Error(ErrorCode::frame, "tangent frame construction failed");
  }
  Eigen::MatrixXd m(n + 1, n + 1);
  for (int i = 0; i < n; ++i) m.col(i) = frame[static_cast<std::size_t>(i)];
  m.col(n) = xv;
  if (m.determinant() < 0) frame[0] = -frame[0];
  return frame;
}

SplittingOperator splitting_operator(const BundleContext& ctx, const SpherePoint& x) {
  if (x.n() != ctx.n()) throw Error(ErrorCode::dimension_mismatch, "point dimension differs from the bundle");
  const int n = ctx.n();
  const auto frame = tangent_frame(x);
  const auto d = static_cast<Eigen::Index>(ctx.spinor_dim());
  Eigen::MatrixXcd f = Eigen::MatrixXcd::Identity(d, d);
  for (const auto& e : frame) f = f * ctx.clifford(e);
  Complex plus(1.0, 0.0);
  const Complex i(0.0, 1.0);
  if (n % 2 == 0) {
    f *= std::pow(i, n / 2);
  } else {
    plus = std::pow(i, (n - 1) / 2 + 1);
  }
  // Round the eigenvalue to the exact unit it is.
  plus = Complex(std::round(plus.real()), std::round(plus.imag()));
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(d, d);
  const Eigen::MatrixXcd scaled = f / plus;
  return {x, f, plus, 0.5 * (id + scaled), 0.5 * (id - scaled)};
}

SplittingReport splitting_behavior(const BundleContext& ctx, int samples, Sampler& sampler) {
  SplittingReport rep;
  rep.n = ctx.n();
  rep.samples = samples;
  const bool even = ctx.n() % 2 == 0;
  for (int s = 0; s < samples; ++s) {
    const SpherePoint x = sampler.sphere_point(ctx.n());
    const auto here = splitting_operator(ctx, x);
    const auto there = splitting_operator(ctx, x.antipode());
    Eigen::VectorXcd phi = here.plus_projector * sampler.spinor(ctx.spinor_dim());
    phi /= phi.norm();
    const Eigen::VectorXcd psi = lift_g(ctx, LiftSign::plus, x, phi).phi;
    const double in_plus = (there.minus_projector * psi).norm();   // distance from Delta^+(-x)
    const double in_minus = (there.plus_projector * psi).norm();   // distance from Delta^-(-x)
    const double tol = 1e-10;
    const bool swapped = in_minus < tol && in_plus > 1.0 - tol;
    const bool preserved = in_plus < tol && in_minus > 1.0 - tol;
    rep.swaps += swapped ? 1 : 0;
    rep.preserves += preserved ? 1 : 0;
    const bool ok = even ? swapped : preserved;
    rep.violations += ok ? 0 : 1;
    rep.max_residual = std::max(rep.max_residual, even ? in_minus : in_plus);
  }
  rep.even_swaps = even && rep.swaps == samples && samples > 0;
  rep.odd_preserves = !even && rep.preserves == samples && samples > 0;
  return rep;
}

double skew_adjointness_defect(const BundleContext& ctx, int samples, Sampler& sampler) {
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    const SpherePoint x = sampler.sphere_point(ctx.n());
    const TangentVector t = project_tangent(x, sampler.ambient(ctx.n()));
    const Eigen::VectorXcd phi = sampler.spinor(ctx.spinor_dim());
    const Eigen::VectorXcd psi = sampler.spinor(ctx.spinor_dim());
    worst = std::max(worst, std::abs(mu(ctx, t, phi).dot(psi) + phi.dot(mu(ctx, t, psi))));
  }
  return worst;
}

}  // namespace cartan
