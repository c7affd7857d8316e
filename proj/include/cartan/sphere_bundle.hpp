// Copyright cartan-spinors contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

// The trivial bundle S^n x Delta_{n+1} with Clifford multiplication by
// tangent vectors, the antipodal lifts (x, phi) -> (-x, +-x.phi), the
// section conditions of the two quotient bundles over RP^n, the connection
//   (nabla_V Phi)(x) = dPhi(V)(x) + 1/2 V(x).x.Phi(x)
// with its curvature, and the tangent volume element f(x) that governs
// whether the quotient bundle splits.

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "cartan/polyspinor.hpp"
#include "cartan/sampling.hpp"

namespace cartan {

enum class BundleSelector { sphere, rp_plus, rp_minus };

const char* to_string(BundleSelector s);
/// Accepts "sphere", "rp_plus", "rp_minus"; throws Error(ErrorCode::usage).
BundleSelector parse_selector(const std::string& s);

/// Sign of an antipodal lift: plus is (x, phi) -> (-x, x.phi), minus is
/// (x, phi) -> (-x, -x.phi).
enum class LiftSign { plus, minus };

class BundleContext {
 public:
  /// Throws Error(ErrorCode::size) unless 1 <= n <= 7.
  explicit BundleContext(int n);

  int n() const noexcept { return n_; }
  const MatrixRep& rep() const noexcept { return rep_; }
  std::size_t spinor_dim() const noexcept { return rep_.dim(); }
  /// Scalar curvature n(n-1).
  Rational tau() const { return Rational(static_cast<std::int64_t>(n_) * (n_ - 1)); }

  /// sum_a v_a gamma_a as a dense matrix.
  Eigen::MatrixXcd clifford(const Eigen::VectorXd& v) const;

 private:
  int n_;
  MatrixRep rep_;
};

struct TangentVector {
  SpherePoint x;
  Eigen::VectorXd t;
};

/// (x, a - <a, x> x).
TangentVector project_tangent(const SpherePoint& x, const Eigen::VectorXd& a);

/// dg(x, t) = (-x, -t).
TangentVector antipodal_differential(const TangentVector& v);

/// t . phi. Throws Error(ErrorCode::tangency) if |<t, x>| > 1e-9.
Eigen::VectorXcd mu(const BundleContext& ctx, const TangentVector& v, const Eigen::VectorXcd& phi);

struct FiberPoint {
  SpherePoint x;
  Eigen::VectorXcd phi;
};

/// (-x, +-x.phi).
FiberPoint lift_g(const BundleContext& ctx, LiftSign sign, const SpherePoint& x, const Eigen::VectorXcd& phi);

/// |lift(mu(t, phi)) - mu(dg(t), lift(phi))| at one sample.
double equivariance_defect(const BundleContext& ctx, LiftSign sign, const TangentVector& v, const Eigen::VectorXcd& phi);

/// Positively oriented orthonormal frame of T_x S^n: Gram-Schmidt over the
/// standard basis taking the first candidate with residual norm above 1/2,
/// then e_1 flipped if needed so that det(e_1, ..., e_n, x) > 0.
std::vector<Eigen::VectorXd> tangent_frame(const SpherePoint& x);

/// f(x) = i^{n/2} e_1...e_n (n even, f^2 = Id) or e_1...e_n (n = 2k+1,
/// f^2 = (-1)^{k+1} Id), with projectors onto Delta^{+-}(x).
struct SplittingOperator {
  SpherePoint x;
  Eigen::MatrixXcd f;
  Complex plus_eigenvalue;  ///< 1 for even n, i^{k+1} for n = 2k+1
  Eigen::MatrixXcd plus_projector;
  Eigen::MatrixXcd minus_projector;
};

SplittingOperator splitting_operator(const BundleContext& ctx, const SpherePoint& x);

struct SplittingReport {
  int n = 0;
  int samples = 0;
  int swaps = 0;      ///< x.phi landed in Delta^-(-x)
  int preserves = 0;  ///< x.phi landed in Delta^+(-x)
  int violations = 0; ///< samples that contradict the parity contract
  double max_residual = 0.0;
  bool even_swaps = false;
  bool odd_preserves = false;
};

/// Samples phi in Delta^+(x) and classifies x.phi relative to Delta^{+-}(-x).
SplittingReport splitting_behavior(const BundleContext& ctx, int samples, Sampler& sampler);

// ---------------------------------------------------------------------------
// Polynomial-field layer.

template <class S>
PolySpinorField<S> position_times(const BundleContext& ctx, const PolySpinorField<S>& phi) {
  return position_mul(ctx.rep(), phi);
}

/// Residual of the section condition, 0 iff Phi is a section of the selected
/// bundle: Phi(-x) - x.Phi(x) (rp_plus) or Phi(-x) + x.Phi(x) (rp_minus).
template <class S>
double section_check(const BundleContext& ctx, BundleSelector selector, const PolySpinorField<S>& phi) {
  if (selector == BundleSelector::sphere) return 0.0;
  const auto xphi = position_times(ctx, phi);
  const auto pulled = antipodal_pullback(phi);
  const auto defect = selector == BundleSelector::rp_plus ? pulled - xphi : pulled + xphi;
  return harmonic_reduce(defect).max_coeff_norm();
}

/// Phi_+ = (Phi - x.Phi(-x))/2 for rp_plus, Phi_- = (Phi + x.Phi(-x))/2 for
/// rp_minus, in canonical form.
template <class S>
PolySpinorField<S> project_section(const BundleContext& ctx, BundleSelector selector, const PolySpinorField<S>& phi) {
  if (selector == BundleSelector::sphere)
    throw Error(ErrorCode::usage, "project_section needs rp_plus or rp_minus");
  const auto x_pulled = position_times(ctx, antipodal_pullback(phi));
  const S half = ScalarTraits<S>::ratio(1, 2);
  const auto sum = selector == BundleSelector::rp_plus ? phi - x_pulled : phi + x_pulled;
  return harmonic_reduce(sum * half);
}

/// nabla_V Phi for any polynomial vector field; meaningful on the sphere when
/// V is tangent there.
template <class S>
PolySpinorField<S> covariant_derivative_raw(const BundleContext& ctx, const PolyVectorField<S>& v,
                                            const PolySpinorField<S>& phi) {
  auto out = directional_derivative(phi, v);
  auto connection = clifford_mul_field(ctx.rep(), v, position_times(ctx, phi));
  out += connection * ScalarTraits<S>::ratio(1, 2);
  return harmonic_reduce(out);
}

template <class S>
PolySpinorField<S> covariant_derivative(const BundleContext& ctx, const TangentField<S>& v,
                                        const PolySpinorField<S>& phi) {
  return covariant_derivative_raw(ctx, v.field(), phi);
}

/// [V, W] = dW(V) - dV(W), reduced. Throws Error(ErrorCode::tangency) if the
/// result is not tangent on the sphere.
template <class S>
TangentField<S> lie_bracket(const TangentField<S>& v, const TangentField<S>& w) {
  auto b = w.field().derivative_along(v.field()) - v.field().derivative_along(w.field());
  return TangentField<S>::checked(b.reduced());
}

/// Levi-Civita derivative nabla_V W: tangent projection of dW(V).
template <class S>
TangentField<S> levi_civita(const TangentField<S>& v, const TangentField<S>& w) {
  return TangentField<S>::checked(w.field().derivative_along(v.field()).tangent_projection());
}

/// Max coefficient norm of the reduced difference
///   (nabla_V nabla_W - nabla_W nabla_V - nabla_[V,W]) Phi - 1/2 (W.V + <V,W>) Phi.
template <class S>
double curvature_defect(const BundleContext& ctx, const TangentField<S>& v, const TangentField<S>& w,
                        const PolySpinorField<S>& phi) {
  const auto bracket = lie_bracket(v, w);
  auto lhs = covariant_derivative(ctx, v, covariant_derivative(ctx, w, phi));
  lhs -= covariant_derivative(ctx, w, covariant_derivative(ctx, v, phi));
  lhs -= covariant_derivative(ctx, bracket, phi);
  auto rhs = clifford_mul_field(ctx.rep(), w.field(), clifford_mul_field(ctx.rep(), v.field(), phi));
  rhs += v.field().dot(w.field()) * phi;
  rhs *= ScalarTraits<S>::ratio(1, 2);
  return harmonic_reduce(lhs - rhs).max_coeff_norm();
}

/// Max coefficient norm of nabla_V(W.Phi) - (nabla_V W).Phi - W.nabla_V Phi.
template <class S>
double leibniz_defect(const BundleContext& ctx, const TangentField<S>& v, const TangentField<S>& w,
                      const PolySpinorField<S>& phi) {
  auto lhs = covariant_derivative(ctx, v, clifford_mul_field(ctx.rep(), w.field(), phi));
  lhs -= clifford_mul_field(ctx.rep(), levi_civita(v, w).field(), phi);
  lhs -= clifford_mul_field(ctx.rep(), w.field(), covariant_derivative(ctx, v, phi));
  return harmonic_reduce(lhs).max_coeff_norm();
}

/// Max over the points of |V<Phi, Psi> - <nabla_V Phi, Psi> - <Phi, nabla_V Psi>|.
template <class S>
double metric_defect(const BundleContext& ctx, const TangentField<S>& v, const PolySpinorField<S>& phi,
                     const PolySpinorField<S>& psi, const std::vector<SpherePoint>& points) {
  const Polynomial<S> inner = hermitian_product(phi, psi);
  Polynomial<S> d_inner(phi.nvars());
  for (int a = 0; a <= phi.n(); ++a) d_inner += v.field().component(a) * inner.derivative(a);
  const auto dphi = covariant_derivative(ctx, v, phi);
  const auto dpsi = covariant_derivative(ctx, v, psi);
  const Polynomial<S> rhs = hermitian_product(dphi, psi) + hermitian_product(phi, dpsi);
  double worst = 0.0;
  for (const auto& x : points) worst = std::max(worst, std::abs(d_inner.evaluate(x.coords()) - rhs.evaluate(x.coords())));
  return worst;
}

/// Max pointwise violation of <t.phi, psi> = -<phi, t.psi> over the samples.
double skew_adjointness_defect(const BundleContext& ctx, int samples, Sampler& sampler);

}  // namespace cartan
