// Copyright cartan-spinors contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Dirac operator, spinor Laplacian, Killing spinors and spectra of D on
// polynomial spinor fields over S^n and the two quotient bundles over RP^n.
//
// D and the Laplacian are assembled over the overcomplete frame of projected
// coordinate fields V_a = e_a - x_a x (a = 0..n). Both summands are
// tensorial in the frame slots and sum_a V_a (x) V_a is the identity on
// T_x S^n, so the result is the usual orthonormal-frame trace.

#include <string>
#include <vector>

#include <json.hpp>

#include "cartan/linalg.hpp"
#include "cartan/sphere_bundle.hpp"

namespace cartan {

template <class S>
std::vector<TangentField<S>> coordinate_frame(int n) {
  std::vector<TangentField<S>> out;
  for (int a = 0; a <= n; ++a) out.push_back(TangentField<S>::coordinate(n, a));
  return out;
}

template <class S>
PolySpinorField<S> dirac_apply(const BundleContext& ctx, const PolySpinorField<S>& phi) {
  PolySpinorField<S> out(phi.n(), phi.dim());
  for (const auto& v : coordinate_frame<S>(ctx.n()))
    out += clifford_mul_field(ctx.rep(), v.field(), covariant_derivative(ctx, v, phi));
  return harmonic_reduce(out);
}

/// -sum_a (nabla_{V_a} nabla_{V_a} - nabla_{nabla_{V_a} V_a}) Phi.
template <class S>
PolySpinorField<S> laplace_apply(const BundleContext& ctx, const PolySpinorField<S>& phi) {
  PolySpinorField<S> out(phi.n(), phi.dim());
  for (const auto& v : coordinate_frame<S>(ctx.n())) {
    out -= covariant_derivative(ctx, v, covariant_derivative(ctx, v, phi));
    out += covariant_derivative(ctx, levi_civita(v, v), phi);
  }
  return harmonic_reduce(out);
}

/// Max coefficient norm of D^2 Phi - Laplace Phi - n(n-1)/4 Phi.
template <class S>
double lichnerowicz_defect(const BundleContext& ctx, const PolySpinorField<S>& phi) {
  const auto d2 = dirac_apply(ctx, dirac_apply(ctx, phi));
  const auto lap = laplace_apply(ctx, phi);
  const S quarter_tau = ScalarTraits<S>::ratio(static_cast<std::int64_t>(ctx.n()) * (ctx.n() - 1), 4);
  return harmonic_reduce(d2 - lap - phi * quarter_tau).max_coeff_norm();
}

/// minus builds (1 - x) Phi0 (Killing number -1/2, a section of rp_plus);
/// plus builds (1 + x) Phi0 (Killing number +1/2, a section of rp_minus).
enum class KillingSign { minus, plus };

const char* to_string(KillingSign s);

template <class S>
PolySpinorField<S> killing_field(const BundleContext& ctx, const std::vector<S>& phi0, KillingSign sign) {
  if (phi0.size() != ctx.spinor_dim()) throw Error(ErrorCode::dimension_mismatch, "Phi0 has the wrong dimension");
  if (std::all_of(phi0.begin(), phi0.end(), [](const S& v) { return ScalarTraits<S>::is_zero(v); }))
    throw Error(ErrorCode::zero_spinor, "Killing field needs a nonzero Phi0");
  const auto c = PolySpinorField<S>::constant(ctx.n(), phi0);
  const auto xc = position_times(ctx, c);
  return sign == KillingSign::minus ? c - xc : c + xc;
}

struct KillingReport {
  double lambda = 0.0;
  double residual = 0.0;          ///< max_a |nabla_{V_a} Phi - lambda V_a.Phi|
  double dirac_eigenvalue = 0.0;  ///< mu read off from D Phi against Phi
  double dirac_residual = 0.0;    ///< |D Phi - mu Phi|
  double rp_plus_residual = 0.0;
  double rp_minus_residual = 0.0;
  double curvature_consistency = 0.0;  ///< max |R(V,W)Phi - 2 lambda^2 (W V + <V,W>) Phi| at samples
  double field_norm = 0.0;             ///< max |Phi(x)| at the same samples
  bool killing = false;
};

nlohmann::ordered_json to_json(const KillingReport& r);

namespace detail {

/// Ratio mu with D Phi = mu Phi, taken at the largest coefficient of Phi.
template <class S>
S eigenvalue_ratio(const PolySpinorField<S>& phi, const PolySpinorField<S>& dphi) {
  S num{}, den{};
  double best = -1.0;
  for (std::size_t c = 0; c < phi.dim(); ++c)
    for (const auto& [m, v] : phi.component(c).terms()) {
      const double mag = ScalarTraits<S>::magnitude(v);
      if (mag > best) {
        best = mag;
        den = v;
        num = dphi.component(c).coefficient(m);
      }
    }
  if (best <= 0.0) return S{};
  return num / den;
}

}  // namespace detail

/// Checks nabla_V Phi = lambda V.Phi over the projected coordinate fields,
/// the Dirac eigenvalue, section membership, and the curvature consistency
/// R(V,W)Phi = 2 lambda^2 (W V + <V,W>) Phi at sampled points with an
/// orthonormal tangent pair (V, W).
template <class S>
KillingReport killing_verify(const BundleContext& ctx, const PolySpinorField<S>& phi, const Rational& lambda,
                             int samples, Sampler& sampler) {
  KillingReport rep;
  rep.lambda = lambda.to_double();
  const S lam = ScalarTraits<S>::from_rational(lambda);
  for (const auto& v : coordinate_frame<S>(ctx.n())) {
    const auto d = covariant_derivative(ctx, v, phi) - clifford_mul_field(ctx.rep(), v.field(), phi) * lam;
    rep.residual = std::max(rep.residual, harmonic_reduce(d).max_coeff_norm());
  }
  const auto dphi = dirac_apply(ctx, phi);
  const S mu = detail::eigenvalue_ratio(phi, dphi);
  rep.dirac_eigenvalue = ScalarTraits<S>::to_complex(mu).real();
  rep.dirac_residual = harmonic_reduce(dphi - phi * mu).max_coeff_norm();
  rep.rp_plus_residual = section_check(ctx, BundleSelector::rp_plus, phi);
  rep.rp_minus_residual = section_check(ctx, BundleSelector::rp_minus, phi);

  const auto fphi = phi.template cast<Complex>();
  const double l2 = 2.0 * rep.lambda * rep.lambda;
  for (int s = 0; s < samples; ++s) {
    const SpherePoint x = sampler.sphere_point(ctx.n());
    const Eigen::VectorXcd at = evaluate(fphi, x);
    rep.field_norm = std::max(rep.field_norm, at.norm());
    if (ctx.n() < 2) continue;  // one tangent direction: W V + <V,W> vanishes
    const auto frame = tangent_frame(x);
    auto as_field = [&](const Eigen::VectorXd& e) {
      std::vector<Complex> a(static_cast<std::size_t>(ctx.n() + 1));
      for (int i = 0; i <= ctx.n(); ++i) a[static_cast<std::size_t>(i)] = e(i);
      return TangentField<Complex>::projected(ctx.n(), a);
    };
    const auto v = as_field(frame[0]);
    const auto w = as_field(frame[1]);
    auto lhs = covariant_derivative(ctx, v, covariant_derivative(ctx, w, fphi));
    lhs -= covariant_derivative(ctx, w, covariant_derivative(ctx, v, fphi));
    lhs -= covariant_derivative(ctx, lie_bracket(v, w), fphi);
    const Eigen::VectorXcd wv = ctx.clifford(frame[1]) * (ctx.clifford(frame[0]) * at);
    const double dot = frame[0].dot(frame[1]);
    const Eigen::VectorXcd d = evaluate(lhs, x) - l2 * (wv + dot * at);
    rep.curvature_consistency = std::max(rep.curvature_consistency, d.norm());
  }
  const double tol = ScalarTraits<S>::mode == Mode::exact ? 0.0 : 1e-10;
  rep.killing = rep.residual <= tol;
  return rep;
}

/// Sum_a gamma_a d_a P on R^{n+1}.
template <class S>
PolySpinorField<S> ambient_dirac(const MatrixRep& rep, const PolySpinorField<S>& p) {
  PolySpinorField<S> out(p.n(), p.dim());
  for (int a = 0; a <= p.n(); ++a) {
    PolySpinorField<S> d(p.n(), p.dim());
    for (std::size_t c = 0; c < p.dim(); ++c) d.component(c) = p.component(c).derivative(a);
    out += gamma_apply(rep, a, d);
  }
  return out;
}

/// Basis of homogeneous degree-k spinor polynomials on R^{ambient_dim}
/// killed by the flat Dirac operator, from an exact kernel on monomial
/// coefficients.
std::vector<PolySpinorField<GaussRational>> monogenic_kernel(int ambient_dim, int k);

// ---------------------------------------------------------------------------
// Spectra.

/// Matrices of D compressed to a finite section space V_m inside W_m (fields
/// of degree <= m). Everything is expressed in the coordinates of the
/// harmonic basis of W_{m+1}, which contains D(V_m).
template <class S>
struct OperatorMatrix {
  BundleSelector selector = BundleSelector::sphere;
  int n = 0;
  int m = 0;
  std::vector<PolySpinorField<S>> basis;
  Matrix<S> basis_coords;   ///< W_{m+1} coordinates of the basis (columns)
  Matrix<S> image_coords;   ///< W_{m+1} coordinates of D applied to the basis
  Matrix<S> ambient_gram;   ///< L2 Gram of the W_{m+1} basis
  Matrix<S> gram;           ///< <b_i, b_j>
  Matrix<S> pairing;        ///< <b_i, D b_j>
  Matrix<S> matrix;         ///< gram^{-1} pairing: the compressed operator in the basis
  double hermitian_defect = 0.0;
  double closure_residual = 0.0;  ///< filled by spectrum analysis
};

struct SpectrumEntry {
  double eigenvalue = 0.0;
  std::size_t multiplicity = 0;
  bool truncated = false;  ///< eigenspace leaves the degree bound
};

struct SpectrumTable {
  BundleSelector selector = BundleSelector::sphere;
  int n = 0;
  int m = 0;
  Mode mode = Mode::exact;
  double cluster_tolerance = 1e-8;
  std::size_t basis_dim = 0;
  std::vector<SpectrumEntry> entries;
  double closure_residual = 0.0;
  double max_imag = 0.0;
  double hermitian_defect = 0.0;
  bool charpoly_checked = false;
  bool charpoly_ok = false;

  /// Multiplicity of the non-truncated cluster at lambda.
  std::size_t multiplicity(double lambda) const;
  bool has_truncated() const;
};

nlohmann::ordered_json to_json(const SpectrumTable& t);
std::string render_text(const SpectrumTable& t);

struct EigenAnalysis {
  std::vector<SpectrumEntry> entries;
  double closure_residual = 0.0;
  double max_imag = 0.0;
};

/// Eigen-analysis of the compressed operator: Hermitian eigenproblem
/// pairing y = lambda gram y, clustering at cluster_tol, and per cluster the
/// split into exact eigenvectors (|D v - lambda v| <= 1e-9) and truncated ones.
EigenAnalysis analyze_compressed(const Eigen::MatrixXcd& gram, const Eigen::MatrixXcd& pairing,
                                 const Eigen::MatrixXcd& basis_coords, const Eigen::MatrixXcd& image_coords,
                                 const Eigen::MatrixXcd& ambient_gram, double cluster_tol);

/// Checks that det(t - M) has each non-truncated eigenvalue (rounded to a
/// half-integer) as a root of at least the reported multiplicity.
bool charpoly_confirms(const Matrix<GaussRational>& m, const std::vector<SpectrumEntry>& entries);

namespace detail {

template <class S>
Matrix<S> gram_of(const FieldBasis<S>& basis) {
  const std::size_t n = basis.size();
  Matrix<S> g(n, n);
  const auto& labels = basis.labels();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      if (labels[i].spinor != labels[j].spinor || labels[i].degree != labels[j].degree) continue;
      const std::size_t c = labels[i].spinor;
      const S v = sphere_inner(basis.field(i).component(c), basis.field(j).component(c));
      g(i, j) = v;
      g(j, i) = ScalarTraits<S>::conj(v);
    }
  return g;
}

template <class S>
Matrix<S> coordinate_columns(const FieldBasis<S>& basis, const std::vector<PolySpinorField<S>>& fields) {
  Matrix<S> out(basis.size(), fields.size());
  for (std::size_t j = 0; j < fields.size(); ++j) {
    const auto coords = basis.coordinates(fields[j]);
    if (coords.unrepresented > 0.0)
      throw Error(ErrorCode::numeric, "field leaves the degree bound of the coordinate basis");
    for (std::size_t i = 0; i < basis.size(); ++i) out(i, j) = coords.values[i];
  }
  return out;
}

}  // namespace detail

/// Compressed matrix of D on the section space of degree <= m: all of W_m
/// for the sphere; for rp_plus/rp_minus the exact kernel of
/// Phi -> harmonic_reduce(Phi(-x) -+ x.Phi) inside W_m.
template <class S>
OperatorMatrix<S> operator_matrix(const BundleContext& ctx, BundleSelector selector, int m) {
  if (m < 1) throw Error(ErrorCode::degree_bound, "degree bound m must be at least 1");
  const FieldBasis<S> big(ctx.n(), m + 1);
  const FieldBasis<S> small(ctx.n(), m);
  const std::size_t nb = big.size(), ns = small.size();

  std::vector<PolySpinorField<S>> images;
  images.reserve(ns);
  for (const auto& f : small.fields()) images.push_back(dirac_apply(ctx, f));
  const Matrix<S> d_small = detail::coordinate_columns(big, images);

  Matrix<S> k(ns, ns);
  if (selector == BundleSelector::sphere) {
    k = Matrix<S>::identity(ns);
  } else {
    std::vector<PolySpinorField<S>> defects;
    defects.reserve(ns);
    for (const auto& f : small.fields()) {
      const auto xf = position_times(ctx, f);
      const auto pulled = antipodal_pullback(f);
      defects.push_back(harmonic_reduce(selector == BundleSelector::rp_plus ? pulled - xf : pulled + xf));
    }
    k = kernel(detail::coordinate_columns(big, defects));
  }

  OperatorMatrix<S> out;
  out.selector = selector;
  out.n = ctx.n();
  out.m = m;
  const std::size_t r = k.cols();
  out.basis_coords = Matrix<S>(nb, r);
  for (std::size_t i = 0; i < ns; ++i)
    for (std::size_t j = 0; j < r; ++j) out.basis_coords(i, j) = k(i, j);
  out.image_coords = d_small * k;
  for (std::size_t j = 0; j < r; ++j) {
    std::vector<S> col(ns);
    for (std::size_t i = 0; i < ns; ++i) col[i] = k(i, j);
    out.basis.push_back(small.combine(col));
  }
  out.ambient_gram = detail::gram_of(big);
  const Matrix<S> kt_g = out.basis_coords.adjoint() * out.ambient_gram;
  out.gram = kt_g * out.basis_coords;
  out.pairing = kt_g * out.image_coords;
  out.hermitian_defect = (out.pairing - out.pairing.adjoint()).max_abs();
  out.matrix = r == 0 ? Matrix<S>(0, 0) : solve(out.gram, out.pairing).x;
  return out;
}

template <class S>
SpectrumTable spectrum_of(const OperatorMatrix<S>& op, double cluster_tol = 1e-8) {
  SpectrumTable t;
  t.selector = op.selector;
  t.n = op.n;
  t.m = op.m;
  t.mode = ScalarTraits<S>::mode;
  t.cluster_tolerance = cluster_tol;
  t.basis_dim = op.basis.size();
  t.hermitian_defect = op.hermitian_defect;
  if (op.basis.empty()) throw Error(ErrorCode::degree_bound, "section space is empty; increase m");
  const auto a = analyze_compressed(op.gram.to_eigen(), op.pairing.to_eigen(), op.basis_coords.to_eigen(),
                                    op.image_coords.to_eigen(), op.ambient_gram.to_eigen(), cluster_tol);
  t.entries = a.entries;
  t.closure_residual = a.closure_residual;
  t.max_imag = a.max_imag;
  if (!std::any_of(t.entries.begin(), t.entries.end(), [](const SpectrumEntry& e) { return !e.truncated; }))
    throw Error(ErrorCode::degree_bound, "no eigenspace closes within degree m=" + std::to_string(op.m) + "; increase m");
  if constexpr (ScalarTraits<S>::mode == Mode::exact) {
    if (op.n == 2 && op.m <= 1) {
      t.charpoly_checked = true;
      t.charpoly_ok = charpoly_confirms(op.matrix, t.entries);
    }
  }
  return t;
}

template <class S>
SpectrumTable spectrum(const BundleContext& ctx, BundleSelector selector, int m, double cluster_tol = 1e-8) {
  return spectrum_of(operator_matrix<S>(ctx, selector, m), cluster_tol);
}

/// Mode-dispatching entry point.
SpectrumTable compute_spectrum(int n, BundleSelector selector, int m, Mode mode);

}  // namespace cartan
