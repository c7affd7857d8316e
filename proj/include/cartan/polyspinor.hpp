// Copyright cartan-spinors contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Spinor fields on S^n given by polynomial maps R^{n+1} -> Delta_{n+1}, and
// polynomial vector fields acting on them by Clifford multiplication.

#include <map>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "cartan/clifford.hpp"
#include "cartan/polynomial.hpp"

namespace cartan {

/// Largest sphere dimension handled by the field calculus (8 ambient variables).
inline constexpr int max_sphere_dim = 7;

/// Point on the unit sphere S^n in R^{n+1}.
class SpherePoint {
 public:
  static constexpr double tolerance = 1e-12;

  /// Throws Error(ErrorCode::dimension_mismatch) if | |x|^2 - 1 | > 1e-12.
  explicit SpherePoint(std::vector<double> x);
  /// Rescales a nonzero vector onto the sphere.
  static SpherePoint normalized(std::vector<double> x);

  int n() const noexcept { return static_cast<int>(x_.size()) - 1; }
  const std::vector<double>& coords() const noexcept { return x_; }
  double operator[](std::size_t i) const { return x_[i]; }
  SpherePoint antipode() const;
  Eigen::VectorXd vector() const { return Eigen::Map<const Eigen::VectorXd>(x_.data(), static_cast<Eigen::Index>(x_.size())); }

 private:
  std::vector<double> x_;
};

/// Cliff(n+1) acting on Delta_{n+1}: Pauli if n+1 is odd, Dirac if even.
MatrixRep spinor_module_rep(int n);

/// 2^{floor((n+1)/2)}.
std::size_t spinor_dim(int n);

template <class S>
class PolySpinorField {
 public:
  PolySpinorField() = default;
  PolySpinorField(int n, std::size_t dim) : n_(n), components_(dim, Polynomial<S>(n + 1)) {
    if (n < 1 || n > max_sphere_dim) throw Error(ErrorCode::size, "sphere dimension must be in [1, 7]");
  }

  /// The constant field x -> phi0.
  static PolySpinorField constant(int n, const std::vector<S>& phi0) {
    PolySpinorField out(n, phi0.size());
    for (std::size_t c = 0; c < phi0.size(); ++c) out.components_[c] = Polynomial<S>::constant(n + 1, phi0[c]);
    return out;
  }

  int n() const noexcept { return n_; }
  int nvars() const noexcept { return n_ + 1; }
  std::size_t dim() const noexcept { return components_.size(); }
  const Polynomial<S>& component(std::size_t c) const { return components_.at(c); }
  Polynomial<S>& component(std::size_t c) { return components_.at(c); }

  int degree() const {
    int d = -1;
    for (const auto& p : components_) d = std::max(d, p.degree());
    return d;
  }
  bool is_zero() const {
    return std::all_of(components_.begin(), components_.end(), [](const auto& p) { return p.is_zero(); });
  }
  double max_coeff_norm() const {
    double m = 0.0;
    for (const auto& p : components_) m = std::max(m, p.max_coeff_norm());
    return m;
  }

  PolySpinorField& operator+=(const PolySpinorField& rhs) {
    check(rhs);
    for (std::size_t c = 0; c < dim(); ++c) components_[c] += rhs.components_[c];
    return *this;
  }
  PolySpinorField& operator-=(const PolySpinorField& rhs) {
    check(rhs);
    for (std::size_t c = 0; c < dim(); ++c) components_[c] -= rhs.components_[c];
    return *this;
  }
  PolySpinorField& operator*=(const S& s) {
    for (auto& p : components_) p *= s;
    return *this;
  }
  PolySpinorField operator-() const {
    PolySpinorField out = *this;
    for (auto& p : out.components_) p = -p;
    return out;
  }
  friend PolySpinorField operator+(PolySpinorField a, const PolySpinorField& b) { return a += b; }
  friend PolySpinorField operator-(PolySpinorField a, const PolySpinorField& b) { return a -= b; }
  friend PolySpinorField operator*(PolySpinorField a, const S& s) { return a *= s; }
  friend PolySpinorField operator*(const S& s, PolySpinorField a) { return a *= s; }
  /// Scalar polynomial times field.
  friend PolySpinorField operator*(const Polynomial<S>& f, const PolySpinorField& a) {
    PolySpinorField out = a;
    for (auto& p : out.components_) p = f * p;
    return out;
  }
  friend bool operator==(const PolySpinorField& a, const PolySpinorField& b) {
    return a.n_ == b.n_ && a.components_ == b.components_;
  }

  template <class T>
  PolySpinorField<T> cast() const {
    PolySpinorField<T> out(n_, dim());
    for (std::size_t c = 0; c < dim(); ++c) out.component(c) = components_[c].template cast<T>();
    return out;
  }

 private:
  void check(const PolySpinorField& rhs) const {
    if (rhs.n_ != n_ || rhs.dim() != dim())
      throw Error(ErrorCode::dimension_mismatch, "spinor fields of different shapes");
  }

  int n_ = 0;
  std::vector<Polynomial<S>> components_;
};

/// Polynomial map R^{n+1} -> R^{n+1} (not necessarily tangent).
template <class S>
class PolyVectorField {
 public:
  PolyVectorField() = default;
  explicit PolyVectorField(int n) : n_(n), components_(static_cast<std::size_t>(n + 1), Polynomial<S>(n + 1)) {}

  /// Constant ambient vector a.
  static PolyVectorField constant(int n, const std::vector<S>& a) {
    PolyVectorField v(n);
    for (int i = 0; i <= n; ++i)
      v.components_[static_cast<std::size_t>(i)] = Polynomial<S>::constant(n + 1, a.at(static_cast<std::size_t>(i)));
    return v;
  }
  /// x -> x.
  static PolyVectorField position(int n) {
    PolyVectorField v(n);
    for (int i = 0; i <= n; ++i) v.components_[static_cast<std::size_t>(i)] = Polynomial<S>::variable(n + 1, i);
    return v;
  }

  int n() const noexcept { return n_; }
  const Polynomial<S>& component(int i) const { return components_.at(static_cast<std::size_t>(i)); }
  Polynomial<S>& component(int i) { return components_.at(static_cast<std::size_t>(i)); }

  /// <V, x> as a polynomial.
  Polynomial<S> radial() const {
    Polynomial<S> out(n_ + 1);
    for (int i = 0; i <= n_; ++i) out += components_[static_cast<std::size_t>(i)].times_variable(i);
    return out;
  }

  /// <V, W> as a polynomial.
  Polynomial<S> dot(const PolyVectorField& w) const {
    Polynomial<S> out(n_ + 1);
    for (int i = 0; i <= n_; ++i) out += components_[static_cast<std::size_t>(i)] * w.component(i);
    return out;
  }

  /// dV(W): derivative of V in the direction W, ambiently.
  PolyVectorField derivative_along(const PolyVectorField& w) const {
    PolyVectorField out(n_);
    for (int i = 0; i <= n_; ++i)
      for (int b = 0; b <= n_; ++b)
        out.components_[static_cast<std::size_t>(i)] += w.component(b) * components_[static_cast<std::size_t>(i)].derivative(b);
    return out;
  }

  /// Pointwise tangent projection V - <V, x> x, canonically reduced.
  PolyVectorField tangent_projection() const {
    const Polynomial<S> r = radial();
    PolyVectorField out(n_);
    for (int i = 0; i <= n_; ++i)
      out.components_[static_cast<std::size_t>(i)] =
          harmonic_reduce(components_[static_cast<std::size_t>(i)] - r.times_variable(i));
    return out;
  }

  PolyVectorField reduced() const {
    PolyVectorField out(n_);
    for (int i = 0; i <= n_; ++i)
      out.components_[static_cast<std::size_t>(i)] = harmonic_reduce(components_[static_cast<std::size_t>(i)]);
    return out;
  }

  PolyVectorField& operator+=(const PolyVectorField& rhs) {
    for (int i = 0; i <= n_; ++i) components_[static_cast<std::size_t>(i)] += rhs.component(i);
    return *this;
  }
  PolyVectorField& operator-=(const PolyVectorField& rhs) {
    for (int i = 0; i <= n_; ++i) components_[static_cast<std::size_t>(i)] -= rhs.component(i);
    return *this;
  }
  PolyVectorField& operator*=(const S& s) {
    for (auto& p : components_) p *= s;
    return *this;
  }
  friend PolyVectorField operator+(PolyVectorField a, const PolyVectorField& b) { return a += b; }
  friend PolyVectorField operator-(PolyVectorField a, const PolyVectorField& b) { return a -= b; }
  friend PolyVectorField operator*(PolyVectorField a, const S& s) { return a *= s; }
  friend PolyVectorField operator*(const Polynomial<S>& f, PolyVectorField a) {
    for (auto& p : a.components_) p = f * p;
    return a;
  }
  friend bool operator==(const PolyVectorField& a, const PolyVectorField& b) {
    return a.n_ == b.n_ && a.components_ == b.components_;
  }

  Eigen::VectorXd evaluate(const SpherePoint& x) const {
    Eigen::VectorXd out(n_ + 1);
    for (int i = 0; i <= n_; ++i) out(i) = components_[static_cast<std::size_t>(i)].evaluate(x.coords()).real();
    return out;
  }

  double max_coeff_norm() const {
    double m = 0.0;
    for (const auto& p : components_) m = std::max(m, p.max_coeff_norm());
    return m;
  }

 private:
  int n_ = 0;
  std::vector<Polynomial<S>> components_;
};

/// Vector field whose restriction to the sphere is tangent: <V(x), x> reduces
/// to zero modulo |x|^2 - 1.
template <class S>
class TangentField {
 public:
  /// Throws Error(ErrorCode::tangency) if <V, x> does not vanish on the sphere.
  static TangentField checked(PolyVectorField<S> v) {
    if (!harmonic_reduce(v.radial()).is_zero())
      throw Error(ErrorCode::tangency, "vector field is not tangent to the sphere");
    return TangentField(std::move(v));
  }

  /// The projected constant field a - <a, x> x.
  static TangentField projected(int n, const std::vector<S>& a) {
    PolyVectorField<S> v = PolyVectorField<S>::constant(n, a);
    const Polynomial<S> r = v.radial();
    for (int i = 0; i <= n; ++i) v.component(i) -= r.times_variable(i);
    return TangentField(std::move(v));
  }

  /// The projected coordinate field e_a - x_a x (0-based a).
  static TangentField coordinate(int n, int a) {
    std::vector<S> e(static_cast<std::size_t>(n + 1));
    e.at(static_cast<std::size_t>(a)) = ScalarTraits<S>::from_int(1);
    return projected(n, e);
  }

  int n() const noexcept { return field_.n(); }
  const PolyVectorField<S>& field() const noexcept { return field_; }
  operator const PolyVectorField<S>&() const noexcept { return field_; }  // NOLINT(implicit)

 private:
  explicit TangentField(PolyVectorField<S> v) : field_(std::move(v)) {}
  PolyVectorField<S> field_;
};

/// Componentwise evaluation at a sphere point.
template <class S>
Eigen::VectorXcd evaluate(const PolySpinorField<S>& phi, const SpherePoint& x) {
  if (x.n() != phi.n()) throw Error(ErrorCode::dimension_mismatch, "evaluate: point and field dimensions differ");
  Eigen::VectorXcd out(static_cast<Eigen::Index>(phi.dim()));
  for (std::size_t c = 0; c < phi.dim(); ++c) out(static_cast<Eigen::Index>(c)) = phi.component(c).evaluate(x.coords());
  return out;
}

/// dPhi(V) = sum_a V_a d_a Phi.
template <class S>
PolySpinorField<S> directional_derivative(const PolySpinorField<S>& phi, const PolyVectorField<S>& v) {
  if (v.n() != phi.n()) throw Error(ErrorCode::dimension_mismatch, "directional derivative: dimension mismatch");
  PolySpinorField<S> out(phi.n(), phi.dim());
  for (std::size_t c = 0; c < phi.dim(); ++c)
    for (int a = 0; a <= phi.n(); ++a) {
      if (v.component(a).is_zero()) continue;
      out.component(c) += v.component(a) * phi.component(c).derivative(a);
    }
  return out;
}

/// Gamma matrix gamma_a applied to a field, componentwise.
template <class S>
PolySpinorField<S> gamma_apply(const MatrixRep& rep, int a, const PolySpinorField<S>& phi) {
  const auto& g = rep.gamma_action(a);
  PolySpinorField<S> out(phi.n(), phi.dim());
  for (std::size_t r = 0; r < phi.dim(); ++r) {
    out.component(r) = phi.component(static_cast<std::size_t>(g.source[r]));
    if (g.phase[r] != 0) out.component(r) *= times_i_power(ScalarTraits<S>::from_int(1), g.phase[r]);
  }
  return out;
}

/// (V . Phi)(x) = sum_a V_a(x) gamma_a Phi(x). Degrees add.
template <class S>
PolySpinorField<S> clifford_mul_field(const MatrixRep& rep, const PolyVectorField<S>& v, const PolySpinorField<S>& phi) {
  if (v.n() != phi.n() || rep.n() != phi.n() + 1 || rep.dim() != phi.dim())
    throw Error(ErrorCode::dimension_mismatch, "Clifford multiplication: dimension mismatch");
  PolySpinorField<S> out(phi.n(), phi.dim());
  for (int a = 0; a <= phi.n(); ++a) {
    if (v.component(a).is_zero()) continue;
    out += v.component(a) * gamma_apply(rep, a, phi);
  }
  return out;
}

/// x . Phi (Clifford multiplication by the position vector).
template <class S>
PolySpinorField<S> position_mul(const MatrixRep& rep, const PolySpinorField<S>& phi) {
  PolySpinorField<S> out(phi.n(), phi.dim());
  for (int a = 0; a <= phi.n(); ++a) {
    PolySpinorField<S> g = gamma_apply(rep, a, phi);
    for (std::size_t c = 0; c < phi.dim(); ++c) out.component(c) += g.component(c).times_variable(a);
  }
  return out;
}

/// Phi(-x).
template <class S>
PolySpinorField<S> antipodal_pullback(const PolySpinorField<S>& phi) {
  PolySpinorField<S> out = phi;
  for (std::size_t c = 0; c < phi.dim(); ++c) out.component(c) = phi.component(c).antipodal();
  return out;
}

/// Canonical representative modulo |x|^2 = 1, componentwise.
template <class S>
PolySpinorField<S> harmonic_reduce(const PolySpinorField<S>& phi) {
  PolySpinorField<S> out(phi.n(), phi.dim());
  for (std::size_t c = 0; c < phi.dim(); ++c) out.component(c) = harmonic_reduce(phi.component(c));
  return out;
}

template <class S>
bool is_canonical(const PolySpinorField<S>& phi) {
  for (std::size_t c = 0; c < phi.dim(); ++c)
    if (!is_canonical(phi.component(c))) return false;
  return true;
}

/// Pointwise Hermitian product sum_c conj(Phi_c) Psi_c as a polynomial.
template <class S>
Polynomial<S> hermitian_product(const PolySpinorField<S>& phi, const PolySpinorField<S>& psi) {
  Polynomial<S> out(phi.nvars());
  for (std::size_t c = 0; c < phi.dim(); ++c) out += phi.component(c).conj() * psi.component(c);
  return out;
}

/// Average over the sphere of the Hermitian product.
template <class S>
S l2_inner(const PolySpinorField<S>& phi, const PolySpinorField<S>& psi) {
  S sum{};
  for (std::size_t c = 0; c < phi.dim(); ++c) sum += sphere_inner(phi.component(c), psi.component(c));
  return sum;
}

/// Coefficient-space inner product sum conj(a) b over matching monomials.
template <class S>
S coefficient_inner(const PolySpinorField<S>& phi, const PolySpinorField<S>& psi) {
  S sum{};
  for (std::size_t c = 0; c < phi.dim(); ++c)
    for (const auto& [m, v] : phi.component(c).terms()) sum += ScalarTraits<S>::conj(v) * psi.component(c).coefficient(m);
  return sum;
}

struct BasisLabel {
  int degree = 0;
  Monomial index;
  std::size_t spinor = 0;
};

/// The fields h_alpha(x) s_c: h_alpha the harmonic basis of degree k <= m,
/// s_c the standard spinor basis. Ordered by degree, then index monomial,
/// then spinor coordinate, so the basis for m is a prefix of the one for m+1.
template <class S>
class FieldBasis {
 public:
  static constexpr std::size_t max_size = 100000;

  FieldBasis(int n, int m) : n_(n), m_(m), dim_(spinor_dim(n)) {
    if (m < 0) throw Error(ErrorCode::degree_bound, "degree bound must be non-negative");
    if (n < 1 || n > max_sphere_dim) throw Error(ErrorCode::size, "sphere dimension must be in [1, 7]");
    std::size_t total = 0;
    for (int k = 0; k <= m; ++k) total += harmonic_dimension(n + 1, k);
    if (total * dim_ > max_size)
      throw Error(ErrorCode::size, "basis for n=" + std::to_string(n) + ", m=" + std::to_string(m) + " is too large");
    for (int k = 0; k <= m; ++k)
      for (auto idx : harmonic_index_monomials(n + 1, k)) {
        const Polynomial<S> h = harmonic_basis_element<S>(n + 1, idx);
        for (std::size_t c = 0; c < dim_; ++c) {
          lookup_.emplace(std::make_pair(idx, c), labels_.size());
          labels_.push_back({k, idx, c});
          PolySpinorField<S> f(n, dim_);
          f.component(c) = h;
          fields_.push_back(std::move(f));
        }
      }
  }

  int n() const noexcept { return n_; }
  int m() const noexcept { return m_; }
  std::size_t size() const noexcept { return fields_.size(); }
  const std::vector<PolySpinorField<S>>& fields() const noexcept { return fields_; }
  const PolySpinorField<S>& field(std::size_t i) const { return fields_.at(i); }
  const std::vector<BasisLabel>& labels() const noexcept { return labels_; }

  struct Coordinates {
    std::vector<S> values;
    double unrepresented = 0.0;  ///< max coefficient norm of degree > m terms
  };

  /// Coordinates of a field in canonical form. Terms of degree above m are
  /// not representable and only reported through `unrepresented`.
  Coordinates coordinates(const PolySpinorField<S>& phi) const {
    Coordinates out{std::vector<S>(size()), 0.0};
    for (std::size_t c = 0; c < phi.dim(); ++c)
      for (const auto& [mono, v] : phi.component(c).terms()) {
        if (mono.degree() > m_) {
          out.unrepresented = std::max(out.unrepresented, ScalarTraits<S>::magnitude(v));
          continue;
        }
        auto it = lookup_.find(std::make_pair(mono, c));
        if (it != lookup_.end()) out.values[it->second] = v;
      }
    return out;
  }

  /// sum_i coords[i] * field(i).
  PolySpinorField<S> combine(const std::vector<S>& coords) const {
    PolySpinorField<S> out(n_, dim_);
    for (std::size_t i = 0; i < coords.size() && i < size(); ++i) {
      if (ScalarTraits<S>::is_zero(coords[i])) continue;
      out.component(labels_[i].spinor) += fields_[i].component(labels_[i].spinor) * coords[i];
    }
    return out;
  }

 private:
  int n_;
  int m_;
  std::size_t dim_;
  std::vector<BasisLabel> labels_;
  std::vector<PolySpinorField<S>> fields_;
  std::map<std::pair<Monomial, std::size_t>, std::size_t> lookup_;
};

/// The fields of FieldBasis(n, m); count dim Delta_{n+1} * sum_{k<=m} dim H_k.
template <class S>
std::vector<PolySpinorField<S>> basis_fields(int n, int m) {
  return FieldBasis<S>(n, m).fields();
}

/// {n, dim, components: [[{exponents, re, im}, ...], ...]}.
template <class S>
nlohmann::ordered_json to_json(const PolySpinorField<S>& phi) {
  nlohmann::ordered_json j;
  j["n"] = phi.n();
  j["dim"] = phi.dim();
  auto comps = nlohmann::ordered_json::array();
  for (std::size_t c = 0; c < phi.dim(); ++c) {
    auto terms = nlohmann::ordered_json::array();
    for (const auto& [m, v] : phi.component(c).terms()) {
      const Complex z = ScalarTraits<S>::to_complex(v);
      nlohmann::ordered_json t;
      t["exponents"] = m.exponents(phi.nvars());
      t["re"] = z.real();
      t["im"] = z.imag();
      terms.push_back(std::move(t));
    }
    comps.push_back(std::move(terms));
  }
  j["components"] = std::move(comps);
  return j;
}

}  // namespace cartan
