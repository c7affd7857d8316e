// Copyright cartan-spinors contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Sparse multivariate polynomials in at most eight real variables with exact
// or floating complex coefficients, plus the harmonic machinery used to pick
// canonical representatives modulo the sphere relation |x|^2 = 1.

#include <algorithm>
#include <array>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "cartan/scalar.hpp"

namespace cartan {

/// Exponent vector packed one byte per variable, variable 0 in the most
/// significant byte. Products never carry as long as every exponent stays
/// below 256.
class Monomial {
 public:
  static constexpr int max_vars = 8;

  constexpr Monomial() = default;
  constexpr explicit Monomial(std::uint64_t key) : key_(key) {}

  static Monomial from_exponents(std::span<const int> exponents);
  static constexpr Monomial variable(int i) { return Monomial(std::uint64_t{1} << shift(i)); }

  std::uint64_t key() const noexcept { return key_; }
  int exponent(int i) const noexcept { return static_cast<int>((key_ >> shift(i)) & 0xff); }
  int degree() const noexcept { return static_cast<int>((key_ * 0x0101010101010101ULL) >> 56); }
  std::vector<int> exponents(int nvars) const;

  Monomial operator*(Monomial rhs) const noexcept { return Monomial(key_ + rhs.key_); }
  /// Requires exponent(i) > 0.
  Monomial without_variable(int i) const noexcept { return Monomial(key_ - (std::uint64_t{1} << shift(i))); }

  friend constexpr auto operator<=>(Monomial a, Monomial b) = default;

 private:
  static constexpr int shift(int i) { return 8 * (max_vars - 1 - i); }
  std::uint64_t key_ = 0;
};

template <class S>
class Polynomial {
 public:
  using Term = std::pair<Monomial, S>;

  Polynomial() = default;
  explicit Polynomial(int nvars) : nvars_(nvars) {
    if (nvars < 1 || nvars > Monomial::max_vars)
      throw Error(ErrorCode::size, "polynomials support 1..8 variables");
  }

  static Polynomial constant(int nvars, const S& c) { return monomial(nvars, Monomial(), c); }
  static Polynomial variable(int nvars, int i) {
    return monomial(nvars, Monomial::variable(i), ScalarTraits<S>::from_int(1));
  }
  static Polynomial monomial(int nvars, Monomial m, const S& c) {
    Polynomial p(nvars);
    if (!ScalarTraits<S>::is_zero(c)) p.terms_.emplace_back(m, c);
    return p;
  }
  /// Terms in any order, duplicates summed.
  static Polynomial from_terms(int nvars, std::vector<Term> terms) {
    Polynomial p(nvars);
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
  }

  int nvars() const noexcept { return nvars_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Total degree; -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.first.degree());
    return d;
  }

  S coefficient(Monomial m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, Monomial key) { return t.first < key; });
    return (it != terms_.end() && it->first == m) ? it->second : S{};
  }

  Polynomial& operator+=(const Polynomial& rhs) { return merge(rhs, false); }
  Polynomial& operator-=(const Polynomial& rhs) { return merge(rhs, true); }
  Polynomial& operator*=(const S& c) {
    if (ScalarTraits<S>::is_zero(c)) {
      terms_.clear();
      return *this;
    }
    for (auto& t : terms_) t.second *= c;
    prune();
    return *this;
  }
  Polynomial operator-() const {
    Polynomial out = *this;
    for (auto& t : out.terms_) t.second = -t.second;
    return out;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const S& c) { return a *= c; }
  friend Polynomial operator*(const S& c, Polynomial a) { return a *= c; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_vars(a, b);
    if (a.terms_.size() == 1) return b.times_term(a.terms_[0].first, a.terms_[0].second);
    if (b.terms_.size() == 1) return a.times_term(b.terms_[0].first, b.terms_[0].second);
    std::vector<Term> out;
    out.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& ta : a.terms_)
      for (const auto& tb : b.terms_) out.emplace_back(ta.first * tb.first, ta.second * tb.second);
    return from_terms(a.nvars_, std::move(out));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  /// c * x^m * this; ordering is preserved so no sort is needed.
  Polynomial times_term(Monomial m, const S& c) const {
    Polynomial out(nvars_);
    if (ScalarTraits<S>::is_zero(c)) return out;
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) out.terms_.emplace_back(t.first * m, t.second * c);
    out.prune();
    return out;
  }

  Polynomial times_variable(int i) const {
    Polynomial out(nvars_);
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) out.terms_.emplace_back(t.first * Monomial::variable(i), t.second);
    return out;
  }

  Polynomial derivative(int i) const {
    Polynomial out(nvars_);
    for (const auto& t : terms_) {
      const int e = t.first.exponent(i);
      if (e == 0) continue;
      out.terms_.emplace_back(t.first.without_variable(i), t.second * ScalarTraits<S>::from_int(e));
    }
    return out;
  }

  /// Sum of second derivatives in the first `upto` variables (all by default).
  Polynomial laplacian(int upto = -1) const {
    if (upto < 0) upto = nvars_;
    Polynomial out(nvars_);
    for (int i = 0; i < upto; ++i) {
      Polynomial d2(nvars_);
      for (const auto& t : terms_) {
        const int e = t.first.exponent(i);
        if (e < 2) continue;
        d2.terms_.emplace_back(t.first.without_variable(i).without_variable(i),
                               t.second * ScalarTraits<S>::from_int(static_cast<std::int64_t>(e) * (e - 1)));
      }
      out += d2;
    }
    return out;
  }

  /// |x|^2 * this.
  Polynomial times_r2() const {
    Polynomial out(nvars_);
    for (int i = 0; i < nvars_; ++i) out += times_variable(i).times_variable(i);
    return out;
  }

  Polynomial homogeneous_part(int d) const {
    Polynomial out(nvars_);
    for (const auto& t : terms_)
      if (t.first.degree() == d) out.terms_.push_back(t);
    return out;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = terms_.front().first.degree();
    return std::all_of(terms_.begin(), terms_.end(), [d](const Term& t) { return t.first.degree() == d; });
  }

  /// p(-x): odd-degree terms change sign.
  Polynomial antipodal() const {
    Polynomial out = *this;
    for (auto& t : out.terms_)
      if (t.first.degree() & 1) t.second = -t.second;
    return out;
  }

  /// Complex conjugate of the coefficients (variables are real).
  Polynomial conj() const {
    Polynomial out = *this;
    for (auto& t : out.terms_) t.second = ScalarTraits<S>::conj(t.second);
    return out;
  }

  Complex evaluate(std::span<const double> x) const {
    if (static_cast<int>(x.size()) != nvars_)
      throw Error(ErrorCode::dimension_mismatch, "evaluation point has the wrong dimension");
    Complex sum = 0.0;
    for (const auto& t : terms_) {
      double v = 1.0;
      for (int i = 0; i < nvars_; ++i)
        for (int e = t.first.exponent(i); e > 0; --e) v *= x[static_cast<std::size_t>(i)];
      sum += ScalarTraits<S>::to_complex(t.second) * v;
    }
    return sum;
  }

  /// Exact value at a point with scalar coordinates.
  S evaluate_exact(std::span<const S> x) const {
    if (static_cast<int>(x.size()) != nvars_)
      throw Error(ErrorCode::dimension_mismatch, "evaluation point has the wrong dimension");
    S sum{};
    for (const auto& t : terms_) {
      S v = t.second;
      for (int i = 0; i < nvars_; ++i)
        for (int e = t.first.exponent(i); e > 0; --e) v *= x[static_cast<std::size_t>(i)];
      sum += v;
    }
    return sum;
  }

  double max_coeff_norm() const {
    double m = 0.0;
    for (const auto& t : terms_) m = std::max(m, ScalarTraits<S>::magnitude(t.second));
    return m;
  }

  template <class T>
  Polynomial<T> cast() const {
    std::vector<typename Polynomial<T>::Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.emplace_back(t.first, convert<T>(t.second));
    return Polynomial<T>::from_terms(nvars_, std::move(out));
  }

 private:
  template <class T>
  static T convert(const S& v) {
    if constexpr (std::is_same_v<T, S>) {
      return v;
    } else {
      return ScalarTraits<S>::to_complex(v);
    }
  }

  static void check_vars(const Polynomial& a, const Polynomial& b) {
    if (a.nvars_ != b.nvars_) throw Error(ErrorCode::dimension_mismatch, "polynomials in different variable counts");
  }

  void prune() {
    terms_.erase(std::remove_if(terms_.begin(), terms_.end(),
                                [](const Term& t) { return ScalarTraits<S>::is_zero(t.second); }),
                 terms_.end());
  }

  void normalize() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
    std::vector<Term> merged;
    merged.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!merged.empty() && merged.back().first == t.first)
        merged.back().second += t.second;
      else
        merged.push_back(std::move(t));
    }
    terms_ = std::move(merged);
    prune();
  }

  Polynomial& merge(const Polynomial& rhs, bool subtract) {
    if (nvars_ == 0) nvars_ = rhs.nvars_;
    check_vars(*this, rhs);
    if (rhs.terms_.empty()) return *this;
    std::vector<Term> out;
    out.reserve(terms_.size() + rhs.terms_.size());
    auto a = terms_.begin();
    auto b = rhs.terms_.begin();
    while (a != terms_.end() || b != rhs.terms_.end()) {
      if (b == rhs.terms_.end() || (a != terms_.end() && a->first < b->first)) {
        out.push_back(std::move(*a++));
      } else if (a == terms_.end() || b->first < a->first) {
        out.emplace_back(b->first, subtract ? -b->second : b->second);
        ++b;
      } else {
        S c = subtract ? a->second - b->second : a->second + b->second;
        if (!ScalarTraits<S>::is_zero(c)) out.emplace_back(a->first, std::move(c));
        ++a;
        ++b;
      }
    }
    terms_ = std::move(out);
    return *this;
  }

  int nvars_ = 0;
  std::vector<Term> terms_;
};

using ExactPolynomial = Polynomial<GaussRational>;

/// Dimension of the space of harmonic homogeneous polynomials of degree k in
/// `nvars` variables. Throws Error(ErrorCode::size) on overflow.
std::size_t harmonic_dimension(int nvars, int k);

/// binomial(n, k) with an overflow guard.
std::size_t binomial(int n, int k);

/// Average of x^m over the unit sphere in R^nvars (normalized measure).
Rational sphere_moment(int nvars, Monomial m);

/// Monomials of total degree k in `nvars` variables, sorted.
std::vector<Monomial> monomials_of_degree(int nvars, int k);

/// Harmonic decomposition p = h + |x|^2 q of a homogeneous p of degree d,
/// with h the harmonic projection
///   h = sum_j a_j |x|^{2j} Lap^j p,  a_j = -a_{j-1} / (2j (N + 2d - 2j - 2)).
template <class S>
std::pair<Polynomial<S>, Polynomial<S>> harmonic_split(const Polynomial<S>& p) {
  const int nvars = p.nvars();
  const int d = p.degree();
  Polynomial<S> q(nvars);
  if (d < 2) return {p, q};
  std::vector<Polynomial<S>> laps;
  std::vector<Rational> coeffs;
  Polynomial<S> lap = p;
  Rational a(1);
  for (int j = 1; 2 * j <= d; ++j) {
    lap = lap.laplacian();
    if (lap.is_zero()) break;
    a = -a / Rational(static_cast<std::int64_t>(2) * j * (nvars + 2 * d - 2 * j - 2));
    laps.push_back(lap);
    coeffs.push_back(a);
  }
  // q = -(a_1 L_1 + r^2 (a_2 L_2 + r^2 (...)))
  for (std::size_t j = laps.size(); j-- > 0;) {
    q = q.times_r2();
    q += laps[j] * ScalarTraits<S>::from_rational(coeffs[j]);
  }
  q = -q;
  Polynomial<S> h = p - q.times_r2();
  return {h, q};
}

template <class S>
Polynomial<S> harmonic_projection(const Polynomial<S>& p) {
  return harmonic_split(p).first;
}

/// Canonical representative modulo |x|^2 - 1: a sum of harmonic homogeneous
/// polynomials of pairwise distinct degrees agreeing with p on the sphere.
template <class S>
Polynomial<S> harmonic_reduce(const Polynomial<S>& p) {
  const int top = p.degree();
  if (top < 2) return p;
  std::vector<std::vector<typename Polynomial<S>::Term>> buckets(static_cast<std::size_t>(top) + 1);
  for (const auto& t : p.terms()) buckets[static_cast<std::size_t>(t.first.degree())].push_back(t);
  std::vector<Polynomial<S>> parts;
  parts.reserve(buckets.size());
  for (auto& b : buckets) parts.push_back(Polynomial<S>::from_terms(p.nvars(), std::move(b)));
  Polynomial<S> out(p.nvars());
  for (int d = top; d >= 0; --d) {
    auto& part = parts[static_cast<std::size_t>(d)];
    if (part.is_zero()) continue;
    if (d < 2) {
      out += part;
      continue;
    }
    auto [h, q] = harmonic_split(part);
    out += h;
    parts[static_cast<std::size_t>(d - 2)] += q;
  }
  return out;
}

template <class S>
bool is_harmonic(const Polynomial<S>& p) {
  return p.laplacian().is_zero();
}

/// True if every homogeneous part is harmonic (the canonical form).
template <class S>
bool is_canonical(const Polynomial<S>& p) {
  for (int d = 0; d <= p.degree(); ++d)
    if (!is_harmonic(p.homogeneous_part(d))) return false;
  return true;
}

/// Monomials of degree k whose last exponent is 0 or 1. Their count is
/// harmonic_dimension(nvars, k), and a harmonic polynomial is determined by
/// its coefficients on them.
std::vector<Monomial> harmonic_index_monomials(int nvars, int k);

/// The harmonic polynomial whose coefficients on harmonic_index_monomials are
/// those of x^index (one, rest zero). Built by the Cauchy-Kovalevskaya
/// series in the last variable t:
///   h = sum_j (-1)^j t^{2j+e} / (2j+e)! Lap'^j x'^{index'}.
template <class S>
Polynomial<S> harmonic_basis_element(int nvars, Monomial index) {
  const int last = nvars - 1;
  const int e = index.exponent(last);
  Monomial base = index;
  for (int k = 0; k < e; ++k) base = base.without_variable(last);
  Polynomial<S> f = Polynomial<S>::monomial(nvars, base, ScalarTraits<S>::from_int(1));
  Polynomial<S> out(nvars);
  std::int64_t fact = 1;  // (2j+e)!
  Monomial t_power = e == 1 ? Monomial::variable(last) : Monomial();
  for (int j = 0; !f.is_zero(); ++j) {
    if (j > 0) {
      fact *= static_cast<std::int64_t>(2 * j + e - 1) * (2 * j + e);
      t_power = t_power * Monomial::variable(last) * Monomial::variable(last);
    }
    const S c = ScalarTraits<S>::ratio(j % 2 == 0 ? 1 : -1, fact);
    out += f.times_term(t_power, c);
    f = f.laplacian(last);
  }
  return out;
}

/// Average over the sphere of conj(p) q.
template <class S>
S sphere_inner(const Polynomial<S>& p, const Polynomial<S>& q) {
  S sum{};
  for (const auto& a : p.terms())
    for (const auto& b : q.terms()) {
      const Rational mom = sphere_moment(p.nvars(), a.first * b.first);
      if (mom.is_zero()) continue;
      sum += ScalarTraits<S>::conj(a.second) * b.second * ScalarTraits<S>::from_rational(mom);
    }
  return sum;
}

}  // namespace cartan
