// Copyright cartan-spinors contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Exact Gaussian-rational scalars with overflow detection, plus a traits
// layer that lets the polynomial and field code run either exactly or in
// double-precision complex arithmetic.

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "cartan/error.hpp"

namespace cartan {

/// Arithmetic mode that produced a value or a residual.
enum class Mode { exact, floating };

const char* to_string(Mode mode);

/// Reduced fraction over int64 with a positive denominator. Every operation
/// is carried out in 128-bit intermediates; results that do not fit in 64 bits
/// throw Error(ErrorCode::overflow).
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t value) : num_(value) {}  // NOLINT(implicit)
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_ == 0; }
  bool is_integer() const noexcept { return den_ == 1; }
  double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator<(const Rational& a, const Rational& b);

  /// Nearest fraction with the given denominator.
  static Rational round_to(double value, std::int64_t den);

 private:
  static Rational from_wide(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

/// Complex number with rational real and imaginary parts.
class GaussRational {
 public:
  constexpr GaussRational() = default;
  constexpr GaussRational(std::int64_t re) : re_(re) {}  // NOLINT(implicit)
  GaussRational(Rational re) : re_(re) {}                 // NOLINT(implicit)
  GaussRational(Rational re, Rational im) : re_(re), im_(im) {}

  static GaussRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const noexcept { return re_; }
  const Rational& im() const noexcept { return im_; }

  bool is_zero() const noexcept { return re_.is_zero() && im_.is_zero(); }
  GaussRational conj() const { return {re_, -im_}; }
  Rational norm2() const { return re_ * re_ + im_ * im_; }
  std::complex<double> to_complex() const { return {re_.to_double(), im_.to_double()}; }
  std::string str() const;

  GaussRational operator-() const { return {-re_, -im_}; }
  GaussRational& operator+=(const GaussRational& rhs);
  GaussRational& operator-=(const GaussRational& rhs);
  GaussRational& operator*=(const GaussRational& rhs);
  GaussRational& operator/=(const GaussRational& rhs);

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
  friend bool operator==(const GaussRational& a, const GaussRational& b) noexcept {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  Rational re_;
  Rational im_;
};

std::ostream& operator<<(std::ostream& os, const GaussRational& z);

using Complex = std::complex<double>;

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<GaussRational> {
  static constexpr Mode mode = Mode::exact;
  static GaussRational from_int(std::int64_t v) { return GaussRational(v); }
  static GaussRational ratio(std::int64_t p, std::int64_t q) { return GaussRational(Rational(p, q)); }
  static GaussRational from_rational(const Rational& q) { return GaussRational(q); }
  static GaussRational imag_unit() { return GaussRational::i(); }
  static Complex to_complex(const GaussRational& z) { return z.to_complex(); }
  static bool is_zero(const GaussRational& z) { return z.is_zero(); }
  static double magnitude(const GaussRational& z) { return std::abs(z.to_complex()); }
  static GaussRational conj(const GaussRational& z) { return z.conj(); }
  /// Nonzero test used for pivoting in elimination.
  static bool pivot_ok(const GaussRational& z, double /*scale*/) { return !z.is_zero(); }
};

template <>
struct ScalarTraits<Complex> {
  static constexpr Mode mode = Mode::floating;
  /// Terms below this magnitude are dropped from polynomials.
  static constexpr double prune = 1e-15;
  static Complex from_int(std::int64_t v) { return Complex(static_cast<double>(v), 0.0); }
  static Complex ratio(std::int64_t p, std::int64_t q) {
    return Complex(static_cast<double>(p) / static_cast<double>(q), 0.0);
  }
  static Complex from_rational(const Rational& q) { return Complex(q.to_double(), 0.0); }
  static Complex imag_unit() { return Complex(0.0, 1.0); }
  static Complex to_complex(const Complex& z) { return z; }
  static bool is_zero(const Complex& z) { return std::abs(z.real()) < prune && std::abs(z.imag()) < prune; }
  static double magnitude(const Complex& z) { return std::abs(z); }
  static Complex conj(const Complex& z) { return std::conj(z); }
  static bool pivot_ok(const Complex& z, double scale) { return std::abs(z) > 1e-10 * (scale > 1.0 ? scale : 1.0); }
};

/// z * i^power for power in 0..3.
template <class S>
S times_i_power(const S& z, int power) {
  switch (power & 3) {
    case 0: return z;
    case 1: return z * ScalarTraits<S>::imag_unit();
    case 2: return -z;
    default: return -(z * ScalarTraits<S>::imag_unit());
  }
}

}  // namespace cartan
