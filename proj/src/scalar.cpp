// Copyright cartan-spinors contributors.
// SPDX-License-Identifier: Apache-2.0

#include "cartan/scalar.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>

namespace cartan {

namespace {

using i128 = __int128;

i128 abs128(i128 v) { return v < 0 ? -v : v; }

i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits64(i128 v) {
  return v >= static_cast<i128>(std::numeric_limits<std::int64_t>::min()) + 1 &&
         v <= static_cast<i128>(std::numeric_limits<std::int64_t>::max());
}

[[noreturn]] void overflow() {
  throw Error(ErrorCode::overflow, "rational arithmetic overflow (64-bit range exceeded)");
}

}  // namespace

const char* to_string(Mode mode) { return mode == Mode::exact ? "exact" : "float"; }

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorCode::numeric, "rational with zero denominator");
  *this = from_wide(num, den);
}

Rational Rational::from_wide(i128 num, i128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) return Rational();
  if (den != 1) {
    i128 g = gcd128(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }
  if (!fits64(num) || !fits64(den)) overflow();
  Rational r;
  r.num_ = static_cast<std::int64_t>(num);
  r.den_ = static_cast<std::int64_t>(den);
  return r;
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (den_ == 1 && rhs.den_ == 1) {
    i128 s = static_cast<i128>(num_) + rhs.num_;
    if (!fits64(s)) overflow();
    num_ = static_cast<std::int64_t>(s);
    return *this;
  }
  i128 num = static_cast<i128>(num_) * rhs.den_ + static_cast<i128>(rhs.num_) * den_;
  i128 den = static_cast<i128>(den_) * rhs.den_;
  *this = from_wide(num, den);
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
  if (num_ == 0 || rhs.num_ == 0) {
    *this = Rational();
    return *this;
  }
  if (den_ == 1 && rhs.den_ == 1) {
    i128 p = static_cast<i128>(num_) * rhs.num_;
    if (!fits64(p)) overflow();
    num_ = static_cast<std::int64_t>(p);
    return *this;
  }
  *this = from_wide(static_cast<i128>(num_) * rhs.num_, static_cast<i128>(den_) * rhs.den_);
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.num_ == 0) throw Error(ErrorCode::numeric, "rational division by zero");
  *this = from_wide(static_cast<i128>(num_) * rhs.den_, static_cast<i128>(den_) * rhs.num_);
  return *this;
}

bool operator<(const Rational& a, const Rational& b) {
  return static_cast<i128>(a.num_) * b.den_ < static_cast<i128>(b.num_) * a.den_;
}

Rational Rational::round_to(double value, std::int64_t den) {
  return Rational(static_cast<std::int64_t>(std::llround(value * static_cast<double>(den))), den);
}

std::string Rational::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Rational& q) {
  os << q.num();
  if (q.den() != 1) os << '/' << q.den();
  return os;
}

GaussRational& GaussRational::operator+=(const GaussRational& rhs) {
  re_ += rhs.re_;
  im_ += rhs.im_;
  return *this;
}

GaussRational& GaussRational::operator-=(const GaussRational& rhs) {
  re_ -= rhs.re_;
  im_ -= rhs.im_;
  return *this;
}

GaussRational& GaussRational::operator*=(const GaussRational& rhs) {
  if (im_.is_zero() && rhs.im_.is_zero()) {
    re_ *= rhs.re_;
    return *this;
  }
  Rational re = re_ * rhs.re_ - im_ * rhs.im_;
  Rational im = re_ * rhs.im_ + im_ * rhs.re_;
  re_ = re;
  im_ = im;
  return *this;
}

GaussRational& GaussRational::operator/=(const GaussRational& rhs) {
  Rational n2 = rhs.norm2();
  if (n2.is_zero()) throw Error(ErrorCode::numeric, "complex division by zero");
  *this *= rhs.conj();
  re_ /= n2;
  im_ /= n2;
  return *this;
}

std::string GaussRational::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const GaussRational& z) {
  if (z.im().is_zero()) return os << z.re();
  if (z.re().is_zero()) return os << z.im() << "i";
  os << z.re() << (z.im() < Rational(0) ? " - " : " + ");
  Rational a = z.im() < Rational(0) ? -z.im() : z.im();
  return os << a << "i";
}

}  // namespace cartan
