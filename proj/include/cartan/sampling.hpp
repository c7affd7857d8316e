// Copyright cartan-spinors contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Seeded sampling. Gaussian variates come from a local Box-Muller transform
// over mt19937_64 so that a seed gives the same stream on every standard
// library.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "cartan/polyspinor.hpp"

namespace cartan {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double gaussian() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u = 0.0;
    while (u <= 0.0) u = uniform();
    const double v = uniform();
    const double r = std::sqrt(-2.0 * std::log(u));
    spare_ = r * std::sin(2.0 * M_PI * v);
    has_spare_ = true;
    return r * std::cos(2.0 * M_PI * v);
  }

  /// Integer in [lo, hi].
  int integer(int lo, int hi) {
    return lo + static_cast<int>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  SpherePoint sphere_point(int n) {
    std::vector<double> x(static_cast<std::size_t>(n + 1));
    for (auto& v : x) v = gaussian();
    return SpherePoint::normalized(std::move(x));
  }

  Eigen::VectorXd ambient(int n) {
    Eigen::VectorXd v(n + 1);
    for (int i = 0; i <= n; ++i) v(i) = gaussian();
    return v;
  }

  Eigen::VectorXcd spinor(std::size_t dim) {
    Eigen::VectorXcd v(static_cast<Eigen::Index>(dim));
    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = Complex(gaussian(), gaussian());
    return v;
  }

  /// Spinor with small Gaussian-integer entries, not all zero.
  template <class S>
  std::vector<S> integer_spinor(std::size_t dim) {
    std::vector<S> v(dim);
    bool nonzero = false;
    while (!nonzero) {
      for (auto& c : v) {
        const int re = integer(-3, 3);
        const int im = integer(-3, 3);
        c = ScalarTraits<S>::from_int(re) + ScalarTraits<S>::from_int(im) * ScalarTraits<S>::imag_unit();
        nonzero = nonzero || re != 0 || im != 0;
      }
    }
    return v;
  }

  /// Random field with small Gaussian-integer coefficients and degree <= max_degree.
  template <class S>
  PolySpinorField<S> field(int n, int max_degree, int terms_per_component = 4) {
    PolySpinorField<S> phi(n, spinor_dim(n));
    for (std::size_t c = 0; c < phi.dim(); ++c)
      for (int t = 0; t < terms_per_component; ++t) {
        const int d = integer(0, max_degree);
        std::vector<int> e(static_cast<std::size_t>(n + 1), 0);
        for (int k = 0; k < d; ++k) ++e[static_cast<std::size_t>(integer(0, n))];
        const S coef = ScalarTraits<S>::from_int(integer(-4, 4)) +
                       ScalarTraits<S>::from_int(integer(-4, 4)) * ScalarTraits<S>::imag_unit();
        phi.component(c) += Polynomial<S>::monomial(n + 1, Monomial::from_exponents(e), coef);
      }
    return phi;
  }

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace cartan
