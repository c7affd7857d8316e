// Copyright cartan-spinors contributors.
// SPDX-License-Identifier: Apache-2.0

#include "cartan/polyspinor.hpp"

#include <cmath>

namespace cartan {

SpherePoint::SpherePoint(std::vector<double> x) : x_(std::move(x)) {
  if (x_.size() < 2) throw Error(ErrorCode::dimension_mismatch, "sphere points need at least two coordinates");
  double r2 = 0.0;
  for (double v : x_) r2 += v * v;
  if (std::abs(r2 - 1.0) > tolerance)
    throw Error(ErrorCode::dimension_mismatch, "point is not on the unit sphere (|x|^2 = " + std::to_string(r2) + ")");
}

SpherePoint SpherePoint::normalized(std::vector<double> x) {
  double r2 = 0.0;
  for (double v : x) r2 += v * v;
  if (r2 == 0.0) throw Error(ErrorCode::numeric, "cannot normalize the zero vector");
  const double r = std::sqrt(r2);
  for (double& v : x) v /= r;
  return SpherePoint(std::move(x));
}

SpherePoint SpherePoint::antipode() const {
  std::vector<double> y = x_;
  for (double& v : y) v = -v;
  return SpherePoint(std::move(y));
}

MatrixRep spinor_module_rep(int n) {
  if (n < 1 || n > max_sphere_dim) throw Error(ErrorCode::size, "sphere dimension must be in [1, 7]");
  return build_rep(n + 1, (n + 1) % 2 == 0 ? RepKind::dirac : RepKind::pauli);
}

std::size_t spinor_dim(int n) { return std::size_t{1} << ((n + 1) / 2); }

}  // namespace cartan
