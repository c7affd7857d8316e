// Copyright cartan-spinors contributors.
// SPDX-License-Identifier: Apache-2.0

#include "cartan/polynomial.hpp"

#include <limits>

namespace cartan {

Monomial Monomial::from_exponents(std::span<const int> exponents) {
  if (exponents.size() > static_cast<std::size_t>(max_vars))
    throw Error(ErrorCode::size, "monomials support at most 8 variables");
  std::uint64_t key = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 0 || exponents[i] > 200) throw Error(ErrorCode::size, "exponent out of range");
    key |= static_cast<std::uint64_t>(exponents[i]) << shift(static_cast<int>(i));
  }
  return Monomial(key);
}

std::vector<int> Monomial::exponents(int nvars) const {
  std::vector<int> out(static_cast<std::size_t>(nvars));
  for (int i = 0; i < nvars; ++i) out[static_cast<std::size_t>(i)] = exponent(i);
  return out;
}

std::size_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (r > std::numeric_limits<std::size_t>::max() / 64)
      throw Error(ErrorCode::size, "combinatorial size overflow");
  }
  return static_cast<std::size_t>(r);
}

std::size_t harmonic_dimension(int nvars, int k) {
  if (k < 0) return 0;
  return binomial(k + nvars - 1, nvars - 1) - (k >= 2 ? binomial(k + nvars - 3, nvars - 1) : 0);
}

Rational sphere_moment(int nvars, Monomial m) {
  Rational num(1);
  int half_degree = 0;
  for (int i = 0; i < nvars; ++i) {
    const int e = m.exponent(i);
    if (e & 1) return Rational(0);
    for (int k = e - 1; k > 1; k -= 2) num *= Rational(k);
    half_degree += e / 2;
  }
  Rational den(1);
  for (int j = 0; j < half_degree; ++j) den *= Rational(nvars + 2 * j);
  return num / den;
}

std::vector<Monomial> monomials_of_degree(int nvars, int k) {
  std::vector<Monomial> out;
  std::vector<int> e(static_cast<std::size_t>(nvars), 0);
  // Enumerate compositions of k into nvars parts.
  auto rec = [&](auto&& self, int var, int left) -> void {
    if (var == nvars - 1) {
      e[static_cast<std::size_t>(var)] = left;
      out.push_back(Monomial::from_exponents(e));
      return;
    }
    for (int v = left; v >= 0; --v) {
      e[static_cast<std::size_t>(var)] = v;
      self(self, var + 1, left - v);
    }
  };
  rec(rec, 0, k);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Monomial> harmonic_index_monomials(int nvars, int k) {
  std::vector<Monomial> out;
  for (auto m : monomials_of_degree(nvars, k))
    if (m.exponent(nvars - 1) <= 1) out.push_back(m);
  return out;
}

}  // namespace cartan
