// Copyright cartan-spinors contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Complex Clifford algebra on n generators with the convention
//   v.w + w.v = -2 <v, w>,   so  e_i . e_i = -1,
// its canonical involution, and the Dirac / Pauli / Cartan matrix
// representations built from tensor products of Pauli matrices.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "cartan/linalg.hpp"
#include "cartan/scalar.hpp"

namespace cartan {

/// Basis monomial e_A encoded as a bitmask; bit (i-1) set means e_i is a factor.
/// Factors are always taken in increasing index order.
using Blade = std::uint32_t;

inline int blade_grade(Blade b) { return __builtin_popcount(b); }

/// Sign s with e_a . e_b = s e_{a xor b}, counting transpositions and one
/// factor -1 per repeated generator.
int blade_product_sign(Blade a, Blade b);

class CliffordAlgebra {
 public:
  static constexpr int max_generators = 12;

  /// Throws Error(ErrorCode::size) unless 1 <= n <= 12.
  explicit CliffordAlgebra(int n);

  int n() const noexcept { return n_; }
  std::size_t dimension() const noexcept { return std::size_t{1} << n_; }

  int sign(Blade a, Blade b) const { return signs_[(static_cast<std::size_t>(a) << n_) | b]; }

 private:
  int n_;
  std::vector<std::int8_t> signs_;
};

CliffordAlgebra build_algebra(int n);

/// Finitely supported linear combination of basis monomials.
class AlgebraElement {
 public:
  explicit AlgebraElement(int n) : n_(n) {}

  static AlgebraElement scalar(int n, const GaussRational& c);
  static AlgebraElement blade(int n, Blade b, const GaussRational& c = GaussRational(1));
  /// e_i with 1-based index i.
  static AlgebraElement generator(int n, int i);
  /// Sum of v_i e_i.
  static AlgebraElement vector(int n, const std::vector<GaussRational>& v);
  /// e_1 . e_2 ... e_n.
  static AlgebraElement volume(int n);

  int n() const noexcept { return n_; }
  const std::map<Blade, GaussRational>& terms() const noexcept { return terms_; }
  GaussRational coefficient(Blade b) const;
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(Blade b, const GaussRational& c);

  AlgebraElement& operator+=(const AlgebraElement& rhs);
  AlgebraElement& operator-=(const AlgebraElement& rhs);
  AlgebraElement& operator*=(const GaussRational& c);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(AlgebraElement a, const GaussRational& c) { return a *= c; }
  friend AlgebraElement operator*(const GaussRational& c, AlgebraElement a) { return a *= c; }
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  std::string str() const;

 private:
  int n_;
  std::map<Blade, GaussRational> terms_;
};

/// Bilinear product through the algebra's sign table.
/// Throws Error(ErrorCode::algebra_mismatch) if generator counts differ.
AlgebraElement multiply(const CliffordAlgebra& algebra, const AlgebraElement& a, const AlgebraElement& b);

/// e_A -> (-1)^{|A|} e_A.
AlgebraElement involution_alpha(const AlgebraElement& a);

enum class RepKind { dirac, pauli, cartan };

const char* to_string(RepKind kind);
RepKind parse_rep_kind(const std::string& s);

/// A matrix with exactly one nonzero entry per row, equal to a power of i:
///   (M v)[r] = i^phase[r] * v[source[r]].
/// Every gamma matrix produced here has this form.
struct SignedPermutation {
  std::vector<int> source;
  std::vector<int> phase;

  static SignedPermutation identity(std::size_t dim);
  std::size_t dim() const noexcept { return source.size(); }
  Matrix<GaussRational> to_matrix() const;

  template <class S>
  std::vector<S> apply(const std::vector<S>& v) const {
    std::vector<S> out(v.size());
    for (std::size_t r = 0; r < source.size(); ++r) out[r] = times_i_power(v[source[r]], phase[r]);
    return out;
  }
};

/// (a * b) as signed permutations.
SignedPermutation compose(const SignedPermutation& a, const SignedPermutation& b);

/// n generator matrices acting on a complex spinor space.
class MatrixRep {
 public:
  MatrixRep(int n, RepKind kind, std::vector<SignedPermutation> gammas);

  int n() const noexcept { return n_; }
  RepKind kind() const noexcept { return kind_; }
  std::size_t dim() const noexcept { return dim_; }

  /// 0-based generator index a in [0, n).
  const Matrix<GaussRational>& gamma(int a) const { return dense_.at(static_cast<std::size_t>(a)); }
  const SignedPermutation& gamma_action(int a) const { return gammas_.at(static_cast<std::size_t>(a)); }
  const Eigen::MatrixXcd& gamma_numeric(int a) const { return numeric_.at(static_cast<std::size_t>(a)); }

  /// Product gamma_A of the generators in the blade, in increasing order.
  SignedPermutation blade_action(Blade b) const;

 private:
  int n_;
  RepKind kind_;
  std::size_t dim_;
  std::vector<SignedPermutation> gammas_;
  std::vector<Matrix<GaussRational>> dense_;
  std::vector<Eigen::MatrixXcd> numeric_;
};

/// Dirac (even n), Pauli or Cartan (odd n). Throws
/// Error(ErrorCode::representation_kind) on a parity mismatch and
/// Error(ErrorCode::size) for n outside [1, 12].
MatrixRep build_rep(int n, RepKind kind);

/// Throws Error(ErrorCode::dimension_mismatch) if a.n() != rep.n().
Matrix<GaussRational> represent(const MatrixRep& rep, const AlgebraElement& a);

/// gamma_1 ... gamma_n.
Matrix<GaussRational> volume_element(const MatrixRep& rep);

/// Dimension of span{represent(e_A)} over all 2^n monomials.
std::size_t represented_span_dimension(const MatrixRep& rep);

/// Scalar c with gamma_1 ... gamma_n = c Id in a Pauli representation.
/// Its sign depends on the gamma construction and is not canonical.
GaussRational pauli_volume_scalar(const MatrixRep& rep);

/// Eigen-splitting of the odd volume element in the Cartan representation.
struct VolumeSplitting {
  GaussRational eigenvalue;  ///< c; the other eigenvalue is -c
  Matrix<GaussRational> plus_projector;
  Matrix<GaussRational> minus_projector;
  std::size_t plus_dim = 0;
  std::size_t minus_dim = 0;
  bool commutes_with_generators = false;
  bool subspaces_invariant = false;
};

VolumeSplitting volume_splitting(const MatrixRep& rep);

/// {n, kind, dim, gammas: [[[re, im], ...row-major], ...]}.
nlohmann::ordered_json to_json(const MatrixRep& rep);

}  // namespace cartan
