// Copyright cartan-spinors contributors.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <vector>

#include "cartan/clifford.hpp"

using namespace cartan;

namespace {

// Independent product oracle: write e_A e_B as a word of generator indices
// and bubble-sort it, cancelling equal neighbours with e_i e_i = -1.
std::pair<int, Blade> word_product(Blade a, Blade b, int n) {
  std::vector<int> word;
  for (int i = 0; i < n; ++i)
    if (a & (Blade{1} << i)) word.push_back(i);
  for (int i = 0; i < n; ++i)
    if (b & (Blade{1} << i)) word.push_back(i);
  int sign = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k + 1 < word.size(); ++k) {
      if (word[k] > word[k + 1]) {
        std::swap(word[k], word[k + 1]);
        sign = -sign;
        changed = true;
      } else if (word[k] == word[k + 1]) {
        word.erase(word.begin() + static_cast<long>(k), word.begin() + static_cast<long>(k) + 2);
        sign = -sign;
        changed = true;
        break;
      }
    }
  }
  Blade out = 0;
  for (int i : word) out |= Blade{1} << i;
  return {sign, out};
}

Matrix<GaussRational> anticommutator(const Matrix<GaussRational>& a, const Matrix<GaussRational>& b) {
  return a * b + b * a;
}

}  // namespace

TEST_CASE("build_algebra examples") {
  SUBCASE("n=1: e1 e1 = -1") {
    auto alg = build_algebra(1);
    auto e1 = AlgebraElement::generator(1, 1);
    auto p = multiply(alg, e1, e1);
    CHECK(p == AlgebraElement::scalar(1, -1));
  }
  SUBCASE("n=2: e1 e2 + e2 e1 = 0") {
    auto alg = build_algebra(2);
    auto e1 = AlgebraElement::generator(2, 1);
    auto e2 = AlgebraElement::generator(2, 2);
    CHECK((multiply(alg, e1, e2) + multiply(alg, e2, e1)).is_zero());
  }
  SUBCASE("n=3: volume squares to (-1)^{k+1} = +1") {
    auto alg = build_algebra(3);
    auto vol = AlgebraElement::volume(3);
    CHECK(multiply(alg, vol, vol) == AlgebraElement::scalar(3, 1));
  }
  CHECK_THROWS_AS(build_algebra(0), Error);
  CHECK_THROWS_AS(build_algebra(13), Error);
}

TEST_CASE("sign table agrees with word reduction") {
  for (int n = 1; n <= 6; ++n) {
    auto alg = build_algebra(n);
    for (Blade a = 0; a < alg.dimension(); ++a)
      for (Blade b = 0; b < alg.dimension(); ++b) {
        auto [s, r] = word_product(a, b, n);
        REQUIRE(r == (a ^ b));
        REQUIRE(alg.sign(a, b) == s);
      }
  }
}

TEST_CASE("multiplication is associative on all monomial triples (n <= 6)") {
  for (int n = 1; n <= 6; ++n) {
    auto alg = build_algebra(n);
    const Blade dim = static_cast<Blade>(alg.dimension());
    bool ok = true;
    for (Blade a = 0; a < dim; ++a)
      for (Blade b = 0; b < dim; ++b)
        for (Blade c = 0; c < dim; ++c) {
          const int left = alg.sign(a, b) * alg.sign(a ^ b, c);
          const int right = alg.sign(b, c) * alg.sign(a, b ^ c);
          ok = ok && left == right;
        }
    CHECK(ok);
  }
}

TEST_CASE("multiply examples") {
  auto alg = build_algebra(2);
  auto one = AlgebraElement::scalar(2, 1);
  auto e1 = AlgebraElement::generator(2, 1);
  auto e2 = AlgebraElement::generator(2, 2);
  CHECK(multiply(alg, one + e1, one - e1) == AlgebraElement::scalar(2, 2));
  CHECK(multiply(alg, e1, multiply(alg, e1, e2)) == e2 * GaussRational(-1));

  // x = (3 e1 + 4 e2)/5 and t = (-4 e1 + 3 e2)/5 are orthonormal; (x t)^2 = -1.
  auto x = AlgebraElement::vector(2, {GaussRational(Rational(3, 5)), GaussRational(Rational(4, 5))});
  auto t = AlgebraElement::vector(2, {GaussRational(Rational(-4, 5)), GaussRational(Rational(3, 5))});
  auto xt = multiply(alg, x, t);
  CHECK(multiply(alg, xt, xt) == AlgebraElement::scalar(2, -1));
  CHECK((multiply(alg, x, t) + multiply(alg, t, x)).is_zero());

  CHECK_THROWS_AS(multiply(alg, AlgebraElement::generator(3, 1), e1), Error);
}

TEST_CASE("involution alpha") {
  CHECK(involution_alpha(AlgebraElement::generator(2, 1)) == AlgebraElement::generator(2, 1) * GaussRational(-1));
  auto e12 = AlgebraElement::blade(2, 0b11);
  CHECK(involution_alpha(e12) == e12);
  for (int k = 0; k <= 4; ++k) {
    const int n = 2 * k + 1;
    auto vol = AlgebraElement::volume(n);
    CHECK(involution_alpha(vol) == vol * GaussRational(-1));
  }
  // Algebra automorphism and involution, exhaustively on monomials.
  for (int n = 1; n <= 6; ++n) {
    auto alg = build_algebra(n);
    bool ok = true;
    for (Blade a = 0; a < alg.dimension(); ++a) {
      auto ea = AlgebraElement::blade(n, a);
      ok = ok && involution_alpha(involution_alpha(ea)) == ea;
      for (Blade b = 0; b < alg.dimension(); ++b) {
        auto eb = AlgebraElement::blade(n, b);
        ok = ok && involution_alpha(multiply(alg, ea, eb)) ==
                       multiply(alg, involution_alpha(ea), involution_alpha(eb));
      }
    }
    CHECK(ok);
  }
}

TEST_CASE("representations satisfy the Clifford relation exactly") {
  for (int n = 1; n <= 8; ++n) {
    std::vector<RepKind> kinds;
    if (n % 2 == 0)
      kinds = {RepKind::dirac};
    else
      kinds = {RepKind::pauli, RepKind::cartan};
    for (auto kind : kinds) {
      auto rep = build_rep(n, kind);
      const auto id = Matrix<GaussRational>::identity(rep.dim());
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          auto expected = i == j ? id * GaussRational(-2) : Matrix<GaussRational>(rep.dim(), rep.dim());
          REQUIRE(anticommutator(rep.gamma(i), rep.gamma(j)) == expected);
        }
      // Entries lie in {0, +-1, +-i}, and gamma^* = -gamma.
      for (int i = 0; i < n; ++i) CHECK(rep.gamma(i).adjoint() == rep.gamma(i) * GaussRational(-1));
    }
  }
}

TEST_CASE("build_rep examples and errors") {
  auto d2 = build_rep(2, RepKind::dirac);
  CHECK(d2.dim() == 2);
  auto p3 = build_rep(3, RepKind::pauli);
  CHECK(p3.dim() == 2);
  const GaussRational c = pauli_volume_scalar(p3);
  CHECK(c * c == GaussRational(1));
  auto c3 = build_rep(3, RepKind::cartan);
  CHECK(c3.dim() == 4);
  CHECK(represented_span_dimension(c3) == 8);
  // Cartan gammas are diag(gamma_i, -gamma_i).
  for (int a = 0; a < 3; ++a)
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t s = 0; s < 2; ++s) {
        CHECK(c3.gamma(a)(r, s) == p3.gamma(a)(r, s));
        CHECK(c3.gamma(a)(r + 2, s + 2) == -p3.gamma(a)(r, s));
        CHECK(c3.gamma(a)(r, s + 2).is_zero());
      }
  CHECK_THROWS_AS(build_rep(3, RepKind::dirac), Error);
  CHECK_THROWS_AS(build_rep(4, RepKind::pauli), Error);
  CHECK_THROWS_AS(build_rep(4, RepKind::cartan), Error);
  try {
    build_rep(2, RepKind::cartan);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::representation_kind);
  }
}

TEST_CASE("represent is an algebra homomorphism") {
  for (int n = 1; n <= 5; ++n) {
    auto alg = build_algebra(n);
    auto rep = build_rep(n, n % 2 == 0 ? RepKind::dirac : RepKind::cartan);
    CHECK(represent(rep, AlgebraElement::scalar(n, 1)) == Matrix<GaussRational>::identity(rep.dim()));
    auto e1 = AlgebraElement::generator(n, 1);
    CHECK(represent(rep, multiply(alg, e1, e1)) == Matrix<GaussRational>::identity(rep.dim()) * GaussRational(-1));
    bool ok = true;
    for (Blade a = 0; a < alg.dimension(); ++a)
      for (Blade b = 0; b < alg.dimension(); ++b) {
        auto ea = AlgebraElement::blade(n, a);
        auto eb = AlgebraElement::blade(n, b);
        ok = ok && represent(rep, multiply(alg, ea, eb)) == represent(rep, ea) * represent(rep, eb);
      }
    CHECK(ok);
  }
  auto rep = build_rep(3, RepKind::pauli);
  CHECK_THROWS_AS(represent(rep, AlgebraElement::generator(2, 1)), Error);
}

TEST_CASE("Pauli representation of the odd volume is scalar") {
  auto rep = build_rep(3, RepKind::pauli);
  auto g = rep.gamma(0) * rep.gamma(1) * rep.gamma(2);
  const GaussRational c = g(0, 0);
  CHECK(g == Matrix<GaussRational>::identity(2) * c);
  CHECK(represent(rep, AlgebraElement::volume(3)) == g);
}

TEST_CASE("span dimensions: Dirac full matrix algebra, Cartan two blocks") {
  for (int n : {2, 4, 6, 8}) CHECK(represented_span_dimension(build_rep(n, RepKind::dirac)) == (std::size_t{1} << n));
  for (int n : {1, 3, 5, 7})
    CHECK(represented_span_dimension(build_rep(n, RepKind::cartan)) == 2 * (std::size_t{1} << (n - 1)));
  // Pauli is not faithful: the volume acts as a scalar.
  CHECK(represented_span_dimension(build_rep(3, RepKind::pauli)) == 4);
}

TEST_CASE("volume element") {
  SUBCASE("n=3 cartan: eigenvalues +c, -c with multiplicity 2") {
    auto rep = build_rep(3, RepKind::cartan);
    auto s = volume_splitting(rep);
    CHECK(s.plus_dim == 2);
    CHECK(s.minus_dim == 2);
    CHECK(s.commutes_with_generators);
    CHECK(s.subspaces_invariant);
    const auto vol = volume_element(rep);
    CHECK(vol * s.plus_projector == s.plus_projector * s.eigenvalue);
    CHECK(vol * s.minus_projector == s.minus_projector * (-s.eigenvalue));
  }
  SUBCASE("odd n cartan splitting dimensions") {
    for (int n : {1, 3, 5, 7}) {
      auto s = volume_splitting(build_rep(n, RepKind::cartan));
      CHECK(s.plus_dim == (std::size_t{1} << ((n - 1) / 2)));
      CHECK(s.minus_dim == s.plus_dim);
      CHECK(s.subspaces_invariant);
      CHECK(s.commutes_with_generators);
    }
  }
  SUBCASE("n=2 dirac: volume anticommutes with gamma_1") {
    auto rep = build_rep(2, RepKind::dirac);
    auto vol = volume_element(rep);
    CHECK(anticommutator(vol, rep.gamma(0)).is_zero());
  }
}

TEST_CASE("representation JSON") {
  auto j = to_json(build_rep(2, RepKind::dirac));
  CHECK(j["n"] == 2);
  CHECK(j["kind"] == "dirac");
  CHECK(j["dim"] == 2);
  CHECK(j["gammas"].size() == 2);
  CHECK(j["gammas"][0].size() == 4);
}
