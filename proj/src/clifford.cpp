// Copyright cartan-spinors contributors.
// SPDX-License-Identifier: Apache-2.0

#include "cartan/clifford.hpp"

#include <sstream>

namespace cartan {

int blade_product_sign(Blade a, Blade b) {
  // Moving each factor of b leftwards past the larger factors of a.
  int swaps = 0;
  for (Blade rest = b; rest != 0; rest &= rest - 1) {
    const Blade low = rest & (~rest + 1);
    const Blade above = a & ~((low << 1) - 1);
    swaps += blade_grade(above);
  }
  swaps += blade_grade(a & b);  // e_i e_i = -1
  return (swaps & 1) ? -1 : 1;
}

CliffordAlgebra::CliffordAlgebra(int n) : n_(n) {
  if (n < 1 || n > max_generators)
    throw Error(ErrorCode::size, "Clifford algebra generator count must be in [1, 12], got " + std::to_string(n));
  const std::size_t dim = dimension();
  signs_.resize(dim * dim);
  for (Blade a = 0; a < dim; ++a)
    for (Blade b = 0; b < dim; ++b)
      signs_[(static_cast<std::size_t>(a) << n_) | b] = static_cast<std::int8_t>(blade_product_sign(a, b));
}

CliffordAlgebra build_algebra(int n) { return CliffordAlgebra(n); }

AlgebraElement AlgebraElement::scalar(int n, const GaussRational& c) { return blade(n, 0, c); }

AlgebraElement AlgebraElement::blade(int n, Blade b, const GaussRational& c) {
  AlgebraElement out(n);
  out.add_term(b, c);
  return out;
}

AlgebraElement AlgebraElement::generator(int n, int i) {
  if (i < 1 || i > n) throw Error(ErrorCode::dimension_mismatch, "generator index out of range");
  return blade(n, Blade{1} << (i - 1));
}

AlgebraElement AlgebraElement::vector(int n, const std::vector<GaussRational>& v) {
  if (static_cast<int>(v.size()) != n) throw Error(ErrorCode::dimension_mismatch, "vector length differs from n");
  AlgebraElement out(n);
  for (int i = 0; i < n; ++i) out.add_term(Blade{1} << i, v[static_cast<std::size_t>(i)]);
  return out;
}

AlgebraElement AlgebraElement::volume(int n) { return blade(n, (Blade{1} << n) - 1); }

GaussRational AlgebraElement::coefficient(Blade b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? GaussRational() : it->second;
}

void AlgebraElement::add_term(Blade b, const GaussRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(b, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& rhs) {
  if (rhs.n_ != n_) throw Error(ErrorCode::algebra_mismatch, "adding elements of different Clifford algebras");
  for (const auto& [b, c] : rhs.terms_) add_term(b, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& rhs) {
  if (rhs.n_ != n_) throw Error(ErrorCode::algebra_mismatch, "subtracting elements of different Clifford algebras");
  for (const auto& [b, c] : rhs.terms_) add_term(b, -c);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const GaussRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [b, v] : terms_) v *= c;
  return *this;
}

std::string AlgebraElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [b, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c << ")";
    if (b == 0) continue;
    os << "e";
    for (int i = 0; i < n_; ++i)
      if (b & (Blade{1} << i)) os << "_" << (i + 1);
  }
  return os.str();
}

AlgebraElement multiply(const CliffordAlgebra& algebra, const AlgebraElement& a, const AlgebraElement& b) {
  if (a.n() != algebra.n() || b.n() != algebra.n())
    throw Error(ErrorCode::algebra_mismatch, "multiply: operands belong to different Clifford algebras");
  AlgebraElement out(algebra.n());
  for (const auto& [ba, ca] : a.terms())
    for (const auto& [bb, cb] : b.terms()) {
      GaussRational c = ca * cb;
      if (algebra.sign(ba, bb) < 0) c = -c;
      out.add_term(ba ^ bb, c);
    }
  return out;
}

AlgebraElement involution_alpha(const AlgebraElement& a) {
  AlgebraElement out(a.n());
  for (const auto& [b, c] : a.terms()) out.add_term(b, (blade_grade(b) & 1) ? -c : c);
  return out;
}

const char* to_string(RepKind kind) {
  switch (kind) {
    case RepKind::dirac: return "dirac";
    case RepKind::pauli: return "pauli";
    case RepKind::cartan: return "cartan";
  }
  return "?";
}

RepKind parse_rep_kind(const std::string& s) {
  if (s == "dirac") return RepKind::dirac;
  if (s == "pauli") return RepKind::pauli;
  if (s == "cartan") return RepKind::cartan;
  throw Error(ErrorCode::representation_kind, "unknown representation kind '" + s + "'");
}

SignedPermutation SignedPermutation::identity(std::size_t dim) {
  SignedPermutation p;
  p.source.resize(dim);
  p.phase.assign(dim, 0);
  for (std::size_t i = 0; i < dim; ++i) p.source[i] = static_cast<int>(i);
  return p;
}

Matrix<GaussRational> SignedPermutation::to_matrix() const {
  Matrix<GaussRational> m(dim(), dim());
  for (std::size_t r = 0; r < dim(); ++r)
    m(r, static_cast<std::size_t>(source[r])) = times_i_power(GaussRational(1), phase[r]);
  return m;
}

SignedPermutation compose(const SignedPermutation& a, const SignedPermutation& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::dimension_mismatch, "composing actions of different sizes");
  SignedPermutation out;
  out.source.resize(a.dim());
  out.phase.resize(a.dim());
  for (std::size_t r = 0; r < a.dim(); ++r) {
    const auto s = static_cast<std::size_t>(a.source[r]);
    out.source[r] = b.source[s];
    out.phase[r] = (a.phase[r] + b.phase[s]) & 3;
  }
  return out;
}

namespace {

// 2x2 seeds multiplied by i: i*sigma1, i*sigma2, i*sigma3, and sigma3, Id.
SignedPermutation seed(int which) {
  SignedPermutation p;
  switch (which) {
    case 1: p.source = {1, 0}; p.phase = {1, 1}; break;  // i sigma1 = [[0, i], [i, 0]]
    case 2: p.source = {1, 0}; p.phase = {0, 2}; break;  // i sigma2 = [[0, 1], [-1, 0]]
    case 3: p.source = {0, 1}; p.phase = {1, 3}; break;  // i sigma3 = [[i, 0], [0, -i]]
    case 4: p.source = {0, 1}; p.phase = {0, 2}; break;  // sigma3
    default: p = SignedPermutation::identity(2); break;
  }
  return p;
}

SignedPermutation kron(const SignedPermutation& a, const SignedPermutation& b) {
  SignedPermutation out;
  const std::size_t db = b.dim();
  out.source.resize(a.dim() * db);
  out.phase.resize(a.dim() * db);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < db; ++j) {
      out.source[i * db + j] = a.source[i] * static_cast<int>(db) + b.source[j];
      out.phase[i * db + j] = (a.phase[i] + b.phase[j]) & 3;
    }
  return out;
}

SignedPermutation scalar_i(std::size_t dim) {
  SignedPermutation p = SignedPermutation::identity(dim);
  p.phase.assign(dim, 1);
  return p;
}

// Irreducible gammas for N generators on 2^{floor(N/2)} dimensions.
std::vector<SignedPermutation> irreducible_gammas(int generators) {
  const int pairs = generators / 2;
  std::vector<SignedPermutation> out;
  auto tensor = [&](int j, int middle) {
    // sigma3^{j} (x) middle (x) Id^{pairs-j-1}, with the overall factor i
    // carried by the middle seed.
    SignedPermutation m = SignedPermutation::identity(1);
    for (int t = 0; t < j; ++t) m = kron(m, seed(4));
    m = kron(m, seed(middle));
    for (int t = j + 1; t < pairs; ++t) m = kron(m, seed(0));
    return m;
  };
  for (int j = 0; j < pairs; ++j) {
    out.push_back(tensor(j, 1));
    out.push_back(tensor(j, 2));
  }
  if (generators % 2 == 1) {
    SignedPermutation m = SignedPermutation::identity(1);
    for (int t = 0; t < pairs; ++t) m = kron(m, seed(4));
    out.push_back(compose(scalar_i(m.dim()), m));
  }
  return out;
}

}  // namespace

MatrixRep::MatrixRep(int n, RepKind kind, std::vector<SignedPermutation> gammas)
    : n_(n), kind_(kind), dim_(gammas.empty() ? 0 : gammas.front().dim()), gammas_(std::move(gammas)) {
  for (const auto& g : gammas_) {
    dense_.push_back(g.to_matrix());
    numeric_.push_back(dense_.back().to_eigen());
  }
}

SignedPermutation MatrixRep::blade_action(Blade b) const {
  SignedPermutation out = SignedPermutation::identity(dim_);
  for (int a = 0; a < n_; ++a)
    if (b & (Blade{1} << a)) out = compose(out, gammas_[static_cast<std::size_t>(a)]);
  return out;
}

MatrixRep build_rep(int n, RepKind kind) {
  if (n < 1 || n > CliffordAlgebra::max_generators)
    throw Error(ErrorCode::size, "representation generator count must be in [1, 12], got " + std::to_string(n));
  const bool even = n % 2 == 0;
  if (kind == RepKind::dirac && !even)
    throw Error(ErrorCode::representation_kind, "the Dirac representation needs an even n, got " + std::to_string(n));
  if ((kind == RepKind::pauli || kind == RepKind::cartan) && even)
    throw Error(ErrorCode::representation_kind,
                std::string("the ") + to_string(kind) + " representation needs an odd n, got " + std::to_string(n));
  auto gammas = irreducible_gammas(n);
  if (kind == RepKind::cartan) {
    // diag(gamma(e_i), gamma(alpha(e_i))) = diag(gamma_i, -gamma_i)
    SignedPermutation block_sign;
    block_sign.source = {0, 1};
    block_sign.phase = {0, 2};
    for (auto& g : gammas) g = kron(block_sign, g);
  }
  return MatrixRep(n, kind, std::move(gammas));
}

Matrix<GaussRational> represent(const MatrixRep& rep, const AlgebraElement& a) {
  if (a.n() != rep.n())
    throw Error(ErrorCode::dimension_mismatch, "represent: element has " + std::to_string(a.n()) +
                                                   " generators, representation has " + std::to_string(rep.n()));
  Matrix<GaussRational> out(rep.dim(), rep.dim());
  for (const auto& [b, c] : a.terms()) {
    const SignedPermutation p = rep.blade_action(b);
    for (std::size_t r = 0; r < rep.dim(); ++r)
      out(r, static_cast<std::size_t>(p.source[r])) += times_i_power(c, p.phase[r]);
  }
  return out;
}

Matrix<GaussRational> volume_element(const MatrixRep& rep) {
  return rep.blade_action((Blade{1} << rep.n()) - 1).to_matrix();
}

std::size_t represented_span_dimension(const MatrixRep& rep) {
  const std::size_t count = std::size_t{1} << rep.n();
  const std::size_t d2 = rep.dim() * rep.dim();
  Matrix<GaussRational> stack(count, d2);
  for (Blade b = 0; b < count; ++b) {
    const SignedPermutation p = rep.blade_action(b);
    for (std::size_t r = 0; r < rep.dim(); ++r)
      stack(b, r * rep.dim() + static_cast<std::size_t>(p.source[r])) = times_i_power(GaussRational(1), p.phase[r]);
  }
  return rank(stack);
}

GaussRational pauli_volume_scalar(const MatrixRep& rep) {
  if (rep.n() % 2 == 0 || rep.kind() != RepKind::pauli)
    throw Error(ErrorCode::representation_kind, "volume scalar is defined for Pauli representations only");
  const auto vol = volume_element(rep);
  const GaussRational c = vol(0, 0);
  if (!(vol == Matrix<GaussRational>::identity(rep.dim()) * c))
    throw Error(ErrorCode::numeric, "odd volume element is not scalar in the Pauli representation");
  return c;
}

VolumeSplitting volume_splitting(const MatrixRep& rep) {
  if (rep.n() % 2 == 0)
    throw Error(ErrorCode::representation_kind, "volume splitting needs an odd generator count");
  VolumeSplitting s;
  const auto vol = volume_element(rep);
  s.eigenvalue = vol(0, 0);
  const auto id = Matrix<GaussRational>::identity(rep.dim());
  const GaussRational half = GaussRational(Rational(1, 2));
  const auto scaled = vol * (GaussRational(1) / s.eigenvalue);
  s.plus_projector = (id + scaled) * half;
  s.minus_projector = (id - scaled) * half;
  s.plus_dim = rank(s.plus_projector);
  s.minus_dim = rank(s.minus_projector);
  s.commutes_with_generators = true;
  s.subspaces_invariant = true;
  for (int a = 0; a < rep.n(); ++a) {
    const auto& g = rep.gamma(a);
    if (!(vol * g - g * vol).is_zero()) s.commutes_with_generators = false;
    if (!(s.minus_projector * g * s.plus_projector).is_zero() || !(s.plus_projector * g * s.minus_projector).is_zero())
      s.subspaces_invariant = false;
  }
  return s;
}

nlohmann::ordered_json to_json(const MatrixRep& rep) {
  nlohmann::ordered_json j;
  j["n"] = rep.n();
  j["kind"] = to_string(rep.kind());
  j["dim"] = rep.dim();
  auto gammas = nlohmann::ordered_json::array();
  for (int a = 0; a < rep.n(); ++a) {
    auto entries = nlohmann::ordered_json::array();
    const auto& g = rep.gamma(a);
    for (std::size_t r = 0; r < g.rows(); ++r)
      for (std::size_t c = 0; c < g.cols(); ++c) {
        const auto z = g(r, c).to_complex();
        entries.push_back({z.real(), z.imag()});
      }
    gammas.push_back(std::move(entries));
  }
  j["gammas"] = std::move(gammas);
  return j;
}

}  // namespace cartan
