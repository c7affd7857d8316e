// Copyright cartan-spinors contributors.
// SPDX-License-Identifier: Apache-2.0

#include "cartan/dirac_spectrum.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include <Eigen/Eigenvalues>

namespace cartan {

namespace {

// Eigenvalues are printed at 1e-9 resolution; -0 is folded into 0.
double tidy(double v) {
  const double r = std::round(v * 1e9) / 1e9;
  return r == 0.0 ? 0.0 : r;
}

constexpr double exact_eigenvector_tol = 1e-9;

}  // namespace

const char* to_string(KillingSign s) { return s == KillingSign::minus ? "minus" : "plus"; }

nlohmann::ordered_json to_json(const KillingReport& r) {
  nlohmann::ordered_json j;
  j["lambda"] = r.lambda;
  j["residual"] = r.residual;
  j["dirac_eigenvalue"] = tidy(r.dirac_eigenvalue);
  j["dirac_residual"] = r.dirac_residual;
  j["rp_plus_residual"] = r.rp_plus_residual;
  j["rp_minus_residual"] = r.rp_minus_residual;
  j["curvature_consistency"] = r.curvature_consistency;
  j["field_norm"] = r.field_norm;
  j["killing"] = r.killing;
  return j;
}

std::vector<PolySpinorField<GaussRational>> monogenic_kernel(int ambient_dim, int k) {
  if (k < 0) throw Error(ErrorCode::degree_bound, "monogenic degree must be non-negative");
  const int n = ambient_dim - 1;
  const MatrixRep rep = spinor_module_rep(n);
  const std::size_t dim = rep.dim();
  const auto src = monomials_of_degree(ambient_dim, k);
  const auto dst = k > 0 ? monomials_of_degree(ambient_dim, k - 1) : std::vector<Monomial>{};
  std::map<std::pair<Monomial, std::size_t>, std::size_t> row_of;
  for (std::size_t i = 0; i < dst.size(); ++i)
    for (std::size_t c = 0; c < dim; ++c) row_of.emplace(std::make_pair(dst[i], c), i * dim + c);

  std::vector<PolySpinorField<GaussRational>> columns;
  Matrix<GaussRational> a(dst.size() * dim, src.size() * dim);
  for (std::size_t j = 0; j < src.size(); ++j)
    for (std::size_t c = 0; c < dim; ++c) {
      PolySpinorField<GaussRational> p(n, dim);
      p.component(c) = ExactPolynomial::monomial(ambient_dim, src[j], GaussRational(1));
      const auto d = ambient_dirac(rep, p);
      const std::size_t col = j * dim + c;
      for (std::size_t r = 0; r < dim; ++r)
        for (const auto& [mono, v] : d.component(r).terms()) a(row_of.at({mono, r}), col) = v;
      columns.push_back(std::move(p));
    }
  const auto ker = kernel(a);
  std::vector<PolySpinorField<GaussRational>> out;
  for (std::size_t q = 0; q < ker.cols(); ++q) {
    PolySpinorField<GaussRational> f(n, dim);
    for (std::size_t col = 0; col < columns.size(); ++col)
      if (!ker(col, q).is_zero()) f += columns[col] * ker(col, q);
    out.push_back(std::move(f));
  }
  return out;
}

std::size_t SpectrumTable::multiplicity(double lambda) const {
  std::size_t total = 0;
  for (const auto& e : entries)
    if (!e.truncated && std::abs(e.eigenvalue - lambda) <= cluster_tolerance) total += e.multiplicity;
  return total;
}

bool SpectrumTable::has_truncated() const {
  return std::any_of(entries.begin(), entries.end(), [](const SpectrumEntry& e) { return e.truncated; });
}

nlohmann::ordered_json to_json(const SpectrumTable& t) {
  nlohmann::ordered_json j;
  j["space"] = to_string(t.selector);
  j["n"] = t.n;
  j["m"] = t.m;
  j["mode"] = to_string(t.mode);
  j["cluster_tolerance"] = t.cluster_tolerance;
  j["basis_dim"] = t.basis_dim;
  j["closure_residual"] = t.closure_residual;
  j["max_imag"] = t.max_imag;
  j["hermitian_defect"] = t.hermitian_defect;
  j["charpoly"] = {{"checked", t.charpoly_checked}, {"ok", t.charpoly_ok}};
  auto entries = nlohmann::ordered_json::array();
  for (const auto& e : t.entries) {
    nlohmann::ordered_json row;
    row["eigenvalue"] = tidy(e.eigenvalue);
    row["multiplicity"] = e.multiplicity;
    row["truncated"] = e.truncated;
    entries.push_back(std::move(row));
  }
  j["entries"] = std::move(entries);
  return j;
}

std::string render_text(const SpectrumTable& t) {
  std::ostringstream os;
  os << "Dirac spectrum on " << to_string(t.selector) << ", n=" << t.n << ", m=" << t.m << ", mode=" << to_string(t.mode)
     << ", basis dim " << t.basis_dim << "\n";
  char buf[96];
  std::snprintf(buf, sizeof buf, "%14s  %12s  %s\n", "eigenvalue", "multiplicity", "");
  os << buf;
  for (const auto& e : t.entries) {
    std::snprintf(buf, sizeof buf, "%14.9f  %12zu  %s\n", tidy(e.eigenvalue), e.multiplicity, e.truncated ? "truncated" : "");
    os << buf;
  }
  std::snprintf(buf, sizeof buf, "closure residual %.3e, max imaginary part %.3e\n", t.closure_residual, t.max_imag);
  os << buf;
  if (t.has_truncated()) os << "truncated rows leave degree " << t.m << "; raise --m to resolve them\n";
  if (t.charpoly_checked) os << "exact characteristic polynomial check: " << (t.charpoly_ok ? "ok" : "FAILED") << "\n";
  return os.str();
}

EigenAnalysis analyze_compressed(const Eigen::MatrixXcd& gram, const Eigen::MatrixXcd& pairing,
                                 const Eigen::MatrixXcd& basis_coords, const Eigen::MatrixXcd& image_coords,
                                 const Eigen::MatrixXcd& ambient_gram, double cluster_tol) {
  EigenAnalysis out;
  const Eigen::MatrixXcd b = 0.5 * (gram + gram.adjoint());
  const Eigen::MatrixXcd a = 0.5 * (pairing + pairing.adjoint());
  Eigen::LLT<Eigen::MatrixXcd> llt(b);
  if (llt.info() != Eigen::Success) throw Error(ErrorCode::numeric, "Gram matrix of the section basis is not positive definite");
  const auto l = llt.matrixL();
  const Eigen::MatrixXcd la = l.solve(a);
  const Eigen::MatrixXcd h = l.solve(Eigen::MatrixXcd(la.adjoint()));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (h + h.adjoint()));
  if (es.info() != Eigen::Success) throw Error(ErrorCode::numeric, "eigen-solver failed");

  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> ces(b.ldlt().solve(pairing));
  if (ces.info() != Eigen::Success) throw Error(ErrorCode::numeric, "eigen-solver failed");
  for (Eigen::Index i = 0; i < ces.eigenvalues().size(); ++i)
    out.max_imag = std::max(out.max_imag, std::abs(ces.eigenvalues()(i).imag()));

  Eigen::LLT<Eigen::MatrixXcd> amb(0.5 * (ambient_gram + ambient_gram.adjoint()));
  if (amb.info() != Eigen::Success) throw Error(ErrorCode::numeric, "ambient Gram matrix is not positive definite");
  const Eigen::MatrixXcd lu = amb.matrixL().adjoint();

  const Eigen::VectorXd& vals = es.eigenvalues();
  const Eigen::MatrixXcd coeffs = l.adjoint().solve(es.eigenvectors());
  const Eigen::Index total = vals.size();
  Eigen::Index start = 0;
  while (start < total) {
    Eigen::Index end = start + 1;
    while (end < total && vals(end) - vals(end - 1) <= cluster_tol) ++end;
    const Eigen::Index r = end - start;
    const Eigen::MatrixXcd c = coeffs.middleCols(start, r);
    Eigen::MatrixXcd resid = image_coords * c - basis_coords * c * vals.segment(start, r).asDiagonal();
    resid = lu * resid;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(resid);
    const Eigen::VectorXd sv = svd.singularValues();
    std::size_t exact = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
      if (sv(i) <= exact_eigenvector_tol) {
        ++exact;
        out.closure_residual = std::max(out.closure_residual, sv(i));
      }
    const double mean = vals.segment(start, r).mean();
    if (exact > 0) out.entries.push_back({mean, exact, false});
    if (static_cast<std::size_t>(r) > exact) out.entries.push_back({mean, static_cast<std::size_t>(r) - exact, true});
    start = end;
  }
  return out;
}

bool charpoly_confirms(const Matrix<GaussRational>& m, const std::vector<SpectrumEntry>& entries) {
  const auto coeffs = characteristic_polynomial(m);
  std::map<Rational, std::size_t> wanted;
  for (const auto& e : entries)
    if (!e.truncated) wanted[Rational::round_to(e.eigenvalue, 2)] += e.multiplicity;
  for (const auto& [q, mult] : wanted) {
    std::vector<GaussRational> p = coeffs;
    std::size_t found = 0;
    const GaussRational root(q);
    while (p.size() > 1) {
      // Synthetic division by (t - q).
      std::vector<GaussRational> quot(p.size() - 1);
      GaussRational carry;
      for (std::size_t i = p.size(); i-- > 1;) {
        carry = p[i] + carry * root;
        quot[i - 1] = carry;
      }
      const GaussRational rem = p[0] + carry * root;
      if (!rem.is_zero()) break;
      ++found;
      p = std::move(quot);
    }
    if (found < mult) return false;
  }
  return true;
}

SpectrumTable compute_spectrum(int n, BundleSelector selector, int m, Mode mode) {
  const BundleContext ctx(n);
  if (mode == Mode::exact) return spectrum<GaussRational>(ctx, selector, m);
  return spectrum<Complex>(ctx, selector, m);
}

}  // namespace cartan
