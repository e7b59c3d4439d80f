#include "gdesign/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace gdesign {

void SpectrumSketch::validate(int n) const {
  long long total = 0;
  for (size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].multiplicity <= 0)
      throw std::invalid_argument("SpectrumSketch: nonpositive multiplicity");
    if (i > 0 && !(entries[i - 1].value < entries[i].value))
      throw std::invalid_argument("SpectrumSketch: eigenvalues not strictly increasing");
    total += entries[i].multiplicity;
  }
  if (total != n) throw std::invalid_argument("SpectrumSketch: multiplicities do not sum to n");
}

bool averages(const Graph& g, const Eigen::VectorXd& phi, const std::vector<int>& design,
              double tol) {
  if (design.empty()) throw std::invalid_argument("averages: empty design");
  if (phi.size() != g.vertex_count()) throw std::invalid_argument("averages: dimension mismatch");
  double design_mean = 0.0;
  for (int v : design) design_mean += phi(v);
  design_mean /= static_cast<double>(design.size());
  double global_mean = phi.sum() / static_cast<double>(g.vertex_count());
  return std::abs(design_mean - global_mean) <= tol;
}

Eigen::MatrixXd adjacency_matrix(const Graph& g) {
  int n = g.vertex_count();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (int u = 0; u < n; ++u)
    for (int v : g.neighbors(u)) a(u, v) = 1.0;
  return a;
}

Eigen::MatrixXd laplacian_matrix(const Graph& g) {
  int n = g.vertex_count();
  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(n, n);
  for (int u = 0; u < n; ++u) {
    l(u, u) = g.degree(u);
    for (int v : g.neighbors(u)) l(u, v) = -1.0;
  }
  return l;
}

std::vector<std::pair<int, int>> DenseSpectrum::clusters(double tol) const {
  std::vector<std::pair<int, int>> ranges;
  int n = static_cast<int>(eigenvalues.size());
  int begin = 0;
  for (int i = 1; i <= n; ++i) {
    if (i == n || eigenvalues(i) - eigenvalues(i - 1) > tol) {
      ranges.emplace_back(begin, i);
      begin = i;
    }
  }
  return ranges;
}

DenseSpectrum dense_spectrum(const Graph& g, MatrixSource source, int dense_limit) {
  int n = g.vertex_count();
  if (n > dense_limit) throw std::invalid_argument("dense_spectrum: size limit exceeded");
  Eigen::MatrixXd m =
      source == MatrixSource::laplacian ? laplacian_matrix(g) : adjacency_matrix(g);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  if (solver.info() != Eigen::Success) throw std::runtime_error("dense_spectrum: solver failed");

  DenseSpectrum spec{source, solver.eigenvalues(), solver.eigenvectors(), };
  // Rebuild each degenerate cluster deterministically: Gram-Schmidt over the
  // cluster projector applied to standard basis vectors in index order.
  for (auto [begin, end] : spec.clusters()) {
    int dim = end - begin;
    Eigen::MatrixXd block = spec.vectors.middleCols(begin, dim);
    Eigen::MatrixXd proj = block * block.transpose();
    Eigen::MatrixXd canon(n, dim);
    int got = 0;
    for (int k = 0; k < n && got < dim; ++k) {
      Eigen::VectorXd w = proj.col(k);
      for (int j = 0; j < got; ++j) w -= canon.col(j).dot(w) * canon.col(j);
      double norm = w.norm();
      if (norm < 1e-6) continue;
      w /= norm;
      for (int i = 0; i < n; ++i) {
        if (std::abs(w(i)) > 1e-8) {
          if (w(i) < 0) w = -w;
          break;
        }
      }
      canon.col(got++) = w;
    }
    if (got != dim) throw std::runtime_error("dense_spectrum: basis canonicalization failed");
    spec.vectors.middleCols(begin, dim) = canon;
  }
  return spec;
}

double averaging_residual(const DenseSpectrum& spec, int begin, int end,
                          const std::vector<int>& design) {
  if (design.empty()) throw std::invalid_argument("averaging_residual: empty design");
  int n = static_cast<int>(spec.eigenvalues.size());
  Eigen::VectorXd x = Eigen::VectorXd::Constant(n, -1.0 / n);
  for (int v : design) x(v) += 1.0 / static_cast<double>(design.size());
  double worst = 0.0;
  for (int j = begin; j < end; ++j) worst = std::max(worst, std::abs(spec.vectors.col(j).dot(x)));
  return worst;
}

std::vector<Rational> lagrange_eigenspace_project(const Graph& g, const SpectrumSketch& sketch,
                                                  int ell, const std::vector<Rational>& v) {
  sketch.validate(g.vertex_count());
  if (ell < 0 || ell >= static_cast<int>(sketch.entries.size()))
    throw std::invalid_argument("lagrange_eigenspace_project: eigenspace index out of range");
  if (static_cast<int>(v.size()) != g.vertex_count())
    throw std::invalid_argument("lagrange_eigenspace_project: dimension mismatch");
  std::vector<Rational> w = v;
  for (size_t m = 0; m < sketch.entries.size(); ++m) {
    if (static_cast<int>(m) == ell) continue;
    const Rational& theta = sketch.entries[m].value;
    std::vector<Rational> mw = sketch.source == MatrixSource::laplacian ? laplacian_apply(g, w)
                                                                        : adjacency_apply(g, w);
    Rational scale = Rational(1) / (sketch.entries[ell].value - theta);
    for (int i = 0; i < g.vertex_count(); ++i) w[i] = (mw[i] - theta * w[i]) * scale;
  }
  return w;
}

Certificate is_design_by_projectors(const Graph& g, const SpectrumSketch& sketch,
                                    const std::vector<int>& S, const std::vector<int>& design) {
  if (design.empty()) throw std::invalid_argument("is_design_by_projectors: empty design");
  std::ostringstream sel;
  sel << "projector-design eigenspaces [";
  for (size_t i = 0; i < S.size(); ++i) sel << (i ? "," : "") << S[i];
  sel << "] design-size " << design.size();
  Certificate cert(sel.str());
  std::vector<Rational> indicator(g.vertex_count(), Rational(0));
  for (int v : design) indicator.at(v) = Rational(1);
  bool ok = true;
  for (int ell : S) {
    auto w = lagrange_eigenspace_project(g, sketch, ell, indicator);
    bool zero = std::all_of(w.begin(), w.end(), [](const Rational& x) { return x.is_zero(); });
    std::ostringstream name;
    name << "eigenspace-" << ell << " (value " << sketch.entries.at(ell).value << ")";
    cert.add_residual(name.str(), zero ? "exact-zero" : "nonzero");
    if (!zero && ok) {
      ok = false;
      cert.set_counterexample("projection onto eigenspace " + std::to_string(ell) +
                              " of 1_D is nonzero");
    }
  }
  cert.set_verdict(ok);
  return cert;
}

bool sketch_matches_graph(const Graph& g, const SpectrumSketch& sketch, double tol) {
  sketch.validate(g.vertex_count());
  DenseSpectrum spec = dense_spectrum(g, sketch.source);
  int idx = 0;
  for (const auto& entry : sketch.entries) {
    for (int r = 0; r < entry.multiplicity; ++r, ++idx) {
      if (std::abs(spec.eigenvalues(idx) - entry.value.to_double()) > tol) return false;
    }
  }
  return true;
}

}  // namespace gdesign
