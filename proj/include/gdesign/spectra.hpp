#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <vector>

#include "gdesign/certificate.hpp"
#include "gdesign/graph.hpp"
#include "gdesign/rational.hpp"

namespace gdesign {

/// Pinned numeric tolerances. Family-specific tests are exact; these guard
/// the float cross-checks only.
inline constexpr double kFloatAveragingTol = 1e-8;
inline constexpr double kSpectrumMatchTol = 1e-9;
inline constexpr double kCharFloatTol = 1e-9;
inline constexpr double kRadonTol = 1e-6;
inline constexpr double kEigenClusterTol = 1e-7;
inline constexpr int kDenseLimit = 2048;

enum class MatrixSource { laplacian, adjacency };

struct SpectrumSketch {
  struct Entry {
    Rational value;
    int multiplicity;
  };
  MatrixSource source = MatrixSource::laplacian;
  std::vector<Entry> entries;  // strictly increasing values

  void validate(int n) const;
};

/// Exact (D - A) v over any ring scalar.
template <typename Scalar>
std::vector<Scalar> laplacian_apply(const Graph& g, const std::vector<Scalar>& v) {
  if (static_cast<int>(v.size()) != g.vertex_count())
    throw std::invalid_argument("laplacian_apply: dimension mismatch");
  std::vector<Scalar> out(v.size());
  for (int u = 0; u < g.vertex_count(); ++u) {
    Scalar acc = v[u] * Scalar(g.degree(u));
    for (int w : g.neighbors(u)) acc -= v[w];
    out[u] = acc;
  }
  return out;
}

template <typename Scalar>
std::vector<Scalar> adjacency_apply(const Graph& g, const std::vector<Scalar>& v) {
  if (static_cast<int>(v.size()) != g.vertex_count())
    throw std::invalid_argument("adjacency_apply: dimension mismatch");
  std::vector<Scalar> out(v.size(), Scalar(0));
  for (int u = 0; u < g.vertex_count(); ++u) {
    Scalar acc = Scalar(0);
    for (int w : g.neighbors(u)) acc += v[w];
    out[u] = acc;
  }
  return out;
}

/// Float form of the design definition: the mean of phi over D matches the
/// global mean within tol.
bool averages(const Graph& g, const Eigen::VectorXd& phi, const std::vector<int>& design,
              double tol);

/// Exact zero-sum test for eigenvectors orthogonal to the all-ones vector.
template <typename Scalar>
bool averages_sum_zero(const std::vector<Scalar>& phi, const std::vector<int>& design) {
  Scalar acc = Scalar(0);
  for (int v : design) acc += phi.at(v);
  return acc == Scalar(0);
}

Eigen::MatrixXd adjacency_matrix(const Graph& g);
Eigen::MatrixXd laplacian_matrix(const Graph& g);

struct DenseSpectrum {
  MatrixSource source;
  Eigen::VectorXd eigenvalues;  // ascending
  Eigen::MatrixXd vectors;      // orthonormal columns, canonical basis
  /// Maximal runs of eigenvalues closer than tol: [begin, end) column ranges.
  std::vector<std::pair<int, int>> clusters(double tol = kEigenClusterTol) const;
};

/**
 * Full symmetric eigendecomposition with a reproducible basis: within each
 * eigenvalue cluster the basis is rebuilt by Gram-Schmidt over projected
 * standard basis vectors taken in index order, each sign-fixed so its first
 * nonzero entry is positive.
 */
DenseSpectrum dense_spectrum(const Graph& g, MatrixSource source = MatrixSource::laplacian,
                             int dense_limit = kDenseLimit);

/// max_j |phi_j . (1_D/|D| - 1/n)| over the columns in [begin, end).
double averaging_residual(const DenseSpectrum& spec, int begin, int end,
                          const std::vector<int>& design);

/// Exact Lagrange interpolation projector onto eigenspace `ell` of the
/// sketch, applied to v. Requires pairwise distinct sketch eigenvalues.
std::vector<Rational> lagrange_eigenspace_project(const Graph& g, const SpectrumSketch& sketch,
                                                  int ell, const std::vector<Rational>& v);

/// Verdict: 1_D projects to zero in every eigenspace listed in S.
Certificate is_design_by_projectors(const Graph& g, const SpectrumSketch& sketch,
                                    const std::vector<int>& S, const std::vector<int>& design);

/// Checks the sketch against the dense numeric spectrum.
bool sketch_matches_graph(const Graph& g, const SpectrumSketch& sketch,
                          double tol = kSpectrumMatchTol);

}  // namespace gdesign
