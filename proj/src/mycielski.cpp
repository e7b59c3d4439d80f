#include "gdesign/mycielski.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "gdesign/spectra.hpp"

namespace gdesign {

namespace {

// Deterministic kernel basis of a square rational matrix: Gauss-Jordan with
// the first usable row as pivot, free variables set to unit values in index
// order, pivot variables back-substituted from the reduced rows.
std::vector<std::vector<Rational>> rational_kernel_basis(std::vector<std::vector<Rational>> m) {
  const int dim = static_cast<int>(m.size());
  std::vector<int> pivot_row_of_col(dim, -1);
  int rank = 0;
  for (int col = 0; col < dim && rank < dim; ++col) {
    int pr = -1;
    for (int r = rank; r < dim; ++r) {
      if (!m[r][col].is_zero()) {
        pr = r;
        break;
      }
    }
    if (pr < 0) continue;
    std::swap(m[rank], m[pr]);
    const Rational lead = m[rank][col];
    for (int c = col; c < dim; ++c) m[rank][c] /= lead;
    for (int r = 0; r < dim; ++r) {
      if (r == rank || m[r][col].is_zero()) continue;
      const Rational f = m[r][col];
      for (int c = col; c < dim; ++c) m[r][c] -= f * m[rank][c];
    }
    pivot_row_of_col[col] = rank;
    ++rank;
  }
  std::vector<std::vector<Rational>> basis;
  for (int free = 0; free < dim; ++free) {
    if (pivot_row_of_col[free] >= 0) continue;
    std::vector<Rational> v(dim, Rational(0));
    v[free] = Rational(1);
    for (int col = 0; col < dim; ++col) {
      const int pr = pivot_row_of_col[col];
      if (pr >= 0) v[col] = -m[pr][free];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

void check_design_ids(const std::vector<int>& design, int n, const char* who) {
  std::vector<int> sorted = design;
  std::sort(sorted.begin(), sorted.end());
  for (size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] < 0 || sorted[i] >= n)
      throw std::invalid_argument(std::string(who) + ": vertex id out of range");
    if (i > 0 && sorted[i] == sorted[i - 1])
      throw std::invalid_argument(std::string(who) + ": duplicate vertex id");
  }
}

// The two lifted vectors of one base pair, golden variant first.
std::array<std::vector<QuadSurd>, 2> lifted_vectors(const RationalEigenpair& bp, int n) {
  const auto [phi, phibar] = golden_ratio();
  std::array<std::vector<QuadSurd>, 2> out;
  for (int variant = 0; variant < 2; ++variant) {
    const QuadSurd& shadow_scale = variant == 0 ? phibar : phi;
    std::vector<QuadSurd> w(2 * n + 1, QuadSurd(0));
    for (int i = 0; i < n; ++i) {
      const QuadSurd xi(bp.vector[i], Rational(0));
      w[i] = xi;
      w[n + i] = -(shadow_scale * xi);
    }
    out[variant] = std::move(w);
  }
  return out;
}

void validate_base_pair(const Graph& g, const RationalEigenpair& bp, const char* who) {
  const int n = g.vertex_count();
  if (static_cast<int>(bp.vector.size()) != n)
    throw std::invalid_argument(std::string(who) + ": base vector has wrong dimension");
  bool nonzero = false;
  Rational sum(0);
  for (const Rational& x : bp.vector) {
    if (!x.is_zero()) nonzero = true;
    sum += x;
  }
  if (!nonzero) throw std::invalid_argument(std::string(who) + ": base vector is zero");
  if (!sum.is_zero())
    throw std::invalid_argument(std::string(who) + ": base vector entries must sum to zero");
  const auto image = adjacency_apply<Rational>(g, bp.vector);
  for (int i = 0; i < n; ++i)
    if (image[i] != bp.eigenvalue * bp.vector[i])
      throw std::invalid_argument(std::string(who) + ": not an exact adjacency eigenpair");
}

// Cluster index whose eigenvalues contain the given value, or -1.
int cluster_of_value(const DenseSpectrum& spec, const std::vector<std::pair<int, int>>& clusters,
                     double value, double tol) {
  for (size_t k = 0; k < clusters.size(); ++k)
    for (int j = clusters[k].first; j < clusters[k].second; ++j)
      if (std::abs(spec.eigenvalues(j) - value) < tol) return static_cast<int>(k);
  return -1;
}

}  // namespace

MycielskiGraph mycielskian(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 2 || g.edge_count() == 0)
    throw std::invalid_argument("mycielskian: base needs at least one edge");
  if (!g.is_connected()) throw std::invalid_argument("mycielskian: base must be connected");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(3 * g.edge_count() + n);
  for (const auto& [i, j] : g.edges()) {
    edges.emplace_back(i, j);
    edges.emplace_back(i, n + j);
    edges.emplace_back(j, n + i);
  }
  const int u = 2 * n;
  for (int j = 0; j < n; ++j) edges.emplace_back(u, n + j);
  Graph lifted(2 * n + 1, edges, MycielskianFamily{n});
  return MycielskiGraph{g, std::move(lifted), u};
}

std::vector<RationalEigenpair> integer_adjacency_eigenpairs(const Graph& g) {
  const int n = g.vertex_count();
  int maxdeg = 0;
  for (int v = 0; v < n; ++v) maxdeg = std::max(maxdeg, g.degree(v));
  std::vector<RationalEigenpair> out;
  for (int t = -maxdeg; t <= maxdeg; ++t) {
    std::vector<std::vector<Rational>> shifted(n, std::vector<Rational>(n, Rational(0)));
    for (int v = 0; v < n; ++v) {
      for (int w : g.neighbors(v)) shifted[v][w] = Rational(1);
      shifted[v][v] -= Rational(t);
    }
    for (auto& vec : rational_kernel_basis(std::move(shifted))) {
      RationalEigenpair pair{Rational(t), std::move(vec)};
      const auto image = adjacency_apply<Rational>(g, pair.vector);
      for (int i = 0; i < n; ++i)
        if (image[i] != pair.eigenvalue * pair.vector[i])
          throw std::logic_error("integer_adjacency_eigenpairs: kernel vector fails A v = t v");
      out.push_back(std::move(pair));
    }
  }
  return out;
}

std::vector<LiftedEigenpair> lift_eigenpairs(const Graph& g,
                                             const std::vector<RationalEigenpair>& base_pairs) {
  if (!g.regular_degree())
    throw std::invalid_argument("lift_eigenpairs: base graph must be regular");
  const int n = g.vertex_count();
  const MycielskiGraph m = mycielskian(g);
  const auto [phi, phibar] = golden_ratio();
  std::vector<LiftedEigenpair> out;
  out.reserve(2 * base_pairs.size());
  for (const auto& bp : base_pairs) {
    validate_base_pair(g, bp, "lift_eigenpairs");
    auto vectors = lifted_vectors(bp, n);
    for (int variant = 0; variant < 2; ++variant) {
      LiftedEigenpair lp;
      lp.base_eigenvalue = bp.eigenvalue;
      lp.golden = variant == 0;
      lp.eigenvalue = (variant == 0 ? phi : phibar) * QuadSurd(bp.eigenvalue, Rational(0));
      lp.vector = std::move(vectors[variant]);
      const auto image = adjacency_apply<QuadSurd>(m.graph, lp.vector);
      QuadSurd ones_dot(0);
      for (int j = 0; j < 2 * n + 1; ++j) {
        if (image[j] != lp.eigenvalue * lp.vector[j])
          throw std::logic_error("lift_eigenpairs: lifted vector fails A w = lambda w");
        ones_dot += lp.vector[j];
      }
      if (!lp.vector[m.u_index].is_zero())
        throw std::logic_error("lift_eigenpairs: lifted vector nonzero at the central vertex");
      if (!ones_dot.is_zero())
        throw std::logic_error("lift_eigenpairs: lifted vector not orthogonal to all-ones");
      out.push_back(std::move(lp));
    }
  }
  return out;
}

std::array<long long, 4> cubic_coefficients(int n, int d) {
  return {1, -static_cast<long long>(d), -(static_cast<long long>(n) + 1LL * d * d),
          1LL * d * n};
}

std::string cubic_to_string(int n, int d) {
  const auto c = cubic_coefficients(n, d);
  std::string s = "t^3";
  const char* suffixes[] = {"t^2", "t", ""};
  for (int k = 1; k <= 3; ++k) {
    const long long coeff = c[k];
    s += coeff < 0 ? " - " : " + ";
    const long long mag = coeff < 0 ? -coeff : coeff;
    if (mag != 1 || k == 3) s += std::to_string(mag);
    s += suffixes[k - 1];
  }
  return s;
}

std::array<double, 3> cubic_roots(int n, int d) {
  const auto c = cubic_coefficients(n, d);
  Eigen::Matrix3d companion = Eigen::Matrix3d::Zero();
  companion(1, 0) = 1.0;
  companion(2, 1) = 1.0;
  companion(0, 2) = -static_cast<double>(c[3]);
  companion(1, 2) = -static_cast<double>(c[2]);
  companion(2, 2) = -static_cast<double>(c[1]);
  const Eigen::EigenSolver<Eigen::Matrix3d> solver(companion);
  std::array<double, 3> roots{};
  for (int i = 0; i < 3; ++i) {
    const auto root = solver.eigenvalues()(i);
    if (std::abs(root.imag()) > 1e-7)
      throw std::logic_error("cubic_roots: complex root for a real symmetric spectrum");
    roots[i] = root.real();
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

Certificate central_vertex_check(const Graph& g) {
  const auto deg = g.regular_degree();
  if (!deg) throw std::invalid_argument("central_vertex_check: base graph must be regular");
  const int n = g.vertex_count();
  const int d = *deg;
  const MycielskiGraph m = mycielskian(g);
  const int expected = 2 * n - 2;

  Certificate cert("mycielskian central-vertex base-n=" + std::to_string(n) +
                   " degree=" + std::to_string(d));
  cert.add_fact("vertices", std::to_string(2 * n + 1));
  cert.add_fact("expected-vanishing", std::to_string(expected));
  cert.add_fact("exceptional-cubic", cubic_to_string(n, d));
  const auto roots = cubic_roots(n, d);
  {
    std::ostringstream os;
    for (int i = 0; i < 3; ++i)
      os << (i ? ", " : "") << format_double(roots[i]);
    cert.add_fact("exceptional-eigenvalues", os.str());
  }

  const DenseSpectrum spec = dense_spectrum(m.graph, MatrixSource::adjacency);
  const auto clusters = spec.clusters();
  const std::vector<int> central = {m.u_index};
  // Per eigenvalue cluster of dimension m, the eigenvectors vanishing at u
  // form a subspace of dimension m-1 (the u-row of the cluster is nonzero) or
  // m; being basis-independent this is the honest reading of the count.
  int vanishing = 0;
  int averaged = 0;
  std::vector<int> deficient;     // clusters with a direction not vanishing at u
  std::vector<int> not_averaged;  // clusters {u} fails to average entirely
  for (size_t k = 0; k < clusters.size(); ++k) {
    const auto [b, e] = clusters[k];
    const double u_row = spec.vectors.row(m.u_index).segment(b, e - b).norm();
    if (u_row < kFloatAveragingTol) {
      vanishing += e - b;
    } else {
      vanishing += e - b - 1;
      deficient.push_back(static_cast<int>(k));
    }
    const double res = averaging_residual(spec, b, e, central);
    if (res < kFloatAveragingTol) {
      averaged += e - b;
      std::ostringstream label;
      label << "eigenvalue ~" << format_double(spec.eigenvalues(b)) << " dim " << (e - b);
      cert.add_residual(label.str(), format_double(res));
    } else {
      averaged += e - b - 1;
      not_averaged.push_back(static_cast<int>(k));
    }
  }
  cert.add_fact("vanishing-at-u", std::to_string(vanishing));
  cert.add_fact("averaged-eigenvectors", std::to_string(averaged));

  // Every cubic root must sit in a deficient cluster, the deficiency must be
  // exactly the three roots, and any cluster {u} fails to average must be one
  // of the deficient ones (for irregular Mycielskians all three roots fail;
  // M(K_2) is regular and its constant Perron vector is still averaged).
  bool roots_matched = deficient.size() == 3;
  for (const double r : roots) {
    const int k = cluster_of_value(spec, clusters, r, 1e-6);
    if (k < 0 || std::find(deficient.begin(), deficient.end(), k) == deficient.end())
      roots_matched = false;
  }
  for (const int k : not_averaged)
    if (std::find(deficient.begin(), deficient.end(), k) == deficient.end()) roots_matched = false;

  const auto pairs = integer_adjacency_eigenpairs(g);
  bool exact_ok = true;
  if (static_cast<int>(pairs.size()) == n) {
    std::vector<RationalEigenpair> nontrivial;
    for (const auto& p : pairs)
      if (p.eigenvalue != Rational(d)) nontrivial.push_back(p);
    const auto lifted = lift_eigenpairs(g, nontrivial);  // throws if any identity fails
    exact_ok = static_cast<int>(lifted.size()) == expected;
    cert.add_fact("exact-lift", "verified in Q[sqrt 5] (" + std::to_string(lifted.size()) +
                                    " eigenvectors vanish at the central vertex)");
  } else {
    cert.add_fact("exact-lift", "float only (base spectrum not wholly integral)");
  }

  const bool verdict = vanishing == expected && averaged >= expected && roots_matched && exact_ok;
  cert.set_verdict(verdict);
  if (!verdict)
    cert.set_counterexample(std::to_string(vanishing) + " of " + std::to_string(2 * n + 1) +
                            " eigenvectors vanish at u (wanted " + std::to_string(expected) +
                            "), averages " + std::to_string(averaged));
  return cert;
}

RestrictionVerdicts restrict_design(const MycielskiGraph& m, const std::vector<int>& design,
                                    const RationalEigenpair& base_pair) {
  const int n = m.base.vertex_count();
  check_design_ids(design, 2 * n + 1, "restrict_design");
  if (design.empty()) throw std::invalid_argument("restrict_design: empty design");
  validate_base_pair(m.base, base_pair, "restrict_design");

  const auto vectors = lifted_vectors(base_pair, n);
  for (const auto& w : vectors) {
    QuadSurd sum(0);
    for (int v : design) sum += w[v];
    if (!sum.is_zero())
      throw std::invalid_argument(
          "restrict_design: design does not average both lifted eigenvectors of the base pair");
  }

  RestrictionVerdicts verdicts;
  Rational base_sum(0), shadow_sum(0);
  bool any = false;
  for (int v : design) {
    if (v < n) {
      base_sum += base_pair.vector[v];
      any = true;
    } else if (v < 2 * n) {
      shadow_sum += base_pair.vector[v - n];
      any = true;
    }
  }
  verdicts.base_copy = base_sum.is_zero();
  verdicts.shadow_copy = shadow_sum.is_zero();
  verdicts.vacuous = !any;
  return verdicts;
}

MycielskiAuditReport design_size_audit(const Graph& g, long long budget) {
  const auto deg = g.regular_degree();
  if (!deg) throw std::invalid_argument("design_size_audit: base graph must be regular");
  const int n = g.vertex_count();
  const int big = 2 * n + 1;
  if (big > 13)
    throw std::invalid_argument("design_size_audit: needs 2n+1 <= 13 vertices for exhaustion");
  const auto pairs = integer_adjacency_eigenpairs(g);
  if (static_cast<int>(pairs.size()) != n)
    throw std::invalid_argument(
        "design_size_audit: base spectrum not wholly integral; exact lifted pairs unavailable");
  std::vector<RationalEigenpair> nontrivial;
  for (const auto& p : pairs)
    if (p.eigenvalue != Rational(*deg)) nontrivial.push_back(p);
  if (static_cast<int>(nontrivial.size()) != n - 1)
    throw std::logic_error("design_size_audit: trivial eigenspace is not one-dimensional");

  const auto lifted = lift_eigenpairs(g, nontrivial);
  const int pair_count = static_cast<int>(lifted.size());
  const MycielskiGraph m = mycielskian(g);

  const long long total = (1LL << big) - 1;
  if (total > budget)
    throw BudgetExceeded("design_size_audit: " + std::to_string(total) + " subsets exceed budget");

  // Per-vertex contributions: exact surds plus unit-normalized float copies.
  std::vector<std::vector<QuadSurd>> contrib(pair_count);
  std::vector<std::vector<double>> fcontrib(pair_count);
  for (int k = 0; k < pair_count; ++k) {
    contrib[k] = lifted[k].vector;
    double norm = 0;
    for (const QuadSurd& x : lifted[k].vector) norm += x.to_double() * x.to_double();
    norm = std::sqrt(norm);
    for (const QuadSurd& x : lifted[k].vector) fcontrib[k].push_back(x.to_double() / norm);
  }

  MycielskiAuditReport report;
  std::vector<long long> design_masks;
  std::vector<QuadSurd> qsum(pair_count, QuadSurd(0));
  std::vector<double> fsum(pair_count, 0.0);
  std::vector<int> members;
  long long mask = 0;
  bool agree = true;

  const std::function<void(int)> sweep = [&](int from) {
    for (int v = from; v < big; ++v) {
      for (int k = 0; k < pair_count; ++k) {
        qsum[k] += contrib[k][v];
        fsum[k] += fcontrib[k][v];
      }
      members.push_back(v);
      mask |= 1LL << v;
      ++report.subsets_checked;

      bool exact_design = true;
      for (int k = 0; exact_design && k < pair_count; ++k) exact_design = qsum[k].is_zero();
      bool float_design = true;
      const double scale = static_cast<double>(members.size());
      for (int k = 0; float_design && k < pair_count; ++k)
        float_design = std::abs(fsum[k]) / scale < kFloatAveragingTol;
      if (exact_design != float_design) agree = false;
      if (exact_design) design_masks.push_back(mask);

      sweep(v + 1);

      for (int k = 0; k < pair_count; ++k) {
        qsum[k] -= contrib[k][v];
        fsum[k] -= fcontrib[k][v];
      }
      members.pop_back();
      mask &= ~(1LL << v);
    }
  };
  sweep(0);

  report.designs_found = static_cast<int>(design_masks.size());
  report.exact_float_agree = agree;
  const long long central_mask = 1LL << m.u_index;
  report.smallest_other = 0;
  report.size_bound_ok = true;
  for (const long long dm : design_masks) {
    if (dm == central_mask) {
      report.central_found = true;
      continue;
    }
    const int size = __builtin_popcountll(dm);
    if (report.smallest_other == 0 || size < report.smallest_other)
      report.smallest_other = size;
    if (size < n) report.size_bound_ok = false;
  }

  // Designs that also average the three cubic-root eigenvalue clusters must
  // be the full vertex set. When a root shares a cluster with lifted values
  // (M(K_2) is the one such base here) the whole-cluster residual is the
  // right test anyway: averaging the cluster means averaging the root's
  // eigenspace on top of lifted directions the design already averages.
  const DenseSpectrum spec = dense_spectrum(m.graph, MatrixSource::adjacency);
  const auto clusters = spec.clusters();
  std::vector<std::pair<int, int>> root_clusters;
  for (const double r : cubic_roots(n, *deg)) {
    const int k = cluster_of_value(spec, clusters, r, 1e-6);
    if (k < 0) throw std::logic_error("design_size_audit: cubic root missing from spectrum");
    if (std::find(root_clusters.begin(), root_clusters.end(), clusters[k]) == root_clusters.end())
      root_clusters.push_back(clusters[k]);
  }
  report.beyond_full_only = true;
  const long long full_mask = (1LL << big) - 1;
  for (const long long dm : design_masks) {
    std::vector<int> design;
    for (int v = 0; v < big; ++v)
      if (dm & (1LL << v)) design.push_back(v);
    bool beyond = true;
    for (const auto& [b, e] : root_clusters)
      if (averaging_residual(spec, b, e, design) >= kFloatAveragingTol) beyond = false;
    if (beyond && dm != full_mask) report.beyond_full_only = false;
  }

  report.ok = report.central_found && report.size_bound_ok && report.beyond_full_only &&
              report.exact_float_agree && report.designs_found > 0;
  std::ostringstream os;
  os << "designs=" << report.designs_found << " central=" << (report.central_found ? "yes" : "no")
     << " smallest-other=" << report.smallest_other << " base-n=" << n
     << " subsets=" << report.subsets_checked
     << " exact-agree=" << (report.exact_float_agree ? "yes" : "no")
     << " beyond-full-only=" << (report.beyond_full_only ? "yes" : "no");
  report.detail = os.str();
  return report;
}

namespace {

// Maps each root to its eigenvalue cluster; roots must be irrational
// (nonintegral) and land in pairwise distinct clusters.
std::vector<std::pair<int, int>> conjugate_clusters(const DenseSpectrum& spec,
                                                    const std::vector<double>& roots) {
  if (roots.size() < 2)
    throw std::invalid_argument("conjugate closure: need the full conjugate root list");
  const auto clusters = spec.clusters();
  std::vector<int> indices;
  for (const double r : roots) {
    if (std::abs(r - std::llround(r)) < 1e-6)
      throw std::invalid_argument(
          "conjugate closure: rational eigenvalue; use the exact path instead");
    const int k = cluster_of_value(spec, clusters, r, 1e-6);
    if (k < 0)
      throw std::invalid_argument("conjugate closure: value is not an adjacency eigenvalue");
    if (std::find(indices.begin(), indices.end(), k) != indices.end())
      throw std::invalid_argument("conjugate closure: roots share an eigenvalue cluster");
    indices.push_back(k);
  }
  std::vector<std::pair<int, int>> out;
  for (int k : indices) out.push_back(clusters[k]);
  return out;
}

}  // namespace

bool conjugate_closure_check(const Graph& g, double alpha, const std::vector<double>& conjugates,
                             const std::vector<int>& design, double tol) {
  check_design_ids(design, g.vertex_count(), "conjugate_closure_check");
  if (design.empty()) throw std::invalid_argument("conjugate_closure_check: empty design");
  std::vector<double> roots = {alpha};
  roots.insert(roots.end(), conjugates.begin(), conjugates.end());
  const DenseSpectrum spec = dense_spectrum(g, MatrixSource::adjacency);
  const auto clusters = conjugate_clusters(spec, roots);
  if (averaging_residual(spec, clusters[0].first, clusters[0].second, design) >= tol)
    return true;  // does not average alpha's eigenspace: implication is vacuous
  for (size_t k = 1; k < clusters.size(); ++k)
    if (averaging_residual(spec, clusters[k].first, clusters[k].second, design) >= tol)
      return false;
  return true;
}

ConjugateClosureReport conjugate_closure_audit(const Graph& g, const std::vector<double>& roots,
                                               long long budget) {
  const int n = g.vertex_count();
  const long long total = (1LL << n) - 1;
  if (total > budget)
    throw BudgetExceeded("conjugate_closure_audit: " + std::to_string(total) +
                         " subsets exceed budget");
  const DenseSpectrum spec = dense_spectrum(g, MatrixSource::adjacency);
  const auto clusters = conjugate_clusters(spec, roots);

  ConjugateClosureReport report;
  for (long long mask = 1; mask <= total; ++mask) {
    std::vector<int> design;
    for (int v = 0; v < n; ++v)
      if (mask & (1LL << v)) design.push_back(v);
    ++report.subsets_checked;
    if (averaging_residual(spec, clusters[0].first, clusters[0].second, design) >=
        kFloatAveragingTol)
      continue;
    ++report.first_averagers;
    for (size_t k = 1; k < clusters.size(); ++k)
      if (averaging_residual(spec, clusters[k].first, clusters[k].second, design) >=
          kFloatAveragingTol) {
        ++report.violations;
        break;
      }
  }
  report.ok = report.violations == 0 && report.first_averagers > 0;
  std::ostringstream os;
  os << "subsets=" << report.subsets_checked << " first-averagers=" << report.first_averagers
     << " violations=" << report.violations;
  report.detail = os.str();
  return report;
}

bool spectrum_completeness_check(const Graph& g, double tol) {
  const auto deg = g.regular_degree();
  if (!deg) throw std::invalid_argument("spectrum_completeness_check: base must be regular");
  if (!g.is_connected())
    throw std::invalid_argument("spectrum_completeness_check: base must be connected");
  const int n = g.vertex_count();
  const int d = *deg;

  const DenseSpectrum base = dense_spectrum(g, MatrixSource::adjacency);
  if (std::abs(base.eigenvalues(n - 1) - d) > tol)
    throw std::logic_error("spectrum_completeness_check: top base eigenvalue is not the degree");

  const double sqrt5 = std::sqrt(5.0);
  const double phi = (1.0 + sqrt5) / 2.0;
  const double phibar = (1.0 - sqrt5) / 2.0;
  std::vector<double> assembled;
  for (int i = 0; i + 1 < n; ++i) {
    assembled.push_back(phi * base.eigenvalues(i));
    assembled.push_back(phibar * base.eigenvalues(i));
  }
  for (const double r : cubic_roots(n, d)) assembled.push_back(r);
  std::sort(assembled.begin(), assembled.end());

  const MycielskiGraph m = mycielskian(g);
  const DenseSpectrum dense = dense_spectrum(m.graph, MatrixSource::adjacency);
  for (int j = 0; j < 2 * n + 1; ++j)
    if (std::abs(assembled[j] - dense.eigenvalues(j)) > tol) return false;
  return true;
}

}  // namespace gdesign
