#include "gdesign/johnson.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "gdesign/rational.hpp"

namespace gdesign::johnson {

namespace {

void check_nk(int n, int k) {
  if (n < 1 || k < 0 || k > n) throw std::invalid_argument("johnson: need 0 <= k <= n");
}

std::vector<int> complement_set(const std::vector<int>& subset, int n) {
  std::vector<int> out;
  out.reserve(n - subset.size());
  size_t j = 0;
  for (int e = 1; e <= n; ++e) {
    if (j < subset.size() && subset[j] == e)
      ++j;
    else
      out.push_back(e);
  }
  return out;
}

int shared_elements(const std::vector<int>& a, const std::vector<int>& b) {
  int count = 0;
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) ++count, ++i, ++j;
    else if (a[i] < b[j]) ++i;
    else ++j;
  }
  return count;
}

bool contains_all(const std::vector<int>& s, const std::vector<int>& t) {
  return shared_elements(s, t) == static_cast<int>(t.size());
}

/// Exact projector zero test against a prebuilt graph/sketch; entry index in
/// the sketch equals t because lambda_t is strictly increasing.
bool projections_vanish(const Graph& g, const SpectrumSketch& sketch,
                        const std::vector<int>& design, const std::vector<int>& ts) {
  std::vector<Rational> indicator(g.vertex_count(), Rational(0));
  for (int v : design) indicator.at(v) = Rational(1);
  for (int t : ts) {
    auto w = lagrange_eigenspace_project(g, sketch, t, indicator);
    for (const auto& x : w)
      if (!x.is_zero()) return false;
  }
  return true;
}

}  // namespace

long long colex_rank(const std::vector<int>& subset) {
  long long rank = 0;
  for (size_t i = 0; i < subset.size(); ++i) {
    if (i > 0 && subset[i] <= subset[i - 1])
      throw std::invalid_argument("colex_rank: subset must be strictly increasing");
    if (subset[i] < 1) throw std::invalid_argument("colex_rank: elements are 1-based");
    rank += binomial_ll(subset[i] - 1, static_cast<int>(i) + 1);
  }
  return rank;
}

std::vector<int> colex_unrank(long long rank, int n, int k) {
  check_nk(n, k);
  if (rank < 0 || rank >= binomial_ll(n, k)) throw std::invalid_argument("colex_unrank: rank out of range");
  std::vector<int> subset(k);
  for (int i = k; i >= 1; --i) {
    int e = i;  // largest e with C(e-1, i) <= rank
    while (binomial_ll(e, i) <= rank) ++e;
    subset[i - 1] = e;
    rank -= binomial_ll(e - 1, i);
  }
  return subset;
}

std::vector<std::vector<int>> all_ksubsets(int n, int k) {
  check_nk(n, k);
  long long total = binomial_ll(n, k);
  std::vector<std::vector<int>> out;
  out.reserve(total);
  for (long long r = 0; r < total; ++r) out.push_back(colex_unrank(r, n, k));
  return out;
}

std::string subset_to_string(const std::vector<int>& subset) {
  std::ostringstream os;
  for (size_t i = 0; i < subset.size(); ++i) os << (i ? "," : "") << subset[i];
  return os.str();
}

std::vector<int> parse_subset(const std::string& text, int n, int k) {
  std::vector<int> subset;
  std::istringstream is(text);
  std::string part;
  while (std::getline(is, part, ',')) subset.push_back(std::stoi(part));
  if (static_cast<int>(subset.size()) != k)
    throw std::invalid_argument("parse_subset: expected " + std::to_string(k) + " elements");
  for (size_t i = 0; i < subset.size(); ++i) {
    if (subset[i] < 1 || subset[i] > n) throw std::invalid_argument("parse_subset: element out of range");
    if (i > 0 && subset[i] <= subset[i - 1])
      throw std::invalid_argument("parse_subset: elements must increase");
  }
  return subset;
}

Graph build_johnson(int n, int k, long long vertex_limit) {
  check_nk(n, k);
  if (k > n - k) k = n - k;
  long long total = binomial_ll(n, k);
  if (total > vertex_limit) throw std::invalid_argument("build_johnson: size limit exceeded");
  auto subsets = all_ksubsets(n, k);
  std::vector<std::pair<int, int>> edges;
  for (long long i = 0; i < total; ++i)
    for (long long j = i + 1; j < total; ++j)
      if (shared_elements(subsets[i], subsets[j]) == k - 1)
        edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return Graph(static_cast<int>(total), edges, JohnsonFamily{n, k});
}

JohnsonSpectrum johnson_spectrum(int n, int k) {
  check_nk(n, k);
  if (k > n - k) k = n - k;
  JohnsonSpectrum spec;
  spec.n = n;
  spec.k = k;
  for (int t = 0; t <= k; ++t) {
    long long lambda = static_cast<long long>(t) * (n + 1 - t);
    long long mu = binomial_ll(n, t) - (t > 0 ? binomial_ll(n, t - 1) : 0);
    spec.entries.push_back({t, lambda, mu});
  }
  return spec;
}

SpectrumSketch JohnsonSpectrum::to_sketch() const {
  SpectrumSketch sketch;
  sketch.source = MatrixSource::laplacian;
  for (const auto& e : entries)
    sketch.entries.push_back({Rational(e.lambda), static_cast<int>(e.mu)});
  return sketch;
}

long long eberlein_e1(int n, int k, int t) {
  if (t < 0 || t > k) throw std::invalid_argument("eberlein_e1: t outside 0..k");
  return static_cast<long long>(k - t) * (n - k - t) - t;
}

Certificate is_phi_design_johnson(int n, int k, const std::vector<int>& design,
                                  const std::vector<int>& S) {
  check_nk(n, k);
  if (design.empty()) throw std::invalid_argument("is_phi_design_johnson: empty design");
  int kk = std::min(k, n - k);
  for (int t : S)
    if (t < 1 || t > kk) throw std::invalid_argument("is_phi_design_johnson: eigenspace outside 1..min(k,n-k)");

  std::ostringstream sel;
  sel << "johnson n=" << n << " k=" << k << " phi-eigenspaces [";
  std::vector<int> ts(S);
  std::sort(ts.begin(), ts.end());
  for (size_t i = 0; i < ts.size(); ++i) sel << (i ? "," : "") << ts[i];
  sel << "] design-size " << design.size();
  Certificate cert(sel.str());

  std::vector<int> d(design);
  if (k > n - k) {
    long long total = binomial_ll(n, k);
    for (int& v : d) {
      if (v < 0 || v >= total) throw std::invalid_argument("is_phi_design_johnson: vertex out of range");
      v = static_cast<int>(colex_rank(complement_set(colex_unrank(v, n, k), n)));
    }
    std::sort(d.begin(), d.end());
    cert.add_fact("vertex-relabeling", "complemented to johnson " + std::to_string(n) + " " +
                                           std::to_string(kk));
  }

  Graph g = build_johnson(n, kk);
  SpectrumSketch sketch = johnson_spectrum(n, kk).to_sketch();
  std::vector<Rational> indicator(g.vertex_count(), Rational(0));
  for (int v : d) {
    if (v < 0 || v >= g.vertex_count())
      throw std::invalid_argument("is_phi_design_johnson: vertex out of range");
    indicator[v] = Rational(1);
  }

  bool ok = true;
  for (int t : ts) {
    auto w = lagrange_eigenspace_project(g, sketch, t, indicator);
    bool zero = std::all_of(w.begin(), w.end(), [](const Rational& x) { return x.is_zero(); });
    std::ostringstream name;
    name << "t-" << t << " (lambda " << sketch.entries[t].value << ")";
    cert.add_residual(name.str(), zero ? "exact-zero" : "nonzero");
    if (!zero && ok) {
      ok = false;
      cert.set_counterexample("projection onto eigenspace t=" + std::to_string(t) +
                              " of 1_D is nonzero");
    }
  }
  cert.set_verdict(ok);
  return cert;
}

bool phi_design_johnson_bool(int n, int k, const std::vector<int>& design,
                             const std::vector<int>& S) {
  return is_phi_design_johnson(n, k, design, S).verdict();
}

std::pair<bool, std::optional<long long>> block_design_check(int n, int k,
                                                             const std::vector<int>& design,
                                                             int t) {
  check_nk(n, k);
  if (t < 0 || t > k) throw std::invalid_argument("block_design_check: t outside 0..k");
  auto blocks = all_ksubsets(n, k);
  for (int v : design)
    if (v < 0 || v >= static_cast<int>(blocks.size()))
      throw std::invalid_argument("block_design_check: vertex out of range");
  auto tsets = all_ksubsets(n, t);
  std::optional<long long> lambda;
  for (const auto& T : tsets) {
    long long count = 0;
    for (int v : design)
      if (contains_all(blocks[v], T)) ++count;
    if (!lambda) lambda = count;
    if (count != *lambda) return {false, std::nullopt};
  }
  return {true, lambda};
}

EquivalenceReport johnson_equivalence(int n, int k, int t, long long budget) {
  check_nk(n, k);
  if (k > n / 2) throw std::invalid_argument("johnson_equivalence: need k <= n/2");
  if (t < 1 || t > k) throw std::invalid_argument("johnson_equivalence: t outside 1..k");
  long long total = binomial_ll(n, k);
  if (total > 62) throw std::invalid_argument("johnson_equivalence: universe too large");
  long long subsets = (1LL << total) - 1;
  if (subsets > budget)
    throw BudgetExceeded("johnson_equivalence: " + std::to_string(subsets) + " subsets exceed budget");

  Graph g = build_johnson(n, k);
  SpectrumSketch sketch = johnson_spectrum(n, k).to_sketch();
  DenseSpectrum dense = dense_spectrum(g);
  // columns [1, end) hold the eigenspaces lambda_1..lambda_t
  int end = 0;
  for (int i = 0; i <= t; ++i) end += sketch.entries[i].multiplicity;

  std::vector<int> ts(t);
  std::iota(ts.begin(), ts.end(), 1);
  EquivalenceReport report;
  std::vector<int> design;
  design.reserve(total);
  for (long long mask = 1; mask <= subsets; ++mask) {
    design.clear();
    for (int v = 0; v < total; ++v)
      if (mask & (1LL << v)) design.push_back(v);
    bool comb = block_design_check(n, k, design, t).first;
    bool exact = projections_vanish(g, sketch, design, ts);
    bool flt = averaging_residual(dense, 1, end, design) < kFloatAveragingTol;
    if (comb != exact || exact != flt) {
      std::ostringstream os;
      os << "disagreement at subset {";
      auto blocks = all_ksubsets(n, k);
      for (size_t i = 0; i < design.size(); ++i)
        os << (i ? " " : "") << subset_to_string(blocks[design[i]]);
      os << "}: block-design=" << comb << " projector=" << exact << " float=" << flt;
      report.discrepancy = os.str();
      report.subsets_checked = mask;
      return report;
    }
  }
  report.ok = true;
  report.subsets_checked = subsets;
  return report;
}

std::vector<int> star(int n, int k, const std::vector<int>& T) {
  check_nk(n, k);
  if (static_cast<int>(T.size()) > k) throw std::invalid_argument("star: |T| must be <= k");
  for (size_t i = 0; i < T.size(); ++i) {
    if (T[i] < 1 || T[i] > n) throw std::invalid_argument("star: element out of range");
    if (i > 0 && T[i] <= T[i - 1]) throw std::invalid_argument("star: T must increase");
  }
  auto blocks = all_ksubsets(n, k);
  std::vector<int> out;
  for (size_t r = 0; r < blocks.size(); ++r)
    if (contains_all(blocks[r], T)) out.push_back(static_cast<int>(r));
  return out;
}

Eigen::MatrixXi incidence_b(int n, int k, int t) {
  check_nk(n, k);
  if (t < 0 || t > k) throw std::invalid_argument("incidence_b: t outside 0..k");
  auto rows = all_ksubsets(n, k);
  auto cols = all_ksubsets(n, t);
  Eigen::MatrixXi b(rows.size(), cols.size());
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j) b(i, j) = contains_all(rows[i], cols[j]) ? 1 : 0;
  return b;
}

MinimalReport minimal_reverse_enumeration_johnson(int n, int k, long long budget) {
  check_nk(n, k);
  if (k > n / 2 || k < 2)
    throw std::invalid_argument("minimal_reverse_enumeration_johnson: need 2 <= k <= n/2");
  long long total = binomial_ll(n, k);
  if (total > 62)
    throw std::invalid_argument("minimal_reverse_enumeration_johnson: universe too large");
  long long subsets = (1LL << total) - 1;
  if (subsets > budget) throw BudgetExceeded("minimal_reverse_enumeration_johnson: budget exceeded");

  Graph g = build_johnson(n, k);
  SpectrumSketch sketch = johnson_spectrum(n, k).to_sketch();
  std::vector<int> tail(k - 1);
  std::iota(tail.begin(), tail.end(), 2);

  std::vector<long long> design_masks;
  std::vector<int> design;
  for (long long mask = 1; mask <= subsets; ++mask) {
    design.clear();
    for (int v = 0; v < total; ++v)
      if (mask & (1LL << v)) design.push_back(v);
    if (projections_vanish(g, sketch, design, tail)) design_masks.push_back(mask);
  }

  MinimalReport report;
  report.designs_found = static_cast<long long>(design_masks.size());
  std::vector<long long> minimal_masks;
  for (long long m : design_masks) {
    bool minimal = true;
    for (long long other : design_masks)
      if (other != m && (other & m) == other) {
        minimal = false;
        break;
      }
    if (minimal) minimal_masks.push_back(m);
  }

  long long full = subsets;  // all-ones mask
  std::vector<long long> expected;
  for (int i = 1; i <= n; ++i) {
    long long mask = 0;
    for (int v : star(n, k, {i})) mask |= 1LL << v;
    expected.push_back(mask);
    expected.push_back(full ^ mask);
  }
  std::sort(expected.begin(), expected.end());
  expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
  std::sort(minimal_masks.begin(), minimal_masks.end());

  report.ok = minimal_masks == expected;
  if (!report.ok) report.detail = "minimal designs differ from stars and star complements";

  report.union_closure = true;
  for (long long m : design_masks) {
    long long covered = 0;
    for (long long mm : minimal_masks)
      if ((mm & m) == mm) covered |= mm;
    if (covered != m) {
      report.union_closure = false;
      report.detail = "design found that is not a union of minimal designs";
      break;
    }
  }
  report.ok = report.ok && report.union_closure;

  for (long long m : minimal_masks) {
    std::vector<int> set;
    for (int v = 0; v < total; ++v)
      if (m & (1LL << v)) set.push_back(v);
    report.minimal_designs.push_back(std::move(set));
  }
  return report;
}

}  // namespace gdesign::johnson
