#include "gdesign/search.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "gdesign/hamming.hpp"
#include "gdesign/johnson.hpp"
#include "gdesign/spectra.hpp"

namespace gdesign {

using hamming::build_hamming;
using hamming::is_phi_design;
using hamming::phi_design_bool;
using hamming::random_walk_design_bool;
using hamming::random_walk_extremal_check;
using hamming::word_dot;
using hamming::word_weight;
using johnson::build_johnson;
using johnson::is_phi_design_johnson;
using johnson::phi_design_johnson_bool;

namespace {

std::vector<int> normalized_subset(std::vector<int> subset, int universe, const char* who) {
  if (subset.empty()) throw std::invalid_argument(std::string(who) + ": empty subset");
  std::sort(subset.begin(), subset.end());
  for (size_t i = 0; i < subset.size(); ++i) {
    if (subset[i] < 0 || subset[i] >= universe)
      throw std::invalid_argument(std::string(who) + ": vertex id out of range");
    if (i > 0 && subset[i] == subset[i - 1])
      throw std::invalid_argument(std::string(who) + ": duplicate vertex id");
  }
  return subset;
}

std::string subset_text(const std::vector<int>& subset) {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < subset.size(); ++i) os << (i ? "," : "") << subset[i];
  os << "}";
  return os.str();
}

struct RootOutcome {
  std::vector<std::vector<int>> found;
  long long nodes = 0;
  bool complete = true;
};

// Depth-first over the size-`target` supersets of `members` using vertices
// >= next, lexicographic, with tester pruning and a per-root node quota.
void extend(SubsetTester& tester, int target, long long quota, std::vector<int>& members, int next,
            RootOutcome& out) {
  if (static_cast<int>(members.size()) == target) {
    if (tester.test(members)) out.found.push_back(members);
    return;
  }
  const int n = tester.universe();
  const int need = target - static_cast<int>(members.size());
  for (int v = next; v <= n - need; ++v) {
    if (!out.complete) return;
    if (out.nodes >= quota) {
      out.complete = false;
      return;
    }
    ++out.nodes;
    tester.push(v);
    members.push_back(v);
    if (!(tester.incremental() && tester.unreachable(need - 1)))
      extend(tester, target, quota, members, v + 1, out);
    members.pop_back();
    tester.pop(v);
  }
}

void process_root(SubsetTester& tester, int root, int target, long long quota, RootOutcome& out) {
  if (quota < 1) {
    out.complete = false;
    return;
  }
  ++out.nodes;
  tester.push(root);
  std::vector<int> members = {root};
  if (!(tester.incremental() && tester.unreachable(target - 1)))
    extend(tester, target, quota, members, root + 1, out);
  tester.pop(root);
}

struct SizeOutcome {
  std::vector<std::vector<int>> found;
  long long nodes = 0;
  bool complete = true;
};

// Enumerates all subsets of one size. The node quota is per first-vertex
// subtree and workers own disjoint root sets, so the outcome (including node
// counts) is identical for every worker count.
SizeOutcome run_size(const SubsetTester& proto, int target, long long quota_per_root,
                     int workers) {
  SizeOutcome outcome;
  const int n = proto.universe();
  const int roots = n - target + 1;
  if (roots <= 0) return outcome;  // no subsets of this size: vacuously complete

  std::vector<RootOutcome> per_root(roots);
  auto work = [&](int offset, int stride) {
    const std::unique_ptr<SubsetTester> tester = proto.clone();
    for (int r = offset; r < roots; r += stride)
      process_root(*tester, r, target, quota_per_root, per_root[r]);
  };
  const int pool_size = std::max(1, std::min(workers, roots));
  if (pool_size == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (int w = 1; w < pool_size; ++w) pool.emplace_back(work, w, pool_size);
    work(0, pool_size);
    for (std::thread& t : pool) t.join();
  }

  for (const RootOutcome& r : per_root) {
    outcome.found.insert(outcome.found.end(), r.found.begin(), r.found.end());
    outcome.nodes += r.nodes;
    outcome.complete = outcome.complete && r.complete;
  }
  return outcome;
}

void validate_problem(const SearchProblem& problem, int max_size) {
  if (problem.tester == nullptr) throw std::invalid_argument("search: missing tester");
  if (problem.budget <= 0) throw std::invalid_argument("search: budget must be positive");
  if (max_size < 1) throw std::invalid_argument("search: max_size must be at least 1");
  if (problem.hints.modulus < 1) throw std::invalid_argument("search: modulus must be >= 1");
  if (problem.hints.greater_than < 0)
    throw std::invalid_argument("search: size lower bound must be >= 0");
  if (problem.workers < 1) throw std::invalid_argument("search: workers must be >= 1");
}

bool hint_skips(const SizeHints& hints, int size) {
  return size % hints.modulus != 0 || size <= hints.greater_than;
}

// Seeds verified by the main tester, grouped by size, deduplicated.
std::map<int, std::vector<std::vector<int>>> verified_seeds(const SearchProblem& problem) {
  std::map<int, std::vector<std::vector<int>>> by_size;
  for (const auto& seed : problem.seeds) {
    auto s = normalized_subset(seed, problem.tester->universe(), "search seed");
    if (!problem.tester->test(s))
      throw std::invalid_argument("search: seed " + subset_text(s) + " fails the tester");
    by_size[static_cast<int>(s.size())].push_back(std::move(s));
  }
  for (auto& [size, list] : by_size) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  return by_size;
}

void attach_certificates(SearchResult& result, SubsetTester& tester) {
  for (const auto& design : result.found) {
    const auto second = tester.cross_check(design);
    if (second.has_value() && !*second)
      throw std::logic_error("search: independent cross-check rejects found design " +
                             subset_text(design));
    result.certificates.push_back(tester.certify(design));
  }
}

}  // namespace

Certificate SubsetTester::certify(const std::vector<int>& subset) {
  Certificate cert(name());
  cert.add_fact("size", std::to_string(subset.size()));
  cert.add_fact("members", subset_text(subset));
  cert.set_verdict(test(subset));
  return cert;
}

SearchResult search_smallest(const SearchProblem& problem, int max_size) {
  validate_problem(problem, max_size);
  SubsetTester& tester = *problem.tester;
  const auto seeds = verified_seeds(problem);

  SearchResult result;
  long long remaining = problem.budget;
  bool below_covered = true;  // every size seen so far skipped or enumerated empty
  std::ostringstream story;

  for (int size = 1; size <= max_size; ++size) {
    if (hint_skips(problem.hints, size)) {
      if (seeds.count(size))
        throw std::logic_error("search: sound size hint contradicted by a verified seed of size " +
                               std::to_string(size));
      result.sizes_skipped.push_back(size);
      continue;
    }

    SizeOutcome outcome;
    if (size <= tester.universe()) {
      const int roots = tester.universe() - size + 1;
      const long long quota = remaining > 0 ? remaining / roots : 0;
      outcome = run_size(tester, size, quota, problem.workers);
      remaining -= outcome.nodes;
      result.nodes_expanded += outcome.nodes;
    }

    std::vector<std::vector<int>> candidates = outcome.found;
    if (const auto it = seeds.find(size); it != seeds.end())
      candidates.insert(candidates.end(), it->second.begin(), it->second.end());
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    if (!candidates.empty()) {
      result.size = size;
      result.found = std::move(candidates);
      result.smaller_ruled_out = below_covered;
      result.exhausted = below_covered && outcome.complete;
      story << "size " << size << ": found " << result.found.size()
            << (outcome.complete ? " (complete)" : " (budget-capped)");
      break;
    }
    if (outcome.complete) {
      result.sizes_exhausted.push_back(size);
    } else {
      below_covered = false;
      story << "size " << size << ": budget-capped, no find; ";
    }
  }

  if (result.size == 0) result.exhausted = below_covered;
  attach_certificates(result, tester);

  std::ostringstream detail;
  detail << tester.name() << ": ";
  if (!result.sizes_skipped.empty()) {
    detail << "sizes skipped by hints:";
    for (int s : result.sizes_skipped) detail << " " << s;
    detail << "; ";
  }
  if (!result.sizes_exhausted.empty()) {
    detail << "sizes enumerated empty:";
    for (int s : result.sizes_exhausted) detail << " " << s;
    detail << "; ";
  }
  detail << story.str();
  if (result.size == 0) detail << (result.exhausted ? "no design up to max size" : "inconclusive");
  detail << "; nodes=" << result.nodes_expanded;
  result.detail = detail.str();
  return result;
}

SearchResult enumerate_minimal(const SearchProblem& problem, int max_size) {
  validate_problem(problem, max_size);
  SubsetTester& tester = *problem.tester;

  SearchResult result;
  long long remaining = problem.budget;
  bool all_complete = true;

  for (int size = 1; size <= max_size; ++size) {
    if (hint_skips(problem.hints, size)) {
      result.sizes_skipped.push_back(size);
      continue;
    }
    if (size > tester.universe()) continue;
    const int roots = tester.universe() - size + 1;
    const long long quota = remaining > 0 ? remaining / roots : 0;
    const SizeOutcome outcome = run_size(tester, size, quota, problem.workers);
    remaining -= outcome.nodes;
    result.nodes_expanded += outcome.nodes;
    all_complete = all_complete && outcome.complete;
    if (outcome.found.empty() && outcome.complete) result.sizes_exhausted.push_back(size);
    result.all_found.insert(result.all_found.end(), outcome.found.begin(), outcome.found.end());
  }

  // ascending size already; a design is minimal iff no smaller design nests
  // inside it (equal sizes cannot nest properly)
  for (const auto& design : result.all_found) {
    bool minimal = true;
    for (const auto& other : result.found) {
      if (other.size() >= design.size()) continue;
      if (std::includes(design.begin(), design.end(), other.begin(), other.end())) {
        minimal = false;
        break;
      }
    }
    if (minimal) result.found.push_back(design);
  }

  result.exhausted = all_complete;
  if (!result.found.empty()) result.size = static_cast<int>(result.found.front().size());
  attach_certificates(result, tester);

  std::ostringstream detail;
  detail << tester.name() << ": designs=" << result.all_found.size()
         << " minimal=" << result.found.size() << " exhausted=" << (result.exhausted ? "yes" : "no")
         << " nodes=" << result.nodes_expanded;
  result.detail = detail.str();
  return result;
}

bool union_closure_audit(const std::vector<std::vector<int>>& minimal,
                         const std::vector<std::vector<int>>& all_found) {
  for (const auto& raw : all_found) {
    std::vector<int> design = raw;
    std::sort(design.begin(), design.end());
    std::vector<bool> covered(design.size(), false);
    for (const auto& raw_m : minimal) {
      std::vector<int> m = raw_m;
      std::sort(m.begin(), m.end());
      if (!std::includes(design.begin(), design.end(), m.begin(), m.end())) continue;
      for (int v : m) {
        const auto it = std::lower_bound(design.begin(), design.end(), v);
        covered[static_cast<size_t>(it - design.begin())] = true;
      }
    }
    if (std::find(covered.begin(), covered.end(), false) != covered.end()) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Hamming tester

struct HammingPhiTester::Cross {
  Graph graph;
  DenseSpectrum spectrum;
  std::vector<std::pair<int, int>> weight_clusters;
};

HammingPhiTester::HammingPhiTester(int n, int q, std::vector<int> weights)
    : n_(n), q_(q), weights_(std::move(weights)) {
  if (n < 1 || q < 2) throw std::invalid_argument("HammingPhiTester: need n >= 1 and q >= 2");
  total_ = 1;
  for (int i = 0; i < n; ++i) {
    total_ *= q;
    if (total_ > 4096) throw std::invalid_argument("HammingPhiTester: universe too large");
  }
  if (weights_.empty()) throw std::invalid_argument("HammingPhiTester: no weights tracked");
  std::sort(weights_.begin(), weights_.end());
  weights_.erase(std::unique(weights_.begin(), weights_.end()), weights_.end());
  if (weights_.front() < 1 || weights_.back() > n)
    throw std::invalid_argument("HammingPhiTester: weights must lie in 1..n");

  for (long long y = 1; y < total_; ++y) {
    if (!std::binary_search(weights_.begin(), weights_.end(), word_weight(y, n_, q_))) continue;
    std::vector<int8_t> row(total_);
    for (long long x = 0; x < total_; ++x)
      row[x] = static_cast<int8_t>(word_dot(y, x, n_, q_) % q_);
    dots_.push_back(std::move(row));
  }
  if (q_ == 2) {
    int_sums_.assign(dots_.size(), 0);
  } else {
    re_sums_.assign(dots_.size(), 0.0);
    im_sums_.assign(dots_.size(), 0.0);
  }
}

std::string HammingPhiTester::name() const {
  std::ostringstream os;
  os << "hamming phi-design n=" << n_ << " q=" << q_ << " weights=";
  for (size_t i = 0; i < weights_.size(); ++i) os << (i ? "," : "") << weights_[i];
  return os.str();
}

bool HammingPhiTester::test(const std::vector<int>& subset) {
  return phi_design_bool(subset, weights_, n_, q_);
}

std::optional<bool> HammingPhiTester::cross_check(const std::vector<int>& subset) {
  if (total_ > kDenseLimit) return std::nullopt;
  if (!cross_) {
    auto cross = std::make_shared<Cross>(
        Cross{build_hamming(n_, q_), DenseSpectrum{}, {}});
    cross->spectrum = dense_spectrum(cross->graph, MatrixSource::laplacian);
    const auto clusters = cross->spectrum.clusters();
    for (const int w : weights_) {
      int match = -1;
      for (size_t k = 0; k < clusters.size(); ++k)
        if (std::abs(cross->spectrum.eigenvalues(clusters[k].first) -
                     static_cast<double>(q_) * w) < 1e-6)
          match = static_cast<int>(k);
      if (match < 0) throw std::logic_error("HammingPhiTester: weight eigenvalue not found");
      cross->weight_clusters.push_back(clusters[match]);
    }
    cross_ = std::move(cross);
  }
  for (const auto& [b, e] : cross_->weight_clusters)
    if (averaging_residual(cross_->spectrum, b, e, subset) >= kFloatAveragingTol) return false;
  return true;
}

Certificate HammingPhiTester::certify(const std::vector<int>& subset) {
  return is_phi_design(subset, weights_, n_, q_);
}

void HammingPhiTester::push(int vertex) {
  for (size_t i = 0; i < dots_.size(); ++i) {
    const int d = dots_[i][vertex];
    if (q_ == 2) {
      int_sums_[i] += d ? -1 : 1;
    } else {
      re_sums_[i] += std::cos(2.0 * M_PI * d / q_);
      im_sums_[i] += std::sin(2.0 * M_PI * d / q_);
    }
  }
}

void HammingPhiTester::pop(int vertex) {
  for (size_t i = 0; i < dots_.size(); ++i) {
    const int d = dots_[i][vertex];
    if (q_ == 2) {
      int_sums_[i] -= d ? -1 : 1;
    } else {
      re_sums_[i] -= std::cos(2.0 * M_PI * d / q_);
      im_sums_[i] -= std::sin(2.0 * M_PI * d / q_);
    }
  }
}

bool HammingPhiTester::unreachable(long long remaining) {
  if (q_ == 2) {
    // each further vertex moves every tracked sum by exactly 1 in parity and
    // at most 1 in magnitude
    for (const long long s : int_sums_) {
      const long long mag = s < 0 ? -s : s;
      if (mag > remaining || ((mag ^ remaining) & 1)) return true;
    }
    return false;
  }
  // complex sums move by unit steps; 0.5 covers all accumulated rounding
  const double reach = static_cast<double>(remaining) + 0.5;
  for (size_t i = 0; i < re_sums_.size(); ++i)
    if (re_sums_[i] * re_sums_[i] + im_sums_[i] * im_sums_[i] > reach * reach) return true;
  return false;
}

std::unique_ptr<SubsetTester> HammingPhiTester::clone() const {
  auto copy = std::make_unique<HammingPhiTester>(n_, q_, weights_);
  copy->cross_ = cross_;
  return copy;
}

// ---------------------------------------------------------------------------
// Johnson tester

struct JohnsonPhiTester::Cross {
  Graph graph;
  DenseSpectrum spectrum;
  std::vector<std::pair<int, int>> t_clusters;
};

JohnsonPhiTester::JohnsonPhiTester(int n, int k, std::vector<int> S)
    : n_(n), k_(k), S_(std::move(S)) {
  if (k < 1 || n < 2 * k) throw std::invalid_argument("JohnsonPhiTester: need 1 <= k <= n/2");
  if (S_.empty()) throw std::invalid_argument("JohnsonPhiTester: no eigenspaces tracked");
  std::sort(S_.begin(), S_.end());
  S_.erase(std::unique(S_.begin(), S_.end()), S_.end());
  if (S_.front() < 1 || S_.back() > k)
    throw std::invalid_argument("JohnsonPhiTester: indices must lie in 1..k");
  total_ = binomial_ll(n, k);
  if (total_ > 4096) throw std::invalid_argument("JohnsonPhiTester: universe too large");
}

std::string JohnsonPhiTester::name() const {
  std::ostringstream os;
  os << "johnson phi-design n=" << n_ << " k=" << k_ << " S=";
  for (size_t i = 0; i < S_.size(); ++i) os << (i ? "," : "") << S_[i];
  return os.str();
}

bool JohnsonPhiTester::test(const std::vector<int>& subset) {
  return phi_design_johnson_bool(n_, k_, subset, S_);
}

std::optional<bool> JohnsonPhiTester::cross_check(const std::vector<int>& subset) {
  if (total_ > kDenseLimit) return std::nullopt;
  if (!cross_) {
    auto cross = std::make_shared<Cross>(
        Cross{build_johnson(n_, k_), DenseSpectrum{}, {}});
    cross->spectrum = dense_spectrum(cross->graph, MatrixSource::laplacian);
    const auto clusters = cross->spectrum.clusters();
    for (const int t : S_) {
      const double lambda = static_cast<double>(t) * (n_ + 1 - t);
      int match = -1;
      for (size_t k = 0; k < clusters.size(); ++k)
        if (std::abs(cross->spectrum.eigenvalues(clusters[k].first) - lambda) < 1e-6)
          match = static_cast<int>(k);
      if (match < 0) throw std::logic_error("JohnsonPhiTester: eigenvalue not found");
      cross->t_clusters.push_back(clusters[match]);
    }
    cross_ = std::move(cross);
  }
  for (const auto& [b, e] : cross_->t_clusters)
    if (averaging_residual(cross_->spectrum, b, e, subset) >= kFloatAveragingTol) return false;
  return true;
}

Certificate JohnsonPhiTester::certify(const std::vector<int>& subset) {
  return is_phi_design_johnson(n_, k_, subset, S_);
}

std::unique_ptr<SubsetTester> JohnsonPhiTester::clone() const {
  auto copy = std::make_unique<JohnsonPhiTester>(n_, k_, S_);
  copy->cross_ = cross_;
  return copy;
}

// ---------------------------------------------------------------------------
// Symmetric-group Gram tester

SymmetricGramTester::SymmetricGramTester(int n, std::vector<Partition> tracked)
    : n_(n),
      tracked_(std::move(tracked)),
      ct_(n),
      perms_(all_perms(n)),
      acc_(ct_, tracked_) {
  if (tracked_.empty()) throw std::invalid_argument("SymmetricGramTester: nothing tracked");
  for (const Partition& p : tracked_)
    if (p.first_part() == n)
      throw std::invalid_argument(
          "SymmetricGramTester: the trivial eigenspace is averaged by every subset; tracking it "
          "makes every Gram sum positive");
}

std::string SymmetricGramTester::name() const {
  std::ostringstream os;
  os << "symmetric gram-design n=" << n_ << " tracked=";
  for (size_t i = 0; i < tracked_.size(); ++i) os << (i ? "," : "") << tracked_[i].to_string();
  return os.str();
}

bool SymmetricGramTester::test(const std::vector<int>& subset) {
  std::vector<Perm> design;
  design.reserve(subset.size());
  for (int id : subset) design.push_back(perms_.at(id));
  for (const Partition& p : tracked_)
    if (gram_sum(ct_, design, p) != 0) return false;
  return true;
}

Certificate SymmetricGramTester::certify(const std::vector<int>& subset) {
  Certificate cert(name());
  cert.add_fact("size", std::to_string(subset.size()));
  std::vector<Perm> design;
  for (int id : subset) design.push_back(perms_.at(id));
  bool verdict = true;
  for (const Partition& p : tracked_) {
    const long long g = gram_sum(ct_, design, p);
    cert.add_residual("gram " + p.to_string(), std::to_string(g));
    if (g != 0 && verdict) {
      verdict = false;
      cert.set_counterexample("gram sum " + std::to_string(g) + " for partition " + p.to_string());
    }
  }
  cert.set_verdict(verdict);
  return cert;
}

std::unique_ptr<SubsetTester> SymmetricGramTester::clone() const {
  return std::make_unique<SymmetricGramTester>(n_, tracked_);
}

// ---------------------------------------------------------------------------
// Random-walk extremal tester

RandomWalkExtremalTester::RandomWalkExtremalTester(int n) : n_(n) {
  if (n < 1 || n > 12) throw std::invalid_argument("RandomWalkExtremalTester: need 1 <= n <= 12");
}

std::string RandomWalkExtremalTester::name() const {
  return "hamming random-walk extremal n=" + std::to_string(n_);
}

bool RandomWalkExtremalTester::test(const std::vector<int>& subset) {
  return random_walk_design_bool(n_, subset);
}

Certificate RandomWalkExtremalTester::certify(const std::vector<int>& subset) {
  return random_walk_extremal_check(n_, subset);
}

std::unique_ptr<SubsetTester> RandomWalkExtremalTester::clone() const {
  return std::make_unique<RandomWalkExtremalTester>(n_);
}

}  // namespace gdesign
