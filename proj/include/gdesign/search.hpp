#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gdesign/certificate.hpp"
#include "gdesign/errors.hpp"
#include "gdesign/symmetric.hpp"

namespace gdesign {

/**
 * Exact vertex-subset predicate a search can drive. `test` must be a pure
 * function of the (sorted, duplicate-free) subset; implementations may expose
 * incremental partial-sum state for pruning, and the search keeps push/pop
 * balanced so a tester's partial state is empty between subtrees.
 */
class SubsetTester {
 public:
  virtual ~SubsetTester() = default;

  /// Number of vertices in the ground set; subsets use ids 0..universe()-1.
  virtual int universe() const = 0;
  virtual std::string name() const = 0;
  /// Exact verdict for a complete candidate, independent of partial state.
  virtual bool test(const std::vector<int>& subset) = 0;
  /// Verdict from an independent second method (spectral vs combinatorial),
  /// when the family has one; disagreement with `test` is a soundness bug.
  virtual std::optional<bool> cross_check(const std::vector<int>&) { return std::nullopt; }
  /// Certificate for a candidate; the default records the verdict and size.
  virtual Certificate certify(const std::vector<int>& subset);

  /// Incremental hooks. `unreachable(r)` may only return true when no
  /// completion of the current partial subset by at most r further vertices
  /// can pass the tester (pruning must never remove a verified design).
  virtual bool incremental() const { return false; }
  virtual void push(int vertex) { (void)vertex; }
  virtual void pop(int vertex) { (void)vertex; }
  virtual bool unreachable(long long remaining) {
    (void)remaining;
    return false;
  }

  /// Independent copy with empty partial state, for parallel workers.
  virtual std::unique_ptr<SubsetTester> clone() const = 0;
};

/**
 * Size filters applied before enumerating a candidate size. Hints must be
 * proven facts about the design family (for example "4 divides |D|" and
 * "|D| > n" for Hamming weight-{1,2} designs): the search reports sizes
 * skipped by hints as ruled out.
 */
struct SizeHints {
  long long modulus = 1;       // every design size is divisible by this
  long long greater_than = 0;  // and strictly larger than this
};

struct SearchProblem {
  SubsetTester* tester = nullptr;  // not owned; must outlive the search
  SizeHints hints;
  long long budget = kDefaultSubsetBudget;  // node expansions, not wall time
  int workers = 1;
  /// Externally supplied candidates (seed-and-verify): each is checked by the
  /// tester up front and counts as found at its size even when enumeration of
  /// that size is budget-capped. A failing seed is an error.
  std::vector<std::vector<int>> seeds;
};

struct SearchResult {
  std::vector<std::vector<int>> found;  // designs at the reported size, lex order
  std::vector<std::vector<int>> all_found;  // minimal enumeration: every design found
  int size = 0;                             // winning size; 0 when nothing was found
  bool exhausted = false;          // every relevant size hint-skipped or fully enumerated
  bool smaller_ruled_out = false;  // all sizes below `size` hint-skipped or enumerated empty
  long long nodes_expanded = 0;
  std::vector<int> sizes_skipped;    // by hints
  std::vector<int> sizes_exhausted;  // fully enumerated without a find
  std::vector<Certificate> certificates;  // one per entry of `found`
  std::string detail;
};

/**
 * Finds all designs of the smallest feasible size <= max_size. Candidate
 * sizes ascend; hint-skipped sizes are treated as proven empty. Within a
 * size, candidates enumerate depth-first in lexicographic order with
 * tester-provided pruning. The node budget splits evenly over first-vertex
 * subtrees (per size, from the remaining budget), so results are identical
 * for every worker count; a subtree exceeding its quota marks the result not
 * exhausted instead of throwing.
 */
SearchResult search_smallest(const SearchProblem& problem, int max_size);

/**
 * Enumerates every design of size <= max_size and reports the
 * inclusion-minimal ones in `found` (everything in `all_found`). Minimality
 * and completeness claims require `exhausted`.
 */
SearchResult enumerate_minimal(const SearchProblem& problem, int max_size);

/// True iff every found design equals the union of the minimal designs it
/// contains. Inputs come from enumerate_minimal over the same problem.
bool union_closure_audit(const std::vector<std::vector<int>>& minimal,
                         const std::vector<std::vector<int>>& all_found);

/**
 * Subsets of H(n,q) averaging the character eigenspaces with Hamming weight
 * in `weights`. Incremental: tracks one character sum per word of tracked
 * weight (exact integers at q = 2, complex partial sums with a safety margin
 * otherwise); a partial sum that cannot return to zero within the remaining
 * slots prunes. Cross-check: dense Laplacian averaging residuals.
 */
class HammingPhiTester : public SubsetTester {
 public:
  HammingPhiTester(int n, int q, std::vector<int> weights);

  int universe() const override { return static_cast<int>(total_); }
  std::string name() const override;
  bool test(const std::vector<int>& subset) override;
  std::optional<bool> cross_check(const std::vector<int>& subset) override;
  Certificate certify(const std::vector<int>& subset) override;
  bool incremental() const override { return true; }
  void push(int vertex) override;
  void pop(int vertex) override;
  bool unreachable(long long remaining) override;
  std::unique_ptr<SubsetTester> clone() const override;

 private:
  int n_;
  int q_;
  std::vector<int> weights_;
  long long total_;
  // tracked characters: dot_[y][x] = y.x mod q, one row per tracked word y
  std::vector<std::vector<int8_t>> dots_;
  std::vector<long long> int_sums_;     // q = 2: exact signed sums
  std::vector<double> re_sums_, im_sums_;  // q > 2: complex partial sums
  struct Cross;
  std::shared_ptr<Cross> cross_;  // lazy dense spectrum, main-thread only
};

/// Subsets of J(n,k) averaging the eigenspaces indexed by t in S (exact
/// rational projector test; no incremental state). Cross-check: dense
/// Laplacian averaging residuals.
class JohnsonPhiTester : public SubsetTester {
 public:
  JohnsonPhiTester(int n, int k, std::vector<int> S);

  int universe() const override { return static_cast<int>(total_); }
  std::string name() const override;
  bool test(const std::vector<int>& subset) override;
  std::optional<bool> cross_check(const std::vector<int>& subset) override;
  Certificate certify(const std::vector<int>& subset) override;
  std::unique_ptr<SubsetTester> clone() const override;

 private:
  int n_;
  int k_;
  std::vector<int> S_;
  long long total_;
  struct Cross;
  std::shared_ptr<Cross> cross_;
};

/**
 * Subsets of S_n (as lexicographic ranks) whose character Gram sums vanish
 * for every tracked partition. Incremental: a GramAccumulator per partial
 * set; the triangle inequality per eigenspace prunes unreachable branches.
 */
class SymmetricGramTester : public SubsetTester {
 public:
  SymmetricGramTester(int n, std::vector<Partition> tracked);

  int universe() const override { return static_cast<int>(perms_.size()); }
  std::string name() const override;
  bool test(const std::vector<int>& subset) override;
  Certificate certify(const std::vector<int>& subset) override;
  bool incremental() const override { return true; }
  void push(int vertex) override { acc_.add(vertex); }
  void pop(int vertex) override { acc_.remove(vertex); }
  bool unreachable(long long remaining) override { return acc_.averaging_unreachable(remaining); }
  std::unique_ptr<SubsetTester> clone() const override;

 private:
  int n_;
  std::vector<Partition> tracked_;
  CharTable ct_;
  std::vector<Perm> perms_;
  GramAccumulator acc_;
};

/// Subsets of H(n,2) that are extremal designs for the random-walk order
/// (every vertex sees the same number of design neighbors).
class RandomWalkExtremalTester : public SubsetTester {
 public:
  explicit RandomWalkExtremalTester(int n);

  int universe() const override { return static_cast<int>(1LL << n_); }
  std::string name() const override;
  bool test(const std::vector<int>& subset) override;
  Certificate certify(const std::vector<int>& subset) override;
  std::unique_ptr<SubsetTester> clone() const override;

 private:
  int n_;
};

}  // namespace gdesign
