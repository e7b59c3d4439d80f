#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gdesign/certificate.hpp"
#include "gdesign/errors.hpp"
#include "gdesign/graph.hpp"
#include "gdesign/rational.hpp"
#include "gdesign/spectra.hpp"

namespace gdesign {

/// Largest group order for which normal Cayley graphs are materialized (8!).
inline constexpr int kCayleyVertexLimit = 40320;
/// Character tables are built by Murnaghan-Nakayama recursion up to this n.
inline constexpr int kCharTableMaxN = 9;

/**
 * Permutation of {0..n-1} in one-line notation (image(i) = sigma(i)).
 * Composition convention everywhere: (sigma*tau)(i) = sigma(tau(i)),
 * i.e. tau acts first.
 */
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<int> image);
  static Perm identity(int n);

  int n() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_.at(i); }
  const std::vector<int>& image() const { return img_; }

  Perm compose(const Perm& other) const;  // this after other
  Perm inverse() const;
  bool is_identity() const;
  /// Cycle lengths sorted descending; a partition of n.
  std::vector<int> cycle_type() const;
  int sign() const;

  /// Digits "23145" (1-indexed images); requires n <= 9.
  std::string one_line() const;
  /// "(1 2 3)(4 5)" with fixed points omitted; identity prints "e".
  std::string cycle_string() const;
  /// Accepts one-line digits, cycle notation (compact "(123)" or spaced
  /// "(1 2 3)"), or "e".
  static Perm parse(const std::string& text, int n);

  bool operator==(const Perm& o) const { return img_ == o.img_; }
  bool operator<(const Perm& o) const { return img_ < o.img_; }

 private:
  std::vector<int> img_;
};

/// All n! permutations in lexicographic order of their one-line images.
std::vector<Perm> all_perms(int n);
/// Index of s in all_perms(s.n()) via the Lehmer code.
long long perm_lex_rank(const Perm& s);

/// Integer partition with weakly decreasing positive parts.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p);

  int n() const;
  int first_part() const { return parts.empty() ? 0 : parts.front(); }
  /// Irreducible dimension by the hook length formula.
  BigInt hook_dimension() const;
  std::string to_string() const;  // "3,1"
  static Partition parse(const std::string& text);

  bool operator==(const Partition& o) const { return parts == o.parts; }
  bool operator<(const Partition& o) const { return parts > o.parts; }  // descending lex
};

/// Partitions of n in descending lexicographic order: (n) first, (1^n) last.
std::vector<Partition> all_partitions(int n);
/// Size of the conjugacy class with the given cycle type: n!/prod(l_i) over
/// cycle lengths divided by multiplicity factorials.
BigInt conjugacy_class_size(const Partition& mu);

/**
 * Exact integer character table of S_n computed by the Murnaghan-Nakayama
 * rule. Rows and columns are both indexed by all_partitions(n): rows by the
 * irreducible label p, columns by the cycle type mu of the class.
 */
class CharTable {
 public:
  explicit CharTable(int n);

  int n() const { return n_; }
  int count() const { return static_cast<int>(parts_.size()); }
  const std::vector<Partition>& partitions() const { return parts_; }
  int index_of(const Partition& p) const;

  long long value(int p_index, int class_index) const;
  long long value(const Partition& p, const Partition& mu) const;
  /// chi_p(identity); equals the hook length dimension.
  long long dimension(int p_index) const;
  BigInt class_size(int class_index) const { return class_sizes_.at(class_index); }
  int class_index_of(const Perm& s) const;

  /// Row orthogonality against class sizes and column orthogonality against
  /// centralizer orders, both as exact integer identities.
  bool orthogonality_audit() const;

 private:
  int n_;
  std::vector<Partition> parts_;
  std::vector<std::vector<long long>> table_;  // [p][class]
  std::vector<BigInt> class_sizes_;
};

Partition transposition_class(int n);
/// Cycle types without fixed points; connection set of the derangement graph.
std::vector<Partition> derangement_classes(int n);

/**
 * Normal Cayley graph on S_n whose connection set is the union of the given
 * nontrivial conjugacy classes. Vertices are permutations in lexicographic
 * order; edges join g to g*x. May be disconnected (the family metadata keeps
 * the classes). Throws if a class is the identity type or n! exceeds limit.
 */
Graph cayley_graph(int n, const std::vector<Partition>& classes,
                   int vertex_limit = kCayleyVertexLimit);

/// Adjacency eigenvalue of every eigenvector in Phi_p: sum over the
/// connection set of chi_p(x)/d_p.
Rational cayley_eigenvalue(const CharTable& ct, const Partition& p,
                           const std::vector<Partition>& classes);
/// Degree minus the adjacency eigenvalue.
Rational cayley_laplacian_eigenvalue(const CharTable& ct, const Partition& p,
                                     const std::vector<Partition>& classes);
/// Laplacian eigenvalues with multiplicity d_p^2, equal values merged,
/// ascending; exact. Multiplicities must fit in int.
SpectrumSketch cayley_spectrum_sketch(const CharTable& ct, const std::vector<Partition>& classes);

/// Content formula for the transposition graph's adjacency eigenvalue on
/// Phi_p: (1/2) sum_i p_i (p_i - 2i + 1); always an integer.
long long transposition_adjacency_eigenvalue(const Partition& p);

/**
 * Exact Gram criterion: sum over sigma,tau in D of chi_p(sigma^-1 tau).
 * This equals the squared Frobenius norm of sum_{sigma in D} rho_p(sigma),
 * so it is a nonnegative integer, and it vanishes exactly when D averages
 * every eigenvector in Phi_p.
 */
long long gram_sum(const CharTable& ct, const std::vector<Perm>& design, const Partition& p);
bool averages_phi_p(const CharTable& ct, const std::vector<Perm>& design, const Partition& p);
/// Verdict with one Gram residual per requested eigenspace label.
Certificate phi_p_certificate(const CharTable& ct, const std::vector<Perm>& design,
                              const std::vector<Partition>& eigenspaces);

/// Exact integer identity: for every pair of distinct t-tuples (i_k), (j_k),
/// #{sigma in D : sigma(i_k)=j_k for all k} * n! == |D| * (n-t)!.
bool t_wise_uniform_check(const std::vector<Perm>& design, int t);
Certificate t_wise_uniform_certificate(const std::vector<Perm>& design, int t);

/**
 * Incremental Gram sums for subset sweeps: add/remove one permutation in
 * O(n! ) row updates per tracked eigenspace. Requires n <= 6 (the pairwise
 * class table is materialized).
 */
class GramAccumulator {
 public:
  GramAccumulator(const CharTable& ct, std::vector<Partition> tracked);

  void add(int lex_rank);
  void remove(int lex_rank);
  int size() const { return size_; }
  int tracked_count() const { return static_cast<int>(tracked_.size()); }
  long long gram(int tracked_index) const { return gram_.at(tracked_index); }
  long long dimension(int tracked_index) const { return dims_.at(tracked_index); }
  bool all_zero() const;
  /// True when no superset reachable by adding `remaining` more elements can
  /// have all tracked Gram sums zero (triangle inequality per eigenspace).
  bool averaging_unreachable(long long remaining) const;

 private:
  int order_;  // n!
  std::vector<Partition> tracked_;
  std::vector<long long> dims_;
  std::vector<uint8_t> pair_class_;            // [g*order+h] -> class of g^-1 h
  std::vector<std::vector<long long>> chi_;    // per tracked: by class
  std::vector<std::vector<long long>> rows_;   // per tracked: row sums by rank
  std::vector<long long> gram_;
  int size_ = 0;
};

struct FirstPartReport {
  bool ok = false;
  std::string mode;  // "exhaustive", "exhaustive(max-size=12)", or "sampled"
  long long subsets_checked = 0;
  long long pruned_subtrees = 0;
  long long nodes = 0;
  /// Every t-wise uniform set the exhaustive sweep visited (lex ranks,
  /// ascending). For n = 4 the sweep is capped at subsets of size 12, which
  /// still covers every possible proper uniform set for t >= 2 because a
  /// t-wise uniform set has size divisible by n!/(n-t)!.
  std::vector<std::vector<int>> uniform_sets;
  std::string discrepancy;
};

/**
 * Checks "t-wise uniform <=> averages every Phi_p with p != (n), p_1 >= n-t"
 * over all nonempty subsets of S_n (n <= 3), over all subsets of size at
 * most 12 (n = 4; subtrees where both sides are provably impossible are
 * pruned), or over a seeded sample that always contains structured positives
 * and near-miss negatives (n = 5, 6).
 */
FirstPartReport first_part_design_equivalence(int n, int t,
                                              long long budget = kDefaultSubsetBudget,
                                              int samples = 200, uint32_t seed = 20240817);

struct OrderConflict {
  Partition p;  // larger first part
  Partition q;
  long long adjacency_p = 0;  // content-formula adjacency eigenvalues
  long long adjacency_q = 0;
  Rational laplacian_p;
  Rational laplacian_q;
};

/**
 * Explicit pair with p_1 > q_1 but Laplacian order lambda_p >= lambda_q on
 * the transposition graph: odd n=2m+1 gives (m+1,1^m) vs (m,m,1); even
 * n=2m+2 gives (m+1,1^{m+1}) vs (m,m,2). Requires n >= 6.
 */
OrderConflict order_conflict_witness(int n);

/**
 * The coset left * S_t * right where S_t permutes {1..t} and fixes {t+1..n}
 * pointwise; size t!. Sorted, duplicate-free. Requires 1 <= t < n.
 */
std::vector<Perm> symmetric_coset(int n, int t, const Perm& left, const Perm& right);

/**
 * Verifies that the set averages exactly the eigenspaces in reverse first
 * part order: Phi_p averaged for every p with p_1 < t and for no other
 * nontrivial p. For t = 1 the required list is empty and the certificate
 * records the documented edge case: a singleton averages no nontrivial
 * eigenspace (its sign-character Gram sum is 1, not 0).
 */
Certificate coset_reverse_order_certificate(const CharTable& ct, const std::vector<Perm>& coset,
                                            int t);

/// {sigma : sigma(i) = j} with 0-based i, j: a coset of a point stabilizer,
/// size (n-1)!, sorted by lex rank.
std::vector<Perm> point_stabilizer_coset(int n, int i, int j);

struct BirkhoffReport {
  bool ok = false;
  long long designs_found = 0;
  int minimal_count = 0;
  int minimal_size = 0;
  bool union_closure = false;
  long long nodes = 0;
  long long pruned_subtrees = 0;
  std::string detail;
};

/**
 * Enumerates the subsets of S_n averaging every Phi_p with p_1 < n-1 (all
 * subsets for n = 3, all subsets of size at most 2(n-1)! for n = 4) and
 * checks that none is smaller than (n-1)!, that the ones of size (n-1)! are
 * exactly the n^2 point-stabilizer cosets {sigma : sigma(i)=j} (hence those
 * cosets are the inclusion-minimal designs), and that every enumerated
 * design is a union of the cosets it contains. Requires 3 <= n <= 4.
 */
BirkhoffReport birkhoff_minimal_enumeration(int n, long long budget = kDefaultSubsetBudget * 4);

std::vector<Perm> alternating_group(int n);

}  // namespace gdesign
