#pragma once

#include <array>
#include <string>
#include <vector>

#include "gdesign/certificate.hpp"
#include "gdesign/errors.hpp"
#include "gdesign/graph.hpp"
#include "gdesign/quadsurd.hpp"
#include "gdesign/rational.hpp"
#include "gdesign/spectra.hpp"

namespace gdesign {

/// Numeric tolerance for matching the assembled Mycielskian spectrum (lifted
/// pairs plus cubic roots) against the dense eigenvalues.
inline constexpr double kSpectrumCompletionTol = 1e-8;

/**
 * The Mycielskian of a base graph on n vertices: 2n+1 vertices in the fixed
 * layout [V | V' | u] with u_index = 2n; vertex n+i is the shadow of vertex
 * i. Edges: the base edges, (v_i, v'_j) and (v'_i, v_j) for every base edge
 * (v_i, v_j), and (u, v'_j) for every j. Hence deg(u) = n, the edge count is
 * 3m + n, and the adjacency matrix has the block form
 * [[A, A, 0], [A, 0, 1], [0, 1^T, 0]] under this layout.
 */
struct MycielskiGraph {
  Graph base;
  Graph graph;
  int u_index = 0;
};

/// Requires a connected simple base with at least one edge. Triangle-free
/// bases yield triangle-free Mycielskians.
MycielskiGraph mycielskian(const Graph& g);

/// Adjacency eigenvalue with an exact rational eigenvector.
struct RationalEigenpair {
  Rational eigenvalue;
  std::vector<Rational> vector;
};

/**
 * All integer adjacency eigenvalues with deterministic rational kernel bases:
 * for every integer t in [-max degree, max degree], the kernel of A - tI is
 * computed by Gauss-Jordan elimination (pivot on the first nonzero column,
 * free variables set to unit values in index order). Pairs are returned in
 * ascending eigenvalue order, one entry per basis vector. Since A has an
 * integer characteristic polynomial, every rational eigenvalue is an integer,
 * so the spectrum is wholly integral exactly when n pairs come back.
 */
std::vector<RationalEigenpair> integer_adjacency_eigenpairs(const Graph& g);

/**
 * A lifted adjacency eigenpair of the Mycielskian of a d-regular base. From a
 * base pair (mu, x) with sum(x) = 0, the vector [x | -gc x | 0] is an
 * eigenvector of the Mycielskian adjacency matrix with eigenvalue g*mu, where
 * {g, gc} = {golden ratio, its conjugate} are the roots of t^2 - t - 1: the
 * golden variant scales the shadow copy by the conjugate root and vice versa.
 * The last entry is zero and the vector is orthogonal to the all-ones vector,
 * so the central vertex averages every lifted eigenvector.
 */
struct LiftedEigenpair {
  Rational base_eigenvalue;
  bool golden = true;  // true: eigenvalue phi*mu; false: eigenvalue phibar*mu
  QuadSurd eigenvalue;
  std::vector<QuadSurd> vector;  // 2n+1 entries in the [V | V' | u] layout
};

/**
 * Lifts each base pair twice (golden variant first, then conjugate), keeping
 * the order of base_pairs; supplying base pairs in ascending eigenvalue order
 * therefore yields the Mycielskian eigenvector order for the 2n-2 paired
 * eigenvalues. Every lifted pair is verified exactly in Q[sqrt 5]:
 * A(M(G)) w == lambda w entrywise, w[u] == 0, and w . 1 == 0.
 * Throws invalid_argument for a non-regular base, a base pair that is not an
 * exact eigenpair, or a base vector whose entries do not sum to zero.
 */
std::vector<LiftedEigenpair> lift_eigenpairs(const Graph& g,
                                             const std::vector<RationalEigenpair>& base_pairs);

/// Coefficients (leading first) of the monic cubic t^3 - d t^2 - (n + d^2) t
/// + d n whose roots are the three Mycielskian adjacency eigenvalues that are
/// not of lifted form, for a d-regular base on n vertices.
std::array<long long, 4> cubic_coefficients(int n, int d);

/// The same cubic rendered as text, e.g. "t^3 - 2t^2 - 7t + 6".
std::string cubic_to_string(int n, int d);

/// Ascending real roots of that cubic (numeric, via the companion matrix).
std::array<double, 3> cubic_roots(int n, int d);

/**
 * Certificate that the central vertex alone averages exactly 2n-2 of the
 * 2n+1 adjacency eigenvectors of the Mycielskian of a regular base. Counted
 * cluster-by-cluster on the dense spectrum: a cluster of dimension k
 * contributes k averaged eigenvectors when the functional
 * phi -> phi(u) - mean(phi) vanishes on it and k-1 otherwise, so degenerate
 * eigenvalues shared between lifted and cubic eigenvectors are handled.
 * Exactly three clusters may carry the nonzero functional and each numeric
 * cubic root must land in one of them. When the base has a complete integer
 * eigenbasis the lifted pairs are additionally verified exactly in Q[sqrt 5].
 */
Certificate central_vertex_check(const Graph& g);

struct RestrictionVerdicts {
  bool base_copy = false;    // sum of x over D intersect V is zero
  bool shadow_copy = false;  // sum of x over D intersect V' is zero
  bool vacuous = false;      // both intersections empty (e.g. D = {u})
};

/**
 * Restricts a Mycielskian design to the two base copies. First verifies the
 * precondition exactly: D must average both lifted eigenvectors of the given
 * base pair (throws invalid_argument otherwise, including when the base pair
 * is not an exact zero-sum eigenpair). Then reports whether the base-copy and
 * shadow-copy restrictions average x in the base graph; the two lifted
 * zero sums form a linear system in the golden ratio and its conjugate whose
 * only solution makes both restriction sums zero, so true verdicts are the
 * proved outcome. D = {u} restricts to two empty sets, flagged vacuous.
 */
RestrictionVerdicts restrict_design(const MycielskiGraph& m, const std::vector<int>& design,
                                    const RationalEigenpair& base_pair);

struct MycielskiAuditReport {
  bool ok = false;
  long long subsets_checked = 0;
  int designs_found = 0;     // subsets averaging all 2n-2 lifted eigenvectors
  bool central_found = false;
  int smallest_other = 0;    // size of the smallest design besides {u}; 0 if none
  bool size_bound_ok = false;     // every design is {u} or has >= n vertices
  bool beyond_full_only = false;  // also averaging the cubic triple forces V(M)
  bool exact_float_agree = false; // float candidates == exact zero-sum designs
  std::string detail;
};

/**
 * Exhaustive audit of the design-size bound over every nonempty vertex subset
 * of the Mycielskian (2n+1 <= 13): the subsets averaging all 2n-2 lifted
 * eigenvectors (float test at kFloatAveragingTol, confirmed exactly in
 * Q[sqrt 5]) must each be {u} or have at least n vertices, and the subsets
 * that additionally average the cubic-root eigenspaces must be exactly the
 * full vertex set. Requires a regular connected base with a wholly integral
 * adjacency spectrum (the exact lifted pairs need rational base vectors).
 */
MycielskiAuditReport design_size_audit(const Graph& g, long long budget = kDefaultSubsetBudget);

/**
 * One Galois-conjugation instance: true when "design averages the eigenspace
 * of alpha implies it averages the eigenspace of every listed conjugate",
 * tested on the dense adjacency spectrum at tolerance tol. alpha and its
 * conjugates must each match a distinct eigenvalue cluster; alpha must be
 * irrational (a rational adjacency eigenvalue is an integer, and the exact
 * path applies instead), which is enforced by rejecting values within 1e-6
 * of an integer.
 */
bool conjugate_closure_check(const Graph& g, double alpha, const std::vector<double>& conjugates,
                             const std::vector<int>& design, double tol = kFloatAveragingTol);

struct ConjugateClosureReport {
  bool ok = false;
  long long subsets_checked = 0;
  long long first_averagers = 0;  // subsets averaging the first root's eigenspace
  long long violations = 0;       // those that miss some conjugate eigenspace
  std::string detail;
};

/// conjugate_closure_check over every nonempty vertex subset; roots[0] plays
/// the role of alpha. ok means no subset violates the implication.
ConjugateClosureReport conjugate_closure_audit(const Graph& g, const std::vector<double>& roots,
                                               long long budget = kDefaultSubsetBudget);

/**
 * Checks that the multiset {g*mu_i, gc*mu_i : i >= 2} (golden lifts of the
 * nontrivial base adjacency eigenvalues, taken from the dense base spectrum)
 * together with the three cubic roots matches the dense adjacency spectrum of
 * the Mycielskian entrywise after sorting, within kSpectrumCompletionTol.
 * Requires a connected regular base.
 */
bool spectrum_completeness_check(const Graph& g, double tol = kSpectrumCompletionTol);

}  // namespace gdesign
