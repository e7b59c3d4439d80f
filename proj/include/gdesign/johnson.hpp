#pragma once

#include <Eigen/Core>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gdesign/certificate.hpp"
#include "gdesign/errors.hpp"
#include "gdesign/graph.hpp"
#include "gdesign/spectra.hpp"

namespace gdesign::johnson {

/// k-subsets of {1..n} are held as sorted 1-based element lists and indexed
/// by colexicographic rank.
long long colex_rank(const std::vector<int>& subset);
std::vector<int> colex_unrank(long long rank, int n, int k);
std::vector<std::vector<int>> all_ksubsets(int n, int k);  // colex order
std::string subset_to_string(const std::vector<int>& subset);
std::vector<int> parse_subset(const std::string& text, int n, int k);

inline constexpr long long kJohnsonVertexLimit = 4096;

/// J(n,k): k-subsets adjacent when they share k-1 elements. Inputs with
/// k > n/2 are built as the isomorphic J(n, n-k).
Graph build_johnson(int n, int k, long long vertex_limit = kJohnsonVertexLimit);

struct JohnsonSpectrum {
  int n = 0, k = 0;
  struct Entry {
    int t;
    long long lambda;  // t (n + 1 - t)
    long long mu;      // C(n,t) - C(n,t-1)
  };
  std::vector<Entry> entries;  // t = 0..k
  SpectrumSketch to_sketch() const;
};
JohnsonSpectrum johnson_spectrum(int n, int k);

/// Eberlein adjacency eigenvalue E_1(t) = (k-t)(n-k-t) - t.
long long eberlein_e1(int n, int k, int t);

/// Exact projector test: 1_D projects to zero in the eigenspaces lambda_t,
/// t in S, S a subset of {1..k}. Designs are vertex-index lists (colex
/// ranks). k > n/2 is relabeled through complementation, recorded as a fact.
Certificate is_phi_design_johnson(int n, int k, const std::vector<int>& design,
                                  const std::vector<int>& S);
bool phi_design_johnson_bool(int n, int k, const std::vector<int>& design,
                             const std::vector<int>& S);

/// Combinatorial t-design test: every t-subset of {1..n} lies in the same
/// number lambda of design blocks.
std::pair<bool, std::optional<long long>> block_design_check(int n, int k,
                                                             const std::vector<int>& design, int t);

struct EquivalenceReport {
  bool ok = false;
  long long subsets_checked = 0;
  std::string discrepancy;
};

/// Exhaustive three-way oracle over every nonempty vertex subset:
/// combinatorial t-design <=> exact projector design on [t] <=> float
/// averaging of those eigenspaces.
EquivalenceReport johnson_equivalence(int n, int k, int t, long long budget = kDefaultSubsetBudget);

/// Star D_T = all k-subsets containing T; averages the eigenspaces beyond
/// |T| in reverse order.
std::vector<int> star(int n, int k, const std::vector<int>& T);

/// 0/1 inclusion matrix: rows = k-subsets, cols = t-subsets, 1 iff T <= S.
Eigen::MatrixXi incidence_b(int n, int k, int t);

struct MinimalReport {
  bool ok = false;
  bool union_closure = false;
  long long designs_found = 0;
  std::vector<std::vector<int>> minimal_designs;
  std::string detail;
};

/// Brute-force enumeration of all designs averaging eigenspaces {2..k};
/// the inclusion-minimal ones must be the n stars and their complements.
MinimalReport minimal_reverse_enumeration_johnson(int n, int k,
                                                  long long budget = kDefaultSubsetBudget);

}  // namespace gdesign::johnson
