#pragma once

#include <Eigen/Core>
#include <string>
#include <utility>
#include <vector>

#include "gdesign/certificate.hpp"
#include "gdesign/cyclotomic.hpp"
#include "gdesign/errors.hpp"
#include "gdesign/graph.hpp"

namespace gdesign::hamming {

/**
 * Words of (Z/qZ)^n are addressed by their base-q encoding with the first
 * coordinate most significant, so the digit string in figures maps to a
 * vertex index deterministically. Coordinate sets are 1-indexed.
 */
std::vector<int> word_digits(long long index, int n, int q);
long long word_index(const std::vector<int>& digits, int q);
std::string word_to_string(long long index, int n, int q);
long long parse_word(const std::string& text, int n, int q);
int word_weight(long long index, int n, int q);
int word_dot(long long y, long long x, int n, int q);

inline constexpr long long kDefaultVertexLimit = 1 << 14;

Graph build_hamming(int n, int q, long long vertex_limit = kDefaultVertexLimit);

/// Exact sum over D of omega^{y.x}, reduced modulo the q-th cyclotomic
/// polynomial.
CyclotomicInt character_sum(const std::vector<int>& design, long long y, int n, int q);

/// Exact verdict: every character of Hamming weight in S sums to zero on D.
/// Stops at the first failing y, recorded as the witness.
Certificate is_phi_design(const std::vector<int>& design, const std::vector<int>& weights, int n,
                          int q);

/// Certificate-free form used by sweeps and the search engine.
bool phi_design_bool(const std::vector<int>& design, const std::vector<int>& weights, int n, int q);

struct CountTable {
  std::vector<int> coords;        // 1-indexed, size t
  std::vector<long long> counts;  // indexed by base-q pattern over coords
};

CountTable count_table(const std::vector<int>& design, const std::vector<int>& coords, int n,
                       int q);

/// Orthogonal array test: (true, lambda) iff every size-t count table is
/// constant, with lambda = |D|/q^t.
std::pair<bool, long long> oa_check(const std::vector<int>& design, int t, int n, int q);

bool divisibility_check(long long design_size, int t, int q);

/// Average of the counting function over every nonempty hyperplane of
/// (Z/qZ)^t equals |D|/q^t, for every coordinate set.
bool hyperplane_average_check(const std::vector<int>& design, int n, int q, int t);

struct EquivalenceReport {
  bool ok = false;
  long long subsets_checked = 0;
  std::string discrepancy;  // empty when ok
};

/// Exhaustive oracle over all nonempty subsets: oa_check, the character
/// design test and the hyperplane averages must agree three ways.
EquivalenceReport oa_design_equivalence(int n, int q, int t,
                                        long long budget = kDefaultSubsetBudget);

bool is_hadamard(const Eigen::MatrixXi& h);
Eigen::MatrixXi sylvester_hadamard(int order);

/// Maps a verified size-(n+1) design of H(n,2), n = 4l-1, to an order-4l
/// Hadamard matrix: digits 0 -> +1, 1 -> -1, plus an all-ones column.
Eigen::MatrixXi design_to_hadamard(const std::vector<int>& design, int n);

/// Reverse conversion: column-negate until the first row is all ones, drop
/// that row, map +1 -> 0, -1 -> 1, read words off the columns. The result is
/// re-verified as a design before returning.
std::vector<int> hadamard_to_design(const Eigen::MatrixXi& h);

/// Records |D| > n and 4 | |D| for a verified design (re-verifies first).
Certificate size_bound_check(const std::vector<int>& design, int n);

std::vector<int> subcube(int n, int q, const std::vector<int>& coords,
                         const std::vector<int>& pattern);

struct MinimalReport {
  bool ok = false;
  std::vector<std::vector<int>> minimal_designs;
  long long designs_found = 0;
  bool union_closure = false;
  std::string detail;
};

/// Brute-force audit that the minimal designs averaging weights {2..n} are
/// exactly the q*n fixed-coordinate subcubes, and every design is a union of
/// them.
MinimalReport minimal_reverse_enumeration(int n, int q, long long budget = kDefaultSubsetBudget);

/// Exact check that D averages every character with weight != n/2 (n even),
/// then audits the constant neighbor count m = n|D|/2^n.
Certificate random_walk_extremal_check(int n, const std::vector<int>& design);

bool random_walk_design_bool(int n, const std::vector<int>& design);

Eigen::MatrixXi radon_kernel(int t, int q);
long long radon_kernel_eigenvalue(const std::vector<int>& y, int q);

/// Coordinate projection as a multiset: counts per word of the smaller cube.
std::vector<long long> project_multiset(const std::vector<int>& design,
                                        const std::vector<int>& coords, int n, int q);

/// Design test for weighted word sets (projections repeat words).
bool phi_design_multiset(const std::vector<long long>& multiset, const std::vector<int>& weights,
                         int m, int q);

}  // namespace gdesign::hamming
