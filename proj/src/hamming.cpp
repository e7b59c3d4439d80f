#include "gdesign/hamming.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gdesign::hamming {

namespace {

long long ipow(int base, int exp) {
  long long r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

void check_nq(int n, int q) {
  if (n < 1) throw std::invalid_argument("hamming: n must be >= 1");
  if (q < 2) throw std::invalid_argument("hamming: q must be >= 2");
}

void check_design(const std::vector<int>& design, int n, int q) {
  if (design.empty()) throw std::invalid_argument("hamming: empty design");
  long long total = ipow(q, n);
  for (int v : design)
    if (v < 0 || v >= total) throw std::invalid_argument("hamming: word index out of range");
}

void check_weights(const std::vector<int>& weights, int n) {
  for (int w : weights)
    if (w < 1 || w > n) throw std::invalid_argument("hamming: weight outside 1..n");
}

/// Zero test for sum_j counts[j] * omega^j with small fast paths.
bool char_sum_zero(const std::vector<long long>& counts, int q) {
  if (q == 2) return counts[0] == counts[1];
  if (q == 4) return counts[0] == counts[2] && counts[1] == counts[3];
  bool prime = true;
  for (int p = 2; p * p <= q; ++p)
    if (q % p == 0) {
      prime = false;
      break;
    }
  if (prime) {
    for (int j = 1; j < q; ++j)
      if (counts[j] != counts[0]) return false;
    return true;
  }
  std::vector<BigInt> big(counts.begin(), counts.end());
  return cyclo_from_power_sums(q, big).is_zero();
}

std::vector<int> weights_upto(int t) {
  std::vector<int> s(t);
  std::iota(s.begin(), s.end(), 1);
  return s;
}

}  // namespace

std::vector<int> word_digits(long long index, int n, int q) {
  std::vector<int> digits(n);
  for (int i = n - 1; i >= 0; --i) {
    digits[i] = static_cast<int>(index % q);
    index /= q;
  }
  return digits;
}

long long word_index(const std::vector<int>& digits, int q) {
  long long idx = 0;
  for (int d : digits) {
    if (d < 0 || d >= q) throw std::invalid_argument("word_index: digit out of range");
    idx = idx * q + d;
  }
  return idx;
}

std::string word_to_string(long long index, int n, int q) {
  if (q > 10) throw std::invalid_argument("word_to_string: q > 10 unsupported");
  auto digits = word_digits(index, n, q);
  std::string s(n, '0');
  for (int i = 0; i < n; ++i) s[i] = static_cast<char>('0' + digits[i]);
  return s;
}

long long parse_word(const std::string& text, int n, int q) {
  if (static_cast<int>(text.size()) != n)
    throw std::invalid_argument("parse_word: expected " + std::to_string(n) + " digits");
  std::vector<int> digits(n);
  for (int i = 0; i < n; ++i) {
    if (text[i] < '0' || text[i] > '9') throw std::invalid_argument("parse_word: bad digit");
    digits[i] = text[i] - '0';
    if (digits[i] >= q) throw std::invalid_argument("parse_word: digit exceeds q-1");
  }
  return word_index(digits, q);
}

int word_weight(long long index, int n, int q) {
  int w = 0;
  for (int i = 0; i < n; ++i) {
    if (index % q != 0) ++w;
    index /= q;
  }
  return w;
}

int word_dot(long long y, long long x, int n, int q) {
  long long acc = 0;
  for (int i = 0; i < n; ++i) {
    acc += (y % q) * (x % q);
    y /= q;
    x /= q;
  }
  return static_cast<int>(acc % q);
}

Graph build_hamming(int n, int q, long long vertex_limit) {
  check_nq(n, q);
  long long total = 1;
  for (int i = 0; i < n; ++i) {
    total *= q;
    if (total > vertex_limit) throw std::invalid_argument("build_hamming: size limit exceeded");
  }
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<size_t>(total) * n * (q - 1) / 2);
  for (long long x = 0; x < total; ++x) {
    long long place = 1;
    for (int i = 0; i < n; ++i) {
      int digit = static_cast<int>((x / place) % q);
      for (int d = digit + 1; d < q; ++d)
        edges.emplace_back(static_cast<int>(x), static_cast<int>(x + (d - digit) * place));
      place *= q;
    }
  }
  return Graph(static_cast<int>(total), edges, HammingFamily{n, q});
}

CyclotomicInt character_sum(const std::vector<int>& design, long long y, int n, int q) {
  std::vector<BigInt> counts(q, BigInt(0));
  for (int x : design) ++counts[word_dot(y, x, n, q)];
  return cyclo_from_power_sums(q, counts);
}

bool phi_design_bool(const std::vector<int>& design, const std::vector<int>& weights, int n,
                     int q) {
  check_design(design, n, q);
  check_weights(weights, n);
  long long total = ipow(q, n);
  std::vector<long long> counts(q);
  for (long long y = 0; y < total; ++y) {
    int w = word_weight(y, n, q);
    if (std::find(weights.begin(), weights.end(), w) == weights.end()) continue;
    std::fill(counts.begin(), counts.end(), 0);
    for (int x : design) ++counts[word_dot(y, x, n, q)];
    if (!char_sum_zero(counts, q)) return false;
  }
  return true;
}

Certificate is_phi_design(const std::vector<int>& design, const std::vector<int>& weights, int n,
                          int q) {
  check_design(design, n, q);
  check_weights(weights, n);
  std::ostringstream sel;
  sel << "hamming n=" << n << " q=" << q << " phi-weights [";
  for (size_t i = 0; i < weights.size(); ++i) sel << (i ? "," : "") << weights[i];
  sel << "] design-size " << design.size();
  Certificate cert(sel.str());

  std::vector<int> sorted_weights(weights);
  std::sort(sorted_weights.begin(), sorted_weights.end());
  long long total = ipow(q, n);
  bool ok = true;
  std::vector<long long> counts(q);
  for (int w : sorted_weights) {
    long long tested = 0;
    for (long long y = 0; y < total && ok; ++y) {
      if (word_weight(y, n, q) != w) continue;
      ++tested;
      std::fill(counts.begin(), counts.end(), 0);
      for (int x : design) ++counts[word_dot(y, x, n, q)];
      if (!char_sum_zero(counts, q)) {
        ok = false;
        std::vector<BigInt> big(counts.begin(), counts.end());
        cert.add_residual("weight-" + std::to_string(w),
                          "nonzero at y=" + word_to_string(y, n, q) + " sum " +
                              cyclo_from_power_sums(q, big).to_string());
        cert.set_counterexample("y=" + word_to_string(y, n, q));
      }
    }
    if (ok) cert.add_residual("weight-" + std::to_string(w),
                              "exact-zero (" + std::to_string(tested) + " characters)");
    if (!ok) break;
  }
  cert.set_verdict(ok);
  return cert;
}

CountTable count_table(const std::vector<int>& design, const std::vector<int>& coords, int n,
                       int q) {
  int t = static_cast<int>(coords.size());
  if (t > n) throw std::invalid_argument("count_table: more coordinates than n");
  for (int c : coords)
    if (c < 1 || c > n) throw std::invalid_argument("count_table: coordinate outside 1..n");
  CountTable table{coords, std::vector<long long>(ipow(q, t), 0)};
  for (int x : design) {
    auto digits = word_digits(x, n, q);
    long long pattern = 0;
    for (int c : coords) pattern = pattern * q + digits[c - 1];
    ++table.counts[pattern];
  }
  return table;
}

std::pair<bool, long long> oa_check(const std::vector<int>& design, int t, int n, int q) {
  if (t < 1 || t > n) throw std::invalid_argument("oa_check: t outside 1..n");
  long long cells = ipow(q, t);
  long long size = static_cast<long long>(design.size());
  if (size % cells != 0) return {false, -1};
  long long lambda = size / cells;
  std::vector<int> coords(t);
  std::iota(coords.begin(), coords.end(), 1);
  while (true) {
    CountTable table = count_table(design, coords, n, q);
    for (long long c : table.counts)
      if (c != lambda) return {false, -1};
    // next combination in lexicographic order
    int i = t - 1;
    while (i >= 0 && coords[i] == n - t + i + 1) --i;
    if (i < 0) break;
    ++coords[i];
    for (int j = i + 1; j < t; ++j) coords[j] = coords[j - 1] + 1;
  }
  return {true, lambda};
}

bool divisibility_check(long long design_size, int t, int q) {
  return design_size % ipow(q, t) == 0;
}

bool hyperplane_average_check(const std::vector<int>& design, int n, int q, int t) {
  if (t < 1 || t > n) throw std::invalid_argument("hyperplane_average_check: t outside 1..n");
  long long cells = ipow(q, t);
  long long size = static_cast<long long>(design.size());
  // dot table: dots[b][a] = b.a mod q over (Z/q)^t
  std::vector<std::vector<int>> dots(cells, std::vector<int>(cells));
  for (long long b = 0; b < cells; ++b) {
    auto bdig = word_digits(b, t, q);
    for (long long a = 0; a < cells; ++a) {
      auto adig = word_digits(a, t, q);
      long long dot = 0;
      for (int i = 0; i < t; ++i) dot += static_cast<long long>(bdig[i]) * adig[i];
      dots[b][a] = static_cast<int>(dot % q);
    }
  }
  std::vector<int> coords(t);
  std::iota(coords.begin(), coords.end(), 1);
  while (true) {
    CountTable table = count_table(design, coords, n, q);
    for (long long b = 1; b < cells; ++b) {
      for (int c = 0; c < q; ++c) {
        long long hyper_size = 0, hyper_sum = 0;
        for (long long a = 0; a < cells; ++a) {
          if (dots[b][a] == c) {
            ++hyper_size;
            hyper_sum += table.counts[a];
          }
        }
        if (hyper_size == 0) continue;
        // average over the hyperplane must equal |D| / q^t
        if (hyper_sum * cells != size * hyper_size) return false;
      }
    }
    int i = t - 1;
    while (i >= 0 && coords[i] == n - t + i + 1) --i;
    if (i < 0) break;
    ++coords[i];
    for (int j = i + 1; j < t; ++j) coords[j] = coords[j - 1] + 1;
  }
  return true;
}

EquivalenceReport oa_design_equivalence(int n, int q, int t, long long budget) {
  check_nq(n, q);
  long long total = ipow(q, n);
  if (total > 62) throw std::invalid_argument("oa_design_equivalence: universe too large");
  long long subsets = (1LL << total) - 1;
  if (subsets > budget)
    throw BudgetExceeded("oa_design_equivalence: " + std::to_string(subsets) + " subsets exceed budget");

  auto upto = weights_upto(t);
  EquivalenceReport report;
  std::vector<int> design;
  design.reserve(total);
  for (long long mask = 1; mask <= subsets; ++mask) {
    design.clear();
    for (int v = 0; v < total; ++v)
      if (mask & (1LL << v)) design.push_back(v);
    bool oa = oa_check(design, t, n, q).first;
    bool phi = phi_design_bool(design, upto, n, q);
    bool hyper = hyperplane_average_check(design, n, q, t);
    if (oa != phi || phi != hyper) {
      std::ostringstream os;
      os << "disagreement at subset {";
      for (size_t i = 0; i < design.size(); ++i)
        os << (i ? "," : "") << word_to_string(design[i], n, q);
      os << "}: oa=" << oa << " phi=" << phi << " hyperplane=" << hyper;
      report.discrepancy = os.str();
      report.subsets_checked = mask;
      return report;
    }
  }
  report.ok = true;
  report.subsets_checked = subsets;
  return report;
}

bool is_hadamard(const Eigen::MatrixXi& h) {
  if (h.rows() != h.cols() || h.rows() == 0) return false;
  int m = static_cast<int>(h.rows());
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (h(i, j) != 1 && h(i, j) != -1) return false;
  Eigen::MatrixXi gram = h * h.transpose();
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (gram(i, j) != (i == j ? m : 0)) return false;
  return true;
}

Eigen::MatrixXi sylvester_hadamard(int order) {
  if (order < 1 || (order & (order - 1)) != 0)
    throw std::invalid_argument("sylvester_hadamard: order must be a power of 2");
  Eigen::MatrixXi h(1, 1);
  h(0, 0) = 1;
  while (h.rows() < order) {
    int m = static_cast<int>(h.rows());
    Eigen::MatrixXi next(2 * m, 2 * m);
    next.topLeftCorner(m, m) = h;
    next.topRightCorner(m, m) = h;
    next.bottomLeftCorner(m, m) = h;
    next.bottomRightCorner(m, m) = -h;
    h = std::move(next);
  }
  return h;
}

Eigen::MatrixXi design_to_hadamard(const std::vector<int>& design, int n) {
  if (n % 4 != 3) throw std::invalid_argument("design_to_hadamard: n must be 4l-1");
  long long order = n + 1;
  if (static_cast<long long>(design.size()) != order)
    throw std::invalid_argument("design_to_hadamard: design size must be n+1");
  if (!phi_design_bool(design, {1, 2}, n, 2))
    throw std::invalid_argument("design_to_hadamard: input is not a weight-{1,2} design");
  Eigen::MatrixXi h(order, order);
  for (long long r = 0; r < order; ++r) {
    auto digits = word_digits(design[r], n, 2);
    for (int c = 0; c < n; ++c) h(r, c) = digits[c] == 0 ? 1 : -1;
    h(r, n) = 1;
  }
  if (!is_hadamard(h)) throw std::logic_error("design_to_hadamard: conversion failed");
  return h;
}

std::vector<int> hadamard_to_design(const Eigen::MatrixXi& h) {
  if (!is_hadamard(h)) throw std::invalid_argument("hadamard_to_design: input is not Hadamard");
  int m = static_cast<int>(h.rows());
  if (m % 4 != 0 || m < 4)
    throw std::invalid_argument("hadamard_to_design: order must be 4l with l >= 1");
  Eigen::MatrixXi work = h;
  for (int c = 0; c < m; ++c)
    if (work(0, c) == -1) work.col(c) *= -1;
  int n = m - 1;
  std::vector<int> design(m);
  for (int c = 0; c < m; ++c) {
    std::vector<int> digits(n);
    for (int r = 1; r < m; ++r) digits[r - 1] = work(r, c) == 1 ? 0 : 1;
    design[c] = static_cast<int>(word_index(digits, 2));
  }
  std::sort(design.begin(), design.end());
  if (std::adjacent_find(design.begin(), design.end()) != design.end())
    throw std::logic_error("hadamard_to_design: repeated word");
  if (!phi_design_bool(design, {1, 2}, n, 2))
    throw std::logic_error("hadamard_to_design: output fails the design test");
  return design;
}

Certificate size_bound_check(const std::vector<int>& design, int n) {
  Certificate cert("hamming n=" + std::to_string(n) +
                   " q=2 weight-{1,2} size bounds, design-size " + std::to_string(design.size()));
  bool verified = phi_design_bool(design, {1, 2}, n, 2);
  cert.add_fact("design-verified", verified ? "true" : "false");
  if (!verified) {
    cert.set_verdict(false);
    cert.set_counterexample("input is not a weight-{1,2} design; bounds not applicable");
    return cert;
  }
  long long size = static_cast<long long>(design.size());
  bool gt = size > n;
  bool div4 = size % 4 == 0;
  cert.add_fact("size-exceeds-n", std::to_string(size) + " > " + std::to_string(n) +
                                      (gt ? " holds" : " fails"));
  cert.add_fact("divisible-by-4", std::to_string(size) + (div4 ? " divisible" : " not divisible"));
  cert.set_verdict(gt && div4);
  return cert;
}

std::vector<int> subcube(int n, int q, const std::vector<int>& coords,
                         const std::vector<int>& pattern) {
  check_nq(n, q);
  if (coords.size() != pattern.size())
    throw std::invalid_argument("subcube: coords/pattern size mismatch");
  if (static_cast<int>(coords.size()) >= n)
    throw std::invalid_argument("subcube: need |I| < n");
  for (int c : coords)
    if (c < 1 || c > n) throw std::invalid_argument("subcube: coordinate outside 1..n");
  long long total = ipow(q, n);
  std::vector<int> result;
  for (long long x = 0; x < total; ++x) {
    auto digits = word_digits(x, n, q);
    bool match = true;
    for (size_t i = 0; i < coords.size() && match; ++i)
      if (digits[coords[i] - 1] != pattern[i]) match = false;
    if (match) result.push_back(static_cast<int>(x));
  }
  return result;
}

MinimalReport minimal_reverse_enumeration(int n, int q, long long budget) {
  check_nq(n, q);
  long long total = ipow(q, n);
  if (total > 62) throw std::invalid_argument("minimal_reverse_enumeration: universe too large");
  long long subsets = (1LL << total) - 1;
  if (subsets > budget) throw BudgetExceeded("minimal_reverse_enumeration: budget exceeded");

  std::vector<int> reverse_weights;
  for (int w = 2; w <= n; ++w) reverse_weights.push_back(w);

  std::vector<long long> design_masks;
  std::vector<int> design;
  for (long long mask = 1; mask <= subsets; ++mask) {
    design.clear();
    for (int v = 0; v < total; ++v)
      if (mask & (1LL << v)) design.push_back(v);
    if (reverse_weights.empty() || phi_design_bool(design, reverse_weights, n, q))
      design_masks.push_back(mask);
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

  // Expected minimals: the q*n fixed-coordinate subcubes.
  std::vector<long long> expected;
  for (int c = 1; c <= n; ++c)
    for (int a = 0; a < q; ++a) {
      long long mask = 0;
      for (int v : subcube(n, q, {c}, {a})) mask |= 1LL << v;
      expected.push_back(mask);
    }
  std::sort(expected.begin(), expected.end());
  expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
  std::sort(minimal_masks.begin(), minimal_masks.end());

  report.ok = minimal_masks == expected;
  if (!report.ok) report.detail = "minimal designs differ from the fixed-coordinate subcubes";

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

bool random_walk_design_bool(int n, const std::vector<int>& design) {
  if (n % 2 != 0) throw std::invalid_argument("random_walk: n must be even");
  check_design(design, n, 2);
  long long total = 1LL << n;
  for (long long y = 1; y < total; ++y) {
    if (word_weight(y, n, 2) == n / 2) continue;
    long long sum = 0;
    for (int x : design) sum += (__builtin_popcountll(y & x) & 1) ? -1 : 1;
    if (sum != 0) return false;
  }
  return true;
}

Certificate random_walk_extremal_check(int n, const std::vector<int>& design) {
  if (n % 2 != 0) throw std::invalid_argument("random_walk_extremal_check: n must be even");
  check_design(design, n, 2);
  Certificate cert("hamming n=" + std::to_string(n) +
                   " q=2 random-walk extremal (all weights except n/2), design-size " +
                   std::to_string(design.size()));
  long long total = 1LL << n;
  bool ok = true;
  for (long long y = 1; y < total && ok; ++y) {
    if (word_weight(y, n, 2) == n / 2) continue;
    long long sum = 0;
    for (int x : design) sum += (__builtin_popcountll(y & x) & 1) ? -1 : 1;
    if (sum != 0) {
      ok = false;
      cert.add_residual("character", "nonzero at y=" + word_to_string(y, n, 2) + " sum " +
                                         std::to_string(sum));
      cert.set_counterexample("y=" + word_to_string(y, n, 2));
    }
  }
  if (ok) cert.add_residual("all-weights-but-middle", "exact-zero");

  long long m_num = static_cast<long long>(n) * design.size();
  bool divides = ok && m_num % total == 0;
  long long m = divides ? m_num / total : -1;
  if (ok) {
    cert.add_fact("neighbor-count-integral",
                  divides ? "m = " + std::to_string(m) : "n|D|/2^n not an integer");
    if (!divides || m <= 0) ok = false;
  }
  if (ok) {
    std::vector<char> in_design(total, 0);
    for (int v : design) in_design[v] = 1;
    for (long long v = 0; v < total && ok; ++v) {
      long long count = 0;
      for (int b = 0; b < n; ++b) count += in_design[v ^ (1LL << b)];
      if (count != m) {
        ok = false;
        cert.set_counterexample("vertex " + word_to_string(v, n, 2) + " has " +
                                std::to_string(count) + " design neighbors, expected " +
                                std::to_string(m));
      }
    }
    if (ok) cert.add_fact("uniform-neighbor-count", "every vertex sees exactly " +
                                                        std::to_string(m) + " design vertices");
  }
  cert.set_verdict(ok);
  return cert;
}

Eigen::MatrixXi radon_kernel(int t, int q) {
  if (t < 1) throw std::invalid_argument("radon_kernel: t must be >= 1");
  long long cells = ipow(q, t);
  if (cells > 4096) throw std::invalid_argument("radon_kernel: size limit exceeded");
  long long scale = ipow(q, t - 1);
  Eigen::MatrixXi k(cells, cells);
  for (long long a_star = 0; a_star < cells; ++a_star) {
    auto sd = word_digits(a_star, t, q);
    for (long long a = 0; a < cells; ++a) {
      auto ad = word_digits(a, t, q);
      long long g = q;
      for (int i = 0; i < t; ++i) g = std::gcd(g, static_cast<long long>((sd[i] - ad[i] + q) % q));
      k(a_star, a) = static_cast<int>(g * scale);
    }
  }
  return k;
}

long long radon_kernel_eigenvalue(const std::vector<int>& y, int q) {
  int t = static_cast<int>(y.size());
  if (t < 1) throw std::invalid_argument("radon_kernel_eigenvalue: empty y");
  long long g = q;
  for (int d : y) g = std::gcd(g, static_cast<long long>(((d % q) + q) % q));
  long long result = 0;
  for (long long qp = 1; qp <= g; ++qp) {
    if (g % qp != 0) continue;
    result += static_cast<long long>(euler_phi(static_cast<int>(q / qp))) * ipow(static_cast<int>(qp), t);
  }
  return result * ipow(q, t - 1);
}

std::vector<long long> project_multiset(const std::vector<int>& design,
                                        const std::vector<int>& coords, int n, int q) {
  int m = static_cast<int>(coords.size());
  for (int c : coords)
    if (c < 1 || c > n) throw std::invalid_argument("project_multiset: coordinate outside 1..n");
  std::vector<long long> counts(ipow(q, m), 0);
  for (int x : design) {
    auto digits = word_digits(x, n, q);
    long long pattern = 0;
    for (int c : coords) pattern = pattern * q + digits[c - 1];
    ++counts[pattern];
  }
  return counts;
}

bool phi_design_multiset(const std::vector<long long>& multiset, const std::vector<int>& weights,
                         int m, int q) {
  check_weights(weights, m);
  long long total = ipow(q, m);
  if (static_cast<long long>(multiset.size()) != total)
    throw std::invalid_argument("phi_design_multiset: multiset length mismatch");
  std::vector<long long> counts(q);
  for (long long y = 0; y < total; ++y) {
    int w = word_weight(y, m, q);
    if (std::find(weights.begin(), weights.end(), w) == weights.end()) continue;
    std::fill(counts.begin(), counts.end(), 0);
    for (long long x = 0; x < total; ++x)
      if (multiset[x] != 0) counts[word_dot(y, x, m, q)] += multiset[x];
    if (!char_sum_zero(counts, q)) return false;
  }
  return true;
}

}  // namespace gdesign::hamming
