#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <set>

#include "doctest.h"
#include "gdesign/hamming.hpp"
#include "gdesign/spectra.hpp"

using namespace gdesign;
using namespace gdesign::hamming;

namespace {

std::vector<int> words(int n, int q, std::initializer_list<const char*> texts) {
  std::vector<int> out;
  for (const char* t : texts) out.push_back(static_cast<int>(parse_word(t, n, q)));
  return out;
}

const std::vector<int> kD1 = {0, 7};           // {000, 111}
const std::vector<int> kD2 = {0, 3, 5, 6};     // {000, 011, 101, 110}

}  // namespace

// ---- word encoding ----

TEST_CASE("word encoding round trips, first coordinate most significant") {
  CHECK(parse_word("011", 3, 2) == 3);
  CHECK(parse_word("110", 3, 2) == 6);
  CHECK(word_to_string(5, 3, 2) == "101");
  CHECK(word_index({1, 2}, 3) == 5);
  CHECK(word_digits(5, 2, 3) == std::vector<int>({1, 2}));
  for (int q : {2, 3, 4}) {
    for (long long x = 0; x < q * q * q; ++x) {
      CHECK(word_index(word_digits(x, 3, q), q) == x);
      CHECK(parse_word(word_to_string(x, 3, q), 3, q) == x);
    }
  }
  CHECK(word_weight(0, 4, 2) == 0);
  CHECK(word_weight(parse_word("0110", 4, 2), 4, 2) == 2);
  CHECK(word_weight(parse_word("22", 2, 3), 2, 3) == 2);
  CHECK(word_dot(parse_word("110", 3, 2), parse_word("011", 3, 2), 3, 2) == 1);
  CHECK(word_dot(parse_word("12", 2, 3), parse_word("21", 2, 3), 2, 3) == 1);
  CHECK_THROWS(parse_word("02", 2, 2));
  CHECK_THROWS(parse_word("0", 2, 2));
}

// ---- graph construction ----

TEST_CASE("hamming graphs have the right shape") {
  Graph k2 = build_hamming(1, 2);
  CHECK(k2.vertex_count() == 2);
  CHECK(k2.edge_count() == 1);

  Graph h23 = build_hamming(2, 3);
  CHECK(h23.vertex_count() == 9);
  CHECK(h23.regular_degree() == 4);

  Graph cube = build_hamming(3, 2);
  CHECK(cube.vertex_count() == 8);
  CHECK(cube.regular_degree() == 3);
  CHECK(cube.adjacent(0, 4));   // 000-100
  CHECK(cube.adjacent(3, 7));   // 011-111
  CHECK_FALSE(cube.adjacent(0, 3));
  CHECK(family_to_string(cube.family()) == "hamming 3 2");

  CHECK_THROWS(build_hamming(3, 2, 7));  // vertex limit
}

// ---- character sums: paper examples as oracles ----

TEST_CASE("character sums on the cube examples") {
  // full vertex set kills every nonzero character
  std::vector<int> all(8);
  for (int i = 0; i < 8; ++i) all[i] = i;
  for (long long y = 1; y < 8; ++y) CHECK(character_sum(all, y, 3, 2).is_zero());

  CHECK(character_sum(kD2, parse_word("110", 3, 2), 3, 2).is_zero());
  CHECK_FALSE(character_sum(kD1, parse_word("011", 3, 2), 3, 2).is_zero());
  // {000,111} against weight-1 characters: 1 + (-1) = 0
  CHECK(character_sum(kD1, parse_word("100", 3, 2), 3, 2).is_zero());
}

TEST_CASE("design verdicts on the cube examples") {
  CHECK(phi_design_bool(kD1, {1}, 3, 2));
  CHECK_FALSE(phi_design_bool(kD1, {1, 2}, 3, 2));
  CHECK(phi_design_bool(kD2, {1, 2}, 3, 2));

  Certificate c = is_phi_design(kD1, {1, 2}, 3, 2);
  CHECK_FALSE(c.verdict());
  REQUIRE(c.counterexample().has_value());
  // witness must be a weight-2 character
  std::string w = c.counterexample()->substr(2);
  CHECK(word_weight(parse_word(w, 3, 2), 3, 2) == 2);

  Certificate good = is_phi_design(kD2, {1, 2}, 3, 2);
  CHECK(good.verdict());
  CHECK(good.to_text() == is_phi_design(kD2, {1, 2}, 3, 2).to_text());
  CHECK_THROWS(is_phi_design({}, {1}, 3, 2));
}

TEST_CASE("character sums match float evaluation on random pairs") {
  std::mt19937 rng(424242);
  for (int trial = 0; trial < 1000; ++trial) {
    int q = 2 + trial % 5;
    int n = 1 + (trial / 5) % 4;
    long long total = 1;
    for (int i = 0; i < n; ++i) total *= q;
    std::uniform_int_distribution<long long> pick(0, total - 1);
    std::set<int> dset;
    int size = 1 + static_cast<int>(trial % std::min<long long>(7, total));
    while (static_cast<int>(dset.size()) < size) dset.insert(static_cast<int>(pick(rng)));
    std::vector<int> design(dset.begin(), dset.end());
    long long y = pick(rng);
    std::complex<double> direct(0, 0);
    for (int x : design) {
      double angle = 2.0 * std::numbers::pi * word_dot(y, x, n, q) / q;
      direct += std::complex<double>(std::cos(angle), std::sin(angle));
    }
    CHECK(std::abs(character_sum(design, y, n, q).to_complex() - direct) < 1e-9);
  }
}

// ---- counting tables and orthogonal arrays ----

TEST_CASE("count tables on the cube examples") {
  CountTable t2 = count_table(kD2, {1, 2}, 3, 2);
  CHECK(t2.counts == std::vector<long long>({1, 1, 1, 1}));
  CountTable t1 = count_table(kD1, {1, 2}, 3, 2);
  CHECK(t1.counts == std::vector<long long>({1, 0, 0, 1}));
  CountTable empty = count_table({}, {1, 2}, 3, 2);
  CHECK(empty.counts == std::vector<long long>({0, 0, 0, 0}));
}

TEST_CASE("orthogonal array verdicts") {
  auto [ok2, lambda2] = oa_check(kD2, 2, 3, 2);
  CHECK(ok2);
  CHECK(lambda2 == 1);
  auto [ok1, lambda1] = oa_check(kD1, 1, 3, 2);
  CHECK(ok1);
  CHECK(lambda1 == 1);
  CHECK_FALSE(oa_check(kD1, 2, 3, 2).first);
  // full set is an OA of every strength
  std::vector<int> all(8);
  for (int i = 0; i < 8; ++i) all[i] = i;
  for (int t = 1; t <= 3; ++t) {
    auto [ok, lambda] = oa_check(all, t, 3, 2);
    CHECK(ok);
    CHECK(lambda == (8 >> t));
  }
}

TEST_CASE("divisibility necessary condition") {
  CHECK(divisibility_check(4, 2, 2));
  CHECK_FALSE(divisibility_check(2, 2, 2));
  CHECK(divisibility_check(9, 2, 3));
  CHECK(divisibility_check(0, 3, 5));
}

TEST_CASE("hyperplane averages on the cube examples") {
  CHECK(hyperplane_average_check(kD2, 3, 2, 2));
  CHECK_FALSE(hyperplane_average_check(kD1, 3, 2, 2));
  std::vector<int> all(8);
  for (int i = 0; i < 8; ++i) all[i] = i;
  for (int t = 1; t <= 3; ++t) CHECK(hyperplane_average_check(all, 3, 2, t));
}

// ---- the three-way equivalence oracle ----

TEST_CASE("oa / design / hyperplane equivalence, exhaustive" * doctest::timeout(120)) {
  struct Tuple {
    int n, q, t;
    long long subsets;
  };
  const Tuple tuples[] = {{3, 2, 1, 255},  {3, 2, 2, 255},  {3, 2, 3, 255},   {2, 3, 1, 511},
                          {2, 3, 2, 511},  {2, 4, 1, 65535}, {2, 4, 2, 65535}};
  for (const auto& tc : tuples) {
    CAPTURE(tc.n);
    CAPTURE(tc.q);
    CAPTURE(tc.t);
    EquivalenceReport rep = oa_design_equivalence(tc.n, tc.q, tc.t);
    CHECK(rep.ok);
    CHECK(rep.discrepancy.empty());
    CHECK(rep.subsets_checked == tc.subsets);
  }
}

TEST_CASE("equivalence sweep respects its budget") {
  CHECK_THROWS_AS(oa_design_equivalence(2, 4, 1, 1000), BudgetExceeded);
}

// ---- Hadamard pipeline ----

TEST_CASE("sylvester matrices are Hadamard") {
  for (int order : {1, 2, 4, 8, 16}) CHECK(is_hadamard(sylvester_hadamard(order)));
  CHECK_THROWS(sylvester_hadamard(12));
  Eigen::MatrixXi bad = Eigen::MatrixXi::Ones(4, 4);
  CHECK_FALSE(is_hadamard(bad));
  Eigen::MatrixXi h = sylvester_hadamard(4);
  h(2, 2) = -h(2, 2);
  CHECK_FALSE(is_hadamard(h));
}

TEST_CASE("design to Hadamard on the 4-point cube design") {
  Eigen::MatrixXi h = design_to_hadamard(kD2, 3);
  CHECK(h.rows() == 4);
  CHECK(is_hadamard(h));
  CHECK_THROWS(design_to_hadamard(kD1, 3));  // not a design
}

TEST_CASE("hadamard to design and back") {
  // order 4
  std::vector<int> d4 = hadamard_to_design(sylvester_hadamard(4));
  CHECK(d4.size() == 4);
  CHECK(phi_design_bool(d4, {1, 2}, 3, 2));
  CHECK(is_hadamard(design_to_hadamard(d4, 3)));

  // order 8 gives a size-8 design of H(7,2)
  std::vector<int> d8 = hadamard_to_design(sylvester_hadamard(8));
  CHECK(d8.size() == 8);
  CHECK(phi_design_bool(d8, {1, 2}, 7, 2));
  Eigen::MatrixXi h8 = design_to_hadamard(d8, 7);
  CHECK(is_hadamard(h8));
  // and that matrix reads back to the same design
  CHECK(hadamard_to_design(h8) == d8);

  // 2x2 is Hadamard but outside the 4l pipeline
  Eigen::MatrixXi h2(2, 2);
  h2 << 1, 1, 1, -1;
  CHECK(is_hadamard(h2));
  CHECK_THROWS(hadamard_to_design(h2));
}

TEST_CASE("size bounds hold on produced designs") {
  Certificate c = size_bound_check(kD2, 3);
  CHECK(c.verdict());
  Certificate c8 = size_bound_check(hadamard_to_design(sylvester_hadamard(8)), 7);
  CHECK(c8.verdict());
  // non-design input is rejected up front
  Certificate bad = size_bound_check(kD1, 3);
  CHECK_FALSE(bad.verdict());
  CHECK(bad.counterexample().has_value());
}

// ---- reverse order: subcubes and minimal designs ----

TEST_CASE("named subcube examples") {
  auto d = subcube(3, 2, {3}, {0});
  CHECK(d == words(3, 2, {"000", "010", "100", "110"}));
  CHECK(phi_design_bool(d, {2, 3}, 3, 2));
  CHECK_FALSE(phi_design_bool(d, {1}, 3, 2));

  auto d4 = subcube(4, 2, {2, 4}, {0, 0});
  CHECK(d4.size() == 4);
  CHECK(phi_design_bool(d4, {3, 4}, 4, 2));

  auto whole = subcube(3, 2, {}, {});
  CHECK(whole.size() == 8);
}

TEST_CASE("every subcube averages the reverse tail, n <= 4, q <= 3" * doctest::timeout(120)) {
  for (int q = 2; q <= 3; ++q) {
    for (int n = 2; n <= 4; ++n) {
      std::vector<int> tail_all(n);
      for (int i = 0; i < n; ++i) tail_all[i] = i + 1;
      for (int t = 1; t < n; ++t) {
        std::vector<int> tail(tail_all.begin() + t, tail_all.end());
        // all size-t coordinate subsets
        std::vector<int> coords(t);
        for (int i = 0; i < t; ++i) coords[i] = i + 1;
        while (true) {
          long long patterns = 1;
          for (int i = 0; i < t; ++i) patterns *= q;
          for (long long a = 0; a < patterns; ++a) {
            auto pattern = word_digits(a, t, q);
            auto d = subcube(n, q, coords, pattern);
            CAPTURE(n);
            CAPTURE(q);
            CAPTURE(t);
            CHECK(phi_design_bool(d, tail, n, q));
          }
          int i = t - 1;
          while (i >= 0 && coords[i] == n - t + i + 1) --i;
          if (i < 0) break;
          ++coords[i];
          for (int j = i + 1; j < t; ++j) coords[j] = coords[j - 1] + 1;
        }
      }
    }
  }
}

TEST_CASE("minimal designs in reverse order are the fixed-coordinate sets" *
          doctest::timeout(120)) {
  struct Case {
    int n, q, expect;
  };
  for (auto [n, q, expect] : {Case{2, 2, 4}, Case{3, 2, 6}, Case{2, 3, 6}}) {
    MinimalReport rep = minimal_reverse_enumeration(n, q);
    CAPTURE(n);
    CAPTURE(q);
    CHECK(rep.ok);
    CHECK(rep.union_closure);
    CHECK(static_cast<int>(rep.minimal_designs.size()) == expect);
    CHECK(rep.detail.empty());
  }
  CHECK_THROWS_AS(minimal_reverse_enumeration(3, 2, 10), BudgetExceeded);
}

// ---- random walk order ----

TEST_CASE("random walk extremal example on H(4,2)") {
  std::vector<int> d = words(4, 2, {"0000", "0001", "1110", "1111"});
  CHECK(random_walk_design_bool(4, d));
  Certificate c = random_walk_extremal_check(4, d);
  CHECK(c.verdict());
  bool found_m = false;
  for (const auto& [name, value] : c.facts())
    if (name == "neighbor-count-integral") {
      CHECK(value == "m = 1");
      found_m = true;
    }
  CHECK(found_m);

  Certificate single = random_walk_extremal_check(4, {0});
  CHECK_FALSE(single.verdict());
  CHECK_THROWS(random_walk_extremal_check(3, {0}));
}

TEST_CASE("no extremal design of H(4,2) is smaller than 4" * doctest::timeout(120)) {
  // exhaustive over all subsets of size 1..3
  for (int a = 0; a < 16; ++a) {
    CHECK_FALSE(random_walk_design_bool(4, {a}));
    for (int b = a + 1; b < 16; ++b) {
      CHECK_FALSE(random_walk_design_bool(4, {a, b}));
      for (int c = b + 1; c < 16; ++c) CHECK_FALSE(random_walk_design_bool(4, {a, b, c}));
    }
  }
}

// ---- Radon kernel ----

TEST_CASE("radon kernel entries and closed-form eigenvalues") {
  Eigen::MatrixXi k12 = radon_kernel(1, 2);
  CHECK(k12(0, 0) == 2);
  CHECK(k12(0, 1) == 1);
  CHECK(radon_kernel_eigenvalue({0}, 2) == 3);
  CHECK(radon_kernel_eigenvalue({1}, 2) == 1);

  // all-ones vector is the y = 0 eigenvector
  for (int q = 2; q <= 4; ++q)
    for (int t = 1; t <= 2; ++t) {
      Eigen::MatrixXi k = radon_kernel(t, q);
      Eigen::VectorXi ones = Eigen::VectorXi::Ones(k.rows());
      Eigen::VectorXi kv = k * ones;
      long long lambda0 = radon_kernel_eigenvalue(std::vector<int>(t, 0), q);
      for (int i = 0; i < k.rows(); ++i) CHECK(kv(i) == lambda0);
    }
}

TEST_CASE("radon kernel spectrum matches the closed form and is positive") {
  for (int q = 2; q <= 4; ++q)
    for (int t = 1; t <= 2; ++t) {
      CAPTURE(q);
      CAPTURE(t);
      Eigen::MatrixXi k = radon_kernel(t, q);
      long long cells = k.rows();
      // brute-force spectrum
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(k.cast<double>());
      std::vector<double> brute(es.eigenvalues().data(), es.eigenvalues().data() + cells);
      // closed form over all y
      std::vector<double> closed;
      for (long long y = 0; y < cells; ++y) {
        long long lambda = radon_kernel_eigenvalue(word_digits(y, t, q), q);
        CHECK(lambda > 0);
        closed.push_back(static_cast<double>(lambda));
      }
      std::sort(closed.begin(), closed.end());
      for (long long i = 0; i < cells; ++i) {
        CHECK(std::abs(brute[i] - closed[i]) < kRadonTol);
        CHECK(brute[i] > 0);
      }

      // eigenvector check in complex arithmetic: K chi_y = lambda(y) chi_y
      for (long long y = 0; y < cells; ++y) {
        auto ydig = word_digits(y, t, q);
        long long lambda = radon_kernel_eigenvalue(ydig, q);
        for (long long a_star = 0; a_star < cells; ++a_star) {
          std::complex<double> acc(0, 0);
          for (long long a = 0; a < cells; ++a) {
            auto adig = word_digits(a, t, q);
            long long dot = 0;
            for (int i = 0; i < t; ++i) dot += static_cast<long long>(ydig[i]) * adig[i];
            double angle = 2.0 * std::numbers::pi * (dot % q) / q;
            acc += static_cast<double>(k(a_star, a)) *
                   std::complex<double>(std::cos(angle), std::sin(angle));
          }
          auto sdig = word_digits(a_star, t, q);
          long long sdot = 0;
          for (int i = 0; i < t; ++i) sdot += static_cast<long long>(ydig[i]) * sdig[i];
          double angle = 2.0 * std::numbers::pi * (sdot % q) / q;
          std::complex<double> expect =
              static_cast<double>(lambda) * std::complex<double>(std::cos(angle), std::sin(angle));
          CHECK(std::abs(acc - expect) < kRadonTol);
        }
      }
    }
}

// ---- projections of designs ----

TEST_CASE("coordinate projections of designs stay designs, as multisets") {
  // strength-2 design of H(7,2) projected to any 3 coordinates
  std::vector<int> d8 = hadamard_to_design(sylvester_hadamard(8));
  for (std::vector<int> coords : {std::vector<int>{1, 2, 3}, {2, 5, 7}, {1, 4}, {6, 7}}) {
    auto proj = project_multiset(d8, coords, 7, 2);
    CHECK(phi_design_multiset(proj, {1, 2}, static_cast<int>(coords.size()), 2));
  }
  // projection agrees with the counting table
  auto proj = project_multiset(d8, {1, 2, 3}, 7, 2);
  CHECK(proj == count_table(d8, {1, 2, 3}, 7, 2).counts);

  // strength-1 only: projections keep strength 1, can fail strength 2
  auto proj1 = project_multiset(kD1, {1, 2}, 3, 2);
  CHECK(phi_design_multiset(proj1, {1}, 2, 2));
  CHECK_FALSE(phi_design_multiset(proj1, {1, 2}, 2, 2));
}
