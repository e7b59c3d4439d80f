#include <random>
#include <sstream>

#include "doctest.h"
#include "gdesign/graph.hpp"
#include "gdesign/hamming.hpp"
#include "gdesign/spectra.hpp"

using namespace gdesign;

namespace {

Graph cycle(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

Graph complete(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph(n, edges);
}

// (-1)^{y.x} over the n-cube as an exact vector
std::vector<Rational> cube_character(int n, long long y) {
  std::vector<Rational> v(1LL << n);
  for (long long x = 0; x < (1LL << n); ++x)
    v[x] = (__builtin_popcountll(y & x) & 1) ? Rational(-1) : Rational(1);
  return v;
}

SpectrumSketch cube3_sketch() {
  SpectrumSketch s;
  s.source = MatrixSource::laplacian;
  s.entries = {{Rational(0), 1}, {Rational(2), 3}, {Rational(4), 3}, {Rational(6), 1}};
  return s;
}

}  // namespace

// ---- exact Laplacian action oracle ----

TEST_CASE("cube characters are exact Laplacian eigenvectors") {
  Graph g = hamming::build_hamming(3, 2);
  for (long long y = 0; y < 8; ++y) {
    auto v = cube_character(3, y);
    auto lv = laplacian_apply(g, v);
    Rational lambda(2 * hamming::word_weight(y, 3, 2));
    for (int x = 0; x < 8; ++x) CHECK(lv[x] == lambda * v[x]);
  }
}

TEST_CASE("laplacian and adjacency apply agree with dense matrices") {
  Graph g = cycle(5);
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(-1, 1);
  Eigen::MatrixXd L = laplacian_matrix(g), A = adjacency_matrix(g);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> v(5);
    Eigen::VectorXd ve(5);
    for (int i = 0; i < 5; ++i) ve(i) = v[i] = u(rng);
    auto lv = laplacian_apply(g, v);
    auto av = adjacency_apply(g, v);
    Eigen::VectorXd le = L * ve, ae = A * ve;
    for (int i = 0; i < 5; ++i) {
      CHECK(lv[i] == doctest::Approx(le(i)).epsilon(1e-12));
      CHECK(av[i] == doctest::Approx(ae(i)).epsilon(1e-12));
    }
  }
}

// ---- dense spectra ----

TEST_CASE("known spectra") {
  DenseSpectrum c4 = dense_spectrum(cycle(4));
  double expect_c4[] = {0, 2, 2, 4};
  for (int i = 0; i < 4; ++i) CHECK(c4.eigenvalues(i) == doctest::Approx(expect_c4[i]).epsilon(1e-9));

  DenseSpectrum cube = dense_spectrum(hamming::build_hamming(3, 2));
  double expect_cube[] = {0, 2, 2, 2, 4, 4, 4, 6};
  for (int i = 0; i < 8; ++i)
    CHECK(cube.eigenvalues(i) == doctest::Approx(expect_cube[i]).epsilon(1e-9));
  auto clusters = cube.clusters();
  REQUIRE(clusters.size() == 4);
  CHECK(clusters[1] == std::pair<int, int>(1, 4));
  CHECK(clusters[2] == std::pair<int, int>(4, 7));

  DenseSpectrum c4a = dense_spectrum(cycle(4), MatrixSource::adjacency);
  double expect_c4a[] = {-2, 0, 0, 2};
  for (int i = 0; i < 4; ++i)
    CHECK(c4a.eigenvalues(i) == doctest::Approx(expect_c4a[i]).epsilon(1e-9));
}

TEST_CASE("dense spectrum basis is orthonormal, genuine and reproducible") {
  Graph g = hamming::build_hamming(3, 2);
  DenseSpectrum a = dense_spectrum(g), b = dense_spectrum(g);
  CHECK((a.vectors - b.vectors).norm() == 0.0);
  CHECK((a.eigenvalues - b.eigenvalues).norm() == 0.0);
  Eigen::MatrixXd gram = a.vectors.transpose() * a.vectors;
  CHECK((gram - Eigen::MatrixXd::Identity(8, 8)).norm() < 1e-10);
  Eigen::MatrixXd L = laplacian_matrix(g);
  CHECK((L * a.vectors - a.vectors * a.eigenvalues.asDiagonal()).norm() < 1e-8);
}

TEST_CASE("sketch matches dense spectrum") {
  Graph g = hamming::build_hamming(3, 2);
  CHECK(sketch_matches_graph(g, cube3_sketch()));
  SpectrumSketch wrong = cube3_sketch();
  wrong.entries[3].value = Rational(5);
  CHECK_FALSE(sketch_matches_graph(g, wrong));
}

TEST_CASE("sketch validation") {
  SpectrumSketch s = cube3_sketch();
  CHECK_NOTHROW(s.validate(8));
  CHECK_THROWS(s.validate(9));  // multiplicities must sum to n
  SpectrumSketch unsorted = s;
  std::swap(unsorted.entries[1], unsorted.entries[2]);
  CHECK_THROWS(unsorted.validate(8));
  SpectrumSketch zero_mult = s;
  zero_mult.entries[0].multiplicity = 0;
  CHECK_THROWS(zero_mult.validate(8));
}

// ---- averaging: float definition vs exact sum, all subsets ----

TEST_CASE("float averaging agrees with exact zero-sum over every subset") {
  Graph g = hamming::build_hamming(3, 2);
  for (long long y : {1LL, 3LL, 7LL}) {
    auto exact = cube_character(3, y);
    Eigen::VectorXd phi(8);
    for (int x = 0; x < 8; ++x) phi(x) = exact[x].to_double();
    for (int mask = 1; mask < 256; ++mask) {
      std::vector<int> design;
      for (int v = 0; v < 8; ++v)
        if (mask & (1 << v)) design.push_back(v);
      CHECK(averages(g, phi, design, kFloatAveragingTol) ==
            averages_sum_zero(exact, design));
    }
  }
}

TEST_CASE("averaging residual separates designs from non-designs") {
  Graph g = hamming::build_hamming(3, 2);
  DenseSpectrum spec = dense_spectrum(g);
  std::vector<int> d2 = {0, 3, 5, 6}, d1 = {0, 7};
  CHECK(averaging_residual(spec, 1, 4, d2) < kFloatAveragingTol);
  CHECK(averaging_residual(spec, 4, 7, d2) < kFloatAveragingTol);
  CHECK(averaging_residual(spec, 1, 4, d1) < kFloatAveragingTol);
  CHECK(averaging_residual(spec, 4, 7, d1) > 1e-3);
}

TEST_CASE("averages rejects empty design") {
  Graph g = cycle(4);
  Eigen::VectorXd phi = Eigen::VectorXd::Zero(4);
  CHECK_THROWS(averages(g, phi, {}, kFloatAveragingTol));
}

// ---- exact eigenspace projectors ----

TEST_CASE("lagrange projectors resolve the identity and commute with L") {
  Graph g = hamming::build_hamming(3, 2);
  SpectrumSketch sketch = cube3_sketch();
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> entry(-5, 5);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Rational> x(8);
    for (auto& e : x) e = Rational(entry(rng), 1 + (trial % 3));
    std::vector<Rational> total(8, Rational(0));
    for (int ell = 0; ell < 4; ++ell) {
      auto w = lagrange_eigenspace_project(g, sketch, ell, x);
      // w lies in the eigenspace: L w = lambda_ell w, exactly
      auto lw = laplacian_apply(g, w);
      for (int i = 0; i < 8; ++i) CHECK(lw[i] == sketch.entries[ell].value * w[i]);
      // idempotent
      auto ww = lagrange_eigenspace_project(g, sketch, ell, w);
      CHECK(ww == w);
      // orthogonal to the other projectors
      for (int m = 0; m < 4; ++m) {
        if (m == ell) continue;
        auto zero = lagrange_eigenspace_project(g, sketch, m, w);
        for (const auto& e : zero) CHECK(e.is_zero());
      }
      for (int i = 0; i < 8; ++i) total[i] += w[i];
    }
    CHECK(total == x);
  }
}

TEST_CASE("projector design verdicts on the cube examples") {
  Graph g = hamming::build_hamming(3, 2);
  SpectrumSketch sketch = cube3_sketch();
  std::vector<int> d1 = {0, 7}, d2 = {0, 3, 5, 6};

  Certificate c1 = is_design_by_projectors(g, sketch, {1}, d1);
  CHECK(c1.verdict());
  Certificate c1bad = is_design_by_projectors(g, sketch, {1, 2}, d1);
  CHECK_FALSE(c1bad.verdict());
  CHECK(c1bad.counterexample().has_value());
  Certificate c2 = is_design_by_projectors(g, sketch, {1, 2}, d2);
  CHECK(c2.verdict());
  for (const auto& [name, value] : c2.residuals()) CHECK(value == "exact-zero");

  // byte-stable certificates
  CHECK(c2.to_text() == is_design_by_projectors(g, sketch, {1, 2}, d2).to_text());
  CHECK(c2.to_text().rfind("certificate-version: 1\nselector: ", 0) == 0);
  CHECK(c2.to_text().find("verdict: true") != std::string::npos);
}

// ---- graph construction and file format ----

TEST_CASE("construction validates input") {
  CHECK_THROWS(Graph(3, {{0, 0}}));                  // loop
  CHECK_THROWS(Graph(3, {{0, 1}, {1, 0}, {1, 2}}));  // parallel edge
  CHECK_THROWS(Graph(3, {{0, 3}, {0, 1}, {1, 2}}));  // vertex out of range
  CHECK_THROWS(Graph(4, {{0, 1}, {2, 3}}));          // disconnected
  CHECK_NOTHROW(Graph(4, {{0, 1}, {2, 3}}, {}, true));
  Graph g(4, {{0, 1}, {2, 3}}, {}, true);
  CHECK_FALSE(g.is_connected());
}

TEST_CASE("regularity and adjacency queries") {
  Graph cube = hamming::build_hamming(3, 2);
  CHECK(cube.vertex_count() == 8);
  CHECK(cube.edge_count() == 12);
  CHECK(cube.regular_degree() == 3);
  CHECK(cube.adjacent(0, 1));
  CHECK_FALSE(cube.adjacent(0, 3));
  Graph path(3, {{0, 1}, {1, 2}});
  CHECK_FALSE(path.regular_degree().has_value());
}

TEST_CASE("file format round trip preserves structure, family and bytes") {
  Graph g = hamming::build_hamming(3, 2);
  std::ostringstream out;
  g.write(out);
  std::string text = out.str();
  CHECK(text.find("c family hamming 3 2\n") != std::string::npos);
  CHECK(text.find("p 8 12\n") != std::string::npos);

  std::istringstream in(text);
  Graph back = Graph::read(in);
  CHECK(back.vertex_count() == 8);
  CHECK(back.edges() == g.edges());
  CHECK(family_to_string(back.family()) == "hamming 3 2");

  std::ostringstream again;
  back.write(again);
  CHECK(again.str() == text);
}

TEST_CASE("file reader accepts comments and rejects malformed input") {
  std::istringstream ok("c anything here\np 3 2\ne 1 2\ne 2 3\n");
  Graph g = Graph::read(ok);
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(std::holds_alternative<std::monostate>(g.family()));

  std::istringstream bad_count("p 3 2\ne 1 2\n");
  CHECK_THROWS(Graph::read(bad_count));
  std::istringstream bad_vertex("p 2 1\ne 1 3\n");
  CHECK_THROWS(Graph::read(bad_vertex));
  std::istringstream no_header("e 1 2\n");
  CHECK_THROWS(Graph::read(no_header));
}

TEST_CASE("family metadata parse and print") {
  for (const char* text :
       {"hamming 3 2", "johnson 5 2", "cayley 4 2,1,1 3,1", "mycielskian 5", "generic"}) {
    CHECK(family_to_string(parse_family(text)) == text);
  }
  Graph k2(2, {{0, 1}}, JohnsonFamily{2, 1});
  std::ostringstream out;
  k2.write(out);
  CHECK(out.str().find("c family johnson 2 1\n") != std::string::npos);
}

TEST_CASE("design id files are 1-indexed, sorted, deduplicated") {
  std::istringstream in("c design\n3 1 8\n1\n");
  auto ids = read_vertex_ids(in, 8);
  CHECK(ids == std::vector<int>({0, 2, 7}));
  std::istringstream bad("0 1\n");
  CHECK_THROWS(read_vertex_ids(bad, 8));
  std::istringstream big("9\n");
  CHECK_THROWS(read_vertex_ids(big, 8));
}

// ---- small structural utilities ----

TEST_CASE("triangle detection, isomorphism, chromatic number") {
  CHECK(triangle_free(cycle(4)));
  CHECK(triangle_free(cycle(5)));
  CHECK_FALSE(triangle_free(complete(3)));

  Graph relabeled(4, {{2, 3}, {0, 2}, {1, 3}, {0, 1}});
  CHECK(isomorphic(cycle(4), relabeled));
  Graph path(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK_FALSE(isomorphic(cycle(4), path));
  CHECK_FALSE(isomorphic(cycle(4), cycle(5)));

  CHECK(chromatic_number(path) == 2);
  CHECK(chromatic_number(cycle(5)) == 3);
  CHECK(chromatic_number(complete(4)) == 4);
}
