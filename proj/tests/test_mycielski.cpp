#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "doctest.h"
#include "gdesign/mycielski.hpp"
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

Graph path3() { return Graph(3, {{0, 1}, {1, 2}}); }

Graph petersen() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph(10, edges);
}

std::string fact_value(const Certificate& cert, const std::string& name) {
  for (const auto& [key, value] : cert.facts())
    if (key == name) return value;
  return "<missing fact: " + name + ">";
}

// Independent recomputation that a lifted pair really is an eigenpair of the
// Mycielskian, exactly over Q[sqrt 5].
void check_lift_exactly(const Graph& base, const LiftedEigenpair& lp) {
  const MycielskiGraph m = mycielskian(base);
  REQUIRE(static_cast<int>(lp.vector.size()) == m.graph.vertex_count());
  const auto image = adjacency_apply<QuadSurd>(m.graph, lp.vector);
  QuadSurd dot_ones(0);
  for (int j = 0; j < m.graph.vertex_count(); ++j) {
    CHECK(image[j] == lp.eigenvalue * lp.vector[j]);
    dot_ones += lp.vector[j];
  }
  CHECK(lp.vector[m.u_index].is_zero());
  CHECK(dot_ones.is_zero());
}

}  // namespace

TEST_CASE("mycielskian of an edge is the five-cycle") {
  const MycielskiGraph m = mycielskian(complete(2));
  CHECK(m.graph.vertex_count() == 5);
  CHECK(m.graph.edge_count() == 5);
  CHECK(m.u_index == 4);
  CHECK(isomorphic(m.graph, cycle(5)));
  const auto* fam = std::get_if<MycielskianFamily>(&m.graph.family());
  REQUIRE(fam != nullptr);
  CHECK(fam->base_n == 2);
}

TEST_CASE("mycielskian of the five-cycle is an 11-vertex triangle-free graph needing 4 colors") {
  const Graph c5 = cycle(5);
  REQUIRE(triangle_free(c5));
  REQUIRE(chromatic_number(c5) == 3);
  const MycielskiGraph m = mycielskian(c5);
  CHECK(m.graph.vertex_count() == 11);
  CHECK(m.graph.edge_count() == 20);
  CHECK(triangle_free(m.graph));
  CHECK(chromatic_number(m.graph) == 4);
  // degree profile: base vertices 2d, shadows d+1, central vertex n
  std::vector<int> degrees;
  for (int v = 0; v < 11; ++v) degrees.push_back(m.graph.degree(v));
  std::sort(degrees.begin(), degrees.end());
  CHECK(degrees == std::vector<int>{3, 3, 3, 3, 3, 4, 4, 4, 4, 4, 5});
}

TEST_CASE("mycielskian vertex layout, edge count, and degrees") {
  for (const Graph& g : {complete(3), cycle(4), complete(4), cycle(6)}) {
    const int n = g.vertex_count();
    const MycielskiGraph m = mycielskian(g);
    CHECK(m.graph.vertex_count() == 2 * n + 1);
    CHECK(m.graph.edge_count() == 3 * g.edge_count() + n);
    CHECK(m.u_index == 2 * n);
    CHECK(m.graph.degree(m.u_index) == n);
    for (int v = 0; v < n; ++v) {
      CHECK(m.graph.degree(v) == 2 * g.degree(v));
      CHECK(m.graph.degree(n + v) == g.degree(v) + 1);
    }
    CHECK(m.base.vertex_count() == n);
  }
}

TEST_CASE("mycielskian adjacency matrix has the block form [[A,A,0],[A,0,1],[0,1,0]]") {
  for (const Graph& g : {complete(3), cycle(4)}) {
    const int n = g.vertex_count();
    const MycielskiGraph m = mycielskian(g);
    const Eigen::MatrixXd a = adjacency_matrix(g);
    const Eigen::MatrixXd big = adjacency_matrix(m.graph);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        CHECK(big(i, j) == a(i, j));
        CHECK(big(i, n + j) == a(i, j));
        CHECK(big(n + i, j) == a(i, j));
        CHECK(big(n + i, n + j) == 0.0);
      }
      CHECK(big(i, 2 * n) == 0.0);
      CHECK(big(n + i, 2 * n) == 1.0);
      CHECK(big(2 * n, n + i) == 1.0);
      CHECK(big(2 * n, i) == 0.0);
    }
    CHECK(big(2 * n, 2 * n) == 0.0);
  }
}

TEST_CASE("mycielskian keeps triangles when the base has them") {
  CHECK_FALSE(triangle_free(mycielskian(complete(3)).graph));
}

TEST_CASE("mycielskian rejects disconnected and edgeless bases") {
  CHECK_THROWS_AS(mycielskian(Graph(4, {{0, 1}, {2, 3}}, {}, true)), std::invalid_argument);
  CHECK_THROWS_AS(mycielskian(Graph(1, {}, {}, true)), std::invalid_argument);
}

TEST_CASE("mycielskian survives a graph-file round trip with its family tag") {
  const MycielskiGraph m = mycielskian(cycle(4));
  std::ostringstream os;
  m.graph.write(os);
  std::istringstream is(os.str());
  const Graph back = Graph::read(is);
  CHECK(back.vertex_count() == m.graph.vertex_count());
  CHECK(back.edge_count() == m.graph.edge_count());
  const auto* fam = std::get_if<MycielskianFamily>(&back.family());
  REQUIRE(fam != nullptr);
  CHECK(fam->base_n == 4);
}

TEST_CASE("golden ratio pair satisfies x^2 = x + 1, phi + phibar = 1, phi*phibar = -1 exactly") {
  const auto [phi, phibar] = golden_ratio();
  CHECK(phi + phibar == QuadSurd(1));
  CHECK(phi * phibar == QuadSurd(-1));
  CHECK(phi * phi == phi + QuadSurd(1));
  CHECK(phibar * phibar == phibar + QuadSurd(1));
  CHECK(phi.to_double() == doctest::Approx(1.6180339887).epsilon(1e-9));
  CHECK(phibar.to_double() == doctest::Approx(-0.6180339887).epsilon(1e-9));
}

TEST_CASE("integer adjacency eigenpairs of small graphs") {
  auto eigenvalues_of = [](const Graph& g) {
    std::vector<Rational> out;
    for (const auto& p : integer_adjacency_eigenpairs(g)) out.push_back(p.eigenvalue);
    return out;
  };

  CHECK(eigenvalues_of(complete(3)) ==
        std::vector<Rational>{Rational(-1), Rational(-1), Rational(2)});
  CHECK(eigenvalues_of(cycle(4)) ==
        std::vector<Rational>{Rational(-2), Rational(0), Rational(0), Rational(2)});
  CHECK(eigenvalues_of(complete(4)) ==
        std::vector<Rational>{Rational(-1), Rational(-1), Rational(-1), Rational(3)});
  CHECK(eigenvalues_of(cycle(6)) == std::vector<Rational>{Rational(-2), Rational(-1), Rational(-1),
                                                          Rational(1), Rational(1), Rational(2)});
  CHECK(eigenvalues_of(petersen()).size() == 10);

  // C_5 has only the trivial integer eigenvalue; its other eigenvalues are
  // quadratic irrationals.
  const auto c5 = integer_adjacency_eigenpairs(cycle(5));
  REQUIRE(c5.size() == 1);
  CHECK(c5[0].eigenvalue == Rational(2));
  for (int i = 1; i < 5; ++i) CHECK(c5[0].vector[i] == c5[0].vector[0]);

  // The 3-vertex path is irregular but still has the integer eigenvalue 0.
  const auto p3 = integer_adjacency_eigenpairs(path3());
  REQUIRE(p3.size() == 1);
  CHECK(p3[0].eigenvalue == Rational(0));
  CHECK(p3[0].vector[1].is_zero());
  CHECK(p3[0].vector[0] == -p3[0].vector[2]);
}

TEST_CASE("integer adjacency eigenpairs satisfy A v = mu v exactly") {
  for (const Graph& g : {complete(4), cycle(6), petersen()}) {
    const auto pairs = integer_adjacency_eigenpairs(g);
    CHECK(static_cast<int>(pairs.size()) == g.vertex_count());  // wholly integral spectra
    for (const auto& p : pairs) {
      const auto image = adjacency_apply<Rational>(g, p.vector);
      for (int i = 0; i < g.vertex_count(); ++i) CHECK(image[i] == p.eigenvalue * p.vector[i]);
    }
  }
}

TEST_CASE("cubic coefficients, rendering, and roots") {
  CHECK(cubic_coefficients(5, 2) == std::array<long long, 4>{1, -2, -9, 10});
  CHECK(cubic_coefficients(2, 1) == std::array<long long, 4>{1, -1, -3, 2});
  CHECK(cubic_to_string(3, 2) == "t^3 - 2t^2 - 7t + 6");
  CHECK(cubic_to_string(2, 1) == "t^3 - t^2 - 3t + 2");
  CHECK(cubic_to_string(5, 2) == "t^3 - 2t^2 - 9t + 10");

  // roots are real, ascending, and sum to d (the t^2 coefficient)
  for (const auto& [n, d] : std::vector<std::pair<int, int>>{{2, 1}, {3, 2}, {4, 2}, {4, 3},
                                                             {5, 2}, {6, 2}, {10, 3}}) {
    const auto roots = cubic_roots(n, d);
    CHECK(roots[0] <= roots[1]);
    CHECK(roots[1] <= roots[2]);
    CHECK(roots[0] + roots[1] + roots[2] == doctest::Approx(d).epsilon(1e-9));
    for (const double r : roots) {
      const double value = r * r * r - d * r * r - (n + d * d) * r + d * n;
      CHECK(std::abs(value) < 1e-7);
    }
  }

  // the five-cycle cubic t^3 - 2t^2 - 9t + 10 has the rational root 1
  const auto grotzsch = cubic_roots(5, 2);
  CHECK(grotzsch[1] == doctest::Approx(1.0).epsilon(1e-10));

  // the edge cubic factors as (t - 2)(t^2 + t - 1): its roots are exactly the
  //  non-principal eigenvalues of the five-cycle plus the degree 2
  const auto edge = cubic_roots(2, 1);
  CHECK(edge[0] == doctest::Approx(-1.6180339887).epsilon(1e-9));
  CHECK(edge[1] == doctest::Approx(0.6180339887).epsilon(1e-9));
  CHECK(edge[2] == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("lifted eigenpairs of the triangle are exact and come in golden/conjugate order") {
  const Graph k3 = complete(3);
  const auto all = integer_adjacency_eigenpairs(k3);
  std::vector<RationalEigenpair> nontrivial;
  for (const auto& p : all)
    if (p.eigenvalue != Rational(2)) nontrivial.push_back(p);
  REQUIRE(nontrivial.size() == 2);

  const auto lifted = lift_eigenpairs(k3, nontrivial);
  REQUIRE(lifted.size() == 4);
  const auto [phi, phibar] = golden_ratio();
  const QuadSurd minus_one(-1);
  for (int k = 0; k < 4; ++k) {
    CHECK(lifted[k].base_eigenvalue == Rational(-1));
    CHECK(lifted[k].golden == (k % 2 == 0));
    CHECK(lifted[k].eigenvalue == (k % 2 == 0 ? phi : phibar) * minus_one);
    check_lift_exactly(k3, lifted[k]);
  }
  // base block is the base eigenvector; shadow block is scaled by the other
  // golden conjugate; central entry is zero
  for (int k = 0; k < 4; ++k) {
    const auto& x = nontrivial[k / 2].vector;
    const QuadSurd scale = lifted[k].golden ? phibar : phi;
    for (int i = 0; i < 3; ++i) {
      CHECK(lifted[k].vector[i] == QuadSurd(x[i], Rational(0)));
      CHECK(lifted[k].vector[3 + i] == -(scale * QuadSurd(x[i], Rational(0))));
    }
  }
}

TEST_CASE("lifted eigenpairs follow the base order and zero base eigenvalues lift to zero") {
  const Graph c4 = cycle(4);
  const auto all = integer_adjacency_eigenpairs(c4);
  std::vector<RationalEigenpair> nontrivial;
  for (const auto& p : all)
    if (p.eigenvalue != Rational(2)) nontrivial.push_back(p);
  REQUIRE(nontrivial.size() == 3);
  CHECK(nontrivial[0].eigenvalue == Rational(-2));

  const auto lifted = lift_eigenpairs(c4, nontrivial);
  REQUIRE(lifted.size() == 6);
  const std::vector<Rational> expected_base = {Rational(-2), Rational(-2), Rational(0),
                                               Rational(0),  Rational(0),  Rational(0)};
  for (int k = 0; k < 6; ++k) {
    CHECK(lifted[k].base_eigenvalue == expected_base[k]);
    CHECK(lifted[k].golden == (k % 2 == 0));
    check_lift_exactly(c4, lifted[k]);
  }
  // phi * 0 = 0: the lifts of the two-dimensional kernel stay in the kernel
  for (int k = 2; k < 6; ++k) {
    CHECK(lifted[k].eigenvalue == QuadSurd(0));
    bool nonzero = false;
    for (const auto& entry : lifted[k].vector) nonzero = nonzero || !entry.is_zero();
    CHECK(nonzero);
  }
  // the alternating eigenvector scales by -2 phi and -2 phibar
  const auto [phi, phibar] = golden_ratio();
  const QuadSurd minus_two(-2);
  CHECK(lifted[0].eigenvalue == phi * minus_two);
  CHECK(lifted[1].eigenvalue == phibar * minus_two);
}

TEST_CASE("lift of every complete-graph eigenpair verifies on K_4") {
  const Graph k4 = complete(4);
  std::vector<RationalEigenpair> nontrivial;
  for (const auto& p : integer_adjacency_eigenpairs(k4))
    if (p.eigenvalue != Rational(3)) nontrivial.push_back(p);
  const auto lifted = lift_eigenpairs(k4, nontrivial);
  REQUIRE(lifted.size() == 6);
  for (const auto& lp : lifted) check_lift_exactly(k4, lp);
}

TEST_CASE("lift_eigenpairs rejects bad inputs") {
  // irregular base
  CHECK_THROWS_AS(lift_eigenpairs(path3(), {}), std::invalid_argument);

  const Graph c4 = cycle(4);
  // constant vector: an eigenpair, but its entries do not sum to zero
  CHECK_THROWS_AS(
      lift_eigenpairs(c4, {RationalEigenpair{Rational(2), std::vector<Rational>(4, Rational(1))}}),
      std::invalid_argument);
  // sums to zero but is not an eigenvector
  CHECK_THROWS_AS(
      lift_eigenpairs(c4, {RationalEigenpair{Rational(0), {Rational(1), Rational(-1), Rational(0),
                                                           Rational(0)}}}),
      std::invalid_argument);
  // right vector, wrong eigenvalue
  CHECK_THROWS_AS(
      lift_eigenpairs(c4, {RationalEigenpair{Rational(0), {Rational(1), Rational(-1), Rational(1),
                                                           Rational(-1)}}}),
      std::invalid_argument);
  // zero vector and wrong dimension
  CHECK_THROWS_AS(
      lift_eigenpairs(c4, {RationalEigenpair{Rational(0), std::vector<Rational>(4, Rational(0))}}),
      std::invalid_argument);
  CHECK_THROWS_AS(
      lift_eigenpairs(c4, {RationalEigenpair{Rational(0), std::vector<Rational>(3, Rational(1))}}),
      std::invalid_argument);
}

TEST_CASE("central vertex averages all but the three cubic eigenvectors") {
  struct Case {
    Graph base;
    int expected_vanishing;
  };
  const std::vector<Case> cases = {{complete(3), 4}, {cycle(4), 6}, {complete(4), 6},
                                   {cycle(5), 8},    {cycle(6), 10}};
  for (const auto& c : cases) {
    const Certificate cert = central_vertex_check(c.base);
    CHECK(cert.verdict());
    CHECK(fact_value(cert, "vanishing-at-u") == std::to_string(c.expected_vanishing));
    CHECK(fact_value(cert, "averaged-eigenvectors") == std::to_string(c.expected_vanishing));
    CHECK(fact_value(cert, "expected-vanishing") == std::to_string(c.expected_vanishing));
  }
}

TEST_CASE("central vertex certificate records the cubic and the exact-lift mode") {
  const Certificate k3 = central_vertex_check(complete(3));
  CHECK(fact_value(k3, "exceptional-cubic") == "t^3 - 2t^2 - 7t + 6");
  CHECK(fact_value(k3, "exact-lift").find("Q[sqrt 5]") != std::string::npos);
  CHECK(fact_value(k3, "vertices") == "7");

  const Certificate c5 = central_vertex_check(cycle(5));
  CHECK(fact_value(c5, "exceptional-cubic") == "t^3 - 2t^2 - 9t + 10");
  CHECK(fact_value(c5, "exact-lift").find("float only") != std::string::npos);
  CHECK(fact_value(c5, "vertices") == "11");
  // certificate text renders and contains the verdict
  CHECK(c5.to_text().find("true") != std::string::npos);
}

TEST_CASE("central vertex check on the edge: M(K_2) is regular, so the Perron bonus appears") {
  const Certificate cert = central_vertex_check(complete(2));
  CHECK(cert.verdict());
  CHECK(fact_value(cert, "vanishing-at-u") == "2");
  // the constant Perron vector of the 2-regular M(K_2) = C_5 is averaged too
  CHECK(fact_value(cert, "averaged-eigenvectors") == "3");
}

TEST_CASE("central vertex check requires a regular base") {
  CHECK_THROWS_AS(central_vertex_check(path3()), std::invalid_argument);
}

TEST_CASE("designs averaging a lifted pair restrict to designs of the base") {
  const MycielskiGraph m = mycielskian(cycle(4));
  const RationalEigenpair alternating{
      Rational(-2), {Rational(1), Rational(-1), Rational(1), Rational(-1)}};

  SUBCASE("both full copies") {
    const auto v = restrict_design(m, {0, 1, 2, 3, 4, 5, 6, 7}, alternating);
    CHECK(v.base_copy);
    CHECK(v.shadow_copy);
    CHECK_FALSE(v.vacuous);
  }
  SUBCASE("a proper mixed design") {
    const auto v = restrict_design(m, {0, 1, 4, 5}, alternating);
    CHECK(v.base_copy);
    CHECK(v.shadow_copy);
    CHECK_FALSE(v.vacuous);
  }
  SUBCASE("base-only design leaves the shadow restriction empty but valid") {
    const auto v = restrict_design(m, {0, 1}, alternating);
    CHECK(v.base_copy);
    CHECK(v.shadow_copy);
    CHECK_FALSE(v.vacuous);
  }
  SUBCASE("the central vertex alone is the vacuous case") {
    const auto v = restrict_design(m, {8}, alternating);
    CHECK(v.vacuous);
    CHECK(v.base_copy);
    CHECK(v.shadow_copy);
  }
  SUBCASE("designs failing the averaging precondition are rejected") {
    CHECK_THROWS_AS(restrict_design(m, {0, 2}, alternating), std::invalid_argument);
    CHECK_THROWS_AS(restrict_design(m, {0}, alternating), std::invalid_argument);
  }
  SUBCASE("invalid vertex ids and base pairs are rejected") {
    CHECK_THROWS_AS(restrict_design(m, {0, 1, 9}, alternating), std::invalid_argument);
    CHECK_THROWS_AS(restrict_design(m, {0, 0, 1, 1}, alternating), std::invalid_argument);
    CHECK_THROWS_AS(restrict_design(m, {}, alternating), std::invalid_argument);
    const RationalEigenpair constant{Rational(2), std::vector<Rational>(4, Rational(1))};
    CHECK_THROWS_AS(restrict_design(m, {0, 1, 2, 3}, constant), std::invalid_argument);
  }
}

TEST_CASE("restriction works for the triangle kernel pair") {
  const MycielskiGraph m = mycielskian(complete(3));
  const RationalEigenpair pair{Rational(-1), {Rational(1), Rational(-1), Rational(0)}};
  const auto v = restrict_design(m, {0, 1, 3, 4, 6}, pair);
  CHECK(v.base_copy);
  CHECK(v.shadow_copy);
  CHECK_FALSE(v.vacuous);
}

TEST_CASE("exhaustive design-size audit matches the structural count of 7 designs") {
  struct Case {
    Graph base;
    long long subsets;
    int smallest_other;
  };
  const std::vector<Case> cases = {{complete(2), 31, 2},
                                   {complete(3), 127, 3},
                                   {cycle(4), 511, 4},
                                   {complete(4), 511, 4}};
  for (const auto& c : cases) {
    const MycielskiAuditReport report = design_size_audit(c.base);
    CHECK(report.ok);
    CHECK(report.subsets_checked == c.subsets);
    // D∩V and D∩V' must each be empty or a full copy, u is free: 2*2*2 - 1
    CHECK(report.designs_found == 7);
    CHECK(report.central_found);
    CHECK(report.smallest_other == c.smallest_other);
    CHECK(report.size_bound_ok);
    CHECK(report.beyond_full_only);
    CHECK(report.exact_float_agree);
    CHECK(report.detail.find("designs=7") != std::string::npos);
  }
}

TEST_CASE("design-size audit covers the 13-vertex Mycielskian of the six-cycle") {
  const MycielskiAuditReport report = design_size_audit(cycle(6));
  CHECK(report.ok);
  CHECK(report.subsets_checked == 8191);
  CHECK(report.designs_found == 7);
  CHECK(report.smallest_other == 6);
  CHECK(report.size_bound_ok);
  CHECK(report.beyond_full_only);
}

TEST_CASE("design-size audit rejects unusable bases and exhausted budgets") {
  CHECK_THROWS_AS(design_size_audit(path3()), std::invalid_argument);       // irregular
  CHECK_THROWS_AS(design_size_audit(cycle(5)), std::invalid_argument);      // irrational spectrum
  CHECK_THROWS_AS(design_size_audit(cycle(7)), std::invalid_argument);      // too large
  CHECK_THROWS_AS(design_size_audit(complete(3), 100), BudgetExceeded);     // 127 > 100
}

TEST_CASE("averaging a golden eigenspace forces its conjugate: five-cycle, exhaustively") {
  const double golden = 0.61803398874989485;
  const ConjugateClosureReport report =
      conjugate_closure_audit(cycle(5), {golden, -1.0 - golden});
  CHECK(report.ok);
  CHECK(report.subsets_checked == 31);
  CHECK(report.violations == 0);
  CHECK(report.first_averagers >= 1);
  CHECK(report.detail.find("violations=0") != std::string::npos);

  // same audit with the roles of the two conjugates swapped
  const ConjugateClosureReport swapped =
      conjugate_closure_audit(cycle(5), {-1.0 - golden, golden});
  CHECK(swapped.ok);
  CHECK(swapped.first_averagers == report.first_averagers);
}

TEST_CASE("conjugate closure holds for the cubic triple of the triangle's Mycielskian") {
  const auto roots = cubic_roots(3, 2);
  const Graph m = mycielskian(complete(3)).graph;
  const ConjugateClosureReport report =
      conjugate_closure_audit(m, {roots[0], roots[1], roots[2]});
  CHECK(report.ok);
  CHECK(report.subsets_checked == 127);
  CHECK(report.violations == 0);
}

TEST_CASE("conjugate closure check on single designs") {
  const Graph c5 = cycle(5);
  const double golden = 0.61803398874989485;
  // the full vertex set averages everything
  CHECK(conjugate_closure_check(c5, golden, {-1.0 - golden}, {0, 1, 2, 3, 4}));
  // a singleton fails to average the golden eigenspace: vacuously closed
  CHECK(conjugate_closure_check(c5, golden, {-1.0 - golden}, {0}));

  // honest negative control: pair a lifted eigenvalue of M(C_4) with a cubic
  // root that is NOT its Galois conjugate; V ∪ V' averages the first but not
  // the second
  const Graph m = mycielskian(cycle(4)).graph;
  const auto cubic = cubic_roots(4, 2);
  const double lifted_golden = -2.0 * 1.6180339887498949;   // -2*phi
  const double lifted_conj = -2.0 * (-0.6180339887498949);  // -2*phibar
  const std::vector<int> both_copies = {0, 1, 2, 3, 4, 5, 6, 7};
  CHECK(conjugate_closure_check(m, lifted_golden, {lifted_conj}, both_copies));
  CHECK_FALSE(conjugate_closure_check(m, lifted_golden, {cubic[0]}, both_copies));
}

TEST_CASE("conjugate closure rejects rational values, non-eigenvalues, and bad designs") {
  const Graph c5 = cycle(5);
  const double golden = 0.61803398874989485;
  CHECK_THROWS_AS(conjugate_closure_check(c5, 2.0, {golden}, {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(conjugate_closure_check(c5, 0.5, {golden}, {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(conjugate_closure_check(c5, golden, {}, {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(conjugate_closure_check(c5, golden, {golden}, {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(conjugate_closure_check(c5, golden, {-1.0 - golden}, {}),
                  std::invalid_argument);
  CHECK_THROWS_AS(conjugate_closure_check(c5, golden, {-1.0 - golden}, {0, 7}),
                  std::invalid_argument);
  CHECK_THROWS_AS(conjugate_closure_audit(c5, {golden, -1.0 - golden}, 10), BudgetExceeded);
}

TEST_CASE("assembled Mycielskian spectrum matches dense eigenvalues") {
  for (const Graph& g : {complete(2), complete(3), cycle(4), complete(4), cycle(5), cycle(6)}) {
    CAPTURE(g.vertex_count());
    CHECK(spectrum_completeness_check(g));
  }
  CHECK(spectrum_completeness_check(petersen()));
  CHECK_THROWS_AS(spectrum_completeness_check(path3()), std::invalid_argument);
  CHECK_THROWS_AS(spectrum_completeness_check(Graph(4, {{0, 1}, {2, 3}}, {}, true)),
                  std::invalid_argument);
}
