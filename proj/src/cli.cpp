#include "gdesign/cli.hpp"

#include <CLI11.hpp>
#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gdesign/certificate.hpp"
#include "gdesign/errors.hpp"
#include "gdesign/graph.hpp"
#include "gdesign/hamming.hpp"
#include "gdesign/johnson.hpp"
#include "gdesign/mycielski.hpp"
#include "gdesign/quadsurd.hpp"
#include "gdesign/search.hpp"
#include "gdesign/spectra.hpp"
#include "gdesign/symmetric.hpp"

namespace gdesign {

namespace {

// ---------- shared plumbing ----------

long long binomial_ll(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long b = 1;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

long long power_ll(int base, int exp) {
  long long p = 1;
  for (int i = 0; i < exp; ++i) p *= base;
  return p;
}

/// The environment may pin a global node budget; flags still win.
long long default_budget() {
  if (const char* env = std::getenv("GDESIGN_BUDGET")) {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
    throw std::invalid_argument("GDESIGN_BUDGET must be a positive integer");
  }
  return kDefaultSubsetBudget;
}

Graph load_graph(const std::string& path) { return Graph::read_file(path); }

std::vector<int> load_design_file(const std::string& path, int n) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open design file: " + path);
  return read_vertex_ids(in, n);
}

std::vector<Perm> load_perm_file(const std::string& path, int n) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open permutation file: " + path);
  std::vector<Perm> perms;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    const std::string text = line.substr(first, last - first + 1);
    if (text[0] == 'c' && (text.size() == 1 || text[1] == ' ')) continue;
    perms.push_back(Perm::parse(text, n));
  }
  std::sort(perms.begin(), perms.end());
  perms.erase(std::unique(perms.begin(), perms.end()), perms.end());
  return perms;
}

Eigen::MatrixXi load_sign_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open matrix file: " + path);
  std::vector<std::vector<int>> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream is(line);
    std::string tok;
    std::vector<int> row;
    while (is >> tok) {
      if (tok == "c" && row.empty()) break;  // comment line
      if (tok == "+" || tok == "+1" || tok == "1")
        row.push_back(1);
      else if (tok == "-" || tok == "-1")
        row.push_back(-1);
      else
        throw std::invalid_argument("matrix file: entries must be +1 or -1, got " + tok);
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::invalid_argument("matrix file: no rows");
  const size_t cols = rows.front().size();
  Eigen::MatrixXi h(static_cast<int>(rows.size()), static_cast<int>(cols));
  for (size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("matrix file: ragged rows");
    for (size_t c = 0; c < cols; ++c) h(static_cast<int>(r), static_cast<int>(c)) = rows[r][c];
  }
  return h;
}

void print_sign_matrix(std::ostream& os, const Eigen::MatrixXi& h) {
  for (int r = 0; r < h.rows(); ++r) {
    for (int c = 0; c < h.cols(); ++c) os << (c ? " " : "") << (h(r, c) > 0 ? "+1" : "-1");
    os << "\n";
  }
}

void print_design_ids(std::ostream& os, const std::vector<int>& design,
                      const std::string& comment) {
  if (!comment.empty()) os << "c " << comment << "\n";
  for (int v : design) os << v + 1 << "\n";
}

/// Writes through `writer` either to --out (then logs a one-line summary) or
/// straight to the console stream.
void deliver(const std::string& out_path, std::ostream& console, const std::string& what,
             void (*writer)(std::ostream&, const void*), const void* payload) {
  if (out_path.empty()) {
    writer(console, payload);
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw std::invalid_argument("cannot open output file: " + out_path);
  writer(f, payload);
  console << "wrote " << what << " to " << out_path << "\n";
}

std::vector<int> int_range(int from, int to) {  // inclusive; empty when from > to
  std::vector<int> out;
  for (int v = from; v <= to; ++v) out.push_back(v);
  return out;
}

std::string id_list_text(const std::vector<int>& design) {
  std::ostringstream os;
  for (size_t i = 0; i < design.size(); ++i) os << (i ? " " : "") << design[i] + 1;
  return os.str();
}

// ---------- exact spectrum sketches ----------

SpectrumSketch hamming_sketch(int n, int q, MatrixSource source) {
  SpectrumSketch sketch;
  sketch.source = source;
  const long long d = static_cast<long long>(n) * (q - 1);
  for (int w = 0; w <= n; ++w) {
    long long mult = binomial_ll(n, w);
    for (int i = 0; i < w; ++i) mult *= q - 1;
    const long long lap = static_cast<long long>(q) * w;
    sketch.entries.push_back(
        {Rational(source == MatrixSource::laplacian ? lap : d - lap), static_cast<int>(mult)});
  }
  if (source == MatrixSource::adjacency)
    std::reverse(sketch.entries.begin(), sketch.entries.end());
  return sketch;
}

SpectrumSketch johnson_sketch_for(int n, int k, MatrixSource source) {
  SpectrumSketch lap = johnson::johnson_spectrum(n, k).to_sketch();
  if (source == MatrixSource::laplacian) return lap;
  SpectrumSketch adj;
  adj.source = MatrixSource::adjacency;
  const Rational d(static_cast<long long>(std::min(k, n - k)) *
                   (n - std::min(k, n - k)));
  for (auto it = lap.entries.rbegin(); it != lap.entries.rend(); ++it)
    adj.entries.push_back({d - it->value, it->multiplicity});
  return adj;
}

SpectrumSketch cayley_sketch_for(const CayleyFamily& fam, MatrixSource source) {
  std::vector<Partition> classes;
  for (const auto& c : fam.classes) classes.push_back(Partition(c));
  const CharTable ct(fam.n);
  SpectrumSketch lap = cayley_spectrum_sketch(ct, classes);
  if (source == MatrixSource::laplacian) return lap;
  Rational d(0);
  for (const auto& c : classes) d += Rational(conjugacy_class_size(c));
  SpectrumSketch adj;
  adj.source = MatrixSource::adjacency;
  for (auto it = lap.entries.rbegin(); it != lap.entries.rend(); ++it)
    adj.entries.push_back({d - it->value, it->multiplicity});
  return adj;
}

void print_sketch(std::ostream& out, const SpectrumSketch& sketch) {
  for (const auto& entry : sketch.entries)
    out << entry.value.to_string() << " x" << entry.multiplicity << "\n";
}

// ---------- eigenspace selection ----------

std::vector<Partition> cayley_classes(const CayleyFamily& fam) {
  std::vector<Partition> classes;
  for (const auto& c : fam.classes) classes.push_back(Partition(c));
  return classes;
}

/**
 * Eigenspace labels for a normal Cayley graph on S_n:
 *  - firstpart t: every p != (n) with p_1 >= n - t (the t-wise uniformity
 *    list);
 *  - reverse w: every p with p_1 < w (the width-w coset list);
 *  - laplacian t: the first t nontrivial eigenspaces by exact Laplacian
 *    eigenvalue, ties broken by partition order.
 */
std::vector<Partition> tracked_for_order(const CayleyFamily& fam, const std::string& order,
                                         int t) {
  const int n = fam.n;
  const std::vector<Partition> all = all_partitions(n);
  std::vector<Partition> tracked;
  if (order == "firstpart") {
    if (t < 1 || t > n - 1) throw std::invalid_argument("firstpart order needs 1 <= upto <= n-1");
    for (const Partition& p : all)
      if (p.first_part() < n && p.first_part() >= n - t) tracked.push_back(p);
  } else if (order == "reverse") {
    if (t < 1 || t > n) throw std::invalid_argument("reverse order needs 1 <= upto <= n");
    for (const Partition& p : all)
      if (p.first_part() < t) tracked.push_back(p);
  } else if (order == "laplacian") {
    if (t < 1 || t >= static_cast<int>(all.size()))
      throw std::invalid_argument("laplacian order needs 1 <= upto < number of eigenspaces");
    const CharTable ct(n);
    const auto classes = cayley_classes(fam);
    std::vector<std::pair<Rational, int>> order_keys;
    for (int i = 0; i < static_cast<int>(all.size()); ++i) {
      if (all[i].first_part() == n) continue;  // trivial eigenspace, always averaged
      order_keys.emplace_back(cayley_laplacian_eigenvalue(ct, all[i], classes), i);
    }
    std::sort(order_keys.begin(), order_keys.end());
    for (int i = 0; i < t; ++i) tracked.push_back(all[order_keys[i].second]);
  } else {
    throw std::invalid_argument("cayley graphs support orders laplacian, firstpart, reverse");
  }
  return tracked;
}

/// Float fallback: averaging residual per Laplacian eigenvalue cluster, the
/// zero cluster excluded. `laplacian` takes the first t nontrivial clusters,
/// `reverse` everything after them.
Certificate float_averaging_certificate(const Graph& g, const std::vector<int>& design,
                                        const std::string& order, int t) {
  if (order != "laplacian" && order != "reverse")
    throw std::invalid_argument("float verification supports orders laplacian and reverse");
  if (!g.is_connected())
    throw std::invalid_argument("float verification requires a connected graph");
  if (design.empty()) throw std::invalid_argument("design must not be empty");
  const DenseSpectrum spec = dense_spectrum(g, MatrixSource::laplacian);
  const auto clusters = spec.clusters();
  const int nontrivial = static_cast<int>(clusters.size()) - 1;
  if (t < (order == "laplacian" ? 1 : 0) || t > nontrivial)
    throw std::invalid_argument("upto must lie between 1 and " + std::to_string(nontrivial));

  Certificate cert("eigenspace-averaging(float) order=" + order + " upto=" + std::to_string(t) +
                   ", design-size " + std::to_string(design.size()));
  const int first = order == "laplacian" ? 1 : t + 1;
  const int last = order == "laplacian" ? t : nontrivial;
  bool ok = true;
  for (int c = first; c <= last; ++c) {
    const auto [begin, end] = clusters[c];
    const double residual = averaging_residual(spec, begin, end, design);
    cert.add_residual("lambda=" + format_double(spec.eigenvalues(begin)),
                      format_double(residual));
    if (residual > kFloatAveragingTol) {
      ok = false;
      if (!cert.counterexample())
        cert.set_counterexample("cluster at lambda=" + format_double(spec.eigenvalues(begin)) +
                                " residual " + format_double(residual));
    }
  }
  cert.add_fact("tolerance", format_double(kFloatAveragingTol));
  cert.add_fact("clusters-checked", std::to_string(last - first + 1));
  cert.set_verdict(ok);
  return cert;
}

// ---------- combinatorial certificates ----------

Certificate oa_certificate(const std::vector<int>& design, int t, int n, int q) {
  const auto [ok, lambda] = hamming::oa_check(design, t, n, q);
  Certificate cert("orthogonal-array n=" + std::to_string(n) + " q=" + std::to_string(q) +
                   " strength=" + std::to_string(t));
  cert.add_fact("design-size", std::to_string(design.size()));
  cert.add_fact("size-divisible-by-q^t",
                hamming::divisibility_check(static_cast<long long>(design.size()), t, q) ? "yes"
                                                                                        : "no");
  if (ok) cert.add_fact("lambda", std::to_string(lambda));
  cert.set_verdict(ok);
  return cert;
}

Certificate block_design_certificate(int n, int k, const std::vector<int>& design, int t) {
  const auto [ok, lambda] = johnson::block_design_check(n, k, design, t);
  Certificate cert("block-design t=" + std::to_string(t) + " v=" + std::to_string(n) +
                   " k=" + std::to_string(k));
  cert.add_fact("blocks", std::to_string(design.size()));
  if (ok && lambda.has_value()) cert.add_fact("lambda", std::to_string(*lambda));
  cert.set_verdict(ok);
  return cert;
}

// ---------- named graphs and sets used by the replay cases ----------

Graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph(n, edges);
}

std::vector<int> fano_blocks() {
  std::vector<int> ranks;
  for (int i = 0; i < 7; ++i) {
    std::vector<int> block = {1 + i % 7, 1 + (1 + i) % 7, 1 + (3 + i) % 7};
    std::sort(block.begin(), block.end());
    ranks.push_back(static_cast<int>(johnson::colex_rank(block)));
  }
  std::sort(ranks.begin(), ranks.end());
  return ranks;
}

std::vector<Perm> parse_perm_set(const std::vector<std::string>& texts, int n) {
  std::vector<Perm> out;
  for (const auto& t : texts) out.push_back(Perm::parse(t, n));
  return out;
}

std::string fact_value(const Certificate& cert, const std::string& name) {
  for (const auto& [key, value] : cert.facts())
    if (key == name) return value;
  return "";
}

bool expect(std::ostream& out, bool condition, const std::string& what) {
  out << what << ": " << (condition ? "ok" : "FAILED") << "\n";
  return condition;
}

// ---------- replay cases ----------

bool case_cube_d1(std::ostream& out, int) {
  const std::vector<int> d1 = {0, 7};  // the words 000 and 111
  const Certificate one = hamming::is_phi_design(d1, {1}, 3, 2);
  const Certificate two = hamming::is_phi_design(d1, {1, 2}, 3, 2);
  out << "antipodal pair {000, 111} against the first eigenspace\n" << one.to_text();
  out << "the same pair against the first two eigenspaces\n" << two.to_text();
  bool ok = true;
  ok &= expect(out, one.verdict(), "averages every weight-1 character");
  ok &= expect(out, !two.verdict() && two.counterexample().has_value(),
               "fails a weight-2 character with a recorded witness");
  return ok;
}

bool case_cube_d2(std::ostream& out, int) {
  const std::vector<int> d2 = {0, 3, 5, 6};  // 000, 011, 101, 110
  const Certificate phi = hamming::is_phi_design(d2, {1, 2}, 3, 2);
  out << "even-weight words of the cube against the first two eigenspaces\n" << phi.to_text();
  const Certificate oa = oa_certificate(d2, 2, 3, 2);
  out << oa.to_text();
  bool ok = true;
  ok &= expect(out, phi.verdict(), "weight-{1,2} characters all vanish");
  ok &= expect(out, oa.verdict() && fact_value(oa, "lambda") == "1",
               "orthogonal array of strength 2 with lambda = 1");
  return ok;
}

bool case_oa_equivalence(std::ostream& out, int) {
  const std::array<std::array<int, 3>, 6> cases = {
      {{3, 2, 1}, {3, 2, 2}, {3, 2, 3}, {2, 3, 1}, {2, 3, 2}, {2, 4, 2}}};
  bool ok = true;
  for (const auto& [n, q, t] : cases) {
    const auto rep = hamming::oa_design_equivalence(n, q, t);
    out << "n=" << n << " q=" << q << " t=" << t << ": "
        << (rep.ok ? "three-way agreement" : "DISAGREEMENT " + rep.discrepancy) << " over "
        << rep.subsets_checked << " subsets\n";
    ok &= rep.ok;
  }
  return expect(out, ok, "orthogonal array / character design / hyperplane averages coincide");
}

bool case_hadamard_pipeline(std::ostream& out, int workers) {
  bool ok = true;
  const std::vector<int> d2 = {0, 3, 5, 6};
  const Eigen::MatrixXi h4 = hamming::design_to_hadamard(d2, 3);
  ok &= expect(out, hamming::is_hadamard(h4), "cube design converts to an order-4 Hadamard");

  const Eigen::MatrixXi h8 = hamming::sylvester_hadamard(8);
  const std::vector<int> d8 = hamming::hadamard_to_design(h8);
  const Certificate cert8 = hamming::is_phi_design(d8, {1, 2}, 7, 2);
  out << cert8.to_text();
  ok &= expect(out, cert8.verdict() && d8.size() == 8,
               "order-8 Sylvester matrix yields a size-8 design of the 7-cube");
  ok &= expect(out, hamming::is_hadamard(hamming::design_to_hadamard(d8, 7)),
               "that design converts back to a Hadamard matrix");

  for (const auto& [design, n] : {std::pair(d2, 3), std::pair(d8, 7)}) {
    const Certificate bound = hamming::size_bound_check(design, n);
    out << bound.to_text();
    ok &= bound.verdict();
  }

  // the size hints are theorems for this family: any design exceeds n and
  // has size divisible by 4, so sizes 1..7 are proved empty without search
  HammingPhiTester tester(7, 2, {1, 2});
  SearchProblem problem;
  problem.tester = &tester;
  problem.hints = {4, 7};
  problem.budget = 20000;
  problem.workers = workers;
  problem.seeds = {d8};
  const SearchResult result = search_smallest(problem, 8);
  out << result.detail << "\n";
  for (const Certificate& cert : result.certificates) out << cert.to_text();
  ok &= expect(out, result.size == 8 && result.smaller_ruled_out,
               "no design of the 7-cube beats size 8");
  return ok;
}

bool case_reverse_subcubes(std::ostream& out, int) {
  bool ok = true;
  for (int q = 2; q <= 3; ++q)
    for (int n = 1; n <= 4; ++n) {
      long long checked = 0;
      bool all = true;
      for (int t = 0; t <= n; ++t) {
        const std::vector<int> tail = int_range(t + 1, n);
        // every size-t coordinate set, every pattern over it
        std::vector<int> coords(t);
        const long long patterns = power_ll(q, t);
        std::vector<bool> pick(n, false);
        std::fill(pick.begin(), pick.begin() + t, true);
        do {
          coords.clear();
          for (int i = 0; i < n; ++i)
            if (pick[i]) coords.push_back(i + 1);
          for (long long pat = 0; pat < patterns; ++pat) {
            const std::vector<int> digits = hamming::word_digits(pat, t, q);
            const std::vector<int> cube = hamming::subcube(n, q, coords, digits);
            all = all && hamming::phi_design_bool(cube, tail, n, q);
            ++checked;
          }
        } while (std::prev_permutation(pick.begin(), pick.end()));
      }
      out << "H(" << n << "," << q << "): " << checked
          << " subcubes each average every eigenspace past their dimension: "
          << (all ? "ok" : "FAILED") << "\n";
      ok &= all;
    }

  for (const auto& [n, q] : {std::pair(2, 2), std::pair(3, 2), std::pair(2, 3)}) {
    const auto rep = hamming::minimal_reverse_enumeration(n, q);
    out << rep.detail << "\n";
    ok &= expect(out,
                 rep.ok && rep.union_closure &&
                     static_cast<int>(rep.minimal_designs.size()) == q * n,
                 "H(" + std::to_string(n) + "," + std::to_string(q) + "): minimal tail designs = " +
                     std::to_string(q * n) + " fixed-coordinate sets, unions cover the rest");
  }
  return ok;
}

bool case_random_walk(std::ostream& out, int workers) {
  bool ok = true;
  const std::vector<int> witness = {0, 1, 14, 15};  // 0000, 0001, 1110, 1111
  const Certificate cert = hamming::random_walk_extremal_check(4, witness);
  out << cert.to_text();
  ok &= expect(out, cert.verdict() && fact_value(cert, "neighbor-count-integral") == "m = 1",
               "witness is extremal with exactly one design neighbor per vertex");

  RandomWalkExtremalTester tester(4);
  SearchProblem problem;
  problem.tester = &tester;
  problem.workers = workers;
  const SearchResult result = search_smallest(problem, 4);
  out << result.detail << "\n";
  ok &= expect(out, result.exhausted && result.size == 4,
               "exhaustive search: minimum extremal size is 4 = 2^(n-t)");
  const bool witness_found =
      std::find(result.found.begin(), result.found.end(), witness) != result.found.end();
  ok &= expect(out, witness_found, "the witness appears among the smallest designs");
  return ok;
}

bool case_radon_kernel(std::ostream& out, int) {
  bool ok = true;
  for (int q = 2; q <= 4; ++q)
    for (int t = 1; t <= 2; ++t) {
      const Eigen::MatrixXi kmat = hamming::radon_kernel(t, q);
      const int cells = static_cast<int>(kmat.rows());
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(kmat.cast<double>());
      std::vector<double> brute(es.eigenvalues().data(), es.eigenvalues().data() + cells);
      std::vector<double> closed;
      bool positive = true;
      for (int y = 0; y < cells; ++y) {
        const long long lambda =
            hamming::radon_kernel_eigenvalue(hamming::word_digits(y, t, q), q);
        positive = positive && lambda > 0;
        closed.push_back(static_cast<double>(lambda));
      }
      std::sort(brute.begin(), brute.end());
      std::sort(closed.begin(), closed.end());
      double worst = 0;
      for (int i = 0; i < cells; ++i) {
        worst = std::max(worst, std::abs(brute[i] - closed[i]));
        positive = positive && brute[i] > 0;
      }
      out << "q=" << q << " t=" << t << ": " << cells
          << " kernel eigenvalues match the divisor-sum closed form, all positive: "
          << ((worst < kRadonTol && positive) ? "ok" : "FAILED") << "\n";
      ok &= worst < kRadonTol && positive;
    }
  return ok;
}

bool case_johnson_designs(std::ostream& out, int) {
  bool ok = true;
  const auto spectrum = johnson::johnson_spectrum(4, 2);
  std::ostringstream sp;
  for (const auto& e : spectrum.entries) sp << " " << e.lambda << " x" << e.mu;
  out << "laplacian spectrum of J(4,2):" << sp.str() << "\n";
  ok &= expect(out,
               spectrum.entries.size() == 3 && spectrum.entries[0].lambda == 0 &&
                   spectrum.entries[0].mu == 1 && spectrum.entries[1].lambda == 4 &&
                   spectrum.entries[1].mu == 3 && spectrum.entries[2].lambda == 6 &&
                   spectrum.entries[2].mu == 2,
               "eigenvalues 0, 4 (x3), 6 (x2)");

  for (const auto& [n, k, t] :
       {std::array{4, 2, 1}, std::array{4, 2, 2}, std::array{5, 2, 1}, std::array{5, 2, 2}}) {
    const auto rep = johnson::johnson_equivalence(n, k, t);
    out << "J(" << n << "," << k << ") t=" << t << ": "
        << (rep.ok ? "t-design / projector / float agree" : "DISAGREEMENT " + rep.discrepancy)
        << " over " << rep.subsets_checked << " subsets\n";
    ok &= rep.ok;
  }

  const auto fano = fano_blocks();
  const auto [fano_ok, fano_lambda] = johnson::block_design_check(7, 3, fano, 2);
  ok &= expect(out, fano_ok && fano_lambda.value_or(0) == 1,
               "Fano plane is a 2-(7,3,1) block design");
  const Certificate fano_cert = johnson::is_phi_design_johnson(7, 3, fano, {1, 2});
  out << fano_cert.to_text();
  ok &= expect(out, fano_cert.verdict(), "Fano plane projects to zero in the first two eigenspaces");

  long long stars_checked = 0;
  bool stars_ok = true;
  for (int n = 2; n <= 56; ++n)
    for (int k = 1; 2 * k <= n; ++k) {
      if (binomial_ll(n, k) > 56) continue;
      for (int t = 1; t <= k; ++t) {
        const std::vector<int> tail = int_range(t + 1, k);
        for (long long r = 0; r < binomial_ll(n, t); ++r) {
          const auto anchor = johnson::colex_unrank(r, n, t);
          const auto d = johnson::star(n, k, anchor);
          stars_ok = stars_ok && johnson::phi_design_johnson_bool(n, k, d, tail);
          ++stars_checked;
        }
      }
    }
  out << "stars over every J(n,k) with at most 56 vertices: " << stars_checked
      << " anchor sets\n";
  ok &= expect(out, stars_ok, "every star averages the eigenspaces past its anchor size");

  for (const auto& [n, k] : {std::pair(4, 2), std::pair(5, 2)}) {
    const auto rep = johnson::minimal_reverse_enumeration_johnson(n, k);
    out << rep.detail << "\n";
    ok &= expect(out, rep.ok && rep.union_closure,
                 "J(" + std::to_string(n) + "," + std::to_string(k) +
                     "): minimal tail designs are the stars and their complements");
  }
  return ok;
}

bool case_symmetric_group(std::ostream& out, int) {
  bool ok = true;
  const CharTable ct3(3);
  const std::vector<Partition> parts3 = all_partitions(3);
  const std::vector<Partition> transpositions = {transposition_class(3)};
  const std::vector<Partition> derangements = derangement_classes(3);
  const std::array<long long, 3> expect_t = {0, 3, 6};
  const std::array<long long, 3> expect_d = {0, 3, 0};
  for (int i = 0; i < 3; ++i) {
    const Rational lt = cayley_laplacian_eigenvalue(ct3, parts3[i], transpositions);
    const Rational ld = cayley_laplacian_eigenvalue(ct3, parts3[i], derangements);
    out << "p=(" << parts3[i].to_string() << "): lambda_transposition=" << lt.to_string()
        << " lambda_derangement=" << ld.to_string() << "\n";
    ok &= lt == Rational(expect_t[i]) && ld == Rational(expect_d[i]);
  }
  ok &= expect(out, ok, "both eigenvalue tables match");

  const auto c = parse_perm_set({"e", "(1234)", "(13)(24)", "(1432)"}, 4);
  const auto v = parse_perm_set({"e", "(12)(34)", "(13)(24)", "(14)(23)"}, 4);
  std::vector<Perm> vc = v;
  for (const Perm& s : c) vc.push_back(Perm::parse("(12)", 4).compose(s));
  std::sort(vc.begin(), vc.end());
  ok &= expect(out,
               t_wise_uniform_check(c, 1) && t_wise_uniform_check(v, 1) &&
                   t_wise_uniform_check(vc, 1),
               "the cyclic group, the Klein group, and their glued union are 1-wise uniform");

  const CharTable ct4(4);
  const auto a4 = alternating_group(4);
  bool a4_exact = t_wise_uniform_check(a4, 2) && !t_wise_uniform_check(a4, 3);
  a4_exact = a4_exact && gram_sum(ct4, a4, Partition({3, 1})) == 0 &&
             gram_sum(ct4, a4, Partition({2, 2})) == 0 &&
             gram_sum(ct4, a4, Partition({2, 1, 1})) == 0 &&
             gram_sum(ct4, a4, Partition({1, 1, 1, 1})) != 0;
  ok &= expect(out, a4_exact,
               "the even permutations are 2-wise uniform and average exactly the three "
               "eigenspaces below the sign character");

  for (int t = 1; t <= 2; ++t) {
    const auto rep = first_part_design_equivalence(3, t);
    out << "n=3 t=" << t << ": uniformity matches high-first-part averaging over "
        << rep.subsets_checked << " subsets (" << rep.mode << ")\n";
    ok &= rep.ok;
  }

  const auto sweep4 = first_part_design_equivalence(4, 2);
  std::vector<int> even_ranks, odd_ranks;
  for (const Perm& s : a4) even_ranks.push_back(static_cast<int>(perm_lex_rank(s)));
  std::sort(even_ranks.begin(), even_ranks.end());
  for (int r = 0; r < 24; ++r)
    if (!std::binary_search(even_ranks.begin(), even_ranks.end(), r)) odd_ranks.push_back(r);
  auto found4 = sweep4.uniform_sets;
  std::sort(found4.begin(), found4.end());
  ok &= expect(out,
               sweep4.ok && found4.size() == 2 && found4[0] == even_ranks && found4[1] == odd_ranks,
               "the only proper 2-wise uniform sets in the degree-4 sweep are the even "
               "permutations and their complement");

  const auto l1 = parse_perm_set({"e", "(14)", "(24)", "(34)", "(123)", "(1243)", "(1423)",
                                  "(1234)", "(132)", "(1324)", "(1342)", "(1432)"},
                                 4);
  const auto l2 = parse_perm_set({"e", "(1243)", "(14)(23)", "(1342)", "(12)", "(143)", "(1324)",
                                  "(234)", "(13)", "(243)", "(1234)", "(142)"},
                                 4);
  bool twelve_ok = true;
  for (const auto& d : {l1, l2}) {
    twelve_ok = twelve_ok && d.size() == 12 && t_wise_uniform_check(d, 1) &&
                !t_wise_uniform_check(d, 2) && gram_sum(ct4, d, Partition({3, 1})) == 0 &&
                gram_sum(ct4, d, Partition({2, 2})) == 0 &&
                gram_sum(ct4, d, Partition({2, 1, 1})) != 0;
  }
  ok &= expect(out, twelve_ok,
               "both twelve-element sets average the two eigenspaces after the standard one "
               "yet fail 2-wise uniformity");

  const auto w7 = order_conflict_witness(7);
  out << "degree 7: p=(" << w7.p.to_string() << ") adjacency " << w7.adjacency_p << ", q=("
      << w7.q.to_string() << ") adjacency " << w7.adjacency_q << ", laplacian "
      << w7.laplacian_p.to_string() << " vs " << w7.laplacian_q.to_string() << "\n";
  ok &= expect(out,
               w7.adjacency_p == 0 && w7.adjacency_q == 1 &&
                   w7.p.first_part() > w7.q.first_part() && w7.laplacian_p > w7.laplacian_q,
               "first-part order and Laplacian order disagree at degree 7");

  std::mt19937 rng(97);
  bool nonneg = true;
  for (int trial = 0; trial < 10000; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const CharTable ct(n);
    const auto perms = all_perms(n);
    const auto parts = all_partitions(n);
    const int size = 1 + static_cast<int>(rng() % 14);
    std::set<int> picked;
    while (static_cast<int>(picked.size()) <
           std::min<int>(size, static_cast<int>(perms.size())))
      picked.insert(static_cast<int>(rng() % perms.size()));
    std::vector<Perm> design;
    for (int r : picked) design.push_back(perms[static_cast<size_t>(r)]);
    nonneg = nonneg && gram_sum(ct, design, parts[rng() % parts.size()]) >= 0;
  }
  ok &= expect(out, nonneg, "ten thousand random Gram sums are nonnegative");
  return ok;
}

bool case_mycielskian(std::ostream& out, int) {
  bool ok = true;
  const Graph c5 = cycle_graph(5);
  const MycielskiGraph m5 = mycielskian(c5);
  out << "mycielskian of the 5-cycle: " << m5.graph.vertex_count() << " vertices, "
      << m5.graph.edge_count() << " edges\n";
  ok &= expect(out,
               m5.graph.vertex_count() == 11 && m5.graph.edge_count() == 20 &&
                   triangle_free(m5.graph) && chromatic_number(m5.graph) == 4,
               "triangle-free on 11 vertices with chromatic number 4");

  const Certificate central = central_vertex_check(c5);
  out << central.to_text();
  ok &= expect(out, central.verdict() && fact_value(central, "averaged-eigenvectors") == "8",
               "the central vertex alone averages exactly 8 = 2n-2 eigenvectors");

  for (const auto& [name, base] :
       {std::pair<std::string, Graph>("triangle", complete_graph(3)),
        std::pair<std::string, Graph>("4-cycle", cycle_graph(4)),
        std::pair<std::string, Graph>("4-clique", complete_graph(4))}) {
    const Certificate cert = central_vertex_check(base);
    out << cert.to_text();
    const bool exact = fact_value(cert, "exact-lift").rfind("verified in Q[sqrt 5]", 0) == 0;
    ok &= expect(out, cert.verdict() && exact,
                 name + ": lifted eigenpairs verified exactly in Q[sqrt 5]");
  }

  bool completeness = true;
  for (const Graph& base :
       {complete_graph(2), complete_graph(3), cycle_graph(4), complete_graph(4), c5, cycle_graph(6)})
    completeness = completeness && spectrum_completeness_check(base);
  ok &= expect(out, completeness,
               "lifted pairs plus cubic roots reproduce six dense Mycielskian spectra");

  ok &= expect(out, isomorphic(mycielskian(complete_graph(2)).graph, c5),
               "the mycielskian of an edge is the 5-cycle");

  for (const auto& [name, base] : {std::pair<std::string, Graph>("triangle", complete_graph(3)),
                                   std::pair<std::string, Graph>("4-cycle", cycle_graph(4))}) {
    const MycielskiAuditReport rep = design_size_audit(base);
    out << rep.detail << "\n";
    ok &= expect(out, rep.ok && rep.size_bound_ok && rep.central_found && rep.beyond_full_only,
                 name + ": every design is the central vertex or has at least n vertices, and "
                        "averaging the cubic triple forces the full vertex set");
  }

  const double golden_root = 0.61803398874989485;
  const ConjugateClosureReport closure5 =
      conjugate_closure_audit(c5, {golden_root, -1.0 - golden_root});
  out << closure5.detail << "\n";
  ok &= expect(out, closure5.ok, "5-cycle: averaging one golden eigenspace forces its conjugate");

  const auto roots = cubic_roots(3, 2);
  const ConjugateClosureReport closure_m3 = conjugate_closure_audit(
      mycielskian(complete_graph(3)).graph, {roots[0], roots[1], roots[2]});
  out << closure_m3.detail << "\n";
  ok &= expect(out, closure_m3.ok,
               "triangle mycielskian: averaging one cubic eigenspace forces the whole triple");

  const auto [phi, phibar] = golden_ratio();
  ok &= expect(out, phi + phibar == QuadSurd(1) && phi * phibar == QuadSurd(-1),
               "golden identities phi + phibar = 1 and phi * phibar = -1 hold exactly");
  return ok;
}

// ---------- verb implementations ----------

struct GenOptions {
  std::string family;
  int n = 0;
  int q = 0;
  int k = 0;
  std::vector<std::string> classes;
  std::string out_path;
};

int do_gen(const GenOptions& o, std::ostream& out) {
  Graph g(1, {});
  if (o.family == "hamming") {
    if (o.q < 2) throw std::invalid_argument("gen hamming needs --q >= 2");
    g = hamming::build_hamming(o.n, o.q);
  } else if (o.family == "johnson") {
    if (o.k < 1) throw std::invalid_argument("gen johnson needs --k >= 1");
    g = johnson::build_johnson(o.n, o.k);
  } else {
    std::vector<Partition> classes;
    for (const auto& text : o.classes) classes.push_back(Partition::parse(text));
    if (classes.empty()) classes.push_back(transposition_class(o.n));
    g = cayley_graph(o.n, classes);
  }
  if (o.out_path.empty()) {
    g.write(out);
  } else {
    g.write_file(o.out_path);
    out << "wrote " << family_to_string(g.family()) << " graph (" << g.vertex_count()
        << " vertices, " << g.edge_count() << " edges) to " << o.out_path << "\n";
  }
  return kExitTrue;
}

int do_spectrum(const std::string& graph_path, const std::string& source_name,
                std::ostream& out) {
  const Graph g = load_graph(graph_path);
  const MatrixSource source =
      source_name == "adjacency" ? MatrixSource::adjacency : MatrixSource::laplacian;
  out << "family: " << family_to_string(g.family()) << "\n";
  out << "source: " << source_name << "\n";

  SpectrumSketch sketch;
  bool exact = true;
  if (const auto* h = std::get_if<HammingFamily>(&g.family())) {
    sketch = hamming_sketch(h->n, h->q, source);
  } else if (const auto* j = std::get_if<JohnsonFamily>(&g.family())) {
    sketch = johnson_sketch_for(j->n, j->k, source);
  } else if (const auto* c = std::get_if<CayleyFamily>(&g.family())) {
    sketch = cayley_sketch_for(*c, source);
  } else {
    exact = false;
  }

  if (exact) {
    out << "method: exact\n";
    print_sketch(out, sketch);
    if (g.vertex_count() <= kDenseLimit) {
      const bool match = sketch_matches_graph(g, sketch);
      out << "dense cross-check: " << (match ? "ok" : "FAILED") << "\n";
      return match ? kExitTrue : kExitFalse;
    }
    out << "dense cross-check: skipped (order beyond dense limit)\n";
    return kExitTrue;
  }

  out << "method: dense numeric\n";
  const DenseSpectrum spec = dense_spectrum(g, source);
  for (const auto& [begin, end] : spec.clusters())
    out << format_double(spec.eigenvalues(begin)) << " x" << end - begin << "\n";
  return kExitTrue;
}

struct VerifyOptions {
  std::string graph_path;
  std::string design_path;
  std::string order = "laplacian";
  int upto = 0;
};

int do_verify(const VerifyOptions& o, std::ostream& out) {
  const Graph g = load_graph(o.graph_path);
  const std::vector<int> design = load_design_file(o.design_path, g.vertex_count());
  if (design.empty()) throw std::invalid_argument("design file contains no vertex ids");

  Certificate cert("unreachable");
  if (const auto* h = std::get_if<HammingFamily>(&g.family())) {
    out << "method: exact cyclotomic character sums\n";
    if (o.order == "laplacian") {
      if (o.upto < 1 || o.upto > h->n)
        throw std::invalid_argument("laplacian order needs 1 <= upto <= n");
      cert = hamming::is_phi_design(design, int_range(1, o.upto), h->n, h->q);
    } else if (o.order == "reverse") {
      if (o.upto < 0 || o.upto >= h->n)
        throw std::invalid_argument("reverse order needs 0 <= upto < n");
      cert = hamming::is_phi_design(design, int_range(o.upto + 1, h->n), h->n, h->q);
    } else if (o.order == "walk") {
      if (h->q != 2) throw std::invalid_argument("walk order needs q = 2");
      cert = hamming::random_walk_extremal_check(h->n, design);
    } else {
      throw std::invalid_argument("hamming graphs support orders laplacian, reverse, walk");
    }
  } else if (const auto* j = std::get_if<JohnsonFamily>(&g.family())) {
    out << "method: exact rational eigenspace projectors\n";
    const int k = std::min(j->k, j->n - j->k);
    if (o.order == "laplacian") {
      if (o.upto < 1 || o.upto > k)
        throw std::invalid_argument("laplacian order needs 1 <= upto <= k");
      cert = johnson::is_phi_design_johnson(j->n, j->k, design, int_range(1, o.upto));
    } else if (o.order == "reverse") {
      if (o.upto < 0 || o.upto >= k)
        throw std::invalid_argument("reverse order needs 0 <= upto < k");
      cert = johnson::is_phi_design_johnson(j->n, j->k, design, int_range(o.upto + 1, k));
    } else {
      throw std::invalid_argument("johnson graphs support orders laplacian, reverse");
    }
  } else if (const auto* c = std::get_if<CayleyFamily>(&g.family())) {
    out << "method: exact integer character Gram sums\n";
    const CharTable ct(c->n);
    const auto perms = all_perms(c->n);
    std::vector<Perm> design_perms;
    for (int id : design) design_perms.push_back(perms[static_cast<size_t>(id)]);
    cert = phi_p_certificate(ct, design_perms, tracked_for_order(*c, o.order, o.upto));
  } else {
    out << "method: dense numeric averaging\n";
    cert = float_averaging_certificate(g, design, o.order, o.upto);
  }
  out << cert.to_text();
  return cert.verdict() ? kExitTrue : kExitFalse;
}

int do_oa(const std::string& design_path, int n, int q, int t, std::ostream& out) {
  if (n < 1 || q < 2) throw std::invalid_argument("oa needs --n >= 1 and --q >= 2");
  const std::vector<int> design = load_design_file(design_path, static_cast<int>(power_ll(q, n)));
  const Certificate cert = oa_certificate(design, t, n, q);
  out << cert.to_text();
  return cert.verdict() ? kExitTrue : kExitFalse;
}

int do_blockdesign(const std::string& design_path, int n, int k, int t, std::ostream& out) {
  const std::vector<int> design =
      load_design_file(design_path, static_cast<int>(binomial_ll(n, k)));
  const Certificate cert = block_design_certificate(n, k, design, t);
  out << cert.to_text();
  return cert.verdict() ? kExitTrue : kExitFalse;
}

int do_twise(const std::string& design_path, int n, int t, std::ostream& out) {
  const std::vector<Perm> design = load_perm_file(design_path, n);
  if (design.empty()) throw std::invalid_argument("permutation file contains no permutations");
  const Certificate cert = t_wise_uniform_certificate(design, t);
  out << cert.to_text();
  return cert.verdict() ? kExitTrue : kExitFalse;
}

struct HadamardOptions {
  int sylvester = 0;
  std::string to_design;
  std::string from_design;
  int n = 0;
  std::string out_path;
};

int do_hadamard(const HadamardOptions& o, std::ostream& out) {
  const int modes = (o.sylvester > 0) + !o.to_design.empty() + !o.from_design.empty();
  if (modes != 1)
    throw std::invalid_argument(
        "hadamard needs exactly one of --sylvester, --to-design, --from-design");

  if (o.sylvester > 0) {
    const Eigen::MatrixXi h = hamming::sylvester_hadamard(o.sylvester);
    deliver(
        o.out_path, out, "order-" + std::to_string(o.sylvester) + " Sylvester matrix",
        [](std::ostream& os, const void* p) {
          print_sign_matrix(os, *static_cast<const Eigen::MatrixXi*>(p));
        },
        &h);
    out << "order " << o.sylvester << " Sylvester matrix: "
        << (hamming::is_hadamard(h) ? "verified Hadamard" : "NOT Hadamard") << "\n";
    return kExitTrue;
  }

  if (!o.to_design.empty()) {
    const Eigen::MatrixXi h = load_sign_matrix(o.to_design);
    if (!hamming::is_hadamard(h)) {
      out << "verdict: not a Hadamard matrix\n";
      return kExitFalse;
    }
    const std::vector<int> design = hamming::hadamard_to_design(h);
    const int n = static_cast<int>(h.cols()) - 1;
    struct Payload {
      const std::vector<int>* design;
      std::string comment;
    } payload{&design, "size-" + std::to_string(design.size()) + " design of the " +
                           std::to_string(n) + "-cube, one vertex id per line"};
    deliver(
        o.out_path, out, "design of the " + std::to_string(n) + "-cube",
        [](std::ostream& os, const void* p) {
          const auto* pl = static_cast<const Payload*>(p);
          print_design_ids(os, *pl->design, pl->comment);
        },
        &payload);
    const Certificate cert = hamming::is_phi_design(design, {1, 2}, n, 2);
    out << cert.to_text();
    const Certificate bound = hamming::size_bound_check(design, n);
    out << bound.to_text();
    return cert.verdict() && bound.verdict() ? kExitTrue : kExitFalse;
  }

  if (o.n < 3) throw std::invalid_argument("hadamard --from-design needs --n (with n = 4l-1)");
  const std::vector<int> design =
      load_design_file(o.from_design, static_cast<int>(power_ll(2, o.n)));
  const Eigen::MatrixXi h = hamming::design_to_hadamard(design, o.n);
  deliver(
      o.out_path, out, "order-" + std::to_string(o.n + 1) + " Hadamard matrix",
      [](std::ostream& os, const void* p) {
        print_sign_matrix(os, *static_cast<const Eigen::MatrixXi*>(p));
      },
      &h);
  out << "order " << o.n + 1 << " Hadamard matrix: verified\n";
  const Certificate bound = hamming::size_bound_check(design, o.n);
  out << bound.to_text();
  return kExitTrue;
}

int do_mycielskify(const std::string& graph_path, const std::string& out_path,
                   std::ostream& out) {
  const Graph g = load_graph(graph_path);
  const MycielskiGraph m = mycielskian(g);
  if (out_path.empty()) {
    m.graph.write(out);
    return kExitTrue;
  }
  m.graph.write_file(out_path);
  out << "base: " << g.vertex_count() << " vertices, " << g.edge_count() << " edges\n";
  out << "mycielskian: " << m.graph.vertex_count() << " vertices, " << m.graph.edge_count()
      << " edges, central vertex id " << m.u_index + 1 << "\n";
  out << "triangle-free: base " << (triangle_free(g) ? "yes" : "no") << ", result "
      << (triangle_free(m.graph) ? "yes" : "no") << "\n";
  out << "wrote mycielskian graph to " << out_path << "\n";
  return kExitTrue;
}

struct SearchOptions {
  std::string graph_path;
  std::string order = "laplacian";
  int upto = 0;
  int max_size = 0;
  bool minimal = false;
  int workers = 1;
  long long budget = 0;  // 0: default / environment
  long long mod_hint = 1;
  long long above_hint = 0;
  std::vector<std::string> seed_paths;
};

int do_search(const SearchOptions& o, std::ostream& out) {
  const Graph g = load_graph(o.graph_path);

  std::unique_ptr<SubsetTester> tester;
  if (const auto* h = std::get_if<HammingFamily>(&g.family())) {
    if (o.order == "laplacian") {
      if (o.upto < 1 || o.upto > h->n)
        throw std::invalid_argument("laplacian order needs 1 <= upto <= n");
      tester = std::make_unique<HammingPhiTester>(h->n, h->q, int_range(1, o.upto));
    } else if (o.order == "reverse") {
      if (o.upto < 0 || o.upto >= h->n)
        throw std::invalid_argument("reverse order needs 0 <= upto < n");
      tester = std::make_unique<HammingPhiTester>(h->n, h->q, int_range(o.upto + 1, h->n));
    } else if (o.order == "walk") {
      if (h->q != 2) throw std::invalid_argument("walk order needs q = 2");
      tester = std::make_unique<RandomWalkExtremalTester>(h->n);
    } else {
      throw std::invalid_argument("hamming graphs support orders laplacian, reverse, walk");
    }
  } else if (const auto* j = std::get_if<JohnsonFamily>(&g.family())) {
    const int k = std::min(j->k, j->n - j->k);
    if (o.order == "laplacian") {
      if (o.upto < 1 || o.upto > k)
        throw std::invalid_argument("laplacian order needs 1 <= upto <= k");
      tester = std::make_unique<JohnsonPhiTester>(j->n, k, int_range(1, o.upto));
    } else if (o.order == "reverse") {
      if (o.upto < 0 || o.upto >= k)
        throw std::invalid_argument("reverse order needs 0 <= upto < k");
      tester = std::make_unique<JohnsonPhiTester>(j->n, k, int_range(o.upto + 1, k));
    } else {
      throw std::invalid_argument("johnson graphs support orders laplacian, reverse");
    }
  } else if (const auto* c = std::get_if<CayleyFamily>(&g.family())) {
    tester = std::make_unique<SymmetricGramTester>(c->n, tracked_for_order(*c, o.order, o.upto));
  } else {
    throw std::invalid_argument("search needs a family-tagged graph (hamming, johnson, cayley)");
  }

  SearchProblem problem;
  problem.tester = tester.get();
  problem.hints = {o.mod_hint, o.above_hint};
  problem.budget = o.budget > 0 ? o.budget : default_budget();
  problem.workers = o.workers;
  for (const auto& path : o.seed_paths)
    problem.seeds.push_back(load_design_file(path, tester->universe()));

  out << "tester: " << tester->name() << "\n";
  out << "universe: " << tester->universe() << "\n";
  out << "budget: " << problem.budget << "\n";

  if (o.minimal) {
    const SearchResult result = enumerate_minimal(problem, o.max_size);
    out << result.detail << "\n";
    out << "union closure: "
        << (union_closure_audit(result.found, result.all_found) ? "ok" : "FAILED") << "\n";
    for (const Certificate& cert : result.certificates) out << cert.to_text();
    if (!result.exhausted) {
      out << "status: budget exhausted before completing the enumeration\n";
      return kExitBudget;
    }
    out << "status: complete\n";
    return kExitTrue;
  }

  const SearchResult result = search_smallest(problem, o.max_size);
  out << result.detail << "\n";
  for (const Certificate& cert : result.certificates) out << cert.to_text();
  if (!result.found.empty()) {
    out << "smallest design size: " << result.size
        << (result.smaller_ruled_out ? " (smaller sizes ruled out)" : " (smaller sizes unsettled)")
        << "\n";
    return kExitTrue;
  }
  if (result.exhausted) {
    out << "no design up to size " << o.max_size << "\n";
    return kExitFalse;
  }
  out << "status: budget exhausted, search inconclusive\n";
  return kExitBudget;
}

int do_repro(const std::string& case_name, bool list, int workers, std::ostream& out) {
  if (list) {
    for (const ReproCase& c : repro_cases())
      out << c.name << " - " << c.summary << "\n";
    return kExitTrue;
  }
  for (const ReproCase& c : repro_cases()) {
    if (c.name != case_name) continue;
    out << "case: " << c.name << "\n";
    const bool ok = c.run(out, workers);
    out << "case verdict: " << (ok ? "pass" : "FAIL") << "\n";
    return ok ? kExitTrue : kExitFalse;
  }
  std::ostringstream known;
  for (const ReproCase& c : repro_cases()) known << " " << c.name;
  throw std::invalid_argument("unknown case " + case_name + "; known cases:" + known.str());
}

}  // namespace

const std::vector<ReproCase>& repro_cases() {
  static const std::vector<ReproCase> cases = {
      {"cube-d1", "antipodal cube pair averages one eigenspace but not two", case_cube_d1},
      {"cube-d2", "even-weight cube design and its strength-2 orthogonal array", case_cube_d2},
      {"hadamard-pipeline", "designs of the 7-cube and Hadamard matrices convert both ways",
       case_hadamard_pipeline},
      {"johnson-designs", "block designs, stars, and eigenspace projections on Johnson graphs",
       case_johnson_designs},
      {"mycielskian", "central-vertex averaging, exact lifts, and size bounds on Mycielskians",
       case_mycielskian},
      {"oa-equivalence", "orthogonal arrays coincide with character designs on small cubes",
       case_oa_equivalence},
      {"radon-kernel", "finite-field Radon kernel spectrum matches its closed form",
       case_radon_kernel},
      {"random-walk", "extremal designs of the 4-cube for the random-walk order",
       case_random_walk},
      {"reverse-subcubes", "subcubes average reverse-order eigenspaces; minimal ones enumerated",
       case_reverse_subcubes},
      {"symmetric-group", "uniform permutation sets and eigenvalue tables on Cayley graphs",
       case_symmetric_group},
  };
  return cases;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"graphical designs on structured graphs: generators, verifiers, and search"};
  app.require_subcommand(1);
  int rc = kExitTrue;

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "write a structured graph file");
  gen_cmd->add_option("--family", gen.family, "hamming, johnson, or cayley")
      ->required()
      ->check(CLI::IsMember({"hamming", "johnson", "cayley"}));
  gen_cmd->add_option("--n", gen.n, "word length / ground set size / symmetric-group degree")
      ->required();
  gen_cmd->add_option("--q", gen.q, "alphabet size (hamming)");
  gen_cmd->add_option("--k", gen.k, "subset size (johnson)");
  gen_cmd->add_option("--class", gen.classes,
                      "connection-set cycle type like 2,1 (cayley; repeatable; default "
                      "transpositions)");
  gen_cmd->add_option("--out", gen.out_path, "output file (default: standard output)");
  gen_cmd->callback([&] { rc = do_gen(gen, out); });

  std::string spectrum_graph, spectrum_source = "laplacian";
  auto* spectrum_cmd = app.add_subcommand("spectrum", "print a graph spectrum with multiplicities");
  spectrum_cmd->add_option("--graph", spectrum_graph, "graph file")->required();
  spectrum_cmd->add_option("--source", spectrum_source, "laplacian (default) or adjacency")
      ->check(CLI::IsMember({"laplacian", "adjacency"}));
  spectrum_cmd->callback([&] { rc = do_spectrum(spectrum_graph, spectrum_source, out); });

  VerifyOptions verify;
  auto* verify_cmd =
      app.add_subcommand("verify", "check that a vertex subset averages chosen eigenspaces");
  verify_cmd->add_option("--graph", verify.graph_path, "graph file")->required();
  verify_cmd->add_option("--design", verify.design_path, "design file of 1-indexed vertex ids")
      ->required();
  verify_cmd->add_option("--order", verify.order,
                         "laplacian (default), reverse, walk (hamming), firstpart (cayley)");
  verify_cmd->add_option("--upto", verify.upto, "how many eigenspaces the order takes or skips");
  verify_cmd->callback([&] { rc = do_verify(verify, out); });

  std::string oa_design;
  int oa_n = 0, oa_q = 0, oa_t = 0;
  auto* oa_cmd = app.add_subcommand("oa", "orthogonal array strength check");
  oa_cmd->add_option("--design", oa_design, "design file of 1-indexed word ids")->required();
  oa_cmd->add_option("--n", oa_n, "word length")->required();
  oa_cmd->add_option("--q", oa_q, "alphabet size")->required();
  oa_cmd->add_option("--t", oa_t, "strength")->required();
  oa_cmd->callback([&] { rc = do_oa(oa_design, oa_n, oa_q, oa_t, out); });

  std::string bd_design;
  int bd_n = 0, bd_k = 0, bd_t = 0;
  auto* bd_cmd = app.add_subcommand("blockdesign", "combinatorial t-design check");
  bd_cmd->add_option("--design", bd_design, "design file of 1-indexed block ids (colex order)")
      ->required();
  bd_cmd->add_option("--n", bd_n, "ground set size")->required();
  bd_cmd->add_option("--k", bd_k, "block size")->required();
  bd_cmd->add_option("--t", bd_t, "strength")->required();
  bd_cmd->callback([&] { rc = do_blockdesign(bd_design, bd_n, bd_k, bd_t, out); });

  std::string tw_design;
  int tw_n = 0, tw_t = 0;
  auto* tw_cmd = app.add_subcommand("twise", "t-wise uniformity check for permutation sets");
  tw_cmd->add_option("--design", tw_design,
                     "file of permutations, one per line (cycle or one-line form)")
      ->required();
  tw_cmd->add_option("--n", tw_n, "degree")->required();
  tw_cmd->add_option("--t", tw_t, "strength")->required();
  tw_cmd->callback([&] { rc = do_twise(tw_design, tw_n, tw_t, out); });

  HadamardOptions hadamard;
  auto* had_cmd =
      app.add_subcommand("hadamard", "convert between Hadamard matrices and cube designs");
  had_cmd->add_option("--sylvester", hadamard.sylvester, "emit the Sylvester matrix of this order");
  had_cmd->add_option("--to-design", hadamard.to_design, "matrix file to convert into a design");
  had_cmd->add_option("--from-design", hadamard.from_design,
                      "design file to convert into a matrix");
  had_cmd->add_option("--n", hadamard.n, "word length of the design's cube (with --from-design)");
  had_cmd->add_option("--out", hadamard.out_path, "output file (default: standard output)");
  had_cmd->callback([&] { rc = do_hadamard(hadamard, out); });

  std::string myc_graph, myc_out;
  auto* myc_cmd = app.add_subcommand("mycielskify", "write the Mycielskian of a graph");
  myc_cmd->add_option("--graph", myc_graph, "base graph file")->required();
  myc_cmd->add_option("--out", myc_out, "output file (default: standard output)");
  myc_cmd->callback([&] { rc = do_mycielskify(myc_graph, myc_out, out); });

  SearchOptions search;
  auto* search_cmd = app.add_subcommand("search", "find the smallest designs of a tagged graph");
  search_cmd->add_option("--graph", search.graph_path, "graph file with a family header")
      ->required();
  search_cmd->add_option("--order", search.order,
                         "laplacian (default), reverse, walk (hamming), firstpart (cayley)");
  search_cmd->add_option("--upto", search.upto, "how many eigenspaces the order takes or skips");
  search_cmd->add_option("--max-size", search.max_size, "largest design size to try")->required();
  search_cmd->add_flag("--minimal", search.minimal,
                       "enumerate all designs up to max size and report the inclusion-minimal "
                       "ones");
  search_cmd->add_option("--workers", search.workers, "worker threads (results are identical)");
  search_cmd->add_option("--budget", search.budget,
                         "node-expansion budget (default: GDESIGN_BUDGET or built-in)");
  search_cmd->add_option("--mod-hint", search.mod_hint,
                         "proven divisor of every design size (skips other sizes)");
  search_cmd->add_option("--above-hint", search.above_hint,
                         "proven strict lower bound on design sizes");
  search_cmd->add_option("--seed", search.seed_paths,
                         "design file verified up front and counted at its size (repeatable)");
  search_cmd->callback([&] { rc = do_search(search, out); });

  std::string repro_name;
  bool repro_list = false;
  int repro_workers = 1;
  auto* repro_cmd = app.add_subcommand("repro", "replay a named verified result");
  repro_cmd->add_option("--case", repro_name, "case name (see --list)");
  repro_cmd->add_flag("--list", repro_list, "list the available cases");
  repro_cmd->add_option("--workers", repro_workers,
                        "worker threads for the search-based cases (output is identical)");
  repro_cmd->callback([&] {
    if (!repro_list && repro_name.empty())
      throw std::invalid_argument("repro needs --case NAME or --list");
    rc = do_repro(repro_name, repro_list, repro_workers, out);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitTrue : kExitUsage;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return rc;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace gdesign
