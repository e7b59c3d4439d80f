#include "gdesign/symmetric.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace gdesign {
namespace {

long long factorial_ll(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

void check_perm_set(const std::vector<Perm>& design, int n, const char* who) {
  if (design.empty()) throw std::invalid_argument(std::string(who) + ": empty permutation set");
  for (const Perm& s : design)
    if (s.n() != n) throw std::invalid_argument(std::string(who) + ": mixed degrees");
  std::vector<Perm> copy = design;
  std::sort(copy.begin(), copy.end());
  if (std::adjacent_find(copy.begin(), copy.end()) != copy.end())
    throw std::invalid_argument(std::string(who) + ": duplicate permutation");
}

std::vector<Partition> normalized_classes(int n, const std::vector<Partition>& classes,
                                          const char* who) {
  if (classes.empty()) throw std::invalid_argument(std::string(who) + ": empty class list");
  std::vector<std::vector<int>> types;
  for (const Partition& mu : classes) {
    if (mu.n() != n)
      throw std::invalid_argument(std::string(who) + ": class is not a cycle type of n");
    if (mu.first_part() == 1)
      throw std::invalid_argument(std::string(who) + ": identity class in connection set");
    types.push_back(mu.parts);
  }
  std::sort(types.begin(), types.end());
  types.erase(std::unique(types.begin(), types.end()), types.end());
  std::vector<Partition> out;
  out.reserve(types.size());
  for (auto& type : types) out.emplace_back(std::move(type));
  return out;
}

/// How many ordered pairs of design elements fall in each conjugacy class.
std::vector<long long> pair_class_histogram(const CharTable& ct, const std::vector<Perm>& design) {
  std::vector<long long> counts(ct.count(), 0);
  std::vector<Perm> inv;
  inv.reserve(design.size());
  for (const Perm& s : design) inv.push_back(s.inverse());
  for (size_t a = 0; a < design.size(); ++a)
    for (size_t b = 0; b < design.size(); ++b)
      ++counts[ct.class_index_of(inv[a].compose(design[b]))];
  return counts;
}

long long gram_from_histogram(const CharTable& ct, const std::vector<long long>& counts, int pi) {
  long long acc = 0;
  for (int c = 0; c < ct.count(); ++c) acc += counts[c] * ct.value(pi, c);
  return acc;
}

/// Murnaghan-Nakayama recursion on the beta-set (distinct shifted parts
/// beta_i = lambda_i + rows - 1 - i): removing a border strip of length k
/// lowers one beta entry by k onto a vacant value, and the strip height is
/// the number of beta entries jumped over.
struct MNColumn {
  const std::vector<int>& mu;
  std::map<std::pair<std::vector<int>, size_t>, long long> memo;

  long long chi(const std::vector<int>& lambda, size_t mi) {
    if (lambda.empty()) return mi == mu.size() ? 1 : 0;
    if (mi == mu.size()) return 0;
    auto key = std::make_pair(lambda, mi);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    const int k = mu[mi];
    const int rows = static_cast<int>(lambda.size());
    std::vector<int> beta(rows);
    for (int i = 0; i < rows; ++i) beta[i] = lambda[i] + (rows - 1 - i);

    long long total = 0;
    for (int i = 0; i < rows; ++i) {
      const int target = beta[i] - k;
      if (target < 0) continue;
      bool occupied = false;
      int between = 0;
      for (int j = 0; j < rows; ++j) {
        if (j == i) continue;
        if (beta[j] == target) occupied = true;
        if (beta[j] > target && beta[j] < beta[i]) ++between;
      }
      if (occupied) continue;
      std::vector<int> nb = beta;
      nb[i] = target;
      std::sort(nb.begin(), nb.end(), std::greater<int>());
      std::vector<int> next;
      next.reserve(rows);
      for (int j = 0; j < rows; ++j) {
        const int part = nb[j] - (rows - 1 - j);
        if (part > 0) next.push_back(part);
      }
      const long long sub = chi(next, mi + 1);
      total += (between % 2 == 0) ? sub : -sub;
    }
    memo.emplace(std::move(key), total);
    return total;
  }
};

std::vector<std::vector<int>> ordered_tuples(int n, int t) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(cur.size()) == t) {
      out.push_back(cur);
      return;
    }
    for (int i = 0; i < n; ++i) {
      if (used[i]) continue;
      used[i] = true;
      cur.push_back(i);
      self(self);
      cur.pop_back();
      used[i] = false;
    }
  };
  rec(rec);
  return out;
}

int tuple_key(const std::vector<int>& tuple, int n) {
  int key = 0;
  for (int v : tuple) key = key * n + v;
  return key;
}

/// Uniformity side of a subset sweep. Counter c[a*A+b] says how many chosen
/// permutations map ordered t-tuple a onto ordered t-tuple b; the set is
/// t-wise uniform exactly when the sum of squared counters equals |D|^2
/// (per-tuple-row Cauchy-Schwarz, each row summing to |D|). A value
/// histogram keeps the maximum counter O(1) to maintain under removals.
struct UniformState {
  int A = 0;
  std::vector<std::vector<int>> jrank;  // [perm rank][tuple a] -> image tuple index
  std::vector<int> c;
  std::vector<long long> hist;
  int maxc = 0;
  long long s2 = 0;
  int size = 0;

  UniformState(int n, int t, const std::vector<Perm>& perms) {
    const auto tuples = ordered_tuples(n, t);
    A = static_cast<int>(tuples.size());
    std::unordered_map<int, int> rank_of;
    rank_of.reserve(tuples.size() * 2);
    for (int a = 0; a < A; ++a) rank_of.emplace(tuple_key(tuples[a], n), a);
    jrank.assign(perms.size(), std::vector<int>(A));
    std::vector<int> img(t);
    for (size_t g = 0; g < perms.size(); ++g)
      for (int a = 0; a < A; ++a) {
        for (int k = 0; k < t; ++k) img[k] = perms[g](tuples[a][k]);
        jrank[g][a] = rank_of.at(tuple_key(img, n));
      }
    c.assign(static_cast<size_t>(A) * A, 0);
    hist.assign(perms.size() + 2, 0);
    hist[0] = static_cast<long long>(A) * A;
  }

  void add(int g) {
    for (int a = 0; a < A; ++a) {
      int& v = c[static_cast<size_t>(a) * A + jrank[g][a]];
      s2 += 2LL * v + 1;
      --hist[v];
      ++v;
      ++hist[v];
      if (v > maxc) maxc = v;
    }
    ++size;
  }

  void remove(int g) {
    for (int a = 0; a < A; ++a) {
      int& v = c[static_cast<size_t>(a) * A + jrank[g][a]];
      s2 -= 2LL * v - 1;
      --hist[v];
      --v;
      ++hist[v];
    }
    while (maxc > 0 && hist[maxc] == 0) --maxc;
    --size;
  }

  bool uniform() const { return size > 0 && s2 == static_cast<long long>(size) * size; }

  /// Can any strict superset within `remaining` further elements be uniform?
  /// A uniform superset has size a multiple of A, at least A*maxc (counters
  /// only grow), and strictly above the current size.
  bool reachable(long long remaining) const {
    const long long lowest = std::max<long long>(maxc, size / A + 1);
    return lowest * A <= size + remaining;
  }
};

int inverse_mod5(int a) {
  for (int y = 1; y < 5; ++y)
    if (a * y % 5 == 1) return y;
  throw std::logic_error("inverse_mod5: not invertible");
}

std::vector<Perm> cyclic_group(int n) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = (i + 1) % n;
  const Perm gen(img);
  std::vector<Perm> out{Perm::identity(n)};
  Perm cur = gen;
  while (!cur.is_identity()) {
    out.push_back(cur);
    cur = cur.compose(gen);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Affine maps x -> ax + b over Z/5 acting on {0..4}: sharply 2-transitive,
/// order 20.
std::vector<Perm> affine_group_5() {
  std::vector<Perm> out;
  for (int a = 1; a < 5; ++a)
    for (int b = 0; b < 5; ++b) {
      std::vector<int> img(5);
      for (int x = 0; x < 5; ++x) img[x] = (a * x + b) % 5;
      out.emplace_back(img);
    }
  std::sort(out.begin(), out.end());
  return out;
}

/// Fractional linear maps x -> (ax+b)/(cx+d) on the projective line over
/// Z/5, with infinity as point 5: sharply 3-transitive, order 120.
std::vector<Perm> projective_group_6() {
  auto apply = [](int a, int b, int c, int d, int x) -> int {
    if (x == 5) {
      if (c == 0) return 5;
      return a * inverse_mod5(c) % 5;
    }
    const int num = (a * x + b) % 5;
    const int den = (c * x + d) % 5;
    if (den == 0) return 5;
    return num * inverse_mod5(den) % 5;
  };
  std::set<std::vector<int>> images;
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b)
      for (int c = 0; c < 5; ++c)
        for (int d = 0; d < 5; ++d) {
          if (((a * d - b * c) % 5 + 5) % 5 == 0) continue;
          std::vector<int> img(6);
          for (int x = 0; x < 6; ++x) img[x] = apply(a, b, c, d, x);
          images.insert(img);
        }
  std::vector<Perm> out;
  out.reserve(images.size());
  for (const auto& img : images) out.emplace_back(img);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Perm

Perm::Perm(std::vector<int> image) : img_(std::move(image)) {
  std::vector<bool> seen(img_.size(), false);
  for (int v : img_) {
    if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
      throw std::invalid_argument("Perm: image is not a bijection");
    seen[v] = true;
  }
}

Perm Perm::identity(int n) {
  if (n < 1) throw std::invalid_argument("Perm: degree must be positive");
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  return Perm(img);
}

Perm Perm::compose(const Perm& other) const {
  if (n() != other.n()) throw std::invalid_argument("Perm: degree mismatch");
  std::vector<int> img(img_.size());
  for (size_t i = 0; i < img_.size(); ++i) img[i] = img_[other.img_[i]];
  return Perm(img);
}

Perm Perm::inverse() const {
  std::vector<int> img(img_.size());
  for (size_t i = 0; i < img_.size(); ++i) img[img_[i]] = static_cast<int>(i);
  return Perm(img);
}

bool Perm::is_identity() const {
  for (size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != static_cast<int>(i)) return false;
  return true;
}

std::vector<int> Perm::cycle_type() const {
  std::vector<bool> seen(img_.size(), false);
  std::vector<int> lens;
  for (size_t i = 0; i < img_.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (size_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.begin(), lens.end(), std::greater<int>());
  return lens;
}

int Perm::sign() const {
  int transpositions = 0;
  for (int len : cycle_type()) transpositions += len - 1;
  return transpositions % 2 == 0 ? 1 : -1;
}

std::string Perm::one_line() const {
  if (n() > 9) throw std::invalid_argument("Perm: one-line digits need n <= 9");
  std::string s;
  for (int v : img_) s.push_back(static_cast<char>('1' + v));
  return s;
}

std::string Perm::cycle_string() const {
  if (is_identity()) return "e";
  std::vector<bool> seen(img_.size(), false);
  std::string out;
  for (size_t i = 0; i < img_.size(); ++i) {
    if (seen[i] || img_[i] == static_cast<int>(i)) continue;
    out.push_back('(');
    bool first = true;
    for (size_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      if (!first) out.push_back(' ');
      out += std::to_string(j + 1);
      first = false;
    }
    out.push_back(')');
  }
  return out;
}

Perm Perm::parse(const std::string& text, int n) {
  const size_t b = text.find_first_not_of(" \t\r\n");
  const size_t e = text.find_last_not_of(" \t\r\n");
  if (b == std::string::npos) throw std::invalid_argument("Perm: empty text");
  const std::string s = text.substr(b, e - b + 1);

  if (s == "e" || s == "()") return identity(n);

  if (s.front() == '(') {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    std::vector<bool> used(n, false);
    size_t pos = 0;
    while (pos < s.size()) {
      if (s[pos] != '(') throw std::invalid_argument("Perm: expected '('");
      const size_t close = s.find(')', pos);
      if (close == std::string::npos) throw std::invalid_argument("Perm: unbalanced cycle");
      const std::string body = s.substr(pos + 1, close - pos - 1);
      std::vector<int> cyc;
      if (body.find_first_of(" ,") != std::string::npos) {
        const char delim = body.find(',') != std::string::npos ? ',' : ' ';
        std::istringstream is(body);
        std::string tok;
        while (std::getline(is, tok, delim)) {
          if (tok.find_first_not_of(" \t") == std::string::npos) continue;
          cyc.push_back(std::stoi(tok));
        }
      } else {
        for (char ch : body) {
          if (!std::isdigit(static_cast<unsigned char>(ch)))
            throw std::invalid_argument("Perm: bad cycle element");
          cyc.push_back(ch - '0');
        }
      }
      if (cyc.size() < 2) throw std::invalid_argument("Perm: cycle too short");
      for (int& v : cyc) {
        if (v < 1 || v > n) throw std::invalid_argument("Perm: cycle element out of range");
        v -= 1;
        if (used[v]) throw std::invalid_argument("Perm: cycles not disjoint");
        used[v] = true;
      }
      for (size_t i = 0; i < cyc.size(); ++i) img[cyc[i]] = cyc[(i + 1) % cyc.size()];
      pos = close + 1;
      while (pos < s.size() && s[pos] == ' ') ++pos;
    }
    return Perm(img);
  }

  if (static_cast<int>(s.size()) != n)
    throw std::invalid_argument("Perm: one-line text must have exactly n digits");
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw std::invalid_argument("Perm: bad one-line digit");
    img[i] = s[i] - '1';
  }
  return Perm(img);
}

std::vector<Perm> all_perms(int n) {
  if (n < 1) throw std::invalid_argument("all_perms: degree must be positive");
  if (factorial(n) > kCayleyVertexLimit)
    throw BudgetExceeded("all_perms: n! exceeds the group materialization limit");
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::vector<Perm> out;
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

long long perm_lex_rank(const Perm& s) {
  const int n = s.n();
  long long rank = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j)
      if (s(j) < s(i)) ++smaller;
    rank += smaller * factorial_ll(n - 1 - i);
  }
  return rank;
}

// ---------------------------------------------------------------------------
// Partitions

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  if (parts.empty()) throw std::invalid_argument("Partition: no parts");
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1])
      throw std::invalid_argument("Partition: parts must be weakly decreasing");
  }
}

int Partition::n() const {
  int sum = 0;
  for (int p : parts) sum += p;
  return sum;
}

BigInt Partition::hook_dimension() const {
  BigInt hooks = 1;
  const int rows = static_cast<int>(parts.size());
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < parts[i]; ++j) {
      const int arm = parts[i] - j - 1;
      int leg = 0;
      for (int r = i + 1; r < rows; ++r)
        if (parts[r] > j) ++leg;
      hooks *= arm + leg + 1;
    }
  return factorial(n()) / hooks;
}

std::string Partition::to_string() const {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(parts[i]);
  }
  return out;
}

Partition Partition::parse(const std::string& text) {
  std::vector<int> parts;
  std::istringstream is(text);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    if (tok.find_first_not_of(" \t") == std::string::npos)
      throw std::invalid_argument("Partition: empty part");
    parts.push_back(std::stoi(tok));
  }
  return Partition(parts);
}

std::vector<Partition> all_partitions(int n) {
  if (n < 1) throw std::invalid_argument("all_partitions: n must be positive");
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest, int cap) -> void {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int next = std::min(rest, cap); next >= 1; --next) {
      cur.push_back(next);
      self(self, rest - next, next);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

BigInt conjugacy_class_size(const Partition& mu) {
  BigInt z = 1;
  int run = 0;
  for (size_t i = 0; i < mu.parts.size(); ++i) {
    z *= mu.parts[i];
    ++run;
    if (i + 1 == mu.parts.size() || mu.parts[i + 1] != mu.parts[i]) {
      z *= factorial(run);
      run = 0;
    }
  }
  return factorial(mu.n()) / z;
}

// ---------------------------------------------------------------------------
// Character table

CharTable::CharTable(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("CharTable: n must be positive");
  if (n > kCharTableMaxN) throw BudgetExceeded("CharTable: n exceeds the recursion budget");
  parts_ = all_partitions(n);
  const int m = count();
  table_.assign(m, std::vector<long long>(m, 0));
  class_sizes_.reserve(m);
  for (int c = 0; c < m; ++c) class_sizes_.push_back(conjugacy_class_size(parts_[c]));
  for (int c = 0; c < m; ++c) {
    MNColumn col{parts_[c].parts, {}};
    for (int p = 0; p < m; ++p) table_[p][c] = col.chi(parts_[p].parts, 0);
  }
}

int CharTable::index_of(const Partition& p) const {
  for (int i = 0; i < count(); ++i)
    if (parts_[i] == p) return i;
  throw std::invalid_argument("CharTable: unknown partition " + p.to_string());
}

long long CharTable::value(int p_index, int class_index) const {
  return table_.at(p_index).at(class_index);
}

long long CharTable::value(const Partition& p, const Partition& mu) const {
  return table_.at(index_of(p)).at(index_of(mu));
}

long long CharTable::dimension(int p_index) const {
  return table_.at(p_index).at(count() - 1);  // the identity class (1^n) is last
}

int CharTable::class_index_of(const Perm& s) const {
  if (s.n() != n_) throw std::invalid_argument("CharTable: degree mismatch");
  return index_of(Partition(s.cycle_type()));
}

bool CharTable::orthogonality_audit() const {
  const int m = count();
  const BigInt order = factorial(n_);

  BigInt total = 0;
  for (int c = 0; c < m; ++c) total += class_sizes_[c];
  if (total != order) return false;

  BigInt dim_sq = 0;
  for (int p = 0; p < m; ++p) {
    if (table_[0][p] != 1) return false;  // the trivial row is all ones
    const long long d = dimension(p);
    if (d <= 0 || BigInt(d) != parts_[p].hook_dimension()) return false;
    dim_sq += BigInt(d) * d;
  }
  if (dim_sq != order) return false;

  for (int p = 0; p < m; ++p)
    for (int q = p; q < m; ++q) {
      BigInt acc = 0;
      for (int c = 0; c < m; ++c) acc += class_sizes_[c] * table_[p][c] * table_[q][c];
      if (acc != (p == q ? order : BigInt(0))) return false;
    }

  for (int c = 0; c < m; ++c)
    for (int d = c; d < m; ++d) {
      BigInt acc = 0;
      for (int p = 0; p < m; ++p) acc += BigInt(table_[p][c]) * table_[p][d];
      if (acc != (c == d ? order / class_sizes_[c] : BigInt(0))) return false;
    }
  return true;
}

Partition transposition_class(int n) {
  if (n < 2) throw std::invalid_argument("transposition_class: n must be at least 2");
  std::vector<int> parts{2};
  parts.insert(parts.end(), n - 2, 1);
  return Partition(parts);
}

std::vector<Partition> derangement_classes(int n) {
  std::vector<Partition> out;
  for (const Partition& mu : all_partitions(n))
    if (mu.parts.back() >= 2) out.push_back(mu);
  return out;
}

// ---------------------------------------------------------------------------
// Cayley graphs and eigenvalues

Graph cayley_graph(int n, const std::vector<Partition>& classes, int vertex_limit) {
  if (n < 2) throw std::invalid_argument("cayley_graph: n must be at least 2");
  const auto normal = normalized_classes(n, classes, "cayley_graph");
  if (factorial(n) > vertex_limit) throw BudgetExceeded("cayley_graph: n! exceeds vertex limit");

  const std::vector<Perm> perms = all_perms(n);
  std::vector<Perm> connection;
  for (const Perm& x : perms) {
    const Partition type(x.cycle_type());
    if (std::find(normal.begin(), normal.end(), type) != normal.end()) connection.push_back(x);
  }

  std::vector<std::pair<int, int>> edges;
  for (int g = 0; g < static_cast<int>(perms.size()); ++g)
    for (const Perm& x : connection) {
      const int h = static_cast<int>(perm_lex_rank(perms[g].compose(x)));
      if (g < h) edges.emplace_back(g, h);
    }

  CayleyFamily fam{n, {}};
  for (const Partition& type : normal) fam.classes.push_back(type.parts);
  return Graph(static_cast<int>(perms.size()), edges, fam, /*allow_disconnected=*/true);
}

Rational cayley_eigenvalue(const CharTable& ct, const Partition& p,
                           const std::vector<Partition>& classes) {
  const auto normal = normalized_classes(ct.n(), classes, "cayley_eigenvalue");
  BigInt num = 0;
  for (const Partition& mu : normal) num += conjugacy_class_size(mu) * ct.value(p, mu);
  return Rational(num, BigInt(ct.dimension(ct.index_of(p))));
}

Rational cayley_laplacian_eigenvalue(const CharTable& ct, const Partition& p,
                                     const std::vector<Partition>& classes) {
  const auto normal = normalized_classes(ct.n(), classes, "cayley_laplacian_eigenvalue");
  BigInt degree = 0;
  for (const Partition& mu : normal) degree += conjugacy_class_size(mu);
  return Rational(degree) - cayley_eigenvalue(ct, p, normal);
}

SpectrumSketch cayley_spectrum_sketch(const CharTable& ct, const std::vector<Partition>& classes) {
  const auto normal = normalized_classes(ct.n(), classes, "cayley_spectrum_sketch");
  std::map<Rational, BigInt> merged;
  for (const Partition& p : ct.partitions()) {
    const BigInt d(ct.dimension(ct.index_of(p)));
    merged[cayley_laplacian_eigenvalue(ct, p, normal)] += d * d;
  }
  SpectrumSketch sketch;
  sketch.source = MatrixSource::laplacian;
  for (const auto& [value, mult] : merged)
    sketch.entries.push_back({value, static_cast<int>(mult.convert_to<long long>())});
  return sketch;
}

long long transposition_adjacency_eigenvalue(const Partition& p) {
  long long doubled = 0;
  for (size_t i = 0; i < p.parts.size(); ++i) {
    const long long part = p.parts[i];
    doubled += part * (part - 2 * static_cast<long long>(i + 1) + 1);
  }
  if (doubled % 2 != 0) throw std::logic_error("content sum must be even");
  return doubled / 2;
}

// ---------------------------------------------------------------------------
// Gram criterion and t-wise uniformity

long long gram_sum(const CharTable& ct, const std::vector<Perm>& design, const Partition& p) {
  check_perm_set(design, ct.n(), "gram_sum");
  const auto counts = pair_class_histogram(ct, design);
  return gram_from_histogram(ct, counts, ct.index_of(p));
}

bool averages_phi_p(const CharTable& ct, const std::vector<Perm>& design, const Partition& p) {
  return gram_sum(ct, design, p) == 0;
}

Certificate phi_p_certificate(const CharTable& ct, const std::vector<Perm>& design,
                              const std::vector<Partition>& eigenspaces) {
  check_perm_set(design, ct.n(), "phi_p_certificate");
  std::string labels;
  for (size_t i = 0; i < eigenspaces.size(); ++i) {
    if (i) labels += ";";
    labels += "(" + eigenspaces[i].to_string() + ")";
  }
  Certificate cert("symmetric n=" + std::to_string(ct.n()) + " phi-eigenspaces [" + labels +
                   "] design-size " + std::to_string(design.size()));
  cert.add_fact("group-order", factorial(ct.n()).str());
  const auto counts = pair_class_histogram(ct, design);
  bool ok = true;
  for (const Partition& p : eigenspaces) {
    const long long acc = gram_from_histogram(ct, counts, ct.index_of(p));
    cert.add_residual("(" + p.to_string() + ")", std::to_string(acc));
    if (acc != 0 && ok) {
      ok = false;
      cert.set_counterexample("p=(" + p.to_string() + ") gram=" + std::to_string(acc));
    }
  }
  cert.set_verdict(ok);
  return cert;
}

bool t_wise_uniform_check(const std::vector<Perm>& design, int t) {
  const int n = design.empty() ? 0 : design.front().n();
  check_perm_set(design, n, "t_wise_uniform_check");
  if (t < 1 || t > n) throw std::invalid_argument("t_wise_uniform_check: need 1 <= t <= n");
  const auto tuples = ordered_tuples(n, t);
  const long long a = static_cast<long long>(tuples.size());
  std::unordered_map<int, int> rank_of;
  for (size_t i = 0; i < tuples.size(); ++i)
    rank_of.emplace(tuple_key(tuples[i], n), static_cast<int>(i));
  std::unordered_map<long long, long long> counts;
  std::vector<int> img(t);
  for (const Perm& s : design)
    for (size_t i = 0; i < tuples.size(); ++i) {
      for (int k = 0; k < t; ++k) img[k] = s(tuples[i][k]);
      ++counts[static_cast<long long>(i) * a + rank_of.at(tuple_key(img, n))];
    }
  long long s2 = 0;
  for (const auto& [key, v] : counts) s2 += v * v;
  const long long size = static_cast<long long>(design.size());
  return s2 == size * size;
}

Certificate t_wise_uniform_certificate(const std::vector<Perm>& design, int t) {
  const int n = design.empty() ? 0 : design.front().n();
  check_perm_set(design, n, "t_wise_uniform_certificate");
  if (t < 1 || t > n) throw std::invalid_argument("t_wise_uniform_certificate: need 1 <= t <= n");
  Certificate cert("symmetric n=" + std::to_string(n) + " t-wise-uniform t=" + std::to_string(t) +
                   " design-size " + std::to_string(design.size()));
  const auto tuples = ordered_tuples(n, t);
  const long long a = static_cast<long long>(tuples.size());
  const long long group_order = factorial_ll(n);
  const long long required = static_cast<long long>(design.size()) * factorial_ll(n - t);
  cert.add_fact("tuple-count", std::to_string(a));
  cert.add_fact("required-count-times-order", std::to_string(required));

  std::unordered_map<int, int> rank_of;
  for (size_t i = 0; i < tuples.size(); ++i)
    rank_of.emplace(tuple_key(tuples[i], n), static_cast<int>(i));
  std::map<std::pair<int, int>, long long> counts;
  std::vector<int> img(t);
  for (const Perm& s : design)
    for (size_t i = 0; i < tuples.size(); ++i) {
      for (int k = 0; k < t; ++k) img[k] = s(tuples[i][k]);
      ++counts[{static_cast<int>(i), rank_of.at(tuple_key(img, n))}];
    }

  auto tuple_digits = [&](const std::vector<int>& tuple) {
    std::string out;
    for (int v : tuple) out += std::to_string(v + 1);
    return out;
  };

  bool ok = required % group_order == 0;
  if (!ok) {
    cert.set_counterexample("design size " + std::to_string(design.size()) +
                            " is not divisible by the tuple count " + std::to_string(a));
  } else {
    const long long cstar = required / group_order;
    for (const auto& [cell, count] : counts)
      if (count != cstar) {
        ok = false;
        cert.set_counterexample("tuple " + tuple_digits(tuples[cell.first]) + "->" +
                                tuple_digits(tuples[cell.second]) + " count " +
                                std::to_string(count) + " wanted " + std::to_string(cstar));
        break;
      }
    if (ok && static_cast<long long>(counts.size()) != a * a) {
      // some required cell was never hit; name the first one
      bool found = false;
      for (int i = 0; !found && i < a; ++i)
        for (int j = 0; !found && j < a; ++j)
          if (!counts.count({i, j})) {
            found = true;
            cert.set_counterexample("tuple " + tuple_digits(tuples[i]) + "->" +
                                    tuple_digits(tuples[j]) + " count 0 wanted " +
                                    std::to_string(cstar));
          }
      ok = false;
    }
  }
  cert.set_verdict(ok);
  return cert;
}

// ---------------------------------------------------------------------------
// Incremental Gram sums

GramAccumulator::GramAccumulator(const CharTable& ct, std::vector<Partition> tracked)
    : tracked_(std::move(tracked)) {
  const int n = ct.n();
  if (factorial(n) > 720) throw BudgetExceeded("GramAccumulator: needs n <= 6");
  order_ = static_cast<int>(factorial_ll(n));
  const std::vector<Perm> perms = all_perms(n);
  std::vector<Perm> inv;
  inv.reserve(perms.size());
  for (const Perm& s : perms) inv.push_back(s.inverse());
  pair_class_.assign(static_cast<size_t>(order_) * order_, 0);
  for (int g = 0; g < order_; ++g)
    for (int h = 0; h < order_; ++h)
      pair_class_[static_cast<size_t>(g) * order_ + h] =
          static_cast<uint8_t>(ct.class_index_of(inv[g].compose(perms[h])));
  for (const Partition& p : tracked_) {
    const int pi = ct.index_of(p);
    std::vector<long long> row(ct.count());
    for (int c = 0; c < ct.count(); ++c) row[c] = ct.value(pi, c);
    chi_.push_back(std::move(row));
    dims_.push_back(ct.dimension(pi));
  }
  rows_.assign(tracked_.size(), std::vector<long long>(order_, 0));
  gram_.assign(tracked_.size(), 0);
}

void GramAccumulator::add(int lex_rank) {
  const uint8_t* classes = pair_class_.data();
  for (size_t p = 0; p < tracked_.size(); ++p) {
    gram_[p] += chi_[p][classes[static_cast<size_t>(lex_rank) * order_ + lex_rank]] +
                2 * rows_[p][lex_rank];
    const auto& chi = chi_[p];
    auto& row = rows_[p];
    for (int g = 0; g < order_; ++g)
      row[g] += chi[classes[static_cast<size_t>(g) * order_ + lex_rank]];
  }
  ++size_;
}

void GramAccumulator::remove(int lex_rank) {
  const uint8_t* classes = pair_class_.data();
  for (size_t p = 0; p < tracked_.size(); ++p) {
    const auto& chi = chi_[p];
    auto& row = rows_[p];
    for (int g = 0; g < order_; ++g)
      row[g] -= chi[classes[static_cast<size_t>(g) * order_ + lex_rank]];
    gram_[p] -= chi[classes[static_cast<size_t>(lex_rank) * order_ + lex_rank]] +
                2 * rows_[p][lex_rank];
  }
  --size_;
}

bool GramAccumulator::all_zero() const {
  for (long long g : gram_)
    if (g != 0) return false;
  return true;
}

bool GramAccumulator::averaging_unreachable(long long remaining) const {
  // ||sum_{D u T} rho_p|| >= sqrt(gram_p) - |T| sqrt(d_p), so gram_p beyond
  // d_p |T|^2 keeps every extension by at most `remaining` strictly positive.
  for (size_t p = 0; p < tracked_.size(); ++p)
    if (gram_[p] > dims_[p] * remaining * remaining) return true;
  return false;
}

// ---------------------------------------------------------------------------
// First part order equivalence

namespace {

std::vector<Partition> first_part_eigenspaces(int n, int t) {
  std::vector<Partition> tracked;
  for (const Partition& p : all_partitions(n))
    if (p.first_part() < n && p.first_part() >= n - t) tracked.push_back(p);
  return tracked;
}

void exhaustive_first_part(int n, int t, long long budget, FirstPartReport& report) {
  const CharTable ct(n);
  const std::vector<Perm> perms = all_perms(n);
  const int order = static_cast<int>(perms.size());
  const int cap = n >= 4 ? 12 : order;
  const bool prune = n >= 4;  // small orders are cheap enough to sweep whole
  report.mode = cap < order ? "exhaustive(max-size=" + std::to_string(cap) + ")" : "exhaustive";

  GramAccumulator acc(ct, first_part_eigenspaces(n, t));
  UniformState uni(n, t, perms);
  std::vector<int> current;

  auto rec = [&](auto&& self, int idx) -> void {
    ++report.nodes;
    if (report.nodes > budget) throw BudgetExceeded("first_part_design_equivalence: node budget");
    if (idx == order) return;
    const long long rem = std::min<long long>(order - idx, cap - uni.size);
    if (prune && acc.averaging_unreachable(rem) && !uni.reachable(rem)) {
      ++report.pruned_subtrees;
      return;
    }
    self(self, idx + 1);
    if (uni.size == cap) return;
    acc.add(idx);
    uni.add(idx);
    current.push_back(idx);
    ++report.subsets_checked;
    const bool uniform = uni.uniform();
    const bool averaging = acc.all_zero();
    if (uniform != averaging && report.discrepancy.empty()) {
      std::string ids;
      for (int g : current) ids += (ids.empty() ? "" : " ") + perms[g].one_line();
      report.discrepancy =
          std::string(uniform ? "uniform-not-averaging" : "averaging-not-uniform") + " {" + ids +
          "}";
    }
    if (uniform) report.uniform_sets.push_back(current);
    self(self, idx + 1);
    current.pop_back();
    uni.remove(idx);
    acc.remove(idx);
  };
  rec(rec, 0);
  report.ok = report.discrepancy.empty();
}

void sampled_first_part(int n, int t, int samples, uint32_t seed, FirstPartReport& report) {
  const CharTable ct(n);
  const std::vector<Perm> perms = all_perms(n);
  const auto tracked = first_part_eigenspaces(n, t);
  std::mt19937 rng(seed);

  auto averaging = [&](const std::vector<Perm>& d) {
    const auto counts = pair_class_histogram(ct, d);
    for (const Partition& p : tracked)
      if (gram_from_histogram(ct, counts, ct.index_of(p)) != 0) return false;
    return true;
  };
  auto check = [&](const std::vector<Perm>& d, const std::string& name) {
    ++report.subsets_checked;
    const bool uniform = t_wise_uniform_check(d, t);
    const bool avg = averaging(d);
    if (uniform != avg && report.discrepancy.empty())
      report.discrepancy = (uniform ? "uniform-not-averaging " : "averaging-not-uniform ") + name;
  };

  struct NamedSample {
    std::string name;
    std::vector<Perm> set;
  };
  std::vector<NamedSample> named;
  named.push_back({"full-group", perms});
  named.push_back({"cyclic", cyclic_group(n)});
  named.push_back({"alternating", alternating_group(n)});
  if (n == 5) named.push_back({"affine-5", affine_group_5()});
  if (n == 6) named.push_back({"projective-6", projective_group_6()});
  for (const auto& [name, set] : named) {
    check(set, name);
    if (set.size() < perms.size()) {
      // near miss: swap one member for an outsider
      std::set<Perm> members(set.begin(), set.end());
      Perm outsider = perms[rng() % perms.size()];
      while (members.count(outsider)) outsider = perms[rng() % perms.size()];
      std::vector<Perm> damaged = set;
      damaged[rng() % damaged.size()] = outsider;
      std::sort(damaged.begin(), damaged.end());
      check(damaged, name + "-near-miss");
    }
  }

  const int cap = static_cast<int>(std::min<size_t>(240, perms.size()));
  for (int s = 0; s < samples; ++s) {
    const int size = 1 + static_cast<int>(rng() % cap);
    std::vector<int> ranks(perms.size());
    std::iota(ranks.begin(), ranks.end(), 0);
    for (int i = static_cast<int>(ranks.size()) - 1; i > 0; --i)
      std::swap(ranks[i], ranks[rng() % (i + 1)]);
    std::vector<Perm> d;
    d.reserve(size);
    for (int i = 0; i < size; ++i) d.push_back(perms[ranks[i]]);
    std::sort(d.begin(), d.end());
    check(d, "random-" + std::to_string(s));
  }
  report.mode = "sampled";
  report.ok = report.discrepancy.empty();
}

}  // namespace

FirstPartReport first_part_design_equivalence(int n, int t, long long budget, int samples,
                                              uint32_t seed) {
  if (n < 2) throw std::invalid_argument("first_part_design_equivalence: n must be at least 2");
  if (t < 1 || t > n)
    throw std::invalid_argument("first_part_design_equivalence: need 1 <= t <= n");
  FirstPartReport report;
  if (n <= 4) {
    exhaustive_first_part(n, t, budget, report);
  } else if (n <= 6) {
    sampled_first_part(n, t, samples, seed, report);
  } else {
    throw BudgetExceeded("first_part_design_equivalence: n > 6 is out of sweep range");
  }
  return report;
}

// ---------------------------------------------------------------------------
// Order conflict, cosets, stabilizer enumeration

OrderConflict order_conflict_witness(int n) {
  if (n < 6) throw std::invalid_argument("order_conflict_witness: needs n >= 6");
  OrderConflict w;
  if (n % 2 == 1) {
    const int m = (n - 1) / 2;
    std::vector<int> p{m + 1};
    p.insert(p.end(), m, 1);
    w.p = Partition(p);
    w.q = Partition({m, m, 1});
  } else {
    const int m = (n - 2) / 2;
    std::vector<int> p{m + 1};
    p.insert(p.end(), m + 1, 1);
    w.p = Partition(p);
    w.q = Partition({m, m, 2});
  }
  w.adjacency_p = transposition_adjacency_eigenvalue(w.p);
  w.adjacency_q = transposition_adjacency_eigenvalue(w.q);
  const Rational degree(binomial_ll(n, 2));
  w.laplacian_p = degree - Rational(w.adjacency_p);
  w.laplacian_q = degree - Rational(w.adjacency_q);
  if (w.p.first_part() <= w.q.first_part() || w.adjacency_p > w.adjacency_q)
    throw std::logic_error("order_conflict_witness: families violate the claimed order");
  return w;
}

std::vector<Perm> symmetric_coset(int n, int t, const Perm& left, const Perm& right) {
  if (t < 1 || t >= n) throw std::invalid_argument("symmetric_coset: need 1 <= t < n");
  if (left.n() != n || right.n() != n)
    throw std::invalid_argument("symmetric_coset: translation degree mismatch");
  std::vector<Perm> out;
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::vector<int> small(t);
  std::iota(small.begin(), small.end(), 0);
  do {
    for (int i = 0; i < t; ++i) img[i] = small[i];
    out.push_back(left.compose(Perm(img).compose(right)));
  } while (std::next_permutation(small.begin(), small.end()));
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end())
    throw std::logic_error("symmetric_coset: coset has duplicates");
  return out;
}

Certificate coset_reverse_order_certificate(const CharTable& ct, const std::vector<Perm>& coset,
                                            int t) {
  check_perm_set(coset, ct.n(), "coset_reverse_order_certificate");
  if (t < 1 || t >= ct.n())
    throw std::invalid_argument("coset_reverse_order_certificate: need 1 <= t < n");
  Certificate cert("symmetric n=" + std::to_string(ct.n()) + " reverse-order coset t=" +
                   std::to_string(t) + " size=" + std::to_string(coset.size()));
  std::string required;
  for (const Partition& p : ct.partitions())
    if (p.first_part() < t) required += (required.empty() ? "" : ";") + ("(" + p.to_string() + ")");
  cert.add_fact("averaged-eigenspaces", required.empty() ? "none" : required);
  if (t == 1)
    cert.add_fact("edge-case",
                  "no eigenspace has first part below 1; a singleton averages nothing nontrivial");
  const auto counts = pair_class_histogram(ct, coset);
  bool ok = true;
  for (const Partition& p : ct.partitions()) {
    if (p.first_part() == ct.n()) continue;  // the constant eigenspace
    const long long acc = gram_from_histogram(ct, counts, ct.index_of(p));
    cert.add_residual("(" + p.to_string() + ")", std::to_string(acc));
    const bool expect_zero = p.first_part() < t;
    if ((acc == 0) != expect_zero && ok) {
      ok = false;
      cert.set_counterexample("p=(" + p.to_string() + ") gram=" + std::to_string(acc) +
                              (expect_zero ? " wanted 0" : " wanted nonzero"));
    }
  }
  cert.set_verdict(ok);
  return cert;
}

std::vector<Perm> point_stabilizer_coset(int n, int i, int j) {
  if (i < 0 || i >= n || j < 0 || j >= n)
    throw std::invalid_argument("point_stabilizer_coset: index out of range");
  std::vector<Perm> out;
  for (const Perm& s : all_perms(n))
    if (s(i) == j) out.push_back(s);
  return out;
}

BirkhoffReport birkhoff_minimal_enumeration(int n, long long budget) {
  if (n < 3) throw std::invalid_argument("birkhoff_minimal_enumeration: needs n >= 3");
  if (n > 4) throw BudgetExceeded("birkhoff_minimal_enumeration: n > 4 is out of sweep range");
  const CharTable ct(n);
  const std::vector<Perm> perms = all_perms(n);
  const int order = static_cast<int>(perms.size());
  const int cap = n >= 4 ? 2 * static_cast<int>(factorial_ll(n - 1)) : order;

  std::vector<Partition> tracked;
  for (const Partition& p : ct.partitions())
    if (p.first_part() < n - 1) tracked.push_back(p);

  std::vector<uint32_t> coset_masks;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      uint32_t cmask = 0;
      for (int g = 0; g < order; ++g)
        if (perms[g](i) == j) cmask |= 1u << g;
      coset_masks.push_back(cmask);
    }
  std::sort(coset_masks.begin(), coset_masks.end());
  const bool cosets_distinct =
      std::adjacent_find(coset_masks.begin(), coset_masks.end()) == coset_masks.end();
  std::vector<std::vector<uint32_t>> masks_through(order);
  for (uint32_t cmask : coset_masks)
    for (int g = 0; g < order; ++g)
      if (cmask & (1u << g)) masks_through[g].push_back(cmask);

  BirkhoffReport report;
  report.minimal_size = static_cast<int>(factorial_ll(n - 1));
  GramAccumulator acc(ct, tracked);
  uint32_t mask = 0;
  int minimal_hits = 0;
  int smallest = order + 1;
  bool coverage_ok = true;

  auto rec = [&](auto&& self, int idx) -> void {
    ++report.nodes;
    if (report.nodes > budget) throw BudgetExceeded("birkhoff_minimal_enumeration: node budget");
    if (idx == order) return;
    const long long rem = std::min<long long>(order - idx, cap - acc.size());
    if (acc.averaging_unreachable(rem)) {
      ++report.pruned_subtrees;
      return;
    }
    self(self, idx + 1);
    if (acc.size() == cap) return;
    acc.add(idx);
    mask |= 1u << idx;
    if (acc.all_zero()) {
      ++report.designs_found;
      smallest = std::min(smallest, acc.size());
      if (std::binary_search(coset_masks.begin(), coset_masks.end(), mask)) ++minimal_hits;
      // union-of-cosets audit: every member must lie in a contained coset
      for (int g = 0; g < order && coverage_ok; ++g) {
        if (!(mask & (1u << g))) continue;
        bool covered = false;
        for (uint32_t cmask : masks_through[g])
          if ((cmask & ~mask) == 0) {
            covered = true;
            break;
          }
        if (!covered) coverage_ok = false;
      }
    }
    self(self, idx + 1);
    mask &= ~(1u << idx);
    acc.remove(idx);
  };
  rec(rec, 0);

  report.union_closure = coverage_ok;
  report.minimal_count = minimal_hits;
  report.ok = cosets_distinct && coverage_ok && minimal_hits == n * n &&
              smallest == report.minimal_size;
  report.detail = "designs(size<=" + std::to_string(cap) +
                  ")=" + std::to_string(report.designs_found) +
                  " stabilizer-cosets=" + std::to_string(minimal_hits) + "/" +
                  std::to_string(n * n) + " smallest=" + std::to_string(smallest) +
                  " expected-minimal-size=" + std::to_string(report.minimal_size);
  return report;
}

std::vector<Perm> alternating_group(int n) {
  std::vector<Perm> out;
  for (const Perm& s : all_perms(n))
    if (s.sign() == 1) out.push_back(s);
  return out;
}

}  // namespace gdesign
