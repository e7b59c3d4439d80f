#include "gdesign/graph.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace gdesign {

std::string family_to_string(const Family& f) {
  std::ostringstream os;
  if (std::holds_alternative<HammingFamily>(f)) {
    const auto& h = std::get<HammingFamily>(f);
    os << "hamming " << h.n << " " << h.q;
  } else if (std::holds_alternative<JohnsonFamily>(f)) {
    const auto& j = std::get<JohnsonFamily>(f);
    os << "johnson " << j.n << " " << j.k;
  } else if (std::holds_alternative<CayleyFamily>(f)) {
    const auto& c = std::get<CayleyFamily>(f);
    os << "cayley " << c.n;
    for (const auto& cls : c.classes) {
      os << " ";
      for (size_t i = 0; i < cls.size(); ++i) os << (i ? "," : "") << cls[i];
    }
  } else if (std::holds_alternative<MycielskianFamily>(f)) {
    os << "mycielskian " << std::get<MycielskianFamily>(f).base_n;
  } else {
    os << "generic";
  }
  return os.str();
}

Family parse_family(const std::string& text) {
  std::istringstream is(text);
  std::string kind;
  is >> kind;
  if (kind == "hamming") {
    HammingFamily h{};
    if (!(is >> h.n >> h.q)) throw std::invalid_argument("bad hamming family header");
    return h;
  }
  if (kind == "johnson") {
    JohnsonFamily j{};
    if (!(is >> j.n >> j.k)) throw std::invalid_argument("bad johnson family header");
    return j;
  }
  if (kind == "cayley") {
    CayleyFamily c{};
    if (!(is >> c.n)) throw std::invalid_argument("bad cayley family header");
    std::string cls;
    while (is >> cls) {
      std::vector<int> type;
      std::istringstream cs(cls);
      std::string part;
      while (std::getline(cs, part, ',')) type.push_back(std::stoi(part));
      c.classes.push_back(std::move(type));
    }
    return c;
  }
  if (kind == "mycielskian") {
    MycielskianFamily m{};
    if (!(is >> m.base_n)) throw std::invalid_argument("bad mycielskian family header");
    return m;
  }
  if (kind == "generic") return {};
  throw std::invalid_argument("unknown family kind: " + kind);
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges, Family family,
             bool allow_disconnected)
    : adj_(n), family_(std::move(family)) {
  if (n <= 0) throw std::invalid_argument("Graph: vertex count must be positive");
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) throw std::invalid_argument("Graph: endpoint out of range");
    if (u == v) throw std::invalid_argument("Graph: loop edge");
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  m_ = static_cast<int>(edges.size());
  for (auto& nbrs : adj_) {
    std::sort(nbrs.begin(), nbrs.end());
    if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end())
      throw std::invalid_argument("Graph: parallel edge");
  }
  // BFS connectivity check.
  std::vector<char> seen(n, 0);
  std::vector<int> queue{0};
  seen[0] = 1;
  for (size_t head = 0; head < queue.size(); ++head)
    for (int w : adj_[queue[head]])
      if (!seen[w]) {
        seen[w] = 1;
        queue.push_back(w);
      }
  connected_ = queue.size() == static_cast<size_t>(n);
  if (!connected_ && !allow_disconnected)
    throw std::invalid_argument("Graph: disconnected input");
}

bool Graph::adjacent(int u, int v) const {
  const auto& nbrs = adj_.at(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> result;
  result.reserve(m_);
  for (int u = 0; u < vertex_count(); ++u)
    for (int v : adj_[u])
      if (u < v) result.emplace_back(u, v);
  return result;
}

std::optional<int> Graph::regular_degree() const {
  int d = degree(0);
  for (int v = 1; v < vertex_count(); ++v)
    if (degree(v) != d) return std::nullopt;
  return d;
}

Graph Graph::read(std::istream& in) {
  std::string line;
  Family family;
  int n = -1, m = -1;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    std::istringstream is(line);
    std::string tag;
    if (!(is >> tag)) continue;
    if (tag == "c") {
      std::string word;
      if (is >> word && word == "family") {
        std::string rest;
        std::getline(is, rest);
        family = parse_family(rest);
      }
      continue;
    }
    if (tag == "p") {
      if (n >= 0) throw std::invalid_argument("graph file: duplicate p line");
      if (!(is >> n >> m) || n <= 0 || m < 0) throw std::invalid_argument("graph file: bad p line");
      edges.reserve(m);
      continue;
    }
    if (tag == "e") {
      int u, v;
      if (n < 0) throw std::invalid_argument("graph file: e line before p line");
      if (!(is >> u >> v)) throw std::invalid_argument("graph file: bad e line");
      edges.emplace_back(u - 1, v - 1);
      continue;
    }
    throw std::invalid_argument("graph file: unknown line tag: " + tag);
  }
  if (n < 0) throw std::invalid_argument("graph file: missing p line");
  if (static_cast<int>(edges.size()) != m)
    throw std::invalid_argument("graph file: edge count mismatch");
  // Disconnected graphs are legitimate only for cayley families (the
  // derangement graph is one); everything else must be connected.
  bool allow_disconnected = std::holds_alternative<CayleyFamily>(family);
  return Graph(n, edges, family, allow_disconnected);
}

Graph Graph::read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open graph file: " + path);
  return read(in);
}

void Graph::write(std::ostream& out) const {
  out << "c family " << family_to_string(family_) << "\n";
  out << "p " << vertex_count() << " " << edge_count() << "\n";
  for (auto [u, v] : edges()) out << "e " << u + 1 << " " << v + 1 << "\n";
}

void Graph::write_file(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  write(out);
}

bool triangle_free(const Graph& g) {
  for (auto [u, v] : g.edges())
    for (int w : g.neighbors(u))
      if (w != v && g.adjacent(v, w)) return false;
  return true;
}

bool isomorphic(const Graph& a, const Graph& b) {
  int n = a.vertex_count();
  if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> deg_a(n), deg_b(n);
  for (int v = 0; v < n; ++v) {
    deg_a[v] = a.degree(v);
    deg_b[v] = b.degree(v);
  }
  {
    auto sa = deg_a, sb = deg_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  std::vector<int> map(n, -1), used(n, 0);
  std::function<bool(int)> place = [&](int u) -> bool {
    if (u == n) return true;
    for (int w = 0; w < n; ++w) {
      if (used[w] || deg_b[w] != deg_a[u]) continue;
      bool ok = true;
      for (int prev = 0; prev < u && ok; ++prev)
        if (a.adjacent(u, prev) != b.adjacent(w, map[prev])) ok = false;
      if (!ok) continue;
      map[u] = w;
      used[w] = 1;
      if (place(u + 1)) return true;
      used[w] = 0;
      map[u] = -1;
    }
    return false;
  };
  return place(0);
}

int chromatic_number(const Graph& g, int max_colors) {
  int n = g.vertex_count();
  std::vector<int> color(n, -1);
  std::function<bool(int, int)> try_color = [&](int v, int k) -> bool {
    if (v == n) return true;
    for (int c = 0; c < k; ++c) {
      bool ok = true;
      for (int w : g.neighbors(v))
        if (color[w] == c) {
          ok = false;
          break;
        }
      if (!ok) continue;
      color[v] = c;
      if (try_color(v + 1, k)) return true;
      color[v] = -1;
    }
    return false;
  };
  for (int k = 1; k <= max_colors; ++k) {
    std::fill(color.begin(), color.end(), -1);
    if (try_color(0, k)) return k;
  }
  throw std::runtime_error("chromatic_number: exceeds max_colors");
}

std::vector<int> read_vertex_ids(std::istream& in, int n) {
  std::vector<int> ids;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream is(line);
    std::string tok;
    if (!(is >> tok) || tok == "c") continue;
    do {
      size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument("design file: bad vertex id");
      if (v < 1 || v > n) throw std::invalid_argument("design file: vertex id out of range");
      ids.push_back(v - 1);
    } while (is >> tok);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

}  // namespace gdesign
