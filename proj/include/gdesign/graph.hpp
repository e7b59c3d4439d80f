#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace gdesign {

struct HammingFamily {
  int n;
  int q;
};
struct JohnsonFamily {
  int n;
  int k;
};
struct CayleyFamily {
  int n;
  std::vector<std::vector<int>> classes;  // connection set as cycle types
};
struct MycielskianFamily {
  int base_n;
};

using Family =
    std::variant<std::monostate, HammingFamily, JohnsonFamily, CayleyFamily, MycielskianFamily>;

std::string family_to_string(const Family& f);
Family parse_family(const std::string& text);

/**
 * Finite simple undirected graph with sorted adjacency lists and optional
 * family metadata. Construction rejects loops, parallel edges and (unless
 * explicitly permitted) disconnected input.
 */
class Graph {
 public:
  Graph(int n, const std::vector<std::pair<int, int>>& edges, Family family = {},
        bool allow_disconnected = false);

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  int edge_count() const { return m_; }
  const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
  int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
  bool adjacent(int u, int v) const;
  std::vector<std::pair<int, int>> edges() const;

  bool is_connected() const { return connected_; }
  /// Returns the common degree if the graph is regular.
  std::optional<int> regular_degree() const;

  const Family& family() const { return family_; }
  void set_family(Family f) { family_ = std::move(f); }

  /**
   * Text format: optional comment lines `c ...` (a `c family ...` comment
   * carries metadata), one `p <n> <m>` line, then m lines `e <u> <v>` with
   * 1-indexed endpoints.
   */
  static Graph read(std::istream& in);
  static Graph read_file(const std::string& path);
  void write(std::ostream& out) const;
  void write_file(const std::string& path) const;

 private:
  std::vector<std::vector<int>> adj_;
  int m_ = 0;
  bool connected_ = false;
  Family family_;
};

bool triangle_free(const Graph& g);

/// Backtracking isomorphism test with degree pruning; intended for n <= 16.
bool isomorphic(const Graph& a, const Graph& b);

/// Smallest k such that g is properly k-colorable; brute force, small n only.
int chromatic_number(const Graph& g, int max_colors = 8);

/// Reads a design file of 1-indexed vertex ids, one per line; `c` comments.
std::vector<int> read_vertex_ids(std::istream& in, int n);

}  // namespace gdesign
