#pragma once

// Immutable tree on vertices 0..n-1 with cached all-pairs distances.
// Input labels are compacted in order of first appearance; all downstream
// code works with the compact ids.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace treecube {

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& what)
      : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

// Thrown when a quantity that is undefined on path graphs is requested.
struct PathTreeError : std::runtime_error {
  explicit PathTreeError(const std::string& op)
      : std::runtime_error(op + ": undefined for path graphs") {}
};

struct BudgetExceededError : std::runtime_error {
  uint64_t checked;
  explicit BudgetExceededError(uint64_t checked_)
      : std::runtime_error("subset-search budget exceeded after " + std::to_string(checked_) +
                           " checks"),
        checked(checked_) {}
};

struct FamilySpecError : std::runtime_error {
  explicit FamilySpecError(const std::string& what) : std::runtime_error(what) {}
};

// Distance in the r-th power graph: edges join vertices at tree distance <= r,
// so the power distance is the tree distance divided by r, rounded up.
inline int power_distance(int d, int power = 3) {
  if (d < 0 || power < 1) throw std::invalid_argument("power_distance: bad arguments");
  return (d + power - 1) / power;
}

class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  DistanceMatrix(int n, std::vector<int32_t> d) : n_(n), d_(std::move(d)) {}
  int size() const { return n_; }
  int at(int u, int v) const { return d_[static_cast<size_t>(u) * n_ + v]; }

 private:
  int n_ = 0;
  std::vector<int32_t> d_;
};

// Above this size the matrix is skipped and distance() falls back to per-query
// search. Everything this library targets sits far below the cap.
inline constexpr int kDistanceCacheLimit = 2048;

class Tree {
 public:
  Tree() = default;

  // Validates shape: n-1 edges, no self loops or duplicates, acyclic, connected.
  static Tree from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 2) throw std::invalid_argument("tree needs at least two vertices");
    if (static_cast<int>(edges.size()) != n - 1)
      throw std::invalid_argument("tree on " + std::to_string(n) + " vertices needs " +
                                  std::to_string(n - 1) + " edges, got " +
                                  std::to_string(edges.size()));
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    std::vector<uint64_t> seen;
    seen.reserve(edges.size());
    for (auto [u, v] : edges) {
      if (u < 0 || u >= n || v < 0 || v >= n)
        throw std::invalid_argument("edge endpoint out of range");
      if (u == v) throw std::invalid_argument("self loop at vertex " + std::to_string(u));
      uint64_t key = (static_cast<uint64_t>(std::min(u, v)) << 32) | static_cast<uint32_t>(std::max(u, v));
      seen.push_back(key);
      int ru = find(u), rv = find(v);
      if (ru == rv) throw std::invalid_argument("edge " + std::to_string(u) + "-" +
                                                std::to_string(v) + " closes a cycle");
      parent[ru] = rv;
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
      throw std::invalid_argument("duplicate edge");
    return from_edges_unchecked(n, edges);
  }

  // Caller guarantees the edge list already forms a tree (generators, decoders).
  static Tree from_edges_unchecked(int n, const std::vector<std::pair<int, int>>& edges) {
    Tree t;
    t.n_ = n;
    t.edges_ = edges;
    t.off_.assign(n + 1, 0);
    for (auto [u, v] : edges) {
      ++t.off_[u + 1];
      ++t.off_[v + 1];
    }
    for (int i = 0; i < n; ++i) t.off_[i + 1] += t.off_[i];
    t.adj_.resize(2 * (n - 1));
    std::vector<int> cursor(t.off_.begin(), t.off_.end() - 1);
    for (auto [u, v] : edges) {
      t.adj_[cursor[u]++] = v;
      t.adj_[cursor[v]++] = u;
    }
    if (n <= kDistanceCacheLimit) t.build_distances();
    return t;
  }

  int size() const { return n_; }

  std::span<const int> neighbors(int v) const {
    return {adj_.data() + off_[v], adj_.data() + off_[v + 1]};
  }

  int degree(int v) const { return off_[v + 1] - off_[v]; }

  const std::vector<std::pair<int, int>>& edge_list() const { return edges_; }

  bool is_path() const {
    for (int v = 0; v < n_; ++v)
      if (degree(v) > 2) return false;
    return true;
  }

  bool has_distance_matrix() const { return has_dist_; }

  const DistanceMatrix& distance_matrix() const {
    if (!has_dist_) throw std::logic_error("distance matrix not cached at this size");
    return dist_;
  }

  int distance(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (has_dist_) return dist_.at(u, v);
    return bfs_distance(u, v);
  }

  void check_vertex(int v) const {
    if (v < 0 || v >= n_)
      throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
  }

 private:
  void build_distances() {
    std::vector<int32_t> d(static_cast<size_t>(n_) * n_, -1);
    std::vector<int> queue(n_);
    for (int src = 0; src < n_; ++src) {
      int32_t* row = d.data() + static_cast<size_t>(src) * n_;
      row[src] = 0;
      int head = 0, tail = 0;
      queue[tail++] = src;
      while (head < tail) {
        int x = queue[head++];
        for (int y : neighbors(x))
          if (row[y] < 0) {
            row[y] = row[x] + 1;
            queue[tail++] = y;
          }
      }
    }
    dist_ = DistanceMatrix(n_, std::move(d));
    has_dist_ = true;
  }

  int bfs_distance(int u, int v) const {
    if (u == v) return 0;
    std::vector<int32_t> d(n_, -1);
    std::vector<int> queue(n_);
    d[u] = 0;
    int head = 0, tail = 0;
    queue[tail++] = u;
    while (head < tail) {
      int x = queue[head++];
      for (int y : neighbors(x))
        if (d[y] < 0) {
          if (y == v) return d[x] + 1;
          d[y] = d[x] + 1;
          queue[tail++] = y;
        }
    }
    return -1;
  }

  int n_ = 0;
  std::vector<int> adj_;
  std::vector<int> off_;
  std::vector<std::pair<int, int>> edges_;
  DistanceMatrix dist_;
  bool has_dist_ = false;
};

inline const DistanceMatrix& all_pairs_distances(const Tree& t) { return t.distance_matrix(); }

// Edge-list text: one "u v" pair per line, '#' starts a comment, blank lines
// skipped. Labels are arbitrary non-negative integers, compacted by first
// appearance; the original label of compact vertex i lands in labels_out[i]
// when requested. Every structural defect is reported with its input line.
inline Tree parse_tree(std::string_view text, std::vector<long long>* labels_out = nullptr) {
  std::unordered_map<long long, int> id;
  std::vector<long long> labels;
  std::vector<int> first_line;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> parent;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto intern = [&](long long label, int line) {
    auto [it, fresh] = id.try_emplace(label, static_cast<int>(id.size()));
    if (fresh) {
      labels.push_back(label);
      first_line.push_back(line);
      parent.push_back(it->second);
    }
    return it->second;
  };
  std::vector<uint64_t> seen;
  int line = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    std::string_view raw = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line;
    std::string_view body = raw.substr(0, raw.find('#'));
    std::istringstream in{std::string(body)};
    long long a, b;
    if (!(in >> a)) {
      if (body.find_first_not_of(" \t\r\f\v") == std::string_view::npos) continue;
      throw ParseError(line, "expected a numeric vertex label");
    }
    if (!(in >> b)) throw ParseError(line, "expected two vertex labels");
    std::string extra;
    if (in >> extra) throw ParseError(line, "unexpected trailing token '" + extra + "'");
    if (a < 0 || b < 0) throw ParseError(line, "negative vertex label");
    if (a == b) throw ParseError(line, "self loop at vertex " + std::to_string(a));
    int u = intern(a, line), v = intern(b, line);
    uint64_t key = (static_cast<uint64_t>(std::min(u, v)) << 32) | static_cast<uint32_t>(std::max(u, v));
    if (std::find(seen.begin(), seen.end(), key) != seen.end())
      throw ParseError(line, "duplicate edge " + std::to_string(a) + "-" + std::to_string(b));
    seen.push_back(key);
    int ru = find(u), rv = find(v);
    if (ru == rv)
      throw ParseError(line, "edge " + std::to_string(a) + "-" + std::to_string(b) + " closes a cycle");
    parent[ru] = rv;
    edges.emplace_back(u, v);
  }
  int n = static_cast<int>(id.size());
  if (n == 0) throw ParseError(0, "no edges in input");
  if (static_cast<int>(edges.size()) != n - 1) {
    int root0 = find(0);
    for (int v = 1; v < n; ++v)
      if (find(v) != root0)
        throw ParseError(first_line[v], "disconnected: vertex first seen here is not reachable "
                                        "from the rest of the input");
  }
  if (labels_out) *labels_out = std::move(labels);
  return Tree::from_edges_unchecked(n, edges);
}

// Position of x relative to the path from u to v: behind u, behind v, or in a
// branch hanging off the interior of the path. Adjacent pairs have no interior.
enum class Region { BehindU, BehindV, Interior };

inline Region components_relative(const Tree& t, int u, int v, int x) {
  t.check_vertex(x);
  if (u == v || x == u || x == v)
    throw std::invalid_argument("components_relative: vertices must be distinct");
  int duv = t.distance(u, v);
  int xu = t.distance(x, u), xv = t.distance(x, v);
  if (xv == xu + duv) return Region::BehindU;
  if (xu == xv + duv) return Region::BehindV;
  return Region::Interior;
}

}  // namespace treecube
