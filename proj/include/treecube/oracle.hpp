#pragma once

// Ground-truth machinery: exhaustive metric-dimension search on explicit
// distance matrices, tree enumeration (labeled and up to isomorphism),
// canonical forms, and deterministic seeded random trees. Everything here is
// independent of the structural formulas so it can sit on the other side of a
// cross-check.

#include <array>
#include <atomic>
#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <random>
#include <thread>
#include <unordered_set>

#include "treecube/tree.hpp"

namespace treecube {

struct GraphDistances {
  int n = 0;
  std::vector<int32_t> d;  // row-major n*n

  int at(int u, int v) const { return d[static_cast<size_t>(u) * n + v]; }
};

// Distances in the power-th power of the tree (power 1: the tree itself).
inline GraphDistances graph_distances(const Tree& t, int power = 1) {
  int n = t.size();
  GraphDistances g;
  g.n = n;
  g.d.resize(static_cast<size_t>(n) * n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      g.d[static_cast<size_t>(u) * n + v] =
          u == v ? 0 : power_distance(t.distance(u, v), power);
  return g;
}

namespace detail {

inline uint64_t mix64(uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

struct ResolveScratch {
  std::vector<uint64_t> hash;
  std::vector<int> vertex;
  std::vector<uint32_t> stamp;
  uint32_t epoch = 0;
  size_t mask = 0;

  void ensure(size_t want) {
    size_t cap = 16;
    while (cap < want) cap <<= 1;
    if (cap > hash.size()) {
      hash.assign(cap, 0);
      vertex.assign(cap, 0);
      stamp.assign(cap, 0);
      epoch = 0;
    }
    mask = (hash.size() < cap ? cap : hash.size()) - 1;
    if (++epoch == 0) {
      std::fill(stamp.begin(), stamp.end(), 0);
      epoch = 1;
    }
  }
};

}  // namespace detail

// True iff the code vectors (distances to the subset, in order) are pairwise
// distinct over all vertices. Hash table with verification on collision, so
// hash quality only affects speed.
inline bool subset_resolves(const GraphDistances& g, std::span<const int> subset) {
  thread_local detail::ResolveScratch sc;
  int n = g.n;
  int k = static_cast<int>(subset.size());
  if (k == 0) return n <= 1;
  sc.ensure(static_cast<size_t>(2) * n);
  for (int v = 0; v < n; ++v) {
    uint64_t h = 0x243F6A8885A308D3ULL;
    for (int j = 0; j < k; ++j)
      h = (h ^ static_cast<uint64_t>(g.at(v, subset[j]))) * 0x100000001B3ULL;
    h = detail::mix64(h);
    size_t i = h & sc.mask;
    while (sc.stamp[i] == sc.epoch) {
      if (sc.hash[i] == h) {
        int w = sc.vertex[i];
        bool equal = true;
        for (int j = 0; j < k; ++j)
          if (g.at(v, subset[j]) != g.at(w, subset[j])) {
            equal = false;
            break;
          }
        if (equal) return false;
      }
      i = (i + 1) & sc.mask;
    }
    sc.stamp[i] = sc.epoch;
    sc.hash[i] = h;
    sc.vertex[i] = v;
  }
  return true;
}

namespace detail {

inline constexpr int kMaxBinomialN = 64;

inline uint64_t binomial(int n, int k) {
  static const auto table = [] {
    std::array<std::array<uint64_t, kMaxBinomialN + 1>, kMaxBinomialN + 1> c{};
    for (int i = 0; i <= kMaxBinomialN; ++i) {
      c[i][0] = 1;
      for (int j = 1; j <= i; ++j) {
        uint64_t s = c[i - 1][j - 1] + (j <= i - 1 ? c[i - 1][j] : 0);
        c[i][j] = s < c[i - 1][j - 1] ? UINT64_MAX : s;  // saturate
      }
    }
    return c;
  }();
  if (k < 0 || k > n) return 0;
  return table[n][k];
}

// Combinations in colexicographic order: {0..k-1} first; successor bumps the
// lowest element that can move and resets everything below it.
inline void first_combination(std::vector<int>& comb, int k) {
  comb.resize(k);
  std::iota(comb.begin(), comb.end(), 0);
}

inline bool next_combination(std::vector<int>& comb, int n) {
  int k = static_cast<int>(comb.size());
  int i = 0;
  while (i + 1 < k && comb[i] + 1 == comb[i + 1]) {
    comb[i] = i;
    ++i;
  }
  ++comb[i];
  return comb[k - 1] < n;
}

// Combination with colex rank r (0-based).
inline void unrank_combination(uint64_t r, int k, std::vector<int>& comb) {
  comb.resize(k);
  for (int i = k; i >= 1; --i) {
    int c = i - 1;
    while (binomial(c + 1, i) <= r) ++c;
    comb[i - 1] = c;
    r -= binomial(c, i);
  }
}

}  // namespace detail

struct BruteOptions {
  uint64_t budget = 100'000'000;  // subset checks before giving up
  int threads = 1;
  int max_size = 0;  // 0 = search up to n-1
};

struct BruteResult {
  int dimension = 0;
  std::vector<int> witness;  // first resolving set found, ascending
  uint64_t checked = 0;
};

// Exhaustive search by subset size; within a size, combinations are scanned in
// colexicographic order and the first resolving one is the witness. The
// parallel mode partitions the colex ranks and keeps the same witness.
inline BruteResult brute_metric_dimension(const GraphDistances& g, const BruteOptions& opts = {}) {
  int n = g.n;
  if (n <= 0) throw std::invalid_argument("empty graph");
  if (n > detail::kMaxBinomialN) throw std::invalid_argument("graph too large for subset search");
  BruteResult res;
  if (n == 1) return res;
  int kmax = opts.max_size > 0 ? std::min(opts.max_size, n - 1) : n - 1;
  uint64_t checked = 0;

  if (opts.threads <= 1) {
    std::vector<int> comb;
    for (int k = 1; k <= kmax; ++k) {
      detail::first_combination(comb, k);
      do {
        if (++checked > opts.budget) throw BudgetExceededError(checked - 1);
        if (subset_resolves(g, comb)) {
          res.dimension = k;
          res.witness = comb;
          res.checked = checked;
          return res;
        }
      } while (detail::next_combination(comb, n));
    }
    if (opts.max_size > 0 && kmax < n - 1) {
      res.checked = checked;  // capped search exhausted, nothing found
      return res;
    }
    throw std::logic_error("no resolving set found");  // unreachable: V minus one vertex resolves
  }

  for (int k = 1; k <= kmax; ++k) {
    uint64_t total = detail::binomial(n, k);
    uint64_t chunk = std::max<uint64_t>(1024, total / (static_cast<uint64_t>(opts.threads) * 16));
    std::atomic<uint64_t> next{0};
    std::atomic<uint64_t> best{UINT64_MAX};
    std::atomic<uint64_t> used{0};
    std::atomic<bool> over_budget{false};
    auto worker = [&] {
      std::vector<int> comb;
      for (;;) {
        uint64_t lo = next.fetch_add(chunk);
        if (lo >= total || lo >= best.load(std::memory_order_relaxed)) return;
        uint64_t hi = std::min(total, lo + chunk);
        detail::unrank_combination(lo, k, comb);
        for (uint64_t r = lo; r < hi; ++r) {
          if (used.fetch_add(1) + checked >= opts.budget) {
            over_budget.store(true);
            return;
          }
          if (subset_resolves(g, comb)) {
            uint64_t cur = best.load();
            while (r < cur && !best.compare_exchange_weak(cur, r)) {
            }
            return;
          }
          if (r + 1 < hi) detail::next_combination(comb, n);
        }
        if (best.load(std::memory_order_relaxed) < lo) return;
      }
    };
    std::vector<std::thread> pool;
    for (int i = 0; i < opts.threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    checked += used.load();
    if (over_budget.load() && best.load() == UINT64_MAX) throw BudgetExceededError(checked);
    if (best.load() != UINT64_MAX) {
      res.dimension = k;
      detail::unrank_combination(best.load(), k, res.witness);
      res.checked = checked;
      return res;
    }
  }
  if (opts.max_size > 0 && kmax < n - 1) {
    res.checked = checked;
    return res;
  }
  throw std::logic_error("no resolving set found");
}

inline uint64_t labeled_tree_count(int n) {
  if (n < 2) throw std::invalid_argument("labeled_tree_count: n < 2");
  uint64_t c = 1;
  for (int i = 0; i < n - 2; ++i) c *= static_cast<uint64_t>(n);
  return c;
}

// Linear-time decode; the sequence has n-2 entries in [0, n).
inline Tree pruefer_decode(int n, std::span<const int> seq) {
  if (n < 2 || static_cast<int>(seq.size()) != n - 2)
    throw std::invalid_argument("pruefer_decode: bad sequence length");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(n - 1);
  std::vector<int> deg(n, 1);
  for (int s : seq) ++deg[s];
  int ptr = 0;
  while (deg[ptr] != 1) ++ptr;
  int leaf = ptr;
  for (int s : seq) {
    edges.emplace_back(leaf, s);
    if (--deg[s] == 1 && s < ptr) {
      leaf = s;
    } else {
      ++ptr;
      while (deg[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.emplace_back(leaf, n - 1);
  return Tree::from_edges_unchecked(n, edges);
}

// Rooted shape string: children canons sorted and concatenated. Stable under
// relabeling by construction.
namespace detail {

inline std::string ahu_rooted(const Tree& t, int v, int parent) {
  std::vector<std::string> kids;
  for (int nb : t.neighbors(v))
    if (nb != parent) kids.push_back(ahu_rooted(t, nb, v));
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (auto& k : kids) s += k;
  s += ")";
  return s;
}

// Strip leaves level by level; the last one or two vertices are the centers.
inline std::vector<int> tree_centers(const Tree& t) {
  int n = t.size();
  if (n == 1) return {0};
  std::vector<int> deg(n);
  std::vector<char> removed(n, 0);
  std::vector<int> cur, nxt;
  int remaining = n;
  for (int v = 0; v < n; ++v) {
    deg[v] = t.degree(v);
    if (deg[v] <= 1) cur.push_back(v);
  }
  while (remaining > 2) {
    for (int v : cur) {
      removed[v] = 1;
      --remaining;
    }
    nxt.clear();
    for (int v : cur)
      for (int nb : t.neighbors(v))
        if (!removed[nb] && --deg[nb] == 1) nxt.push_back(nb);
    std::swap(cur, nxt);
  }
  std::vector<int> centers;
  for (int v = 0; v < n; ++v)
    if (!removed[v]) centers.push_back(v);
  return centers;
}

}  // namespace detail

// Isomorphism-invariant key: equal strings iff the trees are isomorphic.
inline std::string canonical_string(const Tree& t) {
  auto centers = detail::tree_centers(t);
  if (centers.size() == 1) return "C" + detail::ahu_rooted(t, centers[0], -1);
  std::string a = detail::ahu_rooted(t, centers[0], centers[1]);
  std::string b = detail::ahu_rooted(t, centers[1], centers[0]);
  if (b < a) std::swap(a, b);
  return "E" + a + b;
}

enum class EnumMode { All, Dedup };

// Streams trees of a fixed size. All: every labeled tree via Prufer sequences
// (n <= 10). Dedup: one representative per isomorphism class (n <= 12),
// generated from canonical rooted level sequences and filtered by the
// free-tree canonical form.
class TreeEnumerator {
 public:
  TreeEnumerator(int n, EnumMode mode) : n_(n), mode_(mode) {
    if (mode == EnumMode::All) {
      if (n < 2 || n > 10) throw std::invalid_argument("labeled enumeration supports 2 <= n <= 10");
      seq_.assign(std::max(0, n - 2), 0);
    } else {
      if (n < 2 || n > 12) throw std::invalid_argument("dedup enumeration supports 2 <= n <= 12");
      build_dedup();
    }
  }

  std::optional<Tree> next() {
    if (mode_ == EnumMode::All) {
      if (done_) return std::nullopt;
      Tree t = pruefer_decode(n_, seq_);
      int i = static_cast<int>(seq_.size()) - 1;
      while (i >= 0 && seq_[i] == n_ - 1) seq_[i--] = 0;
      if (i < 0)
        done_ = true;
      else
        ++seq_[i];
      return t;
    }
    if (pos_ >= dedup_.size()) return std::nullopt;
    return std::move(dedup_[pos_++]);
  }

 private:
  // Level sequences of rooted trees in the standard successor order; each
  // candidate is kept when its free-tree canonical form is new.
  void build_dedup() {
    std::vector<int> level(n_);
    std::iota(level.begin(), level.end(), 0);
    std::unordered_set<std::string> seen;
    for (;;) {
      Tree t = tree_from_levels(level);
      if (seen.insert(canonical_string(t)).second) dedup_.push_back(std::move(t));
      int p = -1;
      for (int i = n_ - 1; i >= 0; --i)
        if (level[i] > 1) {
          p = i;
          break;
        }
      if (p < 0) break;
      int q = p - 1;
      while (level[q] != level[p] - 1) --q;
      for (int i = p; i < n_; ++i) level[i] = level[i - (p - q)];
    }
  }

  Tree tree_from_levels(const std::vector<int>& level) const {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n_ - 1);
    std::vector<int> last_at_level(n_, -1);
    last_at_level[0] = 0;
    for (int i = 1; i < n_; ++i) {
      edges.emplace_back(last_at_level[level[i] - 1], i);
      last_at_level[level[i]] = i;
    }
    return Tree::from_edges_unchecked(n_, edges);
  }

  int n_;
  EnumMode mode_;
  std::vector<int> seq_;
  bool done_ = false;
  std::vector<Tree> dedup_;
  size_t pos_ = 0;
};

template <typename Fn>
inline void for_each_tree(int n, EnumMode mode, Fn&& fn) {
  TreeEnumerator en(n, mode);
  while (auto t = en.next()) fn(*t);
}

// Stable across platforms: mt19937_64 output is pinned by the standard and the
// bound is enforced by rejection, not by distribution objects.
inline uint64_t bounded_draw(std::mt19937_64& eng, uint64_t bound) {
  uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  uint64_t x;
  do {
    x = eng();
  } while (x >= limit);
  return x % bound;
}

inline uint64_t derive_seed(uint64_t base, uint64_t a, uint64_t b = 0) {
  return detail::mix64(base + detail::mix64(a + detail::mix64(b)));
}

inline Tree random_tree(int n, uint64_t seed) {
  if (n < 2) throw std::invalid_argument("random_tree: n < 2");
  if (n == 2) return Tree::from_edges_unchecked(2, {{0, 1}});
  std::mt19937_64 eng(seed);
  std::vector<int> seq(n - 2);
  for (int& s : seq) s = static_cast<int>(bounded_draw(eng, n));
  return pruefer_decode(n, seq);
}

// k distinct vertices of [0, n), ascending.
inline std::vector<int> random_subset(int n, int k, std::mt19937_64& eng) {
  if (k < 0 || k > n) throw std::invalid_argument("random_subset: bad k");
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  for (int i = 0; i < k; ++i)
    std::swap(pool[i], pool[i + static_cast<int>(bounded_draw(eng, n - i))]);
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace treecube
