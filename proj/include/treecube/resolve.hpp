#pragma once

// Resolvability predicates for the third power of a tree. Two independent
// routes to the same answer: direct rounded-distance comparison, and the
// structural closed form phrased in terms of which side of the pair a vertex
// sits on. The five distance-class conditions characterize resolving sets.

#include <optional>

#include "treecube/oracle.hpp"
#include "treecube/tree.hpp"

namespace treecube {

// x separates u,v in the cube iff the rounded distances differ.
inline bool resolves_in_cube(const Tree& t, int x, int u, int v) {
  if (u == v) throw std::invalid_argument("resolves_in_cube: u == v");
  return power_distance(t.distance(x, u)) != power_distance(t.distance(x, v));
}

namespace detail {

// x separates the pair iff the distance gap exceeds the slack the nearer
// distance leaves before the next multiple of three.
inline bool separates_by_residue(int nearer, int gap) {
  switch (nearer % 3) {
    case 0: return gap >= 1;
    case 1: return gap >= 3;
    default: return gap >= 2;
  }
}

}  // namespace detail

// Same predicate evaluated structurally: behind either endpoint the gap is the
// full pair distance; in an interior branch it is determined by the attachment
// point. Agreement with resolves_in_cube is enforced by tests.
inline bool resolves_closed_form(const Tree& t, int x, int u, int v) {
  if (u == v) throw std::invalid_argument("resolves_closed_form: u == v");
  if (x == u || x == v) return true;  // nearer distance 0, gap is the pair distance
  int d = t.distance(u, v);
  int du = t.distance(x, u), dv = t.distance(x, v);
  int nearer, gap;
  switch (components_relative(t, u, v, x)) {
    case Region::BehindU:
      nearer = du;
      gap = d;
      break;
    case Region::BehindV:
      nearer = dv;
      gap = d;
      break;
    default:
      nearer = std::min(du, dv);
      gap = du < dv ? dv - du : du - dv;
      break;
  }
  return detail::separates_by_residue(nearer, gap);
}

// All code vectors distinct in the power-th power of the tree.
inline bool is_resolving_set(const Tree& t, std::span<const int> set, int power = 3) {
  int n = t.size();
  for (int x : set) t.check_vertex(x);
  thread_local std::vector<int> uniq;
  uniq.assign(set.begin(), set.end());
  std::sort(uniq.begin(), uniq.end());
  uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
  int k = static_cast<int>(uniq.size());
  if (k == 0) return n <= 1;
  thread_local detail::ResolveScratch sc;
  sc.ensure(static_cast<size_t>(2) * n);
  for (int v = 0; v < n; ++v) {
    uint64_t h = 0x243F6A8885A308D3ULL;
    for (int j = 0; j < k; ++j)
      h = (h ^ static_cast<uint64_t>(power_distance(t.distance(v, uniq[j]), power))) *
          0x100000001B3ULL;
    h = detail::mix64(h);
    size_t i = h & sc.mask;
    while (sc.stamp[i] == sc.epoch) {
      if (sc.hash[i] == h) {
        int w = sc.vertex[i];
        bool equal = true;
        for (int j = 0; j < k; ++j)
          if (power_distance(t.distance(v, uniq[j]), power) !=
              power_distance(t.distance(w, uniq[j]), power)) {
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

struct PairWitness {
  int u = -1, v = -1;
  int dist = 0;
};

struct ConditionStatus {
  bool holds = true;
  std::optional<PairWitness> fail;  // first failing pair in (u, v) label order
};

struct ConditionReport {
  std::array<ConditionStatus, 5> cond;  // indexed by pair distance minus one
  bool overall = true;
};

// The characterization: a set resolves the cube iff for every vertex pair at
// tree distance c in 1..5 some member x satisfies the class-c predicate below,
// written in terms of nearer = min distance to the pair and gap = difference.
//   c=1: nearer % 3 == 0
//   c=2: gap == 2 and nearer % 3 != 1
//   c=3: gap == 3, or nearer % 3 == 0
//   c=4: gap == 4, or (gap == 2 and nearer % 3 != 1)
//   c=5: gap == 5 or gap == 3, or nearer % 3 == 0
inline bool condition_witness(int cls, int nearer, int gap) {
  switch (cls) {
    case 1: return nearer % 3 == 0;
    case 2: return gap == 2 && nearer % 3 != 1;
    case 3: return gap == 3 || nearer % 3 == 0;
    case 4: return gap == 4 || (gap == 2 && nearer % 3 != 1);
    default: return gap == 5 || gap == 3 || nearer % 3 == 0;
  }
}

inline ConditionReport check_conditions(const Tree& t, std::span<const int> set) {
  for (int x : set) t.check_vertex(x);
  int n = t.size();
  ConditionReport rep;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      int d = t.distance(u, v);
      if (d > 5) continue;
      ConditionStatus& st = rep.cond[d - 1];
      bool found = false;
      for (int x : set) {
        int du = t.distance(x, u), dv = t.distance(x, v);
        int nearer = std::min(du, dv);
        int gap = du < dv ? dv - du : du - dv;
        if (condition_witness(d, nearer, gap)) {
          found = true;
          break;
        }
      }
      if (!found && st.holds) {
        st.holds = false;
        st.fail = PairWitness{u, v, d};
        rep.overall = false;
      }
    }
  return rep;
}

// Where separators for a pair at tree distance 1..5 must sit. Vertices past
// the window/root structure:
//   - sides_always: every vertex strictly behind u or behind v separates.
//   - chain_roots: on any path walking away from such a root (inside the
//     root's hanging branches), every `window` consecutive vertices contain a
//     separator.
//   - free_roots: every vertex of a branch hanging at such a root separates.
struct WindowRule {
  int dist = 0;
  int window = 0;
  bool sides_always = false;
  std::vector<int> chain_roots;
  std::vector<int> free_roots;
};

inline WindowRule consecutive_vertex_rule(const Tree& t, int u, int v) {
  t.check_vertex(u);
  t.check_vertex(v);
  if (u == v) throw std::invalid_argument("consecutive_vertex_rule: u == v");
  int d = t.distance(u, v);
  if (d > 5) throw std::invalid_argument("consecutive_vertex_rule: pair distance exceeds 5");
  std::vector<int> path{u};
  int cur = u;
  while (cur != v) {
    for (int nb : t.neighbors(cur))
      if (t.distance(nb, v) == t.distance(cur, v) - 1) {
        cur = nb;
        break;
      }
    path.push_back(cur);
  }
  WindowRule r;
  r.dist = d;
  r.window = d % 2 == 1 ? 3 : 2;
  switch (d) {
    case 1:
    case 2:
      r.chain_roots = {u, v};
      break;
    case 3:
      r.sides_always = true;
      r.chain_roots = {path[1], path[2]};
      break;
    case 4:
      r.sides_always = true;
      r.chain_roots = {path[1], path[3]};
      break;
    default:
      r.sides_always = true;
      r.chain_roots = {path[2], path[3]};
      r.free_roots = {path[1], path[4]};
      break;
  }
  return r;
}

}  // namespace treecube
