#pragma once

// Shared fixtures: small trees with hand-checked invariants used across the
// suite. Dimensions quoted in comments were confirmed by the brute-force
// oracle.

#include <stdexcept>
#include <utility>
#include <vector>

#include "treecube/bounds.hpp"
#include "treecube/families.hpp"
#include "treecube/oracle.hpp"
#include "treecube/resolve.hpp"

namespace tch {

using namespace treecube;

inline Tree make(int n, const std::vector<std::pair<int, int>>& edges) {
  return Tree::from_edges(n, edges);
}

inline Tree path(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Tree::from_edges(n, e);
}

inline Tree star(int m) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= m; ++i) e.emplace_back(0, i);
  return Tree::from_edges(m + 1, e);
}

inline int cube_dimension(const Tree& t) {
  return brute_metric_dimension(graph_distances(t, 3)).dimension;
}

inline int tree_dimension(const Tree& t) {
  return brute_metric_dimension(graph_distances(t, 1)).dimension;
}

// A set that resolves the tree but not its cube, leaving exactly one of the
// five distance classes with an unseparated pair. One case per class.
struct BlindSpotCase {
  Tree t;
  std::vector<int> set;
  int cls;
  int u, v;  // first failing pair in label order
};

inline BlindSpotCase blind_spot_case(int cls) {
  switch (cls) {
    case 1:
      return {make(11, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {1, 9}, {6, 10}}),
              {9, 10, 8, 5}, 1, 2, 3};
    case 2:
      return {make(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {2, 6}, {6, 7}, {4, 8}, {8, 9}}),
              {0, 4, 8, 9}, 2, 1, 6};
    case 3:
      return {make(11, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 8}, {8, 9}, {6, 10}}),
              {1, 2, 8, 10}, 3, 0, 9};
    case 4:
      return {make(15, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 9},
                        {0, 10}, {10, 11}, {0, 12}, {12, 13}, {6, 14}}),
              {0, 8, 10, 12, 14}, 4, 11, 13};
    case 5:
      return {make(12, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {2, 6}, {6, 7}, {7, 8}, {3, 9}, {9, 10}, {10, 11}}),
              {7, 8, 10, 11}, 5, 0, 5};
  }
  throw std::invalid_argument("blind_spot_case: cls must be 1..5");
}

// 24-vertex caterpillar with legs hanging off both spine ends. beta(T) = 7,
// bounds [7, 12], cube dimension 9.
inline Tree wide_caterpillar() { return gen_caterpillar(8, {2, 1, 0, 3, 2, 1, 0, 2}, 3, 2); }

// 21-vertex caterpillar, spine pendants only. beta(T) = 7, cube dimension 9.
inline Tree plain_caterpillar() { return gen_caterpillar(8, {3, 0, 2, 1, 0, 3, 1, 3}); }

// 31-vertex lobster whose midleg at the spine end carries a second branch, so
// no generator covers it. beta(T) = 8, bounds [10, 14].
inline Tree branched_lobster() {
  return make(31, {{0, 1},  {1, 2},   {2, 3},   {3, 4},   {4, 5},   {5, 6},   {6, 7},   {0, 8},
                   {8, 9},  {9, 10},  {0, 11},  {11, 12}, {0, 13},  {13, 14}, {0, 15},  {1, 16},
                   {3, 17}, {3, 18},  {18, 19}, {4, 20},  {20, 21}, {4, 22},  {22, 23}, {6, 24},
                   {24, 25}, {24, 26}, {7, 27},  {27, 28}, {7, 29},  {7, 30}});
}

// 28-vertex lobster with three-edge legs on both spine ends. beta(T) = 8,
// bounds [9, 13], cube dimension 9.
inline Tree long_end_lobster() {
  return gen_lobster(7, {2, 0, 3, 1, 0, 0, 1}, {1, 0, 0, 0, 2, 0, 1}, 3, 3);
}

// 33-vertex tree: pendant pairs along a 17-vertex path. The canonical pendant
// set (one leaf per stem) resolves the cube, so the cube dimension collapses
// to beta(T) = 8.
inline Tree long_pendant_row() {
  return gen_central_path_pendant(17, {{0, 2}, {3, 2}, {5, 2}, {7, 2}, {10, 2}, {12, 2}, {14, 2}, {16, 2}});
}

// Smallest collapsing instance of that shape: 15 vertices, dimension 4 in
// both the tree and the cube.
inline Tree collapse_min() { return gen_central_path_pendant(7, {{0, 2}, {2, 2}, {4, 2}, {6, 2}}); }

// Same shape, stems at multiples of three: no collapse (beta 3, cube 5).
inline Tree collapse_fail() { return gen_central_path_pendant(7, {{0, 2}, {3, 2}, {6, 2}}); }

// Passes every backbone spacing condition yet does not collapse (beta 5,
// cube 6): the stem at position 3 has no partner two steps away mod three, so
// the pendant pair it anchors cannot be separated by any pendant-shaped set.
inline Tree spacing_blind_tree() {
  return gen_central_path_pendant(7, {{0, 2}, {2, 2}, {3, 2}, {4, 2}, {6, 2}});
}

// Collapsing tree (beta 7 in tree and cube) whose last interior stem sits at
// a bad residue from the far end but is shielded by a nearer stem.
inline Tree shielded_collapse() {
  return gen_central_path_pendant(13, {{0, 2}, {2, 2}, {4, 2}, {6, 2}, {8, 2}, {10, 2}, {12, 2}});
}

// Trees whose cube dimension exceeds the additive upper bound, so the
// constructive procedure must fall back to augmentation.
struct BoundViolator {
  Tree t;
  int upper;     // formula value
  int cube_dim;  // oracle value, strictly larger
};

inline BoundViolator bound_violator(int i) {
  switch (i) {
    case 0:
      return {make(11, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {5, 7}, {4, 8}, {2, 9}, {1, 10}}),
              5, 6};
    case 1:
      return {make(12, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {5, 7}, {5, 8}, {4, 9}, {2, 10}, {1, 11}}),
              6, 7};
    case 2:
      return {make(12, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {5, 7}, {4, 8}, {8, 9}, {2, 10}, {1, 11}}),
              5, 6};
  }
  throw std::invalid_argument("bound_violator: i must be 0..2");
}

}  // namespace tch
