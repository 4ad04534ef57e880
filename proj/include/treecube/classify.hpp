#pragma once

// Structural taxonomy of a tree: core vertices (degree >= 3), the legs hanging
// off them, and per-stem leg profiles. This is the vocabulary every bound and
// construction in the library is phrased in.

#include <cstdint>
#include <map>

#include "treecube/tree.hpp"

namespace treecube {

enum class Role : uint8_t { Leaf, PathVertex, Core };

// Leg kinds by length: 1, 2, or >= 3 edges from stem to leaf.
enum class LegKind : uint8_t { Pendant, Midleg, LongLeg };

// A leg is a maximal hanging path: it starts at the neighbor of a core vertex
// (the stem) and runs out to a leaf, passing only degree-2 vertices.
struct Leg {
  int stem = -1;
  LegKind kind = LegKind::Pendant;
  std::vector<int> vertices;  // ordered from the stem's neighbor out to the leaf

  int length() const { return static_cast<int>(vertices.size()); }
  int leaf() const { return vertices.back(); }
};

struct StemProfile {
  int pendants = 0;
  int midlegs = 0;
  int long_legs = 0;

  int legs() const { return pendants + midlegs + long_legs; }
};

struct Classification {
  std::vector<Role> roles;           // indexed by vertex
  std::vector<int> cores;            // ascending
  std::vector<int> stems;            // cores with at least one leg, ascending
  std::vector<int> major_stems;      // stems with at least two legs, ascending
  std::vector<Leg> legs;             // sorted by (stem, leaf label)
  std::vector<int> leg_of;           // vertex -> index into legs, -1 if on no leg
  std::map<int, StemProfile> profiles;           // every stem
  std::map<int, std::vector<int>> stem_legs;     // stem -> indices into legs

  bool is_major(int v) const {
    return std::binary_search(major_stems.begin(), major_stems.end(), v);
  }
};

inline Classification classify(const Tree& t) {
  int n = t.size();
  Classification c;
  c.roles.resize(n);
  for (int v = 0; v < n; ++v) {
    int d = t.degree(v);
    c.roles[v] = d == 1 ? Role::Leaf : d == 2 ? Role::PathVertex : Role::Core;
    if (d >= 3) c.cores.push_back(v);
  }
  c.leg_of.assign(n, -1);
  if (c.cores.empty()) return c;  // path: no stems, no legs

  for (int leaf = 0; leaf < n; ++leaf) {
    if (t.degree(leaf) != 1) continue;
    Leg leg;
    leg.vertices.push_back(leaf);
    int prev = leaf, cur = t.neighbors(leaf)[0];
    while (t.degree(cur) == 2) {
      leg.vertices.push_back(cur);
      for (int nb : t.neighbors(cur))
        if (nb != prev) {
          prev = cur;
          cur = nb;
          break;
        }
    }
    leg.stem = cur;
    std::reverse(leg.vertices.begin(), leg.vertices.end());
    int len = leg.length();
    leg.kind = len == 1 ? LegKind::Pendant : len == 2 ? LegKind::Midleg : LegKind::LongLeg;
    c.legs.push_back(std::move(leg));
  }
  std::sort(c.legs.begin(), c.legs.end(), [](const Leg& a, const Leg& b) {
    return a.stem != b.stem ? a.stem < b.stem : a.leaf() < b.leaf();
  });
  for (int i = 0; i < static_cast<int>(c.legs.size()); ++i) {
    const Leg& leg = c.legs[i];
    for (int v : leg.vertices) c.leg_of[v] = i;
    c.stem_legs[leg.stem].push_back(i);
    StemProfile& p = c.profiles[leg.stem];
    switch (leg.kind) {
      case LegKind::Pendant: ++p.pendants; break;
      case LegKind::Midleg: ++p.midlegs; break;
      case LegKind::LongLeg: ++p.long_legs; break;
    }
  }
  for (const auto& [stem, profile] : c.profiles) {
    c.stems.push_back(stem);
    if (profile.legs() >= 2) c.major_stems.push_back(stem);
  }
  return c;
}

inline const char* role_letter(Role r) {
  switch (r) {
    case Role::Leaf: return "l";
    case Role::PathVertex: return "p";
    default: return "c";
  }
}

inline const char* leg_kind_name(LegKind k) {
  switch (k) {
    case LegKind::Pendant: return "pendant";
    case LegKind::Midleg: return "midleg";
    default: return "longleg";
  }
}

}  // namespace treecube
