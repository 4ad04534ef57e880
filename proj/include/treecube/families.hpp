#pragma once

// Parameterized tree families, a small spec grammar for the CLI, and the
// structural checks for when the cube's dimension collapses to the tree's.

#include <array>
#include <charconv>
#include <string>
#include <string_view>

#include "treecube/bounds.hpp"
#include "treecube/classify.hpp"

namespace treecube {

namespace detail {

inline void add_chain(std::vector<std::pair<int, int>>& edges, int from, int len, int& next) {
  for (int i = 0; i < len; ++i) {
    edges.emplace_back(from, next);
    from = next++;
  }
}

}  // namespace detail

// Spine path with a pendant bundle per spine vertex; optional single chains
// hanging off the two spine ends.
inline Tree gen_caterpillar(int spine, const std::vector<int>& pendants, int end0 = 0,
                            int end1 = 0) {
  if (spine < 1) throw FamilySpecError("caterpillar: spine must have at least one vertex");
  if (static_cast<int>(pendants.size()) != spine)
    throw FamilySpecError("caterpillar: pendant list length must equal spine length");
  for (int p : pendants)
    if (p < 0) throw FamilySpecError("caterpillar: negative pendant count");
  if (end0 < 0 || end1 < 0) throw FamilySpecError("caterpillar: negative end chain length");
  std::vector<std::pair<int, int>> edges;
  int next = spine;
  for (int i = 1; i < spine; ++i) edges.emplace_back(i - 1, i);
  for (int i = 0; i < spine; ++i)
    for (int p = 0; p < pendants[i]; ++p) edges.emplace_back(i, next++);
  detail::add_chain(edges, 0, end0, next);
  detail::add_chain(edges, spine - 1, end1, next);
  if (next < 2) throw FamilySpecError("caterpillar: tree needs at least two vertices");
  return Tree::from_edges_unchecked(next, edges);
}

// Caterpillar plus length-2 chains (midlegs) per spine vertex.
inline Tree gen_lobster(int spine, const std::vector<int>& pendants,
                        const std::vector<int>& midlegs, int end0 = 0, int end1 = 0) {
  if (spine < 1) throw FamilySpecError("lobster: spine must have at least one vertex");
  if (static_cast<int>(pendants.size()) != spine ||
      static_cast<int>(midlegs.size()) != spine)
    throw FamilySpecError("lobster: pendant and midleg lists must match spine length");
  for (int p : pendants)
    if (p < 0) throw FamilySpecError("lobster: negative pendant count");
  for (int m : midlegs)
    if (m < 0) throw FamilySpecError("lobster: negative midleg count");
  if (end0 < 0 || end1 < 0) throw FamilySpecError("lobster: negative end chain length");
  std::vector<std::pair<int, int>> edges;
  int next = spine;
  for (int i = 1; i < spine; ++i) edges.emplace_back(i - 1, i);
  for (int i = 0; i < spine; ++i) {
    for (int p = 0; p < pendants[i]; ++p) edges.emplace_back(i, next++);
    for (int m = 0; m < midlegs[i]; ++m) detail::add_chain(edges, i, 2, next);
  }
  detail::add_chain(edges, 0, end0, next);
  detail::add_chain(edges, spine - 1, end1, next);
  if (next < 2) throw FamilySpecError("lobster: tree needs at least two vertices");
  return Tree::from_edges_unchecked(next, edges);
}

// One center, a chain per entry of lengths.
inline Tree gen_spider(const std::vector<int>& lengths) {
  if (lengths.size() < 3) throw FamilySpecError("spider: needs at least three legs");
  for (int l : lengths)
    if (l < 1) throw FamilySpecError("spider: leg length must be positive");
  std::vector<std::pair<int, int>> edges;
  int next = 1;
  for (int l : lengths) detail::add_chain(edges, 0, l, next);
  return Tree::from_edges_unchecked(next, edges);
}

// Root of degree d, internal vertices of degree d, leaves at depth t.
inline Tree gen_d_regular(int d, int depth) {
  if (d < 2) throw FamilySpecError("d-regular: degree must be at least 2");
  if (depth < 1) throw FamilySpecError("d-regular: depth must be at least 1");
  std::vector<std::pair<int, int>> edges;
  std::vector<int> frontier{0};
  int next = 1;
  for (int level = 1; level <= depth; ++level) {
    std::vector<int> fresh;
    int kids = level == 1 ? d : d - 1;
    for (int v : frontier)
      for (int c = 0; c < kids; ++c) {
        edges.emplace_back(v, next);
        fresh.push_back(next++);
      }
    frontier = std::move(fresh);
  }
  return Tree::from_edges_unchecked(next, edges);
}

// Family whose cube has metric dimension exactly n (n >= 5, n != 6): two
// midleg-carrying stems joined by a distance-3 path, plus fan branches holding
// pendant stems at 1 (mod 3) distance from the first stem, each with a
// companion pendant one step before it. For even n one fan stem carries three
// pendants. The n = 6 instance degenerates (no fan stems) and its cube has
// dimension 5; callers that need the literal value should know this.
inline Tree gen_dimension_n(int n) {
  if (n < 5) throw FamilySpecError("dimension-n: n must be at least 5");
  bool even = n % 2 == 0;
  int majors = even ? n / 2 - 1 : (n - 1) / 2;
  int fans = majors - 2;
  std::vector<std::pair<int, int>> edges;
  int next = 1;
  detail::add_chain(edges, 0, 2, next);  // midlegs at the first stem
  detail::add_chain(edges, 0, 2, next);
  detail::add_chain(edges, 0, 3, next);  // path to the second stem
  int v1 = next - 1;
  detail::add_chain(edges, v1, 2, next);
  detail::add_chain(edges, v1, 2, next);
  for (int i = 0; i < fans; ++i) {
    int from = 0;
    detail::add_chain(edges, from, 3, next);  // three steps out of the first stem
    int c = next - 1;
    edges.emplace_back(c, next);
    int w = next++;                  // fan stem at distance 4, residue 1 mod 3
    edges.emplace_back(c, next++);   // companion pendant beside it
    int pend = (even && i == 0) ? 3 : 2;
    for (int p = 0; p < pend; ++p) edges.emplace_back(w, next++);
  }
  return Tree::from_edges_unchecked(next, edges);
}

// Backbone path with pendant bundles at chosen positions.
inline Tree gen_central_path_pendant(int len, const std::vector<std::pair<int, int>>& stems) {
  if (len < 1) throw FamilySpecError("central-path-pendant: backbone needs a vertex");
  std::vector<std::pair<int, int>> edges;
  int next = len;
  for (int i = 1; i < len; ++i) edges.emplace_back(i - 1, i);
  std::vector<char> used(len, 0);
  for (auto [pos, count] : stems) {
    if (pos < 0 || pos >= len)
      throw FamilySpecError("central-path-pendant: stem position out of range");
    if (used[pos]) throw FamilySpecError("central-path-pendant: duplicate stem position");
    used[pos] = 1;
    if (count < 1) throw FamilySpecError("central-path-pendant: pendant count must be positive");
    for (int p = 0; p < count; ++p) edges.emplace_back(pos, next++);
  }
  if (next < 2) throw FamilySpecError("central-path-pendant: tree needs at least two vertices");
  return Tree::from_edges_unchecked(next, edges);
}

struct FamilySpec {
  enum class Kind { Caterpillar, Lobster, Spider, DRegular, DimensionN, CentralPathPendant };
  Kind kind = Kind::Caterpillar;
  int spine = 0;
  std::vector<int> pendants, midlegs;
  int end0 = 0, end1 = 0;
  std::vector<int> lengths;
  int d = 0, depth = 0;
  int n = 0;
  int len = 0;
  std::vector<std::pair<int, int>> stems;
};

namespace detail {

inline int parse_int(std::string_view s, const char* what) {
  int value = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || p != s.data() + s.size())
    throw FamilySpecError(std::string("bad integer for ") + what + ": '" + std::string(s) + "'");
  return value;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t next = s.find(sep, pos);
    if (next == std::string_view::npos) {
      out.push_back(s.substr(pos));
      break;
    }
    out.push_back(s.substr(pos, next - pos));
    pos = next + 1;
  }
  return out;
}

inline std::vector<int> parse_int_list(std::string_view s, const char* what) {
  std::vector<int> out;
  for (auto item : split(s, ',')) out.push_back(parse_int(item, what));
  return out;
}

}  // namespace detail

// Grammar: "cat:spine=5;pendants=2,0,1,0,2;end0=2;end1=0",
// "lob:spine=3;pendants=1,0,2;midlegs=2,0,1", "spider:1,1,3", "dreg:3,2",
// "dimn:8", "cpp:len=7;stems=0:2,3:1,6:2".
inline FamilySpec parse_family_spec(std::string_view text) {
  size_t colon = text.find(':');
  if (colon == std::string_view::npos)
    throw FamilySpecError("family spec needs the form kind:params");
  std::string_view kind = text.substr(0, colon);
  std::string_view rest = text.substr(colon + 1);
  FamilySpec spec;
  auto keyvals = [&](std::string_view s) {
    std::vector<std::pair<std::string_view, std::string_view>> kv;
    for (auto part : detail::split(s, ';')) {
      if (part.empty()) continue;
      size_t eq = part.find('=');
      if (eq == std::string_view::npos)
        throw FamilySpecError("expected key=value, got '" + std::string(part) + "'");
      kv.emplace_back(part.substr(0, eq), part.substr(eq + 1));
    }
    return kv;
  };
  if (kind == "cat" || kind == "lob") {
    spec.kind = kind == "cat" ? FamilySpec::Kind::Caterpillar : FamilySpec::Kind::Lobster;
    for (auto [k, v] : keyvals(rest)) {
      if (k == "spine")
        spec.spine = detail::parse_int(v, "spine");
      else if (k == "pendants")
        spec.pendants = detail::parse_int_list(v, "pendants");
      else if (k == "midlegs" && kind == "lob")
        spec.midlegs = detail::parse_int_list(v, "midlegs");
      else if (k == "end0")
        spec.end0 = detail::parse_int(v, "end0");
      else if (k == "end1")
        spec.end1 = detail::parse_int(v, "end1");
      else
        throw FamilySpecError("unknown key '" + std::string(k) + "' for " + std::string(kind));
    }
    if (spec.pendants.empty() && spec.spine > 0) spec.pendants.assign(spec.spine, 0);
    if (kind == "lob" && spec.midlegs.empty() && spec.spine > 0) spec.midlegs.assign(spec.spine, 0);
  } else if (kind == "spider") {
    spec.kind = FamilySpec::Kind::Spider;
    spec.lengths = detail::parse_int_list(rest, "leg lengths");
  } else if (kind == "dreg") {
    spec.kind = FamilySpec::Kind::DRegular;
    auto parts = detail::parse_int_list(rest, "d,t");
    if (parts.size() != 2) throw FamilySpecError("dreg takes exactly d,t");
    spec.d = parts[0];
    spec.depth = parts[1];
  } else if (kind == "dimn") {
    spec.kind = FamilySpec::Kind::DimensionN;
    spec.n = detail::parse_int(rest, "n");
  } else if (kind == "cpp") {
    spec.kind = FamilySpec::Kind::CentralPathPendant;
    for (auto [k, v] : keyvals(rest)) {
      if (k == "len")
        spec.len = detail::parse_int(v, "len");
      else if (k == "stems") {
        for (auto item : detail::split(v, ',')) {
          auto pc = detail::split(item, ':');
          if (pc.size() != 2) throw FamilySpecError("stems entries take the form pos:count");
          spec.stems.emplace_back(detail::parse_int(pc[0], "stem position"),
                                  detail::parse_int(pc[1], "pendant count"));
        }
      } else
        throw FamilySpecError("unknown key '" + std::string(k) + "' for cpp");
    }
  } else {
    throw FamilySpecError("unknown family kind '" + std::string(kind) + "'");
  }
  return spec;
}

inline Tree generate_family(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilySpec::Kind::Caterpillar:
      return gen_caterpillar(spec.spine, spec.pendants, spec.end0, spec.end1);
    case FamilySpec::Kind::Lobster:
      return gen_lobster(spec.spine, spec.pendants, spec.midlegs, spec.end0, spec.end1);
    case FamilySpec::Kind::Spider:
      return gen_spider(spec.lengths);
    case FamilySpec::Kind::DRegular:
      return gen_d_regular(spec.d, spec.depth);
    case FamilySpec::Kind::DimensionN:
      return gen_dimension_n(spec.n);
    default:
      return gen_central_path_pendant(spec.len, spec.stems);
  }
}

// Published dimension interval for the cube of a family member, inclusive.
inline std::pair<int, int> family_cube_interval(FamilySpec::Kind kind, const Tree& t) {
  auto c = classify(t);
  int beta = beta_tree(t);
  int extra_midlegs = 0;
  for (int v : c.major_stems) {
    int m = c.profiles.at(v).midlegs;
    if (m >= 2) extra_midlegs += m - 1;
  }
  switch (kind) {
    case FamilySpec::Kind::Caterpillar:
      return {beta, beta + 3};
    case FamilySpec::Kind::Lobster:
      return {beta + extra_midlegs, beta + extra_midlegs + 3};
    case FamilySpec::Kind::Spider: {
      bool star = true;
      for (const Leg& leg : c.legs)
        if (leg.kind != LegKind::Pendant) star = false;
      if (star) return {beta + 1, beta + 1};
      return {beta + extra_midlegs, beta + extra_midlegs + 2};
    }
    case FamilySpec::Kind::DRegular: {
      int root = 0;
      int d = t.degree(root);
      int depth = 0;
      for (int v = 0; v < t.size(); ++v) depth = std::max(depth, t.distance(root, v));
      if (depth <= 2) return {beta, beta + d};
      int width = d * (d - 2);
      for (int i = 0; i < depth - 3; ++i) width *= d - 1;
      return {beta, beta + width};
    }
    default:
      throw std::invalid_argument("no closed-form interval for this family");
  }
}

struct CharacterizationReport {
  bool eligible = false;
  std::string ineligible_reason;
  bool satisfied = false;
  int failing_condition = 0;       // 1..3 when eligible and not satisfied
  std::array<int, 3> chain{{-1, -1, -1}};  // the three anchor stems when found
};

namespace detail {

struct OrientationCheck {
  bool ok = false;
  int failing = 0;
  std::array<int, 3> chain{{-1, -1, -1}};
};

// Conditions along one orientation of the backbone. pos: index on the
// backbone; stems/majors hold positions, ascending.
inline OrientationCheck check_orientation(const std::vector<int>& path,
                                          const std::vector<int>& stem_pos,
                                          const std::vector<int>& major_pos) {
  OrientationCheck out;
  int pn = static_cast<int>(path.size()) - 1;
  auto next_major_with = [&](int from, int residue) {
    for (int p : major_pos)
      if (p > from && (p - from) % 3 == residue) return p;
    return -1;
  };
  int k1 = next_major_with(0, 2);
  if (k1 < 0) {
    out.failing = 1;
    return out;
  }
  int k2 = next_major_with(k1, 2);
  if (k2 < 0) {
    out.failing = 1;
    return out;
  }
  int k3 = next_major_with(k2, 2);
  if (k3 < 0) {
    out.failing = 1;
    return out;
  }
  out.chain = {path[k1], path[k2], path[k3]};
  for (int p : stem_pos)
    if (p > 0 && p < k1 && p % 3 == 1) {
      out.failing = 2;
      return out;
    }
  // Toward the far end only the stem nearest to it is constrained; a farther
  // stem at the bad residue is shielded by a nearer one at a good residue.
  int nearest = -1;
  for (int p : stem_pos)
    if (p > k3 && p < pn) nearest = std::max(nearest, p);
  if (nearest >= 0 && (pn - nearest) % 3 == 1) {
    out.failing = 2;
    return out;
  }
  for (int pm : stem_pos) {
    if (pm <= k2) continue;
    int pk = -1;
    for (int p : major_pos)
      if (p > pm) {
        pk = p;
        break;
      }
    if (pk < 0 || (pk - pm) % 3 != 1) continue;
    bool all_zero = true;
    for (int pr : major_pos)
      if (pr >= pk && (pr - pk) % 3 != 0) {
        all_zero = false;
        break;
      }
    if (all_zero) {
      out.failing = 3;
      return out;
    }
  }
  out.ok = true;
  return out;
}

}  // namespace detail

// Decides whether the cube's dimension equals the tree's for trees whose stems
// all sit on one backbone and carry pendants only. Three conditions over stem
// positions mod 3; the backbone is tried in both orientations.
inline CharacterizationReport check_characterization(const Tree& t) {
  CharacterizationReport rep;
  auto c = classify(t);
  if (c.stems.empty()) {
    rep.ineligible_reason = "tree is a path, it has no stems";
    return rep;
  }
  for (const Leg& leg : c.legs)
    if (leg.kind != LegKind::Pendant) {
      rep.ineligible_reason = "a stem carries a leg longer than a pendant";
      return rep;
    }
  int a = c.stems[0], b = c.stems[0], best = 0;
  for (size_t i = 0; i < c.stems.size(); ++i)
    for (size_t j = i + 1; j < c.stems.size(); ++j) {
      int d = t.distance(c.stems[i], c.stems[j]);
      if (d > best) {
        best = d;
        a = c.stems[i];
        b = c.stems[j];
      }
    }
  for (int s : c.stems)
    if (t.distance(a, s) + t.distance(s, b) != best) {
      rep.ineligible_reason = "stems do not lie on a single path";
      return rep;
    }
  if (!c.is_major(a) || !c.is_major(b)) {
    rep.ineligible_reason = "backbone ends at a minor stem";
    return rep;
  }
  rep.eligible = true;

  std::vector<int> path{a};
  int cur = a;
  while (cur != b) {
    for (int nb : t.neighbors(cur))
      if (t.distance(nb, b) == t.distance(cur, b) - 1) {
        cur = nb;
        break;
      }
    path.push_back(cur);
  }
  auto positions = [&](const std::vector<int>& p, const std::vector<int>& verts) {
    std::vector<int> pos;
    for (int i = 0; i < static_cast<int>(p.size()); ++i)
      if (std::binary_search(verts.begin(), verts.end(), p[i])) pos.push_back(i);
    return pos;
  };
  auto fwd = detail::check_orientation(path, positions(path, c.stems), positions(path, c.major_stems));
  std::vector<int> rpath(path.rbegin(), path.rend());
  auto rev = detail::check_orientation(rpath, positions(rpath, c.stems), positions(rpath, c.major_stems));
  rep.satisfied = fwd.ok || rev.ok;
  if (fwd.ok)
    rep.chain = fwd.chain;
  else if (rev.ok)
    rep.chain = rev.chain;
  else {
    rep.failing_condition = fwd.failing;
    rep.chain = fwd.chain;
  }
  return rep;
}

// Necessary condition for dimension collapse when at least two major stems
// exist: some pair of major stems at distance not divisible by three.
inline bool check_mod3_pair_necessity(const Tree& t) {
  auto c = classify(t);
  if (c.major_stems.size() < 2)
    throw std::invalid_argument("check_mod3_pair_necessity: needs at least two major stems");
  for (size_t i = 0; i < c.major_stems.size(); ++i)
    for (size_t j = i + 1; j < c.major_stems.size(); ++j)
      if (t.distance(c.major_stems[i], c.major_stems[j]) % 3 != 0) return true;
  return false;
}

}  // namespace treecube
