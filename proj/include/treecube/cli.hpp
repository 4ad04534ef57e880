#pragma once

// Command implementations for the treecube tool. Kept in the library so tests
// can run commands in-process against string streams. All randomness is
// seed-derived and all JSON output is stable byte-for-byte for a given
// configuration; wall-clock timing appears only in the text format.

#include <chrono>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "treecube/bounds.hpp"
#include "treecube/families.hpp"
#include "treecube/io.hpp"
#include "treecube/oracle.hpp"
#include "treecube/resolve.hpp"

namespace treecube::cli {

using ordered_json = nlohmann::ordered_json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitBudget = 3;

struct CliUsageError : std::runtime_error {
  explicit CliUsageError(const std::string& what) : std::runtime_error(what) {}
};

struct TreeInput {
  std::string path;    // edge-list file
  std::string family;  // family spec string
};

struct LoadedTree {
  Tree tree;
  std::vector<long long> labels;  // compact id -> display label
};

inline LoadedTree load_tree(const TreeInput& in) {
  if (in.path.empty() == in.family.empty())
    throw CliUsageError("provide exactly one of --input or --family");
  LoadedTree lt;
  if (!in.path.empty()) {
    std::ifstream f(in.path);
    if (!f) throw CliUsageError("cannot read input file '" + in.path + "'");
    std::stringstream buf;
    buf << f.rdbuf();
    lt.tree = parse_tree(buf.str(), &lt.labels);
  } else {
    lt.tree = generate_family(parse_family_spec(in.family));
    lt.labels.resize(lt.tree.size());
    std::iota(lt.labels.begin(), lt.labels.end(), 0);
  }
  return lt;
}

namespace detail {

inline ordered_json label_list(std::span<const int> vs, const std::vector<long long>& labels) {
  ordered_json a = ordered_json::array();
  for (int v : vs) a.push_back(labels[v]);
  return a;
}

inline std::vector<int> parse_vertex_csv(const std::string& csv,
                                         const std::vector<long long>& labels) {
  std::vector<int> out;
  size_t pos = 0;
  while (pos <= csv.size()) {
    size_t next = csv.find(',', pos);
    std::string item = csv.substr(pos, next == std::string::npos ? csv.size() - pos : next - pos);
    pos = next == std::string::npos ? csv.size() + 1 : next + 1;
    if (item.empty()) continue;
    long long label;
    try {
      label = std::stoll(item);
    } catch (const std::exception&) {
      throw CliUsageError("bad vertex label '" + item + "' in set");
    }
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end())
      throw CliUsageError("vertex label " + std::to_string(label) + " is not in the tree");
    out.push_back(static_cast<int>(it - labels.begin()));
  }
  if (out.empty()) throw CliUsageError("the vertex set is empty");
  return out;
}

inline void check_format(const std::string& fmt, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (fmt == a) return;
  throw CliUsageError("unsupported format '" + fmt + "' for this command");
}

}  // namespace detail

struct AnalyzeOptions {
  TreeInput in;
  std::string format = "text";
  bool exact = false;
  int oracle_cap = 16;
  uint64_t budget = 100'000'000;
};

inline int run_analyze(const AnalyzeOptions& o, std::ostream& out) {
  detail::check_format(o.format, {"text", "json", "dot"});
  auto [t, labels] = load_tree(o.in);
  auto cls = classify(t);
  auto report = bounds_report(t, o.exact, o.oracle_cap, o.budget);

  if (o.format == "dot") {
    std::vector<int> red, blue;
    if (report.construction) red = report.construction->set;
    if (!t.is_path()) blue = tree_metric_basis(t);
    out << to_dot(t, red, blue, &labels);
    return kExitOk;
  }

  int leaves = 0, paths = 0;
  for (Role r : cls.roles) {
    if (r == Role::Leaf) ++leaves;
    if (r == Role::PathVertex) ++paths;
  }

  if (o.format == "json") {
    ordered_json j;
    j["schema"] = 1;
    j["command"] = "analyze";
    j["n"] = t.size();
    j["path"] = report.path;
    j["roles"] = {{"leaves", leaves},
                  {"path_vertices", paths},
                  {"cores", static_cast<int>(cls.cores.size())}};
    j["stems"] = detail::label_list(cls.stems, labels);
    j["major_stems"] = detail::label_list(cls.major_stems, labels);
    ordered_json legs = ordered_json::array();
    for (const Leg& leg : cls.legs) {
      ordered_json lj;
      lj["stem"] = labels[leg.stem];
      lj["kind"] = leg_kind_name(leg.kind);
      lj["vertices"] = detail::label_list(leg.vertices, labels);
      legs.push_back(std::move(lj));
    }
    j["legs"] = std::move(legs);
    ordered_json profiles = ordered_json::array();
    for (const auto& [stem, p] : cls.profiles)
      profiles.push_back({{"stem", labels[stem]},
                          {"pendants", p.pendants},
                          {"midlegs", p.midlegs},
                          {"long_legs", p.long_legs}});
    j["profiles"] = std::move(profiles);
    j["beta_tree"] = report.beta_tree_value;
    j["lower"] = report.lower ? ordered_json(*report.lower) : ordered_json(nullptr);
    j["upper"] = report.upper ? ordered_json(*report.upper) : ordered_json(nullptr);
    if (report.construction) {
      const auto& c = *report.construction;
      ordered_json trace = ordered_json::array();
      for (const TraceEntry& e : c.trace)
        trace.push_back({{"vertex", labels[e.vertex]},
                         {"rule", insert_rule_name(e.rule)},
                         {"stem", e.stem >= 0 ? ordered_json(labels[e.stem]) : ordered_json(nullptr)}});
      j["construction"] = {{"set", detail::label_list(c.set, labels)},
                           {"size", static_cast<int>(c.set.size())},
                           {"augmented", c.augmented},
                           {"trace", std::move(trace)}};
    } else {
      j["construction"] = nullptr;
    }
    if (report.exact)
      j["exact"] = {{"dimension", *report.exact},
                    {"witness", detail::label_list(*report.exact_witness, labels)}};
    else
      j["exact"] = nullptr;
    out << j.dump(2) << "\n";
    return kExitOk;
  }

  auto show = [&](std::span<const int> vs) {
    std::string s;
    for (size_t i = 0; i < vs.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(labels[vs[i]]);
    }
    return s.empty() ? std::string("-") : s;
  };
  out << "tree: " << t.size() << " vertices (" << leaves << " leaves, " << paths
      << " path vertices, " << cls.cores.size() << " cores)\n";
  if (report.path) {
    out << "shape: path graph\n";
    out << "beta(T) = 1\n";
    out << "bounds and construction for the cube apply to branching trees only\n";
  } else {
    out << "stems: " << show(cls.stems) << "\n";
    out << "major stems: " << show(cls.major_stems) << "\n";
    for (const Leg& leg : cls.legs)
      out << "  leg at stem " << labels[leg.stem] << ": " << leg_kind_name(leg.kind) << " ["
          << show(leg.vertices) << "]\n";
    out << "beta(T) = " << report.beta_tree_value << "\n";
    out << "cube bounds: lower " << *report.lower << ", upper " << *report.upper << "\n";
    const auto& c = *report.construction;
    out << "constructed resolving set for the cube (size " << c.set.size()
        << (c.augmented ? ", augmented" : "") << "): " << show(c.set) << "\n";
    for (const TraceEntry& e : c.trace) {
      out << "  + " << labels[e.vertex] << "  " << insert_rule_name(e.rule);
      if (e.stem >= 0) out << "  (stem " << labels[e.stem] << ")";
      out << "\n";
    }
  }
  if (report.exact)
    out << "exact beta(T^3) = " << *report.exact << ", witness: " << show(*report.exact_witness)
        << "\n";
  else if (o.exact)
    out << "exact beta(T^3) skipped: tree larger than the oracle cap\n";
  return kExitOk;
}

struct VerifyOptions {
  TreeInput in;
  std::string set_csv;
  std::string format = "text";
};

inline int run_verify(const VerifyOptions& o, std::ostream& out) {
  detail::check_format(o.format, {"text", "json"});
  auto [t, labels] = load_tree(o.in);
  auto set = detail::parse_vertex_csv(o.set_csv, labels);
  auto rep = check_conditions(t, set);
  bool rt = is_resolving_set(t, set, 1);
  bool rc = is_resolving_set(t, set, 3);

  if (o.format == "json") {
    ordered_json j;
    j["schema"] = 1;
    j["command"] = "verify";
    j["n"] = t.size();
    j["set"] = detail::label_list(set, labels);
    ordered_json conds = ordered_json::array();
    for (int c = 1; c <= 5; ++c) {
      const auto& st = rep.cond[c - 1];
      ordered_json cj;
      cj["class"] = c;
      cj["holds"] = st.holds;
      if (st.fail) {
        cj["pair"] = {labels[st.fail->u], labels[st.fail->v]};
        cj["pair_distance"] = st.fail->dist;
      } else {
        cj["pair"] = nullptr;
        cj["pair_distance"] = nullptr;
      }
      conds.push_back(std::move(cj));
    }
    j["conditions"] = std::move(conds);
    j["conditions_hold"] = rep.overall;
    j["resolves_tree"] = rt;
    j["resolves_cube"] = rc;
    out << j.dump(2) << "\n";
    return kExitOk;
  }

  out << "set:";
  for (int v : set) out << " " << labels[v];
  out << "\n";
  for (int c = 1; c <= 5; ++c) {
    const auto& st = rep.cond[c - 1];
    out << "condition " << c << " (pairs at tree distance " << c << "): "
        << (st.holds ? "holds" : "fails");
    if (st.fail)
      out << "  first failing pair {" << labels[st.fail->u] << ", " << labels[st.fail->v] << "}";
    out << "\n";
  }
  out << "all conditions: " << (rep.overall ? "hold" : "fail") << "\n";
  out << "resolves the tree: " << (rt ? "yes" : "no") << "\n";
  out << "resolves the cube: " << (rc ? "yes" : "no") << "\n";
  return kExitOk;
}

struct GenerateOptions {
  std::string family;
  std::string format = "text";
};

inline int run_generate(const GenerateOptions& o, std::ostream& out) {
  detail::check_format(o.format, {"text", "dot"});
  Tree t = generate_family(parse_family_spec(o.family));
  if (o.format == "dot") {
    out << to_dot(t);
    return kExitOk;
  }
  for (auto [u, v] : t.edge_list()) out << u << " " << v << "\n";
  return kExitOk;
}

struct BruteCliOptions {
  TreeInput in;
  int power = 3;
  uint64_t budget = 100'000'000;
  int threads = 1;
  std::string format = "text";
};

inline int run_brute(const BruteCliOptions& o, std::ostream& out) {
  detail::check_format(o.format, {"text", "json"});
  if (o.power < 1) throw CliUsageError("power must be at least 1");
  if (o.threads < 1) throw CliUsageError("threads must be at least 1");
  auto [t, labels] = load_tree(o.in);
  BruteOptions bo;
  bo.budget = o.budget;
  bo.threads = o.threads;
  auto res = brute_metric_dimension(graph_distances(t, o.power), bo);
  if (o.format == "json") {
    ordered_json j;
    j["schema"] = 1;
    j["command"] = "brute";
    j["n"] = t.size();
    j["power"] = o.power;
    j["dimension"] = res.dimension;
    j["witness"] = detail::label_list(res.witness, labels);
    j["checked"] = res.checked;
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << "exact dimension of T^" << o.power << " = " << res.dimension << "\n";
  out << "witness:";
  for (int v : res.witness) out << " " << labels[v];
  out << "\n";
  out << "subsets checked: " << res.checked << "\n";
  return kExitOk;
}

struct SweepOptions {
  int exhaustive_n = 0;  // labeled-exhaustive mode when > 0
  int random_count = 0;  // random mode: number of trees
  int random_n = 0;      // random mode: tree size
  uint64_t seed = 0;
  int sets_per_tree = 20;
  int oracle_cap = 12;
  int threads = 1;
  std::string format = "text";
};

struct SweepCounters {
  uint64_t trees = 0, path_trees = 0;
  uint64_t predicate_triples = 0, candidate_sets = 0, oracle_trees = 0;
  uint64_t predicate_violations = 0, condition_violations = 0;
  uint64_t bounds_violations = 0, construction_violations = 0;
  uint64_t augmentations = 0;

  void merge(const SweepCounters& o) {
    trees += o.trees;
    path_trees += o.path_trees;
    predicate_triples += o.predicate_triples;
    candidate_sets += o.candidate_sets;
    oracle_trees += o.oracle_trees;
    predicate_violations += o.predicate_violations;
    condition_violations += o.condition_violations;
    bounds_violations += o.bounds_violations;
    construction_violations += o.construction_violations;
    augmentations += o.augmentations;
  }
};

namespace detail {

inline void sweep_tree(const Tree& t, uint64_t set_seed, const SweepOptions& o,
                       SweepCounters& k) {
  int n = t.size();
  ++k.trees;
  bool path = t.is_path();
  if (path) ++k.path_trees;

  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      for (int x = 0; x < n; ++x) {
        if (x == u || x == v) continue;
        ++k.predicate_triples;
        if (resolves_in_cube(t, x, u, v) != resolves_closed_form(t, x, u, v))
          ++k.predicate_violations;
      }

  std::mt19937_64 eng(set_seed);
  for (int j = 0; j < o.sets_per_tree; ++j) {
    int size = 1 + static_cast<int>(bounded_draw(eng, n));
    auto set = random_subset(n, size, eng);
    ++k.candidate_sets;
    if (check_conditions(t, set).overall != is_resolving_set(t, set, 3))
      ++k.condition_violations;
  }

  if (!path) {
    auto cs = construct_resolving_set_cube(t);
    int lo = lower_bound_cube(t), up = upper_bound_cube(t);
    if (cs.augmented) ++k.augmentations;
    if (!cs.verified || static_cast<int>(cs.set.size()) > up) ++k.construction_violations;
    if (lo > up) ++k.bounds_violations;
    if (n <= o.oracle_cap) {
      ++k.oracle_trees;
      int b3 = brute_metric_dimension(graph_distances(t, 3)).dimension;
      int b1 = brute_metric_dimension(graph_distances(t, 1)).dimension;
      if (b1 != beta_tree(t) || b3 < b1 || b3 < lo || b3 > up) ++k.bounds_violations;
    }
  } else if (n <= o.oracle_cap) {
    ++k.oracle_trees;
    if (brute_metric_dimension(graph_distances(t, 1)).dimension != 1) ++k.bounds_violations;
  }
}

}  // namespace detail

// Cross-validation sweep over many trees: closed form against direct
// comparison on every triple, the condition report against full verification
// on seeded candidate sets, and formula bounds against brute force on small
// trees. Counter totals are independent of the thread count.
inline int run_sweep(const SweepOptions& o, std::ostream& out) {
  detail::check_format(o.format, {"text", "json"});
  bool exhaustive = o.exhaustive_n > 0;
  bool random = o.random_count > 0 || o.random_n > 0;
  if (exhaustive == random)
    throw CliUsageError("choose one mode: --exhaustive N, or --random COUNT with --n N");
  if (random && (o.random_count < 1 || o.random_n < 2))
    throw CliUsageError("random mode needs --random COUNT >= 1 and --n N >= 2");
  if (o.sets_per_tree < 0 || o.threads < 1) throw CliUsageError("bad sweep parameters");

  auto started = std::chrono::steady_clock::now();
  SweepCounters total;
  int workers = o.threads;
  std::vector<SweepCounters> parts(workers);
  auto run_part = [&](int id) {
    SweepCounters& k = parts[id];
    if (exhaustive) {
      TreeEnumerator en(o.exhaustive_n, EnumMode::All);
      uint64_t idx = 0;
      while (auto t = en.next()) {
        if (static_cast<int>(idx % workers) == id)
          detail::sweep_tree(*t, derive_seed(o.seed, idx), o, k);
        ++idx;
      }
    } else {
      for (int i = id; i < o.random_count; i += workers) {
        Tree t = random_tree(o.random_n, derive_seed(o.seed, i));
        detail::sweep_tree(t, derive_seed(o.seed, i, 1), o, k);
      }
    }
  };
  if (workers == 1) {
    run_part(0);
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < workers; ++i) pool.emplace_back(run_part, i);
    for (auto& th : pool) th.join();
  }
  for (const auto& p : parts) total.merge(p);
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
                  .count();

  bool clean = total.predicate_violations == 0 && total.condition_violations == 0 &&
               total.bounds_violations == 0 && total.construction_violations == 0;

  if (o.format == "json") {
    ordered_json j;
    j["schema"] = 1;
    j["command"] = "sweep";
    j["mode"] = exhaustive ? "exhaustive" : "random";
    j["n"] = exhaustive ? o.exhaustive_n : o.random_n;
    if (!exhaustive) j["count"] = o.random_count;
    j["seed"] = o.seed;
    j["sets_per_tree"] = o.sets_per_tree;
    j["oracle_cap"] = o.oracle_cap;
    j["trees"] = total.trees;
    j["path_trees"] = total.path_trees;
    j["checks"] = {{"predicate_triples", total.predicate_triples},
                   {"candidate_sets", total.candidate_sets},
                   {"oracle_trees", total.oracle_trees}};
    j["violations"] = {{"predicate", total.predicate_violations},
                       {"conditions", total.condition_violations},
                       {"bounds", total.bounds_violations},
                       {"construction", total.construction_violations}};
    j["augmentations"] = total.augmentations;
    j["clean"] = clean;
    out << j.dump(2) << "\n";
    return kExitOk;
  }

  out << "sweep " << (exhaustive ? "exhaustive" : "random") << " n=" << (exhaustive ? o.exhaustive_n : o.random_n);
  if (!exhaustive) out << " count=" << o.random_count;
  out << " seed=" << o.seed << "\n";
  out << "trees: " << total.trees << " (" << total.path_trees << " paths)\n";
  out << "predicate triples: " << total.predicate_triples
      << ", violations: " << total.predicate_violations << "\n";
  out << "candidate sets: " << total.candidate_sets
      << ", condition mismatches: " << total.condition_violations << "\n";
  out << "oracle trees: " << total.oracle_trees
      << ", bound violations: " << total.bounds_violations << "\n";
  out << "construction violations: " << total.construction_violations
      << ", augmentations: " << total.augmentations << "\n";
  out << "result: " << (clean ? "clean" : "VIOLATIONS FOUND") << "\n";
  out << "wall time: " << ms << " ms\n";
  return kExitOk;
}

// Maps the library's error taxonomy onto process exit codes.
template <typename Fn>
inline int guarded(Fn&& fn, std::ostream& err) {
  try {
    return fn();
  } catch (const BudgetExceededError& e) {
    err << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const FamilySpecError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const CliUsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const PathTreeError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
}

}  // namespace treecube::cli
