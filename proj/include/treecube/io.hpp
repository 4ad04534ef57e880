#pragma once

// Graphviz export with role annotations and optional vertex-set highlighting.

#include "treecube/classify.hpp"

namespace treecube {

// red: primary marked set, blue: secondary. labels, when given, maps compact
// vertex ids back to the caller's original labels for display.
inline std::string to_dot(const Tree& t, std::span<const int> red = {},
                          std::span<const int> blue = {},
                          const std::vector<long long>* labels = nullptr) {
  auto c = classify(t);
  std::vector<char> mark(t.size(), 0);
  for (int v : red) {
    t.check_vertex(v);
    mark[v] = 1;
  }
  for (int v : blue) {
    t.check_vertex(v);
    if (!mark[v]) mark[v] = 2;
  }
  std::string out = "graph tree {\n  node [shape=circle, fontsize=10];\n";
  for (int v = 0; v < t.size(); ++v) {
    long long shown = labels ? (*labels)[v] : v;
    out += "  " + std::to_string(v) + " [label=\"" + std::to_string(shown) + ":" +
           role_letter(c.roles[v]) + "\"";
    if (mark[v] == 1) out += ", style=filled, fillcolor=\"#e57373\"";
    if (mark[v] == 2) out += ", style=filled, fillcolor=\"#64b5f6\"";
    out += "];\n";
  }
  for (auto [u, v] : t.edge_list())
    out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace treecube
