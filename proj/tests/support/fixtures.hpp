#pragma once

#include <map>
#include <string>
#include <vector>

#include "hang/explorer.hpp"
#include "hang/graph.hpp"
#include "oracle.hpp"

namespace fixtures {

using hang::Graph;

// The worked example: a..e -> 0..4, edges ab ad bd bc cd ce.
inline Graph example_g() {
  return Graph::from_edge_list(5, {{0, 1}, {0, 3}, {1, 3}, {1, 2}, {2, 3}, {2, 4}})
      .with_labels({"a", "b", "c", "d", "e"});
}

// example_g without e: K_4 minus the edge ac.
inline Graph diamond() {
  return Graph::from_edge_list(4, {{0, 1}, {0, 3}, {1, 3}, {1, 2}, {2, 3}})
      .with_labels({"a", "b", "c", "d"});
}

inline std::vector<Graph> all_graphs(int n) {
  std::vector<Graph> out;
  hang::for_each_graph(n, [&](const Graph& g) { out.push_back(g); });
  return out;
}

inline std::vector<Graph> connected_graphs(int n) {
  std::vector<Graph> out;
  hang::for_each_graph(n, [&](const Graph& g) {
    if (hang::is_connected(g)) out.push_back(g);
  });
  return out;
}

/// One representative per isomorphism class (small n only).
inline std::vector<Graph> unlabeled(const std::vector<Graph>& graphs) {
  std::map<std::string, Graph> seen;
  for (const auto& g : graphs) seen.emplace(oracle::canonical_form(g), g);
  std::vector<Graph> out;
  for (auto& [key, g] : seen) out.push_back(g);
  return out;
}

}  // namespace fixtures
