#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "hang/graph.hpp"

namespace hang {

enum class EmbeddingBranch {
  identity,   // input already hangable, returned unchanged
  cone,       // no universal vertex: K_1 + H
  split_cone  // universal set U: (K_1 u H[U]) + H[V - U]
};

std::string_view to_string(EmbeddingBranch b);

struct EmbeddingResult {
  Graph supergraph;
  /// injection[v] is the supergraph vertex standing for input vertex v.
  std::vector<Vertex> injection;
  EmbeddingBranch branch;
};

/// Builds a hangable graph containing `h` as an induced subgraph, adding at
/// most one vertex. Disconnected or empty inputs always take a join branch.
/// When `h` is labeled the new vertex is labeled "*" (primed until unique).
EmbeddingResult hangable_embedding(const Graph& h);

/// True iff `injection` is injective and preserves both adjacency and
/// non-adjacency from `h` into `g`. Throws GraphError when the injection is
/// not total on h or points outside g.
bool verify_induced_subgraph(const Graph& g, const Graph& h, std::span<const Vertex> injection);

}  // namespace hang
