#pragma once

#include <string>
#include <vector>

#include "hang/graph.hpp"

namespace hang {

/// Blocks (maximal 2-connected subgraphs; a bridge with its endpoints counts
/// as one) and articulation vertices of a connected graph. Each block is a
/// sorted vertex list and the blocks are in lexicographic order.
struct BlockDecomposition {
  std::vector<std::vector<Vertex>> blocks;
  std::vector<Vertex> cut_vertices;

  friend bool operator==(const BlockDecomposition&, const BlockDecomposition&) = default;
};

/// Iterative lowpoint traversal, safe on long paths. K_1 gives a single block
/// {0}. Throws DisconnectedError on disconnected input.
BlockDecomposition biconnected_components(const Graph& g);

/// "block: 0 1 2" per block, then "cut vertices: 2" (labels when present).
std::string to_text(const BlockDecomposition& d, const Graph& g);

/// Connected and every block induces a complete graph.
bool is_block_graph(const Graph& g);
bool is_block_graph(const Graph& g, const BlockDecomposition& d);

/// Connected with m = n - 1.
bool is_tree(const Graph& g);

}  // namespace hang
