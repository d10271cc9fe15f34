#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "hang/graph.hpp"

namespace hang::gen {

Graph path(int n);                          // P_n, n >= 1
Graph cycle(int n);                         // C_n, n >= 3
Graph complete(int n);                      // K_n, n >= 1
Graph complete_bipartite(int m, int n);     // K_{m,n}, parts 0..m-1 and m..m+n-1
Graph hypercube(int dim);                   // Q_dim, vertices are bit strings
Graph grid(int rows, int cols);             // P_rows x P_cols, (i,j) -> i*cols + j
Graph empty(int n);                         // n isolated vertices, n >= 0

/// Parses "family:params", e.g. "grid:3x4", "cycle:7", "bipartite:2x3".
/// Families: path, cycle, complete, bipartite, hypercube, grid, empty.
/// Throws GraphError on an unknown family or bad parameters.
Graph from_expression(std::string_view expr);

/// True when `expr` names a known family, regardless of parameter validity.
bool looks_like_expression(std::string_view expr);

/// Uniform random labeled tree (Pruefer sequence).
Graph random_tree(int n, std::mt19937_64& rng);

/// Random connected graph: a random tree plus each remaining pair with
/// probability `extra_edge_probability`.
Graph random_connected(int n, double extra_edge_probability, std::mt19937_64& rng);

/// Random block graph: a random tree shape whose nodes become cliques of
/// 1..max_clique vertices, consecutive cliques glued at a shared cut vertex.
/// The result has at most `max_vertices` vertices (and at least one).
Graph random_block_graph(int max_vertices, int max_clique, std::mt19937_64& rng);

}  // namespace hang::gen
