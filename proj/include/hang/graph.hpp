#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hang {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Malformed or out-of-range input to a graph constructor.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Text that could not be decoded. `offset()` is a byte offset for graph6 and
/// a 1-based line number for the edge-list format.
class ParseError : public GraphError {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : GraphError(what), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// An operation that needs a connected graph was handed a disconnected one.
class DisconnectedError : public std::runtime_error {
 public:
  explicit DisconnectedError(Vertex unreached)
      : std::runtime_error("graph is disconnected: vertex " +
                           std::to_string(unreached) + " is unreachable"),
        unreached_(unreached) {}
  Vertex unreached() const noexcept { return unreached_; }

 private:
  Vertex unreached_;
};

/// A documented precondition (order, factor shape, budget) does not hold.
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Immutable finite simple undirected graph on vertices 0..n-1. Neighbor lists
// are sorted and duplicate-free; display labels are an optional side layer and
// never participate in equality.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from unordered pairs. Duplicates (in either orientation)
  /// collapse; self-loops and out-of-range endpoints throw GraphError.
  static Graph from_edge_list(int n, std::span<const Edge> edges);
  static Graph from_edge_list(int n, std::initializer_list<Edge> edges) {
    return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  int vertex_count() const noexcept { return static_cast<int>(adj_.size()); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(v); }
  int degree(Vertex v) const { return static_cast<int>(adj_.at(v).size()); }
  bool has_edge(Vertex u, Vertex v) const;

  /// All edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  bool has_labels() const noexcept { return !labels_.empty(); }
  /// Display label of v, or its decimal identifier when unlabeled.
  std::string label(Vertex v) const;
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// Copy with display labels attached. Throws GraphError if the count is
  /// wrong or two labels coincide. An empty vector removes labels.
  Graph with_labels(std::vector<std::string> labels) const;

  /// Looks up a vertex by label (or by decimal id when unlabeled).
  std::optional<Vertex> find(std::string_view label) const;

  /// Re-checks simplicity, symmetry and sortedness. Constructors already
  /// guarantee these; tests use this as an independent validator.
  bool valid() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::string> labels_;
  std::size_t edge_count_ = 0;
};

bool is_connected(const Graph& g);

Graph complement(const Graph& g);

/// Edge uv iff 0 < d(u,v) <= k. Throws DisconnectedError on disconnected input.
Graph power(const Graph& g, int k);

/// Subgraph induced by `vertices` (any order, duplicates ignored), relabeled
/// 0..|S|-1 in increasing identifier order. Labels are carried over.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// h's vertices are shifted by g.vertex_count(); no edges between the parts.
Graph disjoint_union(const Graph& g, const Graph& h);

}  // namespace hang
