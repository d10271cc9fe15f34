#pragma once

#include <string>
#include <vector>

#include "hang/graph.hpp"
#include "hang/metrics.hpp"

namespace hang {

/// What a product vertex stands for in terms of the factors.
struct ProductVertex {
  enum class Kind {
    base,   // corona: original vertex `first` of G
    copy,   // corona: (first, second) in V_G x V_H
    pair,   // cartesian: (first, second)
    left,   // join: vertex `first` of G
    right,  // join: vertex `first` of H
  };
  Kind kind;
  Vertex first;
  Vertex second = -1;

  friend bool operator==(const ProductVertex&, const ProductVertex&) = default;
};

/// Bijection between product vertex identifiers and factor descriptions.
class ProductVertexMap {
 public:
  ProductVertexMap() = default;
  ProductVertexMap(std::vector<ProductVertex> vertices, int g_order, int h_order)
      : vertices_(std::move(vertices)), g_order_(g_order), h_order_(h_order) {}

  int size() const noexcept { return static_cast<int>(vertices_.size()); }
  const ProductVertex& operator[](Vertex id) const { return vertices_.at(id); }
  int g_order() const noexcept { return g_order_; }
  int h_order() const noexcept { return h_order_; }

  /// Inverse lookup; throws GraphError when no product vertex matches.
  Vertex id_of(const ProductVertex& pv) const;

  /// Display string for `id` built from factor labels, e.g. "(b,x)".
  std::string describe(Vertex id, const Graph& g, const Graph& h) const;

  /// One line per vertex: "id ↦ v" or "id ↦ (v,x)".
  std::string to_text(const Graph& g, const Graph& h) const;

 private:
  std::vector<ProductVertex> vertices_;
  int g_order_ = 0;
  int h_order_ = 0;
};

struct ProductGraph {
  Graph graph;
  ProductVertexMap map;
};

/// Corona: G's vertices first (ids 0..|G|-1), then copy (v,x) at
/// |G| + v*|H| + x. Edges: E_G, v-(v,x), and (v,x)-(v,y) for xy in E_H.
ProductGraph corona(const Graph& g, const Graph& h);

/// Cartesian product with row-major ids: (a,b) -> a*|H| + b.
ProductGraph cartesian(const Graph& g, const Graph& h);

/// Join: G's vertices, then H's shifted by |G|, plus every cross edge.
ProductGraph join(const Graph& g, const Graph& h);

/// Vertices adjacent to every other vertex (degree n-1).
std::vector<Vertex> universal_vertices(const Graph& g);

/// Distance in the corona between product vertices `p` and `q`, computed
/// from G's distance matrix only. Two copies with the same base are at
/// distance 1 when their H-vertices are adjacent and 2 otherwise.
/// Requires |G| >= 2 and a nonempty H (PreconditionError otherwise).
int corona_distance_oracle(const DistanceMatrix& dist_g, const Graph& h, const ProductVertexMap& map,
                           Vertex p, Vertex q);

struct CoronaMetrics {
  int diameter = 0;
  /// Indexed by corona vertex id.
  std::vector<std::vector<Vertex>> vertex_periphery;
  std::vector<Vertex> graph_periphery;
};

/// Diameter d(G)+2; P(u) = P((u,x)) = P_G(u) x V_H; P = P(G) x V_H.
CoronaMetrics corona_metric_oracle(const MetricProfile& profile_g, int h_order);
CoronaMetrics corona_metric_oracle(const Graph& g, const Graph& h);

/// Closed forms for a cartesian product of connected factors, computed from
/// factor metrics without touching the product graph.
class CartesianMetrics {
 public:
  CartesianMetrics(DistanceMatrix dist_g, DistanceMatrix dist_h);

  int g_order() const noexcept { return dist_g_.size(); }
  int h_order() const noexcept { return dist_h_.size(); }

  int distance(Vertex p, Vertex q) const;
  int eccentricity(Vertex p) const;
  int diameter() const noexcept { return profile_g_.diameter + profile_h_.diameter; }
  std::vector<Vertex> vertex_periphery(Vertex p) const;
  std::vector<Vertex> graph_periphery() const;

 private:
  DistanceMatrix dist_g_;
  DistanceMatrix dist_h_;
  MetricProfile profile_g_;
  MetricProfile profile_h_;
};

/// Throws DisconnectedError if either factor is disconnected.
CartesianMetrics cartesian_metric_oracle(const Graph& g, const Graph& h);

/// The join criterion, evaluated from factor degrees alone: G+H is complete,
/// or it has at most one universal vertex. Both factors must be nonempty.
bool join_hangability_predicate(const Graph& g, const Graph& h);

}  // namespace hang
