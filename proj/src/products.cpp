#include "hang/products.hpp"

#include <algorithm>
#include <sstream>

namespace hang {

namespace {

// Attach the map's descriptions as labels, unless they would collide.
Graph label_by_map(Graph graph, const ProductVertexMap& map, const Graph& g, const Graph& h) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(map.size()));
  for (Vertex id = 0; id < map.size(); ++id) labels.push_back(map.describe(id, g, h));
  try {
    return graph.with_labels(std::move(labels));
  } catch (const GraphError&) {
    return graph;
  }
}

void require_corona_base(int g_order, int h_order) {
  if (g_order < 2) {
    throw PreconditionError("corona oracle needs a connected base graph of order at least two");
  }
  if (h_order < 1) throw PreconditionError("corona oracle needs a nonempty second factor");
}

}  // namespace

Vertex ProductVertexMap::id_of(const ProductVertex& pv) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), pv);
  if (it == vertices_.end()) throw GraphError("no such product vertex");
  return static_cast<Vertex>(it - vertices_.begin());
}

std::string ProductVertexMap::describe(Vertex id, const Graph& g, const Graph& h) const {
  const auto& pv = (*this)[id];
  switch (pv.kind) {
    case ProductVertex::Kind::base:
    case ProductVertex::Kind::left:
      return g.label(pv.first);
    case ProductVertex::Kind::right:
      return h.label(pv.first);
    case ProductVertex::Kind::copy:
    case ProductVertex::Kind::pair:
      return "(" + g.label(pv.first) + "," + h.label(pv.second) + ")";
  }
  return {};
}

std::string ProductVertexMap::to_text(const Graph& g, const Graph& h) const {
  std::ostringstream out;
  for (Vertex id = 0; id < size(); ++id) {
    out << id << " ↦ ";
    const auto kind = (*this)[id].kind;
    if (kind == ProductVertex::Kind::left) out << "G:";
    if (kind == ProductVertex::Kind::right) out << "H:";
    out << describe(id, g, h) << '\n';
  }
  return out.str();
}

ProductGraph corona(const Graph& g, const Graph& h) {
  const int ng = g.vertex_count();
  const int nh = h.vertex_count();
  std::vector<ProductVertex> vertices;
  vertices.reserve(static_cast<std::size_t>(ng) * static_cast<std::size_t>(1 + nh));
  for (Vertex v = 0; v < ng; ++v) vertices.push_back({ProductVertex::Kind::base, v});
  for (Vertex v = 0; v < ng; ++v)
    for (Vertex x = 0; x < nh; ++x) vertices.push_back({ProductVertex::Kind::copy, v, x});

  auto copy_id = [&](Vertex v, Vertex x) { return ng + v * nh + x; };
  std::vector<Edge> edges = g.edges();
  const auto h_edges = h.edges();
  for (Vertex v = 0; v < ng; ++v) {
    for (Vertex x = 0; x < nh; ++x) edges.emplace_back(v, copy_id(v, x));
    for (auto [x, y] : h_edges) edges.emplace_back(copy_id(v, x), copy_id(v, y));
  }
  ProductVertexMap map(std::move(vertices), ng, nh);
  Graph graph = Graph::from_edge_list(map.size(), edges);
  return {label_by_map(std::move(graph), map, g, h), std::move(map)};
}

ProductGraph cartesian(const Graph& g, const Graph& h) {
  const int ng = g.vertex_count();
  const int nh = h.vertex_count();
  std::vector<ProductVertex> vertices;
  for (Vertex a = 0; a < ng; ++a)
    for (Vertex b = 0; b < nh; ++b) vertices.push_back({ProductVertex::Kind::pair, a, b});

  std::vector<Edge> edges;
  for (auto [a, c] : g.edges())
    for (Vertex b = 0; b < nh; ++b) edges.emplace_back(a * nh + b, c * nh + b);
  for (Vertex a = 0; a < ng; ++a)
    for (auto [b, d] : h.edges()) edges.emplace_back(a * nh + b, a * nh + d);

  ProductVertexMap map(std::move(vertices), ng, nh);
  Graph graph = Graph::from_edge_list(map.size(), edges);
  return {label_by_map(std::move(graph), map, g, h), std::move(map)};
}

ProductGraph join(const Graph& g, const Graph& h) {
  const int ng = g.vertex_count();
  const int nh = h.vertex_count();
  std::vector<ProductVertex> vertices;
  for (Vertex v = 0; v < ng; ++v) vertices.push_back({ProductVertex::Kind::left, v});
  for (Vertex x = 0; x < nh; ++x) vertices.push_back({ProductVertex::Kind::right, x});

  const Graph both = disjoint_union(g, h);
  std::vector<Edge> edges = both.edges();
  for (Vertex v = 0; v < ng; ++v)
    for (Vertex x = 0; x < nh; ++x) edges.emplace_back(v, ng + x);
  Graph graph = Graph::from_edge_list(ng + nh, edges).with_labels(both.labels());
  return {std::move(graph), ProductVertexMap(std::move(vertices), ng, nh)};
}

std::vector<Vertex> universal_vertices(const Graph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == g.vertex_count() - 1) out.push_back(v);
  return out;
}

int corona_distance_oracle(const DistanceMatrix& dist_g, const Graph& h, const ProductVertexMap& map,
                           Vertex p, Vertex q) {
  require_corona_base(dist_g.size(), h.vertex_count());
  if (map.g_order() != dist_g.size() || map.h_order() != h.vertex_count()) {
    throw PreconditionError("vertex map does not belong to these factors");
  }
  const auto& a = map[p];
  const auto& b = map[q];
  using Kind = ProductVertex::Kind;
  if (a.kind != Kind::base && a.kind != Kind::copy) throw PreconditionError("not a corona vertex map");
  if (b.kind != Kind::base && b.kind != Kind::copy) throw PreconditionError("not a corona vertex map");

  const int base = dist_g(a.first, b.first);
  const int copies = (a.kind == Kind::copy) + (b.kind == Kind::copy);
  if (copies == 2 && a.first == b.first) {
    if (a.second == b.second) return 0;
    return h.has_edge(a.second, b.second) ? 1 : 2;
  }
  return base + copies;
}

CoronaMetrics corona_metric_oracle(const MetricProfile& profile_g, int h_order) {
  const int ng = static_cast<int>(profile_g.eccentricity.size());
  require_corona_base(ng, h_order);
  auto times_h = [&](const std::vector<Vertex>& vs) {
    std::vector<Vertex> out;
    out.reserve(vs.size() * static_cast<std::size_t>(h_order));
    for (Vertex v : vs)
      for (Vertex x = 0; x < h_order; ++x) out.push_back(ng + v * h_order + x);
    return out;
  };

  CoronaMetrics m;
  m.diameter = profile_g.diameter + 2;
  m.graph_periphery = times_h(profile_g.graph_periphery);
  m.vertex_periphery.resize(static_cast<std::size_t>(ng) * static_cast<std::size_t>(1 + h_order));
  for (Vertex u = 0; u < ng; ++u) {
    auto periphery = times_h(profile_g.vertex_periphery[u]);
    for (Vertex x = 0; x < h_order; ++x) m.vertex_periphery[ng + u * h_order + x] = periphery;
    m.vertex_periphery[u] = std::move(periphery);
  }
  return m;
}

CoronaMetrics corona_metric_oracle(const Graph& g, const Graph& h) {
  require_corona_base(g.vertex_count(), h.vertex_count());
  return corona_metric_oracle(metric_profile(g), h.vertex_count());
}

CartesianMetrics::CartesianMetrics(DistanceMatrix dist_g, DistanceMatrix dist_h)
    : dist_g_(std::move(dist_g)),
      dist_h_(std::move(dist_h)),
      profile_g_(metric_profile(dist_g_)),
      profile_h_(metric_profile(dist_h_)) {}

int CartesianMetrics::distance(Vertex p, Vertex q) const {
  const int nh = h_order();
  return dist_g_(p / nh, q / nh) + dist_h_(p % nh, q % nh);
}

int CartesianMetrics::eccentricity(Vertex p) const {
  const int nh = h_order();
  return profile_g_.eccentricity[p / nh] + profile_h_.eccentricity[p % nh];
}

std::vector<Vertex> CartesianMetrics::vertex_periphery(Vertex p) const {
  const int nh = h_order();
  std::vector<Vertex> out;
  for (Vertex a : profile_g_.vertex_periphery[p / nh])
    for (Vertex b : profile_h_.vertex_periphery[p % nh]) out.push_back(a * nh + b);
  return out;
}

std::vector<Vertex> CartesianMetrics::graph_periphery() const {
  const int nh = h_order();
  std::vector<Vertex> out;
  for (Vertex a : profile_g_.graph_periphery)
    for (Vertex b : profile_h_.graph_periphery) out.push_back(a * nh + b);
  return out;
}

CartesianMetrics cartesian_metric_oracle(const Graph& g, const Graph& h) {
  if (g.vertex_count() == 0 || h.vertex_count() == 0) {
    throw PreconditionError("cartesian oracle needs nonempty factors");
  }
  return CartesianMetrics(all_pairs_distances(g), all_pairs_distances(h));
}

bool join_hangability_predicate(const Graph& g, const Graph& h) {
  const int ng = g.vertex_count();
  const int nh = h.vertex_count();
  if (ng == 0 || nh == 0) throw PreconditionError("join criterion needs two nonempty factors");
  // In G+H a vertex of G is universal iff it is universal within G.
  const auto universal = universal_vertices(g).size() + universal_vertices(h).size();
  const bool complete = universal == static_cast<std::size_t>(ng + nh);
  return complete || universal <= 1;
}

}  // namespace hang
