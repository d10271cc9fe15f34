#include "hang/embedding.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "hang/metrics.hpp"
#include "hang/products.hpp"

namespace hang {

std::string_view to_string(EmbeddingBranch b) {
  switch (b) {
    case EmbeddingBranch::identity:
      return "identity";
    case EmbeddingBranch::cone:
      return "cone";
    case EmbeddingBranch::split_cone:
      return "split-cone";
  }
  return "unknown";
}

namespace {

std::string fresh_label(const Graph& h) {
  std::set<std::string> taken(h.labels().begin(), h.labels().end());
  std::string name = "*";
  while (taken.count(name)) name += '\'';
  return name;
}

// Labels for the supergraph: `apex` gets a fresh name, every injected vertex
// keeps its label from h.
Graph relabel(Graph super, const Graph& h, const std::vector<Vertex>& injection, Vertex apex) {
  if (!h.has_labels()) return super;
  std::vector<std::string> labels(static_cast<std::size_t>(super.vertex_count()));
  labels[apex] = fresh_label(h);
  for (Vertex v = 0; v < h.vertex_count(); ++v) labels[injection[v]] = h.label(v);
  return super.with_labels(std::move(labels));
}

bool already_hangable(const Graph& h) {
  if (h.vertex_count() == 0 || !is_connected(h)) return false;
  return check_hangable(h).hangable;
}

}  // namespace

EmbeddingResult hangable_embedding(const Graph& h) {
  const int n = h.vertex_count();
  if (already_hangable(h)) {
    std::vector<Vertex> identity(static_cast<std::size_t>(n));
    std::iota(identity.begin(), identity.end(), 0);
    return {h, std::move(identity), EmbeddingBranch::identity};
  }

  const auto apex = Graph::from_edge_list(1, {});
  const auto universal = universal_vertices(h);
  if (universal.empty()) {
    // Apex is vertex 0, h follows in order.
    auto cone = join(apex, h).graph;
    std::vector<Vertex> injection(static_cast<std::size_t>(n));
    std::iota(injection.begin(), injection.end(), 1);
    cone = relabel(std::move(cone), h, injection, 0);
    return {std::move(cone), std::move(injection), EmbeddingBranch::cone};
  }

  // Non-hangable graphs are never complete, so the rest is nonempty.
  std::vector<Vertex> rest;
  for (Vertex v = 0; v < n; ++v)
    if (!std::binary_search(universal.begin(), universal.end(), v)) rest.push_back(v);

  const Graph left = disjoint_union(apex, induced_subgraph(h, universal).with_labels({}));
  Graph super = join(left, induced_subgraph(h, rest).with_labels({})).graph;

  // Supergraph order: apex, then U, then V - U, each block in h's order.
  std::vector<Vertex> injection(static_cast<std::size_t>(n));
  Vertex next = 1;
  for (Vertex v : universal) injection[v] = next++;
  for (Vertex v : rest) injection[v] = next++;
  super = relabel(std::move(super), h, injection, 0);
  return {std::move(super), std::move(injection), EmbeddingBranch::split_cone};
}

bool verify_induced_subgraph(const Graph& g, const Graph& h, std::span<const Vertex> injection) {
  const int n = h.vertex_count();
  if (injection.size() != static_cast<std::size_t>(n)) {
    throw GraphError("injection must map all " + std::to_string(n) + " vertices");
  }
  for (Vertex image : injection) {
    if (image < 0 || image >= g.vertex_count()) {
      throw GraphError("injection target " + std::to_string(image) + " is outside the supergraph");
    }
  }
  std::set<Vertex> images(injection.begin(), injection.end());
  if (images.size() != injection.size()) return false;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (h.has_edge(u, v) != g.has_edge(injection[u], injection[v])) return false;
  return true;
}

}  // namespace hang
