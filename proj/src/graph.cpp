#include "hang/graph.hpp"

#include <algorithm>
#include <charconv>
#include <set>

namespace hang {

namespace {

std::string edge_text(const Edge& e) {
  return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

// Labels for a combined graph, or empty if either side has none or the
// combined set would repeat a label.
std::vector<std::string> merged_labels(const Graph& g, const Graph& h) {
  if (!g.has_labels() || !h.has_labels()) return {};
  std::vector<std::string> out = g.labels();
  out.insert(out.end(), h.labels().begin(), h.labels().end());
  std::set<std::string> seen(out.begin(), out.end());
  if (seen.size() != out.size()) return {};
  return out;
}

}  // namespace

Graph Graph::from_edge_list(int n, std::span<const Edge> edges) {
  if (n < 0) throw GraphError("negative vertex count");
  Graph g;
  g.adj_.resize(static_cast<std::size_t>(n));
  for (const auto& e : edges) {
    auto [u, v] = e;
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw GraphError("edge " + edge_text(e) + " has an endpoint outside 0.." +
                       std::to_string(n - 1));
    }
    if (u == v) throw GraphError("edge " + edge_text(e) + " is a self-loop");
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  std::size_t degree_sum = 0;
  for (auto& nbrs : g.adj_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    degree_sum += nbrs.size();
  }
  g.edge_count_ = degree_sum / 2;
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  const auto& nbrs = adj_.at(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < vertex_count(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::string Graph::label(Vertex v) const {
  if (v < 0 || v >= vertex_count()) throw GraphError("vertex " + std::to_string(v) + " out of range");
  return labels_.empty() ? std::to_string(v) : labels_[v];
}

Graph Graph::with_labels(std::vector<std::string> labels) const {
  if (!labels.empty()) {
    if (labels.size() != adj_.size()) {
      throw GraphError("expected " + std::to_string(adj_.size()) + " labels, got " +
                       std::to_string(labels.size()));
    }
    std::set<std::string> seen;
    for (const auto& l : labels) {
      if (!seen.insert(l).second) throw GraphError("duplicate label '" + l + "'");
    }
  }
  Graph g = *this;
  g.labels_ = std::move(labels);
  return g;
}

std::optional<Vertex> Graph::find(std::string_view label) const {
  if (labels_.empty()) {
    Vertex v = 0;
    auto [ptr, ec] = std::from_chars(label.data(), label.data() + label.size(), v);
    if (ec != std::errc{} || ptr != label.data() + label.size()) return std::nullopt;
    if (v < 0 || v >= vertex_count()) return std::nullopt;
    return v;
  }
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<Vertex>(it - labels_.begin());
}

bool Graph::valid() const {
  const int n = vertex_count();
  std::size_t degree_sum = 0;
  for (Vertex u = 0; u < n; ++u) {
    const auto& nbrs = adj_[u];
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      Vertex v = nbrs[i];
      if (v < 0 || v >= n || v == u) return false;
      if (i > 0 && nbrs[i - 1] >= v) return false;
      if (!has_edge(v, u)) return false;
    }
    degree_sum += nbrs.size();
  }
  if (degree_sum != 2 * edge_count_) return false;
  if (!labels_.empty()) {
    if (labels_.size() != adj_.size()) return false;
    std::set<std::string> seen(labels_.begin(), labels_.end());
    if (seen.size() != labels_.size()) return false;
  }
  return true;
}

namespace {

// Hop counts from `source`; -1 marks unreachable vertices. `limit` stops the
// search early once that depth has been settled.
std::vector<int> bfs_levels(const Graph& g, Vertex source, int limit) {
  std::vector<int> level(static_cast<std::size_t>(g.vertex_count()), -1);
  std::vector<Vertex> queue;
  queue.reserve(level.size());
  level[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex u = queue[head];
    if (level[u] == limit) continue;
    for (Vertex w : g.neighbors(u)) {
      if (level[w] < 0) {
        level[w] = level[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return level;
}

std::optional<Vertex> first_unreached(const Graph& g) {
  if (g.vertex_count() <= 1) return std::nullopt;
  auto level = bfs_levels(g, 0, g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (level[v] < 0) return v;
  }
  return std::nullopt;
}

}  // namespace

bool is_connected(const Graph& g) { return !first_unreached(g).has_value(); }

Graph complement(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!g.has_edge(u, v)) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edge_list(n, edges).with_labels(g.labels());
}

Graph power(const Graph& g, int k) {
  if (k < 1) throw PreconditionError("power exponent must be at least 1, got " + std::to_string(k));
  if (auto missing = first_unreached(g)) throw DisconnectedError(*missing);
  const int n = g.vertex_count();
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    auto level = bfs_levels(g, u, k);
    for (Vertex v = u + 1; v < n; ++v) {
      if (level[v] > 0) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edge_list(n, edges).with_labels(g.labels());
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<Vertex> keep(vertices.begin(), vertices.end());
  for (Vertex v : keep) {
    if (v < 0 || v >= g.vertex_count()) {
      throw GraphError("vertex " + std::to_string(v) + " out of range for induced subgraph");
    }
  }
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());

  std::vector<Vertex> position(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) position[keep[i]] = static_cast<Vertex>(i);

  std::vector<Edge> edges;
  for (Vertex u : keep) {
    for (Vertex v : g.neighbors(u)) {
      if (u < v && position[v] >= 0) edges.emplace_back(position[u], position[v]);
    }
  }
  Graph out = Graph::from_edge_list(static_cast<int>(keep.size()), edges);
  if (!g.has_labels()) return out;
  std::vector<std::string> labels;
  labels.reserve(keep.size());
  for (Vertex v : keep) labels.push_back(g.label(v));
  return out.with_labels(std::move(labels));
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const int offset = g.vertex_count();
  std::vector<Edge> edges = g.edges();
  for (auto [u, v] : h.edges()) edges.emplace_back(u + offset, v + offset);
  return Graph::from_edge_list(offset + h.vertex_count(), edges).with_labels(merged_labels(g, h));
}

}  // namespace hang
