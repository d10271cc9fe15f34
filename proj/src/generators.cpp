#include "hang/generators.hpp"

#include <algorithm>
#include <charconv>
#include <queue>
#include <string>
#include <vector>

namespace hang::gen {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw GraphError(what);
}

}  // namespace

Graph path(int n) {
  require(n >= 1, "path needs at least 1 vertex");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edge_list(n, edges);
}

Graph cycle(int n) {
  require(n >= 3, "cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph::from_edge_list(n, edges);
}

Graph complete(int n) {
  require(n >= 1, "complete graph needs at least 1 vertex");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::from_edge_list(n, edges);
}

Graph complete_bipartite(int m, int n) {
  require(m >= 1 && n >= 1, "complete bipartite graph needs two nonempty parts");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < m; ++u)
    for (Vertex v = 0; v < n; ++v) edges.emplace_back(u, m + v);
  return Graph::from_edge_list(m + n, edges);
}

Graph hypercube(int dim) {
  require(dim >= 1 && dim <= 20, "hypercube dimension must be in 1..20");
  const int n = 1 << dim;
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v)
    for (int bit = 0; bit < dim; ++bit) {
      const Vertex w = v ^ (1 << bit);
      if (v < w) edges.emplace_back(v, w);
    }
  return Graph::from_edge_list(n, edges);
}

Graph grid(int rows, int cols) {
  require(rows >= 1 && cols >= 1, "grid needs positive dimensions");
  std::vector<Edge> edges;
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      const Vertex v = i * cols + j;
      if (i + 1 < rows) edges.emplace_back(v, v + cols);
      if (j + 1 < cols) edges.emplace_back(v, v + 1);
    }
  return Graph::from_edge_list(rows * cols, edges);
}

Graph empty(int n) {
  require(n >= 0, "vertex count must be non-negative");
  return Graph::from_edge_list(n, {});
}

namespace {

constexpr std::string_view kFamilies[] = {"path", "cycle", "complete", "bipartite",
                                          "hypercube", "grid", "empty"};

std::vector<int> parse_params(std::string_view text, std::string_view expr) {
  std::vector<int> out;
  while (true) {
    const auto sep = text.find('x');
    std::string_view part = text.substr(0, sep);
    int value = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (part.empty() || ec != std::errc{} || ptr != part.data() + part.size()) {
      throw GraphError("bad generator parameters in '" + std::string(expr) + "'");
    }
    out.push_back(value);
    if (sep == std::string_view::npos) break;
    text.remove_prefix(sep + 1);
  }
  return out;
}

}  // namespace

bool looks_like_expression(std::string_view expr) {
  const auto colon = expr.find(':');
  if (colon == std::string_view::npos) return false;
  const auto family = expr.substr(0, colon);
  return std::find(std::begin(kFamilies), std::end(kFamilies), family) != std::end(kFamilies);
}

Graph from_expression(std::string_view expr) {
  const auto colon = expr.find(':');
  if (colon == std::string_view::npos || !looks_like_expression(expr)) {
    throw GraphError("unknown generator expression '" + std::string(expr) + "'");
  }
  const auto family = expr.substr(0, colon);
  const auto p = parse_params(expr.substr(colon + 1), expr);
  auto arity = [&](std::size_t k) {
    if (p.size() != k) {
      throw GraphError("generator '" + std::string(family) + "' takes " + std::to_string(k) +
                       " parameter(s)");
    }
  };
  if (family == "path") return arity(1), path(p[0]);
  if (family == "cycle") return arity(1), cycle(p[0]);
  if (family == "complete") return arity(1), complete(p[0]);
  if (family == "hypercube") return arity(1), hypercube(p[0]);
  if (family == "empty") return arity(1), empty(p[0]);
  if (family == "bipartite") return arity(2), complete_bipartite(p[0], p[1]);
  arity(2);
  return grid(p[0], p[1]);
}

Graph random_tree(int n, std::mt19937_64& rng) {
  require(n >= 1, "tree needs at least 1 vertex");
  if (n <= 2) return path(n);
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> pruefer(static_cast<std::size_t>(n - 2));
  for (auto& x : pruefer) x = pick(rng);

  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (int x : pruefer) ++degree[x];
  std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
  for (int v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.push(v);

  std::vector<Edge> edges;
  for (int x : pruefer) {
    const int leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, x);
    if (--degree[x] == 1) leaves.push(x);
  }
  const int a = leaves.top();
  leaves.pop();
  edges.emplace_back(a, leaves.top());
  return Graph::from_edge_list(n, edges);
}

Graph random_connected(int n, double extra_edge_probability, std::mt19937_64& rng) {
  Graph tree = random_tree(n, rng);
  std::vector<Edge> edges = tree.edges();
  std::bernoulli_distribution coin(extra_edge_probability);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!tree.has_edge(u, v) && coin(rng)) edges.emplace_back(u, v);
  return Graph::from_edge_list(n, edges);
}

Graph random_block_graph(int max_vertices, int max_clique, std::mt19937_64& rng) {
  require(max_vertices >= 1 && max_clique >= 1, "block graph bounds must be positive");
  std::uniform_int_distribution<int> root_size(1, std::min(max_clique, max_vertices));
  std::uniform_int_distribution<int> node_count(1, max_vertices);
  const Graph shape = random_tree(node_count(rng), rng);

  // Each shape node is a clique; a child clique reuses one vertex of its
  // parent (the cut vertex) and adds 1..max_clique-1 fresh vertices.
  std::vector<std::vector<Vertex>> clique(static_cast<std::size_t>(shape.vertex_count()));
  std::vector<Edge> edges;
  int used = 0;
  auto add_clique = [&](std::vector<Vertex>& members, int fresh) {
    for (int i = 0; i < fresh; ++i) members.push_back(used++);
    for (std::size_t a = 0; a < members.size(); ++a)
      for (std::size_t b = a + 1; b < members.size(); ++b) edges.emplace_back(members[a], members[b]);
  };

  std::vector<int> parent(clique.size(), -1);
  std::vector<int> order{0};
  parent[0] = 0;
  add_clique(clique[0], root_size(rng));
  for (std::size_t head = 0; head < order.size(); ++head) {
    const int node = order[head];
    for (Vertex child : shape.neighbors(node)) {
      if (parent[child] >= 0) continue;
      parent[child] = node;
      order.push_back(child);
      const int room = std::min(max_clique - 1, max_vertices - used);
      if (room <= 0) continue;
      std::uniform_int_distribution<int> fresh(1, room);
      const auto& host = clique[node];
      if (host.empty()) continue;
      std::uniform_int_distribution<std::size_t> which(0, host.size() - 1);
      clique[child].push_back(host[which(rng)]);
      add_clique(clique[child], fresh(rng));
    }
  }
  return Graph::from_edge_list(used, edges);
}

}  // namespace hang::gen
