#include "hang/blocks.hpp"

#include <algorithm>
#include <sstream>

#include "hang/metrics.hpp"

namespace hang {

namespace {

void require_connected(const Graph& g) {
  if (!is_connected(g)) bfs_distances(g, 0);  // throws DisconnectedError with the unreached vertex
}

}  // namespace

BlockDecomposition biconnected_components(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) throw PreconditionError("block decomposition needs at least one vertex");
  require_connected(g);
  BlockDecomposition out;
  if (n == 1) {
    out.blocks.push_back({0});
    return out;
  }

  const auto size = static_cast<std::size_t>(n);
  std::vector<int> order(size, -1);
  std::vector<int> low(size, 0);
  std::vector<bool> is_cut(size, false);
  std::vector<Edge> edge_stack;

  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;  // index into neighbors(v)
    int children;
  };
  std::vector<Frame> stack;
  int clock = 0;
  order[0] = low[0] = clock++;
  stack.push_back({0, -1, 0, 0});

  while (!stack.empty()) {
    Frame& top = stack.back();
    const auto nbrs = g.neighbors(top.v);
    if (top.next < nbrs.size()) {
      const Vertex w = nbrs[top.next++];
      if (order[w] < 0) {
        edge_stack.emplace_back(top.v, w);
        order[w] = low[w] = clock++;
        ++top.children;
        stack.push_back({w, top.v, 0, 0});
      } else if (w != top.parent && order[w] < order[top.v]) {
        edge_stack.emplace_back(top.v, w);
        low[top.v] = std::min(low[top.v], order[w]);
      }
      continue;
    }

    const Frame done = top;
    stack.pop_back();
    if (stack.empty()) {
      if (done.children >= 2) is_cut[done.v] = true;
      break;
    }
    const Vertex parent = done.parent;
    low[parent] = std::min(low[parent], low[done.v]);
    if (low[done.v] >= order[parent]) {
      if (stack.size() > 1) is_cut[parent] = true;
      std::vector<Vertex> block;
      while (true) {
        const Edge e = edge_stack.back();
        edge_stack.pop_back();
        block.push_back(e.first);
        block.push_back(e.second);
        if (e == Edge{parent, done.v}) break;
      }
      std::sort(block.begin(), block.end());
      block.erase(std::unique(block.begin(), block.end()), block.end());
      out.blocks.push_back(std::move(block));
    }
  }

  std::sort(out.blocks.begin(), out.blocks.end());
  for (Vertex v = 0; v < n; ++v)
    if (is_cut[v]) out.cut_vertices.push_back(v);
  return out;
}

std::string to_text(const BlockDecomposition& d, const Graph& g) {
  std::ostringstream out;
  for (const auto& block : d.blocks) {
    out << "block:";
    for (Vertex v : block) out << ' ' << g.label(v);
    out << '\n';
  }
  out << "cut vertices:";
  for (Vertex v : d.cut_vertices) out << ' ' << g.label(v);
  out << '\n';
  return out.str();
}

bool is_block_graph(const Graph& g, const BlockDecomposition& d) {
  for (const auto& block : d.blocks) {
    for (std::size_t i = 0; i < block.size(); ++i)
      for (std::size_t j = i + 1; j < block.size(); ++j)
        if (!g.has_edge(block[i], block[j])) return false;
  }
  return true;
}

bool is_block_graph(const Graph& g) { return is_block_graph(g, biconnected_components(g)); }

bool is_tree(const Graph& g) {
  if (g.vertex_count() == 0) throw PreconditionError("tree test needs at least one vertex");
  require_connected(g);
  return g.edge_count() + 1 == static_cast<std::size_t>(g.vertex_count());
}

}  // namespace hang
