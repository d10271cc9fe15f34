#include "hang/explorer.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "hang/blocks.hpp"
#include "hang/io.hpp"
#include "hang/metrics.hpp"

namespace hang {

Classification classify_graph(const Graph& g) {
  Classification c;
  c.n = g.vertex_count();
  c.m = g.edge_count();
  c.connected = is_connected(g);
  c.self_complementary = is_self_complementary(g);
  if (c.n == 0) {
    c.note = "empty graph";
    return c;
  }
  if (const Graph co = complement(g); is_connected(co)) c.complement_hangable = check_hangable(co).hangable;
  if (!c.connected) {
    c.note = "disconnected";
    return c;
  }

  const auto dist = all_pairs_distances(g);
  const auto profile = metric_profile(dist);
  c.hangable = check_hangable(dist, profile).hangable;
  c.self_centered = is_self_centered(profile);
  c.block_graph = is_block_graph(g);
  c.tree = is_tree(g);
  c.diameter = profile.diameter;
  c.radius = profile.radius;
  c.periphery_size = static_cast<int>(profile.graph_periphery.size());
  c.smallest_hangable_power = *c.hangable ? 1 : smallest_hangable_power(g);
  return c;
}

namespace {

struct IsoSearch {
  const Graph& a;
  const Graph& b;
  std::vector<Vertex> map;   // a -> b
  std::vector<bool> used;    // b vertices taken

  bool extend(Vertex v) {
    const int n = a.vertex_count();
    if (v == n) return true;
    for (Vertex t = 0; t < n; ++t) {
      if (used[t] || a.degree(v) != b.degree(t)) continue;
      bool ok = true;
      for (Vertex u = 0; u < v && ok; ++u) ok = a.has_edge(u, v) == b.has_edge(map[u], t);
      if (!ok) continue;
      map[v] = t;
      used[t] = true;
      if (extend(v + 1)) return true;
      used[t] = false;
    }
    return false;
  }
};

std::vector<int> sorted_degrees(const Graph& g) {
  std::vector<int> d;
  for (Vertex v = 0; v < g.vertex_count(); ++v) d.push_back(g.degree(v));
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

std::optional<std::vector<Vertex>> find_isomorphism(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return std::nullopt;
  if (sorted_degrees(a) != sorted_degrees(b)) return std::nullopt;
  const auto n = static_cast<std::size_t>(a.vertex_count());
  IsoSearch search{a, b, std::vector<Vertex>(n, -1), std::vector<bool>(n, false)};
  if (!search.extend(0)) return std::nullopt;
  return search.map;
}

std::optional<bool> is_self_complementary(const Graph& g) {
  const int n = g.vertex_count();
  if (n > kSelfComplementLimit) return std::nullopt;
  if (4 * g.edge_count() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) &&
      n > 0) {
    return false;
  }
  return find_isomorphism(g, complement(g)).has_value();
}

int smallest_hangable_power(const Graph& g) {
  const auto dist = all_pairs_distances(g);  // throws on disconnected input
  if (g.vertex_count() == 0) throw PreconditionError("power search needs at least one vertex");
  const int diameter = metric_profile(dist).diameter;
  for (int k = 1; k < diameter; ++k) {
    if (check_hangable(power(g, k)).hangable) return k;
  }
  return std::max(diameter, 1);
}

// ---- stream ----

namespace {

StreamRecord classify_line(std::size_t index, std::string line) {
  StreamRecord r;
  r.index = index;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  r.input = std::move(line);
  try {
    r.result = classify_graph(from_graph6(r.input));
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  return r;
}

constexpr std::size_t kBatchPerWorker = 256;

}  // namespace

void classify_stream(std::istream& in, const std::function<void(const StreamRecord&)>& sink,
                     unsigned workers) {
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t batch_size = kBatchPerWorker * workers;
  std::vector<std::string> lines;
  std::vector<StreamRecord> records;
  std::size_t index = 0;
  std::string line;
  bool more = true;
  while (more) {
    lines.clear();
    while (lines.size() < batch_size && (more = static_cast<bool>(std::getline(in, line)))) {
      lines.push_back(std::move(line));
    }
    if (lines.empty()) break;
    records.assign(lines.size(), StreamRecord{});
    auto work = [&](std::size_t stripe) {
      for (std::size_t i = stripe; i < lines.size(); i += workers) {
        records[i] = classify_line(index + i + 1, std::move(lines[i]));
      }
    };
    if (workers == 1) {
      work(0);
    } else {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work, t);
    }
    for (const auto& r : records) sink(r);
    index += lines.size();
  }
}

namespace {

std::string yes_no(const std::optional<bool>& b) { return b ? (*b ? "yes" : "no") : "-"; }

template <typename T>
std::string number(const std::optional<T>& x) {
  return x ? std::to_string(*x) : "-";
}

std::string sanitize(std::string s) {
  std::replace(s.begin(), s.end(), '\t', ' ');
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

template <typename T>
nlohmann::json opt(const std::optional<T>& x) {
  return x ? nlohmann::json(*x) : nlohmann::json(nullptr);
}

}  // namespace

std::string tsv_header() {
  return "index\tgraph6\tn\tm\tconnected\thangable\tself_centered\tblock_graph\ttree\tdiameter\t"
         "radius\tperiphery_size\tcomplement_hangable\tself_complementary\tsmallest_power\tnote";
}

std::string to_tsv(const StreamRecord& r) {
  std::ostringstream out;
  out << r.index << '\t' << sanitize(r.input) << '\t';
  if (!r.result) {
    for (int i = 0; i < 13; ++i) out << "-\t";
    out << "error: " << sanitize(r.error);
    return out.str();
  }
  const auto& c = *r.result;
  out << c.n << '\t' << c.m << '\t' << (c.connected ? "yes" : "no") << '\t' << yes_no(c.hangable) << '\t'
      << yes_no(c.self_centered) << '\t' << yes_no(c.block_graph) << '\t' << yes_no(c.tree) << '\t'
      << number(c.diameter) << '\t' << number(c.radius) << '\t' << number(c.periphery_size) << '\t'
      << yes_no(c.complement_hangable) << '\t' << yes_no(c.self_complementary) << '\t'
      << number(c.smallest_hangable_power) << '\t' << (c.note.empty() ? "-" : c.note);
  return out.str();
}

std::string to_json_line(const StreamRecord& r) {
  nlohmann::ordered_json j;
  j["index"] = r.index;
  j["graph6"] = r.input;
  if (!r.result) {
    j["error"] = r.error;
    return j.dump();
  }
  const auto& c = *r.result;
  j["n"] = c.n;
  j["m"] = c.m;
  j["connected"] = c.connected;
  j["hangable"] = opt(c.hangable);
  j["self_centered"] = opt(c.self_centered);
  j["block_graph"] = opt(c.block_graph);
  j["tree"] = opt(c.tree);
  j["diameter"] = opt(c.diameter);
  j["radius"] = opt(c.radius);
  j["periphery_size"] = opt(c.periphery_size);
  j["complement_hangable"] = opt(c.complement_hangable);
  j["self_complementary"] = opt(c.self_complementary);
  j["smallest_power"] = opt(c.smallest_hangable_power);
  if (!c.note.empty()) j["note"] = c.note;
  return j.dump();
}

// ---- subgraph search ----

std::uint64_t subset_count(int n, int k) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 0;
  std::uint64_t binom = 1;  // C(n, 0)
  for (int i = 1; i <= std::min(k, n); ++i) {
    // C(n,i) = C(n,i-1) * (n-i+1) / i, exact at every step.
    const auto factor = static_cast<std::uint64_t>(n - i + 1);
    if (binom > kMax / factor) return kMax;
    binom = binom * factor / static_cast<std::uint64_t>(i);
    if (total > kMax - binom) return kMax;
    total += binom;
  }
  return total;
}

SubgraphSearchReport search_hangable_subgraphs(const Graph& host, int max_vertices, SubgraphMode mode,
                                               bool emit, std::uint64_t budget) {
  const int n = host.vertex_count();
  if (max_vertices < 1 || max_vertices > n) {
    throw PreconditionError("max_vertices must be in 1.." + std::to_string(n));
  }
  const auto needed = subset_count(n, max_vertices);
  if (needed > budget) {
    throw BudgetExceeded("subgraph search would visit " + std::to_string(needed) +
                         " subsets, over the budget of " + std::to_string(budget));
  }

  SubgraphSearchReport report;
  report.mode = mode;
  for (int k = 1; k <= max_vertices; ++k) {
    SubgraphSizeStats stats;
    stats.size = k;
    std::vector<Vertex> subset(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) subset[i] = i;
    while (true) {
      const Graph sub = induced_subgraph(host, subset);
      const bool connected = is_connected(sub);
      if (mode == SubgraphMode::induced) ++stats.subsets;
      if (connected) {
        if (mode == SubgraphMode::connected_induced) ++stats.subsets;
        ++stats.connected;
        if (check_hangable(sub).hangable) {
          ++stats.hangable;
          if (emit) {
            report.hangable_sets.push_back(subset);
            report.hangable_graph6.push_back(to_graph6(sub));
          }
        }
      }
      // Next combination in lexicographic order.
      int i = k - 1;
      while (i >= 0 && subset[i] == n - k + i) --i;
      if (i < 0) break;
      ++subset[i];
      for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
    }
    report.per_size.push_back(stats);
  }
  return report;
}

void for_each_graph(int n, const std::function<void(const Graph&)>& visit) {
  if (n < 0 || n > 8) throw PreconditionError("exhaustive enumeration supports 0..8 vertices");
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  std::vector<Edge> edges;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    edges.clear();
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (mask >> i & 1) edges.push_back(pairs[i]);
    visit(Graph::from_edge_list(n, edges));
  }
}

}  // namespace hang
