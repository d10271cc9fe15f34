// One line per acceptance criterion: "criterion N: PASS|FAIL  <detail>".
// Exit status is nonzero when any criterion fails.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <mutex>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "cli.hpp"
#include "hang/blocks.hpp"
#include "hang/embedding.hpp"
#include "hang/explorer.hpp"
#include "hang/generators.hpp"
#include "hang/io.hpp"
#include "hang/metrics.hpp"
#include "hang/products.hpp"

namespace {

using namespace hang;
using Clock = std::chrono::steady_clock;

struct Tally {
  std::atomic<std::uint64_t> checked{0};
  std::atomic<std::uint64_t> failures{0};
  std::mutex mu;
  std::string first;

  void fail(const std::string& what) {
    if (failures.fetch_add(1) == 0) {
      std::lock_guard lock(mu);
      first = what;
    }
  }
};

// Runs body(i) for i in [0, count) across hardware threads. Exceptions count
// as failures.
void parallel_for(std::uint64_t count, Tally& t, const std::function<void(std::uint64_t)>& body) {
  const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  std::atomic<std::uint64_t> next{0};
  const std::uint64_t chunk = 4096;
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (;;) {
          const std::uint64_t begin = next.fetch_add(chunk);
          if (begin >= count) return;
          const std::uint64_t end = std::min(count, begin + chunk);
          for (std::uint64_t i = begin; i < end; ++i) {
            try {
              body(i);
            } catch (const std::exception& e) {
              t.fail("item " + std::to_string(i) + ": " + e.what());
            }
          }
        }
      });
  }
}

std::vector<Edge> pair_list(int n) {
  std::vector<Edge> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  return pairs;
}

// Same mask convention as for_each_graph.
Graph graph_from_mask(int n, const std::vector<Edge>& pairs, std::uint64_t mask) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if (mask >> i & 1) edges.push_back(pairs[i]);
  return Graph::from_edge_list(n, edges);
}

// Every labeled graph with 1..max_n vertices, as (n, mask) work items.
struct Corpus {
  std::vector<std::pair<int, std::uint64_t>> offsets;  // (n, first global index)
  std::uint64_t total = 0;

  explicit Corpus(int max_n) {
    for (int n = 1; n <= max_n; ++n) {
      offsets.emplace_back(n, total);
      total += std::uint64_t{1} << (n * (n - 1) / 2);
    }
  }
  std::pair<int, std::uint64_t> locate(std::uint64_t i) const {
    auto it = std::upper_bound(offsets.begin(), offsets.end(), i,
                               [](std::uint64_t x, const auto& o) { return x < o.second; });
    --it;
    return {it->first, i - it->second};
  }
};

std::string describe(const Graph& g) { return "graph6 " + to_graph6(g); }

bool passed = true;

double since(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

void report(int id, const Tally& t, double secs, double limit_seconds, const std::string& what) {
  const bool in_time = limit_seconds <= 0 || secs < limit_seconds;
  const bool ok = t.failures == 0 && in_time;
  passed = passed && ok;
  std::ostringstream line;
  line << "criterion " << id << ": " << (ok ? "PASS" : "FAIL") << "  " << what << "; " << t.checked
       << " checks, " << t.failures << " failures";
  char buf[64];
  if (secs < 0.01)
    std::snprintf(buf, sizeof buf, ", %.3f ms", secs * 1e3);
  else
    std::snprintf(buf, sizeof buf, ", %.2f s", secs);
  line << buf;
  if (limit_seconds > 0) line << " (limit " << limit_seconds << " s)";
  if (!t.first.empty()) line << "; first: " << t.first;
  std::puts(line.str().c_str());
  std::fflush(stdout);
}

std::vector<Vertex> ids(const Graph& g, std::initializer_list<const char*> names) {
  std::vector<Vertex> out;
  for (const char* n : names) out.push_back(*g.find(n));
  std::sort(out.begin(), out.end());
  return out;
}

void criterion1() {
  const Graph g = Graph::from_edge_list(5, {{0, 1}, {0, 3}, {1, 3}, {1, 2}, {2, 3}, {2, 4}})
                      .with_labels({"a", "b", "c", "d", "e"});
  const Graph h = induced_subgraph(g, std::vector<Vertex>{0, 1, 2, 3});
  Tally t;
  const auto start = Clock::now();
  const auto pg = metric_profile(g);
  const auto rg = check_hangable(g);
  const auto dh = all_pairs_distances(h);
  const auto rh = check_hangable(dh, metric_profile(dh), true);
  const bool witness_ok = !rh.hangable && witness_is_valid(rh, dh);
  const double secs = since(start);

  auto expect = [&](bool cond, const char* what) {
    ++t.checked;
    if (!cond) t.fail(what);
  };
  for (const char* v : {"a", "b", "d"}) expect(pg.vertex_periphery[*g.find(v)] == ids(g, {"e"}), "P(a|b|d) = {e}");
  for (const char* v : {"c", "e"}) expect(pg.vertex_periphery[*g.find(v)] == ids(g, {"a"}), "P(c|e) = {a}");
  expect(pg.graph_periphery == ids(g, {"a", "e"}), "P(G) = {a,e}");
  expect(rg.hangable, "G hangable");
  expect(witness_ok, "H not hangable with a valid witness");
  report(1, t, secs, 0.001, "worked example golden values");
}

void criterion2() {
  Tally t;
  const auto start = Clock::now();
  const Corpus corpus(7);
  std::vector<std::vector<Edge>> pairs(8);
  for (int n = 1; n <= 7; ++n) pairs[n] = pair_list(n);
  parallel_for(corpus.total, t, [&](std::uint64_t i) {
    const auto [n, mask] = corpus.locate(i);
    const Graph g = graph_from_mask(n, pairs[n], mask);
    if (!is_connected(g) || !is_block_graph(g)) return;
    ++t.checked;
    if (!check_hangable(g).hangable) t.fail(describe(g));
  });
  std::mt19937_64 rng(20241018);
  for (int i = 0; i < 500; ++i) {
    const Graph g = gen::random_block_graph(40, 6, rng);
    ++t.checked;
    if (!is_block_graph(g) || !check_hangable(g).hangable) t.fail("random " + describe(g));
  }
  report(2, t, since(start), 60, "connected block graphs n <= 7 plus 500 random block graphs hangable");
}

void criterion3() {
  Tally t;
  const auto start = Clock::now();
  const Corpus corpus(7);
  std::vector<std::vector<Edge>> pairs(8);
  for (int n = 1; n <= 7; ++n) pairs[n] = pair_list(n);
  parallel_for(corpus.total, t, [&](std::uint64_t i) {
    const auto [n, mask] = corpus.locate(i);
    const Graph g = graph_from_mask(n, pairs[n], mask);
    if (!is_connected(g)) return;
    ++t.checked;
    const auto d = all_pairs_distances(g);
    const auto p = metric_profile(d);
    const auto direct = check_hangable(d, p);
    const auto triples = check_hangable_triples(d, p);
    if (direct.hangable != triples.hangable || !witness_is_valid(direct, d) || !witness_is_valid(triples, d))
      t.fail(describe(g));
  });
  report(3, t, since(start), 0, "periphery and triple checkers agree on every connected graph n <= 7");
}

std::vector<Graph> graphs_up_to(int max_n, bool connected_only, int min_n = 1) {
  std::vector<Graph> out;
  for (int n = min_n; n <= max_n; ++n)
    for_each_graph(n, [&](const Graph& g) {
      if (!connected_only || is_connected(g)) out.push_back(g);
    });
  return out;
}

void criterion4() {
  Tally t;
  const auto start = Clock::now();
  const auto bases = graphs_up_to(5, true, 2);
  const auto attachments = graphs_up_to(3, false);
  parallel_for(bases.size() * attachments.size(), t, [&](std::uint64_t i) {
    const Graph& g = bases[i / attachments.size()];
    const Graph& h = attachments[i % attachments.size()];
    const auto prod = corona(g, h);
    const auto dist = all_pairs_distances(prod.graph);
    const auto truth = metric_profile(dist);
    const auto dist_g = all_pairs_distances(g);
    const auto oracle = corona_metric_oracle(metric_profile(dist_g), h.vertex_count());
    const int n = prod.graph.vertex_count();
    bool ok = oracle.diameter == truth.diameter && oracle.graph_periphery == truth.graph_periphery;
    for (Vertex p = 0; ok && p < n; ++p) {
      ok = oracle.vertex_periphery[p] == truth.vertex_periphery[p];
      for (Vertex q = 0; ok && q < n; ++q) ok = corona_distance_oracle(dist_g, h, prod.map, p, q) == dist(p, q);
    }
    ok = ok && check_hangable(dist, truth).hangable == check_hangable(g).hangable;
    ++t.checked;
    if (!ok) t.fail(describe(g) + " o " + describe(h));
  });
  report(4, t, since(start), 120, "corona closed forms and hangability transfer, bases 2..5, attachments 1..3");
}

void criterion5() {
  Tally t;
  const auto start = Clock::now();
  const auto factors = graphs_up_to(5, true);
  std::vector<DistanceMatrix> dists;
  std::vector<char> hangable;
  for (const auto& f : factors) {
    dists.push_back(all_pairs_distances(f));
    hangable.push_back(check_hangable(f).hangable);
  }
  parallel_for(factors.size() * factors.size(), t, [&](std::uint64_t i) {
    const std::size_t a = i / factors.size(), b = i % factors.size();
    const auto prod = cartesian(factors[a], factors[b]);
    const auto dist = all_pairs_distances(prod.graph);
    const auto truth = metric_profile(dist);
    const CartesianMetrics oracle(dists[a], dists[b]);
    const int n = prod.graph.vertex_count();
    bool ok = oracle.diameter() == truth.diameter && oracle.graph_periphery() == truth.graph_periphery;
    for (Vertex p = 0; ok && p < n; ++p) {
      ok = oracle.eccentricity(p) == truth.eccentricity[p] && oracle.vertex_periphery(p) == truth.vertex_periphery[p];
      for (Vertex q = 0; ok && q < n; ++q) ok = oracle.distance(p, q) == dist(p, q);
    }
    ok = ok && check_hangable(dist, truth).hangable == (hangable[a] && hangable[b]);
    ++t.checked;
    if (!ok) t.fail(describe(factors[a]) + " x " + describe(factors[b]));
  });
  for (int m = 1; m <= 8; ++m)
    for (int n = 1; n <= 8; ++n) {
      ++t.checked;
      const Graph grid = cartesian(gen::path(m), gen::path(n)).graph;
      if (!(grid == gen::grid(m, n)) || !check_hangable(grid).hangable)
        t.fail("grid " + std::to_string(m) + "x" + std::to_string(n));
    }
  report(5, t, since(start), 0, "cartesian closed forms, hangability biconditional, grids up to 8x8");
}

void criterion6() {
  Tally t;
  const auto start = Clock::now();
  const auto factors = graphs_up_to(5, false);
  parallel_for(factors.size() * factors.size(), t, [&](std::uint64_t i) {
    const Graph& g = factors[i / factors.size()];
    const Graph& h = factors[i % factors.size()];
    ++t.checked;
    if (join_hangability_predicate(g, h) != check_hangable(join(g, h).graph).hangable)
      t.fail(describe(g) + " + " + describe(h));
  });
  report(6, t, since(start), 0, "join predicate matches direct check on all factor pairs n <= 5");
}

void criterion7() {
  Tally t;
  const auto start = Clock::now();
  const auto inputs = graphs_up_to(6, false);
  parallel_for(inputs.size(), t, [&](std::uint64_t i) {
    const Graph& h = inputs[i];
    const auto r = hangable_embedding(h);
    ++t.checked;
    if (r.supergraph.vertex_count() > h.vertex_count() + 1 || !check_hangable(r.supergraph).hangable ||
        !verify_induced_subgraph(r.supergraph, h, r.injection))
      t.fail(describe(h));
  });
  report(7, t, since(start), 0, "embedding into a hangable graph for every graph n <= 6");
}

void criterion8() {
  Tally t;
  const auto start = Clock::now();
  const Corpus corpus(7);
  std::vector<std::vector<Edge>> pairs(8);
  for (int n = 1; n <= 7; ++n) pairs[n] = pair_list(n);
  parallel_for(corpus.total, t, [&](std::uint64_t i) {
    const auto [n, mask] = corpus.locate(i);
    const Graph g = graph_from_mask(n, pairs[n], mask);
    if (!is_connected(g)) return;
    ++t.checked;
    const auto d = all_pairs_distances(g);
    const auto p = metric_profile(d);
    const int k = smallest_hangable_power(g);
    if (k < 1 || k > std::max(p.diameter, 1) || (k == 1) != check_hangable(d, p).hangable) t.fail(describe(g));
  });
  report(8, t, since(start), 0, "smallest hangable power is at most the diameter, n <= 7");
}

std::string run_cli(const std::vector<std::string>& args, const std::string& input) {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return std::to_string(code) + "\n" + out.str() + "\n" + err.str();
}

void criterion9() {
  Tally t;
  const auto start = Clock::now();
  std::string corpus;
  for (int n = 1; n <= 5; ++n) for_each_graph(n, [&](const Graph& g) { corpus += to_graph6(g) + "\n"; });
  corpus += "bad line\n\n";
  const std::string example = "5 6\n# labels: a b c d e\n0 1\n0 3\n1 3\n1 2\n2 3\n2 4\n";
  const std::vector<std::pair<std::vector<std::string>, std::string>> cases{
      {{"hangable", "analyze", "-"}, example},
      {{"hangable", "--format", "structured", "analyze", "-"}, example},
      {{"hangable", "analyze", "hypercube:4"}, ""},
      {{"hangable", "classify"}, corpus},
      {{"hangable", "classify", "--jobs", "4"}, corpus},
      {{"hangable", "--format", "structured", "classify", "--jobs", "0"}, corpus},
  };
  for (const auto& [args, input] : cases) {
    ++t.checked;
    if (run_cli(args, input) != run_cli(args, input)) t.fail(args.back());
  }
  ++t.checked;
  if (run_cli({"hangable", "classify"}, corpus) != run_cli({"hangable", "classify", "--jobs", "4"}, corpus))
    t.fail("classify output depends on --jobs");
  report(9, t, since(start), 0, "analyze and classify output byte-identical across runs");
}

}  // namespace

int main() {
  const std::vector<void (*)()> criteria{criterion1, criterion2, criterion3, criterion4, criterion5,
                                         criterion6, criterion7, criterion8, criterion9};
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    try {
      criteria[i]();
    } catch (const std::exception& e) {
      passed = false;
      std::printf("criterion %zu: FAIL  aborted: %s\n", i + 1, e.what());
    }
  }
  return passed ? 0 : 1;
}
