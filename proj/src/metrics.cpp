#include "hang/metrics.hpp"

#include <algorithm>
#include <thread>

namespace hang {

DistanceMatrix::DistanceMatrix(int n, std::vector<int> entries) : n_(n), d_(std::move(entries)) {
  if (n < 0 || d_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
    throw GraphError("distance matrix has the wrong number of entries");
  }
}

namespace {

// BFS into `out` (length n, pre-filled with -1) using `queue` as scratch.
// Returns the first unreached vertex, or -1.
Vertex bfs_into(const Graph& g, Vertex source, std::span<int> out, std::vector<Vertex>& queue) {
  queue.clear();
  out[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    const int next = out[u] + 1;
    for (Vertex w : g.neighbors(u)) {
      if (out[w] < 0) {
        out[w] = next;
        queue.push_back(w);
      }
    }
  }
  if (queue.size() == out.size()) return -1;
  for (Vertex v = 0; v < static_cast<Vertex>(out.size()); ++v)
    if (out[v] < 0) return v;
  return -1;
}

void require_nonempty(int n) {
  if (n == 0) throw PreconditionError("metrics are undefined on a graph with no vertices");
}

}  // namespace

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  if (source < 0 || source >= g.vertex_count()) {
    throw GraphError("source vertex " + std::to_string(source) + " out of range");
  }
  std::vector<int> row(static_cast<std::size_t>(g.vertex_count()), -1);
  std::vector<Vertex> queue;
  queue.reserve(row.size());
  if (Vertex missing = bfs_into(g, source, row, queue); missing >= 0) throw DisconnectedError(missing);
  return row;
}

DistanceMatrix all_pairs_distances(const Graph& g, unsigned threads) {
  const int n = g.vertex_count();
  const auto width = static_cast<std::size_t>(n);
  std::vector<int> d(width * width, -1);
  if (n == 0) return DistanceMatrix(0, std::move(d));

  // A single BFS settles connectivity for every row.
  std::vector<Vertex> queue;
  queue.reserve(width);
  if (Vertex missing = bfs_into(g, 0, std::span<int>(d.data(), width), queue); missing >= 0) {
    throw DisconnectedError(missing);
  }

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  // Threading only pays off once rows are long enough.
  if (n < 512) threads = 1;
  threads = std::min<unsigned>(threads, static_cast<unsigned>(n));

  auto work = [&](unsigned stripe) {
    std::vector<Vertex> scratch;
    scratch.reserve(width);
    for (auto v = static_cast<Vertex>(1 + stripe); v < n; v += static_cast<Vertex>(threads)) {
      bfs_into(g, v, std::span<int>(d.data() + static_cast<std::size_t>(v) * width, width), scratch);
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
  }
  return DistanceMatrix(n, std::move(d));
}

MetricProfile metric_profile(const DistanceMatrix& dist) {
  const int n = dist.size();
  require_nonempty(n);
  MetricProfile p;
  p.eccentricity.resize(static_cast<std::size_t>(n));
  p.vertex_periphery.resize(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    const auto row = dist.row(v);
    const int ecc = *std::max_element(row.begin(), row.end());
    p.eccentricity[v] = ecc;
    for (Vertex u = 0; u < n; ++u)
      if (row[u] == ecc) p.vertex_periphery[v].push_back(u);
  }
  p.diameter = *std::max_element(p.eccentricity.begin(), p.eccentricity.end());
  p.radius = *std::min_element(p.eccentricity.begin(), p.eccentricity.end());
  for (Vertex v = 0; v < n; ++v)
    if (p.eccentricity[v] == p.diameter) p.graph_periphery.push_back(v);
  return p;
}

MetricProfile metric_profile(const Graph& g) {
  require_nonempty(g.vertex_count());
  return metric_profile(all_pairs_distances(g));
}

bool is_self_centered(const MetricProfile& profile) { return profile.radius == profile.diameter; }

bool is_self_centered(const Graph& g) { return is_self_centered(metric_profile(g)); }

HangabilityReport check_hangable(const DistanceMatrix& dist, const MetricProfile& profile,
                                 bool want_triple) {
  HangabilityReport report;
  const int n = dist.size();
  for (Vertex v = 0; v < n && report.hangable; ++v) {
    for (Vertex u : profile.vertex_periphery[v]) {
      if (profile.eccentricity[u] != profile.diameter) {
        report.hangable = false;
        report.witness = PeripheryWitness{v, u};
        break;
      }
    }
  }
  if (!report.hangable && want_triple) {
    const auto [v, u] = *report.witness;
    report.triple_witness = TripleWitness{v, u, profile.vertex_periphery[u].front()};
  }
  return report;
}

HangabilityReport check_hangable(const Graph& g, bool want_triple) {
  require_nonempty(g.vertex_count());
  const auto dist = all_pairs_distances(g);
  return check_hangable(dist, metric_profile(dist), want_triple);
}

HangabilityReport check_hangable_triples(const DistanceMatrix& dist, const MetricProfile& profile,
                                         TripleMode mode) {
  HangabilityReport report;
  std::size_t count = 0;
  const int n = dist.size();
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex u : profile.vertex_periphery[v]) {
      for (Vertex w : profile.vertex_periphery[u]) {
        if (dist(u, w) == profile.diameter) continue;
        ++count;
        if (report.hangable) {
          report.hangable = false;
          report.triple_witness = TripleWitness{v, u, w};
          report.witness = PeripheryWitness{v, u};
          if (mode == TripleMode::first_violation) return report;
        }
      }
    }
  }
  if (mode == TripleMode::exhaustive) report.violations = count;
  return report;
}

HangabilityReport check_hangable_triples(const Graph& g, TripleMode mode) {
  require_nonempty(g.vertex_count());
  const auto dist = all_pairs_distances(g);
  return check_hangable_triples(dist, metric_profile(dist), mode);
}

bool witness_is_valid(const HangabilityReport& report, const DistanceMatrix& dist) {
  const int n = dist.size();
  if (n == 0) return false;
  auto in_range = [n](Vertex x) { return x >= 0 && x < n; };
  auto ecc = [&](Vertex x) {
    const auto row = dist.row(x);
    return *std::max_element(row.begin(), row.end());
  };
  int diameter = 0;
  for (Vertex x = 0; x < n; ++x) diameter = std::max(diameter, ecc(x));

  if (report.hangable) return !report.witness && !report.triple_witness;
  if (!report.witness && !report.triple_witness) return false;
  if (report.witness) {
    const auto [v, u] = *report.witness;
    if (!in_range(v) || !in_range(u)) return false;
    if (dist(v, u) != ecc(v) || ecc(u) == diameter) return false;
  }
  if (report.triple_witness) {
    const auto [v, u, w] = *report.triple_witness;
    if (!in_range(v) || !in_range(u) || !in_range(w)) return false;
    if (dist(v, u) != ecc(v) || dist(u, w) != ecc(u) || dist(u, w) >= diameter) return false;
  }
  return true;
}

}  // namespace hang
