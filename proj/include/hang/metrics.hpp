#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hang/graph.hpp"

namespace hang {

/// All-pairs hop counts of a connected graph, stored row-major.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  DistanceMatrix(int n, std::vector<int> entries);

  int size() const noexcept { return n_; }
  int operator()(Vertex u, Vertex v) const { return d_[static_cast<std::size_t>(u) * n_ + v]; }
  std::span<const int> row(Vertex v) const {
    return {d_.data() + static_cast<std::size_t>(v) * n_, static_cast<std::size_t>(n_)};
  }

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  int n_ = 0;
  std::vector<int> d_;
};

/// Eccentricities, diameter, radius and the two kinds of periphery.
struct MetricProfile {
  std::vector<int> eccentricity;
  int diameter = 0;
  int radius = 0;
  /// vertex_periphery[v]: vertices at distance eccentricity[v] from v, sorted.
  std::vector<std::vector<Vertex>> vertex_periphery;
  /// Vertices whose eccentricity equals the diameter, sorted.
  std::vector<Vertex> graph_periphery;
};

/// A vertex v together with a vertex u farthest from v that is not peripheral.
struct PeripheryWitness {
  Vertex v;
  Vertex u;
  friend bool operator==(const PeripheryWitness&, const PeripheryWitness&) = default;
};

/// u farthest from v, w farthest from u, and d(u, w) below the diameter.
struct TripleWitness {
  Vertex v;
  Vertex u;
  Vertex w;
  friend bool operator==(const TripleWitness&, const TripleWitness&) = default;
};

struct HangabilityReport {
  bool hangable = true;
  std::optional<PeripheryWitness> witness;
  std::optional<TripleWitness> triple_witness;
  /// Number of violating triples; only filled by the exhaustive triple check.
  std::optional<std::size_t> violations;
};

/// Single-source BFS. Throws DisconnectedError naming the first unreached
/// vertex, GraphError if `source` is out of range.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

/// One BFS per source. `threads` == 0 picks a count from the hardware; the
/// result does not depend on it.
DistanceMatrix all_pairs_distances(const Graph& g, unsigned threads = 1);

MetricProfile metric_profile(const DistanceMatrix& dist);
MetricProfile metric_profile(const Graph& g);

bool is_self_centered(const Graph& g);
bool is_self_centered(const MetricProfile& profile);

/// Decides P(v) subset of P(G) for every v. On failure the witness has the
/// smallest v, then the smallest u. With `want_triple`, also reports the
/// smallest w farthest from that u.
HangabilityReport check_hangable(const Graph& g, bool want_triple = false);
HangabilityReport check_hangable(const DistanceMatrix& dist, const MetricProfile& profile,
                                 bool want_triple = false);

enum class TripleMode { first_violation, exhaustive };

/// Decides hangability through farthest-of-farthest triples: for every v,
/// every u farthest from v and every w farthest from u, d(u, w) must be the
/// diameter. The witness is the lexicographically smallest violating triple
/// in both modes; exhaustive mode also counts every violation.
HangabilityReport check_hangable_triples(const Graph& g, TripleMode mode = TripleMode::first_violation);
HangabilityReport check_hangable_triples(const DistanceMatrix& dist, const MetricProfile& profile,
                                         TripleMode mode = TripleMode::first_violation);

/// Re-checks every witness in `report` against `dist` from scratch.
bool witness_is_valid(const HangabilityReport& report, const DistanceMatrix& dist);

}  // namespace hang
