#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hang/graph.hpp"

namespace hang {

/// Per-graph summary used for corpus sweeps. Metric fields are empty when the
/// graph is disconnected or has no vertices; `note` then says why.
struct Classification {
  int n = 0;
  std::size_t m = 0;
  bool connected = false;
  std::optional<bool> hangable;
  std::optional<bool> self_centered;
  std::optional<bool> block_graph;
  std::optional<bool> tree;
  std::optional<int> diameter;
  std::optional<int> radius;
  std::optional<int> periphery_size;
  /// Only when the complement is connected.
  std::optional<bool> complement_hangable;
  /// Only for n <= kSelfComplementLimit.
  std::optional<bool> self_complementary;
  std::optional<int> smallest_hangable_power;
  std::string note;
};

inline constexpr int kSelfComplementLimit = 8;

/// Never throws on graph shape; degenerate inputs give partial records.
Classification classify_graph(const Graph& g);

/// A permutation p with uv in E(a) <=> p(u)p(v) in E(b), found by
/// backtracking with degree pruning. Intended for small graphs only.
std::optional<std::vector<Vertex>> find_isomorphism(const Graph& a, const Graph& b);

/// Decided by permutation search for n <= kSelfComplementLimit, empty above.
std::optional<bool> is_self_complementary(const Graph& g);

/// Least k >= 1 such that power(g, k) is hangable; at most d(g).
int smallest_hangable_power(const Graph& g);

// ---- stream classification ----

struct StreamRecord {
  std::size_t index = 0;  // 1-based input line number
  std::string input;
  std::optional<Classification> result;
  std::string error;  // set when the line did not parse
};

/// Reads graph6 lines from `in` and hands one record per line to `sink` in
/// input order. Work is done in bounded batches across `workers` threads
/// (0 picks from hardware). Blank or malformed lines become error records.
void classify_stream(std::istream& in, const std::function<void(const StreamRecord&)>& sink,
                     unsigned workers = 1);

/// Tab-separated columns, fixed order; see tsv_header().
std::string tsv_header();
std::string to_tsv(const StreamRecord& r);
/// One JSON object per record.
std::string to_json_line(const StreamRecord& r);

// ---- subgraph probes ----

enum class SubgraphMode { induced, connected_induced };

/// Raised when an enumeration would exceed its configured budget.
class BudgetExceeded : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

inline constexpr std::uint64_t kDefaultSubsetBudget = 10'000'000;

struct SubgraphSizeStats {
  int size = 0;
  std::uint64_t subsets = 0;
  std::uint64_t connected = 0;
  std::uint64_t hangable = 0;
};

struct SubgraphSearchReport {
  SubgraphMode mode = SubgraphMode::induced;
  std::vector<SubgraphSizeStats> per_size;  // sizes 1..max_vertices
  /// Filled only when emission was requested.
  std::vector<std::vector<Vertex>> hangable_sets;
  std::vector<std::string> hangable_graph6;
};

/// Number of vertex subsets of size 1..k of an n-set, saturating at UINT64_MAX.
std::uint64_t subset_count(int n, int k);

/// Enumerates vertex subsets of size 1..max_vertices, keeps the connected
/// induced subgraphs and classifies their hangability. In `induced` mode the
/// per-size counts include disconnected subsets; in `connected_induced` mode
/// only connected ones are counted. Throws BudgetExceeded when the subset
/// count exceeds `budget`.
SubgraphSearchReport search_hangable_subgraphs(const Graph& host, int max_vertices, SubgraphMode mode,
                                               bool emit = false,
                                               std::uint64_t budget = kDefaultSubsetBudget);

/// Every labeled graph on n vertices (all 2^(n(n-1)/2) edge subsets), in
/// increasing edge-mask order. Edge i of the mask is the i-th pair (u,v),
/// u < v, in lexicographic order.
void for_each_graph(int n, const std::function<void(const Graph&)>& visit);

}  // namespace hang
