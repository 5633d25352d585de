#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tinygraph/census.hpp"

namespace tinygraph {

/// Edge ceiling k - 1 + k / ln k of a sparse k-vertex subgraph; 0 at k = 1.
double edge_surplus_threshold(std::size_t k);

struct TinynessProfile {
  CensusMode mode = CensusMode::induced;
  std::map<std::size_t, std::size_t> counts;
  /// max over k >= 1 of counts[k]^(1/k).
  double c_min = 0;
  std::size_t tight_k = 0;
  /// The k values that were computed exactly.
  std::vector<std::size_t> covered;
};

/// Fits the least c with count_k <= c^k over the rows k >= 1 of the census.
/// Throws std::invalid_argument when no such row exists.
TinynessProfile fit_tinyness(const CensusTable& census);

enum class Method { exact, heuristic };
std::string to_string(Method method);

struct DenseSubset {
  std::size_t k = 0;
  std::size_t edges = 0;
  std::vector<Vertex> members;
  /// exact: `edges` is the maximum. heuristic: only a lower bound.
  Method method = Method::exact;
};

inline constexpr std::uint64_t kDefaultSearchBudget = 50'000'000;

/// max over |S| = k of |E(G[S])| by branch and bound. Falls back to the best
/// set found (greedy peeling plus swaps) when the node budget runs out.
DenseSubset max_edges_on_k(const Graph& g, std::size_t k,
                           std::uint64_t budget = kDefaultSearchBudget);

enum class SearchOutcome { found, none, unknown };

/// Looks for a k-set with at least `target` edges. `found` fills `witness`.
SearchOutcome find_dense_subset(const Graph& g, std::size_t k, std::size_t target,
                                std::uint64_t budget, std::vector<Vertex>& witness);

/// Density class parameters. The cutoff k0 defaults to 1000^(10(d+1)), kept
/// as a natural log because it overflows every machine type; `desk_k0`
/// replaces it for graphs of desk size.
struct SdParams {
  double d = 0;
  std::optional<double> desk_k0;

  double log_k0() const;
  /// Smallest integer k subject to the density condition (saturates).
  std::uint64_t first_k() const;
};

enum class Outcome { holds, violated, inconclusive };
std::string to_string(Outcome outcome);

struct TinynessVerdict {
  Outcome outcome = Outcome::holds;
  Method method = Method::exact;
  /// "density" for the per-k edge ceiling, "census" for the count ceiling.
  std::string condition;
  /// Dense witness: vertex set and its edge count.
  std::vector<Vertex> witness;
  std::size_t witness_edges = 0;
  /// Count witness: k with connected s_k > c^k.
  std::optional<std::size_t> limiting_k;
  std::uint64_t witness_count = 0;
  /// Density condition checked for k in [density_from, density_to].
  std::size_t density_from = 0;
  std::size_t density_to = 0;
  /// Census condition checked for k in [census_from, k_cap].
  std::size_t census_from = 0;
  std::size_t k_cap = 0;
  /// Largest connected component; census coverage is complete when
  /// k_cap >= this.
  std::size_t largest_component = 0;
  std::map<std::size_t, std::uint64_t> connected_counts;
  /// k settled by log_connected_class_bound without enumeration.
  std::vector<std::size_t> bounded_k;
  /// Census k neither bounded nor enumerated within budget.
  std::vector<std::size_t> undecided_census_k;
  std::vector<std::size_t> undecided_k;
};

/// Every k-vertex subgraph with first_k() <= k <= n has at most
/// edge_surplus_threshold(k) edges.
TinynessVerdict check_sd_membership(const Graph& g, const SdParams& params,
                                    std::uint64_t budget = kDefaultSearchBudget);

/// Density condition restricted to k in [k_from, k_to] (clipped to [1, n]).
TinynessVerdict check_density_range(const Graph& g, std::size_t k_from,
                                    std::size_t k_to, std::uint64_t budget);

/// Natural log of an upper bound on the unlabeled connected k-vertex graphs
/// with at most k - 1 + cycles edges: a spanning tree (fewer than 4^(k-1)
/// unlabeled trees) plus up to `cycles` extra pairs.
long double log_connected_class_bound(std::size_t k, std::size_t cycles);

/// Monotone (c, S_d, ln^2)-tiny check: subgraphs on at most ln^2 n vertices
/// obey the density ceiling, and connected s_k <= c^k above ln^2 n for every
/// k. Each k is settled by the structural bound when it suffices, else by
/// enumeration; k left undecided make the verdict inconclusive.
TinynessVerdict certify_cyt_tiny(const Graph& g, double c, const SdParams& params,
                                 const CensusOptions& options = {},
                                 std::uint64_t search_budget = kDefaultSearchBudget);

/// Recomputes |E(G[S])|.
std::size_t induced_edge_count(const Graph& g, const std::vector<Vertex>& members);

}  // namespace tinygraph
