#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "tinygraph/canon.hpp"
#include "tinygraph/random.hpp"

namespace tinygraph {

enum class CensusMode { induced, subgraph, connected_induced, connected_subgraph };

std::string to_string(CensusMode mode);
CensusMode census_mode_from_string(const std::string& text);

struct ClassCount {
  /// Labeled occurrences: vertex subsets (induced modes) or (vertex subset,
  /// edge subset) pairs (subgraph modes). Saturates at UINT64_MAX.
  std::uint64_t occurrences = 0;
  std::size_t edges = 0;
};

using ClassMap = std::map<Certificate, ClassCount>;

/// Unlabeled k-vertex (induced) subgraphs of one host graph, keyed by k.
/// Row k = 0 holds the empty graph. Rows exist for k_min..k_max (and 0 when
/// k_min = 0).
struct CensusTable {
  CensusMode mode = CensusMode::induced;
  std::size_t n = 0;
  std::size_t k_min = 0;
  std::size_t k_max = 0;
  std::map<std::size_t, ClassMap> per_k;
  /// Needed by compose_disconnected for packing checks.
  Graph host;

  /// Number of isomorphism classes on k vertices: i_k, s_k or their
  /// connected variants depending on mode.
  std::size_t classes(std::size_t k) const;
  /// s_k(G, t): classes on k vertices with exactly t edges (only realized t).
  std::map<std::size_t, std::size_t> classes_by_edges(std::size_t k) const;
  bool covers(std::size_t k) const { return per_k.count(k) != 0; }
};

struct CensusOptions {
  /// Enumeration steps (subsets, edge sets, search nodes) before refusal.
  std::uint64_t budget = 100'000'000;
  unsigned threads = 1;
  /// Vertex cap for canonizing enumerated subgraphs.
  std::size_t max_vertices = kDenseVertexLimit;
};

/// Exact i_k(g) for 0 <= k <= k_max by k-subset enumeration. Refuses up
/// front (BudgetExceeded) when sum_k C(n, k) exceeds the budget.
CensusTable census_induced(const Graph& g, std::size_t k_max,
                           const CensusOptions& options = {});

/// Exact s_k(g) and s_k(g, t) for 0 <= k <= k_max. Enumerates edge sets F
/// spanning at most k_max vertices; each F padded with isolated vertices
/// gives one class per k >= |V(F)|. On budget exhaustion the exception is
/// BudgetExceeded naming the first incomplete vertex count.
CensusTable census_subgraphs(const Graph& g, std::size_t k_max,
                             const CensusOptions& options = {});

/// Like census_subgraphs but keeps the complete rows k < limiting k when the
/// budget runs out. `complete_through` receives the last complete k.
CensusTable census_subgraphs_partial(const Graph& g, std::size_t k_max,
                                     const CensusOptions& options,
                                     std::size_t& complete_through);

/// Connected induced subgraphs or connected subgraphs on k_min..k_max
/// vertices. Connected vertex sets come from ESU enumeration (each set
/// produced once, from its minimum vertex); connected subgraphs on a set are
/// its connected spanning edge subsets.
CensusTable connected_census(const Graph& g, std::size_t k_max, CensusMode mode,
                             const CensusOptions& options = {},
                             std::size_t k_min = 1);

/// Number of unlabeled k-vertex subgraphs of the table's host rebuilt from a
/// connected-subgraph census: every multiset of connected classes with sizes
/// summing to k whose disjoint union packs into the host. Throws
/// std::invalid_argument when the table is not a connected-subgraph census
/// covering 1..k.
std::uint64_t compose_disconnected(const CensusTable& connected, std::size_t k);

struct DiversitySample {
  std::size_t samples = 0;
  std::size_t distinct = 0;
  /// distinct is a certified lower bound on i_k(g).
  std::size_t lower_bound_on_i_k = 0;
};

/// Draws `samples` uniform k-subsets (Floyd sampling), canonizes each
/// induced subgraph and counts distinct classes.
DiversitySample sampled_induced_diversity(const Graph& g, std::size_t k,
                                          std::size_t samples, Seed seed,
                                          std::size_t max_vertices = kDenseVertexLimit);

/// Exact C(n, k) saturated at UINT64_MAX.
std::uint64_t binomial_saturated(std::uint64_t n, std::uint64_t k);

}  // namespace tinygraph
