#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tinygraph/census.hpp"
#include "tinygraph/random.hpp"
#include "tinygraph/tinyness.hpp"

namespace tinygraph {

/// Threshold function t used by sparseness checks; defaults to ln^2.
using ThresholdFn = std::function<double(double)>;
double ln_squared(double x);

struct Ladder {
  /// l_0 = 1, l_{i+1} = ceil(exp(sqrt(l_i))).
  std::vector<std::uint64_t> levels;
  /// The next value did not fit in 64 bits; the sequence stops early.
  bool overflow = false;
  /// Highest MPFR precision needed to pin a ceiling.
  long max_precision = 0;
};

/// Each ceiling is taken from a directed-rounding interval; precision is
/// raised until both ends round up to the same integer.
Ladder ladder(std::size_t i_max);

struct SparseCheck {
  bool sparse = true;
  /// First consecutive pair (x, y) with t(y) <= x.
  std::optional<std::pair<std::uint64_t, std::uint64_t>> violation;
};

/// No pair x < y in `levels` with t(y) <= x. Levels must be strictly
/// increasing (std::invalid_argument otherwise).
SparseCheck is_t_sparse(const std::vector<std::uint64_t>& levels,
                        const ThresholdFn& t = ln_squared);

/// Least gamma with l^(2s-1) <= gamma^(ln^2 l) for every level l > 1.
double gamma_for_levels(unsigned s, const std::vector<std::uint64_t>& levels);

struct XdSample {
  std::size_t n = 0;
  double d = 0;
  double c = 0;
  std::uint64_t m = 0;
  std::optional<Graph> graph;
  std::size_t accepted_try = 0;  // 1-based, 0 when rejected
  std::vector<Seed> seeds;
  std::vector<TinynessVerdict> verdicts;
};

/// Draws G(n, ceil(d(n-1)/2)) with child seeds of `seed` until
/// certify_cyt_tiny holds, at most `max_tries` times.
XdSample sample_xd_graph(std::size_t n, const SdParams& params, double c, Seed seed,
                         std::size_t max_tries, const CensusOptions& options = {},
                         std::uint64_t search_budget = kDefaultSearchBudget);

struct LevelSet {
  std::size_t level = 0;
  std::vector<Graph> graphs;
};

struct ClosureCensus {
  std::size_t n_max = 0;
  /// Distinct k-vertex subgraphs over all member graphs.
  std::map<std::size_t, std::size_t> counts;
  /// Rows k <= complete_through are exact.
  std::size_t complete_through = 0;
  bool truncated = false;
  /// max over k >= 1 of counts[k]^(1/k).
  double alpha = 0;
  bool t_sparse = true;
  double gamma = 0;
  /// Level -> whether |M_l| <= gamma^(t(l)).
  std::map<std::size_t, bool> cardinality_ok;
  /// Level -> whether counts[k] <= (gamma c)^k for t(l) <= k <= l (computed k).
  std::map<std::size_t, bool> shadow_ok;
};

/// Union of subgraph censuses of every member graph up to n_max vertices.
/// Member graphs must have exactly `level` vertices.
ClosureCensus build_mon_closure_census(const std::vector<LevelSet>& level_sets,
                                       std::size_t n_max, double gamma, double c,
                                       const CensusOptions& options = {});

}  // namespace tinygraph
