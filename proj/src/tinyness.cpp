#include "tinygraph/tinyness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "tinygraph/error.hpp"

namespace tinygraph {

double edge_surplus_threshold(std::size_t k) {
  if (k <= 1) return 0;
  const double kk = static_cast<double>(k);
  return kk - 1 + kk / std::log(kk);
}

TinynessProfile fit_tinyness(const CensusTable& census) {
  TinynessProfile profile;
  profile.mode = census.mode;
  for (const auto& [k, row] : census.per_k) {
    if (k == 0) continue;
    const std::size_t count = row.size();
    profile.counts[k] = count;
    profile.covered.push_back(k);
    const double root = std::pow(static_cast<double>(count), 1.0 / static_cast<double>(k));
    if (profile.tight_k == 0 || root > profile.c_min) {
      profile.c_min = root;
      profile.tight_k = k;
    }
  }
  if (profile.covered.empty())
    throw std::invalid_argument("census has no rows with k >= 1");
  return profile;
}

std::string to_string(Method method) {
  return method == Method::exact ? "exact" : "heuristic";
}

std::string to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::holds: return "holds";
    case Outcome::violated: return "violated";
    case Outcome::inconclusive: return "inconclusive";
  }
  return "?";
}

std::size_t induced_edge_count(const Graph& g, const std::vector<Vertex>& members) {
  std::size_t edges = 0;
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      edges += g.adjacent(members[i], members[j]);
  return edges;
}

namespace {

// Greedy peeling down to k vertices, then single swaps while they help.
std::vector<Vertex> greedy_dense_set(const Graph& g, std::size_t k) {
  const std::size_t n = g.order();
  std::vector<char> alive(n, 1);
  std::vector<std::size_t> deg(n);
  for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
  for (std::size_t left = n; left > k; --left) {
    Vertex worst = n;
    for (Vertex v = 0; v < n; ++v)
      if (alive[v] && (worst == n || deg[v] < deg[worst])) worst = v;
    alive[worst] = 0;
    for (Vertex u : g.neighbors(worst))
      if (alive[u]) --deg[u];
  }

  std::vector<Vertex> set;
  for (Vertex v = 0; v < n; ++v)
    if (alive[v]) set.push_back(v);
  // inside[v] = neighbours of v in the set
  std::vector<std::size_t> inside(n, 0);
  for (Vertex v : set)
    for (Vertex u : g.neighbors(v)) ++inside[u];

  for (std::size_t round = 0; round < 4 * n; ++round) {
    bool improved = false;
    for (std::size_t i = 0; i < set.size() && !improved; ++i) {
      const Vertex out = set[i];
      for (Vertex in = 0; in < n && !improved; ++in) {
        if (alive[in]) continue;
        const long gain = static_cast<long>(inside[in]) - g.adjacent(out, in) -
                          static_cast<long>(inside[out]);
        if (gain <= 0) continue;
        alive[out] = 0;
        alive[in] = 1;
        set[i] = in;
        for (Vertex u : g.neighbors(out)) --inside[u];
        for (Vertex u : g.neighbors(in)) ++inside[u];
        improved = true;
      }
    }
    if (!improved) break;
  }
  std::sort(set.begin(), set.end());
  return set;
}

class DenseSearch {
 public:
  DenseSearch(const Graph& g, std::size_t k, std::uint64_t budget)
      : g_(g), k_(k), budget_(budget), a_(g.order(), 0) {}

  // Searches for a set beating `best`; stops early once `stop_at` is reached.
  void run(std::size_t best, std::vector<Vertex> best_set, std::size_t stop_at) {
    best_ = best;
    best_set_ = std::move(best_set);
    stop_at_ = stop_at;
    if (best_ >= stop_at_) return;
    std::vector<Vertex> cand(g_.order());
    std::iota(cand.begin(), cand.end(), 0);
    search(cand);
  }

  bool aborted() const { return aborted_; }
  std::size_t best() const { return best_; }
  const std::vector<Vertex>& best_set() const { return best_set_; }

 private:
  void search(const std::vector<Vertex>& cand) {
    if (aborted_ || best_ >= stop_at_) return;
    if (++nodes_ > budget_) {
      aborted_ = true;
      return;
    }
    const std::size_t r = k_ - chosen_.size();
    if (r == 0) {
      if (edges_ > best_ || (best_set_.empty() && edges_ == best_)) {
        best_ = edges_;
        best_set_ = chosen_;
        std::sort(best_set_.begin(), best_set_.end());
      }
      return;
    }
    if (cand.size() < r) return;

    // Doubled contribution bound: 2a + min(b, r - 1) per candidate.
    in_cand_.assign(g_.order(), 0);
    for (Vertex v : cand) in_cand_[v] = 1;
    std::vector<std::size_t> value(cand.size());
    std::vector<std::size_t> plain(cand.size());
    std::size_t cand_edges2 = 0;
    std::size_t pick = 0;
    for (std::size_t i = 0; i < cand.size(); ++i) {
      const Vertex v = cand[i];
      std::size_t b = 0;
      for (Vertex u : g_.neighbors(v)) b += in_cand_[u];
      cand_edges2 += b;
      value[i] = 2 * a_[v] + std::min(b, r - 1);
      plain[i] = a_[v];
      if (value[i] > value[pick]) pick = i;
    }
    auto top_sum = [r](std::vector<std::size_t> xs) {
      std::nth_element(xs.begin(), xs.begin() + (r - 1), xs.end(), std::greater<>());
      return std::accumulate(xs.begin(), xs.begin() + r, std::size_t{0});
    };
    const std::size_t bound_a = edges_ + top_sum(value) / 2;
    const std::size_t bound_b =
        edges_ + top_sum(plain) + std::min(cand_edges2 / 2, r * (r - 1) / 2);
    if (std::min(bound_a, bound_b) <= best_) return;

    const Vertex v = cand[pick];
    std::vector<Vertex> rest;
    rest.reserve(cand.size() - 1);
    for (Vertex u : cand)
      if (u != v) rest.push_back(u);

    chosen_.push_back(v);
    edges_ += a_[v];
    for (Vertex u : g_.neighbors(v)) ++a_[u];
    search(rest);
    for (Vertex u : g_.neighbors(v)) --a_[u];
    edges_ -= a_[v];
    chosen_.pop_back();

    search(rest);
  }

  const Graph& g_;
  std::size_t k_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  std::vector<std::size_t> a_;
  std::vector<char> in_cand_;
  std::vector<Vertex> chosen_;
  std::size_t edges_ = 0;
  std::size_t best_ = 0;
  std::vector<Vertex> best_set_;
  std::size_t stop_at_ = 0;
};

void check_k(const Graph& g, std::size_t k) {
  if (k < 1 || k > g.order())
    throw std::out_of_range("k = " + std::to_string(k) + " outside [1, " +
                            std::to_string(g.order()) + "]");
}

}  // namespace

DenseSubset max_edges_on_k(const Graph& g, std::size_t k, std::uint64_t budget) {
  check_k(g, k);
  auto start = greedy_dense_set(g, k);
  const std::size_t start_edges = induced_edge_count(g, start);
  DenseSearch search(g, k, budget);
  search.run(start_edges, start, std::numeric_limits<std::size_t>::max());
  DenseSubset out;
  out.k = k;
  out.edges = search.best();
  out.members = search.best_set();
  out.method = search.aborted() ? Method::heuristic : Method::exact;
  return out;
}

SearchOutcome find_dense_subset(const Graph& g, std::size_t k, std::size_t target,
                                std::uint64_t budget, std::vector<Vertex>& witness) {
  check_k(g, k);
  auto start = greedy_dense_set(g, k);
  const std::size_t start_edges = induced_edge_count(g, start);
  if (start_edges >= target) {
    witness = start;
    return SearchOutcome::found;
  }
  DenseSearch search(g, k, budget);
  // Only sets reaching the target matter, so prune against target - 1.
  search.run(target - 1, {}, target);
  if (search.best() >= target) {
    witness = search.best_set();
    return SearchOutcome::found;
  }
  return search.aborted() ? SearchOutcome::unknown : SearchOutcome::none;
}

double SdParams::log_k0() const {
  if (desk_k0) return std::log(*desk_k0);
  return 10.0 * (d + 1.0) * std::log(1000.0);
}

std::uint64_t SdParams::first_k() const {
  if (desk_k0) {
    if (!(*desk_k0 >= 1)) throw std::invalid_argument("desk k0 must be at least 1");
    return static_cast<std::uint64_t>(std::ceil(*desk_k0));
  }
  const double lk = log_k0();
  if (lk >= 63 * std::log(2.0)) return std::numeric_limits<std::uint64_t>::max();
  return static_cast<std::uint64_t>(std::ceil(std::exp(lk)));
}

TinynessVerdict check_density_range(const Graph& g, std::size_t k_from,
                                    std::size_t k_to, std::uint64_t budget) {
  TinynessVerdict verdict;
  verdict.condition = "density";
  const std::size_t n = g.order();
  k_from = std::max<std::size_t>(k_from, 1);
  k_to = std::min(k_to, n);
  verdict.density_from = k_from;
  verdict.density_to = k_to;
  if (k_from > k_to) return verdict;

  std::vector<std::size_t> degrees(n);
  for (Vertex v = 0; v < n; ++v) degrees[v] = g.degree(v);
  std::sort(degrees.rbegin(), degrees.rend());
  std::vector<std::size_t> prefix(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + degrees[i];

  const double m = static_cast<double>(g.edge_count());
  // e(G[S]) <= |S| - 1 + cyclomatic number of G, which never grows on subgraphs.
  const double cycles = m - static_cast<double>(n) +
                        static_cast<double>(connected_components(g).size());
  for (std::size_t k = k_from; k <= k_to; ++k) {
    const double tau = edge_surplus_threshold(k);
    if (static_cast<double>(k * (k - 1) / 2) <= tau) continue;
    if (m <= tau) continue;
    if (static_cast<double>(k - 1) + cycles <= tau) continue;
    if (static_cast<double>(prefix[k] / 2) <= tau) continue;
    const auto target = static_cast<std::size_t>(std::floor(tau)) + 1;
    std::vector<Vertex> witness;
    switch (find_dense_subset(g, k, target, budget, witness)) {
      case SearchOutcome::found:
        verdict.outcome = Outcome::violated;
        verdict.witness = witness;
        verdict.witness_edges = induced_edge_count(g, witness);
        return verdict;
      case SearchOutcome::unknown:
        verdict.undecided_k.push_back(k);
        break;
      case SearchOutcome::none:
        break;
    }
  }
  if (!verdict.undecided_k.empty()) {
    verdict.outcome = Outcome::inconclusive;
    verdict.method = Method::heuristic;
  }
  return verdict;
}

TinynessVerdict check_sd_membership(const Graph& g, const SdParams& params,
                                    std::uint64_t budget) {
  const std::uint64_t from = params.first_k();
  if (from > g.order()) {
    TinynessVerdict verdict;
    verdict.condition = "density";
    verdict.density_from = g.order() + 1;
    verdict.density_to = g.order();
    return verdict;
  }
  return check_density_range(g, from, g.order(), budget);
}

long double log_connected_class_bound(std::size_t k, std::size_t cycles) {
  if (k <= 1) return 0;
  const long double kk = static_cast<long double>(k);
  const long double pairs = kk * (kk - 1) / 2;
  const std::size_t extra_max =
      std::min<std::size_t>(cycles, static_cast<std::size_t>(pairs) - (k - 1));
  // log sum_j C(pairs, j), summed in the log domain.
  long double top = -std::numeric_limits<long double>::infinity();
  std::vector<long double> terms;
  for (std::size_t j = 0; j <= extra_max; ++j) {
    const long double jj = static_cast<long double>(j);
    terms.push_back(std::lgamma(pairs + 1) - std::lgamma(jj + 1) - std::lgamma(pairs - jj + 1));
    top = std::max(top, terms.back());
  }
  long double sum = 0;
  for (auto v : terms) sum += std::exp(v - top);
  return (kk - 1) * std::log(4.0L) + top + std::log(sum);
}

TinynessVerdict certify_cyt_tiny(const Graph& g, double c, const SdParams& params,
                                 const CensusOptions& options,
                                 std::uint64_t search_budget) {
  if (!(c >= 1)) throw std::invalid_argument("c must be at least 1");
  const std::size_t n = g.order();
  const double t = n >= 2 ? std::pow(std::log(static_cast<double>(n)), 2) : 0.0;
  const auto t_floor = static_cast<std::size_t>(std::floor(t));

  const std::uint64_t from = params.first_k();
  TinynessVerdict verdict;
  if (from <= std::min(t_floor, n)) {
    verdict = check_density_range(g, from, t_floor, search_budget);
    if (verdict.outcome == Outcome::violated) return verdict;
  } else {
    verdict.density_from = from > n ? n + 1 : from;
    verdict.density_to = std::min(t_floor, n);
  }

  // Cyclomatic number of every component, to bound the census without
  // enumerating it where possible.
  std::vector<std::pair<std::size_t, std::size_t>> comps;  // (size, cycles)
  for (const auto& comp : connected_components(g)) {
    const auto members = comp.members();
    const std::size_t e = induced_edge_count(g, members);
    comps.emplace_back(members.size(), e + 1 - members.size());
    verdict.largest_component = std::max(verdict.largest_component, members.size());
  }

  verdict.census_from = t_floor + 1;
  verdict.k_cap = t_floor;
  const long double log_c = std::log(static_cast<long double>(c));
  bool contiguous = true;
  bool enumeration_failed = false;
  for (std::size_t k = t_floor + 1; k <= verdict.largest_component; ++k) {
    std::size_t cycles = 0;
    for (const auto& [size, r] : comps)
      if (size >= k) cycles = std::max(cycles, r);
    if (log_connected_class_bound(k, cycles) <= static_cast<long double>(k) * log_c) {
      verdict.bounded_k.push_back(k);
      if (contiguous) verdict.k_cap = k;
      continue;
    }
    if (enumeration_failed) {
      verdict.undecided_census_k.push_back(k);
      contiguous = false;
      continue;
    }
    std::uint64_t count = 0;
    try {
      const auto table =
          connected_census(g, k, CensusMode::connected_subgraph, options, k);
      count = table.classes(k);
    } catch (const BudgetExceeded&) {
      enumeration_failed = true;
    } catch (const CapacityError&) {
      enumeration_failed = true;
    }
    if (enumeration_failed) {
      verdict.undecided_census_k.push_back(k);
      contiguous = false;
      continue;
    }
    verdict.connected_counts[k] = count;
    if (contiguous) verdict.k_cap = k;
    if (count > 0 && std::log(static_cast<long double>(count)) >
                         static_cast<long double>(k) * log_c) {
      verdict.outcome = Outcome::violated;
      verdict.method = Method::exact;
      verdict.condition = "census";
      verdict.limiting_k = k;
      verdict.witness_count = count;
      verdict.witness.clear();
      return verdict;
    }
  }
  if (!verdict.undecided_census_k.empty()) {
    verdict.outcome = Outcome::inconclusive;
    verdict.condition = "census";
    verdict.limiting_k = verdict.undecided_census_k.front();
  }
  return verdict;
}

}  // namespace tinygraph
