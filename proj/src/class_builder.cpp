#include "tinygraph/class_builder.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

#include <mpfr.h>

namespace tinygraph {

double ln_squared(double x) {
  const double l = std::log(x);
  return l * l;
}

namespace {

class Mpfr {
 public:
  explicit Mpfr(long precision) { mpfr_init2(value_, precision); }
  ~Mpfr() { mpfr_clear(value_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  mpfr_ptr get() { return value_; }

 private:
  mpfr_t value_;
};

// ceil(exp(sqrt(x))) or nullopt when it exceeds 64 bits.
std::optional<std::uint64_t> ceil_exp_sqrt(std::uint64_t x, long& precision_used) {
  for (long precision = 128;; precision *= 2) {
    Mpfr lo(precision), hi(precision);
    mpfr_set_ui(lo.get(), x, MPFR_RNDD);
    mpfr_set_ui(hi.get(), x, MPFR_RNDU);
    mpfr_sqrt(lo.get(), lo.get(), MPFR_RNDD);
    mpfr_sqrt(hi.get(), hi.get(), MPFR_RNDU);
    mpfr_exp(lo.get(), lo.get(), MPFR_RNDD);
    mpfr_exp(hi.get(), hi.get(), MPFR_RNDU);
    mpfr_ceil(lo.get(), lo.get());
    mpfr_ceil(hi.get(), hi.get());
    if (mpfr_equal_p(lo.get(), hi.get())) {
      precision_used = std::max(precision_used, precision);
      if (mpfr_cmp_d(lo.get(), 18446744073709551615.0) >= 0) return std::nullopt;
      return static_cast<std::uint64_t>(mpfr_get_uj(lo.get(), MPFR_RNDN));
    }
    if (precision > (1L << 20)) throw std::runtime_error("ladder ceiling did not settle");
  }
}

}  // namespace

Ladder ladder(std::size_t i_max) {
  Ladder out;
  out.levels.push_back(1);
  while (out.levels.size() <= i_max) {
    const auto next = ceil_exp_sqrt(out.levels.back(), out.max_precision);
    if (!next) {
      out.overflow = true;
      break;
    }
    out.levels.push_back(*next);
  }
  return out;
}

SparseCheck is_t_sparse(const std::vector<std::uint64_t>& levels, const ThresholdFn& t) {
  for (std::size_t i = 1; i < levels.size(); ++i)
    if (levels[i] <= levels[i - 1])
      throw std::invalid_argument("levels must be strictly increasing");
  SparseCheck out;
  for (std::size_t i = 1; i < levels.size(); ++i) {
    const auto x = levels[i - 1];
    const auto y = levels[i];
    if (t(static_cast<double>(y)) <= static_cast<double>(x)) {
      out.sparse = false;
      out.violation = std::make_pair(x, y);
      break;
    }
  }
  return out;
}

double gamma_for_levels(unsigned s, const std::vector<std::uint64_t>& levels) {
  double gamma = 1;
  for (auto l : levels) {
    if (l <= 1) continue;
    gamma = std::max(gamma, std::exp((2.0 * s - 1) / std::log(static_cast<double>(l))));
  }
  return gamma;
}

XdSample sample_xd_graph(std::size_t n, const SdParams& params, double c, Seed seed,
                         std::size_t max_tries, const CensusOptions& options,
                         std::uint64_t search_budget) {
  XdSample out;
  out.n = n;
  out.d = params.d;
  out.c = c;
  out.m = edges_for_average_degree(n, params.d);
  for (std::size_t attempt = 0; attempt < max_tries; ++attempt) {
    const Seed s = child_seed(seed, 0x5844, attempt);
    Graph g = sample_gnm(n, out.m, s);
    out.seeds.push_back(s);
    out.verdicts.push_back(certify_cyt_tiny(g, c, params, options, search_budget));
    if (out.verdicts.back().outcome == Outcome::holds) {
      out.graph = std::move(g);
      out.accepted_try = attempt + 1;
      break;
    }
  }
  return out;
}

ClosureCensus build_mon_closure_census(const std::vector<LevelSet>& level_sets,
                                       std::size_t n_max, double gamma, double c,
                                       const CensusOptions& options) {
  ClosureCensus out;
  out.n_max = n_max;
  out.gamma = gamma;
  out.complete_through = n_max;

  std::vector<std::uint64_t> levels;
  for (const auto& set : level_sets) {
    for (const auto& g : set.graphs)
      if (g.order() != set.level)
        throw std::invalid_argument("graph with " + std::to_string(g.order()) +
                                    " vertices in level " + std::to_string(set.level));
    levels.push_back(set.level);
  }
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  out.t_sparse = is_t_sparse(levels).sparse;

  std::map<std::size_t, std::set<Certificate>> seen;
  for (std::size_t k = 1; k <= n_max; ++k) seen[k];
  for (const auto& set : level_sets) {
    const double t = ln_squared(static_cast<double>(set.level));
    const double cap = std::pow(gamma, set.level > 1 ? t : 0.0);
    out.cardinality_ok[set.level] = static_cast<double>(set.graphs.size()) <= cap;
    for (const auto& g : set.graphs) {
      const std::size_t top = std::min(n_max, g.order());
      std::size_t complete = 0;
      const auto table = census_subgraphs_partial(g, top, options, complete);
      if (complete < top) {
        out.truncated = true;
        out.complete_through = std::min(out.complete_through, complete);
      }
      for (const auto& [k, row] : table.per_k) {
        if (k == 0 || k > complete) continue;
        for (const auto& entry : row) seen[k].insert(entry.first);
      }
    }
  }
  for (const auto& [k, certs] : seen) {
    if (k > out.complete_through) break;
    out.counts[k] = certs.size();
    out.alpha = std::max(out.alpha, std::pow(static_cast<double>(certs.size()),
                                             1.0 / static_cast<double>(k)));
  }
  for (const auto& set : level_sets) {
    const double t = ln_squared(static_cast<double>(set.level));
    bool ok = true;
    for (const auto& [k, count] : out.counts) {
      if (static_cast<double>(k) < t || k > set.level) continue;
      if (std::log(static_cast<double>(count)) >
          static_cast<double>(k) * std::log(gamma * c))
        ok = false;
    }
    out.shadow_ok[set.level] = ok;
  }
  return out;
}

}  // namespace tinygraph
