#include "tinygraph/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tinygraph/enumerate.hpp"
#include "tinygraph/tinyness.hpp"

namespace tinygraph {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
const double kLn2 = std::log(2.0);
// Exact shadows are kept only below this many bits.
constexpr double kExactBits = 1e6;

double log2_factorial(double k) { return std::lgamma(k + 1) / kLn2; }

}  // namespace

double log2_of(const mpz_class& value) {
  if (value <= 0) return kNegInf;
  long exponent = 0;
  const double mantissa = mpz_get_d_2exp(&exponent, value.get_mpz_t());
  return std::log2(mantissa) + static_cast<double>(exponent);
}

LogQuantity LogQuantity::from_exact(const mpz_class& value) {
  return {log2_of(value), value};
}

mpz_class binomial_exact(std::uint64_t n, std::uint64_t k) {
  mpz_class out;
  if (k > n) return out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

double log2_binomial(double n, double k) {
  if (k < 0 || k > n) return kNegInf;
  const double small = std::min(k, n - k);
  if (small == 0) return 0;
  if (small <= 1e5) {
    double sum = 0;
    for (double i = 0; i < small; ++i) sum += std::log2((n - i) / (i + 1));
    return sum;
  }
  return (std::lgamma(n + 1) - std::lgamma(k + 1) - std::lgamma(n - k + 1)) / kLn2;
}

BinomialSandwich binom_bounds(std::uint64_t n, std::uint64_t k) {
  if (k > n) throw std::invalid_argument("binom_bounds needs k <= n");
  BinomialSandwich out;
  out.exact = binomial_exact(n, k);
  if (k == 0) {
    out.lower = LogQuantity::from_log2(0);
    out.upper = LogQuantity::from_log2(0);
    return out;
  }
  const double kk = static_cast<double>(k);
  const double ratio = std::log2(static_cast<double>(n) / kk);
  out.lower = LogQuantity::from_log2(kk * ratio);
  out.upper = LogQuantity::from_log2(kk * (ratio + std::log2(std::exp(1.0))));
  return out;
}

SparseConnectedCount sparse_connected_count_and_bound(std::size_t k,
                                                      std::size_t exhaustive_cap) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  SparseConnectedCount out;
  out.k = k;
  mpz_class hundred_pow;
  mpz_ui_pow_ui(hundred_pow.get_mpz_t(), 100, k);
  out.bound = LogQuantity::from_exact(hundred_pow);
  if (k > exhaustive_cap) return out;

  const auto ceiling = static_cast<std::size_t>(std::floor(edge_surplus_threshold(k)));
  const std::size_t max_edges = std::min(ceiling, k * (k - 1) / 2);
  std::uint64_t count = 0;
  for (const auto& layer : unlabeled_graphs_by_edges(k, max_edges))
    for (const auto& cert : layer)
      if (is_connected(cert.graph())) ++count;
  out.exact = count;
  return out;
}

double chernoff_bound(double mu, double t) {
  if (mu < 0 || t < 0) throw std::invalid_argument("chernoff_bound needs mu, t >= 0");
  if (t == 0) return 2;
  return std::min(2.0, 2 * std::exp(-t * t / (2 * (mu + t / 3))));
}

SmallDenseProbability small_dense_probability(double n, double d, std::size_t t) {
  SmallDenseProbability out;
  const double log_n = std::log(n);
  out.precondition_lhs =
      t >= 1 ? 3 * std::log((d + 1) * std::exp(2.0)) * std::log(static_cast<double>(t)) : 0;
  out.precondition_rhs = log_n;
  out.precondition_holds = out.precondition_lhs <= out.precondition_rhs;
  for (std::size_t k = 5; k <= t; ++k) {
    const double kk = static_cast<double>(k);
    const double term = std::exp(-kk * log_n / (3 * std::log(kk)));
    out.per_k[k] = term;
    out.total += term;
  }
  out.blanket = 15 / n;
  return out;
}

double dense_count_beta(double d) {
  if (d < 0) throw std::invalid_argument("d must be non-negative");
  if (d == 0) return 2;
  const double x = std::exp(2.0) * d;
  return 2 * std::exp(x * std::log(x));
}

double dense_count_beta_log2(double d) {
  if (d < 0) throw std::invalid_argument("d must be non-negative");
  if (d == 0) return 1;
  const double x = std::exp(2.0) * d;
  return 1 + x * std::log2(x);
}

ProbabilityBound not_tiny_probability(double n, double d) {
  if (n < 1 || d < 0) throw std::invalid_argument("need n >= 1 and d >= 0");
  const double raw = 200 * std::sqrt(d) / std::sqrt(n);
  if (raw >= 1) return {1.0, false};
  return {raw, true};
}

DiversityBound induced_diversity_lower_bound(double n, double d, double k, double delta) {
  DiversityBound out;
  out.in_range = d >= 1 && d <= n / 2 && k >= n / std::sqrt(d) && k <= std::sqrt(delta) * n;
  out.value = LogQuantity::from_log2(k * (std::log2(delta) + delta / 2 * std::log2(n / k)));
  out.vacuous = out.value.log2 <= 0;
  return out;
}

double union_bound_term_log2(double n, double k, double p, double delta) {
  const double mu = k * (k - 1) / 2 * p;
  return 2 * log2_binomial(n, k) + log2_factorial(k) + (1 - 3 * delta) * mu * std::log2(p);
}

BinomialRatio binomial_ratio_check(std::uint64_t n, std::uint64_t k, double delta) {
  if (!(delta > 0)) throw std::invalid_argument("delta must be positive");
  if (k > n) throw std::invalid_argument("need k <= n");
  BinomialRatio out;
  const double dk = delta * static_cast<double>(k);
  out.k_prime = static_cast<std::uint64_t>(std::ceil(dk - 1e-9 * std::max(1.0, dk)));
  if (out.k_prime > k) throw std::invalid_argument("need ceil(delta k) <= k");
  out.lhs_log2 = log2_of(binomial_exact(n, k)) - log2_of(binomial_exact(n, k - out.k_prime));
  const double kk = static_cast<double>(k);
  out.rhs_log2 = 1 + kk * (1 + std::log2(delta) +
                           delta / 2 * std::log2(static_cast<double>(n) / kk));
  out.holds = out.lhs_log2 >= out.rhs_log2;
  return out;
}

double degree_for_s(unsigned s) { return 2.0 * s + 4; }

Representable representable_collections_log(std::uint64_t n, unsigned s) {
  if (n < 2 || s < 1) throw std::invalid_argument("need n >= 2 and s >= 1");
  Representable out;
  const double nn = static_cast<double>(n);
  const double u = std::pow(nn, s);
  const double k_n = std::pow(nn, 2.0 * s - 1);
  const double log2_u = s * std::log2(nn);
  out.relaxed_log2 = u * u + k_n * nn * log2_u;

  // M = C(u, n) collections of n labels out of u.
  const double log2_m = log2_binomial(u, nn);
  const bool small_ints = log2_u < 63 && (2.0 * s - 1) * std::log2(nn) < 63;
  if (small_ints && log2_m < 62) {
    const auto u_int = static_cast<std::uint64_t>(std::llround(u));
    const auto k_int = static_cast<std::uint64_t>(std::llround(k_n));
    const mpz_class m = binomial_exact(u_int, n);
    if (m < k_int) {
      out.exact_form = LogQuantity::from_exact(mpz_class(0));
      return out;
    }
    const double bits = u * u + log2_binomial(m.get_d(), k_n);
    if (bits <= kExactBits) {
      mpz_class value = binomial_exact(m.get_ui(), k_int);
      mpz_mul_2exp(value.get_mpz_t(), value.get_mpz_t(),
                   static_cast<mp_bitcnt_t>(std::llround(u * u)));
      out.exact_form = LogQuantity::from_exact(value);
      return out;
    }
  }
  double log2_c;
  if (log2_m > std::log2(k_n) + 40) {
    // k_n is negligible next to M: C(M, k) = M^k / k! to double precision.
    log2_c = k_n * log2_m - log2_factorial(k_n);
  } else {
    log2_c = log2_binomial(std::exp2(log2_m), k_n);
  }
  out.exact_form = LogQuantity::from_log2(u * u + log2_c);
  return out;
}

LogQuantity available_collections_log_d(std::uint64_t n, double d, unsigned s) {
  const double nn = static_cast<double>(n);
  const double factor = 1 - 200 * std::sqrt(d / nn);
  if (factor <= 0) return LogQuantity::zero();
  const double log2_x =
      std::log2(factor) - nn * std::log2(nn) + d * (nn - 1) / 2 * std::log2(nn / d);
  const double log2_k = (2.0 * s - 1) * std::log2(nn);
  if (log2_x < log2_k) return LogQuantity::zero();
  return LogQuantity::from_log2(std::exp2(log2_k) * (log2_x - log2_k));
}

LogQuantity available_collections_log(std::uint64_t n, unsigned s) {
  return available_collections_log_d(n, degree_for_s(s), s);
}

CrossoverReport crossover_n(unsigned s, std::uint64_t step, std::uint64_t n_max) {
  if (s < 1) throw std::invalid_argument("s must be at least 1");
  if (step < 1) throw std::invalid_argument("step must be positive");
  CrossoverReport report;
  report.s = s;
  report.d = degree_for_s(s);
  report.step = step;
  report.n_max = n_max;

  auto beats = [&](std::uint64_t n) {
    return available_collections_log(n, s).log2 >
           representable_collections_log(n, s).exact_form.log2;
  };
  auto beats_relaxed = [&](std::uint64_t n) {
    return available_collections_log(n, s).log2 >
           representable_collections_log(n, s).relaxed_log2;
  };
  // Least n in (lo, hi] where pred holds, given pred(hi) and not pred(lo).
  auto bisect = [](std::uint64_t lo, std::uint64_t hi, auto&& pred) {
    while (hi - lo > 1) {
      const std::uint64_t mid = lo + (hi - lo) / 2;
      (pred(mid) ? hi : lo) = mid;
    }
    return hi;
  };

  std::optional<std::uint64_t> first_grid, first_grid_relaxed;
  for (std::uint64_t n = std::max<std::uint64_t>(step, 2); n <= n_max; n += step) {
    const auto rep = representable_collections_log(n, s);
    CurvePoint point{n, available_collections_log(n, s).log2, rep.exact_form.log2,
                     rep.relaxed_log2};
    if (!report.curve.empty()) {
      const auto& prev = report.curve.back();
      if (point.available < prev.available || point.representable < prev.representable)
        report.monotone = false;
    }
    report.curve.push_back(point);
    if (!first_grid && point.available > point.representable) first_grid = n;
    if (!first_grid_relaxed && point.available > point.relaxed) first_grid_relaxed = n;
  }

  auto refine = [&](std::uint64_t hi, auto&& pred) -> std::uint64_t {
    const std::uint64_t lo = hi > step ? hi - step : 2;
    if (lo < hi && pred(lo)) return pred(2) ? 2 : bisect(2, lo, pred);
    return lo >= hi ? hi : bisect(lo, hi, pred);
  };
  if (first_grid) {
    const std::uint64_t n = refine(*first_grid, beats);
    report.crossover_n = n;
    report.reverified = beats(n) && (n == 2 || !beats(n - 1));
    report.exact_at_crossover =
        representable_collections_log(n, s).exact_form.exact.has_value();
  }
  if (first_grid_relaxed) report.relaxed_crossover_n = refine(*first_grid_relaxed, beats_relaxed);
  return report;
}

}  // namespace tinygraph
