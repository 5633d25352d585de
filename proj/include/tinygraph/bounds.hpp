#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace tinygraph {

/// A non-negative quantity carried as log2 (-inf for zero), with an exact
/// integer shadow when one was computed.
struct LogQuantity {
  double log2 = -std::numeric_limits<double>::infinity();
  std::optional<mpz_class> exact;

  static LogQuantity zero() { return {}; }
  static LogQuantity from_log2(double value) { return {value, std::nullopt}; }
  static LogQuantity from_exact(const mpz_class& value);
  bool is_zero() const { return log2 == -std::numeric_limits<double>::infinity(); }
};

/// log2 of a positive big integer, accurate to double precision.
double log2_of(const mpz_class& value);

/// Exact C(n, k) (zero when k > n).
mpz_class binomial_exact(std::uint64_t n, std::uint64_t k);
/// log2 C(n, k) via lgamma; -inf when k > n.
double log2_binomial(double n, double k);

struct BinomialSandwich {
  LogQuantity lower;  // (n/k)^k
  mpz_class exact;
  LogQuantity upper;  // (ne/k)^k
};
/// (n/k)^k <= C(n,k) <= (ne/k)^k. Throws std::invalid_argument if k > n.
BinomialSandwich binom_bounds(std::uint64_t n, std::uint64_t k);

struct SparseConnectedCount {
  std::size_t k = 0;
  /// Unlabeled connected k-vertex graphs with at most k - 1 + k/ln k edges,
  /// present when k is within the exhaustive cap.
  std::optional<std::uint64_t> exact;
  LogQuantity bound;  // 100^k
};
SparseConnectedCount sparse_connected_count_and_bound(std::size_t k,
                                                      std::size_t exhaustive_cap = 8);

/// 2 exp(-t^2 / (2 (mu + t/3))), at most 2. Throws on negative input.
double chernoff_bound(double mu, double t);

struct SmallDenseProbability {
  bool precondition_holds = false;
  double precondition_lhs = 0;  // 3 ln((d+1) e^2) ln t
  double precondition_rhs = 0;  // ln n
  /// n^(-k / (3 ln k)) for 5 <= k <= t.
  std::map<std::size_t, double> per_k;
  double total = 0;
  double blanket = 0;  // 15 / n
};
/// Values are always computed; `precondition_holds` says whether the
/// statement they come from applies.
SmallDenseProbability small_dense_probability(double n, double d, std::size_t t);

/// beta(d) = 2 (e^2 d)^(e^2 d), with 0^0 = 1 so beta(0) = 2.
double dense_count_beta(double d);
double dense_count_beta_log2(double d);

struct ProbabilityBound {
  double value = 0;
  bool informative = true;  // false when the raw bound is >= 1
};
/// 200 sqrt(d / n), clamped to 1.
ProbabilityBound not_tiny_probability(double n, double d);

struct DiversityBound {
  LogQuantity value;  // (delta (n/k)^(delta/2))^k
  bool in_range = true;
  bool vacuous = false;  // log2 <= 0
};
DiversityBound induced_diversity_lower_bound(double n, double d, double k, double delta);

/// log2 of C(n,k)^2 k! p^((1 - 3 delta) mu) with mu = C(k,2) p.
double union_bound_term_log2(double n, double k, double p, double delta);

struct BinomialRatio {
  std::uint64_t k_prime = 0;
  double lhs_log2 = 0;  // log2 C(n,k) / C(n,k-k')
  double rhs_log2 = 0;  // log2 2 (2 delta (n/k)^(delta/2))^k
  bool holds = false;
};
/// Exact binomial ratio check. Throws std::invalid_argument when
/// k' = ceil(delta k) > k or k > n.
BinomialRatio binomial_ratio_check(std::uint64_t n, std::uint64_t k, double delta);

struct Representable {
  LogQuantity exact_form;  // 2^(u^2) C(C(u,n), k_n), u = n^s, k_n = n^(2s-1)
  double relaxed_log2 = 0;  // u^2 + k_n n log2 u
};
Representable representable_collections_log(std::uint64_t n, unsigned s);

/// d = 2s + 4.
double degree_for_s(unsigned s);

/// log2 of (X / k_n)^k_n with X = (1 - 200 sqrt(d/n)) n^-n (n/d)^(d(n-1)/2).
/// -inf when the leading factor is not positive or X < k_n.
LogQuantity available_collections_log(std::uint64_t n, unsigned s);
LogQuantity available_collections_log_d(std::uint64_t n, double d, unsigned s);

struct CurvePoint {
  std::uint64_t n = 0;
  double available = 0;
  double representable = 0;
  double relaxed = 0;
};

struct CrossoverReport {
  unsigned s = 0;
  double d = 0;
  std::uint64_t step = 0;
  std::uint64_t n_max = 0;
  std::vector<CurvePoint> curve;
  std::optional<std::uint64_t> crossover_n;
  /// Against the u^2 + k_n n log2 u relaxation.
  std::optional<std::uint64_t> relaxed_crossover_n;
  /// available > representable at crossover_n and not at crossover_n - 1.
  bool reverified = false;
  /// The representable side at crossover_n was evaluated exactly.
  bool exact_at_crossover = false;
  bool monotone = true;
};

/// Grid scan n = step, 2 step, ..., n_max, then bisection to the least
/// integer n with available > representable.
CrossoverReport crossover_n(unsigned s, std::uint64_t step = 1000,
                            std::uint64_t n_max = 10'000'000);

}  // namespace tinygraph
