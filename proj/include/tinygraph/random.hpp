#pragma once

#include <cstdint>

#include "tinygraph/graph.hpp"

namespace tinygraph {

struct Seed {
  std::uint64_t value = 0;
  friend bool operator==(Seed, Seed) = default;
};

/// SplitMix64 (Steele, Lea, Flood 2014): a Weyl counter with increment
/// 0x9E3779B97F4A7C15 passed through a fixed 64-bit finalizer. The i-th
/// output depends only on (seed, i), so streams are reproducible everywhere.
class SplitMix64 {
 public:
  explicit SplitMix64(Seed seed) : state_(seed.value) {}

  std::uint64_t next();
  /// Uniform double in [0, 1) from the top 53 bits.
  double uniform();
  /// Uniform integer in [0, bound) without modulo bias. bound > 0.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

/// Seed for replicate `index` of stream `stream` under `parent`:
/// mix64(mix64(parent ^ mix64(stream)) + index * 0x9E3779B97F4A7C15).
Seed child_seed(Seed parent, std::uint64_t stream, std::uint64_t index);

/// G(n, p). One uniform draw per vertex pair in row-major order
/// (0,1), (0,2), ..., (0,n-1), (1,2), ...; the pair is an edge iff draw < p.
/// Throws std::domain_error unless 0 <= p <= 1.
Graph sample_gnp(std::size_t n, double p, Seed seed);

/// G(n, m). Floyd's distinct sampling of m pair ranks out of C(n,2); rank r
/// is the r-th pair in row-major order. Throws std::domain_error unless
/// 0 <= m <= C(n,2).
Graph sample_gnm(std::size_t n, std::uint64_t m, Seed seed);

/// ceil(d (n - 1) / 2), the edge count used for average degree d.
std::uint64_t edges_for_average_degree(std::size_t n, double d);

/// Factor 10 * sqrt(m) with m = ceil(p * C(n,2)) converting a G(n,p)
/// probability into a G(n,m) one. Throws std::domain_error when p*C(n,2)
/// or (1-p)*C(n,2) is not positive.
double transfer_factor(std::size_t n, double p);

/// ceil(x), ignoring floating-point excess below 1e-9 relative.
std::uint64_t robust_ceil(double x);

}  // namespace tinygraph
