#include "tinygraph/random.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace tinygraph {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t pair_count(std::size_t n) {
  return static_cast<std::uint64_t>(n) * (n > 0 ? n - 1 : 0) / 2;
}

}  // namespace

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::next() {
  state_ += kGolden;
  return mix64(state_);
}

double SplitMix64::uniform() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  // Lemire's multiply-and-reject.
  unsigned __int128 product = static_cast<unsigned __int128>(next()) * bound;
  auto low = static_cast<std::uint64_t>(product);
  if (low < bound) {
    const std::uint64_t threshold = -bound % bound;
    while (low < threshold) {
      product = static_cast<unsigned __int128>(next()) * bound;
      low = static_cast<std::uint64_t>(product);
    }
  }
  return static_cast<std::uint64_t>(product >> 64);
}

Seed child_seed(Seed parent, std::uint64_t stream, std::uint64_t index) {
  return Seed{mix64(mix64(parent.value ^ mix64(stream)) + index * kGolden)};
}

Graph sample_gnp(std::size_t n, double p, Seed seed) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::domain_error("edge probability must lie in [0, 1]");
  SplitMix64 rng(seed);
  Graph g(n);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (rng.uniform() < p) g.add_edge(i, j);
  return g;
}

Graph sample_gnm(std::size_t n, std::uint64_t m, Seed seed) {
  const std::uint64_t total = pair_count(n);
  if (m > total)
    throw std::domain_error("edge count " + std::to_string(m) +
                            " exceeds C(n,2) = " + std::to_string(total));
  SplitMix64 rng(seed);
  std::unordered_set<std::uint64_t> chosen;
  chosen.reserve(m * 2);
  for (std::uint64_t j = total - m; j < total; ++j) {
    const std::uint64_t r = rng.below(j + 1);
    if (!chosen.insert(r).second) chosen.insert(j);
  }
  std::vector<std::uint64_t> ranks(chosen.begin(), chosen.end());
  std::sort(ranks.begin(), ranks.end());

  Graph g(n);
  std::uint64_t row_start = 0;
  Vertex i = 0;
  for (std::uint64_t r : ranks) {
    while (r >= row_start + (n - 1 - i)) {
      row_start += n - 1 - i;
      ++i;
    }
    g.add_edge(i, i + 1 + (r - row_start));
  }
  return g;
}

std::uint64_t robust_ceil(double x) {
  const double slack = 1e-9 * std::max(1.0, std::fabs(x));
  return static_cast<std::uint64_t>(std::ceil(x - slack));
}

std::uint64_t edges_for_average_degree(std::size_t n, double d) {
  if (d < 0) throw std::domain_error("average degree must be non-negative");
  if (n == 0) return 0;
  return robust_ceil(d * static_cast<double>(n - 1) / 2.0);
}

double transfer_factor(std::size_t n, double p) {
  const double total = static_cast<double>(pair_count(n));
  if (!(p * total > 0.0) || !((1.0 - p) * total > 0.0))
    throw std::domain_error("transfer factor needs 0 < p*C(n,2) < C(n,2)");
  return 10.0 * std::sqrt(static_cast<double>(robust_ceil(p * total)));
}

}  // namespace tinygraph
