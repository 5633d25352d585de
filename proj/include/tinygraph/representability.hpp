#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tinygraph/graph.hpp"
#include "tinygraph/random.hpp"

namespace tinygraph {

struct RepresentResult {
  bool representable = true;
  /// Index into the family of the first member that does not embed.
  std::optional<std::size_t> failing;
};

/// Every family member is an induced subgraph of u.
RepresentResult is_representable(const Graph& u, const std::vector<Graph>& family,
                                 unsigned threads = 1);

struct LabelAssignment {
  /// labels[v] is the index in u receiving vertex v of g.
  std::vector<std::uint64_t> labels;
  /// ceil(log2 |V(u)|).
  unsigned width = 0;

  /// Fixed-width binary string, most significant bit first.
  std::string bits(Vertex v) const;
};

unsigned label_width(std::size_t universal_order);

/// Labels of g read off an induced embedding into u. Throws
/// std::invalid_argument when g does not embed.
LabelAssignment labels_from_universal(const Graph& u, const Graph& g);

/// Adjacency of the vertices of u carrying labels a and b. Throws
/// std::out_of_range for bad labels and std::invalid_argument when a == b.
bool adjacency_decode(std::uint64_t a, std::uint64_t b, const Graph& u);

/// The graph on all labels of a decoder table: labels i and j are adjacent
/// iff table[i][j]. The table must be square, symmetric and false on the
/// diagonal.
Graph universal_from_decoder(const std::vector<std::vector<bool>>& table);

struct UnrepresentableSearch {
  /// Indices into the candidate list.
  std::optional<std::vector<std::size_t>> family;
  /// Every u_size-vertex graph was enumerated.
  bool exhaustive = false;
  /// Exhaustive and the search space was fully explored, so an empty result
  /// proves every family of that size is representable.
  bool proof = false;
  /// Non-isomorphic universal graphs tried.
  std::size_t universals = 0;
};

inline constexpr std::size_t kExhaustiveUniversalLimit = 7;

/// Looks for `family_size` candidates that no u_size-vertex graph contains
/// together. Up to kExhaustiveUniversalLimit vertices every universal graph is
/// tried and a returned family is certified. Above it, `random_universals`
/// graphs G(u_size, 1/2) are tried and a returned family only resists those.
UnrepresentableSearch find_unrepresentable_family(const std::vector<Graph>& candidates,
                                                  std::size_t u_size,
                                                  std::size_t family_size,
                                                  std::uint64_t budget = 10'000'000,
                                                  std::size_t random_universals = 200,
                                                  Seed seed = Seed{1});

}  // namespace tinygraph
