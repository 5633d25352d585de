#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "tinygraph/graph.hpp"

namespace oracle {

using tinygraph::Graph;
using tinygraph::Vertex;

/// Groups graphs into isomorphism classes with pairwise are_isomorphic
/// checks (bucketed by a degree invariant). Returns a class id per graph.
class Classifier {
 public:
  std::size_t add(const Graph& g);
  std::size_t classes() const { return reps_.size(); }

 private:
  std::map<std::vector<std::uint64_t>, std::vector<std::size_t>> buckets_;
  std::vector<Graph> reps_;
};

/// All k-subsets of [0, n) in lexicographic order.
std::vector<std::vector<Vertex>> subsets(std::size_t n, std::size_t k);

/// Labeled graph on k vertices from the bits of `mask` over pairs (i<j)
/// in row-major order.
Graph from_mask(std::size_t k, std::uint64_t mask);

/// Per k in [1, k_max]: classes of induced subgraphs.
std::map<std::size_t, std::size_t> induced_classes(const Graph& g, std::size_t k_max,
                                                   bool connected_only = false);
/// Per k: classes of subgraphs (every vertex subset, every edge subset).
std::map<std::size_t, std::size_t> subgraph_classes(const Graph& g, std::size_t k_max,
                                                    bool connected_only = false);
/// Per k and t: classes of k-vertex t-edge subgraphs.
std::map<std::pair<std::size_t, std::size_t>, std::size_t> subgraph_classes_by_edges(
    const Graph& g, std::size_t k_max);

/// max over k-subsets of induced edges, by exhaustion.
std::size_t max_edges(const Graph& g, std::size_t k);

/// Brute-force permutation isomorphism (n <= 8).
bool isomorphic_by_permutation(const Graph& a, const Graph& b);

}  // namespace oracle
