#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tinygraph/graph.hpp"

namespace tinygraph {

/// embedding[v] is the host vertex receiving pattern vertex v.
using Embedding = std::vector<Vertex>;

/// Induced embedding of `pattern` into `host` (adjacency and non-adjacency
/// preserved), or nullopt. Backtracking with degree and neighbourhood pruning.
std::optional<Embedding> find_induced_embedding(const Graph& pattern,
                                                const Graph& host);
bool is_induced_embeddable(const Graph& pattern, const Graph& host);

/// Subgraph monomorphism: edges of `pattern` map to edges of `host`;
/// non-edges are unconstrained. Vertices in `excluded` (if given) are unused.
std::optional<Embedding> find_subgraph_embedding(
    const Graph& pattern, const Graph& host,
    const VertexSet* excluded = nullptr);

}  // namespace tinygraph
