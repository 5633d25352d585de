#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tinygraph/canon.hpp"

namespace tinygraph {

/// One canonical representative per isomorphism class of n-vertex graphs
/// with at most `max_edges` edges, grouped by edge count (index = edges).
/// Generated by single-edge augmentation of the previous layer with
/// certificate deduplication.
std::vector<std::vector<Certificate>> unlabeled_graphs_by_edges(
    std::size_t n, std::optional<std::size_t> max_edges = std::nullopt);

/// Flattened, sorted by (edges, certificate).
std::vector<Graph> unlabeled_graphs(
    std::size_t n, std::optional<std::size_t> max_edges = std::nullopt);

}  // namespace tinygraph
