#pragma once

#include <compare>
#include <string>
#include <vector>

#include "tinygraph/graph.hpp"

namespace tinygraph {

/// Canonical byte string of an isomorphism class: the graph6 encoding of the
/// graph relabeled into canonical order. Two graphs have equal certificates
/// exactly when they are isomorphic.
struct Certificate {
  std::string bytes;

  std::size_t order() const;
  /// The canonical representative of the class.
  Graph graph() const;

  friend auto operator<=>(const Certificate&, const Certificate&) = default;
  friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct CanonicalForm {
  Graph graph;
  /// labeling[v] is the canonical position of original vertex v.
  std::vector<Vertex> labeling;
};

/// Individualization-refinement canonization. Connected components are
/// canonized separately and concatenated in certificate order; within a
/// component the lexicographically smallest adjacency matrix over all
/// explored leaves wins. Throws CapacityError when g.order() > max_vertices.
CanonicalForm canonical_form(const Graph& g,
                             std::size_t max_vertices = kDenseVertexLimit);
Certificate canonical_certificate(const Graph& g,
                                  std::size_t max_vertices = kDenseVertexLimit);

/// Independent isomorphism oracle: invariant screening plus degree-refined
/// backtracking. Shares no code with the canonizer.
bool are_isomorphic(const Graph& g, const Graph& h);

}  // namespace tinygraph
