#include "tinygraph/enumerate.hpp"

#include <set>

namespace tinygraph {

std::vector<std::vector<Certificate>> unlabeled_graphs_by_edges(
    std::size_t n, std::optional<std::size_t> max_edges) {
  const std::size_t pairs = n * (n > 0 ? n - 1 : 0) / 2;
  const std::size_t top = max_edges ? std::min(*max_edges, pairs) : pairs;
  std::vector<std::vector<Certificate>> layers;
  layers.push_back({canonical_certificate(Graph(n), n)});
  for (std::size_t e = 1; e <= top; ++e) {
    std::set<Certificate> next;
    for (const auto& cert : layers.back()) {
      const Graph base = cert.graph();
      for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) {
          if (base.adjacent(i, j)) continue;
          Graph grown = base;
          grown.add_edge(i, j);
          next.insert(canonical_certificate(grown, n));
        }
      }
    }
    layers.emplace_back(next.begin(), next.end());
  }
  return layers;
}

std::vector<Graph> unlabeled_graphs(std::size_t n,
                                    std::optional<std::size_t> max_edges) {
  std::vector<Graph> out;
  for (const auto& layer : unlabeled_graphs_by_edges(n, max_edges))
    for (const auto& cert : layer) out.push_back(cert.graph());
  return out;
}

}  // namespace tinygraph
