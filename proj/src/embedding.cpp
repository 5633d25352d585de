#include "tinygraph/embedding.hpp"

#include <algorithm>

namespace tinygraph {

namespace {

std::vector<Vertex> pattern_order(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<Vertex> order;
  std::vector<bool> placed(n, false);
  std::vector<std::size_t> placed_nbrs(n, 0);
  for (std::size_t step = 0; step < n; ++step) {
    Vertex best = n;
    for (Vertex v = 0; v < n; ++v) {
      if (placed[v]) continue;
      if (best == n || placed_nbrs[v] > placed_nbrs[best] ||
          (placed_nbrs[v] == placed_nbrs[best] && g.degree(v) > g.degree(best)))
        best = v;
    }
    placed[best] = true;
    order.push_back(best);
    for (Vertex u : g.neighbors(best)) ++placed_nbrs[u];
  }
  return order;
}

class Embedder {
 public:
  Embedder(const Graph& pattern, const Graph& host, bool induced,
           const VertexSet* excluded)
      : p_(pattern), h_(host), induced_(induced), order_(pattern_order(pattern)),
        map_(pattern.order(), 0), used_(host.order(), false),
        host_degree_(host.order()) {
    for (Vertex x = 0; x < host.order(); ++x) {
      host_degree_[x] = host.degree(x);
      if (excluded && excluded->contains(x)) used_[x] = true;
    }
    // Anchor: an already-placed neighbour whose host image bounds candidates.
    anchor_.assign(order_.size(), pattern.order());
    for (std::size_t i = 0; i < order_.size(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (pattern.adjacent(order_[i], order_[j])) {
          anchor_[i] = order_[j];
          break;
        }
  }

  std::optional<Embedding> run() {
    if (p_.order() > h_.order()) return std::nullopt;
    if (extend(0)) return map_;
    return std::nullopt;
  }

 private:
  bool feasible(std::size_t depth, Vertex v, Vertex x) const {
    if (used_[x] || host_degree_[x] < p_.degree(v)) return false;
    for (std::size_t i = 0; i < depth; ++i) {
      const Vertex u = order_[i];
      const bool pe = p_.adjacent(v, u);
      const bool he = h_.adjacent(x, map_[u]);
      if (pe && !he) return false;
      if (induced_ && !pe && he) return false;
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Vertex v = order_[depth];
    auto attempt = [&](Vertex x) {
      if (!feasible(depth, v, x)) return false;
      map_[v] = x;
      used_[x] = true;
      if (extend(depth + 1)) return true;
      used_[x] = false;
      return false;
    };
    if (anchor_[depth] < p_.order()) {
      for (Vertex x : h_.neighbors(map_[anchor_[depth]]))
        if (attempt(x)) return true;
    } else {
      for (Vertex x = 0; x < h_.order(); ++x)
        if (attempt(x)) return true;
    }
    return false;
  }

  const Graph& p_;
  const Graph& h_;
  bool induced_;
  std::vector<Vertex> order_;
  std::vector<Vertex> anchor_;
  Embedding map_;
  std::vector<bool> used_;
  std::vector<std::size_t> host_degree_;
};

}  // namespace

std::optional<Embedding> find_induced_embedding(const Graph& pattern,
                                                const Graph& host) {
  return Embedder(pattern, host, true, nullptr).run();
}

bool is_induced_embeddable(const Graph& pattern, const Graph& host) {
  return find_induced_embedding(pattern, host).has_value();
}

std::optional<Embedding> find_subgraph_embedding(const Graph& pattern,
                                                 const Graph& host,
                                                 const VertexSet* excluded) {
  return Embedder(pattern, host, false, excluded).run();
}

}  // namespace tinygraph
