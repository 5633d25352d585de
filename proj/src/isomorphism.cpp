// Isomorphism oracle used to validate canonization. Deliberately independent
// of canon.cpp: no partitions, no refinement, no certificates.
#include <algorithm>
#include <map>

#include "tinygraph/canon.hpp"

namespace tinygraph {

namespace {

using Invariant = std::vector<std::size_t>;  // degree, then sorted neighbour degrees

std::vector<Invariant> vertex_invariants(const Graph& g) {
  std::vector<Invariant> out(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    Invariant inv{g.degree(v)};
    for (Vertex u : g.neighbors(v)) inv.push_back(g.degree(u));
    std::sort(inv.begin() + 1, inv.end());
    out[v] = std::move(inv);
  }
  return out;
}

std::vector<std::size_t> component_sizes(const Graph& g) {
  std::vector<std::size_t> sizes;
  for (const auto& c : connected_components(g)) sizes.push_back(c.size());
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

// Visit order: each next vertex has the most already-placed neighbours.
std::vector<Vertex> constrained_order(const Graph& g) {
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

class Matcher {
 public:
  Matcher(const Graph& g, const Graph& h)
      : g_(g), h_(h), inv_g_(vertex_invariants(g)), inv_h_(vertex_invariants(h)),
        order_(constrained_order(g)), map_(g.order(), 0),
        used_(h.order(), false) {}

  bool run() { return extend(0); }

 private:
  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Vertex v = order_[depth];
    for (Vertex x = 0; x < h_.order(); ++x) {
      if (used_[x] || inv_h_[x] != inv_g_[v]) continue;
      bool ok = true;
      for (std::size_t i = 0; i < depth && ok; ++i) {
        const Vertex u = order_[i];
        ok = g_.adjacent(v, u) == h_.adjacent(x, map_[u]);
      }
      if (!ok) continue;
      map_[v] = x;
      used_[x] = true;
      if (extend(depth + 1)) return true;
      used_[x] = false;
    }
    return false;
  }

  const Graph& g_;
  const Graph& h_;
  std::vector<Invariant> inv_g_, inv_h_;
  std::vector<Vertex> order_;
  std::vector<Vertex> map_;
  std::vector<bool> used_;
};

}  // namespace

bool are_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  auto ig = vertex_invariants(g);
  auto ih = vertex_invariants(h);
  std::sort(ig.begin(), ig.end());
  std::sort(ih.begin(), ih.end());
  if (ig != ih) return false;
  if (component_sizes(g) != component_sizes(h)) return false;
  return Matcher(g, h).run();
}

}  // namespace tinygraph
