#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "tinygraph/canon.hpp"

namespace oracle {

namespace {

std::vector<std::uint64_t> invariant(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::uint64_t> deg(n);
  for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::vector<std::uint64_t> out{n, g.edge_count()};
  std::vector<std::vector<std::uint64_t>> profile(n);
  for (Vertex v = 0; v < n; ++v) {
    profile[v].push_back(deg[v]);
    std::vector<std::uint64_t> nd;
    for (Vertex u = 0; u < n; ++u)
      if (g.adjacent(u, v)) nd.push_back(deg[u]);
    std::sort(nd.begin(), nd.end());
    profile[v].insert(profile[v].end(), nd.begin(), nd.end());
  }
  std::sort(profile.begin(), profile.end());
  for (const auto& p : profile) {
    out.push_back(p.size());
    out.insert(out.end(), p.begin(), p.end());
  }
  return out;
}

bool connected(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex u = 0; u < n; ++u)
      if (!seen[u] && g.adjacent(u, v)) {
        seen[u] = 1;
        ++count;
        stack.push_back(u);
      }
  }
  return count == n;
}

Graph induced(const Graph& g, const std::vector<Vertex>& s) {
  Graph h(s.size());
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (g.adjacent(s[i], s[j])) h.add_edge(i, j);
  return h;
}

}  // namespace

std::size_t Classifier::add(const Graph& g) {
  auto& bucket = buckets_[invariant(g)];
  for (std::size_t id : bucket)
    if (tinygraph::are_isomorphic(reps_[id], g)) return id;
  bucket.push_back(reps_.size());
  reps_.push_back(g);
  return reps_.size() - 1;
}

std::vector<std::vector<Vertex>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<Vertex>> out;
  if (k > n) return out;
  std::vector<Vertex> cur(k);
  std::iota(cur.begin(), cur.end(), 0);
  for (;;) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

Graph from_mask(std::size_t k, std::uint64_t mask) {
  Graph g(k);
  std::size_t bit = 0;
  for (Vertex i = 0; i < k; ++i)
    for (Vertex j = i + 1; j < k; ++j, ++bit)
      if ((mask >> bit) & 1U) g.add_edge(i, j);
  return g;
}

std::map<std::size_t, std::size_t> induced_classes(const Graph& g, std::size_t k_max,
                                                   bool connected_only) {
  std::map<std::size_t, std::size_t> out;
  for (std::size_t k = 1; k <= k_max; ++k) {
    Classifier c;
    for (const auto& s : subsets(g.order(), k)) {
      const Graph h = induced(g, s);
      if (!connected_only || connected(h)) c.add(h);
    }
    out[k] = c.classes();
  }
  return out;
}

namespace {

// Distinct labeled subgraphs of G[S] (edge subsets of the induced edges).
template <class Fn>
void for_each_subgraph(const Graph& g, std::size_t k, Fn&& fn) {
  std::set<std::uint64_t> seen_masks;
  for (const auto& s : subsets(g.order(), k)) {
    std::vector<std::size_t> bits;
    std::size_t bit = 0;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j, ++bit)
        if (g.adjacent(s[i], s[j])) bits.push_back(bit);
    for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << bits.size()); ++sub) {
      std::uint64_t mask = 0;
      for (std::size_t b = 0; b < bits.size(); ++b)
        if ((sub >> b) & 1U) mask |= std::uint64_t{1} << bits[b];
      seen_masks.insert(mask);
    }
  }
  for (auto mask : seen_masks) fn(from_mask(k, mask));
}

}  // namespace

std::map<std::size_t, std::size_t> subgraph_classes(const Graph& g, std::size_t k_max,
                                                    bool connected_only) {
  std::map<std::size_t, std::size_t> out;
  for (std::size_t k = 1; k <= k_max; ++k) {
    Classifier c;
    for_each_subgraph(g, k, [&](const Graph& h) {
      if (!connected_only || connected(h)) c.add(h);
    });
    out[k] = c.classes();
  }
  return out;
}

std::map<std::pair<std::size_t, std::size_t>, std::size_t> subgraph_classes_by_edges(
    const Graph& g, std::size_t k_max) {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> out;
  for (std::size_t k = 1; k <= k_max; ++k) {
    std::map<std::size_t, Classifier> by_t;
    for_each_subgraph(g, k, [&](const Graph& h) { by_t[h.edge_count()].add(h); });
    for (auto& [t, c] : by_t) out[{k, t}] = c.classes();
  }
  return out;
}

std::size_t max_edges(const Graph& g, std::size_t k) {
  std::size_t best = 0;
  for (const auto& s : subsets(g.order(), k)) best = std::max(best, induced(g, s).edge_count());
  return best;
}

bool isomorphic_by_permutation(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  std::vector<Vertex> perm(a.order());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (Vertex i = 0; i < a.order() && ok; ++i)
      for (Vertex j = i + 1; j < a.order() && ok; ++j)
        ok = a.adjacent(i, j) == b.adjacent(perm[i], perm[j]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace oracle
