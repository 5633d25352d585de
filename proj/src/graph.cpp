#include "tinygraph/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace tinygraph {

namespace {

std::size_t word_count(std::size_t n) { return (n + 63) / 64; }

}  // namespace

VertexSet::VertexSet(std::size_t capacity)
    : capacity_(capacity), words_(word_count(capacity), 0) {}

VertexSet::VertexSet(std::size_t capacity, std::initializer_list<Vertex> members)
    : VertexSet(capacity) {
  for (Vertex v : members) insert(v);
}

VertexSet VertexSet::from_members(std::size_t capacity,
                                  std::span<const Vertex> members) {
  VertexSet s(capacity);
  for (Vertex v : members) s.insert(v);
  return s;
}

std::size_t VertexSet::size() const {
  std::size_t total = 0;
  for (auto w : words_) total += std::popcount(w);
  return total;
}

void VertexSet::insert(Vertex v) {
  if (v >= capacity_) throw std::out_of_range("vertex index out of range");
  words_[v >> 6] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::erase(Vertex v) {
  if (v >= capacity_) throw std::out_of_range("vertex index out of range");
  words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits) {
      out.push_back(w * 64 + std::countr_zero(bits));
      bits &= bits - 1;
    }
  }
  return out;
}

Graph::Graph(std::size_t n)
    : n_(n), words_(word_count(n)), bits_(n * word_count(n), 0) {}

Graph::Graph(std::size_t n, std::initializer_list<Edge> edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

std::size_t Graph::degree(Vertex v) const {
  std::size_t d = 0;
  for (auto w : row(v)) d += std::popcount(w);
  return d;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  auto r = row(v);
  for (std::size_t w = 0; w < words_; ++w) {
    std::uint64_t bits = r[w];
    while (bits) {
      out.push_back(w * 64 + std::countr_zero(bits));
      bits &= bits - 1;
    }
  }
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edges_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

void Graph::check_pair(Vertex u, Vertex v) const {
  if (u >= n_ || v >= n_) throw std::out_of_range("vertex index out of range");
  if (u == v) throw std::invalid_argument("loops are not allowed");
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_pair(u, v);
  if (adjacent(u, v)) return;
  bits_[u * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  bits_[v * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
  ++edges_;
}

void Graph::remove_edge(Vertex u, Vertex v) {
  check_pair(u, v);
  if (!adjacent(u, v)) return;
  bits_[u * words_ + (v >> 6)] &= ~(std::uint64_t{1} << (v & 63));
  bits_[v * words_ + (u >> 6)] &= ~(std::uint64_t{1} << (u & 63));
  --edges_;
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  if (s.capacity() > g.order()) {
    for (Vertex v : s.members())
      if (v >= g.order()) throw std::out_of_range("vertex index out of range");
  }
  auto members = s.members();
  return induced_subgraph(g, members);
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> sorted_members) {
  const std::size_t k = sorted_members.size();
  for (Vertex v : sorted_members)
    if (v >= g.order()) throw std::out_of_range("vertex index out of range");
  Graph h(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (g.adjacent(sorted_members[i], sorted_members[j])) h.add_edge(i, j);
  return h;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<bool> seen(n, false);
  std::vector<VertexSet> out;
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    VertexSet comp(n);
    seen[root] = true;
    stack.push_back(root);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.insert(v);
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) {
  return g.order() <= 1 || connected_components(g).size() == 1;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph out(a.order() + b.order());
  for (auto [u, v] : a.edges()) out.add_edge(u, v);
  for (auto [u, v] : b.edges()) out.add_edge(a.order() + u, a.order() + v);
  return out;
}

Graph permute(const Graph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.order())
    throw std::invalid_argument("permutation size mismatch");
  Graph out(g.order());
  for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
  return out;
}

Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
  Graph g(n);
  for (Vertex v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph path_graph(std::size_t n) {
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph petersen_graph() {
  Graph g(10);
  for (Vertex i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

}  // namespace tinygraph
