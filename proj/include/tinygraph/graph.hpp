#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tinygraph {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Dense operations (canonization, embedding) refuse graphs above this order
/// unless the caller passes a larger cap.
inline constexpr std::size_t kDenseVertexLimit = 64;

/// Fixed-capacity bit set over [0, capacity).
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t capacity);
  VertexSet(std::size_t capacity, std::initializer_list<Vertex> members);
  static VertexSet from_members(std::size_t capacity,
                                std::span<const Vertex> members);

  std::size_t capacity() const { return capacity_; }
  std::size_t size() const;
  bool empty() const { return size() == 0; }
  bool contains(Vertex v) const {
    return v < capacity_ && ((words_[v >> 6] >> (v & 63)) & 1U);
  }
  void insert(Vertex v);
  void erase(Vertex v);
  std::vector<Vertex> members() const;
  std::span<const std::uint64_t> words() const { return words_; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::size_t capacity_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Simple undirected graph on vertices 0..n-1 stored as bit-set rows.
/// Rows are symmetric with an all-zero diagonal.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);
  Graph(std::size_t n, std::initializer_list<Edge> edges);
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t order() const { return n_; }
  std::size_t edge_count() const { return edges_; }
  std::size_t words_per_row() const { return words_; }

  bool adjacent(Vertex u, Vertex v) const {
    return (bits_[u * words_ + (v >> 6)] >> (v & 63)) & 1U;
  }
  std::span<const std::uint64_t> row(Vertex v) const {
    return {bits_.data() + v * words_, words_};
  }
  std::size_t degree(Vertex v) const;
  std::vector<Vertex> neighbors(Vertex v) const;
  std::vector<Edge> edges() const;

  /// Throws std::out_of_range for bad indices and std::invalid_argument for
  /// loops.
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }

 private:
  void check_pair(Vertex u, Vertex v) const;

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::size_t edges_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// G[S] with vertices renumbered by ascending original index.
Graph induced_subgraph(const Graph& g, const VertexSet& s);
Graph induced_subgraph(const Graph& g, std::span<const Vertex> sorted_members);

/// Maximal connected sets, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);

bool is_connected(const Graph& g);

/// Disjoint union; vertices of `b` follow those of `a`.
Graph disjoint_union(const Graph& a, const Graph& b);

/// Relabels: vertex v of `g` becomes perm[v].
Graph permute(const Graph& g, std::span<const Vertex> perm);

Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph petersen_graph();

// graph6 (McKay's format). The optional ">>graph6<<" header is accepted on
// input and never written.
std::string write_graph6(const Graph& g);
Graph read_graph6(std::string_view text);
/// One graph per non-empty line.
std::vector<Graph> read_graph6_lines(std::string_view text);
std::vector<Graph> read_graph6_file(const std::string& path);
void write_graph6_file(const std::string& path, std::span<const Graph> graphs);

}  // namespace tinygraph
