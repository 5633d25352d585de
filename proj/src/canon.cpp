#include "tinygraph/canon.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "tinygraph/error.hpp"

namespace tinygraph {

namespace {

constexpr int kNoJump = -1;

// Ordered partition of the positions 0..n-1 into cells. Only positions and
// cell boundaries drive refinement, so the result is labeling-invariant.
struct Partition {
  std::vector<int> order;       // position -> vertex
  std::vector<int> position;    // vertex -> position
  std::vector<int> cell_of;     // vertex -> start position of its cell
  std::vector<int> cell_size;   // start position -> size (valid at starts)

  explicit Partition(int n)
      : order(n), position(n), cell_of(n, 0), cell_size(n, 0) {
    std::iota(order.begin(), order.end(), 0);
    std::iota(position.begin(), position.end(), 0);
    if (n > 0) cell_size[0] = n;
  }

  bool discrete() const {
    for (std::size_t p = 0; p < order.size(); p += cell_size[p])
      if (cell_size[p] > 1) return false;
    return true;
  }
};

class Refiner {
 public:
  explicit Refiner(const Graph& g)
      : g_(g), n_(static_cast<int>(g.order())), words_(g.words_per_row()),
        mask_(words_), count_(n_) {}

  // Splits cells by neighbour counts into splitter cells until equitable.
  void refine(Partition& p, std::deque<int> queue) const {
    std::vector<char> queued(n_, 0);
    for (int s : queue) queued[s] = 1;
    while (!queue.empty()) {
      const int s = queue.front();
      queue.pop_front();
      queued[s] = 0;
      std::fill(mask_.begin(), mask_.end(), 0);
      for (int q = s; q < s + p.cell_size[s]; ++q) {
        const int v = p.order[q];
        mask_[v >> 6] |= std::uint64_t{1} << (v & 63);
      }
      for (int c = 0; c < n_;) {
        const int size = p.cell_size[c];
        if (size > 1) split(p, c, size, queue, queued);
        c += size;
      }
    }
  }

  void individualize(Partition& p, int v) const {
    const int c = p.cell_of[v];
    const int size = p.cell_size[c];
    const int from = p.position[v];
    const int u = p.order[c];
    std::swap(p.order[c], p.order[from]);
    p.position[v] = c;
    p.position[u] = from;
    p.cell_size[c] = 1;
    p.cell_size[c + 1] = size - 1;
    for (int q = c + 1; q < c + size; ++q) p.cell_of[p.order[q]] = c + 1;
    refine(p, std::deque<int>{c});
  }

 private:
  void split(Partition& p, int c, int size, std::deque<int>& queue,
             std::vector<char>& queued) const {
    bool uniform = true;
    for (int q = c; q < c + size; ++q) {
      const int v = p.order[q];
      auto r = g_.row(v);
      int k = 0;
      for (std::size_t w = 0; w < words_; ++w) k += std::popcount(r[w] & mask_[w]);
      count_[v] = k;
      if (k != count_[p.order[c]]) uniform = false;
    }
    if (uniform) return;
    std::stable_sort(p.order.begin() + c, p.order.begin() + c + size,
                     [&](int a, int b) { return count_[a] < count_[b]; });
    int start = c;
    for (int q = c; q < c + size; ++q) {
      const int v = p.order[q];
      p.position[v] = q;
      if (q > c && count_[v] != count_[p.order[q - 1]]) {
        p.cell_size[start] = q - start;
        start = q;
      }
      p.cell_of[v] = start;
    }
    p.cell_size[start] = c + size - start;
    for (int f = c; f < c + size; f += p.cell_size[f]) {
      if (!queued[f]) {
        queued[f] = 1;
        queue.push_back(f);
      }
    }
  }

  const Graph& g_;
  int n_;
  std::size_t words_;
  mutable std::vector<std::uint64_t> mask_;
  mutable std::vector<int> count_;
};

using Form = std::vector<std::uint64_t>;

// Search tree over individualization sequences of one connected graph.
class Search {
 public:
  explicit Search(const Graph& g)
      : g_(g), n_(static_cast<int>(g.order())), refiner_(g),
        form_words_((g.order() + 63) / 64) {}

  std::vector<int> run() {
    Partition root(n_);
    std::deque<int> all;
    for (std::size_t p = 0; p < root.order.size(); p += root.cell_size[p])
      all.push_back(static_cast<int>(p));
    refiner_.refine(root, std::move(all));
    explore(root, 0, true);
    return best_order_;
  }

 private:
  int explore(const Partition& p, int level, bool first_path) {
    if (p.discrete()) return leaf(p);

    // First smallest non-singleton cell.
    int target = -1;
    for (int c = 0; c < n_; c += p.cell_size[c]) {
      if (p.cell_size[c] > 1 &&
          (target < 0 || p.cell_size[c] < p.cell_size[target]))
        target = c;
    }
    std::vector<int> candidates(p.order.begin() + target,
                                p.order.begin() + target + p.cell_size[target]);
    std::sort(candidates.begin(), candidates.end());

    std::vector<int> tried;
    for (int w : candidates) {
      if (twin_of_any(w, tried)) continue;
      if (first_path && !tried.empty() && same_orbit_as_tried(w, tried, level))
        continue;
      tried.push_back(w);
      Partition child = p;
      refiner_.individualize(child, w);
      path_.push_back(w);
      const int jump = explore(child, level + 1, first_path && tried.size() == 1);
      path_.pop_back();
      if (jump != kNoJump && jump < level) return jump;
    }
    return kNoJump;
  }

  int leaf(const Partition& p) {
    Form form = make_form(p);
    if (!have_leaf_) {
      have_leaf_ = true;
      first_form_ = best_form_ = form;
      first_order_ = best_order_ = p.order;
      first_path_ = best_path_ = path_;
      return kNoJump;
    }
    if (form == first_form_) {
      add_automorphism(first_order_, p.order);
      return divergence(first_path_);
    }
    if (form == best_form_) {
      add_automorphism(best_order_, p.order);
      return divergence(best_path_);
    }
    if (form < best_form_) {
      best_form_ = std::move(form);
      best_order_ = p.order;
      best_path_ = path_;
    }
    return kNoJump;
  }

  Form make_form(const Partition& p) const {
    Form form(static_cast<std::size_t>(n_) * form_words_, 0);
    for (int q = 0; q < n_; ++q) {
      const int v = p.order[q];
      std::uint64_t* row = form.data() + static_cast<std::size_t>(q) * form_words_;
      for (Vertex u : g_.neighbors(static_cast<Vertex>(v))) {
        const int r = p.position[u];
        row[r >> 6] |= std::uint64_t{1} << (63 - (r & 63));
      }
    }
    return form;
  }

  int divergence(const std::vector<int>& other) const {
    std::size_t i = 0;
    while (i < path_.size() && i < other.size() && path_[i] == other[i]) ++i;
    return static_cast<int>(i);
  }

  void add_automorphism(const std::vector<int>& from, const std::vector<int>& to) {
    std::vector<int> gamma(n_);
    for (int q = 0; q < n_; ++q) gamma[from[q]] = to[q];
    generators_.push_back(std::move(gamma));
  }

  // Transposition (u w) is an automorphism fixing every other vertex.
  bool twins(int u, int w) const {
    auto ru = g_.row(u);
    auto rw = g_.row(w);
    for (std::size_t i = 0; i < ru.size(); ++i) {
      std::uint64_t a = ru[i];
      std::uint64_t b = rw[i];
      if (static_cast<std::size_t>(w >> 6) == i) a &= ~(std::uint64_t{1} << (w & 63));
      if (static_cast<std::size_t>(u >> 6) == i) b &= ~(std::uint64_t{1} << (u & 63));
      if (a != b) return false;
    }
    return true;
  }

  bool twin_of_any(int w, const std::vector<int>& tried) const {
    return std::any_of(tried.begin(), tried.end(),
                       [&](int u) { return twins(u, w); });
  }

  // Orbits of the group generated by known automorphisms that fix the
  // current individualized prefix pointwise.
  bool same_orbit_as_tried(int w, const std::vector<int>& tried, int level) {
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    bool any = false;
    for (const auto& gamma : generators_) {
      bool fixes = true;
      for (int i = 0; i < level && fixes; ++i)
        fixes = gamma[path_[i]] == path_[i];
      if (!fixes) continue;
      any = true;
      for (int v = 0; v < n_; ++v) parent[find(v)] = find(gamma[v]);
    }
    if (!any) return false;
    const int root = find(w);
    return std::any_of(tried.begin(), tried.end(),
                       [&](int u) { return find(u) == root; });
  }

  const Graph& g_;
  int n_;
  Refiner refiner_;
  std::size_t form_words_;

  std::vector<int> path_;
  bool have_leaf_ = false;
  Form first_form_, best_form_;
  std::vector<int> first_order_, best_order_;
  std::vector<int> first_path_, best_path_;
  std::vector<std::vector<int>> generators_;
};

// Canonical order (position -> vertex) of a connected graph.
std::vector<int> canonical_order_connected(const Graph& g) {
  if (g.order() <= 2) {
    std::vector<int> order(g.order());
    std::iota(order.begin(), order.end(), 0);
    return order;
  }
  return Search(g).run();
}

}  // namespace

std::size_t Certificate::order() const { return graph().order(); }

Graph Certificate::graph() const { return read_graph6(bytes); }

CanonicalForm canonical_form(const Graph& g, std::size_t max_vertices) {
  if (g.order() > max_vertices) {
    throw CapacityError("canonization of " + std::to_string(g.order()) +
                        "-vertex graph exceeds the dense limit of " +
                        std::to_string(max_vertices));
  }
  struct Piece {
    std::vector<Vertex> members;  // canonical order, original ids
    std::string code;             // graph6 of the canonical component
  };
  std::vector<Piece> pieces;
  for (const auto& comp : connected_components(g)) {
    const auto members = comp.members();
    Graph sub = induced_subgraph(g, members);
    const auto order = canonical_order_connected(sub);
    Piece piece;
    std::vector<Vertex> position(members.size());
    for (std::size_t q = 0; q < order.size(); ++q) {
      piece.members.push_back(members[order[q]]);
      position[order[q]] = q;
    }
    piece.code = write_graph6(permute(sub, position));
    pieces.push_back(std::move(piece));
  }
  std::stable_sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) {
    if (a.members.size() != b.members.size())
      return a.members.size() < b.members.size();
    return a.code < b.code;
  });

  CanonicalForm out;
  out.labeling.assign(g.order(), 0);
  std::size_t next = 0;
  for (const auto& piece : pieces)
    for (Vertex v : piece.members) out.labeling[v] = next++;
  out.graph = permute(g, out.labeling);
  return out;
}

Certificate canonical_certificate(const Graph& g, std::size_t max_vertices) {
  return Certificate{write_graph6(canonical_form(g, max_vertices).graph)};
}

}  // namespace tinygraph
