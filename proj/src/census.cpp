#include "tinygraph/census.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "tinygraph/embedding.hpp"
#include "tinygraph/error.hpp"
#include "tinygraph/parallel.hpp"

namespace tinygraph {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t add_sat(std::uint64_t a, std::uint64_t b) {
  return a > kSaturated - b ? kSaturated : a + b;
}

std::uint64_t mul_sat(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a > kSaturated / b ? kSaturated : a * b;
}

void merge_into(ClassMap& into, const ClassMap& from) {
  for (const auto& [cert, count] : from) {
    auto& slot = into[cert];
    slot.occurrences = add_sat(slot.occurrences, count.occurrences);
    slot.edges = count.edges;
  }
}

// Certificates of small labeled graphs memoized by their adjacency bits.
class CertificateCache {
 public:
  explicit CertificateCache(std::size_t max_vertices) : max_vertices_(max_vertices) {}

  const Certificate& get(const Graph& g) {
    const std::size_t k = g.order();
    if (k > 11) {
      scratch_ = canonical_certificate(g, max_vertices_);
      return scratch_;
    }
    std::uint64_t key = static_cast<std::uint64_t>(k) << 56;
    std::size_t bit = 0;
    for (Vertex i = 0; i < k; ++i)
      for (Vertex j = i + 1; j < k; ++j, ++bit)
        if (g.adjacent(i, j)) key |= std::uint64_t{1} << bit;
    auto it = memo_.find(key);
    if (it == memo_.end())
      it = memo_.emplace(key, canonical_certificate(g, max_vertices_)).first;
    return it->second;
  }

 private:
  std::size_t max_vertices_;
  std::unordered_map<std::uint64_t, Certificate> memo_;
  Certificate scratch_;
};

// Shared step counter; throws once the total passes the budget.
class StepBudget {
 public:
  StepBudget(std::uint64_t limit, std::size_t k) : limit_(limit), k_(k) {}
  void spend(std::uint64_t steps = 1) {
    if (used_.fetch_add(steps, std::memory_order_relaxed) + steps > limit_)
      throw BudgetExceeded("census enumeration budget of " +
                               std::to_string(limit_) + " steps exhausted",
                           k_);
  }

 private:
  std::uint64_t limit_;
  std::size_t k_;
  std::atomic<std::uint64_t> used_{0};
};

void check_k_max(const Graph& g, std::size_t k_max) {
  if (k_max > g.order())
    throw std::invalid_argument("k_max " + std::to_string(k_max) +
                                " exceeds the vertex count " +
                                std::to_string(g.order()));
}

ClassCount empty_row_entry(std::uint64_t occurrences) { return {occurrences, 0}; }

}  // namespace

std::string to_string(CensusMode mode) {
  switch (mode) {
    case CensusMode::induced: return "induced";
    case CensusMode::subgraph: return "subgraph";
    case CensusMode::connected_induced: return "connected-induced";
    case CensusMode::connected_subgraph: return "connected-subgraph";
  }
  return "?";
}

CensusMode census_mode_from_string(const std::string& text) {
  if (text == "induced") return CensusMode::induced;
  if (text == "subgraph") return CensusMode::subgraph;
  if (text == "connected-induced") return CensusMode::connected_induced;
  if (text == "connected-subgraph" || text == "connected")
    return CensusMode::connected_subgraph;
  throw std::invalid_argument("unknown census mode '" + text + "'");
}

std::size_t CensusTable::classes(std::size_t k) const {
  auto it = per_k.find(k);
  return it == per_k.end() ? 0 : it->second.size();
}

std::map<std::size_t, std::size_t> CensusTable::classes_by_edges(std::size_t k) const {
  std::map<std::size_t, std::size_t> out;
  auto it = per_k.find(k);
  if (it == per_k.end()) return out;
  for (const auto& [cert, count] : it->second) ++out[count.edges];
  return out;
}

std::uint64_t binomial_saturated(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
    if (result > kSaturated) return kSaturated;
  }
  return static_cast<std::uint64_t>(result);
}

// ---------------------------------------------------------------------------
// Induced census

CensusTable census_induced(const Graph& g, std::size_t k_max,
                           const CensusOptions& options) {
  check_k_max(g, k_max);
  const std::size_t n = g.order();
  std::uint64_t predicted = 0;
  for (std::size_t k = 0; k <= k_max; ++k) {
    predicted = add_sat(predicted, binomial_saturated(n, k));
    if (predicted > options.budget)
      throw BudgetExceeded("induced census needs more than " +
                               std::to_string(options.budget) + " subsets",
                           k);
  }

  CensusTable table;
  table.mode = CensusMode::induced;
  table.n = n;
  table.k_max = k_max;
  table.host = g;
  table.per_k[0][canonical_certificate(Graph(0))] = empty_row_entry(1);
  if (k_max == 0) return table;

  const unsigned threads = std::max(1U, options.threads);
  std::vector<CertificateCache> caches(threads, CertificateCache(options.max_vertices));
  std::vector<std::vector<ClassMap>> per_root(n, std::vector<ClassMap>(k_max + 1));

  parallel_for(n, threads, [&](std::size_t root, unsigned worker) {
    auto& rows = per_root[root];
    auto& cache = caches[worker];
    std::vector<Vertex> members{root};
    auto visit = [&](auto&& self) -> void {
      const Graph sub = induced_subgraph(g, members);
      auto& slot = rows[members.size()][cache.get(sub)];
      ++slot.occurrences;
      slot.edges = sub.edge_count();
      if (members.size() == k_max) return;
      for (Vertex v = members.back() + 1; v < n; ++v) {
        members.push_back(v);
        self(self);
        members.pop_back();
      }
    };
    visit(visit);
  });

  for (std::size_t root = 0; root < n; ++root)
    for (std::size_t k = 1; k <= k_max; ++k) merge_into(table.per_k[k], per_root[root][k]);
  for (std::size_t k = 1; k <= k_max; ++k) table.per_k[k];
  return table;
}

// ---------------------------------------------------------------------------
// Subgraph census via edge sets

namespace {

struct EdgeSetPass {
  ClassMap classes;  // classes of edge-induced graphs on exactly `vertices` vertices
};

// Classes of edge-induced subgraphs (no isolated vertices) spanning exactly
// `vertices` vertices; occurrences count the edge sets.
ClassMap edge_sets_spanning(const Graph& g, const std::vector<Edge>& edges,
                            std::size_t vertices, const CensusOptions& options) {
  const unsigned threads = std::max(1U, options.threads);
  StepBudget budget(options.budget, vertices);
  std::vector<CertificateCache> caches(threads, CertificateCache(options.max_vertices));
  std::vector<ClassMap> per_first(edges.size());

  parallel_for(edges.size(), threads, [&](std::size_t first, unsigned worker) {
    std::vector<std::size_t> touched(g.order(), 0);
    std::vector<std::size_t> chosen{first};
    std::size_t span = 0;
    auto touch = [&](const Edge& e, int delta) {
      for (Vertex v : {e.first, e.second}) {
        if (delta > 0) {
          if (touched[v]++ == 0) ++span;
        } else if (--touched[v] == 0) {
          --span;
        }
      }
    };
    auto record = [&] {
      std::vector<Vertex> members;
      for (std::size_t i : chosen) {
        members.push_back(edges[i].first);
        members.push_back(edges[i].second);
      }
      std::sort(members.begin(), members.end());
      members.erase(std::unique(members.begin(), members.end()), members.end());
      Graph sub(members.size());
      for (std::size_t i : chosen) {
        const auto a = std::lower_bound(members.begin(), members.end(), edges[i].first) - members.begin();
        const auto b = std::lower_bound(members.begin(), members.end(), edges[i].second) - members.begin();
        sub.add_edge(a, b);
      }
      auto& slot = per_first[first][caches[worker].get(sub)];
      ++slot.occurrences;
      slot.edges = sub.edge_count();
    };
    touch(edges[first], +1);
    auto dfs = [&](auto&& self) -> void {
      budget.spend();
      if (span == vertices) record();
      for (std::size_t i = chosen.back() + 1; i < edges.size(); ++i) {
        const Edge& e = edges[i];
        const std::size_t grow = (touched[e.first] == 0) + (touched[e.second] == 0);
        if (span + grow > vertices) continue;
        touch(e, +1);
        chosen.push_back(i);
        self(self);
        chosen.pop_back();
        touch(e, -1);
      }
    };
    if (span <= vertices) dfs(dfs);
  });

  ClassMap merged;
  for (const auto& part : per_first) merge_into(merged, part);
  return merged;
}

CensusTable subgraph_census_impl(const Graph& g, std::size_t k_max,
                                 const CensusOptions& options,
                                 std::size_t& complete_through, bool keep_partial) {
  check_k_max(g, k_max);
  const std::size_t n = g.order();
  CensusTable table;
  table.mode = CensusMode::subgraph;
  table.n = n;
  table.k_max = k_max;
  table.host = g;

  // Empty edge set: kK1 for every k.
  for (std::size_t k = 0; k <= k_max; ++k)
    table.per_k[k][canonical_certificate(Graph(k), std::max(k, options.max_vertices))] =
        empty_row_entry(binomial_saturated(n, k));
  complete_through = std::min<std::size_t>(k_max, 1);

  const auto edges = g.edges();
  for (std::size_t span = 2; span <= k_max; ++span) {
    ClassMap pass;
    try {
      pass = edge_sets_spanning(g, edges, span, options);
    } catch (const BudgetExceeded&) {
      if (!keep_partial) throw;
      table.k_max = span - 1;
      for (auto it = table.per_k.begin(); it != table.per_k.end();)
        it = it->first >= span ? table.per_k.erase(it) : std::next(it);
      return table;
    }
    for (const auto& [cert, count] : pass) {
      const Graph core = cert.graph();
      for (std::size_t k = span; k <= k_max; ++k) {
        const Graph padded = disjoint_union(core, Graph(k - span));
        auto& slot = table.per_k[k][canonical_certificate(padded, std::max(k, options.max_vertices))];
        slot.occurrences = add_sat(
            slot.occurrences, mul_sat(count.occurrences, binomial_saturated(n - span, k - span)));
        slot.edges = count.edges;
      }
    }
    complete_through = span;
  }
  return table;
}

}  // namespace

CensusTable census_subgraphs(const Graph& g, std::size_t k_max,
                             const CensusOptions& options) {
  std::size_t complete = 0;
  return subgraph_census_impl(g, k_max, options, complete, false);
}

CensusTable census_subgraphs_partial(const Graph& g, std::size_t k_max,
                                     const CensusOptions& options,
                                     std::size_t& complete_through) {
  return subgraph_census_impl(g, k_max, options, complete_through, true);
}

// ---------------------------------------------------------------------------
// Connected census

namespace {

// Connected spanning edge subsets of `h`, reported through `emit`.
template <class Emit>
void connected_spanning_subgraphs(const Graph& h, StepBudget& budget, Emit&& emit) {
  const auto edges = h.edges();
  const std::size_t k = h.order();
  std::vector<char> alive(edges.size(), 1);

  auto connected_without = [&](std::size_t skip) {
    std::vector<std::size_t> parent(k);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    std::size_t parts = k;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (!alive[i] || i == skip) continue;
      const auto a = find(edges[i].first);
      const auto b = find(edges[i].second);
      if (a != b) {
        parent[a] = b;
        --parts;
      }
    }
    return parts == 1;
  };

  auto dfs = [&](auto&& self, std::size_t i) -> void {
    budget.spend();
    if (i == edges.size()) {
      Graph sub(k);
      for (std::size_t e = 0; e < edges.size(); ++e)
        if (alive[e]) sub.add_edge(edges[e].first, edges[e].second);
      emit(sub);
      return;
    }
    self(self, i + 1);
    if (connected_without(i)) {
      alive[i] = 0;
      self(self, i + 1);
      alive[i] = 1;
    }
  };
  dfs(dfs, 0);
}

}  // namespace

CensusTable connected_census(const Graph& g, std::size_t k_max, CensusMode mode,
                             const CensusOptions& options, std::size_t k_min) {
  if (mode != CensusMode::connected_induced && mode != CensusMode::connected_subgraph)
    throw std::invalid_argument("connected_census needs a connected mode");
  check_k_max(g, k_max);
  const std::size_t n = g.order();
  k_min = std::max<std::size_t>(k_min, 1);
  CensusTable table;
  table.mode = mode;
  table.n = n;
  table.k_min = k_min;
  table.k_max = k_max;
  table.host = g;
  for (std::size_t k = k_min; k <= k_max; ++k) table.per_k[k];
  if (k_max < k_min) return table;

  const unsigned threads = std::max(1U, options.threads);
  const std::size_t words = g.words_per_row();
  StepBudget budget(options.budget, k_max);
  std::vector<CertificateCache> caches(threads, CertificateCache(options.max_vertices));
  std::vector<std::vector<ClassMap>> per_root(n, std::vector<ClassMap>(k_max + 1));

  parallel_for(n, threads, [&](std::size_t root, unsigned worker) {
    auto& rows = per_root[root];
    auto& cache = caches[worker];
    std::vector<Vertex> members{root};

    auto record = [&] {
      const std::size_t k = members.size();
      if (k < k_min) return;
      std::vector<Vertex> sorted = members;
      std::sort(sorted.begin(), sorted.end());
      const Graph sub = induced_subgraph(g, sorted);
      if (mode == CensusMode::connected_induced || k == 1) {
        auto& slot = rows[k][cache.get(sub)];
        ++slot.occurrences;
        slot.edges = sub.edge_count();
        return;
      }
      connected_spanning_subgraphs(sub, budget, [&](const Graph& piece) {
        auto& slot = rows[k][cache.get(piece)];
        ++slot.occurrences;
        slot.edges = piece.edge_count();
      });
    };

    using Bits = std::vector<std::uint64_t>;
    auto above_root = [&](Bits& bits) {
      for (std::size_t w = 0; w < words; ++w) {
        const std::size_t lo = w * 64;
        if (lo + 63 <= root) {
          bits[w] = 0;
        } else if (lo <= root) {
          const std::size_t shift = root - lo + 1;
          bits[w] &= shift >= 64 ? 0 : (~std::uint64_t{0} << shift);
        }
      }
    };

    Bits ext(g.row(root).begin(), g.row(root).end());
    above_root(ext);
    Bits closed(g.row(root).begin(), g.row(root).end());
    closed[root >> 6] |= std::uint64_t{1} << (root & 63);

    auto esu = [&](auto&& self, Bits extension, const Bits& nbhd) -> void {
      budget.spend();
      record();
      if (members.size() == k_max) return;
      for (;;) {
        std::size_t w = 0;
        while (w < words && extension[w] == 0) ++w;
        if (w == words) return;
        const Vertex v = w * 64 + std::countr_zero(extension[w]);
        extension[w] &= extension[w] - 1;
        Bits next_ext = extension;
        Bits next_nbhd = nbhd;
        auto row = g.row(v);
        Bits fresh(words);
        for (std::size_t i = 0; i < words; ++i) {
          fresh[i] = row[i] & ~nbhd[i];
          next_nbhd[i] |= row[i];
        }
        above_root(fresh);
        for (std::size_t i = 0; i < words; ++i) next_ext[i] |= fresh[i];
        members.push_back(v);
        self(self, std::move(next_ext), next_nbhd);
        members.pop_back();
      }
    };
    esu(esu, ext, closed);
  });

  for (std::size_t root = 0; root < n; ++root)
    for (std::size_t k = k_min; k <= k_max; ++k) merge_into(table.per_k[k], per_root[root][k]);
  return table;
}

// ---------------------------------------------------------------------------
// Composition of connected classes

namespace {

// Bin-packing of piece sizes into host component capacities (necessary).
bool capacities_fit(std::vector<std::size_t> pieces, std::vector<std::size_t> bins) {
  std::sort(pieces.rbegin(), pieces.rend());
  auto place = [&](auto&& self, std::size_t i) -> bool {
    if (i == pieces.size()) return true;
    for (std::size_t b = 0; b < bins.size(); ++b) {
      if (bins[b] < pieces[i]) continue;
      // Skip bins with the same remaining capacity as an earlier one.
      bool duplicate = false;
      for (std::size_t e = 0; e < b && !duplicate; ++e) duplicate = bins[e] == bins[b];
      if (duplicate) continue;
      bins[b] -= pieces[i];
      if (self(self, i + 1)) return true;
      bins[b] += pieces[i];
    }
    return false;
  };
  return place(place, 0);
}

bool packs_into(const std::vector<const Graph*>& pieces, const Graph& host,
                const std::vector<std::size_t>& host_components) {
  std::vector<std::size_t> sizes;
  for (const Graph* p : pieces) sizes.push_back(p->order());
  if (!capacities_fit(sizes, host_components)) return false;

  // Greedy: largest piece first, each avoiding vertices already used.
  std::vector<const Graph*> ordered = pieces;
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const Graph* a, const Graph* b) { return a->order() > b->order(); });
  VertexSet used(host.order());
  bool greedy = true;
  for (const Graph* p : ordered) {
    auto emb = find_subgraph_embedding(*p, host, &used);
    if (!emb) {
      greedy = false;
      break;
    }
    for (Vertex x : *emb) used.insert(x);
  }
  if (greedy) return true;

  // Exact: the disjoint union must be a subgraph of the host.
  Graph whole(0);
  for (const Graph* p : ordered) whole = disjoint_union(whole, *p);
  return find_subgraph_embedding(whole, host).has_value();
}

}  // namespace

std::uint64_t compose_disconnected(const CensusTable& connected, std::size_t k) {
  if (connected.mode != CensusMode::connected_subgraph)
    throw std::invalid_argument("compose_disconnected needs a connected-subgraph census");
  if (k == 0) return 1;
  if (connected.k_min > 1 || connected.k_max < k)
    throw std::invalid_argument("connected census does not cover sizes 1.." +
                                std::to_string(k));

  std::vector<Graph> classes;
  for (std::size_t size = 1; size <= k; ++size) {
    auto it = connected.per_k.find(size);
    if (it == connected.per_k.end()) continue;
    for (const auto& entry : it->second) classes.push_back(entry.first.graph());
  }
  std::vector<std::size_t> host_components;
  for (const auto& c : connected_components(connected.host)) host_components.push_back(c.size());

  std::uint64_t count = 0;
  std::vector<const Graph*> chosen;
  auto choose = [&](auto&& self, std::size_t start, std::size_t remaining) -> void {
    if (remaining == 0) {
      if (packs_into(chosen, connected.host, host_components)) ++count;
      return;
    }
    for (std::size_t i = start; i < classes.size(); ++i) {
      if (classes[i].order() > remaining) continue;
      chosen.push_back(&classes[i]);
      self(self, i, remaining - classes[i].order());
      chosen.pop_back();
    }
  };
  choose(choose, 0, k);
  return count;
}

// ---------------------------------------------------------------------------

DiversitySample sampled_induced_diversity(const Graph& g, std::size_t k,
                                          std::size_t samples, Seed seed,
                                          std::size_t max_vertices) {
  const std::size_t n = g.order();
  if (k > n) throw std::invalid_argument("k exceeds the vertex count");
  if (samples == 0) throw std::invalid_argument("need at least one sample");
  SplitMix64 rng(seed);
  std::set<Certificate> seen;
  std::vector<Vertex> members;
  for (std::size_t s = 0; s < samples; ++s) {
    // Floyd: a uniform k-subset of [0, n).
    members.clear();
    for (std::size_t j = n - k; j < n; ++j) {
      const auto r = static_cast<Vertex>(rng.below(j + 1));
      if (std::find(members.begin(), members.end(), r) == members.end())
        members.push_back(r);
      else
        members.push_back(j);
    }
    std::sort(members.begin(), members.end());
    seen.insert(canonical_certificate(induced_subgraph(g, members), max_vertices));
  }
  return {samples, seen.size(), seen.size()};
}

}  // namespace tinygraph
