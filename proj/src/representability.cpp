#include "tinygraph/representability.hpp"

#include <algorithm>
#include <stdexcept>

#include "tinygraph/embedding.hpp"
#include "tinygraph/enumerate.hpp"
#include "tinygraph/parallel.hpp"

namespace tinygraph {

RepresentResult is_representable(const Graph& u, const std::vector<Graph>& family,
                                 unsigned threads) {
  std::vector<char> fits(family.size(), 0);
  parallel_for(family.size(), threads, [&](std::size_t i, unsigned) {
    fits[i] = is_induced_embeddable(family[i], u);
  });
  RepresentResult out;
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (!fits[i]) {
      out.representable = false;
      out.failing = i;
      break;
    }
  }
  return out;
}

unsigned label_width(std::size_t universal_order) {
  unsigned width = 0;
  while ((std::size_t{1} << width) < universal_order) ++width;
  return width;
}

std::string LabelAssignment::bits(Vertex v) const {
  std::string out(width, '0');
  for (unsigned b = 0; b < width; ++b)
    if ((labels.at(v) >> b) & 1U) out[width - 1 - b] = '1';
  return out;
}

LabelAssignment labels_from_universal(const Graph& u, const Graph& g) {
  const auto embedding = find_induced_embedding(g, u);
  if (!embedding) throw std::invalid_argument("graph is not an induced subgraph of u");
  LabelAssignment out;
  out.width = label_width(u.order());
  out.labels.assign(embedding->begin(), embedding->end());
  return out;
}

bool adjacency_decode(std::uint64_t a, std::uint64_t b, const Graph& u) {
  if (a >= u.order() || b >= u.order()) throw std::out_of_range("label outside universal graph");
  if (a == b) throw std::invalid_argument("labels must differ");
  return u.adjacent(a, b);
}

Graph universal_from_decoder(const std::vector<std::vector<bool>>& table) {
  const std::size_t size = table.size();
  Graph u(size);
  for (std::size_t i = 0; i < size; ++i) {
    if (table[i].size() != size) throw std::invalid_argument("decoder table is not square");
    if (table[i][i]) throw std::invalid_argument("decoder table has a true diagonal entry");
  }
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = i + 1; j < size; ++j) {
      if (table[i][j] != table[j][i]) throw std::invalid_argument("decoder table is not symmetric");
      if (table[i][j]) u.add_edge(i, j);
    }
  return u;
}

namespace {

using Mask = std::vector<std::uint64_t>;

bool has(const Mask& m, std::size_t i) { return (m[i >> 6] >> (i & 63)) & 1U; }

// Removes duplicate masks and masks contained in another one.
std::vector<Mask> maximal_masks(std::vector<Mask> masks) {
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  std::vector<Mask> out;
  for (std::size_t i = 0; i < masks.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < masks.size() && !dominated; ++j) {
      if (i == j) continue;
      bool subset = true;
      for (std::size_t w = 0; w < masks[i].size() && subset; ++w)
        subset = (masks[i][w] & ~masks[j][w]) == 0;
      dominated = subset;
    }
    if (!dominated) out.push_back(masks[i]);
  }
  return out;
}

}  // namespace

UnrepresentableSearch find_unrepresentable_family(const std::vector<Graph>& candidates,
                                                  std::size_t u_size,
                                                  std::size_t family_size,
                                                  std::uint64_t budget,
                                                  std::size_t random_universals,
                                                  Seed seed) {
  UnrepresentableSearch out;
  if (!candidates.empty()) {
    for (const auto& g : candidates)
      if (g.order() != candidates.front().order())
        throw std::invalid_argument("candidates must share a vertex count");
    if (u_size < candidates.front().order())
      throw std::invalid_argument("u_size below the candidate vertex count");
  }
  out.exhaustive = u_size <= kExhaustiveUniversalLimit;
  if (family_size == 0 || family_size > candidates.size()) {
    out.proof = out.exhaustive;
    return out;
  }

  std::vector<Graph> universals;
  if (out.exhaustive) {
    universals = unlabeled_graphs(u_size);
  } else {
    for (std::size_t i = 0; i < random_universals; ++i)
      universals.push_back(sample_gnp(u_size, 0.5, child_seed(seed, 0x5553, i)));
  }
  out.universals = universals.size();

  const std::size_t words = (candidates.size() + 63) / 64;
  std::vector<Mask> masks;
  for (const auto& u : universals) {
    Mask m(words, 0);
    for (std::size_t i = 0; i < candidates.size(); ++i)
      if (is_induced_embeddable(candidates[i], u)) m[i >> 6] |= std::uint64_t{1} << (i & 63);
    masks.push_back(std::move(m));
  }
  masks = maximal_masks(std::move(masks));

  // Grow a family in index order, keeping the masks that still cover it.
  std::vector<std::size_t> family;
  std::uint64_t nodes = 0;
  bool aborted = false;
  auto grow = [&](auto&& self, std::size_t start, const std::vector<const Mask*>& alive) -> bool {
    if (++nodes > budget) {
      aborted = true;
      return false;
    }
    if (alive.empty()) {
      // Already unrepresentable; pad with unused candidates.
      for (std::size_t i = 0; i < candidates.size() && family.size() < family_size; ++i)
        if (std::find(family.begin(), family.end(), i) == family.end()) family.push_back(i);
      std::sort(family.begin(), family.end());
      return true;
    }
    if (family.size() == family_size) return false;
    for (std::size_t i = start; i < candidates.size(); ++i) {
      if (candidates.size() - i < family_size - family.size()) break;
      std::vector<const Mask*> next;
      for (const Mask* m : alive)
        if (has(*m, i)) next.push_back(m);
      family.push_back(i);
      if (self(self, i + 1, next)) return true;
      family.pop_back();
      if (aborted) return false;
    }
    return false;
  };
  std::vector<const Mask*> all;
  for (const auto& m : masks) all.push_back(&m);
  if (grow(grow, 0, all)) out.family = family;
  out.proof = out.exhaustive && !aborted && !out.family;
  return out;
}

}  // namespace tinygraph
