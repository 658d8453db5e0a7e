#include "gbei/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

namespace gbei {

namespace {

constexpr int kMaxGraphOrder = 64;

}  // namespace

SimpleGraph::SimpleGraph(int n_vertices) : n_(n_vertices) {
  if (n_vertices < 1 || n_vertices > kMaxGraphOrder)
    throw std::invalid_argument("graph order must lie in [1, 64], got " +
                                std::to_string(n_vertices));
  adj_.assign(n_, 0);
}

SimpleGraph::SimpleGraph(int n_vertices,
                         std::span<const std::pair<Vertex, Vertex>> edges)
    : SimpleGraph(n_vertices) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void SimpleGraph::add_edge(Vertex u, Vertex v) {
  if (u < 1 || u > n_ || v < 1 || v > n_)
    throw std::invalid_argument("edge endpoint out of range: {" + std::to_string(u) +
                                "," + std::to_string(v) + "}");
  if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
  if (u > v) std::swap(u, v);
  if (adjacent(u, v)) return;
  adj_[u - 1] |= std::uint64_t{1} << (v - 1);
  adj_[v - 1] |= std::uint64_t{1} << (u - 1);
  auto e = std::make_pair(u, v);
  edges_.insert(std::lower_bound(edges_.begin(), edges_.end(), e), e);
}

bool SimpleGraph::adjacent(Vertex u, Vertex v) const {
  if (u < 1 || u > n_ || v < 1 || v > n_) return false;
  return (adj_[u - 1] >> (v - 1)) & 1U;
}

SimpleGraph SimpleGraph::complete(int n) {
  SimpleGraph g(n);
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) g.add_edge(u, v);
  return g;
}

SimpleGraph SimpleGraph::path(int n) {
  SimpleGraph g(n);
  for (int u = 1; u < n; ++u) g.add_edge(u, u + 1);
  return g;
}

PartiteSpec::PartiteSpec(int m, std::vector<int> parts) : m_(m), parts_(std::move(parts)) {
  if (m_ < 2) throw std::invalid_argument("m must be at least 2");
  if (parts_.size() < 2) throw std::invalid_argument("need at least two parts");
  for (int p : parts_)
    if (p < 1) throw std::invalid_argument("parts must be positive");
  if (!std::is_sorted(parts_.begin(), parts_.end()))
    throw std::invalid_argument("parts must be sorted ascending");
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
  if (n_ > kMaxGraphOrder) throw std::invalid_argument("too many vertices");
}

int PartiteSpec::s() const {
  for (int k = 1; k <= r(); ++k)
    if (part(k) >= 2) return k;
  throw std::logic_error("s is undefined when every part has size 1");
}

VertexSet PartiteSpec::block(int k) const {
  int first = 1;
  for (int j = 1; j < k; ++j) first += part(j);
  VertexSet out(part(k));
  std::iota(out.begin(), out.end(), first);
  return out;
}

VertexSet PartiteSpec::complement(int k) const {
  VertexSet out;
  for (int j = 1; j <= r(); ++j) {
    if (j == k) continue;
    auto b = block(j);
    out.insert(out.end(), b.begin(), b.end());
  }
  return out;
}

int PartiteSpec::block_of(Vertex v) const {
  int last = 0;
  for (int k = 1; k <= r(); ++k) {
    last += part(k);
    if (v <= last) return k;
  }
  throw std::out_of_range("vertex outside [n]");
}

SimpleGraph complete_multipartite(const PartiteSpec &spec) {
  SimpleGraph g(spec.n());
  for (Vertex u = 1; u <= spec.n(); ++u)
    for (Vertex v = u + 1; v <= spec.n(); ++v)
      if (spec.block_of(u) != spec.block_of(v)) g.add_edge(u, v);
  return g;
}

std::uint64_t to_mask(std::span<const Vertex> vs) {
  std::uint64_t mask = 0;
  for (Vertex v : vs) mask |= std::uint64_t{1} << (v - 1);
  return mask;
}

VertexSet from_mask(std::uint64_t mask) {
  VertexSet out;
  while (mask) {
    int bit = std::countr_zero(mask);
    out.push_back(bit + 1);
    mask &= mask - 1;
  }
  return out;
}

std::vector<VertexSet> connected_components(const SimpleGraph &g, std::uint64_t removed_mask) {
  const std::uint64_t all = g.order() == 64 ? ~std::uint64_t{0}
                                            : (std::uint64_t{1} << g.order()) - 1;
  std::uint64_t unseen = all & ~removed_mask;
  std::vector<VertexSet> out;
  while (unseen) {
    std::uint64_t comp = unseen & (~unseen + 1);
    std::uint64_t frontier = comp;
    while (frontier) {
      std::uint64_t next = 0;
      for (std::uint64_t f = frontier; f; f &= f - 1)
        next |= g.neighbour_mask(std::countr_zero(f) + 1);
      next &= unseen & ~comp;
      comp |= next;
      frontier = next;
    }
    unseen &= ~comp;
    out.push_back(from_mask(comp));
  }
  return out;
}

int component_count(const SimpleGraph &g, std::uint64_t removed_mask) {
  return static_cast<int>(connected_components(g, removed_mask).size());
}

std::vector<CutSet> cut_sets(const SimpleGraph &g, int cap) {
  if (g.order() > cap)
    throw SizeLimitError("cut set enumeration limited to " + std::to_string(cap) +
                         " vertices, graph has " + std::to_string(g.order()));
  const std::uint64_t total = std::uint64_t{1} << g.order();
  std::vector<int> comps(total);
  for (std::uint64_t t = 0; t < total; ++t) comps[t] = component_count(g, t);

  std::vector<std::uint64_t> found;
  for (std::uint64_t t = 0; t < total; ++t) {
    bool ok = true;
    for (std::uint64_t rest = t; rest && ok; rest &= rest - 1) {
      std::uint64_t v = rest & (~rest + 1);
      // v is a cut point of G minus (T \ {v})
      ok = comps[t] > comps[t & ~v];
    }
    if (ok) found.push_back(t);
  }

  std::vector<CutSet> out;
  out.reserve(found.size());
  for (auto t : found) out.push_back({from_mask(t), comps[t]});
  std::sort(out.begin(), out.end(), [](const CutSet &a, const CutSet &b) {
    if (a.vertices.size() != b.vertices.size()) return a.vertices.size() < b.vertices.size();
    return a.vertices < b.vertices;
  });
  return out;
}

bool is_valid_path(const SimpleGraph &g, const PathWitness &p) {
  if (p.vertices.empty()) return false;
  std::uint64_t seen = 0;
  for (Vertex v : p.vertices) {
    if (v < 1 || v > g.order()) return false;
    std::uint64_t bit = std::uint64_t{1} << (v - 1);
    if (seen & bit) return false;
    seen |= bit;
  }
  for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i)
    if (!g.adjacent(p.vertices[i], p.vertices[i + 1])) return false;
  return p.length() == p.target_length;
}

int konig_height(const PartiteSpec &spec) {
  const int n = spec.n();
  return 2 * n - std::max(n + 1, 2 * spec.largest_part());
}

namespace {

// Case n_r > n': n'+1, 1, n'+2, 2, ..., n'+n', n', 2n'+1.
VertexSet interleaved_long_part(const PartiteSpec &spec) {
  const int np = spec.n() - spec.largest_part();
  VertexSet out;
  for (int i = 1; i <= np; ++i) {
    out.push_back(np + i);
    out.push_back(i);
  }
  out.push_back(2 * np + 1);
  return out;
}

// Spanning path: start at the first vertex of V_r, then repeatedly take the
// smallest unused vertex of a part other than the current one, choosing the
// part with most unused vertices (ties: larger original part, then lower
// index).
VertexSet greedy_spanning(const PartiteSpec &spec) {
  const int r = spec.r();
  std::vector<VertexSet> remaining(r);
  for (int k = 1; k <= r; ++k) {
    auto b = spec.block(k);
    remaining[k - 1].assign(b.rbegin(), b.rend());  // pop_back yields ascending
  }
  VertexSet out;
  int current = r - 1;
  out.push_back(remaining[current].back());
  remaining[current].pop_back();
  for (int step = 1; step < spec.n(); ++step) {
    int best = -1;
    for (int k = 0; k < r; ++k) {
      if (k == current || remaining[k].empty()) continue;
      if (best < 0) {
        best = k;
        continue;
      }
      auto key = [&](int j) {
        return std::make_pair(remaining[j].size(), spec.part(j + 1));
      };
      if (key(k) > key(best)) best = k;
    }
    if (best < 0) throw ConstructionError("greedy path got stuck");
    current = best;
    out.push_back(remaining[current].back());
    remaining[current].pop_back();
  }
  return out;
}

}  // namespace

PathWitness konig_path(const PartiteSpec &spec) {
  const int np = spec.n() - spec.largest_part();
  PathWitness p;
  p.target_length = konig_height(spec);
  p.vertices = spec.largest_part() > np ? interleaved_long_part(spec) : greedy_spanning(spec);
  if (!is_valid_path(complete_multipartite(spec), p))
    throw ConstructionError("constructed path failed validation");
  return p;
}

VertexSet interleaved_u_sequence(const PartiteSpec &spec) {
  const int r = spec.r();
  const int nr = spec.largest_part();
  const int np = spec.n() - nr;
  // u_1 > u_2 > ...: by position within the block, then by block index.
  VertexSet u;
  for (int j = 1; j <= spec.part(r - 1); ++j)
    for (int i = 1; i < r; ++i)
      if (j <= spec.part(i)) u.push_back(spec.block(i)[j - 1]);
  const int delta = np - nr + 2;
  VertexSet out{np + 1};
  for (int i = 1; i <= delta && i <= static_cast<int>(u.size()); ++i) out.push_back(u[i - 1]);
  for (int k = 2; k <= nr; ++k) {
    out.push_back(np + k);
    int idx = delta + k - 1;
    if (k < nr && idx <= static_cast<int>(u.size())) out.push_back(u[idx - 1]);
  }
  return out;
}

SimpleGraph relabel(const SimpleGraph &g, std::span<const Vertex> perm) {
  const int n = g.order();
  if (static_cast<int>(perm.size()) != n) throw std::invalid_argument("relabeling has the wrong length");
  std::uint64_t seen = 0;
  for (Vertex v : perm) {
    if (v < 1 || v > n || (seen >> (v - 1) & 1)) throw std::invalid_argument("relabeling is not a permutation");
    seen |= std::uint64_t{1} << (v - 1);
  }
  SimpleGraph out(n);
  for (auto [u, v] : g.edges()) out.add_edge(perm[u - 1], perm[v - 1]);
  return out;
}

}  // namespace gbei
