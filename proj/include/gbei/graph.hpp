#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gbei/errors.hpp"

namespace gbei {

using Vertex = int;                 // 1-based
using VertexSet = std::vector<Vertex>;

class ConstructionError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

// Undirected simple graph on the vertex set [n].
class SimpleGraph {
public:
  explicit SimpleGraph(int n_vertices);
  SimpleGraph(int n_vertices, std::span<const std::pair<Vertex, Vertex>> edges);

  int order() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }

  // Throws std::invalid_argument on loops or out-of-range endpoints.
  // Adding an existing edge is a no-op.
  void add_edge(Vertex u, Vertex v);
  bool adjacent(Vertex u, Vertex v) const;

  // Edges as (u, v) with u < v, sorted lexicographically.
  const std::vector<std::pair<Vertex, Vertex>> &edges() const { return edges_; }

  // Neighbourhood of v as a bitmask over 0-based indices (v-1).
  std::uint64_t neighbour_mask(Vertex v) const { return adj_[v - 1]; }

  static SimpleGraph complete(int n);
  static SimpleGraph path(int n);

private:
  int n_;
  std::vector<std::uint64_t> adj_;
  std::vector<std::pair<Vertex, Vertex>> edges_;
};

// Image of g under v -> perm[v-1]; perm must be a permutation of [n].
SimpleGraph relabel(const SimpleGraph &g, std::span<const Vertex> perm);

// Instance (m; n_1 <= ... <= n_r) of a complete multipartite graph with
// blocks laid out as consecutive intervals of [n].
class PartiteSpec {
public:
  PartiteSpec(int m, std::vector<int> parts);

  int m() const { return m_; }
  int r() const { return static_cast<int>(parts_.size()); }
  int n() const { return n_; }
  const std::vector<int> &parts() const { return parts_; }
  int part(int k) const { return parts_[k - 1]; }  // n_k, 1-based
  int largest_part() const { return parts_.back(); }
  bool all_ones() const { return parts_.back() == 1; }

  // Least k with n_k >= 2; throws std::logic_error when all parts are 1.
  int s() const;
  int n_s() const { return part(s()); }

  // V_k as a sorted vertex list.
  VertexSet block(int k) const;
  // T_k = union of the other blocks. Only meaningful when n_k >= 2.
  VertexSet complement(int k) const;
  // Block index containing v.
  int block_of(Vertex v) const;

  friend bool operator==(const PartiteSpec &, const PartiteSpec &) = default;

private:
  int m_;
  std::vector<int> parts_;
  int n_;
};

SimpleGraph complete_multipartite(const PartiteSpec &spec);

// Induced subgraph on the complement of `removed` keeps the ambient labels;
// vertices in `removed` are simply ignored.
std::vector<VertexSet> connected_components(const SimpleGraph &g,
                                            std::uint64_t removed_mask = 0);
int component_count(const SimpleGraph &g, std::uint64_t removed_mask);

std::uint64_t to_mask(std::span<const Vertex> vs);
VertexSet from_mask(std::uint64_t mask);

struct CutSet {
  VertexSet vertices;
  int components;  // c(T): components of G minus T
  friend bool operator==(const CutSet &, const CutSet &) = default;
};

inline constexpr int kDefaultCutSetCap = 16;

// All T with the cut point property (including the empty set), ordered by
// size and then lexicographically.
std::vector<CutSet> cut_sets(const SimpleGraph &g, int cap = kDefaultCutSetCap);

struct PathWitness {
  VertexSet vertices;
  int target_length = 0;

  int length() const { return vertices.empty() ? 0 : static_cast<int>(vertices.size()) - 1; }
};

bool is_valid_path(const SimpleGraph &g, const PathWitness &p);

// 2n - max{n+1, 2 n_r}: height of the classical binomial edge ideal.
int konig_height(const PartiteSpec &spec);

PathWitness konig_path(const PartiteSpec &spec);

// The interleaved u-sequence as literally written for the traceable case
// (n_r <= n'). Returned unvalidated; it is not always a path.
VertexSet interleaved_u_sequence(const PartiteSpec &spec);

}  // namespace gbei
