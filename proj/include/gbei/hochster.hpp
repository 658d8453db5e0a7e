#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "gbei/monomial_ideal.hpp"

namespace gbei {

using FaceMask = std::uint32_t;

// Stanley-Reisner complex of a squarefree monomial ideal: a subset of the
// variables is a face iff its monomial avoids the ideal.
class SimplicialComplex {
public:
  // Throws std::invalid_argument when the ideal is not squarefree.
  explicit SimplicialComplex(const MonomialIdeal &ideal);
  // Complex given by its minimal non-faces.
  SimplicialComplex(int vertex_count, std::vector<FaceMask> minimal_nonfaces);

  int vertex_count() const { return n_; }
  const std::vector<FaceMask> &minimal_nonfaces() const { return nonfaces_; }
  bool is_face(FaceMask f) const;

  // All faces (empty face included), ascending by mask.
  const std::vector<FaceMask> &faces() const { return faces_; }
  int max_face_size() const;

private:
  void enumerate_faces();

  int n_;
  std::vector<FaceMask> nonfaces_;
  std::vector<FaceMask> faces_;
};

// Sparse matrix over GF(p), stored by columns: column c lists (row, value)
// pairs with strictly increasing rows.
struct SparseMatrix {
  int rows = 0;
  std::vector<std::vector<std::pair<int, std::uint32_t>>> columns;
};

// Faces of the restriction to sigma, grouped by size (index k holds faces
// with k vertices, k = 0..|sigma|), each group ascending.
std::vector<std::vector<FaceMask>> faces_by_size(const SimplicialComplex &complex, FaceMask sigma);

// Boundary map from faces with k+1 vertices to faces with k vertices
// (k = 0 is the augmentation to the empty face).
SparseMatrix boundary_matrix(const std::vector<FaceMask> &upper, const std::vector<FaceMask> &lower,
                             std::uint32_t prime);

SparseMatrix multiply(const SparseMatrix &a, const SparseMatrix &b, std::uint32_t prime);

int rank_mod_p(SparseMatrix m, std::uint32_t prime);

// Ranks of reduced homology H~_k of the restriction to sigma, for
// k = -1 .. |sigma| - 1 (index 0 holds k = -1).
std::vector<int> reduced_homology_ranks(const SimplicialComplex &complex, FaceMask sigma,
                                        std::uint32_t prime);

struct BettiTable {
  int nvars = 0;
  // (i, sigma) -> beta_{i,sigma}(S/I); zero entries omitted.
  std::map<std::pair<int, FaceMask>, int> entries;

  int projective_dimension() const;
  int depth() const { return nvars - projective_dimension(); }
  int regularity() const;
  // Graded totals beta_{i,j}.
  std::map<std::pair<int, int>, int> graded() const;
};

inline constexpr int kDefaultHochsterCap = 15;

// Multigraded Betti numbers of S/I via Hochster's formula. Only sigma that
// are unions of generator supports can contribute (otherwise the
// restriction is a cone); the rest are skipped. `threads` > 1 splits the
// sigma range into batches evaluated concurrently.
BettiTable betti_table(const MonomialIdeal &ideal, std::uint32_t prime,
                       int cap = kDefaultHochsterCap, int threads = 1);

}  // namespace gbei
