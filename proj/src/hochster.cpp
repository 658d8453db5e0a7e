#include "gbei/hochster.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <thread>
#include <unordered_map>

#include "gbei/errors.hpp"
#include "gbei/polynomial.hpp"

namespace gbei {

SimplicialComplex::SimplicialComplex(const MonomialIdeal &ideal) : n_(ideal.nvars()) {
  if (!is_squarefree(ideal))
    throw std::invalid_argument("Stanley-Reisner complex needs a squarefree ideal");
  for (const auto &g : ideal.generators()) nonfaces_.push_back(support_mask(g));
  enumerate_faces();
}

SimplicialComplex::SimplicialComplex(int vertex_count, std::vector<FaceMask> minimal_nonfaces)
    : n_(vertex_count), nonfaces_(std::move(minimal_nonfaces)) {
  if (n_ < 0 || n_ > 31) throw std::invalid_argument("vertex count out of range");
  enumerate_faces();
}

bool SimplicialComplex::is_face(FaceMask f) const {
  return std::none_of(nonfaces_.begin(), nonfaces_.end(),
                      [f](FaceMask g) { return (g & ~f) == 0; });
}

void SimplicialComplex::enumerate_faces() {
  faces_.clear();
  // Extend faces by vertices above their largest element.
  std::vector<std::pair<FaceMask, int>> stack{{0, 0}};
  while (!stack.empty()) {
    auto [f, next] = stack.back();
    stack.pop_back();
    if (!is_face(f)) continue;
    faces_.push_back(f);
    for (int v = next; v < n_; ++v) stack.emplace_back(f | (FaceMask{1} << v), v + 1);
  }
  std::sort(faces_.begin(), faces_.end());
}

int SimplicialComplex::max_face_size() const {
  int best = 0;
  for (auto f : faces_) best = std::max(best, std::popcount(f));
  return best;
}

std::vector<std::vector<FaceMask>> faces_by_size(const SimplicialComplex &complex, FaceMask sigma) {
  std::vector<std::vector<FaceMask>> out(std::popcount(sigma) + 1);
  for (auto f : complex.faces())
    if ((f & ~sigma) == 0) out[std::popcount(f)].push_back(f);
  return out;
}

SparseMatrix boundary_matrix(const std::vector<FaceMask> &upper, const std::vector<FaceMask> &lower,
                             std::uint32_t prime) {
  SparseMatrix m;
  m.rows = static_cast<int>(lower.size());
  m.columns.resize(upper.size());
  for (std::size_t c = 0; c < upper.size(); ++c) {
    FaceMask f = upper[c];
    int position = 0;
    for (FaceMask rest = f; rest; rest &= rest - 1, ++position) {
      FaceMask facet = f & ~(rest & (~rest + 1));
      auto it = std::lower_bound(lower.begin(), lower.end(), facet);
      if (it == lower.end() || *it != facet) continue;  // not in this complex
      int row = static_cast<int>(it - lower.begin());
      m.columns[c].emplace_back(row, position % 2 ? prime - 1 : 1);
    }
    std::sort(m.columns[c].begin(), m.columns[c].end());
  }
  return m;
}

SparseMatrix multiply(const SparseMatrix &a, const SparseMatrix &b, std::uint32_t prime) {
  PrimeField fld{prime};
  SparseMatrix out;
  out.rows = a.rows;
  out.columns.resize(b.columns.size());
  for (std::size_t c = 0; c < b.columns.size(); ++c) {
    std::map<int, std::uint32_t> acc;
    for (auto [k, bv] : b.columns[c])
      for (auto [r, av] : a.columns[k]) acc[r] = fld.add(acc[r], fld.mul(av, bv));
    for (auto [r, v] : acc)
      if (v) out.columns[c].emplace_back(r, v);
  }
  return out;
}

int rank_mod_p(SparseMatrix m, std::uint32_t prime) {
  PrimeField fld{prime};
  std::unordered_map<int, int> pivot_of_row;  // lowest row -> reduced column
  int rank = 0;
  for (std::size_t c = 0; c < m.columns.size(); ++c) {
    auto &col = m.columns[c];
    while (!col.empty()) {
      auto it = pivot_of_row.find(col.back().first);
      if (it == pivot_of_row.end()) break;
      const auto &piv = m.columns[it->second];
      std::uint32_t factor = fld.mul(col.back().second, fld.inv(piv.back().second));
      std::vector<std::pair<int, std::uint32_t>> merged;
      merged.reserve(col.size() + piv.size());
      auto a = col.begin();
      auto b = piv.begin();
      while (a != col.end() || b != piv.end()) {
        if (b == piv.end() || (a != col.end() && a->first < b->first)) {
          merged.push_back(*a++);
        } else if (a == col.end() || b->first < a->first) {
          merged.emplace_back(b->first, fld.neg(fld.mul(factor, b->second)));
          ++b;
        } else {
          auto v = fld.sub(a->second, fld.mul(factor, b->second));
          if (v) merged.emplace_back(a->first, v);
          ++a;
          ++b;
        }
      }
      col = std::move(merged);
    }
    if (!col.empty()) {
      pivot_of_row.emplace(col.back().first, static_cast<int>(c));
      ++rank;
    }
  }
  return rank;
}

std::vector<int> reduced_homology_ranks(const SimplicialComplex &complex, FaceMask sigma,
                                        std::uint32_t prime) {
  auto groups = faces_by_size(complex, sigma);
  const int top = static_cast<int>(groups.size()) - 1;  // |sigma|
  // incoming[k]: rank of the map from size-(k+1) faces to size-k faces
  std::vector<int> rank_down(top + 1, 0);
  for (int k = 0; k < top; ++k) {
    if (groups[k + 1].empty() || groups[k].empty()) continue;
    rank_down[k] = rank_mod_p(boundary_matrix(groups[k + 1], groups[k], prime), prime);
  }
  std::vector<int> out(top + 1, 0);  // size s <-> H~_{s-1}
  for (int s = 0; s <= top; ++s) {
    int f = static_cast<int>(groups[s].size());
    int outgoing = s > 0 ? rank_down[s - 1] : 0;
    int incoming = s < top ? rank_down[s] : 0;
    out[s] = f - outgoing - incoming;
  }
  return out;
}

int BettiTable::projective_dimension() const {
  int pd = 0;
  for (const auto &[key, rank] : entries)
    if (rank > 0) pd = std::max(pd, key.first);
  return pd;
}

int BettiTable::regularity() const {
  int reg = 0;
  for (const auto &[key, rank] : entries)
    if (rank > 0) reg = std::max(reg, std::popcount(key.second) - key.first);
  return reg;
}

std::map<std::pair<int, int>, int> BettiTable::graded() const {
  std::map<std::pair<int, int>, int> out;
  for (const auto &[key, rank] : entries) out[{key.first, std::popcount(key.second)}] += rank;
  return out;
}

namespace {

void hochster_range(const SimplicialComplex &complex, FaceMask begin, FaceMask end,
                    std::uint32_t prime, std::map<std::pair<int, FaceMask>, int> &out) {
  const auto &nonfaces = complex.minimal_nonfaces();
  for (FaceMask sigma = begin; sigma < end; ++sigma) {
    if (sigma != 0) {
      // Only unions of minimal non-faces inside sigma avoid being cones.
      FaceMask covered = 0;
      for (auto g : nonfaces)
        if ((g & ~sigma) == 0) covered |= g;
      if (covered != sigma) continue;
    }
    auto ranks = reduced_homology_ranks(complex, sigma, prime);
    const int size = std::popcount(sigma);
    for (int s = 0; s < static_cast<int>(ranks.size()); ++s) {
      if (ranks[s] == 0) continue;
      int i = size - s;  // H~_{s-1} = H~_{|sigma| - i - 1}
      out[{i, sigma}] = ranks[s];
    }
  }
}

}  // namespace

BettiTable betti_table(const MonomialIdeal &ideal, std::uint32_t prime, int cap, int threads) {
  if (!is_squarefree(ideal)) throw std::invalid_argument("betti_table needs a squarefree ideal");
  if (ideal.nvars() > cap)
    throw SizeLimitError("Hochster enumeration limited to " + std::to_string(cap) +
                         " variables, ideal has " + std::to_string(ideal.nvars()));
  SimplicialComplex complex(ideal);
  BettiTable table;
  table.nvars = ideal.nvars();
  const FaceMask total = FaceMask{1} << ideal.nvars();

  threads = std::max(1, threads);
  if (threads == 1) {
    hochster_range(complex, 0, total, prime, table.entries);
    return table;
  }
  std::vector<std::map<std::pair<int, FaceMask>, int>> parts(threads);
  {
    std::vector<std::jthread> workers;
    FaceMask chunk = (total + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      FaceMask lo = std::min<FaceMask>(total, chunk * t);
      FaceMask hi = std::min<FaceMask>(total, lo + chunk);
      workers.emplace_back([&, lo, hi, t] { hochster_range(complex, lo, hi, prime, parts[t]); });
    }
  }
  for (auto &p : parts) table.entries.merge(p);
  return table;
}

}  // namespace gbei
