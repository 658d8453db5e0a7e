#include "gbei/monomial_ideal.hpp"

#include <algorithm>

namespace gbei {

MonomialIdeal::MonomialIdeal(int nvars, std::vector<Monomial> gens) : nvars_(nvars) {
  if (nvars < 0 || nvars > kMaxVars) throw std::invalid_argument("bad variable count");
  for (const auto &g : gens)
    for (int v = nvars; v < kMaxVars; ++v)
      if (g.exp[v]) throw std::invalid_argument("generator uses a variable outside the ring");
  std::sort(gens.begin(), gens.end(), [](const Monomial &a, const Monomial &b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.exp > b.exp;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (const auto &g : gens) {
    bool redundant = std::any_of(gens_.begin(), gens_.end(),
                                 [&](const Monomial &h) { return h.divides(g); });
    if (!redundant) gens_.push_back(g);
  }
}

bool MonomialIdeal::contains(const Monomial &m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial &g) { return g.divides(m); });
}

bool is_squarefree(const MonomialIdeal &ideal) {
  return std::all_of(ideal.generators().begin(), ideal.generators().end(),
                     [](const Monomial &g) { return g.squarefree(); });
}

std::uint32_t support_mask(const Monomial &m) {
  std::uint32_t mask = 0;
  for (int v = 0; v < kMaxVars; ++v)
    if (m.exp[v]) mask |= std::uint32_t{1} << v;
  return mask;
}

}  // namespace gbei
