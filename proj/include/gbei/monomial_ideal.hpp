#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gbei/polynomial.hpp"

namespace gbei {

// Monomial ideal given by its minimal generators. Generators are kept
// deduplicated, with none dividing another, and sorted (degree, then
// exponent vector) so that equal ideals compare equal.
class MonomialIdeal {
public:
  explicit MonomialIdeal(int nvars, std::vector<Monomial> gens = {});

  int nvars() const { return nvars_; }
  const std::vector<Monomial> &generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().degree == 0; }
  bool contains(const Monomial &m) const;

  friend bool operator==(const MonomialIdeal &, const MonomialIdeal &) = default;

private:
  int nvars_;
  std::vector<Monomial> gens_;
};

bool is_squarefree(const MonomialIdeal &ideal);

// Support of a squarefree monomial as a bitmask over variable indices.
std::uint32_t support_mask(const Monomial &m);

}  // namespace gbei
