#pragma once

#include <optional>
#include <span>
#include <vector>

#include "gbei/monomial_ideal.hpp"
#include "gbei/polynomial.hpp"

namespace gbei {

// Full multivariate division. The highest reducible term is always reduced
// first, by the first basis element (in list order) whose leading monomial
// divides it.
Polynomial normal_form(const Polynomial &f, std::span<const Polynomial> basis);

Polynomial s_polynomial(const Polynomial &f, const Polynomial &g);

struct BuchbergerStats {
  std::size_t pairs_considered = 0;
  std::size_t coprime_skipped = 0;
  std::size_t chain_skipped = 0;
  std::size_t zero_reductions = 0;
};

// Reduced Groebner basis, monic, sorted by descending leading monomial.
// All generators must share one context.
std::vector<Polynomial> buchberger(std::span<const Polynomial> gens,
                                   BuchbergerStats *stats = nullptr);

// Leading monomials of a Groebner basis, minimalised.
MonomialIdeal initial_ideal(std::span<const Polynomial> gb, int nvars);
MonomialIdeal initial_ideal(std::span<const Polynomial> gb);

class Ideal {
public:
  Ideal(RingDescriptor ring, std::vector<Polynomial> gens);

  const RingDescriptor &ring() const { return ring_; }
  const std::vector<Polynomial> &generators() const { return gens_; }

  // Computes and caches the reduced basis for `order`; a cached basis for a
  // different order is replaced.
  const std::vector<Polynomial> &groebner(TermOrder order);
  // Cached basis, if one exists for `order`.
  const std::vector<Polynomial> *cached_basis(TermOrder order) const;
  void set_basis(TermOrder order, std::vector<Polynomial> basis);

  bool contains(const Polynomial &f, TermOrder order);

private:
  RingDescriptor ring_;
  std::vector<Polynomial> gens_;
  std::optional<std::pair<TermOrder, std::vector<Polynomial>>> basis_;
};

// I ∩ J via adjoining t: eliminate t from t*I + (1-t)*J under the block
// elimination order. The result carries its reduced lex-row-major basis.
Ideal intersect(const Ideal &i, const Ideal &j);

bool ideals_equal(const Ideal &i, const Ideal &j, TermOrder order);

}  // namespace gbei
