#include "gbei/groebner.hpp"

#include <algorithm>
#include <set>

namespace gbei {

Polynomial normal_form(const Polynomial &f, std::span<const Polynomial> basis) {
  if (basis.empty()) throw std::invalid_argument("normal_form needs a nonempty basis");
  for (const auto &g : basis) require_same_ring(f, g);

  const auto &fld = f.context().field;
  Polynomial p = f;
  std::vector<Term> remainder;
  while (!p.is_zero()) {
    const Term lead = p.leading_term();
    const Polynomial *divisor = nullptr;
    for (const auto &g : basis) {
      if (!g.is_zero() && g.leading_monomial().divides(lead.mono)) {
        divisor = &g;
        break;
      }
    }
    if (divisor) {
      auto c = fld.mul(lead.coef, fld.inv(divisor->leading_coefficient()));
      p.subtract_multiple(c, lead.mono.quotient(divisor->leading_monomial()), *divisor);
    } else {
      remainder.push_back(lead);
      p.drop_leading();
    }
  }
  // remainder was collected in strictly descending order
  return Polynomial::from_terms(f.context_ptr(), std::move(remainder));
}

Polynomial s_polynomial(const Polynomial &f, const Polynomial &g) {
  require_same_ring(f, g);
  const auto &fld = f.context().field;
  const Monomial l = f.leading_monomial().lcm(g.leading_monomial());
  Polynomial s = f.times(l.quotient(f.leading_monomial())).scaled(fld.inv(f.leading_coefficient()));
  s.subtract_multiple(fld.inv(g.leading_coefficient()), l.quotient(g.leading_monomial()), g);
  return s;
}

namespace {

struct PairKey {
  int degree;
  Monomial lcm;
  int i, j;
};

}  // namespace

std::vector<Polynomial> buchberger(std::span<const Polynomial> gens, BuchbergerStats *stats) {
  std::vector<Polynomial> basis;
  for (const auto &g : gens) {
    if (!basis.empty()) require_same_ring(basis.front(), g);
    if (!g.is_zero()) basis.push_back(g.monic());
  }
  if (basis.empty()) return {};

  BuchbergerStats local;
  BuchbergerStats &st = stats ? *stats : local;
  const MonomialOrder &ord = basis.front().context().order;

  auto key_less = [&ord](const PairKey &a, const PairKey &b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    int c = ord.compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    return std::tie(a.i, a.j) < std::tie(b.i, b.j);
  };
  std::set<PairKey, decltype(key_less)> queue(key_less);
  std::set<std::pair<int, int>> pending;

  auto add_pairs_for = [&](int j) {
    for (int i = 0; i < j; ++i) {
      Monomial l = basis[i].leading_monomial().lcm(basis[j].leading_monomial());
      queue.insert(PairKey{l.degree, l, i, j});
      pending.emplace(i, j);
    }
  };
  for (int j = 1; j < static_cast<int>(basis.size()); ++j) add_pairs_for(j);

  auto is_pending = [&](int a, int b) { return pending.count({std::min(a, b), std::max(a, b)}) > 0; };

  while (!queue.empty()) {
    PairKey pk = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({pk.i, pk.j});
    ++st.pairs_considered;

    const auto &fi = basis[pk.i];
    const auto &fj = basis[pk.j];
    if (fi.leading_monomial().coprime(fj.leading_monomial())) {
      ++st.coprime_skipped;
      continue;
    }
    bool chain = false;
    for (int k = 0; k < static_cast<int>(basis.size()) && !chain; ++k) {
      if (k == pk.i || k == pk.j) continue;
      chain = basis[k].leading_monomial().divides(pk.lcm) && !is_pending(pk.i, k) &&
              !is_pending(pk.j, k);
    }
    if (chain) {
      ++st.chain_skipped;
      continue;
    }

    Polynomial r = normal_form(s_polynomial(fi, fj), basis);
    if (r.is_zero()) {
      ++st.zero_reductions;
      continue;
    }
    basis.push_back(r.monic());
    add_pairs_for(static_cast<int>(basis.size()) - 1);
  }

  // Minimalise: drop elements whose leading monomial is divisible by another
  // (for equal leading monomials keep the earliest).
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t k = 0; k < basis.size() && !redundant; ++k) {
      if (k == i) continue;
      const auto &lk = basis[k].leading_monomial();
      const auto &li = basis[i].leading_monomial();
      redundant = lk.divides(li) && (!(lk == li) || k < i);
    }
    if (!redundant) minimal.push_back(basis[i]);
  }

  std::vector<Polynomial> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    if (minimal.size() == 1) {
      reduced.push_back(minimal[i].monic());
      break;
    }
    std::vector<Polynomial> others;
    for (std::size_t k = 0; k < minimal.size(); ++k)
      if (k != i) others.push_back(minimal[k]);
    reduced.push_back(normal_form(minimal[i], others).monic());
  }
  std::sort(reduced.begin(), reduced.end(), [&ord](const Polynomial &a, const Polynomial &b) {
    return ord.greater(a.leading_monomial(), b.leading_monomial());
  });
  return reduced;
}

MonomialIdeal initial_ideal(std::span<const Polynomial> gb, int nvars) {
  std::vector<Monomial> lead;
  for (const auto &g : gb)
    if (!g.is_zero()) lead.push_back(g.leading_monomial());
  return MonomialIdeal(nvars, std::move(lead));
}

MonomialIdeal initial_ideal(std::span<const Polynomial> gb) {
  return initial_ideal(gb, gb.empty() ? 0 : gb.front().ring().nvars());
}

Ideal::Ideal(RingDescriptor ring, std::vector<Polynomial> gens)
    : ring_(ring), gens_(std::move(gens)) {
  for (const auto &g : gens_)
    if (!(g.ring() == ring_)) throw RingMismatch("generator outside the ideal's ring");
}

const std::vector<Polynomial> &Ideal::groebner(TermOrder order) {
  if (basis_ && basis_->first == order) return basis_->second;
  auto ctx = make_context(ring_, order);
  std::vector<Polynomial> converted;
  converted.reserve(gens_.size());
  for (const auto &g : gens_) converted.push_back(g.order() == order ? g : g.with_context(ctx));
  basis_.emplace(order, buchberger(converted));
  return basis_->second;
}

const std::vector<Polynomial> *Ideal::cached_basis(TermOrder order) const {
  return basis_ && basis_->first == order ? &basis_->second : nullptr;
}

void Ideal::set_basis(TermOrder order, std::vector<Polynomial> basis) {
  basis_.emplace(order, std::move(basis));
}

bool Ideal::contains(const Polynomial &f, TermOrder order) {
  const auto &gb = groebner(order);
  if (f.is_zero()) return true;
  if (gb.empty()) return false;
  Polynomial g = f.order() == order ? f : f.with_context(gb.front().context_ptr());
  return normal_form(g, gb).is_zero();
}

Ideal intersect(const Ideal &i, const Ideal &j) {
  if (!(i.ring() == j.ring())) throw RingMismatch("intersect: ideals live in different rings");
  const RingDescriptor &base = i.ring();
  RingDescriptor ext(base.rows, base.cols, base.aux + 1, base.prime);
  auto ext_ctx = make_context(ext, TermOrder::BlockElimination);
  auto base_ctx = make_context(base, TermOrder::LexRowMajor);

  const Polynomial t = Polynomial::monomial(ext_ctx, Monomial::variable(0));
  const Polynomial one_minus_t = Polynomial::constant(ext_ctx, 1) - t;

  std::vector<Polynomial> gens;
  for (const auto &f : i.generators()) gens.push_back(t * f.with_context(ext_ctx, 1));
  for (const auto &g : j.generators()) gens.push_back(one_minus_t * g.with_context(ext_ctx, 1));

  std::vector<Polynomial> eliminated;
  for (const auto &g : buchberger(gens)) {
    bool uses_t = std::any_of(g.terms().begin(), g.terms().end(),
                              [](const Term &term) { return term.mono.exp[0] != 0; });
    if (!uses_t) eliminated.push_back(g.with_context(base_ctx, -1));
  }
  Ideal out(base, eliminated);
  out.set_basis(TermOrder::LexRowMajor, std::move(eliminated));
  return out;
}

bool ideals_equal(const Ideal &i, const Ideal &j, TermOrder order) {
  if (!(i.ring() == j.ring())) return false;
  Ideal a = i;
  Ideal b = j;
  return a.groebner(order) == b.groebner(order);
}

}  // namespace gbei
