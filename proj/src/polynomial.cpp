#include "gbei/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace gbei {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; std::uint64_t{d} * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  if (a == 0) throw std::domain_error("inverse of zero in GF(p)");
  std::int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
  }
  return from_int(t);
}

RingDescriptor::RingDescriptor(int rows_, int cols_, int aux_, std::uint32_t prime_)
    : rows(rows_), cols(cols_), aux(aux_), prime(prime_) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("ring needs at least one row and column");
  if (aux < 0) throw std::invalid_argument("negative auxiliary count");
  if (nvars() > kMaxVars)
    throw std::invalid_argument("ring has " + std::to_string(nvars()) +
                                " variables, limit is " + std::to_string(kMaxVars));
  if (!is_prime(prime) || prime >= (1U << 31))
    throw std::invalid_argument(std::to_string(prime) + " is not a prime below 2^31");
}

std::string RingDescriptor::var_name(int index) const {
  if (index < aux) return "t[" + std::to_string(index + 1) + "]";
  int g = index - aux;
  return "x[" + std::to_string(g / cols + 1) + "," + std::to_string(g % cols + 1) + "]";
}

std::string to_string(TermOrder order) {
  switch (order) {
    case TermOrder::LexRowMajor: return "lex-row-major";
    case TermOrder::LexColumnMajor: return "lex-column-major";
    case TermOrder::BlockElimination: return "block-elimination";
  }
  return "unknown";
}

TermOrder term_order_from_string(const std::string &name) {
  for (auto o : {TermOrder::LexRowMajor, TermOrder::LexColumnMajor, TermOrder::BlockElimination})
    if (to_string(o) == name) return o;
  throw std::invalid_argument("unknown term order '" + name + "'");
}

Monomial Monomial::variable(int index, int power) {
  Monomial m;
  m.exp[index] = static_cast<std::uint8_t>(power);
  m.degree = power;
  return m;
}

bool Monomial::divides(const Monomial &other) const {
  if (degree > other.degree) return false;
  for (int i = 0; i < kMaxVars; ++i)
    if (exp[i] > other.exp[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial &other) const {
  for (int i = 0; i < kMaxVars; ++i)
    if (exp[i] && other.exp[i]) return false;
  return true;
}

bool Monomial::squarefree() const {
  return std::all_of(exp.begin(), exp.end(), [](std::uint8_t e) { return e <= 1; });
}

Monomial operator*(const Monomial &a, const Monomial &b) {
  Monomial out;
  for (int i = 0; i < kMaxVars; ++i) {
    unsigned e = unsigned{a.exp[i]} + b.exp[i];
    if (e > 255) throw std::overflow_error("exponent exceeds 255");
    out.exp[i] = static_cast<std::uint8_t>(e);
  }
  out.degree = a.degree + b.degree;
  return out;
}

Monomial Monomial::quotient(const Monomial &divisor) const {
  Monomial out;
  for (int i = 0; i < kMaxVars; ++i) out.exp[i] = static_cast<std::uint8_t>(exp[i] - divisor.exp[i]);
  out.degree = degree - divisor.degree;
  return out;
}

Monomial Monomial::lcm(const Monomial &other) const {
  Monomial out;
  for (int i = 0; i < kMaxVars; ++i) {
    out.exp[i] = std::max(exp[i], other.exp[i]);
    out.degree += out.exp[i];
  }
  return out;
}

MonomialOrder::MonomialOrder(const RingDescriptor &ring, TermOrder kind)
    : kind_(kind), nvars_(ring.nvars()) {
  int k = 0;
  for (int a = 0; a < ring.aux; ++a) rank_[k++] = static_cast<std::uint8_t>(a);
  if (kind == TermOrder::LexColumnMajor) {
    for (int j = 1; j <= ring.cols; ++j)
      for (int i = 1; i <= ring.rows; ++i) rank_[k++] = static_cast<std::uint8_t>(ring.grid_var(i, j));
  } else {
    for (int v = ring.aux; v < ring.nvars(); ++v) rank_[k++] = static_cast<std::uint8_t>(v);
  }
  identity_ = true;
  for (int v = 0; v < nvars_; ++v) identity_ = identity_ && rank_[v] == v;
}

int MonomialOrder::compare(const Monomial &a, const Monomial &b) const {
  if (identity_) {
    for (int v = 0; v < nvars_; ++v)
      if (a.exp[v] != b.exp[v]) return a.exp[v] > b.exp[v] ? 1 : -1;
    return 0;
  }
  for (int k = 0; k < nvars_; ++k) {
    int v = rank_[k];
    if (a.exp[v] != b.exp[v]) return a.exp[v] > b.exp[v] ? 1 : -1;
  }
  return 0;
}

std::shared_ptr<const PolyContext> make_context(const RingDescriptor &ring, TermOrder order) {
  return std::make_shared<const PolyContext>(ring, order);
}

void require_same_ring(const Polynomial &a, const Polynomial &b) {
  if (!(a.ring() == b.ring())) throw RingMismatch("polynomials live in different rings");
  if (a.order() != b.order()) throw RingMismatch("polynomials use different term orders");
}

Polynomial Polynomial::from_terms(std::shared_ptr<const PolyContext> ctx, std::vector<Term> terms) {
  Polynomial out(std::move(ctx));
  const auto &ord = out.ctx_->order;
  const auto &fld = out.ctx_->field;
  for (auto &t : terms) t.coef %= fld.p;
  std::sort(terms.begin(), terms.end(),
            [&](const Term &a, const Term &b) { return ord.greater(a.mono, b.mono); });
  for (auto &t : terms) {
    if (!out.terms_.empty() && out.terms_.back().mono == t.mono)
      out.terms_.back().coef = fld.add(out.terms_.back().coef, t.coef);
    else
      out.terms_.push_back(t);
    if (out.terms_.back().coef == 0) out.terms_.pop_back();
  }
  return out;
}

Polynomial Polynomial::monomial(std::shared_ptr<const PolyContext> ctx, const Monomial &m,
                                std::uint32_t coef) {
  return from_terms(std::move(ctx), {{coef, m}});
}

Polynomial Polynomial::grid_variable(std::shared_ptr<const PolyContext> ctx, int i, int j) {
  int v = ctx->ring.grid_var(i, j);
  return monomial(std::move(ctx), Monomial::variable(v));
}

Polynomial Polynomial::constant(std::shared_ptr<const PolyContext> ctx, std::int64_t c) {
  auto coef = ctx->field.from_int(c);
  return monomial(std::move(ctx), Monomial::one(), coef);
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto &t : terms_) d = std::max(d, t.mono.degree);
  return d;
}

void Polynomial::add_scaled(std::uint32_t coef, const Monomial &mono, const Polynomial &g) {
  if (coef == 0 || g.is_zero()) return;
  require_same_ring(*this, g);
  const auto &ord = ctx_->order;
  const auto &fld = ctx_->field;
  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  auto a = terms_.begin();
  auto b = g.terms_.begin();
  while (a != terms_.end() || b != g.terms_.end()) {
    if (b == g.terms_.end()) {
      out.push_back(*a++);
      continue;
    }
    Term gb{fld.mul(coef, b->coef), b->mono * mono};
    if (a == terms_.end()) {
      out.push_back(gb);
      ++b;
      continue;
    }
    int c = ord.compare(a->mono, gb.mono);
    if (c > 0) {
      out.push_back(*a++);
    } else if (c < 0) {
      out.push_back(gb);
      ++b;
    } else {
      auto s = fld.add(a->coef, gb.coef);
      if (s != 0) out.push_back({s, a->mono});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

Polynomial &Polynomial::operator+=(const Polynomial &other) {
  add_scaled(1, Monomial::one(), other);
  return *this;
}

Polynomial &Polynomial::operator-=(const Polynomial &other) {
  add_scaled(ctx_->field.neg(1), Monomial::one(), other);
  return *this;
}

void Polynomial::subtract_multiple(std::uint32_t coef, const Monomial &mono, const Polynomial &g) {
  add_scaled(ctx_->field.neg(coef), mono, g);
}

Polynomial operator*(const Polynomial &a, const Polynomial &b) {
  require_same_ring(a, b);
  Polynomial out(a.ctx_);
  for (const auto &t : b.terms_) out.add_scaled(t.coef, t.mono, a);
  return out;
}

Polynomial Polynomial::scaled(std::uint32_t coef) const {
  Polynomial out(ctx_);
  coef %= ctx_->field.p;
  if (coef == 0) return out;
  out.terms_ = terms_;
  for (auto &t : out.terms_) t.coef = ctx_->field.mul(t.coef, coef);
  return out;
}

Polynomial Polynomial::times(const Monomial &mono) const {
  Polynomial out(ctx_);
  out.terms_ = terms_;
  for (auto &t : out.terms_) t.mono = t.mono * mono;
  return out;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(ctx_->field.inv(leading_coefficient()));
}

Polynomial Polynomial::with_context(std::shared_ptr<const PolyContext> ctx, int aux_shift) const {
  if (ctx->ring.nvars() != ring().nvars() + aux_shift || ctx->ring.prime != ring().prime)
    throw RingMismatch("incompatible ring for re-embedding");
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto &t : terms_) {
    Term u{t.coef, Monomial{}};
    u.mono.degree = t.mono.degree;
    for (int v = 0; v < ring().nvars(); ++v) {
      int w = v + aux_shift;
      if (w < 0) {
        if (t.mono.exp[v] != 0) throw RingMismatch("dropped auxiliary variable is present");
        continue;
      }
      u.mono.exp[w] = t.mono.exp[v];
    }
    terms.push_back(u);
  }
  return from_terms(std::move(ctx), std::move(terms));
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto &t : terms_) {
    if (!first) os << " + ";
    first = false;
    bool wrote = false;
    if (t.coef != 1 || t.mono.degree == 0) {
      os << t.coef;
      wrote = true;
    }
    for (int v = 0; v < ring().nvars(); ++v) {
      for (int e = 0; e < t.mono.exp[v]; ++e) {
        if (wrote) os << '*';
        os << ring().var_name(v);
        wrote = true;
      }
    }
  }
  return os.str();
}

bool operator==(const Polynomial &a, const Polynomial &b) {
  if (!(a.ring() == b.ring())) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].coef != b.terms_[i].coef || !(a.terms_[i].mono == b.terms_[i].mono))
      return false;
  return true;
}

}  // namespace gbei
