#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gbei {

inline constexpr std::uint32_t kDefaultPrime = 32003;
inline constexpr int kMaxVars = 32;

bool is_prime(std::uint32_t p);

// Arithmetic in GF(p), p < 2^31.
struct PrimeField {
  std::uint32_t p;

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t s = a + b;
    return s >= p ? s - p : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return a >= b ? a - b : a + p - b; }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(std::uint64_t{a} * b % p);
  }
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p);
    return static_cast<std::uint32_t>(r < 0 ? r + p : r);
  }
};

class RingMismatch : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// K[t_1..t_aux, x_{1,1}..x_{rows,cols}] over K = GF(prime). Variable index:
// auxiliaries first, then the grid row-major.
struct RingDescriptor {
  int rows = 1;
  int cols = 1;
  int aux = 0;
  std::uint32_t prime = kDefaultPrime;

  RingDescriptor() = default;
  RingDescriptor(int rows, int cols, int aux = 0, std::uint32_t prime = kDefaultPrime);

  int nvars() const { return aux + rows * cols; }
  int grid_var(int i, int j) const { return aux + (i - 1) * cols + (j - 1); }  // 1-based i,j
  std::string var_name(int index) const;
  PrimeField field() const { return {prime}; }

  friend bool operator==(const RingDescriptor &, const RingDescriptor &) = default;
};

// lex-row-major:    aux, then x11 > x12 > ... > x1n > x21 > ...
// lex-column-major: aux, then x11 > x21 > ... > xm1 > x12 > ...
// block-elimination: aux block > grid block, lex inside each; with the
// auxiliaries first in lex-row-major this coincides with lex-row-major.
enum class TermOrder { LexRowMajor, LexColumnMajor, BlockElimination };

std::string to_string(TermOrder order);
TermOrder term_order_from_string(const std::string &name);

struct Monomial {
  std::array<std::uint8_t, kMaxVars> exp{};
  int degree = 0;

  static Monomial one() { return {}; }
  static Monomial variable(int index, int power = 1);

  bool divides(const Monomial &other) const;
  bool coprime(const Monomial &other) const;
  bool squarefree() const;
  friend Monomial operator*(const Monomial &a, const Monomial &b);
  // Requires divisor | *this.
  Monomial quotient(const Monomial &divisor) const;
  Monomial lcm(const Monomial &other) const;

  friend bool operator==(const Monomial &, const Monomial &) = default;
};

// Total monomial order for one ring.
class MonomialOrder {
public:
  MonomialOrder(const RingDescriptor &ring, TermOrder kind);

  // <0, 0, >0 as a <, =, > b.
  int compare(const Monomial &a, const Monomial &b) const;
  bool greater(const Monomial &a, const Monomial &b) const { return compare(a, b) > 0; }
  TermOrder kind() const { return kind_; }
  // Variables from most to least significant.
  std::span<const std::uint8_t> ranking() const { return {rank_.data(), static_cast<std::size_t>(nvars_)}; }

private:
  TermOrder kind_;
  int nvars_;
  bool identity_;
  std::array<std::uint8_t, kMaxVars> rank_{};
};

struct Term {
  std::uint32_t coef;
  Monomial mono;
};

struct PolyContext {
  RingDescriptor ring;
  MonomialOrder order;
  PrimeField field;

  PolyContext(RingDescriptor r, TermOrder kind) : ring(r), order(r, kind), field(r.field()) {}
};

std::shared_ptr<const PolyContext> make_context(const RingDescriptor &ring, TermOrder order);

// Polynomial over GF(p); terms have nonzero coefficients and are strictly
// descending in the context's order. The zero polynomial has no terms.
class Polynomial {
public:
  explicit Polynomial(std::shared_ptr<const PolyContext> ctx) : ctx_(std::move(ctx)) {}

  // Arbitrary term list; sorts, merges duplicates, drops zeros.
  static Polynomial from_terms(std::shared_ptr<const PolyContext> ctx, std::vector<Term> terms);
  static Polynomial monomial(std::shared_ptr<const PolyContext> ctx, const Monomial &m,
                             std::uint32_t coef = 1);
  static Polynomial grid_variable(std::shared_ptr<const PolyContext> ctx, int i, int j);
  static Polynomial constant(std::shared_ptr<const PolyContext> ctx, std::int64_t c);

  const PolyContext &context() const { return *ctx_; }
  const std::shared_ptr<const PolyContext> &context_ptr() const { return ctx_; }
  const RingDescriptor &ring() const { return ctx_->ring; }
  TermOrder order() const { return ctx_->order.kind(); }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term> &terms() const { return terms_; }
  const Term &leading_term() const { return terms_.front(); }
  const Monomial &leading_monomial() const { return terms_.front().mono; }
  std::uint32_t leading_coefficient() const { return terms_.front().coef; }
  int degree() const;

  Polynomial &operator+=(const Polynomial &other);
  Polynomial &operator-=(const Polynomial &other);
  friend Polynomial operator+(Polynomial a, const Polynomial &b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial &b) { return a -= b; }
  friend Polynomial operator*(const Polynomial &a, const Polynomial &b);

  // this - coef * mono * g
  void subtract_multiple(std::uint32_t coef, const Monomial &mono, const Polynomial &g);
  Polynomial scaled(std::uint32_t coef) const;
  Polynomial times(const Monomial &mono) const;
  Polynomial monic() const;
  void drop_leading() { terms_.erase(terms_.begin()); }

  // Same polynomial in another context with the same variable count layout
  // (only the order changes) or re-embedded with `aux_shift` extra leading
  // auxiliary variables (negative to drop them; they must be absent).
  Polynomial with_context(std::shared_ptr<const PolyContext> ctx, int aux_shift = 0) const;

  // "3*x[1,2]*x[2,3] + 32002*x[1,3]" in descending order; "0" for zero.
  std::string to_string() const;

  friend bool operator==(const Polynomial &a, const Polynomial &b);

private:
  void add_scaled(std::uint32_t coef, const Monomial &mono, const Polynomial &g);

  std::shared_ptr<const PolyContext> ctx_;
  std::vector<Term> terms_;
};

void require_same_ring(const Polynomial &a, const Polynomial &b);

}  // namespace gbei
