#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gbei/monomial_ideal.hpp"

namespace gbei {

// Integer polynomial in t, coefficient of t^k at index k, no trailing zeros.
using IntPoly = std::vector<std::int64_t>;

// Overflow-checked helpers; throw std::overflow_error.
IntPoly poly_add(const IntPoly &a, const IntPoly &b);
IntPoly poly_sub(const IntPoly &a, const IntPoly &b);
IntPoly poly_mul(const IntPoly &a, const IntPoly &b);
// (1 - t)^k
IntPoly one_minus_t_pow(int k);
std::int64_t binomial(int n, int k);

// N(t) / (1 - t)^pole kept in lowest terms: (1 - t) does not divide N unless
// N = 0 (stored as pole 0, empty numerator).
class HilbertSeries {
public:
  HilbertSeries() = default;
  HilbertSeries(IntPoly numerator, int pole);

  const IntPoly &numerator() const { return num_; }
  int pole() const { return pole_; }
  bool is_zero() const { return num_.empty(); }

  // Coefficients of the power series in degrees 0..max_degree.
  std::vector<std::int64_t> expand(int max_degree) const;

  friend HilbertSeries operator+(const HilbertSeries &a, const HilbertSeries &b);
  friend HilbertSeries operator-(const HilbertSeries &a, const HilbertSeries &b);
  friend bool operator==(const HilbertSeries &, const HilbertSeries &) = default;

  std::string to_string() const;

private:
  void reduce();

  IntPoly num_;
  int pole_ = 0;
};

// K-polynomial of ring/I over (1-t)^nvars, before cancellation.
IntPoly hilbert_numerator(const MonomialIdeal &ideal);
HilbertSeries hilbert_series(const MonomialIdeal &ideal);

int krull_dimension(const HilbertSeries &h);
// N(1); throws std::domain_error on the zero series.
std::int64_t multiplicity(const HilbertSeries &h);

}  // namespace gbei
