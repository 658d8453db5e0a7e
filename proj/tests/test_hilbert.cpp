#include "doctest.h"
#include "gbei/formulas.hpp"
#include "gbei/hilbert.hpp"

#include <functional>
#include <random>

using namespace gbei;

namespace {

// Number of standard monomials of each degree, by direct enumeration.
std::vector<std::int64_t> count_standard(const MonomialIdeal &ideal, int max_degree) {
  std::vector<std::int64_t> counts(max_degree + 1, 0);
  Monomial cur;
  std::function<void(int, int)> rec = [&](int var, int remaining) {
    if (var == ideal.nvars() - 1) {
      cur.exp[var] = static_cast<std::uint8_t>(remaining);
      cur.degree += remaining;
      if (!ideal.contains(cur)) ++counts[cur.degree];
      cur.degree -= remaining;
      cur.exp[var] = 0;
      return;
    }
    for (int e = 0; e <= remaining; ++e) {
      cur.exp[var] = static_cast<std::uint8_t>(e);
      cur.degree += e;
      rec(var + 1, remaining - e);
      cur.degree -= e;
    }
    cur.exp[var] = 0;
  };
  for (int d = 0; d <= max_degree; ++d) rec(0, d);
  return counts;
}

MonomialIdeal random_ideal(std::mt19937 &rng, int nvars) {
  std::uniform_int_distribution<int> count(1, 6), var(0, nvars - 1), power(1, 3), len(1, 3);
  std::vector<Monomial> gens;
  for (int g = count(rng); g > 0; --g) {
    Monomial m;
    for (int k = len(rng); k > 0; --k) m = m * Monomial::variable(var(rng), power(rng));
    gens.push_back(m);
  }
  return MonomialIdeal(nvars, gens);
}

}  // namespace

TEST_CASE("integer polynomial helpers") {
  CHECK(one_minus_t_pow(0) == IntPoly{1});
  CHECK(one_minus_t_pow(3) == IntPoly{1, -3, 3, -1});
  CHECK(poly_mul({1, 1}, {1, -1}) == IntPoly{1, 0, -1});
  CHECK(poly_sub({1, 2}, {1, 2}).empty());
  CHECK(poly_add({1}, {0, 0, 5}) == IntPoly{1, 0, 5});
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(60, 30) == 118264581564861424LL);
  CHECK_THROWS_AS(poly_mul({INT64_MAX}, {2}), std::overflow_error);
}

TEST_CASE("series stays in lowest terms") {
  HilbertSeries h({1, -1}, 3);
  CHECK(h.numerator() == IntPoly{1});
  CHECK(h.pole() == 2);
  CHECK(HilbertSeries({}, 4).pole() == 0);
  CHECK(HilbertSeries({1, -1}, 3) == HilbertSeries({1}, 2));
  CHECK(HilbertSeries({1}, 2).expand(4) == std::vector<std::int64_t>{1, 2, 3, 4, 5});
  CHECK((HilbertSeries({1}, 2) - HilbertSeries({1}, 2)).is_zero());
  CHECK(HilbertSeries({1}, 1) + HilbertSeries({1}, 2) == HilbertSeries({2, -1}, 2));
}

TEST_CASE("series of simple monomial quotients") {
  RingDescriptor r(1, 3);
  auto x = [](int v) { return Monomial::variable(v); };
  CHECK(hilbert_series(MonomialIdeal(3)) == HilbertSeries({1}, 3));
  CHECK(hilbert_series(MonomialIdeal(3, {x(0)})) == HilbertSeries({1}, 2));
  CHECK(hilbert_series(MonomialIdeal(3, {x(0) * x(1)})) == HilbertSeries({1, 1}, 2));
  CHECK(hilbert_series(MonomialIdeal(2, {Monomial::variable(0, 3)})) == HilbertSeries({1, 1, 1}, 1));
  CHECK(hilbert_series(MonomialIdeal(2, {Monomial::one()})).is_zero());
  CHECK(hilbert_numerator(MonomialIdeal(2, {x(0) * x(1)})) == IntPoly{1, 0, -1});
}

TEST_CASE("dimension and multiplicity") {
  HilbertSeries h({1, 2, 1}, 5);
  CHECK(krull_dimension(h) == 5);
  CHECK(multiplicity(h) == 4);
  CHECK_THROWS_AS(multiplicity(HilbertSeries()), std::domain_error);
}

TEST_CASE("series agrees with brute-force counting of standard monomials") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    int nvars = 2 + trial % 9;
    auto ideal = random_ideal(rng, nvars);
    CAPTURE(nvars);
    CHECK(hilbert_series(ideal).expand(6) == count_standard(ideal, 6));
  }
}

TEST_CASE("determinantal series matches the computed one") {
  for (int m = 2; m <= 3; ++m)
    for (int c = 1; c <= 4; ++c) {
      if (m * c > 12) continue;
      Ideal j = generalized_bei(m, SimpleGraph::complete(c));
      if (c == 1) {
        CHECK(determinantal_hilbert(m, c) == HilbertSeries({1}, m));
        continue;
      }
      auto computed = hilbert_series(initial_ideal(j.groebner(TermOrder::LexRowMajor)));
      CHECK(computed == determinantal_hilbert(m, c));
    }
}
