#include "gbei/hilbert.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gbei {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Hilbert coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Hilbert coefficient overflow");
  return r;
}

void trim(IntPoly &p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

IntPoly shift(IntPoly p, int k) {
  if (p.empty()) return p;
  p.insert(p.begin(), k, 0);
  return p;
}

std::int64_t eval_at_one(const IntPoly &p) {
  std::int64_t s = 0;
  for (auto c : p) s = checked_add(s, c);
  return s;
}

// Divide by (1 - t); caller guarantees p(1) = 0.
IntPoly divide_one_minus_t(const IntPoly &p) {
  // p = (1 - t) q  =>  q_k = sum_{i<=k} p_i
  IntPoly q(p.size() > 0 ? p.size() - 1 : 0);
  std::int64_t acc = 0;
  for (std::size_t k = 0; k < q.size(); ++k) {
    acc = checked_add(acc, p[k]);
    q[k] = acc;
  }
  trim(q);
  return q;
}

void minimalise(std::vector<Monomial> &gens) {
  std::sort(gens.begin(), gens.end(),
            [](const Monomial &a, const Monomial &b) { return a.degree < b.degree; });
  std::vector<Monomial> kept;
  for (const auto &g : gens) {
    bool redundant = std::any_of(kept.begin(), kept.end(), [&](const Monomial &h) { return h.divides(g); });
    if (!redundant) kept.push_back(g);
  }
  gens = std::move(kept);
}

IntPoly k_polynomial(std::vector<Monomial> gens, int nvars) {
  if (gens.empty()) return {1};
  for (const auto &g : gens)
    if (g.degree == 0) return {};

  std::vector<int> freq(nvars, 0);
  for (const auto &g : gens)
    for (int v = 0; v < nvars; ++v)
      if (g.exp[v]) ++freq[v];
  int pivot = 0;
  for (int v = 1; v < nvars; ++v)
    if (freq[v] > freq[pivot]) pivot = v;

  if (freq[pivot] <= 1) {
    // pairwise coprime: product of (1 - t^deg)
    IntPoly out{1};
    for (const auto &g : gens) {
      IntPoly f(g.degree + 1, 0);
      f[0] = 1;
      f[g.degree] = -1;
      out = poly_mul(out, f);
    }
    return out;
  }

  std::vector<Monomial> plus;  // I + (x)
  std::vector<Monomial> colon; // I : x
  for (const auto &g : gens) {
    if (g.exp[pivot] == 0) plus.push_back(g);
    Monomial q = g;
    if (q.exp[pivot] > 0) {
      --q.exp[pivot];
      --q.degree;
    }
    colon.push_back(q);
  }
  plus.push_back(Monomial::variable(pivot));
  minimalise(colon);

  return poly_add(k_polynomial(std::move(plus), nvars), shift(k_polynomial(std::move(colon), nvars), 1));
}

}  // namespace

IntPoly poly_add(const IntPoly &a, const IntPoly &b) {
  IntPoly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = checked_add(out[i], b[i]);
  trim(out);
  return out;
}

IntPoly poly_sub(const IntPoly &a, const IntPoly &b) {
  IntPoly nb = b;
  for (auto &c : nb) c = checked_mul(c, -1);
  return poly_add(a, nb);
}

IntPoly poly_mul(const IntPoly &a, const IntPoly &b) {
  if (a.empty() || b.empty()) return {};
  IntPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = checked_add(out[i + j], checked_mul(a[i], b[j]));
  trim(out);
  return out;
}

IntPoly one_minus_t_pow(int k) {
  IntPoly out(k + 1);
  for (int i = 0; i <= k; ++i) out[i] = (i % 2 ? -1 : 1) * binomial(k, i);
  return out;
}

std::int64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    // r * (n - k + i) is divisible by i at every step
    r = checked_mul(r, n - k + i) / i;
  }
  return r;
}

HilbertSeries::HilbertSeries(IntPoly numerator, int pole) : num_(std::move(numerator)), pole_(pole) {
  if (pole < 0) throw std::invalid_argument("negative pole order");
  trim(num_);
  reduce();
}

void HilbertSeries::reduce() {
  if (num_.empty()) {
    pole_ = 0;
    return;
  }
  while (pole_ > 0 && eval_at_one(num_) == 0) {
    num_ = divide_one_minus_t(num_);
    --pole_;
  }
}

std::vector<std::int64_t> HilbertSeries::expand(int max_degree) const {
  // 1/(1-t)^d = sum C(k+d-1, d-1) t^k
  std::vector<std::int64_t> out(max_degree + 1, 0);
  for (int k = 0; k <= max_degree; ++k) {
    std::int64_t acc = 0;
    for (int i = 0; i < static_cast<int>(num_.size()) && i <= k; ++i) {
      std::int64_t c = pole_ == 0 ? (k - i == 0 ? 1 : 0) : binomial(k - i + pole_ - 1, pole_ - 1);
      acc = checked_add(acc, checked_mul(num_[i], c));
    }
    out[k] = acc;
  }
  return out;
}

HilbertSeries operator+(const HilbertSeries &a, const HilbertSeries &b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  int d = std::max(a.pole_, b.pole_);
  IntPoly n = poly_add(poly_mul(a.num_, one_minus_t_pow(d - a.pole_)),
                       poly_mul(b.num_, one_minus_t_pow(d - b.pole_)));
  return HilbertSeries(std::move(n), d);
}

HilbertSeries operator-(const HilbertSeries &a, const HilbertSeries &b) {
  IntPoly nb = b.num_;
  for (auto &c : nb) c = -c;
  return a + HilbertSeries(std::move(nb), b.pole_);
}

std::string HilbertSeries::to_string() const {
  std::ostringstream os;
  os << '(';
  bool first = true;
  for (std::size_t k = 0; k < num_.size(); ++k) {
    if (num_[k] == 0) continue;
    std::int64_t c = num_[k];
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << '-';
    first = false;
    std::int64_t a = c < 0 ? -c : c;
    if (k == 0 || a != 1) os << a;
    if (k >= 1) os << (k == 0 || a != 1 ? "*t" : "t");
    if (k >= 2) os << '^' << k;
  }
  if (first) os << '0';
  os << ")/(1-t)^" << pole_;
  return os.str();
}

IntPoly hilbert_numerator(const MonomialIdeal &ideal) {
  return k_polynomial(ideal.generators(), ideal.nvars());
}

HilbertSeries hilbert_series(const MonomialIdeal &ideal) {
  return HilbertSeries(hilbert_numerator(ideal), ideal.nvars());
}

int krull_dimension(const HilbertSeries &h) { return h.pole(); }

std::int64_t multiplicity(const HilbertSeries &h) {
  if (h.is_zero()) throw std::domain_error("multiplicity of the zero module");
  return eval_at_one(h.numerator());
}

}  // namespace gbei
