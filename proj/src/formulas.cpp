#include "gbei/formulas.hpp"

#include <algorithm>
#include <numeric>

namespace gbei {

namespace {

Polynomial minor(const std::shared_ptr<const PolyContext> &ctx, int i, int j, int k, int l) {
  const auto &ring = ctx->ring;
  Monomial diag = Monomial::variable(ring.grid_var(i, k)) * Monomial::variable(ring.grid_var(j, l));
  Monomial anti = Monomial::variable(ring.grid_var(i, l)) * Monomial::variable(ring.grid_var(j, k));
  return Polynomial::from_terms(ctx, {{1, diag}, {ctx->field.neg(1), anti}});
}

void append_clique_minors(const std::shared_ptr<const PolyContext> &ctx, int m,
                          const VertexSet &cols, std::vector<Polynomial> &out) {
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j)
      for (std::size_t a = 0; a < cols.size(); ++a)
        for (std::size_t b = a + 1; b < cols.size(); ++b)
          out.push_back(minor(ctx, i, j, cols[a], cols[b]));
}

}  // namespace

Ideal pair_ideal(const SimpleGraph &rows_graph, const SimpleGraph &cols_graph,
                 const RingDescriptor &ring, TermOrder order) {
  if (rows_graph.order() != ring.rows || cols_graph.order() != ring.cols)
    throw std::invalid_argument("graph orders do not match the ring's grid");
  auto ctx = make_context(ring, order);
  std::vector<Polynomial> gens;
  for (auto [i, j] : rows_graph.edges())
    for (auto [k, l] : cols_graph.edges()) gens.push_back(minor(ctx, i, j, k, l));
  return Ideal(ring, std::move(gens));
}

Ideal generalized_bei(int m, const SimpleGraph &g, std::uint32_t prime, TermOrder order) {
  if (m < 2) throw std::invalid_argument("m must be at least 2");
  return pair_ideal(SimpleGraph::complete(m), g, RingDescriptor(m, g.order(), 0, prime), order);
}

Ideal prime_component(int m, const SimpleGraph &g, const VertexSet &t, std::uint32_t prime,
                      TermOrder order) {
  RingDescriptor ring(m, g.order(), 0, prime);
  auto ctx = make_context(ring, order);
  std::vector<Polynomial> gens;
  for (Vertex col : t)
    for (int i = 1; i <= m; ++i) gens.push_back(Polynomial::grid_variable(ctx, i, col));
  for (const auto &comp : connected_components(g, to_mask(t)))
    append_clique_minors(ctx, m, comp, gens);
  return Ideal(ring, std::move(gens));
}

HilbertSeries determinantal_hilbert(int m, int c) {
  IntPoly num;
  for (int i = 0; i <= std::min(m - 1, c - 1); ++i) num.push_back(binomial(m - 1, i) * binomial(c - 1, i));
  return HilbertSeries(std::move(num), m + c - 1);
}

HilbertSeries predicted_hilbert(const PartiteSpec &spec) {
  const int m = spec.m();
  HilbertSeries h = determinantal_hilbert(m, spec.n());
  if (spec.all_ones()) return h;
  for (int k = spec.s(); k <= spec.r(); ++k) {
    const int nk = spec.part(k);
    h = h + HilbertSeries({1}, m * nk) - determinantal_hilbert(m, nk);
  }
  return h;
}

std::int64_t bipartite_multiplicity_table(int m, int n1, int n2) {
  if (n1 > n2 || n2 < 2) throw std::invalid_argument("table needs n1 <= n2 and n2 >= 2");
  const int a = m + n1 + n2 - 1;
  const int b = m * n1;
  const int c = m * n2;
  if (std::max(a, b) < c) return 1;
  if (a < b && b == c) return 2;
  if (c < a) return 2 * n2;
  if (a == b && b == c) return 12;
  if (b < a && a == c) {
    std::int64_t sum = 0;
    for (int k = 0; k <= std::min(m - 1, n1 + n2 - 1); ++k)
      sum += binomial(m - 1, k) * binomial(n1 + n2 - 1, k);
    return sum + 1;
  }
  throw std::logic_error("multiplicity table: unreachable case");
}

int classical_bipartite_depth(int n1, int n2) { return n1 == 1 ? n2 + 2 : n1 + 2; }

HilbertSeries classical_bipartite_hilbert(int n1, int n2) {
  const int n = n1 + n2;
  return HilbertSeries({1, n - 1}, n + 1) + HilbertSeries({1}, 2 * n1) + HilbertSeries({1}, 2 * n2) -
         HilbertSeries({1, n1 - 1}, n1 + 1) - HilbertSeries({1, n2 - 1}, n2 + 1);
}

std::int64_t classical_bipartite_multiplicity(int n1, int n2) { return n2 > n1 + 1 ? 1 : 2 * n2; }

CdPrediction predicted_cd(const PartiteSpec &spec, bool char_zero) {
  if (spec.all_ones()) return {};
  const int mn = spec.m() * spec.n();
  const int lower = mn - spec.m() - spec.n_s();
  if (char_zero) return {CdPrediction::Kind::Interval, lower, mn - 3};
  return {CdPrediction::Kind::Exact, lower, lower};
}

int predicted_dim(const PartiteSpec &spec) {
  const int m = spec.m();
  if (spec.all_ones()) return m + spec.r() - 1;
  return std::max(m + spec.n() - 1, m * spec.largest_part());
}

int predicted_depth(const PartiteSpec &spec) {
  if (spec.all_ones()) return spec.m() + spec.r() - 1;
  return spec.m() + spec.n_s();
}

int predicted_reg(const PartiteSpec &spec) {
  const int m = spec.m();
  const int n = spec.n();
  if (spec.all_ones()) return std::min(m - 1, spec.r() - 1);
  if (m >= n) return n - 1;
  if (m > spec.largest_part()) return m - 1;
  return m;
}

std::vector<VertexSet> predicted_cut_sets(const PartiteSpec &spec) {
  std::vector<VertexSet> out{{}};
  if (!spec.all_ones())
    for (int k = spec.s(); k <= spec.r(); ++k) out.push_back(spec.complement(k));
  std::sort(out.begin(), out.end(), [](const VertexSet &a, const VertexSet &b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::vector<ComponentDescriptor> predicted_components(const PartiteSpec &spec) {
  VertexSet all(spec.n());
  std::iota(all.begin(), all.end(), 1);
  std::vector<ComponentDescriptor> out{{"determinantal", all}};
  if (!spec.all_ones())
    for (int k = spec.s(); k <= spec.r(); ++k) out.push_back({"variables", spec.complement(k)});
  return out;
}

Prediction predict(const PartiteSpec &spec, bool char_zero) {
  Prediction p;
  p.m = spec.m();
  p.parts = spec.parts();
  p.dim = predicted_dim(spec);
  p.depth = predicted_depth(spec);
  p.reg = predicted_reg(spec);
  p.hilbert = predicted_hilbert(spec);
  p.mult = multiplicity(p.hilbert);
  if (spec.r() == 2 && !spec.all_ones())
    p.mult_table = bipartite_multiplicity_table(spec.m(), spec.part(1), spec.part(2));
  p.cd = predicted_cd(spec, char_zero);
  p.height = spec.m() * spec.n() - p.dim;
  p.konig = konig_path(spec);
  p.components = predicted_components(spec);
  p.cut_sets = predicted_cut_sets(spec);
  return p;
}

}  // namespace gbei
