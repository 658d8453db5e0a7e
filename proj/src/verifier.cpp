#include "gbei/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <functional>
#include <thread>

#include "gbei/report.hpp"

namespace gbei {

std::string to_string(Status s) {
  switch (s) {
    case Status::Match: return "match";
    case Status::Mismatch: return "mismatch";
    case Status::Skipped: return "skipped";
  }
  return "unknown";
}

const InvariantRecord *InvariantReport::find(const std::string &name) const {
  for (const auto &r : invariants)
    if (r.name == name) return &r;
  return nullptr;
}

bool InvariantReport::has_mismatch() const {
  return std::any_of(invariants.begin(), invariants.end(),
                     [](const InvariantRecord &r) { return r.status == Status::Mismatch; });
}

namespace {

class StageTimer {
public:
  StageTimer(std::map<std::string, double> &sink, std::string stage)
      : sink_(sink), stage_(std::move(stage)), start_(std::chrono::steady_clock::now()) {}
  ~StageTimer() {
    auto dt = std::chrono::steady_clock::now() - start_;
    sink_[stage_] += std::chrono::duration<double, std::milli>(dt).count();
  }

private:
  std::map<std::string, double> &sink_;
  std::string stage_;
  std::chrono::steady_clock::time_point start_;
};

InvariantRecord compared(std::string name, Json predicted, Json computed) {
  InvariantRecord r{std::move(name), std::move(predicted), std::move(computed), Status::Match, {}};
  r.status = r.predicted == r.computed ? Status::Match : Status::Mismatch;
  return r;
}

InvariantRecord skipped(std::string name, Json predicted, std::string reason) {
  return {std::move(name), std::move(predicted), nullptr, Status::Skipped, std::move(reason)};
}

std::string cap_reason(const char *stage, int vars, int cap) {
  return std::string(stage) + " cap exceeded: " + std::to_string(vars) + " variables > " +
         std::to_string(cap);
}

Json vertex_sets_json(const std::vector<VertexSet> &sets) {
  Json out = Json::array();
  for (const auto &s : sets) out.push_back(s);
  return out;
}

}  // namespace

int max_coprime_subset(std::span<const Monomial> monomials) {
  if (monomials.empty()) return 0;
  const int n = static_cast<int>(monomials.size());
  std::vector<std::uint32_t> masks(n);
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) {
    masks[i] = support_mask(monomials[i]);
    idx[i] = i;
  }
  // Small supports first: they are the most likely members of a large packing.
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
    return std::popcount(masks[a]) < std::popcount(masks[b]);
  });
  int best = 0;
  std::function<void(int, std::uint32_t, int)> search = [&](int pos, std::uint32_t used, int count) {
    best = std::max(best, count);
    for (int k = pos; k < n; ++k) {
      if (count + (n - k) <= best) return;
      std::uint32_t m = masks[idx[k]];
      if (m & used) continue;
      search(k + 1, used | m, count + 1);
    }
  };
  search(0, 0, 0);
  return best;
}

std::vector<Monomial> generator_initial_terms(const Ideal &ideal, TermOrder order) {
  auto ctx = make_context(ideal.ring(), order);
  std::vector<Monomial> out;
  for (const auto &g : ideal.generators()) {
    if (g.is_zero()) continue;
    out.push_back(g.order() == order ? g.leading_monomial() : g.with_context(ctx).leading_monomial());
  }
  return out;
}

CoprimeProfile coprime_profile(int m, const SimpleGraph &g, TermOrder order, int max_order) {
  const int n = g.order();
  if (n > max_order)
    throw SizeLimitError("labeling sweep over " + std::to_string(n) + " vertices exceeds cap " +
                         std::to_string(max_order));
  VertexSet perm(n);
  for (int v = 0; v < n; ++v) perm[v] = v + 1;
  CoprimeProfile out;
  bool first = true;
  do {
    Ideal j = generalized_bei(m, relabel(g, perm), kDefaultPrime, order);
    int len = max_coprime_subset(generator_initial_terms(j, order));
    if (first || len > out.max) {
      out.max = len;
      out.best_labeling = perm;
    }
    out.min = first ? len : std::min(out.min, len);
    first = false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

KonigCheck konig_check(const PartiteSpec &spec) {
  const PartiteSpec classical(2, spec.parts());
  const Prediction p = predict(classical);
  KonigCheck out;
  out.height = p.height;
  out.path = konig_path(classical);
  out.path_valid = is_valid_path(complete_multipartite(classical), out.path) &&
                   out.path.length() == out.height;

  // Relabel v_i -> i: the edge {v_i, v_{i+1}} becomes {i, i+1}, whose minor
  // has leading term x_{1,i} x_{2,i+1}.
  RingDescriptor ring(2, classical.n());
  auto ctx = make_context(ring, TermOrder::LexRowMajor);
  std::vector<Monomial> leads;
  for (int i = 1; i <= out.path.length(); ++i) {
    Monomial diag = Monomial::variable(ring.grid_var(1, i)) * Monomial::variable(ring.grid_var(2, i + 1));
    Monomial anti = Monomial::variable(ring.grid_var(1, i + 1)) * Monomial::variable(ring.grid_var(2, i));
    auto minor = Polynomial::from_terms(ctx, {{1, diag}, {ctx->field.neg(1), anti}});
    leads.push_back(minor.leading_monomial());
  }
  out.initial_terms_coprime = static_cast<int>(leads.size()) == out.height &&
                              max_coprime_subset(leads) == out.height;

  const int nr = classical.largest_part();
  if (!classical.all_ones() && nr <= classical.n() - nr) {
    PathWitness literal{interleaved_u_sequence(classical), classical.n() - 1};
    out.interleaved_sequence_valid = is_valid_path(complete_multipartite(classical), literal);
  }
  return out;
}

InvariantReport verify(const PartiteSpec &spec, const VerifyOptions &options) {
  InvariantReport report;
  report.m = spec.m();
  report.parts = spec.parts();
  report.order = to_string(options.order);
  report.prime = options.prime;

  Prediction pred;
  {
    StageTimer t(report.timing_ms, "predict");
    pred = predict(spec, false);
  }
  const SimpleGraph g = complete_multipartite(spec);
  const int vars = spec.m() * spec.n();
  auto &inv = report.invariants;

  std::optional<Ideal> j;
  std::optional<MonomialIdeal> initial;
  std::optional<MonomialIdeal> squarefree_initial;
  std::optional<HilbertSeries> computed_hilbert;

  if (vars <= options.groebner_max_vars) {
    StageTimer t(report.timing_ms, "groebner");
    j.emplace(generalized_bei(spec.m(), g, options.prime, options.order));
    initial = initial_ideal(j->groebner(options.order));
    if (is_squarefree(*initial)) {
      squarefree_initial = initial;
    } else if (options.order == TermOrder::LexRowMajor) {
      Ideal alt = generalized_bei(spec.m(), g, options.prime, TermOrder::LexColumnMajor);
      auto alt_initial = initial_ideal(alt.groebner(TermOrder::LexColumnMajor));
      if (is_squarefree(alt_initial)) {
        squarefree_initial = alt_initial;
        report.order += " (depth/reg via lex-column-major)";
      }
    }
    report.squarefree = squarefree_initial.has_value();
  }

  const std::string groebner_skip = cap_reason("groebner", vars, options.groebner_max_vars);

  if (initial) {
    StageTimer t(report.timing_ms, "hilbert");
    computed_hilbert = hilbert_series(*initial);
  }
  if (computed_hilbert) {
    inv.push_back(compared("dim", pred.dim, krull_dimension(*computed_hilbert)));
  } else {
    inv.push_back(skipped("dim", pred.dim, groebner_skip));
  }

  std::optional<BettiTable> betti;
  std::string betti_skip = groebner_skip;
  if (initial && !squarefree_initial) {
    betti_skip = "squarefree-check-failed";
  } else if (squarefree_initial && vars > options.hochster_max_vars) {
    betti_skip = cap_reason("hochster", vars, options.hochster_max_vars);
  } else if (squarefree_initial) {
    StageTimer t(report.timing_ms, "betti");
    betti = betti_table(*squarefree_initial, options.prime, options.hochster_max_vars,
                        options.betti_threads);
  }
  if (betti) {
    inv.push_back(compared("depth", pred.depth, betti->depth()));
    inv.push_back(compared("reg", pred.reg, betti->regularity()));
  } else {
    inv.push_back(skipped("depth", pred.depth, betti_skip));
    inv.push_back(skipped("reg", pred.reg, betti_skip));
  }

  if (computed_hilbert) {
    inv.push_back(compared("hilbert", to_json(pred.hilbert), to_json(*computed_hilbert)));
    inv.push_back(compared("mult", pred.mult, multiplicity(*computed_hilbert)));
    if (pred.mult_table)
      inv.push_back(compared("multTable", *pred.mult_table, multiplicity(*computed_hilbert)));
  } else {
    inv.push_back(skipped("hilbert", to_json(pred.hilbert), groebner_skip));
    inv.push_back(skipped("mult", pred.mult, groebner_skip));
    if (pred.mult_table) inv.push_back(skipped("multTable", *pred.mult_table, groebner_skip));
  }

  inv.push_back(skipped("cd", to_json(pred.cd), "cohomological dimension is predicted only"));

  // Components P_T for the predicted cut sets.
  if (j && vars <= options.decomposition_max_vars) {
    StageTimer t(report.timing_ms, "decomposition");
    std::vector<Ideal> components;
    for (const auto &cut : pred.cut_sets)
      components.push_back(prime_component(spec.m(), g, cut, options.prime, TermOrder::LexRowMajor));
    Ideal meet = components.front();
    for (std::size_t k = 1; k < components.size(); ++k) meet = intersect(meet, components[k]);
    Ideal lhs = generalized_bei(spec.m(), g, options.prime, TermOrder::LexRowMajor);
    inv.push_back(compared("decomposition", true, ideals_equal(lhs, meet, TermOrder::LexRowMajor)));

    bool contained = true;
    for (auto &c : components)
      for (const auto &gen : lhs.generators()) contained = contained && c.contains(gen, TermOrder::LexRowMajor);
    inv.push_back(compared("containment", true, contained));
  } else {
    std::string reason = j ? cap_reason("decomposition", vars, options.decomposition_max_vars)
                           : groebner_skip;
    inv.push_back(skipped("decomposition", true, reason));
    inv.push_back(skipped("containment", true, reason));
  }

  if (spec.n() <= options.cut_set_cap) {
    StageTimer t(report.timing_ms, "cutsets");
    std::vector<VertexSet> found;
    for (auto &c : cut_sets(g, options.cut_set_cap)) found.push_back(c.vertices);
    inv.push_back(compared("cutSets", vertex_sets_json(pred.cut_sets), vertex_sets_json(found)));
  } else {
    inv.push_back(skipped("cutSets", vertex_sets_json(pred.cut_sets),
                          "cut set cap exceeded: " + std::to_string(spec.n()) + " vertices"));
  }

  {
    StageTimer t(report.timing_ms, "konig");
    KonigCheck kc = konig_check(spec);
    Json expected = {{"height", kc.height}, {"length", kc.height}, {"valid", true}, {"coprime", true}};
    Json got = {{"height", kc.height},
                {"length", kc.path.length()},
                {"valid", kc.path_valid},
                {"coprime", kc.initial_terms_coprime}};
    inv.push_back(compared("konig", expected, got));
  }

  for (std::uint32_t p : options.extra_primes) {
    const std::string suffix = "@" + std::to_string(p);
    if (vars > options.groebner_max_vars || vars > options.hochster_max_vars) {
      inv.push_back(skipped("depth" + suffix, pred.depth, "cap exceeded"));
      inv.push_back(skipped("reg" + suffix, pred.reg, "cap exceeded"));
      continue;
    }
    StageTimer t(report.timing_ms, "extra-primes");
    Ideal jp = generalized_bei(spec.m(), g, p, options.order);
    auto in_p = initial_ideal(jp.groebner(options.order));
    if (!is_squarefree(in_p)) {
      inv.push_back(skipped("depth" + suffix, pred.depth, "squarefree-check-failed"));
      inv.push_back(skipped("reg" + suffix, pred.reg, "squarefree-check-failed"));
      continue;
    }
    auto bt = betti_table(in_p, p, options.hochster_max_vars, options.betti_threads);
    inv.push_back(compared("depth" + suffix, pred.depth, bt.depth()));
    inv.push_back(compared("reg" + suffix, pred.reg, bt.regularity()));
  }
  return report;
}

std::vector<InvariantReport> sweep(std::span<const PartiteSpec> specs, const VerifyOptions &options,
                                   int threads) {
  std::vector<InvariantReport> out(specs.size());
  threads = std::max(1, std::min<int>(threads, static_cast<int>(specs.size())));
  if (threads <= 1) {
    for (std::size_t i = 0; i < specs.size(); ++i) out[i] = verify(specs[i], options);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(specs.size());
  {
    std::vector<std::jthread> workers;
    for (int t = 0; t < threads; ++t) {
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < specs.size(); i = next++) {
          try {
            out[i] = verify(specs[i], options);
          } catch (...) {
            errors[i] = std::current_exception();
          }
        }
      });
    }
  }
  for (auto &e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

SweepSummary summarize(std::span<const InvariantReport> reports) {
  SweepSummary s;
  for (const auto &r : reports)
    for (const auto &rec : r.invariants) {
      switch (rec.status) {
        case Status::Match: ++s.match; break;
        case Status::Mismatch: ++s.mismatch; break;
        case Status::Skipped: ++s.skipped; break;
      }
    }
  return s;
}

namespace {

void partitions(int remaining, int min_part, std::vector<int> &cur, std::vector<std::vector<int>> &out) {
  if (remaining == 0) {
    if (cur.size() >= 2) out.push_back(cur);
    return;
  }
  for (int p = min_part; p <= remaining; ++p) {
    cur.push_back(p);
    partitions(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<PartiteSpec> enumerate_specs(int max_m, int max_n) {
  std::vector<PartiteSpec> out;
  for (int m = 2; m <= max_m; ++m)
    for (int n = 2; n <= max_n; ++n) {
      std::vector<std::vector<int>> parts;
      std::vector<int> cur;
      partitions(n, 1, cur, parts);
      for (auto &p : parts) out.emplace_back(m, p);
    }
  return out;
}

}  // namespace gbei
