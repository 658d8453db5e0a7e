// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "gbei/formulas.hpp"
#include "gbei/groebner.hpp"
#include "gbei/hilbert.hpp"
#include "gbei/hochster.hpp"
#include "gbei/report.hpp"
#include "gbei/verifier.hpp"

using namespace gbei;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void expect(bool cond, const std::string &what) {
    if (!cond) {
      ok = false;
      detail << " [failed: " << what << "]";
    }
  }
};

int failures = 0;

void criterion(int id, const std::string &title, double limit_s, const std::function<void(Outcome &)> &body) {
  Outcome o;
  auto start = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception &e) {
    o.ok = false;
    o.detail << " [exception: " << e.what() << "]";
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_s > 0 && secs >= limit_s) {
    o.ok = false;
    o.detail << " [time limit " << limit_s << " s exceeded]";
  }
  if (!o.ok) ++failures;
  std::printf("%s %2d  %-58s %8.3f s%s\n", o.ok ? "PASS" : "FAIL", id, title.c_str(), secs,
              o.detail.str().c_str());
  std::fflush(stdout);
}

int computed_int(const InvariantReport &r, const std::string &name) {
  const auto *rec = r.find(name);
  if (!rec || rec->status != Status::Match) return -1;
  return rec->computed.get<int>();
}

bool matches(const InvariantReport &r, const std::string &name) {
  const auto *rec = r.find(name);
  return rec && rec->status == Status::Match;
}

void expect_no_mismatch(Outcome &o, const InvariantReport &r) {
  for (const auto &rec : r.invariants)
    o.expect(rec.status != Status::Mismatch, rec.name + " mismatch");
}

std::vector<std::vector<int>> partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rem, int lo) {
    if (rem == 0) {
      if (cur.size() >= 2) out.push_back(cur);
      return;
    }
    for (int p = lo; p <= rem; ++p) {
      cur.push_back(p);
      rec(rem - p, p);
      cur.pop_back();
    }
  };
  rec(n, 1);
  return out;
}

// Three-case regularity value, written out independently of the library.
int three_case_reg(int m, int n, int nr) {
  if (m >= n) return n - 1;
  if (m > nr) return m - 1;
  return m;
}

std::vector<std::int64_t> brute_force_counts(const MonomialIdeal &ideal, int max_degree) {
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

}  // namespace

int main() {
  criterion(1, "K_{1,2}, m=2: invariants, decomposition, cut sets", 1.0, [](Outcome &o) {
    auto r = verify(PartiteSpec(2, {1, 2}));
    expect_no_mismatch(o, r);
    o.expect(computed_int(r, "dim") == 4, "dim 4");
    o.expect(computed_int(r, "depth") == 4, "depth 4");
    o.expect(computed_int(r, "reg") == 2, "reg 2");
    o.expect(computed_int(r, "mult") == 4, "mult 4");
    o.expect(matches(r, "decomposition"), "decomposition");
    o.expect(matches(r, "cutSets") && r.find("cutSets")->computed == Json::parse("[[], [1]]"),
             "cut sets {{}, {1}}");
  });

  criterion(2, "K_{2,2}, m=2: invariants and exact Hilbert series", 5.0, [](Outcome &o) {
    PartiteSpec spec(2, {2, 2});
    auto r = verify(spec);
    expect_no_mismatch(o, r);
    o.expect(computed_int(r, "dim") == 5, "dim 5");
    o.expect(computed_int(r, "depth") == 4, "depth 4");
    o.expect(computed_int(r, "reg") == 2, "reg 2");
    o.expect(computed_int(r, "mult") == 4, "mult 4");
    Ideal j = generalized_bei(2, complete_multipartite(spec));
    auto oracle = hilbert_series(initial_ideal(j.groebner(TermOrder::LexRowMajor)));
    o.expect(oracle == classical_bipartite_hilbert(2, 2), "bipartite series equals oracle");
    o.expect(matches(r, "hilbert"), "hilbert record");
    o.detail << " series " << oracle.to_string();
  });

  criterion(3, "K_{2,2}, m=3: invariants via Hochster over 2^12 subsets", 60.0, [](Outcome &o) {
    auto r = verify(PartiteSpec(3, {2, 2}));
    expect_no_mismatch(o, r);
    o.expect(r.squarefree, "squarefree initial ideal");
    o.expect(computed_int(r, "dim") == 6, "dim 6");
    o.expect(computed_int(r, "depth") == 5, "depth 5");
    o.expect(computed_int(r, "reg") == 2, "reg 2");
    o.expect(computed_int(r, "mult") == 12, "mult 12");
  });

  criterion(4, "K_{1,3}, m=3: reg = m, depth, dim", 60.0, [](Outcome &o) {
    auto r = verify(PartiteSpec(3, {1, 3}));
    expect_no_mismatch(o, r);
    o.expect(computed_int(r, "reg") == 3, "reg 3");
    o.expect(computed_int(r, "depth") == 6, "depth 6");
    o.expect(computed_int(r, "dim") == 9, "dim 9");
  });

  criterion(5, "K_{1,1,2}, m=2: invariants, decomposition, cut sets", 5.0, [](Outcome &o) {
    PartiteSpec spec(2, {1, 1, 2});
    auto r = verify(spec);
    expect_no_mismatch(o, r);
    o.expect(computed_int(r, "dim") == 5, "dim 5");
    o.expect(computed_int(r, "depth") == 4, "depth 4");
    o.expect(computed_int(r, "reg") == 2, "reg 2");
    o.expect(matches(r, "decomposition"), "J = J_{G~} cap A_3");
    Json t3 = spec.complement(3);
    o.expect(matches(r, "cutSets") && r.find("cutSets")->computed == Json::array({Json::array(), t3}),
             "cut sets {{}, T_3}");
  });

  criterion(6, "J_{K_3,K_{2,2}}: coprime leading terms 5 < height 6", 1.0, [](Outcome &o) {
    PartiteSpec spec(3, {2, 2});
    auto g = complete_multipartite(spec);
    auto profile = coprime_profile(3, g);
    int height = predict(spec).height;
    Ideal j = generalized_bei(3, g);
    int interval = max_coprime_subset(generator_initial_terms(j, TermOrder::LexRowMajor));
    o.expect(profile.max == 5, "maximum over labelings is 5");
    o.expect(height == 6, "height 6");
    o.expect(profile.max < height, "strictly below height");
    o.detail << " max " << profile.max << " (labelings " << profile.min << ".." << profile.max
             << ", interval blocks " << interval << "), height " << height;
  });

  criterion(7, "regularity sweep m<=5, n<=5, mn<=12", 0, [](Outcome &o) {
    int checked = 0;
    for (int m = 2; m <= 5; ++m)
      for (int n = 2; n <= 5; ++n) {
        if (m * n > 12) continue;
        for (const auto &parts : partitions(n)) {
          PartiteSpec spec(m, parts);
          auto r = verify(spec);
          std::string label = std::to_string(m) + ";" + Json(parts).dump();
          o.expect(matches(r, "reg"), "reg " + label);
          int expected = spec.all_ones() ? std::min(m - 1, spec.r() - 1)
                                         : three_case_reg(m, n, spec.largest_part());
          o.expect(computed_int(r, "reg") == expected, "three-case value " + label);
          ++checked;
        }
      }
    o.detail << " " << checked << " specs";
  });

  criterion(8, "Konig sweep m=2, n<=8", 0, [](Outcome &o) {
    int checked = 0;
    for (int n = 2; n <= 8; ++n)
      for (const auto &parts : partitions(n)) {
        auto k = konig_check(PartiteSpec(2, parts));
        std::string label = Json(parts).dump();
        o.expect(k.path_valid, "valid path " + label);
        o.expect(k.path.length() == 2 * n - std::max(n + 1, 2 * parts.back()), "length " + label);
        o.expect(k.initial_terms_coprime, "coprime " + label);
        ++checked;
      }
    o.detail << " " << checked << " graphs";
  });

  criterion(9, "property suites", 0, [](Outcome &o) {
    // Buchberger: unique reduced basis, S-polynomials reduce to zero
    std::mt19937 rng(31337);
    for (auto parts : {std::vector<int>{1, 2}, std::vector<int>{2, 2}, std::vector<int>{1, 1, 2},
                       std::vector<int>{1, 3}}) {
      for (int m = 2; m <= 3; ++m) {
        Ideal j = generalized_bei(m, complete_multipartite(PartiteSpec(m, parts)));
        auto gens = j.generators();
        auto ref = buchberger(gens);
        for (int t = 0; t < 3; ++t) {
          std::shuffle(gens.begin(), gens.end(), rng);
          o.expect(buchberger(gens) == ref, "basis independent of generator order");
        }
        for (std::size_t a = 0; a < ref.size(); ++a)
          for (std::size_t b = a + 1; b < ref.size(); ++b)
            o.expect(normal_form(s_polynomial(ref[a], ref[b]), ref).is_zero(), "S-polynomial reduces to 0");
      }
    }
    // homology
    constexpr std::uint32_t p = kDefaultPrime;
    SimplicialComplex full(6, {});
    auto faces = faces_by_size(full, 0b111111);
    for (std::size_t k = 0; k + 2 < faces.size(); ++k) {
      auto prod = multiply(boundary_matrix(faces[k + 1], faces[k], p),
                           boundary_matrix(faces[k + 2], faces[k + 1], p), p);
      o.expect(rank_mod_p(prod, p) == 0, "boundary squared is zero");
    }
    o.expect(reduced_homology_ranks(SimplicialComplex(4, {}), 0b1111, p) == std::vector<int>(5, 0),
             "simplex is acyclic");
    o.expect(reduced_homology_ranks(SimplicialComplex(3, {0b111}), 0b111, p) == std::vector<int>{0, 0, 1, 0},
             "circle has H_1 of rank 1");
    // Hilbert series vs monomial counting
    std::uniform_int_distribution<int> count(1, 6), power(1, 3), len(1, 3);
    for (int trial = 0; trial < 45; ++trial) {
      int nvars = 2 + trial % 9;
      std::uniform_int_distribution<int> var(0, nvars - 1);
      std::vector<Monomial> gens;
      for (int g = count(rng); g > 0; --g) {
        Monomial mono;
        for (int k = len(rng); k > 0; --k) mono = mono * Monomial::variable(var(rng), power(rng));
        gens.push_back(mono);
      }
      MonomialIdeal ideal(nvars, gens);
      o.expect(hilbert_series(ideal).expand(6) == brute_force_counts(ideal, 6), "series vs counting");
    }
    // multiplicity table vs N(1)
    for (int m = 2; m <= 6; ++m)
      for (int n1 = 1; n1 <= 6; ++n1)
        for (int n2 = std::max(n1, 2); n2 <= 6; ++n2)
          o.expect(bipartite_multiplicity_table(m, n1, n2) ==
                       multiplicity(predicted_hilbert(PartiteSpec(m, {n1, n2}))),
                   "table vs N(1) at " + std::to_string(m) + ";" + std::to_string(n1) + "," +
                       std::to_string(n2));
  });

  criterion(10, "cd predictor over m<=6, n<=8", 0, [](Outcome &o) {
    int checked = 0;
    for (int m = 2; m <= 6; ++m)
      for (int n = 2; n <= 8; ++n)
        for (const auto &parts : partitions(n)) {
          PartiteSpec spec(m, parts);
          if (spec.largest_part() < 2) {
            o.expect(predicted_cd(spec, false).kind == CdPrediction::Kind::Unsupported, "unsupported");
            continue;
          }
          int low = m * n - m - spec.n_s();
          auto exact = predicted_cd(spec, false);
          auto interval = predicted_cd(spec, true);
          o.expect(exact.kind == CdPrediction::Kind::Exact && exact.lower == low, "exact value");
          o.expect(interval.kind == CdPrediction::Kind::Interval && interval.lower == low &&
                       interval.upper == m * n - 3,
                   "interval");
          o.expect(interval.lower <= interval.upper, "lower <= upper");
          ++checked;
        }
    o.detail << " " << checked << " specs";
  });

  std::printf("%s: %d of 10 criteria failed\n", failures ? "FAILED" : "ALL PASSED", failures);
  return failures ? 1 : 0;
}
