#include "doctest.h"
#include "gbei/report.hpp"
#include "gbei/verifier.hpp"

#include <random>

using namespace gbei;

namespace {

void check_all_match(const InvariantReport &r) {
  for (const auto &rec : r.invariants) {
    CAPTURE(rec.name);
    if (rec.name == "cd")
      CHECK(rec.status == Status::Skipped);
    else
      CHECK(rec.status == Status::Match);
  }
}

Monomial mono(std::initializer_list<int> vars) {
  Monomial m;
  for (int v : vars) m = m * Monomial::variable(v);
  return m;
}

}  // namespace

TEST_CASE("star K_{1,2} with two rows") {
  auto r = verify(PartiteSpec(2, {1, 2}));
  check_all_match(r);
  CHECK(r.squarefree);
  CHECK(r.find("dim")->computed == 4);
  CHECK(r.find("depth")->computed == 4);
  CHECK(r.find("reg")->computed == 2);
  CHECK(r.find("mult")->computed == 4);
  CHECK(r.find("multTable")->computed == 4);
  CHECK(r.find("cd")->reason == "cohomological dimension is predicted only");
  CHECK(r.find("nonexistent") == nullptr);
}

TEST_CASE("star K_{1,3} with three rows") {
  auto r = verify(PartiteSpec(3, {1, 3}));
  check_all_match(r);
  CHECK(r.find("reg")->computed == 3);
  CHECK(r.find("depth")->computed == 6);
  CHECK(r.find("dim")->computed == 9);
}

TEST_CASE("tripartite K_{1,1,2}") {
  auto r = verify(PartiteSpec(2, {1, 1, 2}));
  check_all_match(r);
  CHECK(r.find("dim")->computed == 5);
  CHECK(r.find("depth")->computed == 4);
  CHECK(r.find("reg")->computed == 2);
  CHECK(r.find("cutSets")->computed == Json::parse("[[], [1, 2]]"));
  CHECK(r.find("multTable") == nullptr);
}

TEST_CASE("extra primes and the column-major order") {
  VerifyOptions o;
  o.extra_primes = {2, 3};
  auto r = verify(PartiteSpec(2, {2, 2}), o);
  check_all_match(r);
  CHECK(r.find("depth@2") != nullptr);
  CHECK(r.find("reg@3") != nullptr);

  VerifyOptions col;
  col.order = TermOrder::LexColumnMajor;
  auto c = verify(PartiteSpec(3, {1, 2}), col);
  check_all_match(c);
  CHECK(c.order == "lex-column-major");
}

TEST_CASE("stages above their caps are skipped") {
  auto r = verify(PartiteSpec(4, {4, 4}));
  CHECK_FALSE(r.has_mismatch());
  for (const char *name : {"dim", "depth", "reg", "hilbert", "mult", "decomposition"}) {
    CAPTURE(name);
    REQUIRE(r.find(name) != nullptr);
    CHECK(r.find(name)->status == Status::Skipped);
    CHECK(r.find(name)->computed.is_null());
    CHECK_FALSE(r.find(name)->predicted.is_null());
  }
  CHECK(r.find("cutSets")->status == Status::Match);
  CHECK(r.find("konig")->status == Status::Match);

  VerifyOptions tight;
  tight.hochster_max_vars = 5;
  auto t = verify(PartiteSpec(2, {1, 2}), tight);
  CHECK(t.find("depth")->status == Status::Skipped);
  CHECK(t.find("dim")->status == Status::Match);
}

TEST_CASE("largest coprime subsets") {
  std::vector<Monomial> disjoint{mono({0, 1}), mono({2, 3}), mono({4, 5})};
  CHECK(max_coprime_subset(disjoint) == 3);
  std::vector<Monomial> triangle{mono({0, 1}), mono({1, 2}), mono({0, 2})};
  CHECK(max_coprime_subset(triangle) == 1);
  CHECK(max_coprime_subset(std::vector<Monomial>{}) == 0);

  auto j = generalized_bei(3, complete_multipartite(PartiteSpec(3, {2, 2})));
  auto terms = generator_initial_terms(j, TermOrder::LexRowMajor);
  CHECK(terms.size() == 12);
  // blocks {1,2},{3,4}: every leading term uses one of x11, x12, x21, x22
  CHECK(max_coprime_subset(terms) == 4);

  auto profile = coprime_profile(3, complete_multipartite(PartiteSpec(3, {2, 2})));
  CHECK(profile.min == 4);
  CHECK(profile.max == 5);
  CHECK(profile.max < predict(PartiteSpec(3, {2, 2})).height);
  // alternating blocks {1,3},{2,4}, i.e. the 4-cycle 1-2-3-4
  auto best = relabel(complete_multipartite(PartiteSpec(3, {2, 2})), profile.best_labeling);
  CHECK(best.edges() == std::vector<std::pair<Vertex, Vertex>>{{1, 2}, {1, 4}, {2, 3}, {3, 4}});
  CHECK_THROWS_AS(coprime_profile(2, SimpleGraph::complete(9)), SizeLimitError);
}

TEST_CASE("coprime subset size is bounded and monotone under extension") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> var(0, 11), len(1, 3);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Monomial> list;
    int previous = 0;
    for (int k = 0; k < 14; ++k) {
      Monomial m;
      for (int l = len(rng); l > 0; --l) m = m * Monomial::variable(var(rng));
      list.push_back(m);
      int now = max_coprime_subset(list);
      CHECK(now >= previous);
      CHECK(now <= static_cast<int>(list.size()));
      previous = now;
    }
  }
}

TEST_CASE("classical Konig checks") {
  auto star = konig_check(PartiteSpec(2, {1, 3}));
  CHECK(star.height == 2);
  CHECK(star.path.vertices == VertexSet{2, 1, 3});
  CHECK(star.path_valid);
  CHECK(star.initial_terms_coprime);

  auto square = konig_check(PartiteSpec(2, {2, 2}));
  CHECK(square.height == 3);
  CHECK(square.path_valid);
  CHECK(square.initial_terms_coprime);
  REQUIRE(square.interleaved_sequence_valid.has_value());
  CHECK_FALSE(*square.interleaved_sequence_valid);

  auto k3 = konig_check(PartiteSpec(2, {1, 1, 1}));
  CHECK(k3.height == 2);
  CHECK(k3.path.vertices.size() == 3);
  CHECK(k3.path_valid);

  CHECK(konig_check(PartiteSpec(5, {2, 2})).height == 3);
}

TEST_CASE("sweeps") {
  CHECK(sweep(std::vector<PartiteSpec>{}).empty());
  CHECK(summarize(std::vector<InvariantReport>{}).match == 0);

  auto specs = enumerate_specs(3, 4);
  CHECK(specs.size() == 14);
  auto serial = sweep(specs);
  auto parallel = sweep(specs, {}, 4);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].m == specs[i].m());
    CHECK(to_json(serial[i], false).dump() == to_json(parallel[i], false).dump());
    CHECK_FALSE(serial[i].has_mismatch());
  }
  auto s = summarize(serial);
  CHECK(s.mismatch == 0);
  CHECK(s.match > 0);
  CHECK(s.skipped >= static_cast<int>(specs.size()));

  auto over = sweep(std::vector<PartiteSpec>{PartiteSpec(4, {4, 4})});
  CHECK(over.size() == 1);
  CHECK(over[0].find("hilbert")->status == Status::Skipped);
}

TEST_CASE("reports are deterministic") {
  PartiteSpec spec(2, {2, 3});
  auto a = to_json(verify(spec), false).dump();
  auto b = to_json(verify(spec), false).dump();
  CHECK(a == b);
  auto j = Json::parse(a);
  CHECK(j["timingMs"].empty());
  CHECK(j["spec"]["parts"] == Json::parse("[2, 3]"));
  CHECK(j["order"] == "lex-row-major");
  CHECK(j["prime"] == 32003);
  CHECK(to_json(predict(spec)).dump() == to_json(predict(spec)).dump());
}

TEST_CASE("json encodings") {
  CHECK(to_json(CdPrediction{CdPrediction::Kind::Exact, 7, 7}) == Json::parse(R"({"exact": 7})"));
  CHECK(to_json(CdPrediction{CdPrediction::Kind::Interval, 7, 9}) ==
        Json::parse(R"({"lower": 7, "upper": 9})"));
  CHECK(to_json(CdPrediction{}) == Json::parse(R"({"unsupported": true})"));
  CHECK(to_json(HilbertSeries({1, 1}, 3)) == Json::parse(R"({"numerator": [1, 1], "pole": 3})"));

  auto g = graph_from_json(Json::parse(R"({"n": 4, "edges": [[1, 2], [1, 3], [1, 4]]})"));
  CHECK(g.edge_count() == 3);
  CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"edges": []})")), std::invalid_argument);
  CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"n": 3, "edges": [[1, 1]]})")), std::invalid_argument);
  CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"n": 3, "edges": [[1]]})")), std::invalid_argument);
}
