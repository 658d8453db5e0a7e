#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gbei/formulas.hpp"
#include "gbei/hochster.hpp"
#include "json.hpp"

namespace gbei {

struct VerifyOptions {
  std::uint32_t prime = kDefaultPrime;
  TermOrder order = TermOrder::LexRowMajor;
  int groebner_max_vars = 18;
  int hochster_max_vars = kDefaultHochsterCap;
  int decomposition_max_vars = 18;
  int cut_set_cap = kDefaultCutSetCap;
  // Further characteristics at which depth and regularity are recomputed.
  std::vector<std::uint32_t> extra_primes;
  int betti_threads = 1;
};

enum class Status { Match, Mismatch, Skipped };
std::string to_string(Status s);

struct InvariantRecord {
  std::string name;
  nlohmann::ordered_json predicted;
  nlohmann::ordered_json computed;  // null when skipped
  Status status = Status::Skipped;
  std::string reason;               // set when skipped
};

struct InvariantReport {
  int m = 0;
  std::vector<int> parts;
  std::string order;
  std::uint32_t prime = kDefaultPrime;
  std::vector<InvariantRecord> invariants;
  bool squarefree = false;
  std::map<std::string, double> timing_ms;

  const InvariantRecord *find(const std::string &name) const;
  bool has_mismatch() const;
};

InvariantReport verify(const PartiteSpec &spec, const VerifyOptions &options = {});

// Largest pairwise-coprime subset of `monomials` (exact branch and bound).
int max_coprime_subset(std::span<const Monomial> monomials);

// Leading monomials of the generators as given (not of a Groebner basis).
std::vector<Monomial> generator_initial_terms(const Ideal &ideal, TermOrder order);

// Largest pairwise-coprime subset of the generator leading terms of
// J_{K_m,G}, taken over every relabeling of the vertices of G.
struct CoprimeProfile {
  int min = 0;
  int max = 0;
  VertexSet best_labeling;  // image of vertex v is best_labeling[v-1]
};

// Throws SizeLimitError when G has more than `max_order` vertices.
CoprimeProfile coprime_profile(int m, const SimpleGraph &g, TermOrder order = TermOrder::LexRowMajor,
                               int max_order = 8);

struct KonigCheck {
  int height = 0;
  PathWitness path;
  bool path_valid = false;
  bool initial_terms_coprime = false;
  // Only for the traceable case: whether the interleaved u-sequence taken
  // literally is a path of G.
  std::optional<bool> interleaved_sequence_valid;
};

// Classical (m = 2) semantics regardless of spec.m().
KonigCheck konig_check(const PartiteSpec &spec);

struct SweepSummary {
  int match = 0;
  int mismatch = 0;
  int skipped = 0;
};

// Reports in input order; `threads` > 1 verifies specs concurrently.
std::vector<InvariantReport> sweep(std::span<const PartiteSpec> specs,
                                   const VerifyOptions &options = {}, int threads = 1);
SweepSummary summarize(std::span<const InvariantReport> reports);

// All (m; parts) with 2 <= m <= max_m, 2 <= n <= max_n and r >= 2.
std::vector<PartiteSpec> enumerate_specs(int max_m, int max_n);

}  // namespace gbei
