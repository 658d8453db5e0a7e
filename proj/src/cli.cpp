#include "gbei/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "gbei/report.hpp"

namespace gbei {

namespace {

class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

std::uint32_t default_prime(std::ostream &err) {
  if (const char *env = std::getenv("GBEI_PRIME")) {
    try {
      auto p = std::stoul(env);
      if (is_prime(static_cast<std::uint32_t>(p))) return static_cast<std::uint32_t>(p);
    } catch (const std::exception &) {
    }
    err << "warning: ignoring GBEI_PRIME='" << env << "' (not a prime)\n";
  }
  return kDefaultPrime;
}

std::vector<int> parse_parts(const std::string &text, std::ostream &err) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception &) {
      throw UsageError("--parts: '" + item + "' is not an integer");
    }
    if (used != item.size() || v < 1) throw UsageError("--parts: '" + item + "' is not a positive integer");
    parts.push_back(v);
  }
  if (parts.size() < 2) throw UsageError("--parts needs at least two comma-separated sizes");
  if (!std::is_sorted(parts.begin(), parts.end())) {
    std::sort(parts.begin(), parts.end());
    err << "warning: parts reordered ascending\n";
  }
  return parts;
}

std::vector<std::uint32_t> parse_primes(const std::vector<std::uint32_t> &primes) {
  for (auto p : primes)
    if (!is_prime(p)) throw UsageError(std::to_string(p) + " is not prime");
  return primes;
}

void emit(const Json &doc, const std::string &path, std::ostream &out) {
  if (path.empty()) {
    out << doc.dump(2) << '\n';
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open output file " + path);
  f << doc.dump(2) << '\n';
}

struct CommonArgs {
  int m = 2;
  std::string parts;
  std::uint32_t prime = kDefaultPrime;
  std::string order = "lex-row-major";
  int groebner_cap = 18;
  int hochster_cap = kDefaultHochsterCap;
  int decomposition_cap = 18;
  std::string output;
  std::vector<std::uint32_t> extra_primes;
  int threads = 1;
};

void add_spec_options(CLI::App *cmd, CommonArgs &a) {
  cmd->add_option("--m", a.m, "number of rows (K_m)")->required()->check(CLI::Range(2, 32));
  cmd->add_option("--parts", a.parts, "comma-separated part sizes, e.g. 1,2,3")->required();
}

void add_oracle_options(CLI::App *cmd, CommonArgs &a) {
  cmd->add_option("--prime", a.prime, "field characteristic");
  cmd->add_option("--order", a.order, "lex-row-major | lex-column-major");
  cmd->add_option("--groebner-max-vars", a.groebner_cap, "skip Groebner stages above this many variables");
  cmd->add_option("--hochster-max-vars", a.hochster_cap, "skip Betti stages above this many variables");
  cmd->add_option("--decomposition-max-vars", a.decomposition_cap,
                  "skip the intersection check above this many variables");
  cmd->add_option("--extra-primes", a.extra_primes, "recompute depth/reg over these primes")
      ->delimiter(',');
  cmd->add_option("--threads", a.threads, "worker threads")->check(CLI::Range(1, 256));
}

VerifyOptions to_options(const CommonArgs &a) {
  if (!is_prime(a.prime)) throw UsageError(std::to_string(a.prime) + " is not prime");
  VerifyOptions o;
  o.prime = a.prime;
  o.order = term_order_from_string(a.order);
  o.groebner_max_vars = a.groebner_cap;
  o.hochster_max_vars = a.hochster_cap;
  o.decomposition_max_vars = a.decomposition_cap;
  o.extra_primes = parse_primes(a.extra_primes);
  o.betti_threads = 1;
  return o;
}

}  // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"Invariants of generalized binomial edge ideals of complete multipartite graphs"};
  app.require_subcommand(1);

  CommonArgs a;
  a.prime = default_prime(err);
  bool char_zero = false;
  int max_m = 3, max_n = 4;
  std::string graph_path;
  int cut_cap = kDefaultCutSetCap;

  auto *predict_cmd = app.add_subcommand("predict", "closed-form invariants as JSON");
  add_spec_options(predict_cmd, a);
  predict_cmd->add_flag("--char-zero", char_zero, "report cd as the characteristic-zero interval");
  predict_cmd->add_option("--output", a.output, "write JSON here instead of stdout");

  auto *verify_cmd = app.add_subcommand("verify", "compare predictions with the exact oracle");
  add_spec_options(verify_cmd, a);
  add_oracle_options(verify_cmd, a);
  verify_cmd->add_option("--output", a.output, "write JSON here instead of stdout");

  auto *sweep_cmd = app.add_subcommand("sweep", "verify every spec with m <= max-m, n <= max-n");
  sweep_cmd->add_option("--max-m", max_m, "largest m")->required()->check(CLI::Range(2, 32));
  sweep_cmd->add_option("--max-n", max_n, "largest number of vertices")->required()->check(CLI::Range(2, 64));
  add_oracle_options(sweep_cmd, a);
  sweep_cmd->add_option("--output", a.output, "write JSON here instead of stdout");

  auto *cut_cmd = app.add_subcommand("cutsets", "sets with the cut point property of a graph");
  cut_cmd->add_option("--graph", graph_path, "JSON file {\"n\": int, \"edges\": [[u,v],...]}")
      ->required();
  cut_cmd->add_option("--cap", cut_cap, "largest graph order to enumerate");
  cut_cmd->add_option("--output", a.output, "write JSON here instead of stdout");

  auto *hilbert_cmd = app.add_subcommand("hilbert", "predicted vs computed Hilbert series");
  add_spec_options(hilbert_cmd, a);
  add_oracle_options(hilbert_cmd, a);

  auto *groebner_cmd = app.add_subcommand("groebner", "reduced Groebner basis of J_{K_m,G}");
  add_spec_options(groebner_cmd, a);
  add_oracle_options(groebner_cmd, a);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*predict_cmd) {
      PartiteSpec spec(a.m, parse_parts(a.parts, err));
      emit(to_json(predict(spec, char_zero)), a.output, out);
      return kExitOk;
    }
    if (*verify_cmd) {
      PartiteSpec spec(a.m, parse_parts(a.parts, err));
      auto options = to_options(a);
      options.betti_threads = a.threads;
      auto report = verify(spec, options);
      emit(to_json(report), a.output, out);
      return report.has_mismatch() ? kExitMismatch : kExitOk;
    }
    if (*sweep_cmd) {
      auto specs = enumerate_specs(max_m, max_n);
      auto reports = sweep(specs, to_options(a), a.threads);
      Json doc;
      Json list = Json::array();
      bool mismatch = false;
      for (const auto &r : reports) {
        list.push_back(to_json(r));
        mismatch = mismatch || r.has_mismatch();
      }
      doc["reports"] = list;
      doc["summary"] = to_json(summarize(reports));
      emit(doc, a.output, out);
      return mismatch ? kExitMismatch : kExitOk;
    }
    if (*cut_cmd) {
      std::ifstream f(graph_path);
      if (!f) throw UsageError("cannot read graph file " + graph_path);
      Json input;
      try {
        input = Json::parse(f);
      } catch (const nlohmann::json::parse_error &e) {
        throw UsageError(std::string("graph file is not valid JSON: ") + e.what());
      }
      SimpleGraph g = graph_from_json(input);
      Json doc{{"n", g.order()}, {"cutSets", to_json(cut_sets(g, cut_cap))}};
      emit(doc, a.output, out);
      return kExitOk;
    }
    if (*hilbert_cmd) {
      PartiteSpec spec(a.m, parse_parts(a.parts, err));
      auto options = to_options(a);
      Json doc{{"spec", {{"m", spec.m()}, {"parts", spec.parts()}}},
               {"predicted", to_json(predicted_hilbert(spec))}};
      bool mismatch = false;
      if (spec.m() * spec.n() <= options.groebner_max_vars) {
        Ideal j = generalized_bei(spec.m(), complete_multipartite(spec), options.prime, options.order);
        auto computed = hilbert_series(initial_ideal(j.groebner(options.order)));
        doc["computed"] = to_json(computed);
        mismatch = !(computed == predicted_hilbert(spec));
        doc["status"] = mismatch ? "mismatch" : "match";
      } else {
        doc["computed"] = nullptr;
        doc["status"] = "skipped";
      }
      emit(doc, "", out);
      return mismatch ? kExitMismatch : kExitOk;
    }
    if (*groebner_cmd) {
      PartiteSpec spec(a.m, parse_parts(a.parts, err));
      auto options = to_options(a);
      if (spec.m() * spec.n() > options.groebner_max_vars)
        throw UsageError("instance exceeds --groebner-max-vars");
      Ideal j = generalized_bei(spec.m(), complete_multipartite(spec), options.prime, options.order);
      const auto &gb = j.groebner(options.order);
      Json basis = Json::array();
      for (const auto &g : gb) basis.push_back(g.to_string());
      auto in = initial_ideal(gb);
      Json doc{{"spec", {{"m", spec.m()}, {"parts", spec.parts()}}},
               {"order", to_string(options.order)},
               {"prime", options.prime},
               {"basis", basis},
               {"squarefree", is_squarefree(in)}};
      emit(doc, "", out);
      return kExitOk;
    }
  } catch (const UsageError &e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SizeLimitError &e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument &e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception &e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace gbei
