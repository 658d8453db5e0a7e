#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gbei/graph.hpp"
#include "gbei/groebner.hpp"
#include "gbei/hilbert.hpp"

namespace gbei {

// Ideal generated by x_{ik} x_{jl} - x_{il} x_{jk} for every edge {i,j} of
// `rows_graph` and {k,l} of `cols_graph` (i<j, k<l), ordered by row edge
// then column edge.
Ideal pair_ideal(const SimpleGraph &rows_graph, const SimpleGraph &cols_graph,
                 const RingDescriptor &ring, TermOrder order = TermOrder::LexRowMajor);

// J_{K_m,G} in K[x_{ij} : i in [m], j in [n]].
Ideal generalized_bei(int m, const SimpleGraph &g, std::uint32_t prime = kDefaultPrime,
                      TermOrder order = TermOrder::LexRowMajor);

// (x_ij : j in T) plus the determinantal ideal of the clique on every
// connected component of G minus T.
Ideal prime_component(int m, const SimpleGraph &g, const VertexSet &t,
                      std::uint32_t prime = kDefaultPrime, TermOrder order = TermOrder::LexRowMajor);

struct CdPrediction {
  enum class Kind { Exact, Interval, Unsupported };
  Kind kind = Kind::Unsupported;
  int lower = 0;
  int upper = 0;

  friend bool operator==(const CdPrediction &, const CdPrediction &) = default;
};

struct ComponentDescriptor {
  // "determinantal": 2-minors of the m x |columns| submatrix;
  // "variables": all x_ij with j in columns.
  std::string kind;
  VertexSet columns;

  friend bool operator==(const ComponentDescriptor &, const ComponentDescriptor &) = default;
};

struct Prediction {
  int m = 0;
  std::vector<int> parts;
  int dim = 0;
  int depth = 0;
  int reg = 0;
  HilbertSeries hilbert;
  std::int64_t mult = 0;
  // Closed case table, available for two parts with a part of size >= 2.
  std::optional<std::int64_t> mult_table;
  CdPrediction cd;
  int height = 0;         // mn - dim
  PathWitness konig;      // path in G of length 2n - max{n+1, 2 n_r}
  std::vector<ComponentDescriptor> components;
  std::vector<VertexSet> cut_sets;
};

// Sum_i C(m-1,i) C(c-1,i) t^i / (1-t)^{m+c-1}: the m x c generic 2-minor quotient.
HilbertSeries determinantal_hilbert(int m, int c);

HilbertSeries predicted_hilbert(const PartiteSpec &spec);

// Two-part multiplicity case table; requires r = 2 and n_2 >= 2.
std::int64_t bipartite_multiplicity_table(int m, int n1, int n2);

// Classical J_G of K_{n1,n2} (m = 2).
int classical_bipartite_depth(int n1, int n2);
HilbertSeries classical_bipartite_hilbert(int n1, int n2);
std::int64_t classical_bipartite_multiplicity(int n1, int n2);

CdPrediction predicted_cd(const PartiteSpec &spec, bool char_zero);

int predicted_dim(const PartiteSpec &spec);
int predicted_depth(const PartiteSpec &spec);
int predicted_reg(const PartiteSpec &spec);
std::vector<VertexSet> predicted_cut_sets(const PartiteSpec &spec);
std::vector<ComponentDescriptor> predicted_components(const PartiteSpec &spec);

Prediction predict(const PartiteSpec &spec, bool char_zero = false);

}  // namespace gbei
