#pragma once

#include <optional>
#include <vector>

#include "downup/classify.hpp"
#include "downup/module.hpp"

namespace downup {

// dim {phi : phi D_m = D_n phi, phi U_m = U_n phi}.
int hom_dim(const FDModule& m, const FDModule& n);

// Extensions 0 -> m -> E -> n -> 0 with E = [[D_m, F], [0, D_n]],
// [[U_m, G], [0, U_n]]: dim of cocycles (F, G) modulo coboundaries.
struct Ext1Data {
  int cocycle_dim;
  int coboundary_dim;
  int dim() const { return cocycle_dim - coboundary_dim; }
};
Ext1Data ext1_data(const FDModule& m, const FDModule& n);
int ext1_dim(const FDModule& m, const FDModule& n);

// Whether the off-diagonal blocks (F, G) are a coboundary.
bool is_coboundary(const FDModule& m, const FDModule& n, const Matrix& F, const Matrix& G);

struct ProbeSimple {
  int dim;
  FieldElement lambda;
};

struct ProbePair {
  int from, to;  // indices into ProbeReport::simples; ext1_dim(simples[from], simples[to])
  int ext1;
};

struct ProbeReport {
  std::vector<ProbeSimple> simples;
  std::vector<ProbePair> pairs;  // nonzero entries only
  int dim_bound;
  // False when some dimension has simples for all but finitely many lambda,
  // which cannot be enumerated.
  bool complete;
  std::optional<SemisimplicityVerdict> verdict;  // type d only
};
ProbeReport semisimplicity_probe(const Params& p, int dim_bound);

}  // namespace downup
