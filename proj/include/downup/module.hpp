#pragma once

#include <string>
#include <utility>
#include <vector>

#include "downup/algebra.hpp"
#include "downup/matrix.hpp"

namespace downup {

enum class ModuleLabel { VermaQuotient, Simple, Orbit, Dual, Raw };
std::string to_string(ModuleLabel l);
ModuleLabel parse_module_label(const std::string& s);

// Left module on K^dim; D and U act on coordinate columns.
struct FDModule {
  Params params;
  int dim;
  Matrix D, U;
  ModuleLabel label;
};

// Checks shapes and field; does not check the relations.
FDModule make_module(const Params& p, Matrix D, Matrix U, ModuleLabel label = ModuleLabel::Raw);

struct RelationReport {
  Matrix residual1;  // D^2 U - a DUD - b UD^2 - g D
  Matrix residual2;  // D U^2 - a UDU - b U^2 D - g U
  bool ok;
};
RelationReport verify_relations(const FDModule& m);

// Basis v_0..v_{n-1}; U shifts v_i to v_{i+1}, D sends v_i to lambda_{i-1} v_{i-1}.
// Throws NotSubmoduleBoundary unless lambda_{n-1} = 0.
FDModule verma_quotient(const Params& p, const FieldElement& lambda, int n);

// L(lambda) at the least zero index; throws NoZeroWithinBound.
FDModule simple_module(const Params& p, const FieldElement& lambda, int bound);

// M_P on e_i = 1 + sigma^i(P): D e_i = e_{i+1 mod n}, U e_i = a_{i-1} e_{i-1}.
// orbit[i] is the point of sigma^i(P); throws NotAnOrbit.
FDModule orbit_module(const Params& p, const Point& point, const std::vector<Point>& orbit);

// D' = U^T, U' = D^T.
FDModule dual_module(const FDModule& m);

class EigenvaluesNotInField : public Error {
 public:
  EigenvaluesNotInField(KPoly factor, const std::string& what)
      : Error(ErrorKind::EigenvaluesNotInField, what), factor_(std::move(factor)) {}
  const KPoly& factor() const { return factor_; }

 private:
  KPoly factor_;
};

struct Weight {
  FieldElement du, ud;  // eigenvalues of DU and UD
  int multiplicity;
  std::vector<std::vector<FieldElement>> basis;
};

struct WeightData {
  std::vector<Weight> weights;  // sorted by first basis vector's pivot position
  bool is_weight_module;        // multiplicities sum to dim
};
WeightData weight_decomposition(const FDModule& m);

// Dimension of the unital algebra generated by D and U.
int generated_algebra_dim(const FDModule& m);
// Burnside: the generated algebra is all of M_n(K).
bool is_simple(const FDModule& m);

struct FiltrationReport {
  int r, s;
  int ker_d;         // dim M_r = ker D^{r+1}
  int ker_u;         // dim M^s = ker U^{s+1}
  int intersection;  // dim M_r^s
  std::vector<int> level_dims;  // dim M(t) for t = 0..r+s
  bool containments_ok;
};
FiltrationReport torsion_filtration(const FDModule& m, int r, int s);

}  // namespace downup
