#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "downup/algebra.hpp"
#include "downup/matrix.hpp"

namespace downup {

// lambda_n = alpha lambda_{n-1} + beta lambda_{n-2} + gamma, lambda_{-1} = 0,
// lambda_0 = lambda, together with lambda_n = P_n lambda + Q_n.
struct LambdaSeq {
  std::vector<FieldElement> values, P, Q;  // indices 0..n
};
LambdaSeq lambda_seq(const Params& p, const FieldElement& lambda, int n);

// lambda_n for A_eta in the form c1 + c2 eta^n + gamma n (1 - eta)^{-1}.
// Requires alpha + beta = 1 and eta != 1.
FieldElement lambda_closed_form(const Params& p, const FieldElement& lambda, int n);

// Least k in [0, bound) with lambda_k = 0.
std::optional<int> minimal_zero_index(const Params& p, const FieldElement& lambda, int bound);

// Highest weights of the simple modules of dimension n.
struct SimplesOfDim {
  std::vector<FieldElement> weights;
  // Every lambda outside `excluded` qualifies (P_{n-1} = Q_{n-1} = 0).
  bool all_lambda = false;
  std::vector<FieldElement> excluded;
};
SimplesOfDim simples_of_dim(const Params& p, int n);

// Values of (w1, w2) at the point (a, b).
Point w_coordinates(const WPair& w, const Point& pt);

// Least period of the orbit of the point with w-coordinates (a1, a2), if finite.
std::optional<int> orbit_finite_condition(const Params& p, const FieldElement& a1, const FieldElement& a2);

// The orbit of pt under point transport when it returns within bound steps.
std::optional<std::vector<Point>> orbit_iterate(const Params& p, const Point& pt, int bound);

AlgebraType algebra_type(const Params& p);

enum class IsoBranch { SameParams, SwappedParams, TypeMismatch, ConditionFail };
std::string to_string(IsoBranch b);

struct IsoVerdict {
  bool answer;
  IsoBranch branch;
  std::string details;
};
IsoVerdict are_isomorphic(const Params& p, const Params& q);

struct TypeCInvariant {
  Matrix matrix;
  AlgebraElement w1, w2;  // normal elements of A
};
// Throws NotTypeC, FieldNotSplit.
TypeCInvariant typec_invariant(const Params& p);

bool xmn_member(const FieldElement& eta, int m, int n);

enum class SemisimpleAnswer { Semisimple, NotSemisimple, NoObstructionUpToBound, OutOfTheoremScope };
std::string to_string(SemisimpleAnswer a);

struct SemisimplicityVerdict {
  SemisimpleAnswer answer;
  std::optional<std::pair<int, int>> witness;  // (m, n) with m > n
  int bound;
};
inline constexpr int kDefaultOrbitBound = 24;
inline constexpr int kDefaultZeroBound = 64;
inline constexpr int kDefaultXmnBound = 64;
// Throws NotTypeD.
SemisimplicityVerdict semisimplicity_verdict(const Params& p, int bound = kDefaultXmnBound);

struct VermaStructure {
  std::vector<int> zeros;  // k <= bound with lambda_{k-1} = 0
  int length;              // zeros + 1, the last factor being the infinite tail
  int bound;
};
VermaStructure verma_structure(const Params& p, const FieldElement& lambda, int bound = kDefaultZeroBound);

}  // namespace downup
