#pragma once

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "downup/field.hpp"

namespace downup {

// Element of R = K[x, y]; inside A(0) we have x = ud and y = du.
class BivarPoly {
 public:
  using Exponent = std::pair<int, int>;

  explicit BivarPoly(const NumberField& field) : field_(field) {}
  static BivarPoly constant(const FieldElement& c);
  static BivarPoly x(const NumberField& field);
  static BivarPoly y(const NumberField& field);
  // a*x + b*y + c
  static BivarPoly affine(const FieldElement& a, const FieldElement& b, const FieldElement& c);

  const NumberField& field() const { return field_; }
  const std::map<Exponent, FieldElement>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  FieldElement coeff(int i, int j) const;
  int total_degree() const;
  // True when only the monomials 1, x, y occur.
  bool is_affine() const { return total_degree() <= 1; }

  void add_term(int i, int j, const FieldElement& c);

  BivarPoly operator-() const;
  friend BivarPoly operator+(const BivarPoly& a, const BivarPoly& b);
  friend BivarPoly operator-(const BivarPoly& a, const BivarPoly& b);
  friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
  friend BivarPoly operator*(const FieldElement& s, const BivarPoly& a);
  friend bool operator==(const BivarPoly& a, const BivarPoly& b);
  friend bool operator!=(const BivarPoly& a, const BivarPoly& b) { return !(a == b); }

  BivarPoly pow(int e) const;
  FieldElement eval(const FieldElement& x, const FieldElement& y) const;
  // Substitutes polynomials for x and y.
  BivarPoly substitute(const BivarPoly& x_image, const BivarPoly& y_image) const;

  // spelling "xy" prints x, y; "ud" prints (ud), (du).
  std::string to_string(const std::string& spelling = "xy") const;

 private:
  NumberField field_;
  std::map<Exponent, FieldElement> terms_;
};

enum class CaseTag { Case1, Case2, Case3, Case4 };
enum class AlgebraType { a, b, c, d };
std::string to_string(CaseTag c);
std::string to_string(AlgebraType t);

// The triple (alpha, beta, gamma) with beta != 0 and its derived data. Copies
// share one immutable record.
class Params {
 public:
  // Throws BetaZero.
  static Params make(const FieldElement& alpha, const FieldElement& beta, const FieldElement& gamma);

  const NumberField& field() const;
  const FieldElement& alpha() const;
  const FieldElement& beta() const;
  const FieldElement& gamma() const;
  // eta = -beta
  const FieldElement& eta() const;
  CaseTag case_tag() const;
  AlgebraType type() const;
  // Roots of t^2 - alpha t - beta, absent when they lie outside the field.
  const std::optional<std::pair<FieldElement, FieldElement>>& roots() const;
  // Roots or throws FieldNotSplit.
  std::pair<FieldElement, FieldElement> split_roots() const;

  std::string to_string() const;

  friend bool operator==(const Params& a, const Params& b);
  friend bool operator!=(const Params& a, const Params& b) { return !(a == b); }

  struct Data;

 private:
  explicit Params(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
};

// Throws ParamsMismatch unless a == b.
void require_same(const Params& a, const Params& b);

enum class Direction { Forward, Inverse };

// A maximal ideal (x - a, y - b) of R, as its point (a, b).
using Point = std::pair<FieldElement, FieldElement>;

// sigma(x) = y, sigma(y) = alpha y + beta x + gamma, extended multiplicatively.
class LinearSigma {
 public:
  explicit LinearSigma(const Params& p);
  const Params& params() const { return p_; }
  const BivarPoly& image_x(Direction dir) const;
  const BivarPoly& image_y(Direction dir) const;
  BivarPoly apply(const BivarPoly& p, Direction dir) const;
  // sigma^k for any integer k.
  BivarPoly apply_power(const BivarPoly& p, int k) const;
  // The point of sigma(P) given the point of P.
  Point transport_point(const Point& pt) const;

 private:
  Params p_;
  BivarPoly fx_, fy_, ix_, iy_;
};

BivarPoly sigma_apply(const LinearSigma& s, const BivarPoly& p, Direction dir);

// w1, w2 bring sigma on span{1, x, y} to Jordan form:
// sigma(w_i) = sum_j jordan[i][j] w_j + shift[i].
struct WPair {
  BivarPoly w1, w2;
  std::array<std::array<FieldElement, 2>, 2> jordan;
  std::array<FieldElement, 2> shift;
  CaseTag case_tag;
};

// Throws FieldNotSplit in Case 1 when the roots are outside the field.
WPair canonical_w_pair(const Params& p);

// Element of A(alpha, beta, gamma) in graded normal form:
// sum_{n >= 0} d^n p_n(x, y) + sum_{n < 0} u^{-n} p_n(x, y), x = ud, y = du.
class AlgebraElement {
 public:
  explicit AlgebraElement(const Params& p) : params_(p) {}
  static AlgebraElement d(const Params& p);
  static AlgebraElement u(const Params& p);
  static AlgebraElement scalar(const Params& p, const FieldElement& c);
  static AlgebraElement homogeneous(const Params& p, int degree, const BivarPoly& coeff);

  const Params& params() const { return params_; }
  const std::map<int, BivarPoly>& components() const { return comp_; }
  BivarPoly component(int degree) const;
  bool is_zero() const { return comp_.empty(); }
  // Degree-0 constant, if the element is one.
  std::optional<FieldElement> as_scalar() const;

  std::string to_string(const std::string& spelling = "xy") const;

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);
  friend bool operator!=(const AlgebraElement& a, const AlgebraElement& b) { return !(a == b); }

 private:
  void add_component(int degree, const BivarPoly& p);
  Params params_;
  std::map<int, BivarPoly> comp_;
  friend AlgebraElement nf_add(const AlgebraElement&, const AlgebraElement&);
  friend AlgebraElement nf_scale(const FieldElement&, const AlgebraElement&);
  friend AlgebraElement nf_mul(const AlgebraElement&, const AlgebraElement&);
};

AlgebraElement nf_add(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement nf_sub(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement nf_scale(const FieldElement& s, const AlgebraElement& a);
AlgebraElement nf_mul(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement nf_pow(const AlgebraElement& a, int e);

// x_n = d^n u^n and y_n = u^n d^n, via the recursions
// x_n = sigma(x_{n-1} x), y_n = x sigma^{-1}(y_{n-1}); each is cross-checked
// against its product formula.
struct PowerSequences {
  BivarPoly x_n, y_n;
};
PowerSequences power_sequences(const Params& p, int n);

// sigma^n(x) in (x): the 1 and y coefficients vanish.
bool sigma_x_in_ideal(const Params& p, int n);
// sigma^{-n}(x) in (y): the 1 and x coefficients vanish.
bool sigma_inv_x_in_y_ideal(const Params& p, int n);

}  // namespace downup
