#pragma once

#include <vector>

#include "downup/field.hpp"

namespace downup {

// Dense univariate polynomial over a number field, low degree first.
class KPoly {
 public:
  explicit KPoly(const NumberField& field) : field_(field) {}
  KPoly(const NumberField& field, std::vector<FieldElement> coeffs);

  const NumberField& field() const { return field_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<FieldElement>& coeffs() const { return c_; }
  FieldElement coeff(int i) const;
  const FieldElement& leading() const { return c_.back(); }

  friend KPoly operator+(const KPoly& a, const KPoly& b);
  friend KPoly operator-(const KPoly& a, const KPoly& b);
  friend KPoly operator*(const KPoly& a, const KPoly& b);
  friend bool operator==(const KPoly& a, const KPoly& b);

  FieldElement eval(const FieldElement& t) const;
  KPoly derivative() const;
  KPoly monic() const;
  // p(X + c).
  KPoly shift(const FieldElement& c) const;

  std::string to_string(const std::string& var = "X") const;

 private:
  void trim();
  NumberField field_;
  std::vector<FieldElement> c_;
};

std::pair<KPoly, KPoly> divmod(const KPoly& a, const KPoly& b);
KPoly gcd(const KPoly& a, const KPoly& b);

// Norm to Q[X]: the product of the conjugates of p under the embeddings of K.
QPoly norm(const KPoly& p);

// Splitting data for the squarefree part of p over its field.
struct FieldRoots {
  std::vector<FieldElement> roots;   // distinct roots in K, canonically sorted
  std::vector<KPoly> nonlinear;      // monic K-irreducible factors of degree >= 2
};
// Factors the squarefree part of p over K (Trager's norm method).
FieldRoots roots_in_field(const KPoly& p);

}  // namespace downup
