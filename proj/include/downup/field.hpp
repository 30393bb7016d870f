#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "downup/errors.hpp"
#include "downup/qpoly.hpp"

namespace downup {

class FieldElement;

// Q(theta) = Q[t]/(m(t)) for a monic irreducible m. Cheap to copy: the
// defining data is shared and immutable.
class NumberField {
 public:
  // Q presented as Q[t]/(t).
  NumberField();
  static NumberField rationals() { return NumberField(); }
  // Throws NotMonic, or Reducible carrying a nontrivial factor.
  static NumberField make(const QPoly& minpoly, std::string name = "t");
  static NumberField make(const std::vector<Rational>& minpoly, std::string name = "t");

  int degree() const;
  const QPoly& minpoly() const;
  const std::string& name() const;
  bool is_rational() const { return degree() == 1; }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement generator() const;
  FieldElement from_rational(const Rational& q) const;
  FieldElement from_int(long v) const;
  FieldElement from_coords(std::vector<Rational> coords) const;

  // Same defining polynomial (names are labels only).
  friend bool operator==(const NumberField& a, const NumberField& b);
  friend bool operator!=(const NumberField& a, const NumberField& b) { return !(a == b); }

  struct Data;

 private:
  explicit NumberField(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
  friend class FieldElement;
};

class FieldElement {
 public:
  FieldElement() : FieldElement(NumberField()) {}
  explicit FieldElement(const NumberField& field);

  const NumberField& field() const { return field_; }
  // Coordinates in the power basis 1, theta, ..., theta^(deg-1).
  const std::vector<Rational>& coords() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  // Throws InvalidInput unless is_rational().
  Rational to_rational() const;

  FieldElement operator-() const;
  FieldElement inv() const;
  FieldElement pow(long e) const;
  FieldElement& operator+=(const FieldElement& b);
  FieldElement& operator-=(const FieldElement& b);
  FieldElement& operator*=(const FieldElement& b);
  FieldElement& operator/=(const FieldElement& b);
  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
  friend FieldElement operator*(const Rational& s, FieldElement a);
  // Throws FieldMismatch across fields.
  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }
  // Total order on coordinates; only for canonical sorting, not a field order.
  friend bool coord_less(const FieldElement& a, const FieldElement& b);

  // "3/2", "t + 1", "-2*t^2 + 1/3", using the field's generator name.
  std::string to_string() const;

 private:
  void check_same(const FieldElement& b) const;
  NumberField field_;
  std::vector<Rational> c_;
  friend class NumberField;
};

bool coord_less(const FieldElement& a, const FieldElement& b);

// Parses a scalar expression over the field: rationals, the generator name,
// + - * / ^ (integer exponents) and parentheses.
FieldElement parse_field_element(const NumberField& field, const std::string& text);

class FieldNotSplit : public Error {
 public:
  // poly: monic coefficients, low degree first, of the polynomial to adjoin.
  FieldNotSplit(std::vector<FieldElement> poly, const std::string& what)
      : Error(ErrorKind::FieldNotSplit, what), poly_(std::move(poly)) {}
  const std::vector<FieldElement>& poly() const { return poly_; }

 private:
  std::vector<FieldElement> poly_;
};

class Reducible : public Error {
 public:
  Reducible(QPoly factor, const std::string& what)
      : Error(ErrorKind::Reducible, what), factor_(std::move(factor)) {}
  const QPoly& factor() const { return factor_; }

 private:
  QPoly factor_;
};

// Least N >= 1 with a^N = 1, if any. Only N with phi(N) <= [K:Q] can occur.
std::optional<int> root_of_unity_order(const FieldElement& a);

// 1 + eta + ... + eta^(n-1), summed directly (valid at eta = 1).
FieldElement geometric_sum(const FieldElement& eta, int n);

// Both roots (with multiplicity) of t^2 - alpha*t - beta; throws FieldNotSplit
// carrying that quadratic when the roots are not in the field.
std::pair<FieldElement, FieldElement> quadratic_roots(const FieldElement& alpha,
                                                      const FieldElement& beta);

}  // namespace downup
