#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace downup {

using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p", "-p" or "p/q" into a canonical rational.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

// Dense univariate polynomial over Q, coefficients stored low degree first.
// The zero polynomial has an empty coefficient vector.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rational> coeffs);
  static QPoly constant(const Rational& c);
  static QPoly monomial(const Rational& c, int degree);
  static QPoly x() { return monomial(1, 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const;
  const Rational& leading() const { return c_.back(); }

  QPoly operator-() const;
  friend QPoly operator+(const QPoly& a, const QPoly& b);
  friend QPoly operator-(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const Rational& s, const QPoly& a);
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

  Rational eval(const Rational& t) const;
  QPoly derivative() const;
  QPoly monic() const;

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

// Parses a polynomial in `var` built from rationals, + - * ^ and
// parentheses; '/' may only divide by a nonzero constant.
QPoly parse_qpoly(const std::string& text, const std::string& var = "t");

// Quotient and remainder; throws DivisionByZero for a zero divisor.
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
QPoly operator%(const QPoly& a, const QPoly& b);
// Monic gcd (zero only if both inputs are zero).
QPoly gcd(const QPoly& a, const QPoly& b);
// Returns (g, s, t) with s*a + t*b = g, g the monic gcd.
struct ExtendedGcd {
  QPoly g, s, t;
};
ExtendedGcd extended_gcd(const QPoly& a, const QPoly& b);

// Factorization over Q into monic irreducible factors with multiplicities,
// sorted by degree and then coefficient-wise from the constant term.
// The constant content is dropped.
std::vector<std::pair<QPoly, int>> factor(const QPoly& f);
bool is_irreducible(const QPoly& f);

}  // namespace downup
