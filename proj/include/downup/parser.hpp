#pragma once

#include <memory>
#include <string>
#include <vector>

#include "downup/algebra.hpp"

namespace downup {

// Abstract term over d, u and scalars, before reduction.
struct Term {
  enum class Kind { Scalar, D, U, Add, Sub, Mul, Neg, Pow };
  Kind kind;
  FieldElement scalar;  // Kind::Scalar
  int exponent = 0;     // Kind::Pow
  std::vector<std::shared_ptr<const Term>> args;
};
using TermPtr = std::shared_ptr<const Term>;

TermPtr make_scalar(const FieldElement& c);
TermPtr make_d();
TermPtr make_u();
TermPtr make_binary(Term::Kind kind, TermPtr a, TermPtr b);
TermPtr make_neg(TermPtr a);
TermPtr make_pow(TermPtr a, int e);

// Grammar (loosest first):
//   expr   := term (('+' | '-') term)*
//   term   := unary ('*' unary)*
//   unary  := '-' unary | power
//   power  := atom ('^' digits)?
//   atom   := 'd' | 'u' | rational | generator | alpha | beta | gamma | '(' expr ')'
// Rationals are "p" or "p/q". The identifiers alpha, beta, gamma (also the
// Greek letters) stand for the parameters. Throws SyntaxError with the byte
// offset of the problem.
TermPtr parse_term(const Params& p, const std::string& src);

// Reduces a term to graded normal form.
AlgebraElement reduce(const Params& p, const TermPtr& t);

AlgebraElement parse_expression(const Params& p, const std::string& src);

}  // namespace downup
