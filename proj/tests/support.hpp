#pragma once

#include <random>
#include <string>
#include <vector>

#include "downup/algebra.hpp"
#include "downup/kpoly.hpp"

namespace testing_support {

using namespace downup;

inline NumberField Qfield() { return NumberField(); }

inline NumberField zeta3_field(const std::string& name = "z") {
  return NumberField::make(QPoly({Rational(1), Rational(1), Rational(1)}), name);
}

inline FieldElement q(const NumberField& K, long num, long den = 1) { return K.from_rational(Rational(num, den)); }

inline Params params(long a, long b, long c) {
  NumberField K;
  return Params::make(K.from_int(a), K.from_int(b), K.from_int(c));
}

inline Params params(const NumberField& K, const std::string& a, const std::string& b, const std::string& c) {
  return Params::make(parse_field_element(K, a), parse_field_element(K, b), parse_field_element(K, c));
}

// A_eta = A(1 + eta, -eta, gamma).
inline Params a_eta(const FieldElement& eta, const FieldElement& gamma) {
  return Params::make(eta.field().one() + eta, -eta, gamma);
}

inline Rational random_rational(std::mt19937& rng, int num_range = 5, int den_range = 3) {
  std::uniform_int_distribution<int> n(-num_range, num_range), d(1, den_range);
  Rational r(n(rng), d(rng));
  r.canonicalize();
  return r;
}

inline Rational random_nonzero_rational(std::mt19937& rng, int num_range = 5, int den_range = 3) {
  for (;;) {
    Rational r = random_rational(rng, num_range, den_range);
    if (r != 0) return r;
  }
}

inline FieldElement random_element(std::mt19937& rng, const NumberField& K) {
  std::vector<Rational> c;
  for (int i = 0; i < K.degree(); ++i) c.push_back(random_rational(rng));
  return K.from_coords(c);
}

inline Params random_params(std::mt19937& rng) {
  NumberField K;
  return Params::make(K.from_rational(random_rational(rng)), K.from_rational(random_nonzero_rational(rng)),
                      K.from_rational(random_rational(rng)));
}

inline BivarPoly random_bivar(std::mt19937& rng, const NumberField& K, int max_deg = 2, int terms = 3) {
  std::uniform_int_distribution<int> e(0, max_deg);
  BivarPoly p(K);
  for (int i = 0; i < terms; ++i) p.add_term(e(rng), e(rng), random_element(rng, K));
  return p;
}

}  // namespace testing_support
