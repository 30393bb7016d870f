#include <gtest/gtest.h>

#include <algorithm>
#include <functional>

#include "../support.hpp"
#include "downup/classify.hpp"
#include "downup/module.hpp"

using namespace downup;
using namespace testing_support;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InternalConsistency;
}

std::vector<FieldElement> ints(const NumberField& K, std::vector<long> v) {
  std::vector<FieldElement> out;
  for (long x : v) out.push_back(K.from_int(x));
  return out;
}

NumberField gaussian_field() { return NumberField::make(QPoly({Rational(1), Rational(0), Rational(1)}), "i"); }

// A point on the line w = 0 (w affine with a nonzero linear part).
Point on_line(const BivarPoly& w, const FieldElement& t) {
  FieldElement a = w.coeff(1, 0), b = w.coeff(0, 1), c = w.coeff(0, 0);
  if (!b.is_zero()) return {t, -(a * t + c) / b};
  return {-(b * t + c) / a, t};
}

// The point where w1 = w2 = 0.
Point common_zero(const WPair& w) {
  FieldElement a1 = w.w1.coeff(1, 0), b1 = w.w1.coeff(0, 1), c1 = w.w1.coeff(0, 0);
  FieldElement a2 = w.w2.coeff(1, 0), b2 = w.w2.coeff(0, 1), c2 = w.w2.coeff(0, 0);
  FieldElement det = a1 * b2 - a2 * b1;
  return {(-c1 * b2 + c2 * b1) / det, (-a1 * c2 + a2 * c1) / det};
}

}  // namespace

TEST(LambdaSeq, Examples) {
  NumberField K;
  EXPECT_EQ(lambda_seq(params(2, -1, 1), K.zero(), 4).values, ints(K, {0, 1, 3, 6, 10}));
  EXPECT_EQ(lambda_seq(params(0, 1, 1), K.zero(), 5).values, ints(K, {0, 1, 1, 2, 2, 3}));
  EXPECT_EQ(lambda_seq(params(-1, 2, 1), K.zero(), 5).values, ints(K, {0, 1, 0, 3, -2, 9}));
}

TEST(LambdaSeq, AffineDecompositionHolds) {
  std::mt19937 rng(1);
  for (int i = 0; i < 30; ++i) {
    Params p = random_params(rng);
    FieldElement l = p.field().from_rational(random_rational(rng));
    LambdaSeq s = lambda_seq(p, l, 12);
    ASSERT_EQ(s.values.size(), 13u);
    for (size_t n = 0; n < s.values.size(); ++n) EXPECT_EQ(s.values[n], s.P[n] * l + s.Q[n]);
    // Direct recurrence, written out independently.
    FieldElement prev = p.field().zero(), cur = l;
    for (size_t n = 1; n < s.values.size(); ++n) {
      FieldElement next = p.alpha() * cur + p.beta() * prev + p.gamma();
      prev = cur;
      cur = next;
      EXPECT_EQ(s.values[n], cur);
    }
  }
}

TEST(LambdaSeq, ClosedFormForAEta) {
  std::mt19937 rng(2);
  for (int i = 0; i < 20; ++i) {
    NumberField K;
    Rational e = random_nonzero_rational(rng);
    if (e == 1) continue;
    Params p = a_eta(K.from_rational(e), K.from_rational(random_rational(rng)));
    FieldElement l = K.from_rational(random_rational(rng));
    LambdaSeq s = lambda_seq(p, l, 32);
    for (int n = 0; n <= 32; ++n) EXPECT_EQ(lambda_closed_form(p, l, n), s.values[static_cast<size_t>(n)]);
  }
  NumberField Z = zeta3_field();
  Params pz = params(Z, "1+z", "-z", "1");
  LambdaSeq sz = lambda_seq(pz, Z.generator(), 32);
  for (int n = 0; n <= 32; ++n) EXPECT_EQ(lambda_closed_form(pz, Z.generator(), n), sz.values[static_cast<size_t>(n)]);
}

TEST(SimplesOfDim, Examples) {
  NumberField K;
  EXPECT_TRUE(simples_of_dim(params(0, 1, 1), 2).weights.empty());
  EXPECT_EQ(simples_of_dim(params(2, -1, 1), 3).weights, ints(K, {-1}));
  EXPECT_EQ(simples_of_dim(params(0, 1, 1), 3).weights, ints(K, {-1}));
  NumberField Z = zeta3_field();
  EXPECT_TRUE(simples_of_dim(params(Z, "1+z", "-z", "1"), 3).weights.empty());
  SimplesOfDim r = simples_of_dim(params(-1, 2, 1), 4);
  ASSERT_EQ(r.weights.size(), 1u);
  EXPECT_EQ(r.weights[0], q(K, 3, 5));
}

TEST(SimplesOfDim, AllLambdaMarker) {
  NumberField K;
  SimplesOfDim s = simples_of_dim(params(0, 1, 0), 2);
  EXPECT_TRUE(s.all_lambda);
  EXPECT_EQ(s.excluded, ints(K, {0}));
  EXPECT_TRUE(s.weights.empty());
}

TEST(SimplesOfDim, MatchesClosedFormSolution) {
  std::mt19937 rng(3);
  int seen = 0;
  for (int i = 0; i < 25; ++i) {
    NumberField K;
    Rational e = random_nonzero_rational(rng);
    Rational g = random_nonzero_rational(rng);
    if (e == 1) continue;
    FieldElement eta = K.from_rational(e), gamma = K.from_rational(g);
    Params p = a_eta(eta, gamma);
    for (int n = 1; n <= 6; ++n) {
      for (const auto& l : simples_of_dim(p, n).weights) {
        FieldElement sum = K.zero();
        for (int k = 0; k < n; ++k) sum += eta.pow(k);
        EXPECT_EQ(l * (eta - K.one()), -gamma * (K.one() - K.from_int(n) / sum));
        EXPECT_FALSE(eta.pow(n).is_one());
        LambdaSeq s = lambda_seq(p, l, n - 1);
        EXPECT_TRUE(s.values.back().is_zero());
        for (int k = 0; k + 1 < n; ++k) EXPECT_FALSE(s.values[static_cast<size_t>(k)].is_zero());
        ++seen;
      }
    }
  }
  EXPECT_GT(seen, 20);
}

TEST(SimplesOfDim, RootOfUnityPattern) {
  NumberField Z = zeta3_field(), G = gaussian_field(), K;
  struct Case {
    Params p;
    int order;
  };
  std::vector<Case> cases{{params(0, 1, 1), 2}, {params(Z, "1+z", "-z", "1"), 3}, {params(G, "1+i", "-i", "1"), 4}};
  for (const auto& c : cases) {
    for (int n = 1; n <= 2 * c.order + 2; ++n) {
      SimplesOfDim s = simples_of_dim(c.p, n);
      EXPECT_FALSE(s.all_lambda);
      EXPECT_EQ(s.weights.size(), n % c.order == 0 ? 0u : 1u) << c.p.to_string() << " n=" << n;
    }
  }
}

TEST(OrbitFiniteCondition, Examples) {
  NumberField K;
  EXPECT_EQ(orbit_finite_condition(params(1, 2, 1), K.zero(), K.zero()), 1);
  EXPECT_EQ(orbit_finite_condition(params(2, -1, 0), K.zero(), K.zero()), 1);
  EXPECT_EQ(orbit_finite_condition(params(-2, -1, 1), K.zero(), K.zero()), 1);
  EXPECT_FALSE(orbit_finite_condition(params(0, 1, 1), K.one(), K.from_int(3)).has_value());
  EXPECT_FALSE(orbit_finite_condition(params(0, 1, 1), K.zero(), K.zero()).has_value());
  NumberField Z = zeta3_field();
  EXPECT_EQ(orbit_finite_condition(params(Z, "-1", "-1", "0"), Z.one(), Z.from_int(2)), 3);
}

TEST(OrbitIterate, Examples) {
  Params p = params(-1, -1, 0);
  const NumberField& K = p.field();
  auto o = orbit_iterate(p, {K.one(), K.one()}, 24);
  ASSERT_TRUE(o.has_value());
  std::vector<Point> expect{{K.one(), K.one()}, {K.from_int(-2), K.one()}, {K.one(), K.from_int(-2)}};
  EXPECT_EQ(*o, expect);
  EXPECT_FALSE(orbit_iterate(params(0, 1, 1), {K.one(), K.from_int(2)}, 20).has_value());
  EXPECT_FALSE(orbit_iterate(params(0, 1, 1), {K.zero(), K.zero()}, 20).has_value());
  Point fixed{q(K, -1, 2), q(K, -1, 2)};
  EXPECT_EQ(orbit_iterate(params(1, 2, 1), fixed, 24)->size(), 1u);
}

TEST(OrbitFiniteCondition, AgreesWithBruteForce) {
  std::mt19937 rng(2718);
  NumberField Z = zeta3_field();
  NumberField Qf;
  std::vector<std::vector<Params>> pools{
      {params(1, 2, 1), params(1, 2, 0), params(2, 3, 0), params(Z, "-1", "-1", "0"), params(Z, "-1", "-1", "3")},
      {params(0, 1, 0), params(0, 1, 1), params(-1, 2, 0), params(Z, "1+z", "-z", "0")},
      {params(-2, -1, 0), params(-2, -1, 1), Params::make(Qf.from_int(3), q(Qf, -9, 4), Qf.zero())},
      {params(2, -1, 0), params(2, -1, 1)}};
  int finite = 0, infinite = 0;
  for (int i = 0; i < 100; ++i) {
    const auto& pool = pools[static_cast<size_t>(i % 4)];
    Params p = pool[static_cast<size_t>(rng() % pool.size())];
    ASSERT_EQ(static_cast<int>(p.case_tag()), i % 4) << p.to_string();
    const NumberField& K = p.field();
    WPair w = canonical_w_pair(p);
    FieldElement t = random_element(rng, K);
    Point pt;
    switch (rng() % 4) {
      case 0: pt = {random_element(rng, K), random_element(rng, K)}; break;
      case 1: pt = on_line(w.w1, t); break;
      case 2: pt = on_line(w.w2, t); break;
      default: pt = common_zero(w);
    }
    Point wc = w_coordinates(w, pt);
    auto predicted = orbit_finite_condition(p, wc.first, wc.second);
    auto orbit = orbit_iterate(p, pt, 24);
    if (predicted && *predicted <= 24) {
      ASSERT_TRUE(orbit.has_value()) << p.to_string();
      EXPECT_EQ(static_cast<int>(orbit->size()), *predicted) << p.to_string();
      ++finite;
    } else {
      EXPECT_FALSE(orbit.has_value()) << p.to_string();
      ++infinite;
    }
  }
  EXPECT_GT(finite, 20);
  EXPECT_GT(infinite, 20);
}

TEST(AlgebraType, Examples) {
  NumberField K;
  EXPECT_EQ(algebra_type(params(2, -1, 1)), AlgebraType::d);
  EXPECT_EQ(algebra_type(params(1, 1, 1)), AlgebraType::c);
  EXPECT_EQ(algebra_type(Params::make(q(K, 1, 2), q(K, 1, 2), K.zero())), AlgebraType::a);
  EXPECT_EQ(algebra_type(params(1, 1, 0)), AlgebraType::b);
}

TEST(Isomorphism, Examples) {
  NumberField K;
  IsoVerdict swap = are_isomorphic(params(1, 2, 0), Params::make(q(K, -1, 2), q(K, 1, 2), K.zero()));
  EXPECT_TRUE(swap.answer);
  EXPECT_EQ(swap.branch, IsoBranch::SwappedParams);
  IsoVerdict gam = are_isomorphic(params(3, 5, 5), params(3, 5, 1));
  EXPECT_TRUE(gam.answer);
  EXPECT_EQ(gam.branch, IsoBranch::SameParams);
  IsoVerdict no = are_isomorphic(params(2, -1, 1), params(0, 1, 1));
  EXPECT_FALSE(no.answer);
  EXPECT_EQ(no.branch, IsoBranch::ConditionFail);
  IsoVerdict ty = are_isomorphic(params(2, -1, 1), params(1, 2, 1));
  EXPECT_FALSE(ty.answer);
  EXPECT_EQ(ty.branch, IsoBranch::TypeMismatch);
  EXPECT_EQ(kind_of([&] { are_isomorphic(params(0, 1, 1), params(zeta3_field(), "0", "1", "1")); }),
            ErrorKind::FieldMismatch);
}

TEST(Isomorphism, TransformsAreCertified) {
  std::mt19937 rng(4);
  for (int i = 0; i < 40; ++i) {
    Params p = random_params(rng);
    const NumberField& K = p.field();
    FieldElement bi = p.beta().inv();
    Params t1 = Params::make(-p.alpha() * bi, bi, -p.gamma() * bi);
    EXPECT_TRUE(are_isomorphic(p, t1).answer) << p.to_string();
    EXPECT_TRUE(are_isomorphic(t1, p).answer);
    if (!p.gamma().is_zero()) {
      FieldElement c = K.from_rational(random_nonzero_rational(rng));
      EXPECT_TRUE(are_isomorphic(p, Params::make(p.alpha(), p.beta(), c)).answer);
    }
  }
}

TEST(Isomorphism, IsAnEquivalenceRelation) {
  std::mt19937 rng(5);
  NumberField K;
  std::vector<Params> pool;
  for (int i = 0; i < 6; ++i) {
    Params p = Params::make(K.from_int(static_cast<long>(rng() % 5) - 2), K.from_int((rng() % 2) ? 2 : -1),
                            K.from_int(static_cast<long>(rng() % 3)));
    pool.push_back(p);
    pool.push_back(Params::make(-p.alpha() * p.beta().inv(), p.beta().inv(), p.gamma() * K.from_int(3)));
  }
  for (const auto& a : pool) {
    EXPECT_TRUE(are_isomorphic(a, a).answer);
    for (const auto& b : pool) {
      bool ab = are_isomorphic(a, b).answer;
      EXPECT_EQ(ab, are_isomorphic(b, a).answer);
      for (const auto& c : pool)
        if (ab && are_isomorphic(b, c).answer) EXPECT_TRUE(are_isomorphic(a, c).answer);
    }
  }
}

TEST(TypeCInvariant, Examples) {
  NumberField K;
  TypeCInvariant c = typec_invariant(params(1, 2, 1));
  EXPECT_EQ(c.matrix(0, 0), K.from_int(2));
  EXPECT_EQ(c.matrix(1, 1), K.from_int(-1));
  EXPECT_TRUE(c.matrix(0, 1).is_zero());
  EXPECT_TRUE(c.matrix(1, 0).is_zero());
  TypeCInvariant j = typec_invariant(params(4, -4, 1));
  EXPECT_EQ(j.matrix(0, 0), K.from_int(2));
  EXPECT_EQ(j.matrix(1, 1), K.from_int(2));
  EXPECT_TRUE(j.matrix(0, 1).is_one());
  EXPECT_TRUE(j.matrix(1, 0).is_zero());
  EXPECT_EQ(kind_of([] { typec_invariant(params(2, -1, 1)); }), ErrorKind::NotTypeC);
  EXPECT_EQ(kind_of([] { typec_invariant(params(1, 1, 1)); }), ErrorKind::FieldNotSplit);
}

TEST(TypeCInvariant, NormalElementsCommuteWithD) {
  Params p = params(1, 2, 1);
  TypeCInvariant c = typec_invariant(p);
  AlgebraElement d = AlgebraElement::d(p);
  for (int i = 0; i < 2; ++i) {
    const AlgebraElement& w = i == 0 ? c.w1 : c.w2;
    AlgebraElement expect = nf_mul(nf_scale(c.matrix(i, i), w), d);
    EXPECT_EQ(nf_mul(d, w), expect);
  }
}

TEST(TypeCInvariant, AgreesWithIsomorphismDecision) {
  std::mt19937 rng(6);
  NumberField K;
  auto random_typec = [&]() -> Params {
    for (;;) {
      Rational g = random_nonzero_rational(rng);
      if (rng() % 4 == 0) {
        Rational h = random_nonzero_rational(rng, 3, 2);
        if (h == 1) continue;
        return Params::make(K.from_rational(2 * h), K.from_rational(-h * h), K.from_rational(g));
      }
      Rational l1 = random_nonzero_rational(rng, 3, 2), l2 = random_nonzero_rational(rng, 3, 2);
      if (l1 == l2 || l1 == 1 || l2 == 1) continue;
      return Params::make(K.from_rational(l1 + l2), K.from_rational(-l1 * l2), K.from_rational(g));
    }
  };
  auto eigen = [](const TypeCInvariant& t) {
    std::vector<FieldElement> e{t.matrix(0, 0), t.matrix(1, 1)};
    std::sort(e.begin(), e.end(), coord_less);
    return e;
  };
  int iso = 0;
  for (int i = 0; i < 20; ++i) {
    Params p = random_typec();
    Params q2 = random_typec();
    if (i % 3 == 0) q2 = Params::make(-p.alpha() / p.beta(), p.beta().inv(), K.from_rational(random_nonzero_rational(rng)));
    if (i % 3 == 1) q2 = Params::make(p.alpha(), p.beta(), K.from_rational(random_nonzero_rational(rng)));
    TypeCInvariant a = typec_invariant(p), b = typec_invariant(q2);
    auto ea = eigen(a), eb = eigen(b);
    std::vector<FieldElement> eb_inv{eb[0].inv(), eb[1].inv()};
    std::sort(eb_inv.begin(), eb_inv.end(), coord_less);
    bool jordan_a = !a.matrix(0, 1).is_zero(), jordan_b = !b.matrix(0, 1).is_zero();
    bool match = jordan_a == jordan_b && (ea == eb || ea == eb_inv);
    EXPECT_EQ(are_isomorphic(p, q2).answer, match) << p.to_string() << " vs " << q2.to_string();
    if (match) ++iso;
  }
  EXPECT_GE(iso, 10);
}

TEST(Xmn, Examples) {
  NumberField K;
  EXPECT_TRUE(xmn_member(K.from_int(-2), 1, 3));
  EXPECT_TRUE(xmn_member(K.from_int(-2), 3, 1));
  for (int m = 1; m <= 6; ++m)
    for (int n = 1; n <= 6; ++n)
      if (m % 2 == 0 || n % 2 == 0) EXPECT_FALSE(xmn_member(K.from_int(-1), m, n));
  EXPECT_TRUE(xmn_member(K.from_int(5), 4, 4));
  EXPECT_FALSE(xmn_member(K.one(), 2, 2));
}

TEST(Xmn, Symmetric) {
  std::mt19937 rng(7);
  NumberField Z = zeta3_field();
  for (int i = 0; i < 60; ++i) {
    FieldElement eta = i % 2 ? NumberField().from_rational(random_nonzero_rational(rng)) : random_element(rng, Z);
    int m = 1 + static_cast<int>(rng() % 8), n = 1 + static_cast<int>(rng() % 8);
    EXPECT_EQ(xmn_member(eta, m, n), xmn_member(eta, n, m));
    // Independent reading of the defining equation.
    const NumberField& K = eta.field();
    bool direct = !eta.pow(m).is_one() && !eta.pow(n).is_one() &&
                  K.from_int(n) * (eta.pow(m) - K.one()) == K.from_int(m) * (eta.pow(n) - K.one());
    EXPECT_EQ(xmn_member(eta, m, n), direct);
  }
}

TEST(Semisimplicity, Examples) {
  SemisimplicityVerdict v1 = semisimplicity_verdict(params(0, 1, 1));
  EXPECT_EQ(v1.answer, SemisimpleAnswer::Semisimple);
  EXPECT_FALSE(v1.witness.has_value());
  SemisimplicityVerdict v2 = semisimplicity_verdict(params(-1, 2, 1), 3);
  EXPECT_EQ(v2.answer, SemisimpleAnswer::NotSemisimple);
  EXPECT_EQ(v2.witness, std::make_pair(3, 1));
  EXPECT_EQ(semisimplicity_verdict(params(2, -1, 1)).answer, SemisimpleAnswer::OutOfTheoremScope);
  EXPECT_EQ(semisimplicity_verdict(params(zeta3_field(), "1+z", "-z", "1")).answer, SemisimpleAnswer::Semisimple);
  NumberField K;
  SemisimplicityVerdict v3 = semisimplicity_verdict(a_eta(q(K, 1, 2), K.one()), 12);
  EXPECT_EQ(v3.answer, SemisimpleAnswer::NoObstructionUpToBound);
  EXPECT_EQ(v3.bound, 12);
  EXPECT_EQ(kind_of([] { semisimplicity_verdict(params(1, 2, 1)); }), ErrorKind::NotTypeD);
}

TEST(Semisimplicity, WitnessesAreMembers) {
  std::mt19937 rng(8);
  for (int i = 0; i < 20; ++i) {
    NumberField K;
    Rational e = random_nonzero_rational(rng);
    if (e == 1) continue;
    SemisimplicityVerdict v = semisimplicity_verdict(a_eta(K.from_rational(e), K.one()), 10);
    if (v.witness) {
      EXPECT_EQ(v.answer, SemisimpleAnswer::NotSemisimple);
      EXPECT_GT(v.witness->first, v.witness->second);
      EXPECT_TRUE(xmn_member(K.from_rational(e), v.witness->first, v.witness->second));
    }
  }
}

TEST(VermaStructure, Examples) {
  NumberField K;
  VermaStructure a = verma_structure(params(-1, 2, 1), K.zero(), 16);
  EXPECT_EQ(a.zeros, (std::vector<int>{1, 3}));
  EXPECT_EQ(a.length, 3);
  VermaStructure b = verma_structure(params(2, -1, 1), K.from_int(-1));
  EXPECT_EQ(b.zeros, (std::vector<int>{3}));
  EXPECT_EQ(b.length, 2);
  VermaStructure c = verma_structure(params(2, -1, 1), q(K, 1, 3));
  EXPECT_TRUE(c.zeros.empty());
  EXPECT_EQ(c.length, 1);
}

TEST(VermaStructure, TypeDHasAtMostTwoZeros) {
  std::mt19937 rng(9);
  for (int i = 0; i < 30; ++i) {
    NumberField K;
    Rational e = random_nonzero_rational(rng);
    if (e == 1) continue;
    Params p = a_eta(K.from_rational(e), K.from_rational(random_nonzero_rational(rng)));
    for (int n = 1; n <= 4; ++n)
      for (const auto& l : simples_of_dim(p, n).weights) {
        VermaStructure v = verma_structure(p, l, 32);
        EXPECT_LE(v.zeros.size(), 2u);
        ASSERT_FALSE(v.zeros.empty());
        EXPECT_EQ(v.zeros.front(), n);
      }
  }
}
