#include <gtest/gtest.h>

#include <map>
#include <numeric>

#include "../support.hpp"
#include "downup/kpoly.hpp"

using namespace downup;
using namespace testing_support;

TEST(FieldMake, DegreeOneIsQ) {
  NumberField K = NumberField::make(std::vector<Rational>{Rational(3), Rational(1)});
  EXPECT_TRUE(K.is_rational());
  EXPECT_EQ(K, NumberField());
  EXPECT_TRUE(K.from_int(2).is_rational());
}

TEST(FieldMake, CyclotomicThree) {
  NumberField K = zeta3_field();
  EXPECT_EQ(K.degree(), 2);
  FieldElement z = K.generator();
  EXPECT_TRUE(z.pow(3).is_one());
  EXPECT_TRUE((z * z + z + K.one()).is_zero());
  EXPECT_EQ(z * z.pow(2), K.one());
}

TEST(FieldMake, ReducibleCarriesFactor) {
  try {
    NumberField::make(std::vector<Rational>{Rational(-1), Rational(0), Rational(1)});
    FAIL() << "expected Reducible";
  } catch (const Reducible& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Reducible);
    QPoly f = e.factor();
    EXPECT_EQ(f.degree(), 1);
    QPoly m({Rational(-1), Rational(0), Rational(1)});
    EXPECT_TRUE((m % f).is_zero());
  }
}

TEST(FieldMake, NotMonic) {
  try {
    NumberField::make(std::vector<Rational>{Rational(1), Rational(2)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotMonic);
  }
}

TEST(FieldArith, InverseOfTwo) {
  NumberField K;
  EXPECT_EQ(K.from_int(2).inv(), q(K, 1, 2));
  EXPECT_EQ(K.from_int(2).inv().to_string(), "1/2");
}

TEST(FieldArith, DivisionByZero) {
  NumberField K = zeta3_field();
  try {
    K.one() / K.zero();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DivisionByZero);
  }
}

TEST(FieldArith, MismatchThrows) {
  NumberField K = zeta3_field();
  NumberField L = NumberField::make(QPoly({Rational(-2), Rational(0), Rational(1)}), "s");
  try {
    (void)(K.generator() + L.generator());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::FieldMismatch);
  }
}

TEST(FieldArith, RingAxiomsRandomized) {
  std::mt19937 rng(11);
  for (const NumberField& K : {zeta3_field(), NumberField::make(QPoly({Rational(-2), Rational(0), Rational(0),
                                                                       Rational(1)}))}) {
    for (int i = 0; i < 60; ++i) {
      FieldElement a = random_element(rng, K), b = random_element(rng, K), c = random_element(rng, K);
      EXPECT_EQ((a + b) + c, a + (b + c));
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a * b, b * a);
      if (!a.is_zero()) EXPECT_TRUE((a * a.inv()).is_one());
      if (!b.is_zero()) EXPECT_EQ((a / b) * b, a);
    }
  }
}

TEST(FieldArith, ParseScalarExpressions) {
  NumberField K = zeta3_field("w");
  FieldElement w = K.generator();
  EXPECT_EQ(parse_field_element(K, "w^2 + w + 1"), K.zero());
  EXPECT_EQ(parse_field_element(K, "(1+w)/2"), (K.one() + w) / K.from_int(2));
  EXPECT_EQ(parse_field_element(K, "w^-1"), w.pow(2));
  EXPECT_EQ(parse_field_element(K, "-3/4"), q(K, -3, 4));
  EXPECT_THROW(parse_field_element(K, "1 +"), Error);
  EXPECT_THROW(parse_field_element(K, "v"), Error);
}

TEST(FieldArith, ToStringUsesGeneratorName) {
  NumberField K = zeta3_field("w");
  EXPECT_EQ((K.generator() + K.one()).to_string(), "w + 1");
  EXPECT_EQ(K.from_int(-2).to_string(), "-2");
}

TEST(RootOfUnity, Examples) {
  NumberField Q;
  EXPECT_EQ(root_of_unity_order(Q.from_int(-1)), 2);
  EXPECT_EQ(root_of_unity_order(Q.from_int(1)), 1);
  EXPECT_EQ(root_of_unity_order(Q.from_int(2)), std::nullopt);
  NumberField K = zeta3_field();
  EXPECT_EQ(root_of_unity_order(K.generator()), 3);
  EXPECT_EQ(root_of_unity_order(-K.generator()), 6);
  try {
    root_of_unity_order(Q.zero());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroInput);
  }
}

TEST(RootOfUnity, OrderIsMinimal) {
  // Q(zeta_12) has degree 4 and contains roots of unity of orders 1,2,3,4,6,12.
  NumberField K = NumberField::make(QPoly({Rational(1), Rational(0), Rational(-1), Rational(0), Rational(1)}), "c");
  FieldElement c = K.generator();
  for (int k = 1; k <= 12; ++k) {
    FieldElement a = c.pow(k);
    auto N = root_of_unity_order(a);
    ASSERT_TRUE(N.has_value());
    EXPECT_TRUE(a.pow(*N).is_one());
    for (int j = 1; j < *N; ++j) EXPECT_FALSE(a.pow(j).is_one());
    EXPECT_EQ(*N, 12 / std::gcd(12, k));
  }
  EXPECT_EQ(root_of_unity_order(c + K.one()), std::nullopt);
}

TEST(GeometricSum, Examples) {
  NumberField Q;
  EXPECT_EQ(geometric_sum(Q.from_int(1), 5), Q.from_int(5));
  EXPECT_EQ(geometric_sum(Q.from_int(-1), 3), Q.from_int(1));
  EXPECT_EQ(geometric_sum(Q.from_int(-2), 3), Q.from_int(3));
}

TEST(GeometricSum, TelescopingIdentity) {
  std::mt19937 rng(5);
  NumberField K = zeta3_field();
  for (int i = 0; i < 40; ++i) {
    FieldElement eta = i % 5 == 0 ? K.one() : random_element(rng, K);
    int n = 1 + i % 9;
    EXPECT_EQ(geometric_sum(eta, n) * (eta - K.one()), eta.pow(n) - K.one());
  }
}

TEST(QuadraticRoots, Examples) {
  NumberField Q;
  auto [a, b] = quadratic_roots(Q.from_int(2), Q.from_int(-1));
  EXPECT_EQ(a, Q.one());
  EXPECT_EQ(b, Q.one());
  auto [c, d] = quadratic_roots(Q.zero(), Q.one());
  EXPECT_EQ(c, Q.one());
  EXPECT_EQ(d, Q.from_int(-1));
  try {
    quadratic_roots(Q.one(), Q.one());
    FAIL();
  } catch (const FieldNotSplit& e) {
    ASSERT_EQ(e.poly().size(), 3u);
    EXPECT_EQ(e.poly()[0], Q.from_int(-1));
    EXPECT_EQ(e.poly()[1], Q.from_int(-1));
    EXPECT_EQ(e.poly()[2], Q.one());
  }
}

TEST(QuadraticRoots, VietaRandomized) {
  std::mt19937 rng(3);
  NumberField K = zeta3_field();
  int split = 0;
  for (int i = 0; i < 80; ++i) {
    // Build alpha, beta from chosen roots so they split, plus random pairs.
    FieldElement r1 = random_element(rng, K), r2 = random_element(rng, K);
    FieldElement alpha = i % 2 ? r1 + r2 : random_element(rng, K);
    FieldElement beta = i % 2 ? -(r1 * r2) : random_element(rng, K);
    try {
      auto [l1, l2] = quadratic_roots(alpha, beta);
      EXPECT_EQ(l1 + l2, alpha);
      EXPECT_EQ(l1 * l2, -beta);
      ++split;
    } catch (const FieldNotSplit&) {
      EXPECT_EQ(i % 2, 0);
    }
  }
  EXPECT_GE(split, 40);
}

TEST(Factor, RecoversKnownIrreducibles) {
  // Products of known irreducible polynomials with multiplicities.
  std::vector<QPoly> irr = {
      QPoly({Rational(-2), Rational(0), Rational(1)}),                      // t^2 - 2
      QPoly({Rational(1), Rational(1), Rational(1)}),                       // Phi_3
      QPoly({Rational(1), Rational(-1), Rational(0), Rational(1)}),         // t^3 - t + 1
      QPoly({Rational(2), Rational(-2), Rational(1)}),                      // t^2 - 2t + 2
      QPoly({Rational(3, 2), Rational(1)}),
  };
  std::mt19937 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    QPoly f = QPoly::constant(Rational(7, 3));
    std::map<std::vector<Rational>, int> expect;
    for (size_t i = 0; i < irr.size(); ++i) {
      int m = static_cast<int>(rng() % 3);
      for (int k = 0; k < m; ++k) f = f * irr[i];
      if (m) expect[irr[i].monic().coeffs()] = m;
    }
    auto fac = factor(f);
    std::map<std::vector<Rational>, int> got;
    for (const auto& [g, m] : fac) {
      EXPECT_EQ(g.leading(), 1);
      got[g.coeffs()] = m;
    }
    EXPECT_EQ(got, expect);
  }
}

TEST(Factor, SwinnertonDyerStyleIrreducible) {
  // t^4 - 10 t^2 + 1 is irreducible over Q but splits mod every prime.
  QPoly f({Rational(1), Rational(0), Rational(-10), Rational(0), Rational(1)});
  EXPECT_TRUE(is_irreducible(f));
  // t^6 - 1 = (t-1)(t+1)(t^2+t+1)(t^2-t+1).
  QPoly g({Rational(-1), 0, 0, 0, 0, 0, Rational(1)});
  EXPECT_EQ(factor(g).size(), 4u);
}

TEST(RootsInField, TragerRecoversChosenRoots) {
  std::mt19937 rng(23);
  NumberField K = zeta3_field();
  for (int trial = 0; trial < 15; ++trial) {
    std::vector<FieldElement> chosen;
    KPoly p(K, {K.one()});
    for (int i = 0; i < 3; ++i) {
      FieldElement r = random_element(rng, K);
      bool dup = false;
      for (const auto& c : chosen) dup = dup || c == r;
      if (!dup) chosen.push_back(r);
      p = p * KPoly(K, {-r, K.one()});
    }
    // An extra factor with no roots in K: X^2 - 2.
    p = p * KPoly(K, {K.from_int(-2), K.zero(), K.one()});
    FieldRoots fr = roots_in_field(p);
    std::sort(chosen.begin(), chosen.end(), coord_less);
    ASSERT_EQ(fr.roots.size(), chosen.size());
    for (size_t i = 0; i < chosen.size(); ++i) EXPECT_EQ(fr.roots[i], chosen[i]);
    ASSERT_EQ(fr.nonlinear.size(), 1u);
    EXPECT_EQ(fr.nonlinear[0].degree(), 2);
  }
}

TEST(RootsInField, CubeRootsOfUnityInZeta3) {
  NumberField K = zeta3_field();
  FieldRoots fr = roots_in_field(KPoly(K, {K.from_int(-1), K.zero(), K.zero(), K.one()}));
  EXPECT_EQ(fr.roots.size(), 3u);
  EXPECT_TRUE(fr.nonlinear.empty());
  for (const auto& r : fr.roots) EXPECT_TRUE(r.pow(3).is_one());
}

TEST(ParseQPoly, Basic) {
  EXPECT_EQ(parse_qpoly("t^2+t+1"), QPoly({Rational(1), Rational(1), Rational(1)}));
  EXPECT_EQ(parse_qpoly("(z-1)*(z+1)/2", "z"), QPoly({Rational(-1, 2), Rational(0), Rational(1, 2)}));
  EXPECT_THROW(parse_qpoly("t^2+s"), Error);
  EXPECT_THROW(parse_qpoly(""), Error);
}
