#include "downup/classify.hpp"

#include <numeric>

#include "downup/module.hpp"

namespace downup {

LambdaSeq lambda_seq(const Params& p, const FieldElement& lambda, int n) {
  if (n < 0) throw Error(ErrorKind::InvalidInput, "lambda_seq needs n >= 0");
  const NumberField& K = p.field();
  const FieldElement &a = p.alpha(), &b = p.beta(), &g = p.gamma();
  LambdaSeq s;
  FieldElement prev = K.zero(), prevP = K.zero(), prevQ = K.zero();
  s.values.push_back(lambda);
  s.P.push_back(K.one());
  s.Q.push_back(K.zero());
  for (int k = 1; k <= n; ++k) {
    const FieldElement cur = s.values.back(), curP = s.P.back(), curQ = s.Q.back();
    s.values.push_back(a * cur + b * prev + g);
    s.P.push_back(a * curP + b * prevP);
    s.Q.push_back(a * curQ + b * prevQ + g);
    prev = cur;
    prevP = curP;
    prevQ = curQ;
  }
  for (int k = 0; k <= n; ++k) {
    const size_t i = static_cast<size_t>(k);
    if (s.P[i] * lambda + s.Q[i] != s.values[i])
      throw Error(ErrorKind::InternalConsistency, "affine form of lambda_n disagrees with the recurrence");
  }
  return s;
}

FieldElement lambda_closed_form(const Params& p, const FieldElement& lambda, int n) {
  const FieldElement& eta = p.eta();
  const NumberField& K = p.field();
  if (!(p.alpha() + p.beta()).is_one() || eta.is_one())
    throw Error(ErrorKind::InvalidInput, "closed form needs alpha + beta = 1 and eta != 1");
  // Particular solution gamma n / (1 - eta); c1, c2 fit lambda_{-1} = 0, lambda_0 = lambda.
  FieldElement shift = p.gamma() / (K.one() - eta);
  FieldElement c2 = (lambda - shift) * eta / (eta - K.one());
  FieldElement c1 = lambda - c2;
  return c1 + c2 * eta.pow(n) + K.from_int(n) * shift;
}

std::optional<int> minimal_zero_index(const Params& p, const FieldElement& lambda, int bound) {
  if (bound < 1) return std::nullopt;
  LambdaSeq s = lambda_seq(p, lambda, bound - 1);
  for (int k = 0; k < bound; ++k)
    if (s.values[static_cast<size_t>(k)].is_zero()) return k;
  return std::nullopt;
}

SimplesOfDim simples_of_dim(const Params& p, int n) {
  if (n < 1) throw Error(ErrorKind::InvalidInput, "dimension must be positive");
  const NumberField& K = p.field();
  LambdaSeq s = lambda_seq(p, K.zero(), n - 1);
  const FieldElement& P = s.P[static_cast<size_t>(n - 1)];
  const FieldElement& Q = s.Q[static_cast<size_t>(n - 1)];
  SimplesOfDim out;
  auto certify = [&](const FieldElement& lambda) {
    FDModule m = simple_module(p, lambda, n);
    if (m.dim != n) throw Error(ErrorKind::InternalConsistency, "simple module has the wrong dimension");
  };
  if (!P.is_zero()) {
    FieldElement lambda = -Q / P;
    if (minimal_zero_index(p, lambda, n) == n - 1) {
      certify(lambda);
      out.weights.push_back(lambda);
    }
    return out;
  }
  if (!Q.is_zero()) return out;
  // lambda_{n-1} vanishes identically; drop the lambda with an earlier zero.
  for (int k = 0; k + 1 < n; ++k) {
    const FieldElement& Pk = s.P[static_cast<size_t>(k)];
    const FieldElement& Qk = s.Q[static_cast<size_t>(k)];
    if (Pk.is_zero()) {
      if (Qk.is_zero()) {
        out.excluded.clear();
        return out;
      }
      continue;
    }
    FieldElement e = -Qk / Pk;
    bool seen = false;
    for (const auto& x : out.excluded) seen = seen || x == e;
    if (!seen) out.excluded.push_back(e);
  }
  std::sort(out.excluded.begin(), out.excluded.end(), coord_less);
  out.all_lambda = true;
  for (long c = 0;; ++c) {
    FieldElement sample = K.from_int(c);
    bool excluded = false;
    for (const auto& x : out.excluded) excluded = excluded || x == sample;
    if (excluded) continue;
    certify(sample);
    break;
  }
  return out;
}

Point w_coordinates(const WPair& w, const Point& pt) {
  return {w.w1.eval(pt.first, pt.second), w.w2.eval(pt.first, pt.second)};
}

std::optional<int> orbit_finite_condition(const Params& p, const FieldElement& a1, const FieldElement& a2) {
  auto order = [](const FieldElement& x) { return root_of_unity_order(x); };
  switch (p.case_tag()) {
    case CaseTag::Case1: {
      // (lambda_i^n - 1) a_i = 0 for i = 1, 2.
      auto [l1, l2] = p.split_roots();
      int period = 1;
      for (const auto& [l, a] : {std::pair{l1, a1}, std::pair{l2, a2}}) {
        if (a.is_zero()) continue;
        auto N = order(l);
        if (!N) return std::nullopt;
        period = std::lcm(period, *N);
      }
      return period;
    }
    case CaseTag::Case2: {
      // n gamma = 0 and (eta^n - 1) a2 = 0.
      if (!p.gamma().is_zero()) return std::nullopt;
      if (a2.is_zero()) return 1;
      return order(p.eta());
    }
    case CaseTag::Case3: {
      // Jordan block with eigenvalue alpha/2: a1 = 0 and ((alpha/2)^n - 1) a2 = 0.
      if (!a1.is_zero()) return std::nullopt;
      if (a2.is_zero()) return 1;
      return order(p.alpha() / p.field().from_int(2));
    }
    case CaseTag::Case4:
      if (!p.gamma().is_zero() || !a1.is_zero()) return std::nullopt;
      return 1;
  }
  return std::nullopt;
}

std::optional<std::vector<Point>> orbit_iterate(const Params& p, const Point& pt, int bound) {
  LinearSigma s(p);
  std::vector<Point> orbit{pt};
  Point cur = pt;
  for (int step = 1; step <= bound; ++step) {
    cur = s.transport_point(cur);
    if (cur == pt) return orbit;
    orbit.push_back(cur);
  }
  return std::nullopt;
}

AlgebraType algebra_type(const Params& p) { return p.type(); }

std::string to_string(IsoBranch b) {
  switch (b) {
    case IsoBranch::SameParams: return "same_params";
    case IsoBranch::SwappedParams: return "swapped_params";
    case IsoBranch::TypeMismatch: return "type_mismatch";
    case IsoBranch::ConditionFail: return "condition_fail";
  }
  return "?";
}

IsoVerdict are_isomorphic(const Params& p, const Params& q) {
  if (p.field() != q.field()) throw Error(ErrorKind::FieldMismatch, "parameters lie in different fields");
  if (p.type() != q.type())
    return {false, IsoBranch::TypeMismatch,
            "types " + to_string(p.type()) + " and " + to_string(q.type()) + " differ"};
  if (p.alpha() == q.alpha() && p.beta() == q.beta())
    return {true, IsoBranch::SameParams, "alpha and beta agree"};
  FieldElement binv = p.beta().inv();
  if (q.alpha() == -(p.alpha() * binv) && q.beta() == binv)
    return {true, IsoBranch::SwappedParams, "alpha' = -alpha/beta and beta' = 1/beta"};
  return {false, IsoBranch::ConditionFail, "(alpha', beta') is neither (alpha, beta) nor (-alpha/beta, 1/beta)"};
}

TypeCInvariant typec_invariant(const Params& p) {
  if (p.type() != AlgebraType::c)
    throw Error(ErrorKind::NotTypeC, p.to_string() + " has type " + to_string(p.type()) + ", not c");
  const NumberField& K = p.field();
  WPair w = canonical_w_pair(p);
  Matrix m(K, 2, 2);
  if (p.case_tag() == CaseTag::Case1) {
    auto [l1, l2] = p.split_roots();
    m(0, 0) = l1;
    m(1, 1) = l2;
  } else {
    FieldElement h = p.alpha() / K.from_int(2);
    m(0, 0) = h;
    m(0, 1) = K.one();
    m(1, 1) = h;
  }
  AlgebraElement w1 = AlgebraElement::homogeneous(p, 0, w.w1);
  AlgebraElement w2 = AlgebraElement::homogeneous(p, 0, w.w2);
  AlgebraElement d = AlgebraElement::d(p);
  const AlgebraElement* ws[2] = {&w1, &w2};
  for (int i = 0; i < 2; ++i) {
    // d w_i = sigma(w_i) d, with sigma(w_i) read off the Jordan data.
    AlgebraElement image = nf_add(nf_scale(w.jordan[i][0], w1), nf_scale(w.jordan[i][1], w2));
    image = nf_add(image, AlgebraElement::scalar(p, w.shift[i]));
    if (nf_mul(d, *ws[i]) != nf_mul(image, d))
      throw Error(ErrorKind::InternalConsistency, "normal element equation fails for w" + std::to_string(i + 1));
  }
  return {std::move(m), std::move(w1), std::move(w2)};
}

bool xmn_member(const FieldElement& eta, int m, int n) {
  FieldElement em = eta.pow(m), en = eta.pow(n);
  if (em.is_one() || en.is_one()) return false;
  const NumberField& K = eta.field();
  FieldElement one = K.one();
  return K.from_int(n) * (em - one) == K.from_int(m) * (en - one);
}

std::string to_string(SemisimpleAnswer a) {
  switch (a) {
    case SemisimpleAnswer::Semisimple: return "semisimple";
    case SemisimpleAnswer::NotSemisimple: return "not_semisimple";
    case SemisimpleAnswer::NoObstructionUpToBound: return "no_obstruction_up_to_bound";
    case SemisimpleAnswer::OutOfTheoremScope: return "out_of_theorem_scope";
  }
  return "?";
}

SemisimplicityVerdict semisimplicity_verdict(const Params& p, int bound) {
  if (p.type() != AlgebraType::d)
    throw Error(ErrorKind::NotTypeD, p.to_string() + " has type " + to_string(p.type()) + ", not d");
  const FieldElement& eta = p.eta();
  if (eta.is_one()) return {SemisimpleAnswer::OutOfTheoremScope, std::nullopt, bound};
  // A root of unity lies in X_{m,n} only for m = n.
  if (root_of_unity_order(eta)) return {SemisimpleAnswer::Semisimple, std::nullopt, bound};
  for (int m = 2; m <= bound; ++m)
    for (int n = 1; n < m; ++n)
      if (xmn_member(eta, m, n)) return {SemisimpleAnswer::NotSemisimple, std::pair{m, n}, bound};
  return {SemisimpleAnswer::NoObstructionUpToBound, std::nullopt, bound};
}

VermaStructure verma_structure(const Params& p, const FieldElement& lambda, int bound) {
  VermaStructure out{{}, 1, bound};
  if (bound < 1) return out;
  LambdaSeq s = lambda_seq(p, lambda, bound - 1);
  for (int k = 1; k <= bound; ++k)
    if (s.values[static_cast<size_t>(k - 1)].is_zero()) out.zeros.push_back(k);
  out.length = static_cast<int>(out.zeros.size()) + 1;
  if (p.type() == AlgebraType::d && out.zeros.size() > 2)
    throw Error(ErrorKind::InternalConsistency,
                "type d Verma module with more than two zero indices at lambda = " + lambda.to_string());
  return out;
}

}  // namespace downup
