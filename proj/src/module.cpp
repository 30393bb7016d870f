#include "downup/module.hpp"

#include <algorithm>
#include <deque>

#include "downup/classify.hpp"

namespace downup {

std::string to_string(ModuleLabel l) {
  switch (l) {
    case ModuleLabel::VermaQuotient: return "verma_quotient";
    case ModuleLabel::Simple: return "simple";
    case ModuleLabel::Orbit: return "orbit";
    case ModuleLabel::Dual: return "dual";
    case ModuleLabel::Raw: return "raw";
  }
  return "raw";
}

ModuleLabel parse_module_label(const std::string& s) {
  for (auto l : {ModuleLabel::VermaQuotient, ModuleLabel::Simple, ModuleLabel::Orbit, ModuleLabel::Dual,
                 ModuleLabel::Raw})
    if (to_string(l) == s) return l;
  throw Error(ErrorKind::InvalidInput, "unknown module label '" + s + "'");
}

FDModule make_module(const Params& p, Matrix D, Matrix U, ModuleLabel label) {
  const int n = D.rows();
  if (D.cols() != n || U.rows() != n || U.cols() != n)
    throw Error(ErrorKind::InvalidInput, "D and U must be square matrices of one size");
  if (D.field() != p.field() || U.field() != p.field())
    throw Error(ErrorKind::FieldMismatch, "module matrices must lie over the parameter field");
  return FDModule{p, n, std::move(D), std::move(U), label};
}

RelationReport verify_relations(const FDModule& m) {
  const Params& p = m.params;
  const Matrix& D = m.D;
  const Matrix& U = m.U;
  Matrix DU = D * U, UD = U * D;
  Matrix r1 = D * DU - p.alpha() * (DU * D) - p.beta() * (U * D * D) - p.gamma() * D;
  Matrix r2 = DU * U - p.alpha() * (UD * U) - p.beta() * (U * UD) - p.gamma() * U;
  bool ok = r1.is_zero() && r2.is_zero();
  return {std::move(r1), std::move(r2), ok};
}

namespace {

FDModule checked(FDModule m) {
  if (!verify_relations(m).ok)
    throw Error(ErrorKind::RelationFailure, "constructed " + to_string(m.label) + " module fails the relations");
  return m;
}

}  // namespace

FDModule verma_quotient(const Params& p, const FieldElement& lambda, int n) {
  if (n < 1) throw Error(ErrorKind::InvalidInput, "dimension must be positive");
  LambdaSeq seq = lambda_seq(p, lambda, n - 1);
  const FieldElement& last = seq.values[static_cast<size_t>(n - 1)];
  if (!last.is_zero())
    throw Error(ErrorKind::NotSubmoduleBoundary,
                "lambda_" + std::to_string(n - 1) + " = " + last.to_string() + " is nonzero");
  const NumberField& K = p.field();
  Matrix D(K, n, n), U(K, n, n);
  for (int i = 0; i + 1 < n; ++i) {
    U(i + 1, i) = K.one();
    D(i, i + 1) = seq.values[static_cast<size_t>(i)];
  }
  return checked(make_module(p, std::move(D), std::move(U), ModuleLabel::VermaQuotient));
}

FDModule simple_module(const Params& p, const FieldElement& lambda, int bound) {
  auto k = minimal_zero_index(p, lambda, bound);
  if (!k)
    throw Error(ErrorKind::NoZeroWithinBound,
                "no zero of lambda_k for k < " + std::to_string(bound) + " at lambda = " + lambda.to_string());
  FDModule m = verma_quotient(p, lambda, *k + 1);
  m.label = ModuleLabel::Simple;
  if (!is_simple(m))
    throw Error(ErrorKind::NotSimple, "quotient at the minimal zero is not simple for lambda = " + lambda.to_string());
  return m;
}

FDModule orbit_module(const Params& p, const Point& point, const std::vector<Point>& orbit) {
  const int n = static_cast<int>(orbit.size());
  if (n == 0) throw Error(ErrorKind::NotAnOrbit, "empty orbit");
  if (orbit.front() != point) throw Error(ErrorKind::NotAnOrbit, "orbit does not start at the given point");
  LinearSigma s(p);
  for (int i = 0; i < n; ++i) {
    if (s.transport_point(orbit[static_cast<size_t>(i)]) != orbit[static_cast<size_t>((i + 1) % n)])
      throw Error(ErrorKind::NotAnOrbit, "orbit entry " + std::to_string(i) + " does not map to the next one");
    for (int j = 0; j < i; ++j)
      if (orbit[static_cast<size_t>(j)] == orbit[static_cast<size_t>(i)])
        throw Error(ErrorKind::NotAnOrbit, "orbit repeats a point, so the period is not minimal");
  }
  const NumberField& K = p.field();
  Matrix D(K, n, n), U(K, n, n);
  for (int i = 0; i < n; ++i) {
    int next = (i + 1) % n, prev = (i + n - 1) % n;
    D(next, i) = K.one();
    U(prev, i) = orbit[static_cast<size_t>(prev)].first;
  }
  return checked(make_module(p, std::move(D), std::move(U), ModuleLabel::Orbit));
}

FDModule dual_module(const FDModule& m) {
  return checked(make_module(m.params, m.U.transpose(), m.D.transpose(), ModuleLabel::Dual));
}

namespace {

std::vector<FieldElement> eigenvalues(const Matrix& a) {
  FieldRoots fr = roots_in_field(charpoly(a));
  if (!fr.nonlinear.empty())
    throw EigenvaluesNotInField(fr.nonlinear.front(),
                                "characteristic polynomial factor " + fr.nonlinear.front().to_string() +
                                    " has no roots in the field");
  return fr.roots;
}

int first_nonzero(const std::vector<FieldElement>& v) {
  for (size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) return static_cast<int>(i);
  return static_cast<int>(v.size());
}

}  // namespace

WeightData weight_decomposition(const FDModule& m) {
  const NumberField& K = m.params.field();
  WeightData out{{}, false};
  if (m.dim == 0) {
    out.is_weight_module = true;
    return out;
  }
  Matrix DU = m.D * m.U, UD = m.U * m.D;
  Matrix I = Matrix::identity(K, m.dim);
  int total = 0;
  for (const auto& a : eigenvalues(DU))
    for (const auto& b : eigenvalues(UD)) {
      auto basis = joint_kernel({DU - a * I, UD - b * I});
      if (basis.empty()) continue;
      // Echelon form keeps the output canonical.
      auto canon = reduced_basis(basis, K);
      int mult = static_cast<int>(canon.size());
      total += mult;
      out.weights.push_back({a, b, mult, std::move(canon)});
    }
  std::sort(out.weights.begin(), out.weights.end(), [](const Weight& l, const Weight& r) {
    return first_nonzero(l.basis.front()) < first_nonzero(r.basis.front());
  });
  out.is_weight_module = total == m.dim;
  return out;
}

int generated_algebra_dim(const FDModule& m) {
  const int n = m.dim;
  const NumberField& K = m.params.field();
  EchelonBasis span(K, n * n);
  auto flat = [n](const Matrix& a) {
    std::vector<FieldElement> v;
    v.reserve(static_cast<size_t>(n * n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) v.push_back(a(i, j));
    return v;
  };
  std::deque<Matrix> queue;
  Matrix I = Matrix::identity(K, n);
  span.insert(flat(I));
  queue.push_back(I);
  // Left multiplication by the generators reaches every word.
  while (!queue.empty() && span.dim() < n * n) {
    Matrix w = queue.front();
    queue.pop_front();
    for (const Matrix* g : {&m.D, &m.U}) {
      Matrix next = *g * w;
      if (span.insert(flat(next))) queue.push_back(std::move(next));
    }
  }
  return span.dim();
}

bool is_simple(const FDModule& m) { return m.dim > 0 && generated_algebra_dim(m) == m.dim * m.dim; }

namespace {

// A maps span(basis) into ker B.
bool maps_into_kernel(const Matrix& A, const Matrix& B, const std::vector<std::vector<FieldElement>>& basis,
                      const NumberField& K, int n) {
  if (basis.empty()) return true;
  return (B * A * from_columns(K, n, basis)).is_zero();
}

}  // namespace

FiltrationReport torsion_filtration(const FDModule& m, int r, int s) {
  const int n = m.dim;
  const NumberField& K = m.params.field();
  FiltrationReport rep{r, s, 0, 0, 0, {}, true};
  // Powers up to the largest exponent any check needs.
  const int top = std::max(r, s) + 3;
  std::vector<Matrix> Dp{Matrix::identity(K, n)}, Up{Matrix::identity(K, n)};
  for (int k = 1; k <= top + r + s; ++k) {
    Dp.push_back(m.D * Dp.back());
    Up.push_back(m.U * Up.back());
  }
  auto Dpow = [&](int k) -> const Matrix& { return Dp[static_cast<size_t>(k)]; };
  auto Upow = [&](int k) -> const Matrix& { return Up[static_cast<size_t>(k)]; };
  auto M_rs = [&](int rr, int ss) { return joint_kernel({Dpow(rr + 1), Upow(ss + 1)}); };

  rep.ker_d = static_cast<int>(nullspace(Dpow(r + 1)).size());
  rep.ker_u = static_cast<int>(nullspace(Upow(s + 1)).size());
  rep.intersection = static_cast<int>(M_rs(r, s).size());
  for (int t = 0; t <= r + s; ++t) {
    std::vector<std::vector<FieldElement>> gens;
    for (int rr = 0; rr <= t; ++rr) {
      auto b = M_rs(rr, t - rr);
      gens.insert(gens.end(), b.begin(), b.end());
    }
    rep.level_dims.push_back(span_dim(gens, K));
  }
  for (int rr = 0; rr <= r; ++rr) {
    auto Mr = nullspace(Dpow(rr + 1));
    if (!maps_into_kernel(m.U, Dpow(rr + 2), Mr, K, n)) rep.containments_ok = false;
  }
  for (int ss = 0; ss <= s; ++ss) {
    auto Ms = nullspace(Upow(ss + 1));
    if (!maps_into_kernel(m.D, Upow(ss + 2), Ms, K, n)) rep.containments_ok = false;
  }
  for (int rr = 1; rr <= r; ++rr)
    for (int ss = 0; ss <= s; ++ss) {
      auto b = M_rs(rr, ss);
      if (!maps_into_kernel(m.D, Dpow(rr), b, K, n) || !maps_into_kernel(m.D, Upow(ss + 2), b, K, n))
        rep.containments_ok = false;
    }
  for (size_t t = 1; t < rep.level_dims.size(); ++t)
    if (rep.level_dims[t] < rep.level_dims[t - 1]) rep.containments_ok = false;
  return rep;
}

}  // namespace downup
