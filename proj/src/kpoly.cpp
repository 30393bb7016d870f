#include "downup/kpoly.hpp"

#include <algorithm>
#include <sstream>

namespace downup {

KPoly::KPoly(const NumberField& field, std::vector<FieldElement> coeffs)
    : field_(field), c_(std::move(coeffs)) {
  trim();
}

void KPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

FieldElement KPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return field_.zero();
  return c_[i];
}

KPoly operator+(const KPoly& a, const KPoly& b) {
  std::vector<FieldElement> v(std::max(a.c_.size(), b.c_.size()), a.field_.zero());
  for (size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return KPoly(a.field_, std::move(v));
}

KPoly operator-(const KPoly& a, const KPoly& b) {
  std::vector<FieldElement> v(std::max(a.c_.size(), b.c_.size()), a.field_.zero());
  for (size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) v[i] -= b.c_[i];
  return KPoly(a.field_, std::move(v));
}

KPoly operator*(const KPoly& a, const KPoly& b) {
  if (a.is_zero() || b.is_zero()) return KPoly(a.field_);
  std::vector<FieldElement> v(a.c_.size() + b.c_.size() - 1, a.field_.zero());
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  return KPoly(a.field_, std::move(v));
}

bool operator==(const KPoly& a, const KPoly& b) {
  if (a.c_.size() != b.c_.size()) return false;
  for (size_t i = 0; i < a.c_.size(); ++i)
    if (a.c_[i] != b.c_[i]) return false;
  return true;
}

FieldElement KPoly::eval(const FieldElement& t) const {
  FieldElement acc = field_.zero();
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

KPoly KPoly::derivative() const {
  if (c_.size() <= 1) return KPoly(field_);
  std::vector<FieldElement> v;
  for (size_t i = 1; i < c_.size(); ++i) v.push_back(Rational(static_cast<long>(i)) * c_[i]);
  return KPoly(field_, std::move(v));
}

KPoly KPoly::monic() const {
  if (is_zero()) return *this;
  FieldElement inv = leading().inv();
  std::vector<FieldElement> v = c_;
  for (auto& c : v) c *= inv;
  return KPoly(field_, std::move(v));
}

KPoly KPoly::shift(const FieldElement& c) const {
  // Horner in the shifted variable: p(X + c).
  KPoly result(field_);
  KPoly lin(field_, {c, field_.one()});
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    result = result * lin + KPoly(field_, {*it});
  return result;
}

std::string KPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    std::string c = c_[i].to_string();
    if (i == 0) {
      os << "(" << c << ")";
      continue;
    }
    if (!c_[i].is_one()) os << "(" << c << ")*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

std::pair<KPoly, KPoly> divmod(const KPoly& a, const KPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  const NumberField& K = a.field();
  if (a.degree() < b.degree()) return {KPoly(K), a};
  std::vector<FieldElement> r = a.coeffs();
  std::vector<FieldElement> q(a.degree() - b.degree() + 1, K.zero());
  FieldElement inv = b.leading().inv();
  for (int i = a.degree() - b.degree(); i >= 0; --i) {
    FieldElement f = r[i + b.degree()] * inv;
    if (f.is_zero()) continue;
    q[i] = f;
    for (int j = 0; j <= b.degree(); ++j) r[i + j] -= f * b.coeffs()[j];
  }
  return {KPoly(K, std::move(q)), KPoly(K, std::move(r))};
}

KPoly gcd(const KPoly& a, const KPoly& b) {
  KPoly x = a, y = b;
  while (!y.is_zero()) {
    KPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

namespace {

using QMatrix = std::vector<std::vector<Rational>>;

// Faddeev-LeVerrier; returns the monic characteristic polynomial.
QPoly charpoly(const QMatrix& a) {
  const size_t n = a.size();
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = 1;
  QMatrix m(n, std::vector<Rational>(n, Rational(0)));
  for (size_t k = 1; k <= n; ++k) {
    // m <- a*m + c[n-k+1] I
    QMatrix next(n, std::vector<Rational>(n, Rational(0)));
    for (size_t i = 0; i < n; ++i)
      for (size_t l = 0; l < n; ++l) {
        if (a[i][l] == 0) continue;
        for (size_t j = 0; j < n; ++j) next[i][j] += a[i][l] * m[l][j];
      }
    for (size_t i = 0; i < n; ++i) next[i][i] += c[n - k + 1];
    m = std::move(next);
    Rational tr = 0;
    for (size_t i = 0; i < n; ++i)
      for (size_t l = 0; l < n; ++l) tr += a[i][l] * m[l][i];
    c[n - k] = -tr / Rational(static_cast<long>(k));
  }
  return QPoly(std::move(c));
}

}  // namespace

QPoly norm(const KPoly& p) {
  const NumberField& K = p.field();
  const int k = K.degree();
  if (p.is_zero()) return {};
  KPoly q = p.monic();
  FieldElement lead_norm_src = p.leading();
  const int n = q.degree();
  if (n == 0) return QPoly::constant(1);
  // Companion matrix of q over K, expanded to a Q-matrix through the regular
  // representation of each entry; its characteristic polynomial is N(q).
  QMatrix big(static_cast<size_t>(n * k), std::vector<Rational>(static_cast<size_t>(n * k), Rational(0)));
  auto put = [&](int bi, int bj, const FieldElement& e) {
    FieldElement basis = K.one();
    FieldElement theta = K.generator();
    for (int l = 0; l < k; ++l) {
      FieldElement col = e * basis;
      for (int r = 0; r < k; ++r) big[bi * k + r][bj * k + l] = col.coords()[r];
      basis *= theta;
    }
  };
  for (int i = 0; i + 1 < n; ++i) put(i + 1, i, K.one());
  for (int i = 0; i < n; ++i) put(i, n - 1, -q.coeffs()[i]);
  QPoly monic_norm = charpoly(big);
  // Restore the norm of the leading coefficient.
  Rational lead = 1;
  if (!p.leading().is_one()) {
    QMatrix mult(static_cast<size_t>(k), std::vector<Rational>(static_cast<size_t>(k), Rational(0)));
    FieldElement basis = K.one();
    for (int l = 0; l < k; ++l) {
      FieldElement col = lead_norm_src * basis;
      for (int r = 0; r < k; ++r) mult[r][l] = col.coords()[r];
      basis *= K.generator();
    }
    QPoly cp = charpoly(mult);
    lead = cp.coeffs()[0];
    if (k % 2 == 1) lead = -lead;
  }
  return lead * monic_norm;
}

FieldRoots roots_in_field(const KPoly& p) {
  const NumberField& K = p.field();
  FieldRoots out;
  if (p.degree() < 1) return out;
  KPoly sqf = divmod(p, gcd(p, p.derivative())).first.monic();
  std::vector<KPoly> factors;
  if (K.degree() == 1) {
    std::vector<Rational> qc;
    for (const auto& c : sqf.coeffs()) qc.push_back(c.to_rational());
    for (const auto& [f, mult] : factor(QPoly(qc))) {
      std::vector<FieldElement> kc;
      for (const auto& c : f.coeffs()) kc.push_back(K.from_rational(c));
      factors.emplace_back(K, std::move(kc));
    }
  } else {
    // Trager: shift until the norm is squarefree, factor the norm over Q and
    // pull each factor back with a gcd over K.
    FieldElement theta = K.generator();
    for (long s = 0;; ++s) {
      if (s > 64) throw Error(ErrorKind::InternalConsistency, "no squarefree norm shift found");
      FieldElement shift = Rational(s) * theta;
      KPoly q = sqf.shift(-shift);
      QPoly nq = norm(q);
      if (gcd(nq, nq.derivative()).degree() > 0) continue;
      for (const auto& [g, mult] : factor(nq)) {
        std::vector<FieldElement> kc;
        for (const auto& c : g.coeffs()) kc.push_back(K.from_rational(c));
        KPoly h = gcd(q, KPoly(K, std::move(kc)));
        if (h.degree() >= 1) factors.push_back(h.shift(shift).monic());
      }
      break;
    }
  }
  for (const auto& f : factors) {
    if (f.degree() == 1)
      out.roots.push_back(-f.coeffs()[0] / f.coeffs()[1]);
    else
      out.nonlinear.push_back(f);
  }
  std::sort(out.roots.begin(), out.roots.end(), coord_less);
  return out;
}

}  // namespace downup
