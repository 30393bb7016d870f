#include "downup/algebra.hpp"

#include <mutex>
#include <sstream>

namespace downup {

// ---------------------------------------------------------------------------
// BivarPoly

BivarPoly BivarPoly::constant(const FieldElement& c) {
  BivarPoly p(c.field());
  p.add_term(0, 0, c);
  return p;
}

BivarPoly BivarPoly::x(const NumberField& field) {
  BivarPoly p(field);
  p.add_term(1, 0, field.one());
  return p;
}

BivarPoly BivarPoly::y(const NumberField& field) {
  BivarPoly p(field);
  p.add_term(0, 1, field.one());
  return p;
}

BivarPoly BivarPoly::affine(const FieldElement& a, const FieldElement& b, const FieldElement& c) {
  BivarPoly p(a.field());
  p.add_term(1, 0, a);
  p.add_term(0, 1, b);
  p.add_term(0, 0, c);
  return p;
}

FieldElement BivarPoly::coeff(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? field_.zero() : it->second;
}

int BivarPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
  return d;
}

void BivarPoly::add_term(int i, int j, const FieldElement& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace({i, j}, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

BivarPoly BivarPoly::operator-() const {
  BivarPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

BivarPoly operator+(const BivarPoly& a, const BivarPoly& b) {
  BivarPoly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e.first, e.second, c);
  return r;
}

BivarPoly operator-(const BivarPoly& a, const BivarPoly& b) {
  BivarPoly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e.first, e.second, -c);
  return r;
}

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
  BivarPoly r(a.field_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
  return r;
}

BivarPoly operator*(const FieldElement& s, const BivarPoly& a) {
  BivarPoly r(a.field_);
  if (s.is_zero()) return r;
  for (const auto& [e, c] : a.terms_) r.add_term(e.first, e.second, s * c);
  return r;
}

bool operator==(const BivarPoly& a, const BivarPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  auto it = b.terms_.begin();
  for (const auto& [e, c] : a.terms_) {
    if (it->first != e || it->second != c) return false;
    ++it;
  }
  return true;
}

BivarPoly BivarPoly::pow(int e) const {
  BivarPoly r = constant(field_.one());
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

FieldElement BivarPoly::eval(const FieldElement& xv, const FieldElement& yv) const {
  FieldElement acc = field_.zero();
  for (const auto& [e, c] : terms_) acc += c * xv.pow(e.first) * yv.pow(e.second);
  return acc;
}

BivarPoly BivarPoly::substitute(const BivarPoly& xi, const BivarPoly& yi) const {
  int mx = 0, my = 0;
  for (const auto& [e, c] : terms_) {
    mx = std::max(mx, e.first);
    my = std::max(my, e.second);
  }
  std::vector<BivarPoly> xp{constant(field_.one())}, yp{constant(field_.one())};
  for (int i = 1; i <= mx; ++i) xp.push_back(xp.back() * xi);
  for (int j = 1; j <= my; ++j) yp.push_back(yp.back() * yi);
  BivarPoly r(field_);
  for (const auto& [e, c] : terms_) r = r + c * (xp[static_cast<size_t>(e.first)] * yp[static_cast<size_t>(e.second)]);
  return r;
}

std::string BivarPoly::to_string(const std::string& spelling) const {
  if (is_zero()) return "0";
  const bool ud = spelling == "ud";
  const std::string xs = ud ? "(ud)" : "x";
  const std::string ys = ud ? "(du)" : "y";
  std::ostringstream os;
  bool first = true;
  // Highest total degree first, then by x-degree.
  std::vector<std::pair<Exponent, FieldElement>> ordered(terms_.begin(), terms_.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& l, const auto& r) {
    int dl = l.first.first + l.first.second, dr = r.first.first + r.first.second;
    if (dl != dr) return dl > dr;
    return l.first.first > r.first.first;
  });
  for (const auto& [e, c] : ordered) {
    if (!first) os << " + ";
    first = false;
    bool monomial = e.first + e.second > 0;
    if (!monomial) {
      os << "(" << c.to_string() << ")";
      continue;
    }
    if (!c.is_one()) os << "(" << c.to_string() << ")*";
    bool need_star = false;
    if (e.first > 0) {
      os << xs;
      if (e.first > 1) os << "^" << e.first;
      need_star = true;
    }
    if (e.second > 0) {
      if (need_star) os << "*";
      os << ys;
      if (e.second > 1) os << "^" << e.second;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Params

std::string to_string(CaseTag c) {
  switch (c) {
    case CaseTag::Case1: return "Case1";
    case CaseTag::Case2: return "Case2";
    case CaseTag::Case3: return "Case3";
    case CaseTag::Case4: return "Case4";
  }
  return "?";
}

std::string to_string(AlgebraType t) {
  switch (t) {
    case AlgebraType::a: return "a";
    case AlgebraType::b: return "b";
    case AlgebraType::c: return "c";
    case AlgebraType::d: return "d";
  }
  return "?";
}

struct Params::Data {
  NumberField field;
  FieldElement alpha, beta, gamma, eta;
  CaseTag case_tag;
  AlgebraType type;
  std::optional<std::pair<FieldElement, FieldElement>> roots;
  std::vector<FieldElement> not_split_poly;
  std::string not_split_message;
};

Params Params::make(const FieldElement& alpha, const FieldElement& beta, const FieldElement& gamma) {
  if (beta.is_zero()) throw Error(ErrorKind::BetaZero, "beta must be nonzero (Noetherian down-up algebra)");
  if (alpha.field() != beta.field() || alpha.field() != gamma.field())
    throw Error(ErrorKind::FieldMismatch, "alpha, beta, gamma must lie in one field");
  auto d = std::make_shared<Data>();
  d->field = alpha.field();
  d->alpha = alpha;
  d->beta = beta;
  d->gamma = gamma;
  d->eta = -beta;
  const NumberField& K = d->field;
  const bool disc_zero = (alpha * alpha + K.from_int(4) * beta).is_zero();
  const bool sum_one = (alpha + beta).is_one();
  if (!disc_zero)
    d->case_tag = sum_one ? CaseTag::Case2 : CaseTag::Case1;
  else
    d->case_tag = sum_one ? CaseTag::Case4 : CaseTag::Case3;
  if (gamma.is_zero())
    d->type = sum_one ? AlgebraType::a : AlgebraType::b;
  else
    d->type = sum_one ? AlgebraType::d : AlgebraType::c;
  try {
    d->roots = quadratic_roots(alpha, beta);
  } catch (const FieldNotSplit& e) {
    d->not_split_poly = e.poly();
    d->not_split_message = e.what();
  }
  return Params(std::move(d));
}

const NumberField& Params::field() const { return d_->field; }
const FieldElement& Params::alpha() const { return d_->alpha; }
const FieldElement& Params::beta() const { return d_->beta; }
const FieldElement& Params::gamma() const { return d_->gamma; }
const FieldElement& Params::eta() const { return d_->eta; }
CaseTag Params::case_tag() const { return d_->case_tag; }
AlgebraType Params::type() const { return d_->type; }
const std::optional<std::pair<FieldElement, FieldElement>>& Params::roots() const { return d_->roots; }

std::pair<FieldElement, FieldElement> Params::split_roots() const {
  if (!d_->roots) throw FieldNotSplit(d_->not_split_poly, d_->not_split_message);
  return *d_->roots;
}

std::string Params::to_string() const {
  return "A(" + alpha().to_string() + ", " + beta().to_string() + ", " + gamma().to_string() + ")";
}

bool operator==(const Params& a, const Params& b) {
  if (a.d_ == b.d_) return true;
  if (a.field() != b.field()) return false;
  return a.alpha() == b.alpha() && a.beta() == b.beta() && a.gamma() == b.gamma();
}

void require_same(const Params& a, const Params& b) {
  if (a != b)
    throw Error(ErrorKind::ParamsMismatch, "parameters differ: " + a.to_string() + " vs " + b.to_string());
}

// ---------------------------------------------------------------------------
// sigma

LinearSigma::LinearSigma(const Params& p)
    : p_(p), fx_(p.field()), fy_(p.field()), ix_(p.field()), iy_(p.field()) {
  const NumberField& K = p.field();
  fx_ = BivarPoly::y(K);
  fy_ = BivarPoly::affine(p.beta(), p.alpha(), p.gamma());
  FieldElement binv = p.beta().inv();
  ix_ = BivarPoly::affine(-(p.alpha() * binv), binv, -(p.gamma() * binv));
  iy_ = BivarPoly::x(K);
}

const BivarPoly& LinearSigma::image_x(Direction dir) const { return dir == Direction::Forward ? fx_ : ix_; }
const BivarPoly& LinearSigma::image_y(Direction dir) const { return dir == Direction::Forward ? fy_ : iy_; }

BivarPoly LinearSigma::apply(const BivarPoly& p, Direction dir) const {
  return p.substitute(image_x(dir), image_y(dir));
}

BivarPoly LinearSigma::apply_power(const BivarPoly& p, int k) const {
  BivarPoly r = p;
  Direction dir = k >= 0 ? Direction::Forward : Direction::Inverse;
  for (int i = 0; i < std::abs(k); ++i) r = apply(r, dir);
  return r;
}

Point LinearSigma::transport_point(const Point& pt) const {
  // sigma(r)(q) = r(phi(q)) with phi(q1, q2) = (q2, alpha q2 + beta q1 + gamma),
  // so sigma(P) vanishes exactly at phi^{-1}(pt).
  const auto& [a, b] = pt;
  return {(b - p_.alpha() * a - p_.gamma()) / p_.beta(), a};
}

BivarPoly sigma_apply(const LinearSigma& s, const BivarPoly& p, Direction dir) { return s.apply(p, dir); }

// ---------------------------------------------------------------------------
// w-pair

WPair canonical_w_pair(const Params& p) {
  const NumberField& K = p.field();
  const FieldElement& al = p.alpha();
  const FieldElement& be = p.beta();
  const FieldElement& ga = p.gamma();
  const FieldElement zero = K.zero(), one = K.one(), two = K.from_int(2);
  WPair w{BivarPoly(K), BivarPoly(K), {{{zero, zero}, {zero, zero}}}, {zero, zero}, p.case_tag()};
  switch (p.case_tag()) {
    case CaseTag::Case1: {
      auto [l1, l2] = p.split_roots();
      auto make = [&](const FieldElement& l) {
        return BivarPoly::affine(be * (l - one), l * (l - one), ga * l);
      };
      w.w1 = make(l1);
      w.w2 = make(l2);
      w.jordan = {{{l1, zero}, {zero, l2}}};
      break;
    }
    case CaseTag::Case2:
      w.w1 = BivarPoly::affine(be, one, zero);
      w.w2 = BivarPoly::affine(-one, one, ga / (al - two));
      w.jordan = {{{one, zero}, {zero, p.eta()}}};
      w.shift = {ga, zero};
      break;
    case CaseTag::Case3: {
      FieldElement h = al / two;
      w.w1 = BivarPoly::affine(two * be + al, al - two, two * ga);
      w.w2 = BivarPoly::affine(-two, two, zero);
      w.jordan = {{{h, zero}, {one, h}}};
      break;
    }
    case CaseTag::Case4:
      w.w1 = BivarPoly::affine(-one, one, ga);
      w.w2 = BivarPoly::y(K);
      w.jordan = {{{one, zero}, {one, one}}};
      w.shift = {ga, zero};
      break;
  }
  LinearSigma s(p);
  const BivarPoly* ws[2] = {&w.w1, &w.w2};
  for (int i = 0; i < 2; ++i) {
    BivarPoly expect = w.jordan[i][0] * w.w1 + w.jordan[i][1] * w.w2 + BivarPoly::constant(w.shift[i]);
    if (s.apply(*ws[i], Direction::Forward) != expect)
      throw Error(ErrorKind::InternalConsistency, "w-pair equation fails for " + p.to_string());
  }
  return w;
}

// ---------------------------------------------------------------------------
// Power sequences, cached per parameter record.

namespace {

struct SequenceCache {
  std::mutex mu;
  std::map<const void*, std::pair<std::vector<BivarPoly>, std::vector<BivarPoly>>> seqs;
};

SequenceCache& cache() {
  static SequenceCache c;
  return c;
}

// Returns (x_0..x_n, y_0..y_n) computed by the recursions.
std::pair<std::vector<BivarPoly>, std::vector<BivarPoly>> sequences(const Params& p, int n,
                                                                    const void* key) {
  LinearSigma s(p);
  const NumberField& K = p.field();
  std::vector<BivarPoly> xs{BivarPoly::constant(K.one())}, ys{BivarPoly::constant(K.one())};
  {
    std::lock_guard<std::mutex> lock(cache().mu);
    auto it = cache().seqs.find(key);
    if (it != cache().seqs.end() && it->second.first.front().field() == K) {
      xs = it->second.first;
      ys = it->second.second;
    }
  }
  if (static_cast<int>(xs.size()) > n) {
    xs.resize(static_cast<size_t>(n + 1), BivarPoly(K));
    ys.resize(static_cast<size_t>(n + 1), BivarPoly(K));
    return {xs, ys};
  }
  BivarPoly x = BivarPoly::x(K);
  while (static_cast<int>(xs.size()) <= n) {
    xs.push_back(s.apply(xs.back() * x, Direction::Forward));
    ys.push_back(x * s.apply(ys.back(), Direction::Inverse));
  }
  return {xs, ys};
}

}  // namespace

PowerSequences power_sequences(const Params& p, int n) {
  if (n < 0) throw Error(ErrorKind::InvalidInput, "power_sequences needs n >= 0");
  auto [xs, ys] = sequences(p, n, nullptr);
  LinearSigma s(p);
  const NumberField& K = p.field();
  BivarPoly x = BivarPoly::x(K);
  BivarPoly xprod = BivarPoly::constant(K.one()), yprod = BivarPoly::constant(K.one());
  for (int i = 1; i <= n; ++i) {
    xprod = xprod * s.apply_power(x, i);
    yprod = yprod * s.apply_power(x, -(i - 1));
  }
  if (xprod != xs.back() || yprod != ys.back())
    throw Error(ErrorKind::InternalConsistency, "power sequence recursion disagrees with product formula");
  return {xs.back(), ys.back()};
}

namespace {

const BivarPoly& seq_x(const std::vector<BivarPoly>& xs, int n) { return xs[static_cast<size_t>(n)]; }

}  // namespace

bool sigma_x_in_ideal(const Params& p, int n) {
  LinearSigma s(p);
  BivarPoly v = s.apply_power(BivarPoly::x(p.field()), n);
  return v.coeff(0, 0).is_zero() && v.coeff(0, 1).is_zero();
}

bool sigma_inv_x_in_y_ideal(const Params& p, int n) {
  LinearSigma s(p);
  BivarPoly v = s.apply_power(BivarPoly::x(p.field()), -n);
  return v.coeff(0, 0).is_zero() && v.coeff(1, 0).is_zero();
}

// ---------------------------------------------------------------------------
// AlgebraElement

AlgebraElement AlgebraElement::d(const Params& p) {
  return homogeneous(p, 1, BivarPoly::constant(p.field().one()));
}

AlgebraElement AlgebraElement::u(const Params& p) {
  return homogeneous(p, -1, BivarPoly::constant(p.field().one()));
}

AlgebraElement AlgebraElement::scalar(const Params& p, const FieldElement& c) {
  return homogeneous(p, 0, BivarPoly::constant(c));
}

AlgebraElement AlgebraElement::homogeneous(const Params& p, int degree, const BivarPoly& coeff) {
  AlgebraElement a(p);
  a.add_component(degree, coeff);
  return a;
}

void AlgebraElement::add_component(int degree, const BivarPoly& p) {
  if (p.is_zero()) return;
  auto it = comp_.find(degree);
  if (it == comp_.end()) {
    comp_.emplace(degree, p);
    return;
  }
  it->second = it->second + p;
  if (it->second.is_zero()) comp_.erase(it);
}

BivarPoly AlgebraElement::component(int degree) const {
  auto it = comp_.find(degree);
  return it == comp_.end() ? BivarPoly(params_.field()) : it->second;
}

std::optional<FieldElement> AlgebraElement::as_scalar() const {
  if (comp_.empty()) return params_.field().zero();
  if (comp_.size() != 1 || comp_.begin()->first != 0) return std::nullopt;
  const BivarPoly& p = comp_.begin()->second;
  if (p.total_degree() != 0) return std::nullopt;
  return p.coeff(0, 0);
}

std::string AlgebraElement::to_string(const std::string& spelling) const {
  if (comp_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = comp_.rbegin(); it != comp_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    int n = it->first;
    std::string coeff = it->second.to_string(spelling);
    if (n == 0) {
      os << coeff;
      continue;
    }
    os << (n > 0 ? "d" : "u");
    if (std::abs(n) > 1) os << "^" << std::abs(n);
    os << "*[" << coeff << "]";
  }
  return os.str();
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
  require_same(a.params_, b.params_);
  if (a.comp_.size() != b.comp_.size()) return false;
  auto it = b.comp_.begin();
  for (const auto& [n, p] : a.comp_) {
    if (it->first != n || it->second != p) return false;
    ++it;
  }
  return true;
}

AlgebraElement nf_add(const AlgebraElement& a, const AlgebraElement& b) {
  require_same(a.params_, b.params_);
  AlgebraElement r = a;
  for (const auto& [n, p] : b.comp_) r.add_component(n, p);
  return r;
}

AlgebraElement nf_scale(const FieldElement& s, const AlgebraElement& a) {
  AlgebraElement r(a.params_);
  for (const auto& [n, p] : a.comp_) r.add_component(n, s * p);
  return r;
}

AlgebraElement nf_sub(const AlgebraElement& a, const AlgebraElement& b) {
  return nf_add(a, nf_scale(-a.params().field().one(), b));
}

AlgebraElement nf_mul(const AlgebraElement& a, const AlgebraElement& b) {
  require_same(a.params_, b.params_);
  const Params& P = a.params_;
  AlgebraElement r(P);
  if (a.is_zero() || b.is_zero()) return r;
  LinearSigma s(P);
  int need = 0;
  for (const auto& [m, p] : a.comp_) need = std::max(need, std::abs(m));
  for (const auto& [n, q] : b.comp_) need = std::max(need, std::abs(n));
  auto [xs, ys] = sequences(P, need, nullptr);
  // Commutation rules from theta: d r = sigma(r) d and r u = u sigma(r);
  // d^k u^k = x_k and u^k d^k = y_k.
  for (const auto& [m, p] : a.comp_) {
    for (const auto& [n, q] : b.comp_) {
      if (m >= 0 && n >= 0) {
        r.add_component(m + n, s.apply_power(p, -n) * q);
      } else if (m < 0 && n < 0) {
        r.add_component(m + n, s.apply_power(p, -n) * q);
      } else if (m >= 0) {
        const int da = m, ub = -n;
        BivarPoly tail = s.apply_power(p, ub) * q;
        if (da >= ub)
          r.add_component(da - ub, seq_x(xs, ub) * tail);
        else
          r.add_component(-(ub - da), s.apply_power(seq_x(xs, da), ub - da) * tail);
      } else {
        const int ua = -m, db = n;
        BivarPoly tail = s.apply_power(p, -db) * q;
        if (ua >= db)
          r.add_component(-(ua - db), seq_x(ys, db) * tail);
        else
          r.add_component(db - ua, s.apply_power(seq_x(ys, ua), -(db - ua)) * tail);
      }
    }
  }
  return r;
}

AlgebraElement nf_pow(const AlgebraElement& a, int e) {
  AlgebraElement r = AlgebraElement::scalar(a.params(), a.params().field().one());
  for (int i = 0; i < e; ++i) r = nf_mul(r, a);
  return r;
}

}  // namespace downup
