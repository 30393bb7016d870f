#include "downup/field.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

#include "downup/kpoly.hpp"

namespace downup {

std::string_view kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotMonic: return "NotMonic";
    case ErrorKind::Reducible: return "Reducible";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::ZeroInput: return "ZeroInput";
    case ErrorKind::FieldNotSplit: return "FieldNotSplit";
    case ErrorKind::BetaZero: return "BetaZero";
    case ErrorKind::ParamsMismatch: return "ParamsMismatch";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::NotSubmoduleBoundary: return "NotSubmoduleBoundary";
    case ErrorKind::NoZeroWithinBound: return "NoZeroWithinBound";
    case ErrorKind::NotSimple: return "NotSimple";
    case ErrorKind::NotAnOrbit: return "NotAnOrbit";
    case ErrorKind::RelationFailure: return "RelationFailure";
    case ErrorKind::EigenvaluesNotInField: return "EigenvaluesNotInField";
    case ErrorKind::NotTypeC: return "NotTypeC";
    case ErrorKind::NotTypeD: return "NotTypeD";
    case ErrorKind::InternalConsistency: return "InternalConsistency";
    case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

struct NumberField::Data {
  QPoly minpoly;
  std::string name;
  int degree = 1;
  // theta^(degree + k) in the power basis, k = 0 .. degree - 2.
  std::vector<std::vector<Rational>> high_powers;
};

namespace {

std::shared_ptr<const NumberField::Data> make_data(const QPoly& m, std::string name) {
  auto d = std::make_shared<NumberField::Data>();
  d->minpoly = m;
  d->name = std::move(name);
  d->degree = m.degree();
  int n = d->degree;
  // theta^n = -(m_0 + m_1 theta + ... + m_{n-1} theta^{n-1})
  std::vector<Rational> cur(n);
  for (int i = 0; i < n; ++i) cur[i] = -m.coeffs()[i];
  for (int k = 0; k + 2 <= n; ++k) {
    d->high_powers.push_back(cur);
    // multiply by theta
    std::vector<Rational> next(n, Rational(0));
    Rational top = cur[n - 1];
    for (int i = n - 1; i >= 1; --i) next[i] = cur[i - 1];
    for (int i = 0; i < n; ++i) next[i] += top * (-m.coeffs()[i]);
    cur = std::move(next);
  }
  return d;
}

const std::shared_ptr<const NumberField::Data>& rational_data() {
  static const auto d = make_data(QPoly(std::vector<Rational>{0, 1}), "t");
  return d;
}

}  // namespace

NumberField::NumberField() : d_(rational_data()) {}

NumberField NumberField::make(const QPoly& minpoly, std::string name) {
  if (minpoly.degree() < 1)
    throw Error(ErrorKind::InvalidInput, "minimal polynomial must have degree >= 1");
  if (minpoly.leading() != 1)
    throw Error(ErrorKind::NotMonic, "minimal polynomial " + minpoly.to_string(name) + " is not monic");
  auto fac = factor(minpoly);
  if (!(fac.size() == 1 && fac[0].second == 1)) {
    QPoly w = fac.front().first;
    throw Reducible(w, "minimal polynomial " + minpoly.to_string(name) + " is reducible, factor " +
                           w.to_string(name));
  }
  return NumberField(make_data(minpoly, std::move(name)));
}

NumberField NumberField::make(const std::vector<Rational>& minpoly, std::string name) {
  if (minpoly.empty()) throw Error(ErrorKind::InvalidInput, "empty minimal polynomial");
  if (minpoly.back() != 1) throw Error(ErrorKind::NotMonic, "minimal polynomial is not monic");
  return make(QPoly(minpoly), std::move(name));
}

int NumberField::degree() const { return d_->degree; }
const QPoly& NumberField::minpoly() const { return d_->minpoly; }
const std::string& NumberField::name() const { return d_->name; }

FieldElement NumberField::zero() const { return FieldElement(*this); }

FieldElement NumberField::one() const { return from_rational(1); }

FieldElement NumberField::generator() const {
  if (degree() == 1) return from_rational(-minpoly().coeffs()[0]);
  std::vector<Rational> c(degree(), Rational(0));
  c[1] = 1;
  return from_coords(std::move(c));
}

FieldElement NumberField::from_rational(const Rational& q) const {
  std::vector<Rational> c(degree(), Rational(0));
  c[0] = q;
  return from_coords(std::move(c));
}

FieldElement NumberField::from_int(long v) const { return from_rational(Rational(v)); }

FieldElement NumberField::from_coords(std::vector<Rational> coords) const {
  if (static_cast<int>(coords.size()) != degree())
    throw Error(ErrorKind::InvalidInput, "field element needs exactly " + std::to_string(degree()) +
                                             " coordinates");
  FieldElement e(*this);
  for (auto& c : coords) c.canonicalize();
  e.c_ = std::move(coords);
  return e;
}

bool operator==(const NumberField& a, const NumberField& b) {
  return a.d_ == b.d_ || a.d_->minpoly == b.d_->minpoly ||
         (a.d_->degree == 1 && b.d_->degree == 1);
}

FieldElement::FieldElement(const NumberField& field)
    : field_(field), c_(field.degree(), Rational(0)) {}

void FieldElement::check_same(const FieldElement& b) const {
  if (field_.d_ != b.field_.d_ && !(field_ == b.field_))
    throw Error(ErrorKind::FieldMismatch, "operands belong to different number fields");
}

bool FieldElement::is_zero() const {
  for (const auto& c : c_)
    if (c != 0) return false;
  return true;
}

bool FieldElement::is_one() const {
  if (c_[0] != 1) return false;
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

bool FieldElement::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rational FieldElement::to_rational() const {
  if (!is_rational()) throw Error(ErrorKind::InvalidInput, to_string() + " is not rational");
  return c_[0];
}

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& b) {
  check_same(b);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += b.c_[i];
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& b) {
  check_same(b);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= b.c_[i];
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& b) {
  check_same(b);
  const int n = field_.degree();
  if (n == 1) {
    c_[0] *= b.c_[0];
    return *this;
  }
  std::vector<Rational> conv(2 * n - 1, Rational(0));
  for (int i = 0; i < n; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < n; ++j)
      if (b.c_[j] != 0) conv[i + j] += c_[i] * b.c_[j];
  }
  const auto& table = field_.d_->high_powers;
  for (int k = n; k < 2 * n - 1; ++k) {
    if (conv[k] == 0) continue;
    const auto& row = table[k - n];
    for (int i = 0; i < n; ++i) conv[i] += conv[k] * row[i];
  }
  for (int i = 0; i < n; ++i) c_[i] = std::move(conv[i]);
  return *this;
}

FieldElement FieldElement::inv() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  if (field_.degree() == 1) {
    FieldElement r = *this;
    r.c_[0] = 1 / c_[0];
    return r;
  }
  auto eg = extended_gcd(QPoly(c_), field_.minpoly());
  // eg.s * a + eg.t * m = 1
  std::vector<Rational> coords(field_.degree(), Rational(0));
  for (int i = 0; i <= eg.s.degree(); ++i) coords[i] = eg.s.coeffs()[i];
  return field_.from_coords(std::move(coords));
}

FieldElement& FieldElement::operator/=(const FieldElement& b) {
  check_same(b);
  return *this *= b.inv();
}

FieldElement operator*(const Rational& s, FieldElement a) {
  for (auto& c : a.c_) c *= s;
  return a;
}

FieldElement FieldElement::pow(long e) const {
  if (e < 0) return inv().pow(-e);
  FieldElement result = field_.one();
  FieldElement base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  a.check_same(b);
  return a.c_ == b.c_;
}

bool coord_less(const FieldElement& a, const FieldElement& b) {
  for (size_t i = a.c_.size(); i-- > 0;)
    if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
  return false;
}

std::string FieldElement::to_string() const {
  if (field_.degree() == 1) return c_[0].get_str();
  return QPoly(c_).to_string(field_.name());
}

namespace {

class ScalarParser {
 public:
  ScalarParser(const NumberField& f, const std::string& s) : f_(f), s_(s) {}

  FieldElement parse() {
    FieldElement v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) {
    throw Error(ErrorKind::SyntaxError,
                "scalar '" + s_ + "' at position " + std::to_string(pos_) + ": " + msg);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  FieldElement expr() {
    FieldElement v = term();
    for (;;) {
      if (eat('+'))
        v += term();
      else if (eat('-'))
        v -= term();
      else
        return v;
    }
  }
  FieldElement term() {
    FieldElement v = unary();
    for (;;) {
      if (eat('*')) {
        v *= unary();
      } else if (eat('/')) {
        FieldElement d = unary();
        if (d.is_zero()) fail("division by zero");
        v /= d;
      } else {
        return v;
      }
    }
  }
  FieldElement unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }
  FieldElement power() {
    FieldElement base = atom();
    if (!eat('^')) return base;
    bool neg = eat('-');
    skip();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer exponent");
    long e = std::stol(s_.substr(start, pos_ - start));
    if (neg && base.is_zero()) fail("negative power of zero");
    return base.pow(neg ? -e : e);
  }
  FieldElement atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      FieldElement v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return f_.from_rational(Rational(Integer(s_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string id = s_.substr(start, pos_ - start);
      if (id != f_.name()) {
        pos_ = start;
        fail("unknown symbol '" + id + "' (field generator is '" + f_.name() + "')");
      }
      return f_.generator();
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const NumberField& f_;
  const std::string& s_;
  size_t pos_ = 0;
};

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

}  // namespace

FieldElement parse_field_element(const NumberField& field, const std::string& text) {
  return ScalarParser(field, text).parse();
}

std::optional<int> root_of_unity_order(const FieldElement& a) {
  if (a.is_zero()) throw Error(ErrorKind::ZeroInput, "root_of_unity_order of zero");
  const int deg = a.field().degree();
  // phi(N) >= sqrt(N/2), so phi(N) <= deg forces N <= 2 deg^2.
  const int limit = 2 * deg * deg + 2;
  for (int n = 1; n <= limit; ++n) {
    if (euler_phi(n) > deg) continue;
    if (a.pow(n).is_one()) return n;
  }
  return std::nullopt;
}

FieldElement geometric_sum(const FieldElement& eta, int n) {
  FieldElement sum = eta.field().zero();
  FieldElement term = eta.field().one();
  for (int i = 0; i < n; ++i) {
    sum += term;
    term *= eta;
  }
  return sum;
}

std::pair<FieldElement, FieldElement> quadratic_roots(const FieldElement& alpha,
                                                      const FieldElement& beta) {
  const NumberField& K = alpha.field();
  FieldElement two = K.from_int(2);
  FieldElement disc = alpha * alpha + K.from_int(4) * beta;
  if (disc.is_zero()) return {alpha / two, alpha / two};
  KPoly sq(K, {-disc, K.zero(), K.one()});
  auto split = roots_in_field(sq);
  if (split.roots.empty()) {
    std::vector<FieldElement> f{-beta, -alpha, K.one()};
    throw FieldNotSplit(f, "t^2 - (" + alpha.to_string() + ")*t - (" + beta.to_string() +
                               ") does not split over the field");
  }
  const FieldElement& s = split.roots.back();
  return {(alpha + s) / two, (alpha - s) / two};
}

}  // namespace downup
