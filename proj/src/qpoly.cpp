#include "downup/qpoly.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <optional>
#include <random>
#include <sstream>

#include "downup/errors.hpp"

namespace downup {

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (ch != ' ') s.push_back(ch);
  auto valid_int = [](const std::string& t, bool allow_sign) {
    size_t i = 0;
    if (allow_sign && !t.empty() && (t[0] == '-' || t[0] == '+')) i = 1;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false))
    throw Error(ErrorKind::InvalidInput, "not a rational literal: '" + text + "'");
  if (num[0] == '+') num.erase(0, 1);
  Integer d(den);
  if (d == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator in '" + text + "'");
  Rational q(Integer(num), d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

namespace {

class PolyParser {
 public:
  PolyParser(const std::string& s, const std::string& var) : s_(s), var_(var) {}

  QPoly parse() {
    skip();
    if (pos_ == s_.size()) fail("empty polynomial");
    QPoly v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) {
    throw Error(ErrorKind::SyntaxError, "polynomial '" + s_ + "' at position " + std::to_string(pos_) + ": " + msg);
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
  QPoly expr() {
    QPoly v = term();
    for (;;) {
      if (eat('+'))
        v = v + term();
      else if (eat('-'))
        v = v - term();
      else
        return v;
    }
  }
  QPoly term() {
    QPoly v = unary();
    for (;;) {
      if (eat('*')) {
        v = v * unary();
      } else if (eat('/')) {
        QPoly d = unary();
        if (d.degree() != 0) fail("can only divide by a nonzero constant");
        v = Rational(1 / d.leading()) * v;
      } else {
        return v;
      }
    }
  }
  QPoly unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }
  QPoly power() {
    QPoly base = atom();
    if (!eat('^')) return base;
    skip();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_ || pos_ - start > 4) fail("expected a small nonnegative integer exponent");
    int e = std::stoi(s_.substr(start, pos_ - start));
    QPoly r = QPoly::constant(1);
    for (int i = 0; i < e; ++i) r = r * base;
    return r;
  }
  QPoly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    if (eat('(')) {
      QPoly v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    size_t start = pos_;
    if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return QPoly::constant(Rational(Integer(s_.substr(start, pos_ - start))));
    }
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    if (s_.substr(start, pos_ - start) != var_ || start == pos_) {
      pos_ = start;
      fail("expected a number or '" + var_ + "'");
    }
    return QPoly::x();
  }

  const std::string& s_;
  const std::string& var_;
  size_t pos_ = 0;
};

}  // namespace

QPoly parse_qpoly(const std::string& text, const std::string& var) { return PolyParser(text, var).parse(); }

QPoly::QPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly QPoly::constant(const Rational& c) { return QPoly(std::vector<Rational>{c}); }

QPoly QPoly::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = c;
  return QPoly(std::move(v));
}

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational QPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[i];
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

QPoly operator+(const QPoly& a, const QPoly& b) {
  std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return QPoly(std::move(v));
}

QPoly operator-(const QPoly& a, const QPoly& b) { return a + (-b); }

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  return QPoly(std::move(v));
}

QPoly operator*(const Rational& s, const QPoly& a) {
  std::vector<Rational> v = a.c_;
  for (auto& c : v) c *= s;
  return QPoly(std::move(v));
}

Rational QPoly::eval(const Rational& t) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

QPoly QPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> v(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * static_cast<long>(i);
  return QPoly(std::move(v));
}

QPoly QPoly::monic() const {
  if (is_zero()) return *this;
  Rational inv = 1 / leading();
  return inv * *this;
}

std::string QPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    Rational c = c_[i];
    if (c == 0) continue;
    bool neg = c < 0;
    Rational a = neg ? Rational(-c) : c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    if (i == 0) {
      os << a.get_str();
      continue;
    }
    if (a != 1) os << a.get_str() << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  if (a.degree() < b.degree()) return {QPoly(), a};
  std::vector<Rational> r = a.coeffs();
  std::vector<Rational> q(a.degree() - b.degree() + 1, Rational(0));
  const auto& bc = b.coeffs();
  Rational inv = 1 / b.leading();
  for (int i = a.degree() - b.degree(); i >= 0; --i) {
    Rational f = r[i + b.degree()] * inv;
    q[i] = f;
    if (f == 0) continue;
    for (int j = 0; j <= b.degree(); ++j) r[i + j] -= f * bc[j];
  }
  return {QPoly(std::move(q)), QPoly(std::move(r))};
}

QPoly operator%(const QPoly& a, const QPoly& b) { return divmod(a, b).second; }

QPoly gcd(const QPoly& a, const QPoly& b) {
  QPoly x = a, y = b;
  while (!y.is_zero()) {
    QPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

ExtendedGcd extended_gcd(const QPoly& a, const QPoly& b) {
  QPoly r0 = a, r1 = b;
  QPoly s0 = QPoly::constant(1), s1;
  QPoly t0, t1 = QPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    QPoly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    QPoly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Rational inv = 1 / r0.leading();
  return {inv * r0, inv * s0, inv * t0};
}

namespace {

// ---------------------------------------------------------------------------
// Arithmetic in F_p[X] for small primes (p < 2^31), coefficients low first.

using u64 = std::uint64_t;
using ModPoly = std::vector<u64>;

void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const ModPoly& a) { return static_cast<int>(a.size()) - 1; }

u64 pow_mod(u64 b, u64 e, u64 p) {
  u64 r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

u64 inv_mod(u64 a, u64 p) { return pow_mod(a, p - 2, p); }

ModPoly mp_sub(const ModPoly& a, const ModPoly& b, u64 p) {
  ModPoly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + p - b[i]) % p;
  trim(r);
  return r;
}

ModPoly mp_add(const ModPoly& a, const ModPoly& b, u64 p) {
  ModPoly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + b[i]) % p;
  trim(r);
  return r;
}

ModPoly mp_mul(const ModPoly& a, const ModPoly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  ModPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  trim(r);
  return r;
}

std::pair<ModPoly, ModPoly> mp_divmod(const ModPoly& a, const ModPoly& b, u64 p) {
  if (deg(a) < deg(b)) return {{}, a};
  ModPoly r = a;
  ModPoly q(a.size() - b.size() + 1, 0);
  u64 inv = inv_mod(b.back(), p);
  for (int i = deg(a) - deg(b); i >= 0; --i) {
    u64 f = r[i + deg(b)] * inv % p;
    q[i] = f;
    if (f == 0) continue;
    for (int j = 0; j <= deg(b); ++j) r[i + j] = (r[i + j] + p - f * b[j] % p) % p;
  }
  trim(q);
  trim(r);
  return {q, r};
}

ModPoly mp_monic(const ModPoly& a, u64 p) {
  if (a.empty()) return a;
  u64 inv = inv_mod(a.back(), p);
  ModPoly r = a;
  for (auto& c : r) c = c * inv % p;
  return r;
}

ModPoly mp_gcd(ModPoly a, ModPoly b, u64 p) {
  while (!b.empty()) {
    ModPoly r = mp_divmod(a, b, p).second;
    a = std::move(b);
    b = std::move(r);
  }
  return mp_monic(a, p);
}

// s*a + t*b = 1 for coprime a, b.
std::pair<ModPoly, ModPoly> mp_bezout(const ModPoly& a, const ModPoly& b, u64 p) {
  ModPoly r0 = a, r1 = b, s0{1}, s1, t0, t1{1};
  while (!r1.empty()) {
    auto [q, r] = mp_divmod(r0, r1, p);
    r0 = std::move(r1);
    r1 = std::move(r);
    ModPoly s2 = mp_sub(s0, mp_mul(q, s1, p), p);
    s0 = std::move(s1);
    s1 = std::move(s2);
    ModPoly t2 = mp_sub(t0, mp_mul(q, t1, p), p);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  u64 inv = inv_mod(r0.back(), p);
  for (auto& c : s0) c = c * inv % p;
  for (auto& c : t0) c = c * inv % p;
  return {s0, t0};
}

ModPoly mp_powmod(ModPoly base, const Integer& e, const ModPoly& m, u64 p) {
  ModPoly r{1};
  base = mp_divmod(base, m, p).second;
  size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (size_t i = bits; i-- > 0;) {
    r = mp_divmod(mp_mul(r, r, p), m, p).second;
    if (mpz_tstbit(e.get_mpz_t(), i)) r = mp_divmod(mp_mul(r, base, p), m, p).second;
  }
  return r;
}

ModPoly mp_derivative(const ModPoly& a, u64 p) {
  if (a.size() <= 1) return {};
  ModPoly r(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * (i % p) % p;
  trim(r);
  return r;
}

void equal_degree_split(const ModPoly& g, int d, u64 p, std::mt19937_64& rng,
                        std::vector<ModPoly>& out) {
  if (deg(g) == d) {
    out.push_back(g);
    return;
  }
  Integer e;
  mpz_ui_pow_ui(e.get_mpz_t(), p, d);
  e = (e - 1) / 2;
  std::uniform_int_distribution<u64> coef(0, p - 1);
  for (;;) {
    ModPoly a(deg(g));
    for (auto& c : a) c = coef(rng);
    trim(a);
    if (deg(a) < 1) continue;
    ModPoly b = mp_sub(mp_powmod(a, e, g, p), ModPoly{1}, p);
    ModPoly c = mp_gcd(g, b, p);
    if (deg(c) > 0 && deg(c) < deg(g)) {
      equal_degree_split(c, d, p, rng, out);
      equal_degree_split(mp_divmod(g, c, p).first, d, p, rng, out);
      return;
    }
  }
}

// Monic irreducible factors of a monic squarefree polynomial over F_p.
std::vector<ModPoly> factor_mod_p(ModPoly f, u64 p) {
  std::vector<ModPoly> out;
  std::mt19937_64 rng(0x5eed);
  ModPoly xpoly{0, 1};
  ModPoly h = xpoly;
  for (int d = 1; deg(f) >= 2 * d; ++d) {
    h = mp_powmod(h, Integer(static_cast<unsigned long>(p)), f, p);
    ModPoly g = mp_gcd(f, mp_sub(h, xpoly, p), p);
    if (deg(g) > 0) {
      equal_degree_split(g, d, p, rng, out);
      f = mp_divmod(f, g, p).first;
      h = mp_divmod(h, f, p).second;
    }
  }
  if (deg(f) > 0) out.push_back(mp_monic(f, p));
  return out;
}

// ---------------------------------------------------------------------------
// Integer polynomials.

using ZPoly = std::vector<Integer>;

void trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

ZPoly z_mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, Integer(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

ModPoly to_mod(const ZPoly& a, u64 p) {
  ModPoly r(a.size());
  Integer pz(static_cast<unsigned long>(p));
  for (size_t i = 0; i < a.size(); ++i) {
    Integer m;
    mpz_fdiv_r(m.get_mpz_t(), a[i].get_mpz_t(), pz.get_mpz_t());
    r[i] = m.get_ui();
  }
  trim(r);
  return r;
}

ZPoly from_mod(const ModPoly& a) {
  ZPoly r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = Integer(static_cast<unsigned long>(a[i]));
  return r;
}

Integer content(const ZPoly& a) {
  Integer g = 0;
  for (const auto& c : a) g = gcd(g, c);
  return g;
}

ZPoly primitive(ZPoly a) {
  Integer g = content(a);
  if (g == 0) return a;
  if (a.back() < 0) g = -g;
  for (auto& c : a) c /= g;
  return a;
}

std::optional<ZPoly> z_exact_div(const ZPoly& a, const ZPoly& b) {
  if (deg(a) < deg(b)) return std::nullopt;
  ZPoly r = a;
  ZPoly q(a.size() - b.size() + 1, Integer(0));
  for (int i = deg(a) - deg(b); i >= 0; --i) {
    const Integer& top = r[i + deg(b)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), b.back().get_mpz_t())) return std::nullopt;
    Integer f = top / b.back();
    q[i] = f;
    for (int j = 0; j <= deg(b); ++j) r[i + j] -= f * b[j];
  }
  trim(r);
  if (!r.empty()) return std::nullopt;
  trim(q);
  return q;
}

// Lifts f = g*h (mod p), h monic and lc(g) = lc(f), to f = g*h (mod p^target_exp).
void hensel_lift_pair(const ZPoly& f, ZPoly& g, ZPoly& h, u64 p, int target_exp) {
  auto [s, t] = mp_bezout(to_mod(g, p), to_mod(h, p), p);
  Integer pk(static_cast<unsigned long>(p));
  for (int k = 1; k < target_exp; ++k) {
    ZPoly gh = z_mul(g, h);
    ZPoly e(f.size(), Integer(0));
    for (size_t i = 0; i < f.size(); ++i) e[i] = f[i] - (i < gh.size() ? gh[i] : Integer(0));
    for (auto& c : e) c /= pk;
    trim(e);
    ModPoly em = to_mod(e, p);
    ModPoly sig = mp_mul(s, em, p);
    ModPoly tau = mp_mul(t, em, p);
    auto [q, r] = mp_divmod(sig, to_mod(h, p), p);
    ModPoly dg = mp_add(tau, mp_mul(q, to_mod(g, p), p), p);
    for (size_t i = 0; i < dg.size(); ++i) g[i] += pk * Integer(static_cast<unsigned long>(dg[i]));
    for (size_t i = 0; i < r.size(); ++i) h[i] += pk * Integer(static_cast<unsigned long>(r[i]));
    pk *= static_cast<unsigned long>(p);
  }
}

ZPoly reduce_mod(ZPoly a, const Integer& m) {
  for (auto& c : a) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  trim(a);
  return a;
}

// Monic lifts (mod p^e) of the modular factorization f = lc(f) * prod(factors).
std::vector<ZPoly> hensel_lift_all(const ZPoly& f, const std::vector<ModPoly>& factors, u64 p,
                                   int e, const Integer& modulus) {
  if (factors.size() == 1) {
    Integer inv;
    mpz_invert(inv.get_mpz_t(), f.back().get_mpz_t(), modulus.get_mpz_t());
    ZPoly r = f;
    for (auto& c : r) c *= inv;
    return {reduce_mod(r, modulus)};
  }
  size_t half = factors.size() / 2;
  std::vector<ModPoly> left(factors.begin(), factors.begin() + half);
  std::vector<ModPoly> right(factors.begin() + half, factors.end());
  ModPoly gm{to_mod(ZPoly{f.back()}, p)};
  for (const auto& a : left) gm = mp_mul(gm, a, p);
  ModPoly hm{1};
  for (const auto& a : right) hm = mp_mul(hm, a, p);
  ZPoly g = from_mod(gm);
  g.back() = f.back();
  ZPoly h = from_mod(hm);
  hensel_lift_pair(f, g, h, p, e);
  auto a = hensel_lift_all(g, left, p, e, modulus);
  auto b = hensel_lift_all(h, right, p, e, modulus);
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

bool next_combination(std::vector<size_t>& idx, size_t n) {
  size_t k = idx.size();
  for (size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

bool is_small_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Zassenhaus: irreducible factors of a primitive squarefree integer polynomial.
std::vector<ZPoly> factor_squarefree_z(ZPoly f) {
  if (deg(f) <= 1) return {f};
  // Pick among the first few admissible primes the one with fewest modular factors.
  u64 best_p = 0;
  std::vector<ModPoly> best;
  int tried = 0;
  for (u64 p = 3; tried < 6 && p < 2000; ++p) {
    if (!is_small_prime(p)) continue;
    ModPoly fm = to_mod(f, p);
    if (deg(fm) != deg(f)) continue;
    if (deg(mp_gcd(fm, mp_derivative(fm, p), p)) != 0) continue;
    ++tried;
    auto fac = factor_mod_p(mp_monic(fm, p), p);
    if (best_p == 0 || fac.size() < best.size()) {
      best_p = p;
      best = std::move(fac);
    }
    if (best.size() == 1) break;
  }
  if (best_p == 0) throw Error(ErrorKind::InternalConsistency, "no admissible prime for factorization");
  if (best.size() == 1) return {f};
  const u64 p = best_p;

  // Landau-Mignotte style bound on factor coefficients, times lc for the
  // recombination scaling.
  Integer norm1 = 0;
  for (const auto& c : f) norm1 += abs(c);
  Integer bound = abs(f.back()) * norm1;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<mp_bitcnt_t>(deg(f)));
  bound *= 2;
  int e = 1;
  Integer modulus(static_cast<unsigned long>(p));
  while (modulus <= bound) {
    modulus *= static_cast<unsigned long>(p);
    ++e;
  }
  std::vector<ZPoly> lifted = hensel_lift_all(f, best, p, e, modulus);

  Integer half_mod = modulus / 2;
  std::vector<ZPoly> result;
  size_t s = 1;
  while (2 * s <= lifted.size()) {
    bool found = false;
    std::vector<size_t> idx(s);
    for (size_t i = 0; i < s; ++i) idx[i] = i;
    do {
      ZPoly g{f.back()};
      for (size_t i : idx) g = reduce_mod(z_mul(g, lifted[i]), modulus);
      for (auto& c : g)
        if (c > half_mod) c -= modulus;
      trim(g);
      g = primitive(g);
      auto q = z_exact_div(f, g);
      if (!q) continue;
      result.push_back(g);
      f = *q;
      for (size_t k = idx.size(); k-- > 0;) lifted.erase(lifted.begin() + static_cast<long>(idx[k]));
      found = true;
      break;
    } while (next_combination(idx, lifted.size()));
    if (!found) ++s;
  }
  if (deg(f) > 0) result.push_back(primitive(f));
  return result;
}

ZPoly to_primitive_z(const QPoly& f) {
  Integer den = 1;
  for (const auto& c : f.coeffs()) den = lcm(den, c.get_den());
  ZPoly z(f.coeffs().size());
  for (size_t i = 0; i < z.size(); ++i) {
    Rational v = f.coeffs()[i] * den;
    z[i] = v.get_num();
  }
  return primitive(z);
}

QPoly to_monic_q(const ZPoly& z) {
  std::vector<Rational> v(z.size());
  for (size_t i = 0; i < z.size(); ++i) v[i] = Rational(z[i]);
  return QPoly(std::move(v)).monic();
}

bool poly_less(const QPoly& a, const QPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = 0; i <= a.degree(); ++i)
    if (a.coeffs()[i] != b.coeffs()[i]) return a.coeffs()[i] < b.coeffs()[i];
  return false;
}

}  // namespace

std::vector<std::pair<QPoly, int>> factor(const QPoly& f) {
  std::vector<std::pair<QPoly, int>> out;
  if (f.degree() <= 0) return out;
  // Yun's squarefree decomposition.
  QPoly a = f.monic();
  QPoly a0 = gcd(a, a.derivative());
  QPoly b = divmod(a, a0).first;
  QPoly c = divmod(a.derivative(), a0).first;
  QPoly d = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    QPoly g = gcd(b, d);
    if (g.degree() > 0) {
      for (const auto& z : factor_squarefree_z(to_primitive_z(g)))
        out.emplace_back(to_monic_q(z), i);
    }
    b = divmod(b, g).first;
    c = divmod(d, g).first;
    d = c - b.derivative();
  }
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return poly_less(x.first, y.first); });
  return out;
}

bool is_irreducible(const QPoly& f) {
  if (f.degree() < 1) return false;
  auto fac = factor(f);
  return fac.size() == 1 && fac[0].second == 1;
}

}  // namespace downup
