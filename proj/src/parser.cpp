#include "downup/parser.hpp"

#include <cctype>

namespace downup {

TermPtr make_scalar(const FieldElement& c) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::Scalar;
  t->scalar = c;
  return t;
}

TermPtr make_d() {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::D;
  return t;
}

TermPtr make_u() {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::U;
  return t;
}

TermPtr make_binary(Term::Kind kind, TermPtr a, TermPtr b) {
  auto t = std::make_shared<Term>();
  t->kind = kind;
  t->args = {std::move(a), std::move(b)};
  return t;
}

TermPtr make_neg(TermPtr a) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::Neg;
  t->args = {std::move(a)};
  return t;
}

TermPtr make_pow(TermPtr a, int e) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::Pow;
  t->exponent = e;
  t->args = {std::move(a)};
  return t;
}

namespace {

struct Token {
  enum class Kind { Number, Ident, Plus, Minus, Star, Caret, LParen, RParen, End };
  Kind kind;
  std::string text;
  size_t pos;
};

[[noreturn]] void syntax_error(size_t pos, const std::string& msg) {
  throw Error(ErrorKind::SyntaxError, "syntax error at offset " + std::to_string(pos) + ": " + msg);
}

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  size_t i = 0;
  auto starts = [&](const char* lit) { return s.compare(i, std::char_traits<char>::length(lit), lit) == 0; };
  while (i < s.size()) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    size_t start = i;
    if (std::isdigit(c)) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (i < s.size() && s[i] == '/') {
        ++i;
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) syntax_error(i, "expected denominator");
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      }
      out.push_back({Token::Kind::Number, s.substr(start, i - start), start});
      continue;
    }
    if (std::isalpha(c) || c == '_') {
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
      out.push_back({Token::Kind::Ident, s.substr(start, i - start), start});
      continue;
    }
    if (starts("\xCE\xB1")) {
      out.push_back({Token::Kind::Ident, "alpha", start});
      i += 2;
      continue;
    }
    if (starts("\xCE\xB2")) {
      out.push_back({Token::Kind::Ident, "beta", start});
      i += 2;
      continue;
    }
    if (starts("\xCE\xB3")) {
      out.push_back({Token::Kind::Ident, "gamma", start});
      i += 2;
      continue;
    }
    if (starts("\xE2\x88\x92")) {  // U+2212 minus sign
      out.push_back({Token::Kind::Minus, "-", start});
      i += 3;
      continue;
    }
    Token::Kind k;
    switch (c) {
      case '+': k = Token::Kind::Plus; break;
      case '-': k = Token::Kind::Minus; break;
      case '*': k = Token::Kind::Star; break;
      case '^': k = Token::Kind::Caret; break;
      case '(': k = Token::Kind::LParen; break;
      case ')': k = Token::Kind::RParen; break;
      default: syntax_error(i, std::string("unexpected character '") + s[i] + "'");
    }
    out.push_back({k, std::string(1, s[i]), start});
    ++i;
  }
  out.push_back({Token::Kind::End, "", s.size()});
  return out;
}

class Parser {
 public:
  Parser(const Params& p, std::vector<Token> toks) : p_(p), toks_(std::move(toks)) {}

  TermPtr parse() {
    if (peek().kind == Token::Kind::End) syntax_error(0, "empty expression");
    TermPtr t = expr();
    if (peek().kind != Token::Kind::End) syntax_error(peek().pos, "unexpected '" + peek().text + "'");
    return t;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  TermPtr expr() {
    TermPtr lhs = term();
    while (peek().kind == Token::Kind::Plus || peek().kind == Token::Kind::Minus) {
      auto kind = next().kind == Token::Kind::Plus ? Term::Kind::Add : Term::Kind::Sub;
      lhs = make_binary(kind, lhs, term());
    }
    return lhs;
  }

  TermPtr term() {
    TermPtr lhs = unary();
    while (peek().kind == Token::Kind::Star) {
      next();
      lhs = make_binary(Term::Kind::Mul, lhs, unary());
    }
    return lhs;
  }

  TermPtr unary() {
    if (peek().kind == Token::Kind::Minus) {
      next();
      return make_neg(unary());
    }
    return power();
  }

  TermPtr power() {
    TermPtr base = atom();
    if (peek().kind != Token::Kind::Caret) return base;
    next();
    const Token& e = next();
    if (e.kind != Token::Kind::Number || e.text.find('/') != std::string::npos)
      syntax_error(e.pos, "exponent must be a nonnegative integer");
    if (e.text.size() > 6) syntax_error(e.pos, "exponent too large");
    return make_pow(base, std::stoi(e.text));
  }

  TermPtr atom() {
    const Token& t = next();
    const NumberField& K = p_.field();
    switch (t.kind) {
      case Token::Kind::Number:
        return make_scalar(K.from_rational(parse_rational(t.text)));
      case Token::Kind::Ident:
        if (t.text == "d") return make_d();
        if (t.text == "u") return make_u();
        if (t.text == "alpha") return make_scalar(p_.alpha());
        if (t.text == "beta") return make_scalar(p_.beta());
        if (t.text == "gamma") return make_scalar(p_.gamma());
        if (t.text == K.name() && !K.is_rational()) return make_scalar(K.generator());
        throw Error(ErrorKind::FieldMismatch,
                    "syntax error at offset " + std::to_string(t.pos) + ": '" + t.text + "' is not in the field");
      case Token::Kind::LParen: {
        TermPtr inner = expr();
        if (peek().kind != Token::Kind::RParen) syntax_error(peek().pos, "expected ')'");
        next();
        return inner;
      }
      case Token::Kind::End:
        syntax_error(t.pos, "unexpected end of input");
      default:
        syntax_error(t.pos, "unexpected '" + t.text + "'");
    }
  }

  const Params& p_;
  std::vector<Token> toks_;
  size_t pos_ = 0;
};

}  // namespace

TermPtr parse_term(const Params& p, const std::string& src) { return Parser(p, tokenize(src)).parse(); }

AlgebraElement reduce(const Params& p, const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::Scalar: return AlgebraElement::scalar(p, t->scalar);
    case Term::Kind::D: return AlgebraElement::d(p);
    case Term::Kind::U: return AlgebraElement::u(p);
    case Term::Kind::Add: return nf_add(reduce(p, t->args[0]), reduce(p, t->args[1]));
    case Term::Kind::Sub: return nf_sub(reduce(p, t->args[0]), reduce(p, t->args[1]));
    case Term::Kind::Mul: return nf_mul(reduce(p, t->args[0]), reduce(p, t->args[1]));
    case Term::Kind::Neg: return nf_scale(-p.field().one(), reduce(p, t->args[0]));
    case Term::Kind::Pow: return nf_pow(reduce(p, t->args[0]), t->exponent);
  }
  throw Error(ErrorKind::InternalConsistency, "unknown term kind");
}

AlgebraElement parse_expression(const Params& p, const std::string& src) { return reduce(p, parse_term(p, src)); }

}  // namespace downup
