#include "lieexp/text.hpp"

#include <cctype>
#include <sstream>

namespace lieexp {

namespace {

struct Lexer {
  const std::string& src;
  size_t pos = 0;
  int line = 1, col = 1;

  explicit Lexer(const std::string& s) : src(s) {}

  void advance() {
    if (pos < src.size() && src[pos] == '\n') { ++line; col = 0; }
    ++pos;
    ++col;
  }
  void skipWs() {
    while (pos < src.size() && std::isspace((unsigned char)src[pos])) advance();
  }
  bool atEnd() {
    skipWs();
    return pos >= src.size();
  }
  char peek() {
    skipWs();
    return pos < src.size() ? src[pos] : '\0';
  }
  bool eat(char c) {
    if (peek() == c) { advance(); return true; }
    return false;
  }
  void expect(char c, const char* what) {
    if (!eat(c))
      throw SyntaxError(std::string("expected '") + c + "' (" + what + ")", line, col);
  }
  [[noreturn]] void fail(const std::string& msg) { throw SyntaxError(msg, line, col); }

  long long integer() {
    skipWs();
    bool neg = false;
    if (peek() == '-') { neg = true; advance(); }
    else if (peek() == '+') advance();
    skipWs();
    if (pos >= src.size() || !std::isdigit((unsigned char)src[pos])) fail("expected integer");
    long long value = 0;
    while (pos < src.size() && std::isdigit((unsigned char)src[pos])) {
      value = value * 10 + (src[pos] - '0');
      advance();
    }
    return neg ? -value : value;
  }

  bool peekDigit() {
    skipWs();
    return pos < src.size() && std::isdigit((unsigned char)src[pos]);
  }

  /// digit, or a sign followed (modulo whitespace) by a digit
  bool peekSignedNumber() {
    skipWs();
    size_t p = pos;
    if (p < src.size() && (src[p] == '+' || src[p] == '-')) {
      ++p;
      while (p < src.size() && std::isspace((unsigned char)src[p])) ++p;
    }
    return p < src.size() && std::isdigit((unsigned char)src[p]);
  }
};

int parseVar(Lexer& lex, const AlgebraSignature& sig) {
  char c = lex.peek();
  if (c != 'x' && c != 'y') lex.fail("expected a variable x<k> or y<k>");
  lex.advance();
  if (!lex.peekDigit()) lex.fail("variable needs an index");
  long long idx = lex.integer();
  if (idx < 1) lex.fail("variable index must be positive");
  if (c == 'y') {
    if (!sig.isPoissonType())
      throw SignatureViolation("y-variables only exist in Poisson-type algebras");
    if (idx > sig.n) lex.fail("variable index out of range for " + sig.name());
    return sig.n + (int)idx - 1;
  }
  if (idx > sig.n) lex.fail("variable index out of range for " + sig.name());
  return (int)idx - 1;
}

// factor := "e^{" integer "*" var ["^" power] "}" | var ["^" integer]
void parseFactor(Lexer& lex, const AlgebraSignature& sig, Monomial& m) {
  if (lex.peek() == 'e') {
    lex.advance();
    lex.expect('^', "exponential factor");
    lex.expect('{', "exponential factor");
    long long a = lex.integer();
    lex.expect('*', "exponential factor");
    int v = parseVar(lex, sig);
    int power = 1;
    if (lex.eat('^')) {
      long long p = lex.integer();
      if (p < 1) lex.fail("exponential power must be positive");
      power = (int)p;
    }
    lex.expect('}', "exponential factor");
    m.setExpCoeff(v, power, m.expCoeff(v, power) + a);
    return;
  }
  int v = parseVar(lex, sig);
  long long j = 1;
  if (lex.eat('^')) j = lex.integer();
  m.setPolyPower(v, m.polyPower(v) + j);
}

bool atFactorStart(Lexer& lex) {
  char c = lex.peek();
  return c == 'e' || c == 'x' || c == 'y';
}

Monomial parseTerm(Lexer& lex, const AlgebraSignature& sig, int sign) {
  Monomial m;
  m.coeff = sign;
  bool sawCoeff = false;
  if (lex.peekSignedNumber()) {
    long long num = lex.integer();
    Rat c(num);
    if (lex.eat('/')) {
      long long den = lex.integer();
      if (den <= 0) lex.fail("denominator must be positive");
      c = Rat(num, den);
    }
    m.coeff *= c;
    sawCoeff = true;
  }
  bool needFactor = !sawCoeff && lex.peek() != 'D';
  if (sawCoeff && lex.eat('*')) needFactor = lex.peek() != 'D';
  if (needFactor) {
    if (!atFactorStart(lex)) lex.fail("expected a factor");
    parseFactor(lex, sig, m);
    while (lex.eat('*')) parseFactor(lex, sig, m);
  }
  if (lex.peek() == 'D') {
    lex.advance();
    if (!lex.peekDigit()) lex.fail("derivation slot needs an index");
    long long t = lex.integer();
    if (t < 1 || t > sig.numVars()) lex.fail("derivation index out of range");
    m.deriv = (int)t - 1;
  }
  return m;
}

} // namespace

Element parseElement(const std::string& src, SigPtr sig) {
  if (!sig) throw SignatureViolation("parse needs a signature");
  Lexer lex(src);
  if (lex.atEnd()) lex.fail("empty input");
  std::vector<Monomial> raw;
  int sign = 1;
  if (lex.eat('-')) sign = -1;
  else lex.eat('+');
  for (;;) {
    Monomial m = parseTerm(lex, *sig, sign);
    if (m.coeff != 0) raw.push_back(std::move(m));
    if (lex.atEnd()) break;
    if (lex.eat('+')) sign = 1;
    else if (lex.eat('-')) sign = -1;
    else lex.fail("expected '+', '-' or end of input");
  }
  return normalize(std::move(raw), std::move(sig));
}

std::string printMonomial(const Monomial& m, const AlgebraSignature& sig) {
  std::ostringstream body;
  bool first = true;
  auto sep = [&] {
    if (!first) body << "*";
    first = false;
  };
  for (int v = 0; v < sig.numVars(); ++v) {
    for (int power : sig.expPowersFor(v)) {
      long long a = m.expCoeff(v, power);
      if (a == 0) continue;
      sep();
      body << "e^{" << a << "*" << varName(sig, v);
      if (power != 1) body << "^" << power;
      body << "}";
    }
  }
  for (int v = 0; v < sig.numVars(); ++v) {
    long long j = m.polyPower(v);
    if (j == 0) continue;
    sep();
    body << varName(sig, v);
    if (j != 1) body << "^" << j;
  }
  Rat c = abs(m.coeff);
  std::string out;
  if (first) {
    // bare derivation slots print as "D1", constants as the rational
    out = (m.deriv != kNoDeriv && c == 1) ? std::string() : c.str();
  } else {
    out = (c == 1 ? std::string() : c.str() + "*") + body.str();
  }
  if (m.deriv != kNoDeriv) out += (out.empty() ? "D" : " D") + std::to_string(m.deriv + 1);
  return out;
}

std::string printElement(const Element& e) {
  if (e.isZero()) return "0";
  const auto& sig = *e.signature();
  std::ostringstream out;
  bool first = true;
  for (const auto& m : e.terms()) {
    if (first) {
      if (m.coeff < 0) out << "-";
      first = false;
    } else {
      out << (m.coeff < 0 ? " - " : " + ");
    }
    out << printMonomial(m, sig);
  }
  return out.str();
}

} // namespace lieexp
