#include "lieexp/signature.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace lieexp {

namespace {

const std::vector<int> kNoPowers{};
const std::vector<int> kPowerOne{1};

bool strictlyIncreasingPositive(const std::vector<int>& v) {
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 1) return false;
    if (i > 0 && v[i] <= v[i - 1]) return false;
  }
  return true;
}

} // namespace

AlgebraSignature::AlgebraSignature(Family f, int n_,
                                   std::vector<std::vector<int>> powers,
                                   bool quotient_)
    : family(f), n(n_), expPowers(std::move(powers)), quotient(quotient_) {
  if (n < 1) throw SignatureViolation("arity must be positive");
  switch (family) {
    case Family::W:
    case Family::W_PLUS1:
    case Family::H_POLY:
    case Family::S_DIVFREE:
      if (!expPowers.empty())
        throw SignatureViolation("family carries no exponential factors");
      break;
    case Family::H_EXP_FULL:
    case Family::H_EXP_ONLY:
      expPowers.assign(n, kPowerOne);
      break;
    case Family::W_EXP:
    case Family::H_EXP_POWERS:
      if ((int)expPowers.size() != n)
        throw SignatureViolation("need one exponential power list per variable");
      for (const auto& list : expPowers)
        if (!strictlyIncreasingPositive(list))
          throw SignatureViolation(
              "exponential power lists must be strictly increasing, entries >= 1");
      break;
  }
  if (family == Family::W_PLUS1 && n != 1)
    throw SignatureViolation("W+(1) is a rank-1 algebra");
  if (quotient && !isPoissonType())
    throw SignatureViolation("quotient convention applies to Poisson families only");
}

SigPtr AlgebraSignature::make(Family f, int n, std::vector<std::vector<int>> powers,
                              bool quotient) {
  return std::make_shared<const AlgebraSignature>(f, n, std::move(powers), quotient);
}

const std::vector<int>& AlgebraSignature::expPowersFor(int v) const {
  if (v < 0 || v >= numVars()) throw SignatureViolation("variable index out of range");
  if (expPowers.empty()) return kNoPowers;
  return expPowers[v % n]; // y-side mirrors the x-side lists
}

int AlgebraSignature::gradeKeyLength() const {
  int m = 0;
  for (int v = 0; v < numVars(); ++v) m += (int)expPowersFor(v).size();
  return m;
}

bool AlgebraSignature::isExpPowerAllowed(int v, int power) const {
  const auto& list = expPowersFor(v);
  return std::find(list.begin(), list.end(), power) != list.end();
}

SigPtr AlgebraSignature::scalarized() const {
  auto copy = std::make_shared<AlgebraSignature>(*this);
  copy->functionSpace = true;
  return copy;
}

std::string varName(const AlgebraSignature& sig, int v) {
  if (sig.isPoissonType() && v >= sig.n)
    return "y" + std::to_string(v - sig.n + 1);
  return "x" + std::to_string(v + 1);
}

std::string AlgebraSignature::name() const {
  std::ostringstream out;
  auto powerLists = [&](std::ostream& os) {
    for (int v = 0; v < n; ++v) {
      os << (v ? ", " : "; ") << "x" << v + 1 << ":[";
      const auto& list = expPowers[v];
      for (size_t i = 0; i < list.size(); ++i) os << (i ? "," : "") << list[i];
      os << "]";
    }
  };
  switch (family) {
    case Family::W: out << "W(" << n << ")"; break;
    case Family::W_PLUS1: out << "W+(1)"; break;
    case Family::S_DIVFREE: out << "S(" << n << ")"; break;
    case Family::W_EXP:
      out << "W(" << n;
      powerLists(out);
      out << ")";
      break;
    case Family::H_POLY: out << (quotient ? "Hbar(" : "H(") << n << ")"; break;
    case Family::H_EXP_FULL:
      out << (quotient ? "Hbar(" : "H(") << n << "," << n << ")";
      break;
    case Family::H_EXP_ONLY:
      out << (quotient ? "Hbar(" : "H(") << n << ",0)";
      break;
    case Family::H_EXP_POWERS:
      out << (quotient ? "Hbar(" : "H(") << n << "," << n;
      powerLists(out);
      out << ")";
      break;
  }
  return out.str();
}

namespace {

struct SigCursor {
  const std::string& s;
  size_t pos = 0;
  explicit SigCursor(const std::string& text) : s(text) {}
  void skipWs() { while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos; }
  bool eat(char c) {
    skipWs();
    if (pos < s.size() && s[pos] == c) { ++pos; return true; }
    return false;
  }
  void expect(char c) {
    if (!eat(c))
      throw SignatureViolation("bad algebra string, expected '" + std::string(1, c) +
                               "' in \"" + s + "\"");
  }
  int integer() {
    skipWs();
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
    if (pos == start) throw SignatureViolation("bad integer in algebra string \"" + s + "\"");
    return std::stoi(s.substr(start, pos - start));
  }
  bool peek(char c) {
    skipWs();
    return pos < s.size() && s[pos] == c;
  }
  bool done() {
    skipWs();
    return pos == s.size();
  }
};

std::vector<std::vector<int>> parsePowerLists(SigCursor& cur, int n) {
  std::vector<std::vector<int>> lists(n);
  std::vector<bool> seen(n, false);
  do {
    cur.skipWs();
    if (cur.pos >= cur.s.size() || cur.s[cur.pos] != 'x')
      throw SignatureViolation("expected x<k>:[...] in algebra string");
    ++cur.pos;
    int k = cur.integer();
    if (k < 1 || k > n) throw SignatureViolation("variable index out of range in algebra string");
    cur.expect(':');
    cur.expect('[');
    std::vector<int> list;
    if (!cur.peek(']')) {
      do {
        list.push_back(cur.integer());
      } while (cur.eat(','));
    }
    cur.expect(']');
    if (seen[k - 1]) throw SignatureViolation("duplicate variable in algebra string");
    seen[k - 1] = true;
    lists[k - 1] = std::move(list);
  } while (cur.eat(','));
  for (bool b : seen)
    if (!b) throw SignatureViolation("every variable needs a power list");
  return lists;
}

} // namespace

SigPtr AlgebraSignature::parse(const std::string& text) {
  SigCursor cur(text);
  cur.skipWs();
  std::string head;
  while (cur.pos < cur.s.size() && (std::isalpha((unsigned char)cur.s[cur.pos]) ||
                                    cur.s[cur.pos] == '+'))
    head += cur.s[cur.pos++];
  bool quotient = false;
  if (head == "Hbar") { head = "H"; quotient = true; }

  cur.expect('(');
  int n = cur.integer();
  if (head == "W+") {
    cur.expect(')');
    if (!cur.done() || n != 1) throw SignatureViolation("W+ takes the form W+(1)");
    return make(Family::W_PLUS1, 1);
  }
  if (head == "S") {
    cur.expect(')');
    if (!cur.done()) throw SignatureViolation("trailing text in algebra string");
    return make(Family::S_DIVFREE, n);
  }
  if (head == "W") {
    if (cur.eat(';')) {
      auto lists = parsePowerLists(cur, n);
      cur.expect(')');
      if (!cur.done()) throw SignatureViolation("trailing text in algebra string");
      return make(Family::W_EXP, n, std::move(lists));
    }
    cur.expect(')');
    if (!cur.done()) throw SignatureViolation("trailing text in algebra string");
    return make(Family::W, n);
  }
  if (head == "H") {
    if (cur.eat(',')) {
      int second = cur.integer();
      if (second == 0) {
        cur.expect(')');
        if (!cur.done()) throw SignatureViolation("trailing text in algebra string");
        return make(Family::H_EXP_ONLY, n, {}, quotient);
      }
      if (second != n) throw SignatureViolation("only H(n,n) and H(n,0) are supported");
      if (cur.eat(';')) {
        auto lists = parsePowerLists(cur, n);
        cur.expect(')');
        if (!cur.done()) throw SignatureViolation("trailing text in algebra string");
        return make(Family::H_EXP_POWERS, n, std::move(lists), quotient);
      }
      cur.expect(')');
      if (!cur.done()) throw SignatureViolation("trailing text in algebra string");
      return make(Family::H_EXP_FULL, n, {}, quotient);
    }
    cur.expect(')');
    if (!cur.done()) throw SignatureViolation("trailing text in algebra string");
    return make(Family::H_POLY, n, {}, quotient);
  }
  throw SignatureViolation("unknown algebra family \"" + head + "\"");
}

} // namespace lieexp
