#include <doctest.h>

#include "test_support.hpp"

using namespace lieexp;
using lieexp::test::parse;
using lieexp::test::sigOf;

TEST_CASE("normalize cancels and merges") {
  auto w1 = sigOf("W(1; x1:[1])");
  Monomial x1;
  x1.setPolyPower(0, 1);
  x1.deriv = 0;

  SUBCASE("opposite coefficients cancel") {
    Monomial a = x1, b = x1;
    a.coeff = 3;
    b.coeff = -3;
    CHECK(normalize({a, b}, w1).isZero());
  }
  SUBCASE("like terms merge") {
    Element two = normalize({x1, x1}, w1);
    REQUIRE(two.size() == 1);
    CHECK(two.leading().coeff == 2);
  }
  SUBCASE("canonical order puts the highest power first") {
    Element e = parse("x1 D1 + D1 + x1^2 D1", w1);
    REQUIRE(e.size() == 3);
    CHECK(e.terms()[0].polyPower(0) == 2);
    CHECK(e.terms()[1].polyPower(0) == 1);
    CHECK(e.terms()[2].polyPower(0) == 0);
  }
  SUBCASE("idempotent") {
    Element e = parse("2*x1 D1 + e^{1*x1} D1", w1);
    std::vector<Monomial> raw = e.terms();
    CHECK(normalize(raw, w1) == e);
  }
}

TEST_CASE("signature violations are rejected") {
  auto w1 = sigOf("W(1; x1:[1])");
  Monomial bad;
  bad.deriv = 0;
  SUBCASE("disallowed exponential power") {
    bad.setExpCoeff(0, 3, 1);
    CHECK_THROWS_AS(normalize({bad}, w1), SignatureViolation);
  }
  SUBCASE("negative power in a NATURALS domain") {
    bad.setPolyPower(0, -2);
    CHECK_THROWS_AS(normalize({bad}, w1), SignatureViolation);
  }
  SUBCASE("missing derivation slot") {
    bad.deriv = kNoDeriv;
    bad.setPolyPower(0, 1);
    CHECK_THROWS_AS(normalize({bad}, w1), MissingDerivationSlot);
  }
}

TEST_CASE("add and scale") {
  auto w1 = sigOf("W(1)");
  CHECK(add(parse("x1 D1", w1), parse("-1*x1 D1", w1)).isZero());
  CHECK(add(parse("x1 D1", w1), parse("2*x1 D1", w1)) == parse("3*x1 D1", w1));
  auto we = sigOf("W(1; x1:[1])");
  CHECK(scale(0, parse("e^{1*x1} D1", we)).isZero());
  CHECK_THROWS_AS(add(parse("x1 D1", w1), parse("x1 D1", we)), SignatureMismatch);
}

TEST_CASE("partial derivatives") {
  auto h1 = sigOf("H(1,1)");
  SUBCASE("power rule") {
    CHECK(partial(0, parse("x1^3", h1)) == parse("3*x1^2", h1));
  }
  SUBCASE("product rule on e^{2x} x") {
    CHECK(partial(0, parse("e^{2*x1}*x1", h1)) ==
          parse("2*e^{2*x1}*x1 + e^{2*x1}", h1));
  }
  SUBCASE("chain rule on e^{3x^2}") {
    auto sig = sigOf("H(1,1; x1:[2])");
    CHECK(partial(0, parse("e^{3*x1^2}", sig)) == parse("6*e^{3*x1^2}*x1", sig));
  }
  SUBCASE("vanishes exactly on absent variables") {
    CHECK(partial(1, parse("e^{2*x1}*x1^5", h1)).isZero());
  }
}

TEST_CASE("differentiation is linear and mixed partials commute") {
  auto sig = sigOf("H(2,2)");
  Window window(sig, TruncationCaps::forSig(*sig, 2, 1));
  std::mt19937_64 rng(42);
  for (int iter = 0; iter < 200; ++iter) {
    Element a = test::randomElement(window, rng);
    Element b = test::randomElement(window, rng);
    int u = (int)(rng() % 4), v = (int)(rng() % 4);
    CHECK(partial(u, add(a, b)) == add(partial(u, a), partial(u, b)));
    CHECK(partial(u, partial(v, a)) == partial(v, partial(u, a)));
  }
}

TEST_CASE("equal compares canonical forms") {
  auto h2 = sigOf("H(2)");
  CHECK(equal(parse("x1 + x2", h2), parse("x2 + x1", h2)));
  CHECK_FALSE(equal(parse("x1", h2), parse("2*x1", h2)));
}
