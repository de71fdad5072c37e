#include <doctest.h>

#include "test_support.hpp"
#include "lieexp/json_io.hpp"

using namespace lieexp;
using lieexp::test::parse;
using lieexp::test::sigOf;

TEST_CASE("signature strings round-trip") {
  for (const char* name :
       {"W(1)", "W(3)", "W(2; x1:[1,2], x2:[1])", "W+(1)", "S(4)", "H(2)",
        "H(1,1)", "Hbar(1,1)", "H(2,0)", "Hbar(1,0)", "H(1,1; x1:[1,3])"}) {
    auto sig = AlgebraSignature::parse(name);
    CHECK(sig->name() == name);
    CHECK(*AlgebraSignature::parse(sig->name()) == *sig);
  }
  CHECK_THROWS_AS(AlgebraSignature::parse("Q(1)"), SignatureViolation);
  CHECK_THROWS_AS(AlgebraSignature::parse("W(0)"), SignatureViolation);
  CHECK_THROWS_AS(AlgebraSignature::parse("H(2,1)"), SignatureViolation);
  CHECK_THROWS_AS(AlgebraSignature::parse("Hbar(1)junk"), SignatureViolation);
}

TEST_CASE("parser handles the concrete syntax") {
  auto we = sigOf("W(1; x1:[1])");
  SUBCASE("canonical forms") {
    CHECK(printElement(parse("e^{2*x1}*x1^3 D1", we)) == "e^{2*x1}*x1^3 D1");
    CHECK(printElement(parse("D1", we)) == "D1");
    CHECK(printElement(Element::zero(we)) == "0");
  }
  SUBCASE("signs and rationals") {
    auto h1 = sigOf("H(1,1)");
    CHECK(printElement(parse("-12*y1 - 2", h1)) == "-12*y1 - 2");
    CHECK(printElement(parse("1/2*x1*y1^2", h1)) == "1/2*x1*y1^2");
    CHECK(parse("+x1 - -2*y1", h1) == parse("x1 + 2*y1", h1));
    CHECK(parse("3/6*x1", h1) == parse("1/2*x1", h1));
  }
  SUBCASE("whitespace is insignificant") {
    CHECK(parse("  x1 D1+ 2 * x1^2   D1 ", we) == parse("x1 D1 + 2*x1^2 D1", we));
  }
  SUBCASE("like terms merge on parse") {
    CHECK(printElement(parse("x1 D1 + x1 D1 - 2*x1 D1", we)) == "0");
  }
}

TEST_CASE("syntax errors carry positions") {
  auto we = sigOf("W(1; x1:[1])");
  CHECK_THROWS_AS(parse("x1 +", we), SyntaxError);
  CHECK_THROWS_AS(parse("e^{x1}", we), SyntaxError); // coefficient is mandatory
  CHECK_THROWS_AS(parse("x1 D", we), SyntaxError);
  CHECK_THROWS_AS(parse("(x1)", we), SyntaxError);
  try {
    parse("x1 D1 + @", we);
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.line == 1);
    CHECK(e.column >= 8);
  }
}

TEST_CASE("signature constraints surface as domain errors") {
  auto we = sigOf("W(1; x1:[1])");
  CHECK_THROWS_AS(parse("x2 D1", we), SyntaxError); // index out of range, with position
  CHECK_THROWS_AS(parse("y1 D1", we), SignatureViolation);
  CHECK_THROWS_AS(parse("e^{2*x1^2} D1", we), SignatureViolation);
  CHECK_THROWS_AS(parse("x1^-1 D1", we), SignatureViolation);
  CHECK_THROWS_AS(parse("x1", we), MissingDerivationSlot);
  auto h1 = sigOf("H(1,1)");
  CHECK_THROWS_AS(parse("x1 D1", h1), SignatureViolation);
}

TEST_CASE("parse/print round-trip on fuzzed elements") {
  auto roundTrip = [](const SigPtr& sig, long long polyCap, long long expCap) {
    Window window(sig, TruncationCaps::forSig(*sig, polyCap, expCap));
    std::mt19937_64 rng(123);
    for (int i = 0; i < 300; ++i) {
      Element e = test::randomElement(window, rng, 6);
      CHECK(parseElement(printElement(e), sig) == e);
    }
  };
  roundTrip(sigOf("W(2; x1:[1,2], x2:[1])"), 3, 2);
  roundTrip(sigOf("H(1,1)"), 3, 2);
  roundTrip(sigOf("Hbar(1,0)"), 0, 2);
  roundTrip(sigOf("W+(1)"), 4, 0);
}

TEST_CASE("JSON serialization round-trips and stays stable") {
  auto h1 = sigOf("H(1,1)");
  Element e = parse("e^{2*x1}*x1^3*y1^-2 + 1/3*y1", h1);
  Json j = elementToJson(e);
  CHECK(elementFromJson(j, h1) == e);
  CHECK(j.dump() == elementToJson(e).dump()); // byte-identical across calls
  CHECK(j["algebra"] == "H(1,1)");

  Window window(h1, TruncationCaps::forSig(*h1, 2, 1));
  std::mt19937_64 rng(55);
  for (int i = 0; i < 100; ++i) {
    Element r = test::randomElement(window, rng, 4);
    CHECK(elementFromJson(elementToJson(r), h1) == r);
  }
}
