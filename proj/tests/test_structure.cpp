#include <doctest.h>

#include "test_support.hpp"
#include "lieexp/structure.hpp"

using namespace lieexp;
using lieexp::test::parse;
using lieexp::test::sigOf;

TEST_CASE("quotient projection") {
  auto hb = sigOf("Hbar(1,1)");
  CHECK(quotientProject(parse("x1*y1 + 5", hb)) == parse("x1*y1", hb));
  CHECK(projectIfQuotient(parse("3", hb)).isZero());
  // linear, idempotent, bracket homomorphism
  Window window(hb, TruncationCaps::forSig(*hb, 1, 1));
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    Element a = test::randomElement(window, rng);
    Element b = test::randomElement(window, rng);
    CHECK(quotientProject(quotientProject(a)) == quotientProject(a));
    CHECK(quotientProject(bracket(a, b)) ==
          quotientProject(bracket(quotientProject(a), quotientProject(b))));
  }
  // non-quotient signatures pass through
  auto h1 = sigOf("H(1,1)");
  CHECK(projectIfQuotient(parse("3", h1)) == parse("3", h1));
}

TEST_CASE("center probe finds the constants of H(1,1)") {
  auto h1 = sigOf("H(1,1)");
  Window window(h1, TruncationCaps::forSig(*h1, 1, 1));
  std::vector<Element> center = centerProbe(window);
  REQUIRE(center.size() == 1);
  CHECK(center.front().size() == 1);
  CHECK(center.front().leading().isIdentity());
}

TEST_CASE("center probe is empty for the quotient") {
  auto hb = sigOf("Hbar(1,1)");
  Window window(hb, TruncationCaps::forSig(*hb, 1, 1));
  CHECK(centerProbe(window).empty());
}

TEST_CASE("ad-diagonal elements of H(n)") {
  auto h2 = sigOf("H(2)");
  Window window(h2, TruncationCaps::forSig(*h2, 3, 0));
  std::vector<Element> diag = findAdDiagonal(window);
  REQUIRE(diag.size() == 2);
  CHECK(diag[0] == parse("x1*y1", h2));
  CHECK(diag[1] == parse("x2*y2", h2));
}

TEST_CASE("ad(x1 y1) eigenvalues are b - a") {
  auto h1 = sigOf("H(1)");
  Window window(h1, TruncationCaps::forSig(*h1, 3, 0));
  Element candidate = parse("x1*y1", h1);
  for (const auto& m : window.basis()) {
    auto lambda = adEigenvalue(candidate, Element::fromMonomial(m, h1));
    REQUIRE(lambda.has_value());
    CHECK(*lambda == Rat(m.polyPower(1) - m.polyPower(0)));
  }
  CHECK(isAdDiagonal(candidate, window));
  CHECK_FALSE(isAdDiagonal(parse("x1^2*y1", h1), window));
}

TEST_CASE("exponential Poisson windows have no ad-diagonal basis element") {
  auto h10 = sigOf("Hbar(1,0)");
  Window w10(h10, TruncationCaps::forSig(*h10, 0, 1));
  CHECK(findAdDiagonal(w10).empty());
  auto h11 = sigOf("Hbar(1,1)");
  Window w11(h11, TruncationCaps::forSig(*h11, 1, 1));
  CHECK(findAdDiagonal(w11).empty());
}

TEST_CASE("scalar derivation values") {
  auto h1 = sigOf("H(1)");
  CHECK(scalarDerivationApply(parse("x1*y1", h1).leading(), h1).isZero());
  CHECK(scalarDerivationApply(parse("x1^2*y1^3", h1).leading(), h1) ==
        parse("-3*x1^2*y1^3", h1));
  CHECK(scalarDerivationApply(parse("x1", h1).leading(), h1) == parse("x1", h1));
  auto he = sigOf("H(1,1)");
  CHECK_THROWS_AS(scalarDerivationApply(parse("e^{1*x1}", he).leading(), he),
                  SignatureViolation);
}

TEST_CASE("derivation residual checks") {
  auto h1 = sigOf("H(1)");
  Window window(h1, TruncationCaps::forSig(*h1, 2, 0));

  SUBCASE("the scalar derivation is a derivation") {
    auto report = checkDerivation(LinearMapTable::scalarDerivation(window), window);
    CHECK(report.passed());
    CHECK(report.pairsChecked > 0);
  }
  SUBCASE("inner derivations are derivations") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 10; ++i) {
      Element z = test::randomNonzero(window, rng);
      CHECK(checkDerivation(LinearMapTable::ad(z, window), window).passed());
    }
  }
  SUBCASE("combinations alpha S + ad(z) are derivations") {
    std::mt19937_64 rng(18);
    Element z = test::randomNonzero(window, rng);
    LinearMapTable s = LinearMapTable::scalarDerivation(window);
    LinearMapTable a = LinearMapTable::ad(z, window);
    auto combo = LinearMapTable::fromFunction(window, [&](const Monomial& m) {
      Element e = Element::fromMonomial(m, window.signature());
      return add(scale(Rat(3, 2), s.apply(e, window.signature())),
                 a.apply(e, window.signature()));
    });
    CHECK(checkDerivation(combo, window).passed());
  }
  SUBCASE("the identity map is not a derivation") {
    auto report = checkDerivation(LinearMapTable::identity(window), window);
    CHECK_FALSE(report.passed());
  }
}

TEST_CASE("automorphism leading-term constraint in W+(1)") {
  auto wp = sigOf("W+(1)");
  Element d = parse("D1", wp);
  CHECK(wplusAutomorphismCheck(d, parse("x1 D1 + 3*D1", wp)).accepted());
  AutomorphismVerdict scaled = wplusAutomorphismCheck(d, parse("2*x1 D1", wp));
  CHECK_FALSE(scaled.relationHolds);
  CHECK_FALSE(scaled.accepted());
  AutomorphismVerdict square = wplusAutomorphismCheck(d, parse("x1^2 D1", wp));
  CHECK_FALSE(square.shapeOk);
  CHECK_FALSE(square.accepted());
}
