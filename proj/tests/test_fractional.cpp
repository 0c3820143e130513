#include "doctest.h"

#include "divisor_forge/errors.hpp"
#include "divisor_forge/fractional.hpp"
#include "divisor_forge/ideal_ops.hpp"
#include "test_support.hpp"

using namespace dforge;
using namespace dforge::testing;

namespace {

FractionalIdeal frac(const RingPtr& R, const char* den, std::initializer_list<const char*> gens) {
  return FractionalIdeal(ideal(R, gens), R->parse(den));
}

bool sameFractional(const FractionalIdeal& a, const FractionalIdeal& b) {
  return a.numerator() == b.numerator() && a.denominator() == b.denominator();
}

}  // namespace

TEST_CASE("reflexive hulls") {
  auto C = conicCone();
  CHECK(reflexify(ideal(C, {"x^2", "x*y"})) == ideal(C, {"x"}));
  CHECK(reflexify(ideal(C, {"x^2", "x*y"}), C->parse("x^2")) == ideal(C, {"x"}));
  CHECK(reflexify(ideal(C, {"y+z"})) == ideal(C, {"y+z"}));
  auto P = plane();
  CHECK(reflexify(ideal(P, {"x", "y"})).isUnit());
  CHECK_THROWS_AS(reflexify(Ideal::zero(P)), MathError);
  CHECK_THROWS(reflexify(ideal(P, {"x"}), P->parse("y")));
}

TEST_CASE("the nonzerodivisor choice") {
  auto C = conicCone();
  CHECK(C->format(chooseNonzerodivisor(ideal(C, {"z", "x"}))) == "x");
  CHECK(C->format(chooseNonzerodivisor(ideal(C, {"y^2", "z"}))) == "z");
}

TEST_CASE("duals") {
  auto C = conicCone();
  CHECK(sameFractional(dual(frac(C, "1", {"x", "z"})), frac(C, "x", {"x", "z"})));
  CHECK(sameFractional(dual(frac(C, "1", {"y+z"})), frac(C, "y+z", {"1"})));
  CHECK(sameFractional(dual(frac(C, "x", {"x", "z"})), frac(C, "1", {"x", "z"})));
}

TEST_CASE("normalization cancels monomial factors") {
  auto C = conicCone();
  auto F = frac(C, "2*x", {"x^2", "x*z"}).normalized();
  CHECK(sameFractional(F, frac(C, "1", {"x", "z"})));
  CHECK(F.toString() == "ideal(x, z)");
  CHECK(frac(C, "x", {"x", "z"}).toString() == "(1/x)*ideal(x, z)");
  auto P = plane();
  CHECK(sameFractional(frac(P, "x+y", {"x^2+x*y", "x*y+y^2"}).normalized(), frac(P, "1", {"x", "y"})));
}

TEST_CASE("reflexive products and powers") {
  auto C = conicCone();
  auto F = frac(C, "1", {"x", "z"});
  CHECK(sameFractional(reflexivePower(F, 2), frac(C, "1", {"x"})));
  CHECK(sameFractional(reflexivePower(F, 1), reflexiveHull(F)));
  CHECK(sameFractional(reflexivePower(F, 0), FractionalIdeal::unit(C)));
  CHECK(equalsAsReflexive(reflexivePower(F, -2), frac(C, "x", {"1"})));

  auto both = reflexiveProduct(F, dual(F));
  CHECK(equalsAsReflexive(both, FractionalIdeal::unit(C)));
  // The plain product, before reflexification, is the vertex.
  Ideal plain = idealProduct(F.numerator(), dual(F).numerator());
  CHECK(plain == ideal(C, {"x^2", "x*y", "x*z"}));
}

TEST_CASE("reflexive equality") {
  auto C = conicCone();
  CHECK(equalsAsReflexive(frac(C, "x", {"x^2", "x*z"}), frac(C, "1", {"x", "z"})));
  CHECK_FALSE(equalsAsReflexive(frac(C, "1", {"x", "z"}), frac(C, "1", {"x", "y"})));
  auto F = frac(C, "y", {"x^2", "z"});
  CHECK(equalsAsReflexive(F, reflexiveHull(F)));
}

TEST_CASE("membership in fractional ideals") {
  auto C = conicCone();
  auto F = frac(C, "x", {"x", "z"});
  CHECK(F.contains({C->parse("1"), C->parse("1")}));
  CHECK(F.contains({C->parse("z"), C->parse("x")}));
  CHECK(F.contains({C->parse("y"), C->parse("z")}));
  CHECK_FALSE(F.contains({C->parse("1"), C->parse("y")}));
}

TEST_CASE("reflexive hull laws on random ideals") {
  PolyGen gen(41);
  for (auto R : {segreCone(), conicCone(), quadricCone(), plane()}) {
    for (int trial = 0; trial < 6; ++trial) {
      Ideal I(R, {gen.homogeneous(*R, 1, 2), gen.homogeneous(*R, 2, 3)});
      Ideal J(R, {gen.homogeneous(*R, 1, 2)});
      if (I.isZero() || I.generators().size() < 2) continue;
      Ideal hull = reflexify(I);
      CHECK(hull.contains(I));
      CHECK(reflexify(hull) == hull);
      CHECK(reflexify(I, I.generators().back()) == hull);
      CHECK(reflexify(I, R->normalForm(I.generators()[0] * I.generators()[1])) == hull);
      CHECK(reflexify(idealSum(I, J)).contains(hull));

      Polynomial d = R->normalForm(gen.homogeneous(*R, 1, 1));
      if (d.isZero()) continue;
      FractionalIdeal F(I, d);
      // Both sides are reflexive, so this is equality of fractional ideals.
      CHECK(equalsAsReflexive(dual(dual(F)), reflexiveHull(F)));
    }
  }
}
