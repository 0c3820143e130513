#include "doctest.h"

#include <algorithm>

#include "divisor_forge/errors.hpp"
#include "divisor_forge/fractional.hpp"
#include "divisor_forge/ideal_ops.hpp"
#include "divisor_forge/primes.hpp"
#include "test_support.hpp"

using namespace dforge;
using namespace dforge::testing;

namespace {

std::vector<std::string> keys(const std::vector<Ideal>& ideals) {
  std::vector<std::string> out;
  for (auto& I : ideals) out.push_back(I.key());
  return out;
}

}  // namespace

TEST_CASE("sums, products and intersections") {
  auto P = plane();
  CHECK(idealSum(ideal(P, {"x"}), ideal(P, {"y"})) == ideal(P, {"x", "y"}));
  CHECK(idealIntersection(ideal(P, {"x"}), ideal(P, {"y"})) == ideal(P, {"x*y"}));
  CHECK(idealIntersection(ideal(P, {"x^2", "y"}), ideal(P, {"x"})) == ideal(P, {"x^2", "x*y"}));

  auto R = segreCone();
  Ideal product = idealProduct(ideal(R, {"x", "u"}), ideal(R, {"x", "v"}));
  CHECK(product == ideal(R, {"x^2", "x*u", "x*v", "x*y"}));
  CHECK(idealPower(ideal(R, {"x", "u"}), 2) == ideal(R, {"x^2", "x*u", "u^2"}));

  auto other = plane();
  CHECK_THROWS_AS(idealSum(ideal(P, {"x"}), ideal(other, {"x"})), RingMismatch);
}

TEST_CASE("bracket powers") {
  auto R = segreCone();
  CHECK(bracketPower(ideal(R, {"x", "u"}), 2) == ideal(R, {"x^2", "u^2"}));
  CHECK(bracketPower(ideal(R, {"x+v"}), 3) == ideal(R, {"(x+v)^3"}));
  auto C = conicCone();
  Ideal P = ideal(C, {"x", "z"});
  CHECK(reflexify(bracketPower(P, 2)) == reflexify(idealPower(P, 2)));
  CHECK(reflexify(bracketPower(P, 2)) == ideal(C, {"x"}));
}

TEST_CASE("colon ideals and saturation") {
  auto C = conicCone();
  CHECK(idealQuotient(ideal(C, {"x"}), ideal(C, {"x", "z"})) == ideal(C, {"x", "z"}));
  Ideal I = ideal(C, {"x^2", "y*z"});
  CHECK(idealQuotient(I, Ideal::unit(C)) == I);
  CHECK(idealQuotient(I, Ideal::zero(C)).isUnit());

  auto P = plane();
  Ideal J = ideal(P, {"x^2", "x*y"});
  Ideal m = ideal(P, {"x", "y"});
  CHECK(saturate(J, m) == ideal(P, {"x"}));
  CHECK(saturateByQuotients(J, m) == ideal(P, {"x"}));
  CHECK(saturate(J, P->parse("x")).isUnit());
  CHECK(saturate(ideal(P, {"x*y^2"}), P->parse("y")) == ideal(P, {"x"}));
}

TEST_CASE("colon and saturation laws on random ideals") {
  PolyGen gen(17);
  for (auto R : {segreCone(), conicCone(), quadricCone(), plane()}) {
    for (int trial = 0; trial < 6; ++trial) {
      Ideal I(R, {gen.homogeneous(*R, 2, 2), gen.homogeneous(*R, 2, 2)});
      Ideal J(R, {gen.homogeneous(*R, 1, 2)});
      if (J.isZero() || I.isZero()) continue;
      Ideal Q = idealQuotient(I, J);
      CHECK(Q.contains(I));
      CHECK(I.contains(idealProduct(Q, J)));
      Ideal S = saturate(I, J);
      CHECK(saturate(S, J) == S);
      CHECK(saturateByQuotients(I, J) == S);
      Ideal meet = idealIntersection(I, J);
      CHECK(I.contains(meet));
      CHECK(J.contains(meet));
      CHECK(meet.contains(idealProduct(I, J)));
    }
  }
}

TEST_CASE("height-one minimal primes") {
  auto R = segreCone();
  auto primes = minimalHeightOnePrimes(ideal(R, {"x"}));
  REQUIRE(primes.size() == 2);
  CHECK(keys(primes) == keys({ideal(R, {"x", "u"}), ideal(R, {"x", "v"})}));

  auto Q = quadricCone();
  CHECK(minimalHeightOnePrimes(ideal(Q, {"x", "y", "z"})).empty());

  auto C = conicCone();
  auto single = minimalHeightOnePrimes(ideal(C, {"x"}));
  REQUIRE(single.size() == 1);
  CHECK(single[0] == ideal(C, {"x", "z"}));
  CHECK(single[0].generatorsString() == "z, x");

  auto P = plane();
  auto lines = minimalHeightOnePrimes(ideal(P, {"x*y*(x+y)*(x-y)"}));
  CHECK(lines.size() == 4);
  CHECK(minimalHeightOnePrimes(ideal(P, {"x^2*(y^2+1)", "x^3"})).size() == 1);

  auto E = ellipticCurve();
  auto points = minimalHeightOnePrimes(ideal(E, {"x"}));
  CHECK(keys(points) == keys({ideal(E, {"x", "y"}), ideal(E, {"x", "z"})}));

  CHECK_THROWS_AS(minimalHeightOnePrimes(Ideal::zero(R)), MathError);
}

TEST_CASE("minimal primes contain the ideal and have height one") {
  PolyGen gen(29);
  for (auto R : {segreCone(), conicCone(), quadricCone(), plane()}) {
    for (int trial = 0; trial < 6; ++trial) {
      Polynomial f = R->normalForm(gen.homogeneous(*R, 1, 2) * gen.homogeneous(*R, 1, 2));
      if (f.isConstant()) continue;
      Ideal I(R, {f});
      auto primes = minimalHeightOnePrimes(I);
      CHECK_FALSE(primes.empty());
      for (size_t k = 0; k < primes.size(); ++k) {
        CHECK(primes[k].contains(I));
        CHECK(primes[k].dimension() == R->dimension() - 1);
        CHECK(certifyPrime(primes[k]));
        if (k > 0) CHECK(primes[k - 1].key() < primes[k].key());
      }
    }
  }
}

TEST_CASE("components separated by projection") {
  // Two rational lines on the cone xy = z^2; neither generator factors, but
  // their images in the (y, z) plane do.
  auto C = conicCone();
  Ideal lines = ideal(C, {"x^2+2*y*z-3*z^2", "2*y^2+x*z-3*y*z"});
  auto primes = minimalHeightOnePrimes(lines);
  REQUIRE(primes.size() == 2);
  auto found = keys(primes);
  CHECK(std::count(found.begin(), found.end(), ideal(C, {"x-y", "x-z"}).key()) == 1);
  CHECK(std::count(found.begin(), found.end(), ideal(C, {"x-4*y", "z+2*y"}).key()) == 1);
}

TEST_CASE("uncertifiable components are reported, not guessed") {
  // The twisted cubic cone inside the quadric cone xw = yz: prime of height one,
  // cut out by three quadrics no combination of which factors or is linear.
  auto R = makeRing({"x", "y", "z", "w"}, {"x*w-y*z"});
  Ideal cubic = ideal(R, {"y^2-x*z", "z^2-y*w"});
  CHECK(cubic.height() == 1);
  CHECK_FALSE(certifyPrime(cubic));
  CHECK_THROWS_AS(minimalHeightOnePrimes(cubic), DecompositionIncomplete);
}

TEST_CASE("symbolic powers") {
  auto C = conicCone();
  Ideal P = ideal(C, {"x", "z"});
  CHECK(symbolicPower(P, 2) == ideal(C, {"x"}));
  CHECK(symbolicPower(P, 1) == P);
  CHECK(symbolicPower(P, 3) == ideal(C, {"x^2", "x*z"}));
  CHECK_THROWS_AS(symbolicPower(ideal(C, {"x", "y", "z"}), 2), HeightNotOne);

  auto R = segreCone();
  Ideal xu = ideal(R, {"x", "u"}), xv = ideal(R, {"x", "v"});
  Ideal I = idealProduct(idealPower(xu, 2), idealPower(xv, 3));
  CHECK(symbolicPower(xv, 3).contains(I));
  CHECK_FALSE(symbolicPower(xv, 4).contains(I));
  CHECK(maxSymbolicContainment(I, xu) == 2);
  CHECK(maxSymbolicContainment(I, xv) == 3);
  CHECK(maxSymbolicContainment(xu, xu) == 1);
  CHECK(maxSymbolicContainment(ideal(R, {"y"}), xu) == 0);
  CHECK(maxSymbolicContainment(ideal(C, {"x"}), P) == 2);
  CHECK(maxSymbolicContainment(ideal(C, {"x^5*z"}), P) == 11);
}

TEST_CASE("symbolic containment brackets the answer") {
  PolyGen gen(31);
  auto C = conicCone();
  Ideal P = ideal(C, {"x", "z"});
  for (int trial = 0; trial < 10; ++trial) {
    Polynomial f = C->normalForm(gen.homogeneous(*C, gen.integer(1, 3), 2) * C->parse("x"));
    if (f.isZero()) continue;
    Ideal I(C, {f});
    int n = maxSymbolicContainment(I, P);
    CHECK(n >= 2);
    CHECK(symbolicPower(P, n).contains(I));
    CHECK_FALSE(symbolicPower(P, n + 1).contains(I));
  }
}
