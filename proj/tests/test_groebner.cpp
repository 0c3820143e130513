#include "doctest.h"

#include <algorithm>

#include "divisor_forge/errors.hpp"
#include "divisor_forge/groebner.hpp"
#include "divisor_forge/ideal.hpp"
#include "divisor_forge/ideal_ops.hpp"
#include "test_support.hpp"

using namespace dforge;
using namespace dforge::testing;

namespace {

std::vector<Polynomial> withRelations(const QuotientRing& R, std::vector<Polynomial> gens) {
  for (auto& r : R.quotientBasis().generators()) gens.push_back(r);
  return gens;
}

std::vector<std::string> formatted(const QuotientRing& R, const std::vector<Polynomial>& ps) {
  std::vector<std::string> out;
  for (auto& p : ps) out.push_back(R.format(p));
  return out;
}

}  // namespace

TEST_CASE("reduced bases of small ideals") {
  auto R = segreCone();
  Ideal I(R, {R->parse("x"), R->parse("u")});
  CHECK(formatted(*R, I.basis().generators()) == std::vector<std::string>{"u", "x"});
  CHECK(Ideal::unit(R).basis().size() == 1);
  CHECK(Ideal::unit(R).basis().generators()[0].isOne());

  auto C = conicCone();
  auto gens = withRelations(*C, {C->parse("x^2"), C->parse("x*z"), C->parse("z^2")});
  GroebnerBasis fast = groebnerBasis(gens, 3, C->order());
  GroebnerBasis naive = groebnerBasisReference(gens, 3, C->order());
  CHECK(fast == naive);
  // z^2 = xy in the ring, so the ideal is x*(x, y, z).
  Ideal expected(C, {C->parse("x^2"), C->parse("x*y"), C->parse("x*z")});
  CHECK(expected.basis() == fast);
}

TEST_CASE("membership") {
  auto P = plane();
  Ideal X(P, {P->parse("x")});
  CHECK(X.contains(P->parse("x*y")));
  CHECK_FALSE(X.contains(P->parse("y")));
  auto C = conicCone();
  CHECK(Ideal(C, {C->parse("x")}).contains(C->parse("z^2")));
}

TEST_CASE("elimination") {
  auto R = makeRing({"t", "x", "y"});
  Ideal I(R, {R->parse("x-t"), R->parse("y-t^2")});
  std::vector<size_t> vars{0};
  Ideal E = eliminate(I, vars);
  REQUIRE(E.ring()->variables() == std::vector<std::string>{"x", "y"});
  CHECK(E == Ideal(E.ring(), {E.ring()->parse("y-x^2")}));

  Ideal same = eliminate(I, {});
  CHECK(same.key() == I.key());
  Ideal unit = eliminate(Ideal::unit(R), vars);
  CHECK(unit.isUnit());
}

TEST_CASE("dimension and height") {
  auto R = segreCone();
  Ideal xu(R, {R->parse("x"), R->parse("u")});
  CHECK(xu.dimension() == 2);
  CHECK(xu.height() == 1);
  CHECK(Ideal::zero(R).dimension() == 3);
  CHECK(Ideal::unit(R).dimension() == -1);
  auto C = quadricCone();
  CHECK(Ideal(C, {C->parse("x"), C->parse("y"), C->parse("z")}).dimension() == 0);
}

TEST_CASE("principal ideals drop dimension by one") {
  PolyGen gen(3);
  for (auto R : {segreCone(), conicCone(), quadricCone(), plane(), ellipticCurve()}) {
    for (int trial = 0; trial < 10; ++trial) {
      Polynomial f = R->normalForm(gen.poly(*R, 3, 3));
      if (f.isConstant()) continue;
      CHECK(Ideal(R, {f}).dimension() == R->dimension() - 1);
    }
  }
}

TEST_CASE("graded pieces") {
  auto R = segreCone();
  Ideal xv(R, {R->parse("x"), R->parse("v")});
  CHECK(formatted(*R, gradedPieceBasis(xv, {1})) == std::vector<std::string>{"v", "x"});
  auto one = gradedPieceBasis(Ideal::unit(R), {0});
  REQUIRE(one.size() == 1);
  CHECK(one[0].isOne());
  // R_2 has the 9 standard monomials other than xy; y^2, yu, u^2 avoid (x, v).
  CHECK(gradedPieceBasis(xv, {2}).size() == 6);
  CHECK(gradedPieceBasis(Ideal::unit(R), {2}).size() == 9);

  auto E = ellipticCurve();
  Ideal xy(E, {E->parse("x"), E->parse("y")});
  CHECK(formatted(*E, gradedPieceBasis(xy, {1})) == std::vector<std::string>{"y", "x"});
  CHECK(gradedPieceBasis(xy, {-1}).empty());

  auto nonPositive = QuotientRing::make("N", {"x", "y"}, Grading({{1, -1}}), {});
  CHECK_THROWS_AS(gradedPieceBasis(Ideal::unit(nonPositive), {0}), GradingError);
  CHECK_THROWS_AS(gradedPieceBasis(Ideal(R, {R->parse("x+1")}), {1}), GradingError);
}

TEST_CASE("graded piece bases are independent members of the right degree") {
  PolyGen gen(21);
  for (auto R : {segreCone(), conicCone(), quadricCone(), ellipticCurve()}) {
    for (int trial = 0; trial < 8; ++trial) {
      std::vector<Polynomial> gens{gen.homogeneous(*R, 1, 3), gen.homogeneous(*R, 2, 3)};
      Ideal I(R, gens);
      for (int64_t d = 0; d <= 3; ++d) {
        auto basis = gradedPieceBasis(I, {d});
        auto serial = gradedPieceBasis(I, {d}, false);
        CHECK(basis == serial);
        for (size_t i = 0; i < basis.size(); ++i) {
          CHECK(I.contains(basis[i]));
          CHECK(R->grading().homogeneousDegree(basis[i]) == Degree{d});
          CHECK(basis[i].leadingCoefficient() == 1);
          for (size_t j = 0; j < i; ++j) CHECK_FALSE(basis[i].leadingMonomial() == basis[j].leadingMonomial());
        }
      }
    }
  }
}

TEST_CASE("production kernel agrees with the naive reference") {
  PolyGen gen(7);
  for (auto R : {segreCone(), conicCone(), quadricCone(), plane(), ellipticCurve()}) {
    for (int trial = 0; trial < 12; ++trial) {
      std::vector<Polynomial> gens;
      int count = gen.integer(1, 3);
      for (int k = 0; k < count; ++k) gens.push_back(gen.poly(*R, 3, 3));
      gens = withRelations(*R, gens);
      GroebnerBasis parallel = groebnerBasis(gens, R->nvars(), R->order(), true);
      GroebnerBasis serial = groebnerBasis(gens, R->nvars(), R->order(), false);
      GroebnerBasis naive = groebnerBasisReference(gens, R->nvars(), R->order());
      CHECK(parallel == serial);
      CHECK(parallel == naive);
      CHECK(satisfiesBuchbergerCriterion(parallel));
      for (auto& g : gens) CHECK(parallel.contains(g));
    }
  }
}

TEST_CASE("equal ideals give identical bases") {
  PolyGen gen(13);
  auto R = segreCone();
  for (int trial = 0; trial < 20; ++trial) {
    Polynomial f = gen.poly(*R, 2, 3), g = gen.poly(*R, 2, 3), h = gen.poly(*R, 1, 2);
    Ideal a(R, {f, g});
    Ideal b(R, {g + f * h, f * Rational(3)});
    Ideal c(R, {g, f, f + g, R->parse("x*y") * f - R->parse("u*v") * g});
    CHECK(a.key() == b.key());
    CHECK(a.basis() == c.basis());
  }
}

TEST_CASE("elimination orders") {
  MonomialOrder elim{1};
  Monomial a{1, 0, 0}, b{0, 3, 3};
  CHECK(elim.compare(a, b) > 0);
  CHECK(MonomialOrder{}.compare(a, b) < 0);
}
