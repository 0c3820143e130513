#include "divisor_forge/geometry_maps.hpp"

#include <algorithm>

#include "divisor_forge/correspondence.hpp"
#include "divisor_forge/errors.hpp"
#include "divisor_forge/ideal_ops.hpp"

namespace dforge {

namespace {

// reflexify of the product of bracket powers over the terms with sign `sign`.
Ideal reflexivePart(const WeilDivisor& D, int sign) {
  Ideal product = Ideal::unit(D.ring());
  for (auto& [key, term] : D.terms()) {
    if (sgn(term.coefficient) != sign) continue;
    unsigned n = static_cast<unsigned>(Rational(abs(term.coefficient)).get_num().get_ui());
    product = idealProduct(product, bracketPower(term.prime, n));
  }
  return reflexify(product);
}

WeilDivisor divisorOfExtension(const RingMap& phi, const Ideal& I) {
  Ideal J = extendIdeal(phi, I);
  if (J.isZero()) throw MathError(I.toString() + " maps to the zero ideal");
  return divisorOfIdeal(J);
}

}  // namespace

Ideal extendIdeal(const RingMap& phi, const Ideal& I) {
  if (I.ring() != phi.source()) throw RingMismatch();
  std::vector<Polynomial> images;
  for (auto& g : I.generators()) images.push_back(phi.apply(g));
  return Ideal(phi.target(), images);
}

WeilDivisor pullbackDivisor(const RingMap& phi, const WeilDivisor& D, PullbackStrategy strategy) {
  if (D.ring() != phi.source()) throw RingMismatch();
  if (strategy == PullbackStrategy::Primes) {
    WeilDivisor out(phi.target(), D.tier());
    for (auto& [key, term] : D.terms()) {
      WeilDivisor piece = divisorOfExtension(phi, term.prime);
      for (auto& [k, t] : piece.terms()) out.addTerm(term.coefficient * t.coefficient, t.prime);
    }
    return out;
  }
  requireIntegral(D);
  return divisorOfExtension(phi, reflexivePart(D, 1)) - divisorOfExtension(phi, reflexivePart(D, -1));
}

std::vector<Polynomial> globalSectionNumerators(const WeilDivisor& D) {
  FractionalIdeal F = sheafOf(D);
  return gradedPieceBasis(F.numerator(), degreeOf(*D.ring(), F.denominator()));
}

RingMap mapToProjectiveSpace(const WeilDivisor& D) {
  const RingPtr& R = D.ring();
  auto sections = globalSectionNumerators(D);
  if (sections.empty()) throw MathError("O(D) has no global sections");
  std::vector<std::string> names;
  for (size_t i = 1; i <= sections.size(); ++i) {
    std::string name = "YY" + std::to_string(i);
    while (R->variableIndex(name)) name += "_";
    names.push_back(name);
  }
  RingPtr source = QuotientRing::make("PP", names, {});
  return RingMap(source, R, sections);
}

Ideal baseLocus(const WeilDivisor& D) {
  const RingPtr& R = D.ring();
  FractionalIdeal F = sheafOf(D);
  auto sections = gradedPieceBasis(F.numerator(), degreeOf(*R, F.denominator()));
  Ideal spanned(R, sections);
  return saturate(idealQuotient(spanned, F.numerator()), irrelevantIdeal(R));
}

}  // namespace dforge
