#include "divisor_forge/fractional.hpp"

#include "divisor_forge/errors.hpp"
#include "divisor_forge/ideal_ops.hpp"

namespace dforge {

std::string FieldElement::toString(const QuotientRing& R) const {
  if (denominator.isOne()) return R.format(numerator);
  return "(" + R.format(numerator) + ")/(" + R.format(denominator) + ")";
}

FractionalIdeal::FractionalIdeal(Ideal numerator, Polynomial denominator)
    : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
  const auto& R = *numerator_.ring();
  denominator_ = R.normalForm(denominator_.withOrder(R.order()));
  if (denominator_.isZero()) throw MathError("fractional ideal with zero denominator");
  if (numerator_.isZero()) throw MathError("fractional ideal with zero numerator");
}

FractionalIdeal FractionalIdeal::unit(const RingPtr& ring) { return FractionalIdeal(Ideal::unit(ring), ring->one()); }

FractionalIdeal FractionalIdeal::normalized() const {
  const auto& R = *ring();
  Polynomial d = denominator_.monic();
  std::vector<Polynomial> gens = numerator_.generators();
  if (d.size() == 1 && !d.isConstant()) {
    Monomial common = d.leadingMonomial();
    for (auto& g : gens)
      for (auto& t : g.terms()) common = common.gcd(t.mono);
    if (!common.isOne()) {
      Polynomial c = Polynomial::monomial(R.order(), common, 1);
      Polynomial q;
      for (auto& g : gens) {
        g.divideExact(c, q);
        g = q;
      }
      d.divideExact(c, q);
      d = q;
      return FractionalIdeal(Ideal(ring(), gens), d);
    }
  } else if (!d.isConstant()) {
    std::vector<Polynomial> quotients;
    Polynomial q;
    for (auto& g : gens) {
      if (!g.divideExact(d, q)) return FractionalIdeal(numerator_, d);
      quotients.push_back(q);
    }
    return FractionalIdeal(Ideal(ring(), quotients), R.one());
  }
  return FractionalIdeal(numerator_, d);
}

bool FractionalIdeal::contains(const FieldElement& s) const {
  const auto& R = *ring();
  if (R.normalForm(s.denominator).isZero()) throw MathError("element with zero denominator");
  Ideal scaled = idealProduct(Ideal::principal(ring(), s.denominator), numerator_);
  return scaled.contains(R.normalForm(s.numerator * denominator_));
}

std::string FractionalIdeal::toString() const {
  const auto& R = *ring();
  std::string num = numerator_.toString();
  if (denominator_.isOne()) return num;
  return "(1/" + (denominator_.size() == 1 ? R.format(denominator_) : "(" + R.format(denominator_) + ")") +
         ")*" + num;
}

Polynomial chooseNonzerodivisor(const Ideal& I) {
  if (I.isZero()) throw MathError("the zero ideal has no nonzerodivisor");
  const MonomialOrder order = I.ring()->order();
  const Polynomial* best = nullptr;
  for (auto& g : I.generators()) {
    if (!best || g.totalDegree() < best->totalDegree() ||
        (g.totalDegree() == best->totalDegree() && order.compare(g.leadingMonomial(), best->leadingMonomial()) > 0))
      best = &g;
  }
  return *best;
}

Ideal reflexify(const Ideal& I) {
  if (I.isUnit()) return I;
  return reflexify(I, chooseNonzerodivisor(I));
}

Ideal reflexify(const Ideal& I, const Polynomial& f) {
  if (I.isZero()) throw MathError("the zero ideal has no reflexive hull");
  if (!I.contains(f) || I.ring()->normalForm(f).isZero())
    throw std::invalid_argument("reflexify needs a nonzero element of the ideal");
  Ideal principal = Ideal::principal(I.ring(), f);
  return idealQuotient(principal, idealQuotient(principal, I));
}

FractionalIdeal reflexiveHull(const FractionalIdeal& F) {
  return FractionalIdeal(reflexify(F.numerator()), F.denominator()).normalized();
}

FractionalIdeal dual(const FractionalIdeal& F) {
  const Ideal& N = F.numerator();
  Polynomial f = chooseNonzerodivisor(N);
  Ideal colon = idealQuotient(Ideal::principal(F.ring(), f), N);
  Ideal numerator = idealProduct(Ideal::principal(F.ring(), F.denominator()), colon);
  return FractionalIdeal(numerator, f).normalized();
}

FractionalIdeal reflexiveProduct(const FractionalIdeal& F, const FractionalIdeal& G) {
  requireSameRing(F.numerator(), G.numerator());
  Ideal numerator = reflexify(idealProduct(F.numerator(), G.numerator()));
  return FractionalIdeal(numerator, F.ring()->normalForm(F.denominator() * G.denominator())).normalized();
}

FractionalIdeal reflexivePower(const FractionalIdeal& F, int n) {
  if (n == 0) return FractionalIdeal::unit(F.ring());
  if (n < 0) return reflexivePower(dual(F), -n);
  const unsigned k = static_cast<unsigned>(n);
  Ideal numerator = reflexify(bracketPower(F.numerator(), k));
  return FractionalIdeal(numerator, F.ring()->normalForm(F.denominator().pow(k))).normalized();
}

bool equalsAsReflexive(const FractionalIdeal& F, const FractionalIdeal& G) {
  requireSameRing(F.numerator(), G.numerator());
  Ideal a = reflexify(idealProduct(Ideal::principal(F.ring(), G.denominator()), F.numerator()));
  Ideal b = reflexify(idealProduct(Ideal::principal(F.ring(), F.denominator()), G.numerator()));
  return a == b;
}

}  // namespace dforge
