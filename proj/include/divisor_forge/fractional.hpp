#pragma once

#include <string>

#include "divisor_forge/ideal.hpp"

namespace dforge {

// An element g/h of the fraction field, h nonzero in the ring.
struct FieldElement {
  Polynomial numerator;
  Polynomial denominator;

  std::string toString(const QuotientRing& R) const;
};

// The fractional ideal (1/d) * N with N a nonzero ideal and d nonzero.
class FractionalIdeal {
 public:
  FractionalIdeal(Ideal numerator, Polynomial denominator);
  static FractionalIdeal unit(const RingPtr& ring);

  const RingPtr& ring() const { return numerator_.ring(); }
  const Ideal& numerator() const { return numerator_; }
  const Polynomial& denominator() const { return denominator_; }

  // Same fractional ideal after cancelling common monomial factors and making
  // the denominator monic.
  FractionalIdeal normalized() const;

  bool contains(const FieldElement& s) const;
  std::string toString() const;

 private:
  Ideal numerator_;
  Polynomial denominator_;
};

// The nonzero generator of least degree, ties going to the larger leading
// monomial. Every nonzero element is a nonzerodivisor in a domain.
Polynomial chooseNonzerodivisor(const Ideal& I);

// Reflexive hull (f) : ((f) : I) for any nonzero f in I; the default picks f
// with chooseNonzerodivisor.
Ideal reflexify(const Ideal& I);
Ideal reflexify(const Ideal& I, const Polynomial& f);

FractionalIdeal reflexiveHull(const FractionalIdeal& F);
// Hom(F, R) as a fractional ideal.
FractionalIdeal dual(const FractionalIdeal& F);
FractionalIdeal reflexiveProduct(const FractionalIdeal& F, const FractionalIdeal& G);
FractionalIdeal reflexivePower(const FractionalIdeal& F, int n);
bool equalsAsReflexive(const FractionalIdeal& F, const FractionalIdeal& G);

}  // namespace dforge
