#pragma once

#include <vector>

#include "divisor_forge/divisor.hpp"
#include "divisor_forge/fractional.hpp"

namespace dforge {

struct SectionedDivisor {
  WeilDivisor divisor;
  FieldElement section;
};

// O(D) = {s : div(s) + D >= 0} as a fractional ideal, so effective divisors
// give fractional ideals containing R. Memoized on the divisor.
FractionalIdeal sheafOf(const WeilDivisor& D);

// A divisor E with O(E) isomorphic to F: E = -div(N) for F = (1/d) N. In
// graded mode div(m) is added for a Laurent monomial m of the same degree as
// d, which makes the isomorphism graded.
WeilDivisor divisorOfFractionalIdeal(const FractionalIdeal& F, bool graded = false);

// The effective divisor div(s) + div(d) - div(N) cut out by a section s of F.
SectionedDivisor divisorWithSection(const FractionalIdeal& F, const FieldElement& s);

// Integer exponents e with A e = target for the grading matrix A of R.
std::vector<Integer> findElementOfDegree(const Degree& target, const QuotientRing& R);
FieldElement laurentMonomial(const QuotientRing& R, const std::vector<Integer>& exponents);

// Degree of a homogeneous element; GradingError otherwise.
Degree degreeOf(const QuotientRing& R, const Polynomial& f);
Degree degreeOf(const QuotientRing& R, const FieldElement& s);

// Number of defining relations equals the codimension.
bool isCompleteIntersection(const QuotientRing& R);

// Canonical divisor of a graded complete intersection, from
// omega = R(sum deg f_j - sum deg x_i). Ungraded, omega is free and the
// answer is 0.
WeilDivisor canonicalDivisor(const RingPtr& R, bool graded = true);

}  // namespace dforge
