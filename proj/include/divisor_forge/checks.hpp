#pragma once

#include <optional>
#include <string>

#include "divisor_forge/divisor.hpp"

namespace dforge {

enum class Verdict { True, False, Unknown };

std::string verdictString(Verdict v);

struct CheckReport {
  Verdict verdict = Verdict::Unknown;
  std::optional<Ideal> witnessIdeal;
  std::optional<FieldElement> witnessElement;
  std::string note;
};

// O(D) * O(-D) with denominators cleared (no reflexive hull), saturated by the
// irrelevant ideal in graded mode. The unit ideal exactly when D is Cartier.
Ideal nonCartierLocus(const WeilDivisor& D, bool graded = false);
CheckReport isCartier(const WeilDivisor& D, bool graded = false);

// Smallest integral multiple n*D that is Cartier, scanning the multiples of
// the common denominator up to the first one at or above `bound`; 0 if none.
int isQCartier(int bound, const WeilDivisor& D);

// Whether O(D) is free of rank one. When the grading is positive and O(D) has
// a homogeneous presentation the answer is decided by graded Nakayama;
// otherwise a generator is searched for and failure reports Unknown. A True
// verdict carries s with D = div(s).
CheckReport isPrincipal(const WeilDivisor& D, bool graded = false);

// isPrincipal(D - E); in graded mode the witness must also have degree 0.
CheckReport isLinearEquivalent(const WeilDivisor& D, const WeilDivisor& E, bool graded = false);

// Jacobian criterion for the scheme defined by I (R/I regular). In graded
// mode the singular locus is saturated by the irrelevant ideal first.
bool isRegular(const Ideal& I, bool graded = false);

// Simple normal crossings: R regular, every support prime regular, and every
// sum of k distinct support primes either the unit ideal or regular of
// height k. Depends on the support only.
CheckReport isSNC(const WeilDivisor& D, bool graded = false);

}  // namespace dforge
