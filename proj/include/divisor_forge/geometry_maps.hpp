#pragma once

#include <vector>

#include "divisor_forge/divisor.hpp"
#include "divisor_forge/ring.hpp"

namespace dforge {

enum class PullbackStrategy { Primes, Sheaves };

// The ideal of phi.target generated by the images of the generators of I.
Ideal extendIdeal(const RingMap& phi, const Ideal& I);

// Primes: sum of a_i div(phi(P_i) S). Sheaves: div(phi(I+) S) - div(phi(I-) S)
// where I+ and I- are the reflexive ideals O(-D+) and O(-D-). Neither checks
// the flatness, finiteness or Cartier hypotheses under which it is exact.
WeilDivisor pullbackDivisor(const RingMap& phi, const WeilDivisor& D,
                            PullbackStrategy strategy = PullbackStrategy::Primes);

// Basis of the degree-0 part of O(D) = (1/d) N, given by the numerators: the
// degree-(deg d) part of N.
std::vector<Polynomial> globalSectionNumerators(const WeilDivisor& D);

// The map QQ[YY1..YYn] -> R sending YYi to the i-th section numerator.
RingMap mapToProjectiveSpace(const WeilDivisor& D);

// Support of the cokernel of O^n -> O(D): ((s_1..s_n) : N) saturated by the
// irrelevant ideal. The unit ideal exactly when O(D) is globally generated.
Ideal baseLocus(const WeilDivisor& D);

}  // namespace dforge
