#pragma once

#include <vector>

#include "divisor_forge/ideal.hpp"

namespace dforge {

// Sufficient test for primality: eliminate variables through generators of
// the form c*x + r with r free of x, then accept when what remains is zero or
// one irreducible polynomial. A false result proves nothing.
bool certifyPrime(const Ideal& P);

// The minimal primes of height one over a nonzero ideal, sorted by key.
// Components are split by factoring basis elements and a few deterministic
// random combinations of generators; a component that can be neither split
// nor certified raises DecompositionIncomplete.
std::vector<Ideal> minimalHeightOnePrimes(const Ideal& I);

// The n-th symbolic power of a height-one prime, computed as the reflexive
// hull of the bracket power and cached per ring.
Ideal symbolicPower(const Ideal& P, unsigned n);

// Largest n with I contained in the n-th symbolic power of P (0 when I is not
// contained in P), by doubling then bisection.
int maxSymbolicContainment(const Ideal& I, const Ideal& P);

}  // namespace dforge
