#pragma once

#include <utility>
#include <vector>

#include "divisor_forge/polynomial.hpp"

namespace dforge {

struct FactorizationResult {
  Rational unit;
  // Irreducible over QQ, integer primitive, positive leading coefficient.
  std::vector<std::pair<Polynomial, int>> factors;

  size_t distinctFactors() const { return factors.size(); }
  bool isIrreducible() const { return factors.size() == 1 && factors[0].second == 1; }
};

// Kronecker substitution degree cap; DIVISOR_FORGE_MAXDEG overrides 512.
size_t factorDegreeLimit();

// Irreducible factorization over the rationals. Multivariate inputs go
// through Kronecker substitution; substituted degrees above the cap raise
// FactorizationLimit.
FactorizationResult factorPolynomial(const Polynomial& f);

namespace univariate {

// Dense integer polynomial, index = degree, no trailing zeros.
using ZPoly = std::vector<Integer>;

// Factorization of a nonconstant primitive integer polynomial into
// irreducible primitive factors with multiplicities (squarefree decomposition,
// Cantor-Zassenhaus modulo a good prime, Hensel lifting, recombination).
std::vector<std::pair<ZPoly, int>> factor(const ZPoly& f);

ZPoly multiply(const ZPoly& a, const ZPoly& b);

}  // namespace univariate

}  // namespace dforge
