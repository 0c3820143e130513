#pragma once

#include <vector>

#include "divisor_forge/polynomial.hpp"

namespace dforge {

using IntMatrix = std::vector<std::vector<Integer>>;

// U * A * V = S with U, V unimodular and S diagonal, nonnegative, each
// diagonal entry dividing the next; `rank` nonzero entries.
struct SmithDecomposition {
  IntMatrix U;
  IntMatrix V;
  IntMatrix S;
  size_t rank = 0;
};

SmithDecomposition smithDecomposition(const IntMatrix& A);

// Some integer x with A x = b: the Smith solution with free coordinates set to
// zero. Throws NoSolution.
std::vector<Integer> solveDiophantine(const IntMatrix& A, const std::vector<Integer>& b);

IntMatrix identityMatrix(size_t n);
IntMatrix multiply(const IntMatrix& A, const IntMatrix& B);
std::vector<Integer> multiply(const IntMatrix& A, const std::vector<Integer>& x);
// Fraction-free Gaussian elimination (Bareiss).
Integer determinant(const IntMatrix& M);

}  // namespace dforge
