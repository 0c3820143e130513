#include "divisor_forge/smith.hpp"

#include <stdexcept>

#include "divisor_forge/errors.hpp"

namespace dforge {

namespace {

size_t columns(const IntMatrix& A) { return A.empty() ? 0 : A[0].size(); }

void swapRows(IntMatrix& M, size_t i, size_t j) { std::swap(M[i], M[j]); }

void swapColumns(IntMatrix& M, size_t i, size_t j) {
  for (auto& row : M) std::swap(row[i], row[j]);
}

// row_i += q * row_j
void addRow(IntMatrix& M, size_t i, size_t j, const Integer& q) {
  for (size_t c = 0; c < M[i].size(); ++c) M[i][c] += q * M[j][c];
}

// col_i += q * col_j
void addColumn(IntMatrix& M, size_t i, size_t j, const Integer& q) {
  for (auto& row : M) row[i] += q * row[j];
}

}  // namespace

IntMatrix identityMatrix(size_t n) {
  IntMatrix I(n, std::vector<Integer>(n, 0));
  for (size_t i = 0; i < n; ++i) I[i][i] = 1;
  return I;
}

IntMatrix multiply(const IntMatrix& A, const IntMatrix& B) {
  const size_t m = A.size(), k = B.size(), n = columns(B);
  if (columns(A) != k) throw std::invalid_argument("matrix shapes do not match");
  IntMatrix C(m, std::vector<Integer>(n, 0));
  for (size_t i = 0; i < m; ++i)
    for (size_t l = 0; l < k; ++l)
      if (A[i][l] != 0)
        for (size_t j = 0; j < n; ++j) C[i][j] += A[i][l] * B[l][j];
  return C;
}

std::vector<Integer> multiply(const IntMatrix& A, const std::vector<Integer>& x) {
  if (columns(A) != x.size() && !A.empty()) throw std::invalid_argument("matrix shapes do not match");
  std::vector<Integer> y(A.size(), 0);
  for (size_t i = 0; i < A.size(); ++i)
    for (size_t j = 0; j < x.size(); ++j) y[i] += A[i][j] * x[j];
  return y;
}

Integer determinant(const IntMatrix& M) {
  const size_t n = M.size();
  if (n == 0) return 1;
  if (columns(M) != n) throw std::invalid_argument("determinant of a non-square matrix");
  IntMatrix A = M;
  Integer sign = 1, previous = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (A[k][k] == 0) {
      size_t swap = k + 1;
      while (swap < n && A[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(A[k], A[swap]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) / previous;
    previous = A[k][k];
  }
  return sign * A[n - 1][n - 1];
}

SmithDecomposition smithDecomposition(const IntMatrix& A) {
  const size_t m = A.size(), n = columns(A);
  SmithDecomposition d{identityMatrix(m), identityMatrix(n), A, 0};
  IntMatrix& S = d.S;
  size_t t = 0;
  while (t < m && t < n) {
    // Smallest nonzero entry of the remaining block, first in row-major order.
    size_t pi = m, pj = n;
    for (size_t i = t; i < m; ++i)
      for (size_t j = t; j < n; ++j)
        if (S[i][j] != 0 && (pi == m || abs(S[i][j]) < abs(S[pi][pj]))) {
          pi = i;
          pj = j;
        }
    if (pi == m) break;
    for (;;) {
      if (pi != t) {
        swapRows(S, t, pi);
        swapRows(d.U, t, pi);
      }
      if (pj != t) {
        swapColumns(S, t, pj);
        swapColumns(d.V, t, pj);
      }
      bool clean = true;
      for (size_t i = t + 1; i < m; ++i) {
        if (S[i][t] == 0) continue;
        Integer q = S[i][t] / S[t][t];
        addRow(S, i, t, -q);
        addRow(d.U, i, t, -q);
        if (S[i][t] != 0) clean = false;
      }
      for (size_t j = t + 1; j < n; ++j) {
        if (S[t][j] == 0) continue;
        Integer q = S[t][j] / S[t][t];
        addColumn(S, j, t, -q);
        addColumn(d.V, j, t, -q);
        if (S[t][j] != 0) clean = false;
      }
      if (!clean) {
        // A remainder smaller than the pivot survives; move the smallest one in.
        pi = t;
        pj = t;
        for (size_t i = t + 1; i < m; ++i)
          if (S[i][t] != 0 && abs(S[i][t]) < abs(S[pi][pj])) {
            pi = i;
            pj = t;
          }
        for (size_t j = t + 1; j < n; ++j)
          if (S[t][j] != 0 && abs(S[t][j]) < abs(S[pi][pj])) {
            pi = t;
            pj = j;
          }
        continue;
      }
      // Enforce divisibility of the rest of the block by the pivot.
      size_t bad = m;
      for (size_t i = t + 1; i < m && bad == m; ++i)
        for (size_t j = t + 1; j < n; ++j)
          if (S[i][j] % S[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad == m) break;
      addRow(S, t, bad, 1);
      addRow(d.U, t, bad, 1);
      pi = t;
      pj = t;
    }
    if (S[t][t] < 0) {
      for (auto& x : S[t]) x = -x;
      for (auto& x : d.U[t]) x = -x;
    }
    ++t;
  }
  d.rank = t;
  return d;
}

std::vector<Integer> solveDiophantine(const IntMatrix& A, const std::vector<Integer>& b) {
  if (A.size() != b.size()) throw std::invalid_argument("right-hand side has the wrong length");
  SmithDecomposition d = smithDecomposition(A);
  std::vector<Integer> c = multiply(d.U, b);
  std::vector<Integer> y(columns(A), 0);
  for (size_t i = 0; i < c.size(); ++i) {
    if (i < d.rank) {
      if (c[i] % d.S[i][i] != 0) throw NoSolution("no integer solution: divisibility fails");
      y[i] = c[i] / d.S[i][i];
    } else if (c[i] != 0) {
      throw NoSolution("no integer solution: inconsistent system");
    }
  }
  return multiply(d.V, y);
}

}  // namespace dforge
