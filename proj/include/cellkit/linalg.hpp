#pragma once

#include "cellkit/laurent.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace cellkit {

struct SingularMatrix : std::runtime_error {
  SingularMatrix() : std::runtime_error("singular linear system") {}
};

template <class F>
using Matrix = std::vector<std::vector<F>>;

// Solves A X = B exactly over a field (A is m x n with m >= n, full column rank).
// Throws SingularMatrix if the columns are dependent or the system is inconsistent.
template <class F>
Matrix<F> solve_linear_multi(Matrix<F> A, Matrix<F> B) {
  const std::size_t m = A.size();
  const std::size_t n = m ? A[0].size() : 0;
  const std::size_t k = B.empty() ? 0 : B[0].size();
  if (B.size() != m || m < n) throw SingularMatrix();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n; ++c, ++r) {
    std::size_t p = r;
    while (p < m && is_zero(A[p][c])) ++p;
    if (p == m) throw SingularMatrix();
    std::swap(A[p], A[r]);
    std::swap(B[p], B[r]);
    F inv = F(1) / A[r][c];
    for (std::size_t j = c; j < n; ++j) A[r][j] = A[r][j] * inv;
    for (std::size_t j = 0; j < k; ++j) B[r][j] = B[r][j] * inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || is_zero(A[i][c])) continue;
      F f = A[i][c];
      for (std::size_t j = c; j < n; ++j)
        if (!is_zero(A[r][j])) A[i][j] = A[i][j] - f * A[r][j];
      for (std::size_t j = 0; j < k; ++j)
        if (!is_zero(B[r][j])) B[i][j] = B[i][j] - f * B[r][j];
    }
  }
  for (std::size_t i = n; i < m; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (!is_zero(B[i][j])) throw SingularMatrix();
  B.resize(n);
  return B;
}

template <class F>
std::vector<F> solve_linear(const Matrix<F>& A, const std::vector<F>& b) {
  Matrix<F> B(b.size(), std::vector<F>(1));
  for (std::size_t i = 0; i < b.size(); ++i) B[i][0] = b[i];
  Matrix<F> X = solve_linear_multi(A, std::move(B));
  std::vector<F> x(X.size());
  for (std::size_t i = 0; i < X.size(); ++i) x[i] = X[i][0];
  return x;
}

// Some solution of A x = b over a field (free variables set to zero), or nullopt if inconsistent.
template <class F>
std::optional<std::vector<F>> solve_any(Matrix<F> A, std::vector<F> b) {
  const std::size_t m = A.size();
  const std::size_t n = m ? A[0].size() : 0;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && is_zero(A[p][c])) ++p;
    if (p == m) continue;
    std::swap(A[p], A[r]);
    std::swap(b[p], b[r]);
    F inv = F(1) / A[r][c];
    for (std::size_t j = c; j < n; ++j) A[r][j] = A[r][j] * inv;
    b[r] = b[r] * inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || is_zero(A[i][c])) continue;
      F f = A[i][c];
      for (std::size_t j = c; j < n; ++j) A[i][j] = A[i][j] - f * A[r][j];
      b[i] = b[i] - f * b[r];
    }
    pivots.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < m; ++i)
    if (!is_zero(b[i])) return std::nullopt;
  std::vector<F> x(n, F(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = b[i];
  return x;
}

// Rank over Q.
inline std::size_t rank_q(Matrix<mpq_class> A) {
  const std::size_t m = A.size();
  const std::size_t n = m ? A[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && sgn(A[p][c]) == 0) ++p;
    if (p == m) continue;
    std::swap(A[p], A[r]);
    for (std::size_t i = r + 1; i < m; ++i) {
      if (sgn(A[i][c]) == 0) continue;
      mpq_class f = A[i][c] / A[r][c];
      for (std::size_t j = c; j < n; ++j) A[i][j] -= f * A[r][j];
    }
    ++r;
  }
  return r;
}

// Fraction-free (Bareiss) solve of a square integer system; independent of solve_linear.
inline std::vector<mpq_class> bareiss_solve(Matrix<mpz_class> A, std::vector<mpz_class> b) {
  const std::size_t n = A.size();
  for (std::size_t i = 0; i < n; ++i) A[i].push_back(b[i]);
  mpz_class prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && A[p][k] == 0) ++p;
    if (p == n) throw SingularMatrix();
    std::swap(A[p], A[k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j <= n; ++j) {
        mpz_class t = A[i][j] * A[k][k] - A[i][k] * A[k][j];
        mpz_divexact(A[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      A[i][k] = 0;
    }
    prev = A[k][k];
  }
  std::vector<mpq_class> x(n);
  for (std::size_t i = n; i-- > 0;) {
    mpq_class s(A[i][n]);
    for (std::size_t j = i + 1; j < n; ++j) s -= mpq_class(A[i][j]) * x[j];
    x[i] = s / mpq_class(A[i][i]);
  }
  return x;
}

// Exact quotient a / b of Laurent polynomials; throws if b does not divide a.
inline ZPoly exact_divide(const ZPoly& a, const ZPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  ZPoly rem = a, q;
  const int db = b.degree();
  const Integer& lb = b.leading();
  std::vector<ZPoly::Term> qt;
  while (!rem.is_zero()) {
    int dr = rem.degree();
    if (dr - db < a.valuation() - b.valuation()) throw std::domain_error("inexact polynomial division");
    const Integer& lr = rem.leading();
    if (!lr.divisible_by(lb)) throw std::domain_error("inexact polynomial division");
    Integer c = lr.divexact(lb);
    qt.emplace_back(dr - db, c);
    rem.axpy(-c, dr - db, b);
  }
  return ZPoly::from_terms(std::move(qt));
}

// Determinant of a square matrix over Z[v, v^-1] by fraction-free elimination.
inline ZPoly laurent_det(Matrix<ZPoly> A) {
  const std::size_t n = A.size();
  if (n == 0) return ZPoly(1);
  ZPoly prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t p = k;
    while (p < n && A[p][k].is_zero()) ++p;
    if (p == n) return ZPoly();
    if (p != k) {
      std::swap(A[p], A[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) A[i][j] = exact_divide(A[i][j] * A[k][k] - A[i][k] * A[k][j], prev);
      A[i][k] = ZPoly();
    }
    prev = A[k][k];
  }
  ZPoly d = A[n - 1][n - 1];
  if (sign < 0) d = -d;
  return d;
}

}  // namespace cellkit
