#pragma once

// Random generators and independent reference routines shared by the tests.
// The oracles deliberately use different algorithms from the library paths
// they check (cofactor expansion, rational elimination, explicit Leibniz
// expansion).

#include <random>
#include <vector>

#include "orelclm/linalg.hpp"
#include "orelclm/ore.hpp"

namespace testing_support {

using namespace orelclm;

inline const PrimeField kF7{7};
inline const PrimeField kBig{};

inline DensePoly P(std::initializer_list<std::int64_t> c, const PrimeField& f = kBig) {
  return DensePoly::from_ints(f, c);
}

inline OreOperator Op(const std::vector<std::vector<std::int64_t>>& c, const PrimeField& f = kBig) {
  return make_operator(f, c);
}

inline DensePoly random_poly(std::mt19937_64& rng, const PrimeField& f, int max_degree) {
  std::uniform_int_distribution<std::uint64_t> dist(0, f.prime() - 1);
  std::vector<std::uint64_t> c(static_cast<std::size_t>(max_degree + 1));
  for (auto& v : c) v = dist(rng);
  return DensePoly(f, std::move(c));
}

inline DensePoly random_nonzero_poly(std::mt19937_64& rng, const PrimeField& f, int max_degree) {
  for (;;) {
    auto p = random_poly(rng, f, max_degree);
    if (!p.is_zero()) return p;
  }
}

/// Operator of exact order r with coefficient degrees <= d.
inline OreOperator random_operator(std::mt19937_64& rng, const PrimeField& f, int d, int r) {
  std::vector<DensePoly> c;
  for (int i = 0; i < r; ++i) c.push_back(random_poly(rng, f, d));
  c.push_back(random_nonzero_poly(rng, f, d));
  return OreOperator(f, std::move(c));
}

inline std::uint64_t binom_mod(const PrimeField& f, std::size_t n, std::size_t k) {
  std::uint64_t num = 1, den = 1;
  for (std::size_t i = 0; i < k; ++i) {
    num = f.mul(num, f.reduce_unsigned(n - i));
    den = f.mul(den, f.reduce_unsigned(i + 1));
  }
  return f.mul(num, f.inv(den));
}

/// A*B via D^i b = sum_j binom(i, j) b^(j) D^(i-j).
inline OreOperator leibniz_product(const OreOperator& A, const OreOperator& B) {
  const PrimeField& f = A.field();
  if (A.is_zero() || B.is_zero()) return OreOperator(f);
  std::vector<DensePoly> acc(A.coeffs().size() + B.coeffs().size() - 1, DensePoly(f));
  for (std::size_t i = 0; i < A.coeffs().size(); ++i) {
    for (std::size_t k = 0; k < B.coeffs().size(); ++k) {
      DensePoly deriv = B.coeff(k);
      for (std::size_t j = 0; j <= i; ++j) {
        if (j > 0) deriv = poly_derivative(deriv);
        acc[k + i - j] += (A.coeff(i) * deriv).scaled(binom_mod(f, i, j));
      }
    }
  }
  return OreOperator(f, std::move(acc));
}

/// Determinant by Laplace expansion along the first row.
inline DensePoly cofactor_det(const PolyMatrix& M) {
  const std::size_t n = M.rows();
  if (n == 0) return DensePoly::constant(M.field(), 1);
  if (n == 1) return M.at(0, 0);
  DensePoly acc(M.field());
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::size_t> rows, cols;
    for (std::size_t i = 1; i < n; ++i) rows.push_back(i);
    for (std::size_t c = 0; c < n; ++c)
      if (c != j) cols.push_back(c);
    DensePoly term = M.at(0, j) * cofactor_det(M.submatrix(rows, cols));
    if (j % 2) acc -= term;
    else acc += term;
  }
  return acc;
}

/// Rank over F_p(x) by Gaussian elimination with rational-function entries.
inline std::size_t rational_rank(const PolyMatrix& M) {
  std::vector<std::vector<RatFun>> a(M.rows(), std::vector<RatFun>(M.cols(), RatFun(M.field())));
  for (std::size_t i = 0; i < M.rows(); ++i)
    for (std::size_t j = 0; j < M.cols(); ++j) a[i][j] = RatFun(M.at(i, j));
  std::size_t rank = 0;
  for (std::size_t c = 0; c < M.cols() && rank < M.rows(); ++c) {
    std::size_t piv = rank;
    while (piv < M.rows() && a[piv][c].is_zero()) ++piv;
    if (piv == M.rows()) continue;
    std::swap(a[piv], a[rank]);
    const RatFun inv = a[rank][c].inv();
    for (std::size_t i = rank + 1; i < M.rows(); ++i) {
      if (a[i][c].is_zero()) continue;
      const RatFun factor = a[i][c] * inv;
      for (std::size_t j = c; j < M.cols(); ++j) a[i][j] -= factor * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

inline PolyMatrix poly_matrix(const std::vector<std::vector<DensePoly>>& rows) {
  PolyMatrix M(rows.at(0).at(0).field(), rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) M.at(i, j) = rows[i][j];
  return M;
}

inline PolyMatrix random_poly_matrix(std::mt19937_64& rng, const PrimeField& f, std::size_t rows,
                                     std::size_t cols, int degree) {
  PolyMatrix M(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) M.at(i, j) = random_poly(rng, f, degree);
  return M;
}

}  // namespace testing_support
