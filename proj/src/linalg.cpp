#include "orelclm/linalg.hpp"

#include <algorithm>
#include <random>

namespace orelclm {

namespace {

using u64 = std::uint64_t;

void require_square(std::size_t rows, std::size_t cols) {
  if (rows != cols) throw ArithmeticError("determinant of a non-square matrix");
}

// Forward elimination in place; returns the rank.  If det is non-null the
// matrix must be square and *det receives the determinant.
std::size_t forward_eliminate(ScalarMatrix& A, u64* det) {
  const PrimeField& f = A.field();
  const std::size_t rows = A.rows(), cols = A.cols();
  std::size_t rank = 0;
  u64 d = 1;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && A.at(piv, c) == 0) ++piv;
    if (piv == rows) {
      d = 0;
      continue;
    }
    if (piv != rank) {
      std::swap_ranges(A.row(piv).begin(), A.row(piv).end(), A.row(rank).begin());
      d = f.neg(d);
    }
    auto prow = A.row(rank);
    const u64 inv = f.inv(prow[c]);
    d = f.mul(d, prow[c]);
    for (std::size_t j = c; j < cols; ++j) prow[j] = f.mul(prow[j], inv);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      auto r = A.row(i);
      const u64 a = r[c];
      if (a == 0) continue;
      const u64 na = f.neg(a);
      for (std::size_t j = c; j < cols; ++j) {
        if (prow[j] != 0) r[j] = f.add(r[j], f.mul(na, prow[j]));
      }
    }
    ++rank;
  }
  if (det) *det = rank == rows ? d : 0;
  return rank;
}

}  // namespace

ScalarMatrix ScalarMatrix::transposed() const {
  ScalarMatrix T(f_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) T.at(j, i) = at(i, j);
  return T;
}

int PolyMatrix::degree() const noexcept {
  int d = -1;
  for (const auto& e : data_) d = std::max(d, e.degree());
  return d;
}

ScalarMatrix PolyMatrix::evaluate(std::uint64_t point) const {
  ScalarMatrix S(f_, rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) S.at(i, j) = at(i, j).eval(point);
  return S;
}

PolyMatrix PolyMatrix::transposed() const {
  PolyMatrix T(f_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) T.at(j, i) = at(i, j);
  return T;
}

PolyMatrix PolyMatrix::submatrix(std::span<const std::size_t> rows,
                                 std::span<const std::size_t> cols) const {
  PolyMatrix S(f_, rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) S.at(i, j) = at(rows[i], cols[j]);
  return S;
}

std::size_t leading_zeros(std::span<const std::uint64_t> v) {
  std::size_t k = 0;
  while (k < v.size() && v[k] == 0) ++k;
  return k;
}

std::size_t leading_zeros(std::span<const DensePoly> v) {
  std::size_t k = 0;
  while (k < v.size() && v[k].is_zero()) ++k;
  return k;
}

std::vector<std::uint64_t> left_multiply(std::span<const std::uint64_t> v, const ScalarMatrix& M) {
  if (v.size() != M.rows()) throw ArithmeticError("vector/matrix size mismatch");
  const PrimeField& f = M.field();
  std::vector<u64> out(M.cols(), 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    auto r = M.row(i);
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = f.add(out[j], f.mul(v[i], r[j]));
  }
  return out;
}

std::vector<DensePoly> left_multiply(std::span<const DensePoly> v, const PolyMatrix& M) {
  if (v.size() != M.rows()) throw ArithmeticError("vector/matrix size mismatch");
  std::vector<DensePoly> out(M.cols(), DensePoly(M.field()));
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    for (std::size_t j = 0; j < out.size(); ++j) {
      if (!M.at(i, j).is_zero()) out[j] += v[i] * M.at(i, j);
    }
  }
  return out;
}

std::size_t scalar_rank(const ScalarMatrix& M) {
  ScalarMatrix A = M.rows() <= M.cols() ? M : M.transposed();
  return forward_eliminate(A, nullptr);
}

std::uint64_t scalar_det(const ScalarMatrix& M) {
  require_square(M.rows(), M.cols());
  ScalarMatrix A = M;
  u64 d = 0;
  forward_eliminate(A, &d);
  return d;
}

ScalarKernel scalar_left_kernel(const ScalarMatrix& M) {
  // Gauss-Jordan on A = M^T, scanning the columns of A (= rows of M) from the
  // right, so the kernel vector of a free index f is supported on f and on
  // pivot indices greater than f.
  const PrimeField& f = M.field();
  ScalarMatrix A = M.transposed();
  const std::size_t n = A.rows(), m = A.cols();
  std::vector<bool> is_pivot_row(n, false);
  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, column)
  std::vector<std::size_t> free_cols;
  for (std::size_t c = m; c-- > 0;) {
    std::size_t piv = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (!is_pivot_row[i] && A.at(i, c) != 0) {
        piv = i;
        break;
      }
    }
    if (piv == n) {
      free_cols.push_back(c);
      continue;
    }
    auto prow = A.row(piv);
    const u64 inv = f.inv(prow[c]);
    for (std::size_t j = 0; j < c; ++j) prow[j] = f.mul(prow[j], inv);
    for (auto j : free_cols) prow[j] = f.mul(prow[j], inv);
    prow[c] = 1;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == piv) continue;
      auto r = A.row(i);
      const u64 a = r[c];
      if (a == 0) continue;
      const u64 na = f.neg(a);
      for (std::size_t j = 0; j < c; ++j) {
        if (prow[j] != 0) r[j] = f.add(r[j], f.mul(na, prow[j]));
      }
      for (auto j : free_cols) r[j] = f.add(r[j], f.mul(na, prow[j]));
      r[c] = 0;
    }
    is_pivot_row[piv] = true;
    pivots.emplace_back(piv, c);
  }
  ScalarKernel K;
  std::sort(free_cols.begin(), free_cols.end());
  for (auto fc : free_cols) {
    std::vector<u64> v(m, 0);
    v[fc] = 1;
    for (auto [row, col] : pivots) v[col] = f.neg(A.at(row, fc));
    K.vectors.push_back(std::move(v));
  }
  return K;
}

PolyKernel poly_left_kernel(const PolyMatrix& M) {
  const PrimeField& f = M.field();
  PolyMatrix A = M.transposed();
  const std::size_t n = A.rows(), m = A.cols();
  std::vector<int> pivot_col_of_row(n, -1);
  std::vector<std::pair<std::size_t, std::size_t>> pivots;
  std::vector<std::size_t> free_cols;
  DensePoly prev = DensePoly::constant(f, 1);
  for (std::size_t c = m; c-- > 0;) {
    std::size_t piv = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (pivot_col_of_row[i] >= 0 || A.at(i, c).is_zero()) continue;
      if (piv == n || A.at(i, c).degree() < A.at(piv, c).degree()) piv = i;
    }
    if (piv == n) {
      free_cols.push_back(c);
      continue;
    }
    const DensePoly pv = A.at(piv, c);
    auto update = [&](std::size_t i, std::size_t j, const DensePoly& a) {
      DensePoly num = pv * A.at(i, j);
      if (!a.is_zero() && !A.at(piv, j).is_zero()) num -= a * A.at(piv, j);
      A.at(i, j) = prev.is_one() ? std::move(num) : poly_exact_div(num, prev);
    };
    for (std::size_t i = 0; i < n; ++i) {
      if (i == piv) continue;
      const DensePoly a = A.at(i, c);
      for (std::size_t j = 0; j < c; ++j) update(i, j, a);
      for (auto j : free_cols) update(i, j, a);
      A.at(i, c) = DensePoly(f);
      if (pivot_col_of_row[i] >= 0) A.at(i, static_cast<std::size_t>(pivot_col_of_row[i])) = pv;
    }
    prev = pv;
    pivot_col_of_row[piv] = static_cast<int>(c);
    pivots.emplace_back(piv, c);
  }
  PolyKernel K;
  std::sort(free_cols.begin(), free_cols.end());
  for (auto fc : free_cols) {
    std::vector<DensePoly> v(m, DensePoly(f));
    v[fc] = prev;
    for (auto [row, col] : pivots) v[col] = -A.at(row, fc);
    DensePoly g(f);
    for (const auto& e : v) {
      if (e.is_zero()) continue;
      g = g.is_zero() ? e.monic() : poly_gcd(g, e);
      if (g.is_one()) break;
    }
    const u64 s = f.inv(v[fc].lead());
    for (auto& e : v) {
      if (!g.is_one()) e = poly_exact_div(e, g);
      e = e.scaled(s);
    }
    K.vectors.push_back(std::move(v));
  }
  return K;
}

RankAndKernel poly_rank_and_kernel(const PolyMatrix& M, const RankProbe& probe) {
  RankAndKernel out;
  std::mt19937_64 rng(probe.seed);
  std::uniform_int_distribution<u64> dist(1, M.field().prime() - 1);
  for (int t = 0; t < probe.probes; ++t) {
    out.probed_rank = std::max(out.probed_rank, scalar_rank(M.evaluate(dist(rng))));
  }
  out.kernel = poly_left_kernel(M);
  out.rank = M.rows() - out.kernel.dimension();
  out.certified = out.rank == out.probed_rank;
  return out;
}

std::size_t poly_rank(const PolyMatrix& M, const RankProbe& probe) {
  return poly_rank_and_kernel(M, probe).rank;
}

DensePoly interpolate(const PrimeField& f, std::span<const std::uint64_t> points,
                      std::span<const std::uint64_t> values) {
  // Newton divided differences, then Horner expansion of the Newton form.
  const std::size_t n = points.size();
  std::vector<u64> c(values.begin(), values.end());
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = n - 1; i >= j; --i) {
      c[i] = f.mul(f.sub(c[i], c[i - 1]), f.inv(f.sub(points[i], points[i - j])));
      if (i == j) break;
    }
  }
  std::vector<u64> poly{n ? c[n - 1] : 0};
  for (std::size_t k = n - 1; k-- > 0;) {
    // poly = poly * (x - points[k]) + c[k]
    std::vector<u64> next(poly.size() + 1, 0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] = f.add(next[i + 1], poly[i]);
      next[i] = f.sub(next[i], f.mul(poly[i], points[k]));
    }
    next[0] = f.add(next[0], c[k]);
    poly = std::move(next);
  }
  return DensePoly(f, std::move(poly));
}

DensePoly poly_det(const PolyMatrix& M) {
  require_square(M.rows(), M.cols());
  const PrimeField& f = M.field();
  const std::size_t n = M.rows();
  if (n == 0) return DensePoly::constant(f, 1);
  long row_bound = 0, col_bound = 0;
  for (std::size_t i = 0; i < n; ++i) {
    int rmax = -1, cmax = -1;
    for (std::size_t j = 0; j < n; ++j) {
      rmax = std::max(rmax, M.at(i, j).degree());
      cmax = std::max(cmax, M.at(j, i).degree());
    }
    if (rmax < 0 || cmax < 0) return DensePoly(f);
    row_bound += rmax;
    col_bound += cmax;
  }
  const auto bound = static_cast<u64>(std::min(row_bound, col_bound));
  if (bound + 1 > f.prime()) throw ArithmeticError("field too small for determinant interpolation");
  std::vector<u64> points(bound + 1), values(bound + 1);
  for (u64 k = 0; k <= bound; ++k) {
    points[k] = k;
    values[k] = scalar_det(M.evaluate(k));
  }
  return interpolate(f, points, values);
}

}  // namespace orelclm
