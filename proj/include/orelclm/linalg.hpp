#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "orelclm/poly.hpp"

namespace orelclm {

/// Dense row-major matrix over F_p.
class ScalarMatrix {
 public:
  ScalarMatrix(const PrimeField& f, std::size_t rows, std::size_t cols)
      : f_(f), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  const PrimeField& field() const noexcept { return f_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::uint64_t& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::uint64_t at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::span<std::uint64_t> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const std::uint64_t> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  ScalarMatrix transposed() const;

 private:
  PrimeField f_;
  std::size_t rows_, cols_;
  std::vector<std::uint64_t> data_;
};

/// Dense row-major matrix over F_p[x].
class PolyMatrix {
 public:
  PolyMatrix(const PrimeField& f, std::size_t rows, std::size_t cols)
      : f_(f), rows_(rows), cols_(cols), data_(rows * cols, DensePoly(f)) {}

  const PrimeField& field() const noexcept { return f_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  DensePoly& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const DensePoly& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  /// Max entry degree; -1 for the zero matrix.
  int degree() const noexcept;

  ScalarMatrix evaluate(std::uint64_t point) const;
  PolyMatrix transposed() const;
  PolyMatrix submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;

 private:
  PrimeField f_;
  std::size_t rows_, cols_;
  std::vector<DensePoly> data_;
};

/// Basis of a left kernel {v : v*M = 0}.
///
/// Vectors are in echelon form from the left: their leading indices (number
/// of leading zeros) are strictly increasing, so the last vector has the most
/// leading zeros.  Polynomial vectors are primitive (entry gcd 1) and scalar
/// vectors have leading entry 1.
template <class T>
struct KernelBasis {
  std::vector<std::vector<T>> vectors;

  std::size_t dimension() const noexcept { return vectors.size(); }
  bool empty() const noexcept { return vectors.empty(); }
};

using ScalarKernel = KernelBasis<std::uint64_t>;
using PolyKernel = KernelBasis<DensePoly>;

/// Number of leading zero entries; the vector length if all are zero.
std::size_t leading_zeros(std::span<const std::uint64_t> v);
std::size_t leading_zeros(std::span<const DensePoly> v);

std::vector<std::uint64_t> left_multiply(std::span<const std::uint64_t> v, const ScalarMatrix& M);
std::vector<DensePoly> left_multiply(std::span<const DensePoly> v, const PolyMatrix& M);

std::size_t scalar_rank(const ScalarMatrix& M);
ScalarKernel scalar_left_kernel(const ScalarMatrix& M);
std::uint64_t scalar_det(const ScalarMatrix& M);

struct RankProbe {
  /// Number of random evaluation points.
  int probes = 3;
  std::uint64_t seed = 0x5eed;
};

struct RankAndKernel {
  std::size_t rank = 0;
  /// Largest scalar rank seen at the random points.
  std::size_t probed_rank = 0;
  /// True if the kernel dimension confirmed the probed rank.
  bool certified = false;
  PolyKernel kernel;
};

/// Rank over F_p(x) by random evaluation, certified against the exact left
/// kernel.  A probe that underestimates only costs time; the returned rank is
/// always the exact one.
RankAndKernel poly_rank_and_kernel(const PolyMatrix& M, const RankProbe& probe = {});
std::size_t poly_rank(const PolyMatrix& M, const RankProbe& probe = {});

/// Left kernel over F_p(x) with polynomial, primitive vectors, via
/// fraction-free Gauss-Jordan elimination on the transpose with
/// lowest-degree pivoting.
PolyKernel poly_left_kernel(const PolyMatrix& M);

/// Determinant by evaluation at (degree bound + 1) points and interpolation.
/// Throws ArithmeticError for non-square input.
DensePoly poly_det(const PolyMatrix& M);

/// Interpolating polynomial through (points[i], values[i]); points distinct.
DensePoly interpolate(const PrimeField& f, std::span<const std::uint64_t> points,
                      std::span<const std::uint64_t> values);

}  // namespace orelclm
