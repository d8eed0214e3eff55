#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "orelclm/field.hpp"

namespace orelclm {

/// Dense univariate polynomial over F_p, coefficients in ascending powers of x.
///
/// The coefficient vector never ends in a zero, so the zero polynomial is the
/// empty vector and equality is structural.
class DensePoly {
 public:
  /// degree() of the zero polynomial.
  static constexpr int kZeroDegree = -1;
  /// Operand size (in coefficients) above which multiplication uses Karatsuba.
  static constexpr std::size_t kKaratsubaThreshold = 32;

  explicit DensePoly(const PrimeField& f = PrimeField()) : f_(f) {}
  /// Residues must already lie in [0, p).
  DensePoly(const PrimeField& f, std::vector<std::uint64_t> coeffs);

  static DensePoly from_ints(const PrimeField& f, std::initializer_list<std::int64_t> coeffs);
  static DensePoly from_ints(const PrimeField& f, std::span<const std::int64_t> coeffs);
  static DensePoly constant(const PrimeField& f, std::uint64_t c);
  static DensePoly monomial(const PrimeField& f, std::uint64_t c, std::size_t k);
  static DensePoly x(const PrimeField& f) { return monomial(f, 1, 1); }

  const PrimeField& field() const noexcept { return f_; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  std::size_t size() const noexcept { return c_.size(); }
  std::uint64_t coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
  std::uint64_t lead() const noexcept { return c_.empty() ? 0 : c_.back(); }
  std::span<const std::uint64_t> coeffs() const noexcept { return c_; }

  std::uint64_t eval(std::uint64_t x) const noexcept;
  DensePoly monic() const;
  DensePoly scaled(std::uint64_t s) const;
  /// Multiply by x^k.
  DensePoly shifted(std::size_t k) const;

  DensePoly& operator+=(const DensePoly& o);
  DensePoly& operator-=(const DensePoly& o);
  DensePoly operator-() const;

  friend DensePoly operator+(DensePoly a, const DensePoly& b) { return a += b; }
  friend DensePoly operator-(DensePoly a, const DensePoly& b) { return a -= b; }
  friend DensePoly operator*(const DensePoly& a, const DensePoly& b);
  friend bool operator==(const DensePoly& a, const DensePoly& b) { return a.f_ == b.f_ && a.c_ == b.c_; }

 private:
  void trim() noexcept {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  void require_same(const DensePoly& o) const;

  PrimeField f_;
  std::vector<std::uint64_t> c_;
};

DensePoly poly_mul(const DensePoly& a, const DensePoly& b);
/// Euclidean division a = q*b + r with deg r < deg b.  Throws on b == 0.
std::pair<DensePoly, DensePoly> poly_divrem(const DensePoly& a, const DensePoly& b);
/// Quotient of a division known to be exact; throws ArithmeticError otherwise.
DensePoly poly_exact_div(const DensePoly& a, const DensePoly& b);
/// Monic gcd.  Throws on gcd(0, 0).
DensePoly poly_gcd(const DensePoly& a, const DensePoly& b);
DensePoly poly_lcm(const DensePoly& a, const DensePoly& b);
DensePoly poly_derivative(const DensePoly& a);

/// Ascending coefficient list "[c0,c1,...]".
std::string to_list_string(const DensePoly& a);
/// Human-readable form in x, using symmetric residues.
std::string to_string(const DensePoly& a, const std::string& var = "x");
std::ostream& operator<<(std::ostream& os, const DensePoly& a);

}  // namespace orelclm
