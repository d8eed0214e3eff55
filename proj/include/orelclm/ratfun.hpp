#pragma once

#include <iosfwd>
#include <string>

#include "orelclm/poly.hpp"

namespace orelclm {

/// Reduced fraction num/den in F_p(x): gcd(num, den) = 1 and den is monic.
/// Zero is 0/1.
class RatFun {
 public:
  explicit RatFun(const PrimeField& f = PrimeField());
  RatFun(const DensePoly& num);  // NOLINT: polynomials embed implicitly
  /// Reduces to canonical form; throws ArithmeticError if den == 0.
  RatFun(const DensePoly& num, const DensePoly& den);

  const PrimeField& field() const noexcept { return num_.field(); }
  const DensePoly& num() const noexcept { return num_; }
  const DensePoly& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const noexcept { return den_.degree() == 0; }

  RatFun inv() const;

  RatFun& operator+=(const RatFun& o);
  RatFun& operator-=(const RatFun& o);
  RatFun& operator*=(const RatFun& o);
  RatFun& operator/=(const RatFun& o) { return *this *= o.inv(); }
  RatFun operator-() const;

  friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
  friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
  friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
  friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }
  friend bool operator==(const RatFun& a, const RatFun& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  struct Reduced {};
  RatFun(DensePoly num, DensePoly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}

  DensePoly num_;
  DensePoly den_;
};

RatFun ratfun_derivative(const RatFun& a);

std::string to_string(const RatFun& a);
std::ostream& operator<<(std::ostream& os, const RatFun& a);

}  // namespace orelclm
