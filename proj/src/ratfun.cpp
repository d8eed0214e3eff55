#include "orelclm/ratfun.hpp"

#include <ostream>

namespace orelclm {

RatFun::RatFun(const PrimeField& f) : num_(f), den_(DensePoly::constant(f, 1)) {}

RatFun::RatFun(const DensePoly& num) : num_(num), den_(DensePoly::constant(num.field(), 1)) {}

RatFun::RatFun(const DensePoly& num, const DensePoly& den) : num_(num.field()), den_(den) {
  if (den.is_zero()) throw ArithmeticError("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = DensePoly::constant(num.field(), 1);
    return;
  }
  DensePoly g = poly_gcd(num, den);
  DensePoly n = g.is_one() ? num : poly_exact_div(num, g);
  DensePoly d = g.is_one() ? den : poly_exact_div(den, g);
  const std::uint64_t s = d.field().inv(d.lead());
  num_ = n.scaled(s);
  den_ = d.scaled(s);
}

RatFun RatFun::inv() const {
  if (is_zero()) throw ArithmeticError("inverse of zero rational function");
  const std::uint64_t s = field().inv(num_.lead());
  return RatFun(den_.scaled(s), num_.scaled(s), Reduced{});
}

RatFun& RatFun::operator+=(const RatFun& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    *this = RatFun(num_ + o.num_, den_);
    return *this;
  }
  // a/b + c/d with g = gcd(b, d): (a*(d/g) + c*(b/g)) / (b*d/g).
  DensePoly g = poly_gcd(den_, o.den_);
  DensePoly bg = poly_exact_div(den_, g);
  DensePoly dg = poly_exact_div(o.den_, g);
  *this = RatFun(num_ * dg + o.num_ * bg, bg * o.den_);
  return *this;
}

RatFun& RatFun::operator-=(const RatFun& o) { return *this += -o; }

RatFun& RatFun::operator*=(const RatFun& o) {
  if (is_zero() || o.is_zero()) return *this = RatFun(field());
  if (is_polynomial() && o.is_polynomial()) {
    num_ = num_ * o.num_;
    return *this;
  }
  // Cross-cancel before multiplying to keep the final gcd small.
  DensePoly g1 = poly_gcd(num_, o.den_);
  DensePoly g2 = poly_gcd(o.num_, den_);
  DensePoly n = poly_exact_div(num_, g1) * poly_exact_div(o.num_, g2);
  DensePoly d = poly_exact_div(den_, g2) * poly_exact_div(o.den_, g1);
  const std::uint64_t s = field().inv(d.lead());
  num_ = n.scaled(s);
  den_ = d.scaled(s);
  return *this;
}

RatFun RatFun::operator-() const { return RatFun(-num_, den_, Reduced{}); }

RatFun ratfun_derivative(const RatFun& a) {
  if (a.is_polynomial()) return RatFun(poly_derivative(a.num()));
  // (n/d)' = (n'd - nd') / d^2
  return RatFun(poly_derivative(a.num()) * a.den() - a.num() * poly_derivative(a.den()),
                a.den() * a.den());
}

std::string to_string(const RatFun& a) {
  if (a.is_polynomial()) return to_string(a.num());
  return "(" + to_string(a.num()) + ")/(" + to_string(a.den()) + ")";
}

std::ostream& operator<<(std::ostream& os, const RatFun& a) { return os << to_string(a); }

}  // namespace orelclm
