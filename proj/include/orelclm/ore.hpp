#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "orelclm/poly.hpp"
#include "orelclm/ratfun.hpp"

namespace orelclm {

inline DensePoly coeff_derivative(const DensePoly& a) { return poly_derivative(a); }
inline RatFun coeff_derivative(const RatFun& a) { return ratfun_derivative(a); }

/// Differential operator sum_i a_i * D^i with D = d/dx, coefficients in
/// ascending powers of D.  The last stored coefficient is nonzero; the zero
/// operator has no coefficients.
///
/// Coeff is DensePoly (F_p[x]<D>) or RatFun (F_p(x)<D>).
template <class Coeff>
class OrePoly {
 public:
  explicit OrePoly(const PrimeField& f = PrimeField()) : f_(f) {}
  OrePoly(const PrimeField& f, std::vector<Coeff> coeffs) : f_(f), c_(std::move(coeffs)) { trim(); }

  /// D^k.
  static OrePoly d_power(const PrimeField& f, std::size_t k) {
    std::vector<Coeff> c(k + 1, Coeff(f));
    c[k] = Coeff(DensePoly::constant(f, 1));
    return OrePoly(f, std::move(c));
  }
  static OrePoly scalar(const Coeff& a) { return OrePoly(a.field(), {a}); }

  const PrimeField& field() const noexcept { return f_; }
  bool is_zero() const noexcept { return c_.empty(); }
  /// Order in D; -1 for the zero operator.
  int order() const noexcept { return static_cast<int>(c_.size()) - 1; }
  const Coeff& coeff(std::size_t i) const { return c_.at(i); }
  Coeff coeff_or_zero(std::size_t i) const { return i < c_.size() ? c_[i] : Coeff(f_); }
  const Coeff& lead() const { return c_.back(); }
  const std::vector<Coeff>& coeffs() const noexcept { return c_; }

  OrePoly& operator+=(const OrePoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Coeff(f_));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  OrePoly& operator-=(const OrePoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Coeff(f_));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  OrePoly operator-() const {
    OrePoly r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
  }
  friend OrePoly operator+(OrePoly a, const OrePoly& b) { return a += b; }
  friend OrePoly operator-(OrePoly a, const OrePoly& b) { return a -= b; }
  friend bool operator==(const OrePoly& a, const OrePoly& b) { return a.f_ == b.f_ && a.c_ == b.c_; }

  /// Left multiplication by a coefficient: a * L.
  OrePoly left_scaled(const Coeff& a) const {
    if (a.is_zero()) return OrePoly(f_);
    OrePoly r(*this);
    for (auto& c : r.c_) c = a * c;
    r.trim();
    return r;
  }

  /// D * L, using D*a = a*D + a'.
  OrePoly d_times() const {
    if (is_zero()) return *this;
    std::vector<Coeff> r(c_.size() + 1, Coeff(f_));
    for (std::size_t i = 0; i < c_.size(); ++i) {
      r[i] += coeff_derivative(c_[i]);
      r[i + 1] += c_[i];
    }
    return OrePoly(f_, std::move(r));
  }

  friend OrePoly operator*(const OrePoly& a, const OrePoly& b) {
    OrePoly result(a.f_);
    if (a.is_zero() || b.is_zero()) return result;
    std::vector<Coeff> acc(a.c_.size() + b.c_.size() - 1, Coeff(a.f_));
    OrePoly t = b;  // D^i * b
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (i > 0) t = t.d_times();
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < t.c_.size(); ++j) {
        if (!t.c_[j].is_zero()) acc[j] += a.c_[i] * t.c_[j];
      }
    }
    return OrePoly(a.f_, std::move(acc));
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  PrimeField f_;
  std::vector<Coeff> c_;
};

using OreOperator = OrePoly<DensePoly>;
using OreRatOperator = OrePoly<RatFun>;

template <class Coeff>
OrePoly<Coeff> ore_mul(const OrePoly<Coeff>& a, const OrePoly<Coeff>& b) {
  return a * b;
}

/// Operator from nested signed integer lists (ascending D, then ascending x).
OreOperator make_operator(const PrimeField& f, const std::vector<std::vector<std::int64_t>>& coeffs);

/// Max x-degree of the coefficients; -1 for the zero operator.
int degree(const OreOperator& L);
/// (order + 1) * (degree + 1), the number of coefficient slots.
long arithmetic_size(const OreOperator& L);

OreRatOperator to_rational(const OreOperator& L);
/// Throws if some coefficient has a nontrivial denominator.
OreOperator to_polynomial(const OreRatOperator& L);

/// sum_i a_i * f^(i).
DensePoly ore_apply(const OreOperator& L, const DensePoly& f);

/// Right Euclidean division A = Q*B + R with ord R < ord B.  Throws on B == 0.
std::pair<OreRatOperator, OreRatOperator> ore_divrem_right(const OreRatOperator& A,
                                                           const OreRatOperator& B);
/// Right remainder of A by B.
OreRatOperator ore_rem_right(const OreRatOperator& A, const OreRatOperator& B);
bool right_divides(const OreOperator& B, const OreOperator& A);
/// Q with A = Q*B; throws ArithmeticError when the division is not exact.
OreRatOperator exact_left_quotient(const OreRatOperator& A, const OreRatOperator& B);

/// Monic gcd of all coefficients.  Throws on the zero operator.
DensePoly content(const OreOperator& L);
/// L / content(L), scaled so that the leading coefficient is monic.
OreOperator primitive_part(const OreOperator& L);
/// Multiply by the lcm of the denominators and take the primitive part.
OreOperator clear_denominators(const OreRatOperator& L);
/// Scalar multiple of L with monic leading coefficient (no content removal).
OreRatOperator make_monic(const OreRatOperator& L);

/// Greatest common right divisor, normalized by primitive_part.
OreOperator gcrd(const OreOperator& A, const OreOperator& B);

std::string to_string(const OreOperator& L);
std::string to_string(const OreRatOperator& L);
std::ostream& operator<<(std::ostream& os, const OreOperator& L);
std::ostream& operator<<(std::ostream& os, const OreRatOperator& L);

}  // namespace orelclm
