#include "orelclm/ore.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace orelclm {

OreOperator make_operator(const PrimeField& f, const std::vector<std::vector<std::int64_t>>& coeffs) {
  std::vector<DensePoly> c;
  c.reserve(coeffs.size());
  for (const auto& row : coeffs) c.push_back(DensePoly::from_ints(f, row));
  return OreOperator(f, std::move(c));
}

int degree(const OreOperator& L) {
  int d = -1;
  for (const auto& c : L.coeffs()) d = std::max(d, c.degree());
  return d;
}

long arithmetic_size(const OreOperator& L) {
  if (L.is_zero()) return 0;
  return static_cast<long>(L.order() + 1) * static_cast<long>(degree(L) + 1);
}

OreRatOperator to_rational(const OreOperator& L) {
  std::vector<RatFun> c(L.coeffs().begin(), L.coeffs().end());
  return OreRatOperator(L.field(), std::move(c));
}

OreOperator to_polynomial(const OreRatOperator& L) {
  std::vector<DensePoly> c;
  c.reserve(L.coeffs().size());
  for (const auto& a : L.coeffs()) {
    if (!a.is_polynomial()) throw ArithmeticError("operator has non-polynomial coefficients");
    c.push_back(a.num());
  }
  return OreOperator(L.field(), std::move(c));
}

DensePoly ore_apply(const OreOperator& L, const DensePoly& f) {
  DensePoly acc(L.field());
  DensePoly deriv = f;
  for (std::size_t i = 0; i < L.coeffs().size(); ++i) {
    if (i > 0) deriv = poly_derivative(deriv);
    if (deriv.is_zero()) break;
    acc += L.coeff(i) * deriv;
  }
  return acc;
}

std::pair<OreRatOperator, OreRatOperator> ore_divrem_right(const OreRatOperator& A,
                                                           const OreRatOperator& B) {
  if (B.is_zero()) throw ArithmeticError("zero divisor");
  const PrimeField& f = A.field();
  const int ob = B.order();
  OreRatOperator R = A;
  std::vector<RatFun> q(std::max(0, A.order() - ob + 1), RatFun(f));
  const RatFun inv_lead = B.lead().inv();
  // D^m * B for m = 0, 1, ... computed lazily from below.
  std::vector<OreRatOperator> shifts{B};
  while (!R.is_zero() && R.order() >= ob) {
    const auto m = static_cast<std::size_t>(R.order() - ob);
    while (shifts.size() <= m) shifts.push_back(shifts.back().d_times());
    RatFun t = R.lead() * inv_lead;
    q[m] = t;
    const OreRatOperator& S = shifts[m];
    std::vector<RatFun> c = R.coeffs();
    c.pop_back();  // the leading term cancels by construction
    for (std::size_t j = 0; j + 1 < S.coeffs().size(); ++j) {
      if (!S.coeff(j).is_zero()) c[j] -= t * S.coeff(j);
    }
    R = OreRatOperator(f, std::move(c));
  }
  return {OreRatOperator(f, std::move(q)), R};
}

OreRatOperator ore_rem_right(const OreRatOperator& A, const OreRatOperator& B) {
  return ore_divrem_right(A, B).second;
}

bool right_divides(const OreOperator& B, const OreOperator& A) {
  return ore_rem_right(to_rational(A), to_rational(B)).is_zero();
}

OreRatOperator exact_left_quotient(const OreRatOperator& A, const OreRatOperator& B) {
  auto [q, r] = ore_divrem_right(A, B);
  if (!r.is_zero()) throw ArithmeticError("inexact operator division");
  return q;
}

DensePoly content(const OreOperator& L) {
  if (L.is_zero()) throw ArithmeticError("content of the zero operator");
  DensePoly g(L.field());
  for (const auto& c : L.coeffs()) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c.monic() : poly_gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

OreOperator primitive_part(const OreOperator& L) {
  DensePoly g = content(L);
  std::vector<DensePoly> c;
  c.reserve(L.coeffs().size());
  for (const auto& a : L.coeffs()) c.push_back(g.is_one() ? a : poly_exact_div(a, g));
  const std::uint64_t s = L.field().inv(c.back().lead());
  for (auto& a : c) a = a.scaled(s);
  return OreOperator(L.field(), std::move(c));
}

OreOperator clear_denominators(const OreRatOperator& L) {
  if (L.is_zero()) throw ArithmeticError("clear_denominators of the zero operator");
  DensePoly l = DensePoly::constant(L.field(), 1);
  for (const auto& a : L.coeffs()) {
    if (!a.is_zero() && !a.is_polynomial()) l = poly_lcm(l, a.den());
  }
  std::vector<DensePoly> c;
  c.reserve(L.coeffs().size());
  for (const auto& a : L.coeffs()) {
    c.push_back(a.is_zero() ? DensePoly(L.field()) : a.num() * poly_exact_div(l, a.den()));
  }
  return primitive_part(OreOperator(L.field(), std::move(c)));
}

OreRatOperator make_monic(const OreRatOperator& L) {
  if (L.is_zero()) throw ArithmeticError("make_monic of the zero operator");
  return L.left_scaled(L.lead().inv());
}

OreOperator gcrd(const OreOperator& A, const OreOperator& B) {
  if (A.is_zero() && B.is_zero()) throw ArithmeticError("gcrd of two zero operators");
  if (A.is_zero()) return primitive_part(B);
  if (B.is_zero()) return primitive_part(A);
  OreRatOperator r0 = to_rational(A), r1 = to_rational(B);
  if (r0.order() < r1.order()) std::swap(r0, r1);
  while (!r1.is_zero()) {
    OreRatOperator r2 = ore_rem_right(r0, r1);
    r0 = std::move(r1);
    r1 = r2.is_zero() ? std::move(r2) : make_monic(r2);
    if (!r1.is_zero() && r1.order() == 0) return OreOperator::d_power(A.field(), 0);
  }
  return clear_denominators(r0);
}

namespace {

template <class Coeff>
std::string operator_string(const OrePoly<Coeff>& L) {
  if (L.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = L.coeffs().size(); i-- > 0;) {
    const Coeff& a = L.coeff(i);
    if (a.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    std::string s = to_string(a);
    const bool one = s == "1";
    const bool compound = s.find_first_of(" ") != std::string::npos;
    if (i == 0 || !one) os << (compound && i > 0 ? "(" + s + ")" : s);
    if (i > 0) {
      if (!one) os << '*';
      os << 'D';
      if (i > 1) os << '^' << i;
    }
  }
  return os.str();
}

}  // namespace

std::string to_string(const OreOperator& L) { return operator_string(L); }
std::string to_string(const OreRatOperator& L) { return operator_string(L); }
std::ostream& operator<<(std::ostream& os, const OreOperator& L) { return os << to_string(L); }
std::ostream& operator<<(std::ostream& os, const OreRatOperator& L) { return os << to_string(L); }

}  // namespace orelclm
