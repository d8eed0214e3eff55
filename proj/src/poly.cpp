#include "orelclm/poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace orelclm {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// out must hold a.size() + b.size() - 1 entries and be zeroed.
void schoolbook(std::span<const u64> a, std::span<const u64> b, std::span<u64> out,
                const PrimeField& f) {
  std::vector<u128> acc(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    const u128 ai = a[i];
    u128* row = acc.data() + i;
    for (std::size_t j = 0; j < b.size(); ++j) row[j] += ai * b[j];
  }
  const u128 p = f.prime();
  for (std::size_t k = 0; k < acc.size(); ++k) out[k] = static_cast<u64>(acc[k] % p);
}

// Balanced Karatsuba with equal-length halves; zero padding handles odd sizes.
std::vector<u64> karatsuba(std::span<const u64> a, std::span<const u64> b, const PrimeField& f) {
  const std::size_t n = std::max(a.size(), b.size());
  std::vector<u64> out(a.size() + b.size() - 1, 0);
  if (std::min(a.size(), b.size()) <= DensePoly::kKaratsubaThreshold) {
    schoolbook(a, b, out, f);
    return out;
  }
  const std::size_t h = n / 2;
  auto lo = [h](std::span<const u64> v) { return v.first(std::min(h, v.size())); };
  auto hi = [h](std::span<const u64> v) {
    return v.size() > h ? v.subspan(h) : std::span<const u64>{};
  };
  auto a0 = lo(a), a1 = hi(a), b0 = lo(b), b1 = hi(b);
  if (a1.empty() || b1.empty()) {
    // Unbalanced operands: split only the longer one.
    const bool split_a = !a1.empty();
    auto big0 = split_a ? a0 : b0;
    auto big1 = split_a ? a1 : b1;
    auto small = split_a ? b : a;
    auto p0 = karatsuba(big0, small, f);
    auto p1 = karatsuba(big1, small, f);
    for (std::size_t i = 0; i < p0.size(); ++i) out[i] = f.add(out[i], p0[i]);
    for (std::size_t i = 0; i < p1.size(); ++i) out[i + h] = f.add(out[i + h], p1[i]);
    return out;
  }
  auto z0 = karatsuba(a0, b0, f);
  auto z2 = karatsuba(a1, b1, f);
  auto sum = [&f](std::span<const u64> x, std::span<const u64> y) {
    std::vector<u64> s(std::max(x.size(), y.size()), 0);
    for (std::size_t i = 0; i < x.size(); ++i) s[i] = x[i];
    for (std::size_t i = 0; i < y.size(); ++i) s[i] = f.add(s[i], y[i]);
    return s;
  };
  auto sa = sum(a0, a1);
  auto sb = sum(b0, b1);
  auto z1 = karatsuba(sa, sb, f);
  for (std::size_t i = 0; i < z0.size(); ++i) z1[i] = f.sub(z1[i], z0[i]);
  for (std::size_t i = 0; i < z2.size(); ++i) z1[i] = f.sub(z1[i], z2[i]);
  for (std::size_t i = 0; i < z0.size(); ++i) out[i] = f.add(out[i], z0[i]);
  for (std::size_t i = 0; i < z1.size() && i + h < out.size(); ++i) out[i + h] = f.add(out[i + h], z1[i]);
  for (std::size_t i = 0; i < z2.size(); ++i) out[i + 2 * h] = f.add(out[i + 2 * h], z2[i]);
  return out;
}

}  // namespace

DensePoly::DensePoly(const PrimeField& f, std::vector<std::uint64_t> coeffs)
    : f_(f), c_(std::move(coeffs)) {
  trim();
}

DensePoly DensePoly::from_ints(const PrimeField& f, std::initializer_list<std::int64_t> coeffs) {
  return from_ints(f, std::span<const std::int64_t>(coeffs.begin(), coeffs.size()));
}

DensePoly DensePoly::from_ints(const PrimeField& f, std::span<const std::int64_t> coeffs) {
  std::vector<u64> c;
  c.reserve(coeffs.size());
  for (auto v : coeffs) c.push_back(f.reduce(v));
  return DensePoly(f, std::move(c));
}

DensePoly DensePoly::constant(const PrimeField& f, std::uint64_t c) {
  return DensePoly(f, {f.reduce_unsigned(c)});
}

DensePoly DensePoly::monomial(const PrimeField& f, std::uint64_t c, std::size_t k) {
  std::vector<u64> v(k + 1, 0);
  v[k] = f.reduce_unsigned(c);
  return DensePoly(f, std::move(v));
}

void DensePoly::require_same(const DensePoly& o) const {
  if (!(o.f_ == f_)) throw ArithmeticError("polynomials over different prime fields");
}

std::uint64_t DensePoly::eval(std::uint64_t x) const noexcept {
  u64 r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = f_.add(f_.mul(r, x), *it);
  return r;
}

DensePoly DensePoly::monic() const {
  if (is_zero()) return *this;
  return scaled(f_.inv(lead()));
}

DensePoly DensePoly::scaled(std::uint64_t s) const {
  s = f_.reduce_unsigned(s);
  if (s == 0) return DensePoly(f_);
  DensePoly r(*this);
  for (auto& c : r.c_) c = f_.mul(c, s);
  return r;
}

DensePoly DensePoly::shifted(std::size_t k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<u64> v(k, 0);
  v.insert(v.end(), c_.begin(), c_.end());
  return DensePoly(f_, std::move(v));
}

DensePoly& DensePoly::operator+=(const DensePoly& o) {
  require_same(o);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = f_.add(c_[i], o.c_[i]);
  trim();
  return *this;
}

DensePoly& DensePoly::operator-=(const DensePoly& o) {
  require_same(o);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = f_.sub(c_[i], o.c_[i]);
  trim();
  return *this;
}

DensePoly DensePoly::operator-() const {
  DensePoly r(*this);
  for (auto& c : r.c_) c = f_.neg(c);
  return r;
}

DensePoly operator*(const DensePoly& a, const DensePoly& b) {
  a.require_same(b);
  if (a.is_zero() || b.is_zero()) return DensePoly(a.f_);
  return DensePoly(a.f_, karatsuba(a.c_, b.c_, a.f_));
}

DensePoly poly_mul(const DensePoly& a, const DensePoly& b) { return a * b; }

std::pair<DensePoly, DensePoly> poly_divrem(const DensePoly& a, const DensePoly& b) {
  const PrimeField& f = a.field();
  if (b.is_zero()) throw ArithmeticError("zero divisor");
  if (!(a.field() == b.field())) throw ArithmeticError("polynomials over different prime fields");
  if (a.degree() < b.degree()) return {DensePoly(f), a};
  std::vector<u64> r(a.coeffs().begin(), a.coeffs().end());
  const auto bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  const u64 inv_lead = f.inv(bc.back());
  std::vector<u64> q(r.size() - db, 0);
  for (std::size_t k = q.size(); k-- > 0;) {
    const u64 t = f.mul(r[k + db], inv_lead);
    q[k] = t;
    if (t == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) r[k + j] = f.sub(r[k + j], f.mul(t, bc[j]));
  }
  r.resize(db);
  return {DensePoly(f, std::move(q)), DensePoly(f, std::move(r))};
}

DensePoly poly_exact_div(const DensePoly& a, const DensePoly& b) {
  auto [q, r] = poly_divrem(a, b);
  if (!r.is_zero()) throw ArithmeticError("inexact polynomial division");
  return q;
}

DensePoly poly_gcd(const DensePoly& a, const DensePoly& b) {
  if (a.is_zero() && b.is_zero()) throw ArithmeticError("gcd(0, 0) is undefined");
  DensePoly u = a, v = b;
  while (!v.is_zero()) {
    if (v.degree() == 0) return DensePoly::constant(a.field(), 1);
    u = poly_divrem(u, v).second;
    std::swap(u, v);
  }
  return u.monic();
}

DensePoly poly_lcm(const DensePoly& a, const DensePoly& b) {
  if (a.is_zero() || b.is_zero()) return DensePoly(a.field());
  return (poly_exact_div(a, poly_gcd(a, b)) * b).monic();
}

DensePoly poly_derivative(const DensePoly& a) {
  const PrimeField& f = a.field();
  if (a.size() <= 1) return DensePoly(f);
  std::vector<u64> d(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) d[i - 1] = f.mul(a.coeff(i), f.reduce_unsigned(i));
  return DensePoly(f, std::move(d));
}

std::string to_list_string(const DensePoly& a) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) os << ',';
    os << a.coeff(i);
  }
  os << ']';
  return os.str();
}

std::string to_string(const DensePoly& a, const std::string& var) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = a.size(); i-- > 0;) {
    std::int64_t c = a.field().signed_value(a.coeff(i));
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    std::int64_t m = c < 0 ? -c : c;
    if (m != 1 || i == 0) os << m;
    if (i > 0) {
      if (m != 1) os << '*';
      os << var;
      if (i > 1) os << '^' << i;
    }
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const DensePoly& a) { return os << to_string(a); }

}  // namespace orelclm
