#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>

namespace orelclm {

/// Error raised for violated preconditions of exact-arithmetic operations.
class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Deterministic primality test, valid for all 32-bit inputs.
bool is_prime(std::uint64_t n);

/// Arithmetic context for the prime field F_p.
///
/// Residues are plain integers in [0, p).  The prime is restricted to
/// 3 <= p < 2^32 so that the product of two residues fits in 64 bits.
class PrimeField {
 public:
  static constexpr std::uint64_t kDefaultPrime = 2147483647;

  explicit PrimeField(std::uint64_t p = kDefaultPrime);

  std::uint64_t prime() const noexcept { return p_; }

  std::uint64_t reduce(std::int64_t v) const noexcept {
    auto m = static_cast<std::int64_t>(p_);
    std::int64_t r = v % m;
    return static_cast<std::uint64_t>(r < 0 ? r + m : r);
  }
  std::uint64_t reduce_unsigned(std::uint64_t v) const noexcept { return reduce_u64(v); }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept {
    std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint64_t neg(std::uint64_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept { return reduce_u64(a * b); }
  /// Barrett reduction of any 64-bit value.
  std::uint64_t reduce_u64(std::uint64_t a) const noexcept {
    auto q = static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * barrett_) >> 64);
    std::uint64_t r = a - q * p_;
    return r >= p_ ? r - p_ : r;
  }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const noexcept;
  /// Throws ArithmeticError on zero.
  std::uint64_t inv(std::uint64_t a) const;

  /// Symmetric representative in (-p/2, p/2], for display.
  std::int64_t signed_value(std::uint64_t a) const noexcept {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - static_cast<std::int64_t>(p_)
                      : static_cast<std::int64_t>(a);
  }

  friend bool operator==(const PrimeField& a, const PrimeField& b) noexcept { return a.p_ == b.p_; }

 private:
  std::uint64_t p_;
  std::uint64_t barrett_;  // floor(2^64 / p)
};

/// A single residue bundled with its field, for value-style scalar code.
class Zp {
 public:
  Zp(const PrimeField& f, std::int64_t v) : f_(f), v_(f.reduce(v)) {}

  const PrimeField& field() const noexcept { return f_; }
  std::uint64_t value() const noexcept { return v_; }
  bool is_zero() const noexcept { return v_ == 0; }

  Zp operator+(const Zp& o) const { return raw(f_, f_.add(v_, check(o).v_)); }
  Zp operator-(const Zp& o) const { return raw(f_, f_.sub(v_, check(o).v_)); }
  Zp operator*(const Zp& o) const { return raw(f_, f_.mul(v_, check(o).v_)); }
  Zp operator/(const Zp& o) const { return raw(f_, f_.mul(v_, f_.inv(check(o).v_))); }
  Zp operator-() const { return raw(f_, f_.neg(v_)); }
  Zp inv() const { return raw(f_, f_.inv(v_)); }

  friend bool operator==(const Zp&, const Zp&) = default;

 private:
  static Zp raw(const PrimeField& f, std::uint64_t v) {
    Zp z(f, 0);
    z.v_ = v;
    return z;
  }
  const Zp& check(const Zp& o) const {
    if (!(o.f_ == f_)) throw ArithmeticError("mixed prime fields");
    return o;
  }

  PrimeField f_;
  std::uint64_t v_;
};

std::ostream& operator<<(std::ostream& os, const Zp& z);

}  // namespace orelclm
