#include "orelclm/field.hpp"

#include <ostream>
#include <string>

namespace orelclm {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases are deterministic for every n < 2^64.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p), barrett_(0) {
  if (p < 3 || p >= (1ull << 32)) {
    throw ArithmeticError("prime must satisfy 3 <= p < 2^32, got " + std::to_string(p));
  }
  if (!is_prime(p)) throw ArithmeticError("modulus " + std::to_string(p) + " is not prime");
  barrett_ = static_cast<std::uint64_t>((static_cast<unsigned __int128>(1) << 64) / p);
}

std::uint64_t PrimeField::pow(std::uint64_t a, std::uint64_t e) const noexcept {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
  if (a % p_ == 0) throw ArithmeticError("inverse of zero");
  // Extended Euclid on signed values; p < 2^32 keeps everything in range.
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p_), new_r = static_cast<std::int64_t>(a % p_);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  return reduce(t);
}

std::ostream& operator<<(std::ostream& os, const Zp& z) { return os << z.value(); }

}  // namespace orelclm
