#include "doctest.h"
#include "helpers.hpp"
#include "orelclm/ratfun.hpp"

using namespace orelclm;
using namespace testing_support;

TEST_SUITE("arith") {
  TEST_CASE("prime field context") {
    CHECK(is_prime(2147483647));
    CHECK_FALSE(is_prime(2147483649ull));
    CHECK_FALSE(is_prime(1));
    CHECK_THROWS_AS(PrimeField(9), ArithmeticError);
    CHECK_THROWS_AS(PrimeField(2), ArithmeticError);
    CHECK_THROWS_AS(PrimeField(4294967311ull), ArithmeticError);  // prime, but >= 2^32
    PrimeField f(7);
    CHECK(f.reduce(-1) == 6);
    CHECK(f.mul(3, 5) == 1);
    CHECK(f.inv(3) == 5);
    CHECK_THROWS_AS(f.inv(0), ArithmeticError);
    CHECK(f.signed_value(6) == -1);
    Zp a(f, 3), b(f, -2);
    CHECK((a + b).value() == 1);
    CHECK((a * b).value() == 1);
    CHECK((a / a).value() == 1);
  }

  TEST_CASE("field axioms on random triples") {
    std::mt19937_64 rng(1);
    for (std::uint64_t p : {7ull, 65521ull, 2147483647ull, 4294967291ull}) {
      PrimeField f(p);
      std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
      for (int t = 0; t < 1000; ++t) {
        auto a = dist(rng), b = dist(rng), c = dist(rng);
        CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
        CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
        CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        CHECK(f.mul(a, b) == static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p));
        if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
      }
    }
  }

  TEST_CASE("poly_mul examples") {
    CHECK(P({1, 1}) * P({-1, 1}) == P({-1, 0, 1}));
    CHECK((P({}) * P({2, 0, 0, 1})).is_zero());
    auto sq = P({0, 1}) * P({0, 1});
    CHECK(sq == P({0, 0, 1}));
    CHECK(sq.coeffs().size() == 3);
    CHECK(sq.degree() == 2);
    CHECK(P({}).degree() == DensePoly::kZeroDegree);
    CHECK(P({0, 0, 0}).is_zero());
  }

  TEST_CASE("karatsuba agrees with schoolbook") {
    std::mt19937_64 rng(2);
    for (int t = 0; t < 40; ++t) {
      int da = std::uniform_int_distribution<int>(0, 200)(rng);
      int db = std::uniform_int_distribution<int>(0, 200)(rng);
      auto a = random_poly(rng, kBig, da), b = random_poly(rng, kBig, db);
      std::vector<std::uint64_t> ref(a.size() + b.size(), 0);
      for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
          ref[i + j] = kBig.add(ref[i + j], kBig.mul(a.coeff(i), b.coeff(j)));
      CHECK(a * b == DensePoly(kBig, ref));
      if (!a.is_zero() && !b.is_zero()) CHECK((a * b).degree() == a.degree() + b.degree());
    }
  }

  TEST_CASE("poly_divrem examples and errors") {
    auto [q1, r1] = poly_divrem(P({-1, 0, 1}), P({-1, 1}));
    CHECK(q1 == P({1, 1}));
    CHECK(r1.is_zero());
    auto [q2, r2] = poly_divrem(P({0, 1}), P({0, 0, 1}));
    CHECK(q2.is_zero());
    CHECK(r2 == P({0, 1}));
    auto [q3, r3] = poly_divrem(P({1, 0, 1}), P({0, 1}));
    CHECK(q3 == P({0, 1}));
    CHECK(r3 == P({1}));
    CHECK_THROWS_WITH_AS(poly_divrem(P({1}), P({})), "zero divisor", ArithmeticError);
    CHECK_THROWS_AS(poly_exact_div(P({1, 0, 1}), P({0, 1})), ArithmeticError);
  }

  TEST_CASE("poly_divrem round trip") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 1000; ++t) {
      auto a = random_poly(rng, kF7, static_cast<int>(rng() % 9));
      auto b = random_nonzero_poly(rng, kF7, static_cast<int>(rng() % 6));
      auto [q, r] = poly_divrem(a, b);
      CHECK(q * b + r == a);
      CHECK(r.degree() < b.degree());
    }
  }

  TEST_CASE("poly_gcd") {
    CHECK(poly_gcd(P({-1, 0, 1}), P({-1, 1})) == P({-1, 1}));
    CHECK(poly_gcd(P({0, 1}), P({1})) == P({1}));
    CHECK(poly_gcd(P({0, 2}), P({0, 0, 4})) == P({0, 1}));
    CHECK(poly_gcd(P({}), P({0, 3})) == P({0, 1}));
    CHECK_THROWS_AS(poly_gcd(P({}), P({})), ArithmeticError);
    std::mt19937_64 rng(4);
    for (int t = 0; t < 200; ++t) {
      auto g = random_nonzero_poly(rng, kF7, 3);
      auto a = random_nonzero_poly(rng, kF7, 4) * g, b = random_nonzero_poly(rng, kF7, 4) * g;
      auto h = poly_gcd(a, b);
      CHECK(h.lead() == 1);
      CHECK(poly_divrem(a, h).second.is_zero());
      CHECK(poly_divrem(b, h).second.is_zero());
      CHECK(poly_divrem(h, g.monic()).second.is_zero());
    }
  }

  TEST_CASE("poly_derivative") {
    CHECK(poly_derivative(P({0, 0, 1})) == P({0, 2}));
    CHECK(poly_derivative(P({5})).is_zero());
    CHECK(poly_derivative(DensePoly::monomial(kF7, 1, 7)).is_zero());
    CHECK(poly_derivative(DensePoly::monomial(kF7, 1, 8)) == DensePoly::monomial(kF7, 1, 7));
    std::mt19937_64 rng(5);
    for (int t = 0; t < 500; ++t) {
      auto a = random_poly(rng, kF7, 6), b = random_poly(rng, kF7, 6);
      CHECK(poly_derivative(a * b) == poly_derivative(a) * b + a * poly_derivative(b));
    }
  }

  TEST_CASE("interpolation recovers a polynomial") {
    std::mt19937_64 rng(6);
    auto a = random_poly(rng, kBig, 20);
    std::vector<std::uint64_t> pts, vals;
    for (std::uint64_t k = 0; k < 21; ++k) {
      pts.push_back(k * 7 + 3);
      vals.push_back(a.eval(k * 7 + 3));
    }
    CHECK(interpolate(kBig, pts, vals) == a);
  }

  TEST_CASE("ratfun arithmetic") {
    RatFun inv_x(P({1}), P({0, 1}));
    CHECK(inv_x + inv_x == RatFun(P({2}), P({0, 1})));
    CHECK(RatFun(P({0, 1})) * inv_x == RatFun(P({1})));
    CHECK(RatFun(P({0, 1}), P({1, 1})).inv() == RatFun(P({1, 1}), P({0, 1})));
    CHECK_THROWS_AS(RatFun(kBig).inv(), ArithmeticError);
    CHECK_THROWS_AS(RatFun(P({1}), P({})), ArithmeticError);
    RatFun zero(P({}), P({3, 1}));
    CHECK(zero.den() == P({1}));
    RatFun r(P({0, 2}), P({0, 0, 4}));  // 2x/4x^2 = (1/2)/x
    CHECK(r.den() == P({0, 1}));
    CHECK(r.num() == P({1}).scaled(kBig.inv(2)));
  }

  TEST_CASE("ratfun field axioms") {
    std::mt19937_64 rng(7);
    auto rnd = [&] { return RatFun(random_poly(rng, kF7, 2), random_nonzero_poly(rng, kF7, 2)); };
    for (int t = 0; t < 300; ++t) {
      auto a = rnd(), b = rnd(), c = rnd();
      CHECK((a + b) + c == a + (b + c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a.den().lead() == 1);
      if (!a.is_zero()) CHECK(a * a.inv() == RatFun(P({1}, kF7)));
      auto d = ratfun_derivative(a * b);
      CHECK(d == ratfun_derivative(a) * b + a * ratfun_derivative(b));
    }
  }
}
