#include "doctest.h"
#include "helpers.hpp"
#include "orelclm/algorithms.hpp"
#include "orelclm/lclm.hpp"

using namespace orelclm;
using namespace testing_support;

namespace {

const OreOperator D = Op({{0}, {1}});
const OreOperator Dm1 = Op({{-1}, {1}});
const OreOperator xDm1 = Op({{-1}, {0, 1}});
const OreOperator kMixedLclm = Op({{1}, {0, -1}, {-1, 1}});  // (x-1)D^2 - xD + 1

std::vector<DensePoly> row(const PolyMatrix& M, std::size_t i) {
  std::vector<DensePoly> r;
  for (std::size_t j = 0; j < M.cols(); ++j) r.push_back(M.at(i, j));
  return r;
}

bool divisible_by_all(const OreOperator& L, const std::vector<OreOperator>& ops) {
  for (const auto& op : ops)
    if (!right_divides(op, L)) return false;
  return true;
}

std::vector<OreOperator> random_tuple(std::mt19937_64& rng, const PrimeField& f, std::size_t k, int max_d,
                                      int max_r) {
  std::vector<OreOperator> ops;
  for (std::size_t i = 0; i < k; ++i)
    ops.push_back(random_operator(rng, f, static_cast<int>(rng() % (max_d + 1)), static_cast<int>(rng() % (max_r + 1))));
  return ops;
}

const std::vector<std::string> kAllTags{"new",       "heffter",      "euclid",     "ext-euclid", "li",
                                        "vanhoeij",  "dac:new",      "iter:heffter", "dac:li",   "iter:euclid",
                                        "heuristic", "dac:vanhoeij", "iter:ext-euclid"};

}  // namespace

TEST_SUITE("lclm") {
  TEST_CASE("Sylvester blocks") {
    auto S = build_S(D, 2);
    REQUIRE(S.rows() == 2);
    REQUIRE(S.cols() == 3);
    CHECK(row(S, 0) == std::vector<DensePoly>{P({1}), P({}), P({})});
    CHECK(row(S, 1) == std::vector<DensePoly>{P({}), P({1}), P({})});

    auto Sx = build_S(Op({{0}, {0, 1}}), 2);
    CHECK(row(Sx, 0) == std::vector<DensePoly>{P({0, 1}), P({1}), P({})});
    CHECK(row(Sx, 1) == std::vector<DensePoly>{P({}), P({0, 1}), P({})});

    auto I = build_S(Op({{1}}), 1);
    CHECK(row(I, 0) == std::vector<DensePoly>{P({1}), P({})});
    CHECK(row(I, 1) == std::vector<DensePoly>{P({}), P({1})});

    CHECK_THROWS_AS(build_S(Op({{0}, {0}, {1}}), 1), ArithmeticError);
    CHECK_THROWS_AS(build_S(OreOperator(), 2), ArithmeticError);
  }

  TEST_CASE("Sylvester multiplication law phi(QP) = phi(Q) S(P)") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 60; ++t) {
      auto Pop = random_operator(rng, kBig, 2, static_cast<int>(rng() % 3));
      const int n = Pop.order() + static_cast<int>(rng() % 3);
      auto Q = random_operator(rng, kBig, 2, n - Pop.order());
      CHECK(phi(Q * Pop, n) == left_multiply(phi(Q, n - Pop.order()), build_S(Pop, n)));
      CHECK(phi_inverse(kBig, phi(Q, n)) == Q);
    }
  }

  TEST_CASE("block matrix M_n") {
    const OreOperator pair[] = {D, Dm1};
    auto M = build_M(pair, 2);
    REQUIRE(M.rows() == 7);
    REQUIRE(M.cols() == 6);
    auto minus = P({-1}), one = P({1}), z = P({});
    CHECK(row(M, 0) == std::vector<DensePoly>{one, z, z, z, z, z});
    CHECK(row(M, 1) == std::vector<DensePoly>{z, one, z, z, z, z});
    CHECK(row(M, 2) == std::vector<DensePoly>{z, z, z, one, minus, z});
    CHECK(row(M, 3) == std::vector<DensePoly>{z, z, z, z, one, minus});
    for (std::size_t j = 0; j < 3; ++j) {
      CHECK(M.at(4 + j, j) == minus);
      CHECK(M.at(4 + j, 3 + j) == minus);
    }
    CHECK(poly_rank(M) == 6);
    CHECK(poly_left_kernel(M).dimension() == 1);

    const OreOperator single[] = {D};
    auto M1 = build_M(single, 1);
    CHECK(M1.rows() == 3);
    CHECK(M1.cols() == 2);

    std::mt19937_64 rng(32);
    for (int t = 0; t < 30; ++t) {
      auto ops = random_tuple(rng, kF7, 1 + rng() % 4, 2, 3);
      int s = 0, rmax = 0;
      for (const auto& L : ops) {
        s += L.order();
        rmax = std::max(rmax, L.order());
      }
      const int n = rmax + static_cast<int>(rng() % 3);
      auto Mn = build_M(ops, n);
      CHECK(Mn.rows() == (ops.size() + 1) * static_cast<std::size_t>(n + 1) - static_cast<std::size_t>(s));
      CHECK(Mn.cols() == ops.size() * static_cast<std::size_t>(n + 1));
    }
    const OreOperator bad[] = {Op({{0}, {0}, {1}})};
    CHECK_THROWS_AS(build_M(bad, 1), ArithmeticError);
  }

  TEST_CASE("order_of_lclm") {
    const OreOperator a[] = {D, Dm1};
    CHECK(order_of_lclm(a) == 2);
    const OreOperator b[] = {Op({{0}, {0}, {1}}), Dm1};
    CHECK(order_of_lclm(b) == 3);
    std::mt19937_64 rng(33);
    auto L = random_operator(rng, kBig, 2, 3);
    const OreOperator c[] = {L, L};
    CHECK(order_of_lclm(c) == 3);
    CHECK_THROWS_AS(order_of_lclm(std::span<const OreOperator>()), ArithmeticError);
    const OreOperator z[] = {D, OreOperator()};
    CHECK_THROWS_AS(order_of_lclm(z), ArithmeticError);
  }

  TEST_CASE("lclm_new examples") {
    const OreOperator a[] = {D, Dm1};
    auto r = lclm_new(a);
    CHECK(r.lclm == Op({{0}, {-1}, {1}}));
    CHECK(r.order == 2);
    REQUIRE(r.rank.has_value());
    CHECK(*r.rank == 6);
    REQUIRE(r.cofactors.size() == 2);
    // Cofactors refer to the kernel vector's scaling; compare after normalizing.
    CHECK(clear_denominators(r.cofactors[0]) == Dm1);
    CHECK(clear_denominators(r.cofactors[1]) == D);
    CHECK(r.cofactors[0] * to_rational(D) == *r.unnormalized);
    CHECK(r.cofactors[1] * to_rational(Dm1) == *r.unnormalized);

    const OreOperator b[] = {xDm1, Dm1};
    CHECK(lclm_new(b).lclm == kMixedLclm);
    CHECK(ore_apply(kMixedLclm, P({0, 1})).is_zero());

    std::mt19937_64 rng(34);
    auto L = random_operator(rng, kBig, 2, 2);
    const OreOperator c[] = {L, L, L};
    CHECK(lclm_new(c).lclm == primitive_part(L));
    const OreOperator one[] = {L};
    CHECK(lclm_new(one).lclm == primitive_part(L));
    CHECK_THROWS_AS(lclm_new(std::span<const OreOperator>()), ArithmeticError);
  }

  TEST_CASE("two-operator methods on the worked examples") {
    CHECK(lclm_heffter(D, Dm1).lclm == Op({{0}, {-1}, {1}}));
    CHECK(*lclm_heffter(D, Dm1).rank == 3);
    CHECK(heffter_order(D, Dm1) == 2);
    CHECK(lclm_heffter(xDm1, Dm1).lclm == kMixedLclm);

    const auto D3mD2 = Op({{0}, {0}, {-1}, {1}});
    CHECK(lclm_euclid(Op({{0}, {0}, {1}}), Dm1).lclm == D3mD2);
    CHECK(lclm_euclid(Dm1, Op({{0}, {0}, {1}})).lclm == D3mD2);
    CHECK(lclm_euclid(D, Dm1).lclm == Op({{0}, {-1}, {1}}));
    CHECK(lclm_extended_euclid(Op({{0}, {0}, {1}}), Dm1).lclm == D3mD2);
    CHECK(lclm_extended_euclid(D, Dm1).lclm == Op({{0}, {-1}, {1}}));

    CHECK(lclm_li(D, Dm1).lclm == Op({{0}, {-1}, {1}}));
    CHECK(lclm_li(Op({{0}, {-1}, {1}}), Dm1).lclm == Op({{0}, {-1}, {1}}));
    CHECK(lclm_li(xDm1, Dm1).lclm == kMixedLclm);

    const OreOperator a[] = {D, Dm1};
    CHECK(lclm_van_hoeij(a).lclm == Op({{0}, {-1}, {1}}));
    CHECK(*lclm_van_hoeij(a).rank == 2);
    const OreOperator b[] = {xDm1, Dm1};
    CHECK(lclm_van_hoeij(b).lclm == kMixedLclm);

    std::mt19937_64 rng(35);
    auto L = random_operator(rng, kBig, 2, 2);
    const auto pL = primitive_part(L);
    const OreOperator LL[] = {L, L};
    CHECK(lclm_heffter(L, L).lclm == pL);
    CHECK(lclm_extended_euclid(L, L).lclm == pL);
    CHECK(lclm_li(L, L).lclm == pL);
    CHECK(lclm_van_hoeij(LL).lclm == pL);
    CHECK(lclm_euclid(L, L.left_scaled(P({5}))).lclm == pL);
    CHECK(lclm_euclid(L, L.left_scaled(P({0, 3}))).lclm == pL);

    CHECK_THROWS_AS(lclm_heffter(D, OreOperator()), ArithmeticError);
    CHECK_THROWS_AS(lclm_euclid(OreOperator(), D), ArithmeticError);
    CHECK_THROWS_AS(lclm_extended_euclid(D, OreOperator()), ArithmeticError);
    CHECK_THROWS_AS(lclm_li(D, OreOperator()), ArithmeticError);
  }

  TEST_CASE("Li's determinant for the first-order pair") {
    // U = 1 - D, so U * D = D - D^2.
    auto r = lclm_li(D, Dm1);
    CHECK(r.lclm == Op({{0}, {-1}, {1}}));
    CHECK(Op({{1}, {-1}}) * D == Op({{0}, {1}, {-1}}));
  }

  TEST_CASE("combinators") {
    const OreOperator three[] = {D, Dm1, xDm1};
    auto reference = lclm_new(three).lclm;
    auto heff = [](const OreOperator& a, const OreOperator& b) { return lclm_heffter(a, b); };
    CHECK(lclm_pairwise_combine(three, heff, CombineStrategy::DivideAndConquer).lclm == reference);
    CHECK(lclm_pairwise_combine(three, heff, CombineStrategy::Iterative).lclm == reference);
    CHECK(reference.order() == 3);

    std::mt19937_64 rng(36);
    auto L = random_operator(rng, kBig, 2, 2);
    const OreOperator one[] = {L};
    CHECK(lclm_pairwise_combine(one, heff, CombineStrategy::Iterative).lclm == primitive_part(L));
    const OreOperator four[] = {L, L, L, L};
    CHECK(lclm_pairwise_combine(four, heff, CombineStrategy::DivideAndConquer).lclm == primitive_part(L));
  }

  TEST_CASE("algorithm tags") {
    CHECK(is_known_algorithm("new"));
    CHECK(is_known_algorithm("dac:heffter"));
    CHECK(is_known_algorithm("iter:heuristic"));
    CHECK_FALSE(is_known_algorithm("dac:dac:new"));
    CHECK_FALSE(is_known_algorithm("fast"));
    const OreOperator a[] = {D, Dm1};
    CHECK_THROWS_AS(compute_lclm(a, "fast"), UnknownAlgorithm);
    for (const auto& tag : kAllTags) {
      auto r = compute_lclm(a, tag);
      CHECK_MESSAGE(r.lclm == Op({{0}, {-1}, {1}}), tag);
      CHECK(r.algorithm == tag);
    }
  }

  TEST_CASE("cross-algorithm agreement, divisibility and minimality") {
    std::mt19937_64 rng(37);
    for (int t = 0; t < 40; ++t) {
      const std::size_t k = 2 + rng() % 2;
      auto ops = random_tuple(rng, kBig, k, 2, 2);
      const auto ref = lclm_new(ops);
      int s = 0;
      for (const auto& L : ops) s += L.order();
      CHECK(divisible_by_all(ref.lclm, ops));
      CHECK(ref.order == static_cast<int>(rational_rank(build_M(ops, s))) + s - static_cast<int>(k) * (s + 1));
      for (std::size_t i = 0; i < k; ++i) CHECK(ref.cofactors[i] * to_rational(ops[i]) == *ref.unnormalized);
      if (k == 2) CHECK(ref.order == heffter_order(ops[0], ops[1]));
      for (const auto& tag : kAllTags) CHECK_MESSAGE(compute_lclm(ops, tag).lclm == ref.lclm, tag);
    }
  }

  TEST_CASE("degenerate inputs: common right factors and duplicates") {
    std::mt19937_64 rng(38);
    for (int t = 0; t < 30; ++t) {
      auto G = random_operator(rng, kBig, 1, 1 + rng() % 2);
      auto A = random_operator(rng, kBig, 1, rng() % 3) * G;
      auto B = random_operator(rng, kBig, 1, rng() % 3) * G;
      std::vector<OreOperator> ops{A, B};
      if (t % 3 == 0) ops.push_back(A);
      const auto ref = lclm_new(ops);
      CHECK(divisible_by_all(ref.lclm, ops));
      // A common right factor of order g lowers the order below r1 + r2.
      CHECK(ref.order <= A.order() + B.order() - G.order());
      for (const auto& tag : kAllTags) CHECK_MESSAGE(compute_lclm(ops, tag).lclm == ref.lclm, tag);
    }
  }

  TEST_CASE("the LCLM annihilates the union of polynomial solution spaces") {
    // D^2 kills {1, x}; x D - 2 kills x^2; the LCLM must kill 1, x, x^2.
    const OreOperator ops[] = {Op({{0}, {0}, {1}}), Op({{-2}, {0, 1}})};
    auto L = lclm_new(ops).lclm;
    CHECK(L.order() == 3);
    for (auto f : {P({1}), P({0, 1}), P({0, 0, 1})}) CHECK(ore_apply(L, f).is_zero());
  }

  TEST_CASE("order and degree bounds, generic sharpness") {
    std::mt19937_64 rng(39);
    int sharp = 0, total = 0;
    for (int t = 0; t < 40; ++t) {
      const int k = 2 + static_cast<int>(rng() % 2), d = 1 + static_cast<int>(rng() % 2), r = 1 + static_cast<int>(rng() % 2);
      std::vector<OreOperator> ops;
      for (int i = 0; i < k; ++i) ops.push_back(random_operator(rng, kBig, d, r));
      auto L = lclm_new(ops).lclm;
      const int s = k * r;
      CHECK(L.order() <= s);
      CHECK(degree(L) <= d * (k * (s + 1) - s));
      sharp += L.order() == k * r && degree(L) == d * k * (r * k - r + 1);
      ++total;
    }
    CHECK(sharp * 100 >= total * 95);
  }
}
