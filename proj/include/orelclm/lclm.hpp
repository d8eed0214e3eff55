#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "orelclm/linalg.hpp"
#include "orelclm/ore.hpp"

namespace orelclm {

/// Output of every LCLM routine.
struct LclmResult {
  /// Primitive LCLM with monic leading coefficient.
  OreOperator lclm;
  /// Common left multiple before normalization, when the algorithm produces one
  /// together with cofactors: cofactors[i] * L_i == *unnormalized.
  std::optional<OreRatOperator> unnormalized;
  std::vector<OreRatOperator> cofactors;
  int order = 0;
  /// Rank of the matrix the order was read from (M_s, U_{r1+r2} or H_s).
  std::optional<std::size_t> rank;
  std::string algorithm;
};

/// Coefficient vector (a_n, ..., a_0) of an operator of order <= n.
std::vector<DensePoly> phi(const OreOperator& L, int n);
/// Inverse of phi: v[0] is the coefficient of the highest power of D.
OreOperator phi_inverse(const PrimeField& f, std::span<const DensePoly> v);

/// Sylvester-type block S_n(P): row j is phi_n(D^(n-m-j) * P), m = ord P.
/// (n - m + 1) x (n + 1).  Throws if n < ord P or P == 0.
PolyMatrix build_S(const OreOperator& P, int n);
/// Block matrix with S_n(L_i) on the diagonal over a row of -I blocks.
/// ((k+1)(n+1) - sum r_i) x k(n+1).
PolyMatrix build_M(std::span<const OreOperator> ops, int n);
/// Stack of S_n(L1) over S_n(L2).
PolyMatrix build_U(const OreOperator& L1, const OreOperator& L2, int n);

/// Exact LCLM order, rank(M_s) + s - k(s+1) with s = sum of orders.
int order_of_lclm(std::span<const OreOperator> ops);
/// rank(U_{r1+r2}) - 1 for two operators.
int heffter_order(const OreOperator& L1, const OreOperator& L2);

/// Rank-first kernel method on M_s / M_l; returns cofactors.
LclmResult lclm_new(std::span<const OreOperator> ops);
LclmResult lclm_heffter(const OreOperator& L1, const OreOperator& L2);
/// Euclidean remainder sequence and the left-to-right product of exact
/// left quotients R_{m-1} R_m^-1 R_{m-2} R_{m-1}^-1 ... R_2 R_3^-1 R_1.
LclmResult lclm_euclid(const OreOperator& L1, const OreOperator& L2);
/// Extended Euclid: C_{m+1} * R_1 with C_1 = 1, C_2 = 0, C_i = C_{i-2} - Q_i C_{i-1}.
LclmResult lclm_extended_euclid(const OreOperator& L1, const OreOperator& L2);
/// Determinantal formula: U = det of the bordered Sylvester matrix, LCLM = U * L1.
LclmResult lclm_li(const OreOperator& L1, const OreOperator& L2);
/// Remainders rem(D^i, L_j) and the rank of the stacked coefficient matrix.
LclmResult lclm_van_hoeij(std::span<const OreOperator> ops);

using PairwiseLclm = std::function<LclmResult(const OreOperator&, const OreOperator&)>;
enum class CombineStrategy { Iterative, DivideAndConquer };

/// k-ary LCLM from a 2-ary one, removing content after each combination.
/// Divide and conquer splits at floor(k/2); the iterative scheme folds from
/// the right: lclm(L_1, lclm(L_2, ... lclm(L_{k-1}, L_k))).
LclmResult lclm_pairwise_combine(std::span<const OreOperator> ops, const PairwiseLclm& pairwise,
                                 CombineStrategy strategy, const std::string& name = "combine");

}  // namespace orelclm
