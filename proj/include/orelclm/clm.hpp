#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "orelclm/lclm.hpp"
#include "orelclm/linalg.hpp"
#include "orelclm/ore.hpp"

namespace orelclm {

/// max(a + b) over monomials x^a D^b of L.  Throws on the zero operator.
int total_degree(const OreOperator& L);

/// Number of monomials x^a D^b with a + b <= N, i.e. binom(N+2, 2); 0 for N < 0.
std::size_t monomial_count(int N);
/// Column of x^a D^b: grades ascending, D-exponent descending within a grade.
std::size_t monomial_index(int x_exp, int d_exp);

/// Smallest N >= ceil(k*delta + (sqrt(4k(k-1)delta^2 + 1) - 3)/2) with
/// k*binom(N-delta+2, 2) > (k-1)*binom(N+2, 2).
int clm_bound(int k, int delta);

/// Rows are x^i D^j * P for i + j <= N - total_degree(P), columns the
/// monomials of total degree <= N, both in monomial_index order.
ScalarMatrix build_C(const OreOperator& P, int N);
/// C_N(L_i) on the diagonal over a row of -I blocks.
ScalarMatrix build_Mprime(std::span<const OreOperator> ops, int N);

struct ClmResult {
  OreOperator clm;
  int total_degree = 0;
  int N_used = 0;
};

/// Nonzero common left multiple of small total degree from the left kernel of
/// M'_N, N searched upward from clm_bound.  Among the kernel basis vectors the
/// one with the smallest total degree is returned, primitive.
ClmResult clm_compute(std::span<const OreOperator> ops);

struct HeuristicStats {
  int attempts = 0;
  bool fallback = false;
};

/// GCRD of two random F_p[x]-combinations (degree <= 1 multipliers) of common
/// left multiples, verified against the exact order and divisibility; after
/// `trials` failed attempts it returns lclm_new.
LclmResult heuristic_lclm(std::span<const OreOperator> ops, int trials = 3, std::uint64_t seed = 1,
                          HeuristicStats* stats = nullptr);

}  // namespace orelclm
