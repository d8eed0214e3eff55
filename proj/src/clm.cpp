#include "orelclm/clm.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace orelclm {
namespace {

void require_nonzero(std::span<const OreOperator> ops) {
  if (ops.empty()) throw ArithmeticError("empty operator list");
  for (const auto& L : ops)
    if (L.is_zero()) throw ArithmeticError("zero operator");
}

long long binom2(long long t) { return t >= 2 ? t * (t - 1) / 2 : 0; }

bool row_excess(int k, int delta, int N) {
  return k * binom2(N - delta + 2) > (k - 1) * binom2(N + 2);
}

// Operator with coefficient u[monomial_index(a, b)] at x^a D^b.
OreOperator from_monomials(const PrimeField& f, std::span<const std::uint64_t> u, int N) {
  std::vector<std::vector<std::uint64_t>> c(static_cast<std::size_t>(N + 1));
  for (int g = 0; g <= N; ++g)
    for (int a = 0; a <= g; ++a) {
      const auto v = u[monomial_index(a, g - a)];
      if (v == 0) continue;
      auto& col = c[static_cast<std::size_t>(g - a)];
      if (col.size() <= static_cast<std::size_t>(a)) col.resize(static_cast<std::size_t>(a + 1), 0);
      col[static_cast<std::size_t>(a)] = v;
    }
  std::vector<DensePoly> coeffs;
  for (auto& col : c) coeffs.emplace_back(f, std::move(col));
  return OreOperator(f, std::move(coeffs));
}

int max_total_degree(std::span<const OreOperator> ops) {
  int delta = 0;
  for (const auto& L : ops) delta = std::max(delta, total_degree(L));
  return delta;
}

bool divisible_by_all(const OreOperator& C, std::span<const OreOperator> ops) {
  for (const auto& L : ops)
    if (!right_divides(L, C)) return false;
  return true;
}

// Basis of the common left multiples of total degree <= N, as coefficient
// vectors over monomial_index.  The left kernel of M'_N is
// {(u_1, ..., u_k, u) : u_i C_N(L_i) = u}, so its u-parts span the
// intersection of the row spaces of the C_N(L_i); intersecting one block at a
// time keeps every elimination at about twice the size of a single block
// instead of the full (k+1)-block matrix.
struct ClmSpace {
  int N = 0;
  std::vector<std::vector<std::uint64_t>> basis;
};

ClmSpace clm_space(std::span<const OreOperator> ops, int N) {
  const PrimeField& f = ops[0].field();
  const std::size_t w = monomial_count(N);
  // Largest total degree first: its C_N has the fewest rows.
  std::vector<std::size_t> order(ops.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return total_degree(ops[a]) > total_degree(ops[b]); });

  const auto first = build_C(ops[order[0]], N);
  std::vector<std::vector<std::uint64_t>> basis;
  for (std::size_t i = 0; i < first.rows(); ++i) basis.emplace_back(first.row(i).begin(), first.row(i).end());

  for (std::size_t t = 1; t < order.size() && !basis.empty(); ++t) {
    const auto C = build_C(ops[order[t]], N);
    ScalarMatrix stacked(f, basis.size() + C.rows(), w);
    for (std::size_t i = 0; i < basis.size(); ++i) std::copy(basis[i].begin(), basis[i].end(), stacked.row(i).begin());
    for (std::size_t i = 0; i < C.rows(); ++i)
      std::copy(C.row(i).begin(), C.row(i).end(), stacked.row(basis.size() + i).begin());
    const auto K = scalar_left_kernel(stacked);
    // alpha * basis = -beta * C lies in both spaces; rows of each are independent.
    std::vector<std::vector<std::uint64_t>> next;
    for (const auto& v : K.vectors) {
      std::vector<std::uint64_t> u(w, 0);
      for (std::size_t i = 0; i < basis.size(); ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < w; ++j)
          if (basis[i][j] != 0) u[j] = f.add(u[j], f.mul(v[i], basis[i][j]));
      }
      next.push_back(std::move(u));
    }
    basis = std::move(next);
  }
  return {N, std::move(basis)};
}

// First N >= start with a nonzero common multiple of total degree <= N.
ClmSpace first_clm_space(std::span<const OreOperator> ops, int start) {
  for (int N = start;; ++N) {
    auto space = clm_space(ops, N);
    if (!space.basis.empty()) return space;
    if (N > start + 64) throw std::logic_error("clm search did not terminate");
  }
}

// Echelon form of the space spanned by `basis`, pivots chosen by highest
// D-power first, returned with the pivot orders ascending.  The trailing rows
// of the echelon form are the multiples of smallest order; rows[0..n) span
// exactly the multiples of order <= order[n-1].
struct OrderEchelon {
  std::vector<std::vector<std::uint64_t>> rows;
  std::vector<int> order;
};

OrderEchelon order_echelon(const PrimeField& f, std::vector<std::vector<std::uint64_t>> basis, int N) {
  std::vector<std::pair<std::size_t, int>> cols;  // (index, D-power), highest D-power first
  for (int b = N; b >= 0; --b)
    for (int a = 0; a + b <= N; ++a) cols.emplace_back(monomial_index(a, b), b);
  OrderEchelon e;
  std::size_t done = 0;
  for (const auto& [c, b] : cols) {
    std::size_t piv = done;
    while (piv < basis.size() && basis[piv][c] == 0) ++piv;
    if (piv == basis.size()) continue;
    std::swap(basis[done], basis[piv]);
    auto& prow = basis[done];
    const auto inv = f.inv(prow[c]);
    for (auto& v : prow) v = f.mul(v, inv);
    for (std::size_t i = done + 1; i < basis.size(); ++i) {
      const auto m = basis[i][c];
      if (m == 0) continue;
      for (std::size_t j = 0; j < prow.size(); ++j)
        if (prow[j] != 0) basis[i][j] = f.sub(basis[i][j], f.mul(m, prow[j]));
    }
    e.order.push_back(b);
    ++done;
  }
  basis.resize(done);
  std::reverse(basis.begin(), basis.end());
  std::reverse(e.order.begin(), e.order.end());
  e.rows = std::move(basis);
  return e;
}

OreOperator clm_of(const PrimeField& f, const std::vector<std::uint64_t>& u, int N) { return from_monomials(f, u, N); }

}  // namespace

int total_degree(const OreOperator& L) {
  if (L.is_zero()) throw ArithmeticError("zero operator");
  int t = 0;
  for (int i = 0; i <= L.order(); ++i) {
    const auto& a = L.coeff(static_cast<std::size_t>(i));
    if (!a.is_zero()) t = std::max(t, a.degree() + i);
  }
  return t;
}

std::size_t monomial_count(int N) { return static_cast<std::size_t>(binom2(N + 2)); }

std::size_t monomial_index(int x_exp, int d_exp) {
  const auto g = static_cast<std::size_t>(x_exp + d_exp);
  return g * (g + 1) / 2 + static_cast<std::size_t>(x_exp);
}

int clm_bound(int k, int delta) {
  if (k < 1 || delta < 0) throw ArithmeticError("clm_bound: need k >= 1 and delta >= 0");
  const double kd = k, dd = delta;
  const double root = std::sqrt(4.0 * kd * (kd - 1.0) * dd * dd + 1.0);
  int N = static_cast<int>(std::ceil(kd * dd + (root - 3.0) / 2.0));
  N = std::max(N, 0);
  // The floating-point ceiling may land one step on either side of the exact
  // threshold; settle it with integer arithmetic.
  while (N > 0 && row_excess(k, delta, N - 1)) --N;
  while (!row_excess(k, delta, N)) ++N;
  return N;
}

ScalarMatrix build_C(const OreOperator& P, int N) {
  const int delta = total_degree(P);
  if (N < delta) throw ArithmeticError("build_C: N below total degree");
  const PrimeField& f = P.field();
  ScalarMatrix C(f, monomial_count(N - delta), monomial_count(N));
  // dp[j] = D^j * P
  std::vector<OreOperator> dp{P};
  for (int j = 1; j <= N - delta; ++j) dp.push_back(dp.back().d_times());
  for (int g = 0; g <= N - delta; ++g) {
    for (int i = 0; i <= g; ++i) {
      const int j = g - i;
      const auto row = monomial_index(i, j);
      const auto& T = dp[static_cast<std::size_t>(j)];
      for (int b = 0; b <= T.order(); ++b) {
        const auto& a = T.coeff(static_cast<std::size_t>(b));
        for (int e = 0; e <= a.degree(); ++e)
          if (a.coeff(static_cast<std::size_t>(e)) != 0)
            C.at(row, monomial_index(e + i, b)) = a.coeff(static_cast<std::size_t>(e));
      }
    }
  }
  return C;
}

ScalarMatrix build_Mprime(std::span<const OreOperator> ops, int N) {
  require_nonzero(ops);
  const PrimeField& f = ops[0].field();
  const std::size_t k = ops.size(), w = monomial_count(N);
  std::vector<ScalarMatrix> blocks;
  std::size_t rows = w;
  for (const auto& L : ops) {
    blocks.push_back(build_C(L, N));
    rows += blocks.back().rows();
  }
  ScalarMatrix M(f, rows, k * w);
  std::size_t r0 = 0;
  for (std::size_t b = 0; b < k; ++b) {
    const auto& C = blocks[b];
    for (std::size_t i = 0; i < C.rows(); ++i)
      for (std::size_t j = 0; j < w; ++j) M.at(r0 + i, b * w + j) = C.at(i, j);
    r0 += C.rows();
  }
  for (std::size_t b = 0; b < k; ++b)
    for (std::size_t j = 0; j < w; ++j) M.at(r0 + j, b * w + j) = f.prime() - 1;
  return M;
}

ClmResult clm_compute(std::span<const OreOperator> ops) {
  require_nonzero(ops);
  const PrimeField& f = ops[0].field();
  const int k = static_cast<int>(ops.size());
  const auto [N, basis] = first_clm_space(ops, clm_bound(k, max_total_degree(ops)));

  ClmResult best;
  bool found = false;
  for (const auto& v : basis) {
    auto C = clm_of(f, v, N);
    if (C.is_zero()) continue;
    const int t = total_degree(C);
    if (!found || t < best.total_degree) {
      best = {std::move(C), t, N};
      found = true;
    }
  }
  if (!found) throw std::logic_error("clm_compute: kernel without a multiple");
  best.clm = primitive_part(best.clm);
  if (!divisible_by_all(best.clm, ops)) throw std::logic_error("clm_compute: result is not a common multiple");
  return best;
}

LclmResult heuristic_lclm(std::span<const OreOperator> ops, int trials, std::uint64_t seed, HeuristicStats* stats) {
  require_nonzero(ops);
  if (trials < 1) throw ArithmeticError("heuristic_lclm: trials must be >= 1");
  HeuristicStats local;
  HeuristicStats& st = stats ? *stats : local;
  st = {};
  if (ops.size() == 1) {
    LclmResult r;
    r.lclm = primitive_part(ops[0]);
    r.order = r.lclm.order();
    r.algorithm = "heuristic";
    return r;
  }

  const PrimeField& f = ops[0].field();
  const int k = static_cast<int>(ops.size());
  const int target = order_of_lclm(ops);
  auto space = first_clm_space(ops, clm_bound(k, max_total_degree(ops)));
  if (space.basis.size() < 2) {
    // One multiple only at this N; the next level contains its x- and
    // D-shifts and more.
    space = first_clm_space(ops, space.N + 1);
  }
  const int N = space.N;
  // Combine only multiples of the smallest order that still offers two
  // independent ones: they are Q * LCLM with small Q, so the GCRD is cheap.
  auto ech = order_echelon(f, std::move(space.basis), N);
  std::size_t use = std::min<std::size_t>(2, ech.rows.size());
  while (use < ech.rows.size() && ech.order[use] == ech.order[use - 1]) ++use;
  ech.rows.resize(use);
  const auto& basis = ech.rows;

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> dist(0, f.prime() - 1);
  auto random_clm = [&] {
    std::vector<std::uint64_t> v(basis[0].size(), 0);
    for (const auto& b : basis) {
      const auto c = dist(rng);
      for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.add(v[i], f.mul(c, b[i]));
    }
    return clm_of(f, v, N);
  };
  auto random_linear = [&] {
    return OreOperator::scalar(DensePoly(f, {dist(rng), dist(rng)}));
  };

  for (int t = 0; t < trials; ++t) {
    ++st.attempts;
    const auto C1 = random_clm(), C2 = random_clm();
    if (C1.is_zero() || C2.is_zero()) continue;
    const auto G1 = random_linear() * C1 + random_linear() * C2;
    const auto G2 = random_linear() * C1 + random_linear() * C2;
    if (G1.is_zero() || G2.is_zero()) continue;
    auto g = gcrd(G1, G2);
    if (g.order() == target && divisible_by_all(g, ops)) {
      LclmResult r;
      r.lclm = std::move(g);
      r.order = target;
      r.algorithm = "heuristic";
      return r;
    }
  }
  st.fallback = true;
  auto r = lclm_new(ops);
  r.algorithm = "heuristic";
  return r;
}

}  // namespace orelclm
