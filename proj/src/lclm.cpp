#include "orelclm/lclm.hpp"

#include <numeric>
#include <stdexcept>

namespace orelclm {
namespace {

void require_nonzero(std::span<const OreOperator> ops) {
  if (ops.empty()) throw ArithmeticError("empty operator list");
  for (const auto& L : ops)
    if (L.is_zero()) throw ArithmeticError("zero operator");
}

int total_order(std::span<const OreOperator> ops) {
  int s = 0;
  for (const auto& L : ops) s += L.order();
  return s;
}

LclmResult single(const OreOperator& L, std::string tag) {
  LclmResult r;
  r.lclm = primitive_part(L);
  r.order = r.lclm.order();
  r.unnormalized = to_rational(L);
  r.cofactors = {OreRatOperator::d_power(L.field(), 0)};
  r.algorithm = std::move(tag);
  return r;
}

LclmResult finish(const OreOperator& clm, std::string tag) {
  LclmResult r;
  r.lclm = primitive_part(clm);
  r.order = r.lclm.order();
  r.algorithm = std::move(tag);
  return r;
}

// Copy rows [0, n) of M.
PolyMatrix top_rows(const PolyMatrix& M, std::size_t n) {
  std::vector<std::size_t> rows(n), cols(M.cols());
  std::iota(rows.begin(), rows.end(), 0);
  std::iota(cols.begin(), cols.end(), 0);
  return M.submatrix(rows, cols);
}

const std::vector<DensePoly>& unique_kernel_vector(const PolyKernel& K, const char* where) {
  if (K.dimension() != 1)
    throw std::logic_error(std::string(where) + ": kernel dimension " + std::to_string(K.dimension()) +
                           ", expected 1");
  return K.vectors[0];
}

}  // namespace

std::vector<DensePoly> phi(const OreOperator& L, int n) {
  if (L.order() > n) throw ArithmeticError("operator order exceeds n");
  std::vector<DensePoly> v(static_cast<std::size_t>(n + 1), DensePoly(L.field()));
  for (int i = 0; i <= L.order(); ++i) v[static_cast<std::size_t>(n - i)] = L.coeff(static_cast<std::size_t>(i));
  return v;
}

OreOperator phi_inverse(const PrimeField& f, std::span<const DensePoly> v) {
  std::vector<DensePoly> c(v.rbegin(), v.rend());
  return OreOperator(f, std::move(c));
}

PolyMatrix build_S(const OreOperator& P, int n) {
  if (P.is_zero()) throw ArithmeticError("zero operator");
  const int m = P.order();
  if (n < m) throw ArithmeticError("build_S: n < ord(P)");
  const auto rows = static_cast<std::size_t>(n - m + 1);
  PolyMatrix S(P.field(), rows, static_cast<std::size_t>(n + 1));
  // Row j holds D^(n-m-j) P, so fill from the bottom while multiplying by D.
  OreOperator t = P;
  for (std::size_t k = 0; k < rows; ++k) {
    if (k > 0) t = t.d_times();
    const std::size_t j = rows - 1 - k;
    for (int i = 0; i <= t.order(); ++i)
      S.at(j, static_cast<std::size_t>(n - i)) = t.coeff(static_cast<std::size_t>(i));
  }
  return S;
}

PolyMatrix build_M(std::span<const OreOperator> ops, int n) {
  require_nonzero(ops);
  const std::size_t k = ops.size(), w = static_cast<std::size_t>(n + 1);
  const int s = total_order(ops);
  const std::size_t rows = (k + 1) * w - static_cast<std::size_t>(s);
  PolyMatrix M(ops[0].field(), rows, k * w);
  std::size_t r0 = 0;
  for (std::size_t b = 0; b < k; ++b) {
    auto S = build_S(ops[b], n);
    for (std::size_t i = 0; i < S.rows(); ++i)
      for (std::size_t j = 0; j < w; ++j) M.at(r0 + i, b * w + j) = S.at(i, j);
    r0 += S.rows();
  }
  const auto minus_one = DensePoly::constant(M.field(), M.field().prime() - 1);
  for (std::size_t b = 0; b < k; ++b)
    for (std::size_t j = 0; j < w; ++j) M.at(r0 + j, b * w + j) = minus_one;
  return M;
}

PolyMatrix build_U(const OreOperator& L1, const OreOperator& L2, int n) {
  auto S1 = build_S(L1, n), S2 = build_S(L2, n);
  PolyMatrix U(L1.field(), S1.rows() + S2.rows(), S1.cols());
  for (std::size_t i = 0; i < S1.rows(); ++i)
    for (std::size_t j = 0; j < S1.cols(); ++j) U.at(i, j) = S1.at(i, j);
  for (std::size_t i = 0; i < S2.rows(); ++i)
    for (std::size_t j = 0; j < S2.cols(); ++j) U.at(S1.rows() + i, j) = S2.at(i, j);
  return U;
}

int order_of_lclm(std::span<const OreOperator> ops) {
  require_nonzero(ops);
  const int s = total_order(ops);
  const int k = static_cast<int>(ops.size());
  const auto rho = static_cast<int>(poly_rank(build_M(ops, s)));
  return rho + s - k * (s + 1);
}

int heffter_order(const OreOperator& L1, const OreOperator& L2) {
  const OreOperator ops[] = {L1, L2};
  require_nonzero(ops);
  return static_cast<int>(poly_rank(build_U(L1, L2, L1.order() + L2.order()))) - 1;
}

LclmResult lclm_new(std::span<const OreOperator> ops) {
  require_nonzero(ops);
  const PrimeField& f = ops[0].field();
  const int s = total_order(ops);
  const int k = static_cast<int>(ops.size());
  auto rk = poly_rank_and_kernel(build_M(ops, s));
  const int ell = static_cast<int>(rk.rank) + s - k * (s + 1);

  PolyKernel K = ell == s ? std::move(rk.kernel) : poly_left_kernel(build_M(ops, ell));
  const auto& v = unique_kernel_vector(K, "lclm_new");

  LclmResult r;
  std::size_t pos = 0;
  for (const auto& L : ops) {
    const auto len = static_cast<std::size_t>(ell + 1 - L.order());
    r.cofactors.push_back(to_rational(phi_inverse(f, std::span(v).subspan(pos, len))));
    pos += len;
  }
  const auto clm = phi_inverse(f, std::span(v).subspan(pos));
  r.unnormalized = to_rational(clm);
  r.lclm = primitive_part(clm);
  r.order = ell;
  r.rank = rk.rank;
  r.algorithm = "new";
  if (r.lclm.order() != ell) throw std::logic_error("lclm_new: order mismatch");
  return r;
}

LclmResult lclm_heffter(const OreOperator& L1, const OreOperator& L2) {
  const OreOperator ops[] = {L1, L2};
  require_nonzero(ops);
  const PrimeField& f = L1.field();
  const int r1 = L1.order(), r2 = L2.order();
  const auto rho = poly_rank(build_U(L1, L2, r1 + r2));
  const int ell = static_cast<int>(rho) - 1;

  const auto K = poly_left_kernel(build_U(L1, L2, ell));
  const auto& v = unique_kernel_vector(K, "lclm_heffter");
  const auto len1 = static_cast<std::size_t>(ell - r1 + 1);
  const auto Q1 = phi_inverse(f, std::span(v).first(len1));
  const auto Q2 = -phi_inverse(f, std::span(v).subspan(len1));
  const auto clm = Q1 * L1;

  LclmResult r;
  r.cofactors = {to_rational(Q1), to_rational(Q2)};
  r.unnormalized = to_rational(clm);
  r.lclm = primitive_part(clm);
  r.order = ell;
  r.rank = rho;
  r.algorithm = "heffter";
  if (r.lclm.order() != ell) throw std::logic_error("lclm_heffter: order mismatch");
  return r;
}

namespace {

// Remainder sequence R_1 = A, R_2 = B, R_i = rem(R_{i-2}, R_{i-1}) down to the
// last nonzero term, plus the quotients Q_3..Q_{m+1}.
struct RemainderSequence {
  std::vector<OreRatOperator> R;
  std::vector<OreRatOperator> Q;  // Q[i] is the quotient producing R[i+2] (0-based)
};

RemainderSequence remainder_sequence(const OreOperator& A, const OreOperator& B) {
  RemainderSequence seq;
  seq.R = {to_rational(A), to_rational(B)};
  for (;;) {
    auto [q, rem] = ore_divrem_right(seq.R[seq.R.size() - 2], seq.R.back());
    seq.Q.push_back(std::move(q));
    if (rem.is_zero()) break;
    seq.R.push_back(std::move(rem));
  }
  return seq;
}

}  // namespace

LclmResult lclm_euclid(const OreOperator& L1, const OreOperator& L2) {
  const OreOperator ops[] = {L1, L2};
  require_nonzero(ops);
  const bool swap = L1.order() < L2.order();
  const auto seq = remainder_sequence(swap ? L2 : L1, swap ? L1 : L2);
  const auto& R = seq.R;
  const std::size_t m = R.size();  // R[0..m-1] = R_1..R_m

  // Left to right: A <- (A R_{j-1}) R_j^-1 for j = m..3, then A R_1; every
  // quotient is exact.
  auto acc = OreRatOperator::d_power(L1.field(), 0);
  for (std::size_t j = m; j >= 3; --j) acc = exact_left_quotient(acc * R[j - 2], R[j - 1]);
  const auto clm = acc * R[0];
  return finish(clear_denominators(clm), "euclid");
}

LclmResult lclm_extended_euclid(const OreOperator& L1, const OreOperator& L2) {
  const OreOperator ops[] = {L1, L2};
  require_nonzero(ops);
  const bool swap = L1.order() < L2.order();
  const auto seq = remainder_sequence(swap ? L2 : L1, swap ? L1 : L2);
  const PrimeField& f = L1.field();

  // C_1 = 1, C_2 = 0, C_i = C_{i-2} - Q_i C_{i-1} for i = 3..m+1.
  OreRatOperator c_prev = OreRatOperator::d_power(f, 0), c_cur(f);
  for (const auto& q : seq.Q) {
    auto next = c_prev - q * c_cur;
    c_prev = std::move(c_cur);
    c_cur = std::move(next);
  }
  return finish(clear_denominators(c_cur * seq.R[0]), "ext-euclid");
}

LclmResult lclm_li(const OreOperator& L1, const OreOperator& L2) {
  const OreOperator ops[] = {L1, L2};
  require_nonzero(ops);
  const PrimeField& f = L1.field();
  const int r1 = L1.order(), r2 = L2.order();
  const int g = gcrd(L1, L2).order();
  const int n = r1 + r2 - g;
  const auto size = static_cast<std::size_t>(r1 + r2 - 2 * g + 2);

  // First size-1 columns of the stacked Sylvester blocks (D^n down to D^g);
  // the operator-valued last column holds D^(r2-g), ..., 1 against the L1 rows.
  const auto U = build_U(L1, L2, n);
  if (U.rows() != size) throw std::logic_error("lclm_li: unexpected matrix size");
  std::vector<std::size_t> cols(size - 1);
  std::iota(cols.begin(), cols.end(), 0);
  const auto l1_rows = static_cast<std::size_t>(r2 - g + 1);

  std::vector<DensePoly> u(l1_rows, DensePoly(f));  // ascending D powers
  for (std::size_t i = 0; i < l1_rows; ++i) {
    std::vector<std::size_t> rows;
    for (std::size_t t = 0; t < size; ++t)
      if (t != i) rows.push_back(t);
    auto minor = poly_det(U.submatrix(rows, cols));
    if ((i + size - 1) % 2) minor = -minor;
    u[l1_rows - 1 - i] = std::move(minor);
  }
  const OreOperator Uop(f, std::move(u));
  if (Uop.is_zero()) throw std::logic_error("lclm_li: vanishing determinant");
  return finish(Uop * L1, "li");
}

LclmResult lclm_van_hoeij(std::span<const OreOperator> ops) {
  require_nonzero(ops);
  const PrimeField& f = ops[0].field();
  const int s = total_order(ops);
  const std::size_t k = ops.size();

  std::vector<OreRatOperator> rat;
  std::vector<OreRatOperator> rem;  // rem(D^i, L_j) for the current i
  std::size_t width = 0;
  for (const auto& L : ops) {
    rat.push_back(to_rational(L));
    rem.push_back(ore_rem_right(OreRatOperator::d_power(f, 0), rat.back()));
    width += static_cast<std::size_t>(L.order());
  }

  const auto rows = static_cast<std::size_t>(s + 1);
  PolyMatrix H(f, rows, width);
  std::vector<DensePoly> denominators;
  for (std::size_t i = 0; i < rows; ++i) {
    if (i > 0)
      for (std::size_t j = 0; j < k; ++j) rem[j] = ore_rem_right(rem[j].d_times(), rat[j]);
    auto c = DensePoly::constant(f, 1);
    for (const auto& R : rem)
      for (const auto& a : R.coeffs()) c = poly_lcm(c, a.den());
    std::size_t col = 0;
    for (std::size_t j = 0; j < k; ++j) {
      for (int t = 0; t < ops[j].order(); ++t, ++col) {
        const auto a = rem[j].coeff_or_zero(static_cast<std::size_t>(t));
        H.at(i, col) = poly_exact_div(c, a.den()) * a.num();
      }
    }
    denominators.push_back(std::move(c));
  }

  auto rk = poly_rank_and_kernel(H);
  const auto rho = rk.rank;
  PolyKernel K = rho + 1 == rows ? std::move(rk.kernel) : poly_left_kernel(top_rows(H, rho + 1));
  const auto& v = unique_kernel_vector(K, "lclm_van_hoeij");

  // v * H = 0 means sum_i v_i c_i rem(D^i, L_j) = 0 for every j.
  std::vector<DensePoly> c(rho + 1, DensePoly(f));
  for (std::size_t i = 0; i <= rho; ++i) c[i] = v[i] * denominators[i];
  auto r = finish(OreOperator(f, std::move(c)), "vanhoeij");
  r.rank = rho;
  if (r.order != static_cast<int>(rho)) throw std::logic_error("lclm_van_hoeij: order mismatch");
  return r;
}

namespace {

OreOperator combine(std::span<const OreOperator> ops, const PairwiseLclm& pairwise, CombineStrategy strategy) {
  if (ops.size() == 1) return primitive_part(ops[0]);
  if (strategy == CombineStrategy::DivideAndConquer) {
    const std::size_t half = ops.size() / 2;
    auto left = combine(ops.first(half), pairwise, strategy);
    auto right = combine(ops.subspan(half), pairwise, strategy);
    return primitive_part(pairwise(left, right).lclm);
  }
  auto acc = primitive_part(ops.back());
  for (std::size_t i = ops.size() - 1; i-- > 0;) acc = primitive_part(pairwise(ops[i], acc).lclm);
  return acc;
}

}  // namespace

LclmResult lclm_pairwise_combine(std::span<const OreOperator> ops, const PairwiseLclm& pairwise,
                                 CombineStrategy strategy, const std::string& name) {
  require_nonzero(ops);
  if (ops.size() == 1) return single(ops[0], name);
  return finish(combine(ops, pairwise, strategy), name);
}

}  // namespace orelclm
