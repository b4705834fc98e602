#include "qsc/fusion.hpp"

#include <atomic>
#include <cmath>
#include <complex>
#include <map>
#include <mutex>
#include <numbers>
#include <shared_mutex>
#include <stdexcept>
#include <string>

namespace qsc {
namespace {

std::atomic<bool> g_verify{false};
std::atomic<int> g_precision{0};

std::shared_mutex g_h0_mutex;
std::map<LineBundleData, Int> g_h0_cache;

// Weight at point 0 shifted once at level k: (m_1,...,m_r) -> (m_2,...,m_r,m_1-k).
Weight level_shift(const Weight& w, Int k) {
  Int r = w.n();
  std::vector<Int> rows(static_cast<size_t>(r));
  for (Int a = 0; a + 1 < r; ++a) rows[static_cast<size_t>(a)] = w.row(a + 1);
  rows[static_cast<size_t>(r - 1)] = w.row(0) - k;
  return Weight(r, std::move(rows));
}

// ---- Verlinde S-matrix sum -----------------------------------------------
//
// N = sum_{mu in alcove} (S_{0mu})^2 prod_j chi_{nu^j}(theta_mu), with
// chi evaluated by the Weyl character formula at the root-of-unity element
// theta_mu and (S_{0mu})^2 = prod_{a<b} |x_a - x_b|^2 / (r t^{r-1}), t = r+k.
template <typename F>
bool verlinde_sum(Int r, Int k, const std::vector<std::vector<Int>>& alcove,
                  const std::vector<Weight>& nu, Int* out) {
  using C = std::complex<F>;
  const F pi = std::numbers::pi_v<F>;
  Int t = r + k;
  F total = 0;
  std::vector<C> x(static_cast<size_t>(r));
  std::vector<std::vector<C>> pow(static_cast<size_t>(r));
  Int max_exp = 0;
  for (const auto& w : nu) max_exp = std::max<Int>(max_exp, w.row(0));
  max_exp += r;
  for (const auto& mu : alcove) {
    Int msum = 0;
    for (Int a = 0; a < r; ++a) msum += mu[static_cast<size_t>(a)] + r - 1 - a;
    for (Int a = 0; a < r; ++a) {
      Int m = mu[static_cast<size_t>(a)] + r - 1 - a;
      F ang = 2 * pi * static_cast<F>(m) / static_cast<F>(t);
      x[static_cast<size_t>(a)] = C(std::cos(ang), std::sin(ang));
      auto& row = pow[static_cast<size_t>(a)];
      row.assign(static_cast<size_t>(max_exp + 1), C(1, 0));
      for (Int e = 1; e <= max_exp; ++e) row[static_cast<size_t>(e)] = row[static_cast<size_t>(e - 1)] * x[static_cast<size_t>(a)];
    }
    // |Vandermonde|^2 and the denominator determinant
    F s0sq = 1;
    C vand(1, 0);
    for (Int a = 0; a < r; ++a)
      for (Int b = a + 1; b < r; ++b) {
        C diff = x[static_cast<size_t>(a)] - x[static_cast<size_t>(b)];
        s0sq *= std::norm(diff);
        vand *= diff;
      }
    s0sq /= static_cast<F>(r) * std::pow(static_cast<F>(t), static_cast<F>(r - 1));
    C term(1, 0);
    for (const auto& w : nu) {
      // numerator determinant det(x_a^{nu_b + r - 1 - b})
      std::vector<std::vector<C>> mat(static_cast<size_t>(r), std::vector<C>(static_cast<size_t>(r)));
      for (Int a = 0; a < r; ++a)
        for (Int b = 0; b < r; ++b)
          mat[static_cast<size_t>(a)][static_cast<size_t>(b)] =
              pow[static_cast<size_t>(a)][static_cast<size_t>(w.row(b) + r - 1 - b)];
      // Laplace-free: Gaussian elimination
      C det(1, 0);
      for (Int col = 0; col < r; ++col) {
        Int piv = -1;
        F best = 0;
        for (Int row = col; row < r; ++row) {
          F mag = std::abs(mat[static_cast<size_t>(row)][static_cast<size_t>(col)]);
          if (mag > best) { best = mag; piv = row; }
        }
        if (piv < 0) { det = C(0, 0); break; }
        if (piv != col) { std::swap(mat[static_cast<size_t>(piv)], mat[static_cast<size_t>(col)]); det = -det; }
        C d = mat[static_cast<size_t>(col)][static_cast<size_t>(col)];
        det *= d;
        for (Int row = col + 1; row < r; ++row) {
          C f = mat[static_cast<size_t>(row)][static_cast<size_t>(col)] / d;
          for (Int c2 = col; c2 < r; ++c2)
            mat[static_cast<size_t>(row)][static_cast<size_t>(c2)] -= f * mat[static_cast<size_t>(col)][static_cast<size_t>(c2)];
        }
      }
      // trace-part correction exp(-2 pi i |nu| msum / (r t))
      F ang = -2 * pi * static_cast<F>(w.size()) * static_cast<F>(msum) /
              (static_cast<F>(r) * static_cast<F>(t));
      term *= det / vand * C(std::cos(ang), std::sin(ang));
    }
    total += s0sq * term.real();
  }
  F rounded = std::round(total);
  if (std::abs(total - rounded) > F(1e-6)) return false;
  *out = static_cast<Int>(rounded);
  return true;
}

void enumerate_alcove(Int r, Int k, Int row, Int prev, std::vector<Int>& cur,
                      std::vector<std::vector<Int>>& out) {
  if (row == r - 1) {
    cur[static_cast<size_t>(r - 1)] = 0;
    out.push_back(cur);
    return;
  }
  for (Int v = 0; v <= prev; ++v) {
    cur[static_cast<size_t>(row)] = v;
    enumerate_alcove(r, k, row + 1, v, cur, out);
  }
}

}  // namespace

FusionAlgebra::FusionAlgebra(Int r_, Int k_) : r(r_), k(k_) {
  if (r < 2 || k < 0) throw std::invalid_argument("FusionAlgebra: need r >= 2, k >= 0");
}

std::vector<Weight> FusionAlgebra::weights() const {
  std::vector<std::vector<Int>> rows;
  std::vector<Int> cur(static_cast<size_t>(r));
  enumerate_alcove(r, k, 0, k, cur, rows);
  std::vector<Weight> out;
  out.reserve(rows.size());
  for (auto& v : rows) out.emplace_back(r, std::move(v));
  return out;
}

// alcove enumerations cached per (r, k); safe for concurrent readers
static const std::vector<std::vector<Int>>& cached_alcove(Int r, Int k) {
  static std::shared_mutex mutex;
  static std::map<std::pair<Int, Int>, std::vector<std::vector<Int>>> cache;
  {
    std::shared_lock lock(mutex);
    auto it = cache.find({r, k});
    if (it != cache.end()) return it->second;
  }
  std::vector<std::vector<Int>> alcove;
  std::vector<Int> cur(static_cast<size_t>(r));
  enumerate_alcove(r, k, 0, k, cur, alcove);
  std::unique_lock lock(mutex);
  return cache.emplace(std::make_pair(r, k), std::move(alcove)).first->second;
}

Int verlinde_rank(const FusionAlgebra& alg, const std::vector<Weight>& nu) {
  Int sum = 0;
  for (const auto& w : nu) {
    if (w.n() != alg.r) throw std::invalid_argument("verlinde_rank: weight rank mismatch");
    if (!w.dominant() || w.width() > alg.k)
      throw std::invalid_argument("verlinde_rank: weight not dominant of level");
    sum += w.size();
  }
  if (sum % alg.r != 0) return 0;
  const auto& alcove = cached_alcove(alg.r, alg.k);
  Int out = 0;
  if (verlinde_precision() == 0 && verlinde_sum<double>(alg.r, alg.k, alcove, nu, &out)) return out;
  if (verlinde_sum<long double>(alg.r, alg.k, alcove, nu, &out)) return out;
  throw std::runtime_error("verlinde_rank: rounding residue above tolerance at all precisions");
}

Int fusion_rank(Int r, Int k, const std::vector<Weight>& nu) {
  if (nu.empty()) throw std::invalid_argument("fusion_rank: empty weight list");
  Int sum = 0;
  for (const auto& w : nu) {
    if (w.n() != r) throw std::invalid_argument("fusion_rank: weight rank mismatch");
    if (!w.dominant() || w.width() > k) return 0;
    sum += w.size();
  }
  if (sum % r != 0) return 0;
  if (k == 0) {
    for (const auto& w : nu)
      if (!w.is_zero()) return 0;
    return 1;
  }
  // Witten: rank = <sigma_{I(nu^1)},...>_{0,D} on Gr(r, r+k), D = k - sum/r.
  GWQuery q;
  q.r = r;
  q.n = r + k;
  q.d = 0;
  q.D = k - sum / r;
  for (const auto& w : nu)
    q.indices.push_back(partition_to_index(BoxPartition(w.to_partition(), r, k)));
  if (q.indices.size() == 1) {
    // one-point block: rank 1 iff the weight vanishes
    return nu.front().is_zero() ? 1 : 0;
  }
  return gw_generalized(q);
}

Int h0(const LineBundleData& L) {
  {
    std::shared_lock lock(g_h0_mutex);
    auto it = g_h0_cache.find(L);
    if (it != g_h0_cache.end()) return it->second;
  }
  Int exact = 0;
  if (L.level < 0) return 0;
  if (L.level == 0) {
    bool trivial = true;
    for (const auto& w : L.weights) trivial = trivial && w.is_zero();
    exact = trivial ? 1 : 0;
  } else if (L.grade() != 0 || !L.dominant_of_level()) {
    exact = 0;
  } else {
    // shifting preserves both the section count and the alcove bound
    LineBundleData M = L;
    while (M.degN < 0) M = shift_bundle(M, 0, ShiftDirection::forward);
    while (M.degN > 0) M = shift_bundle(M, 0, ShiftDirection::inverse);
    exact = fusion_rank(L.n, L.level, M.weights);
  }
  if (verify_oracles() && L.level > 0) {
    Int oracle = h0_verlinde(L);
    if (oracle != exact)
      throw internal_error("h0 oracle disagreement: exact=" + std::to_string(exact) +
                           " verlinde=" + std::to_string(oracle));
  }
  std::unique_lock lock(g_h0_mutex);
  g_h0_cache.emplace(L, exact);
  return exact;
}

Int h0_verlinde(const LineBundleData& L) {
  if (L.level < 0) return 0;
  if (L.level == 0) {
    for (const auto& w : L.weights)
      if (!w.is_zero()) return 0;
    return 1;
  }
  if (L.grade() != 0 || !L.dominant_of_level()) return 0;
  Int sum = 0;
  for (const auto& w : L.weights) sum += w.size();
  if ((sum + L.level * L.degN) % L.n != 0) return 0;
  LineBundleData M = L;
  while (M.degN < 0) M = shift_bundle(M, 0, ShiftDirection::forward);
  while (M.degN > 0) M = shift_bundle(M, 0, ShiftDirection::inverse);
  for (const auto& w : M.weights)
    if (!w.dominant() || w.width() > L.level) return 0;
  return verlinde_rank(FusionAlgebra(L.n, L.level), M.weights);
}

Int witten_rank(const GWQuery& query) {
  Int total = 0;
  for (const auto& I : query.indices) {
    if (I.n != query.n || I.rank() != query.r)
      throw std::invalid_argument("witten_rank: index shape mismatch");
    total += I.codim();
  }
  if (total != query.r * (query.n - query.r) + query.d * query.n - query.D * query.r) return 0;
  GWQuery q = query;
  while (q.D > 0) shift_query(q, 0);
  while (q.D < 0) unshift_query(q, 0);
  if (q.d < 0) return 0;
  Int k = q.n - q.r;
  std::vector<Weight> nu;
  nu.reserve(q.indices.size());
  for (const auto& I : q.indices)
    nu.push_back(Weight::from_partition(q.r, index_to_partition(I).inner));
  // d-fold level shift of the first weight converts Par_{r,O(-d)} to Par_{r,O}
  for (Int i = 0; i < q.d; ++i) nu[0] = level_shift(nu[0], k);
  for (const auto& w : nu)
    if (!w.dominant() || w.width() > k) return 0;
  return verlinde_rank(FusionAlgebra(q.r, k), nu);
}

void set_verify_oracles(bool on) { g_verify.store(on); }
bool verify_oracles() { return g_verify.load(); }

void set_verlinde_precision(int level) { g_precision.store(level); }
int verlinde_precision() { return g_precision.load(); }

}  // namespace qsc
