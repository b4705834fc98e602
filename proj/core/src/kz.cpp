#include "qsc/kz.hpp"

#include <algorithm>
#include <stdexcept>

#include "qsc/fusion.hpp"

namespace qsc {
namespace {

Rat mod1(const Rat& x) { return x.frac(); }

// cyclic index shift: subtract one from every element, zeros wrap to n
SchubertIndex cyclic_shift(const SchubertIndex& I) {
  std::vector<Int> next;
  next.reserve(I.elems.size());
  for (Int e : I.elems) next.push_back(e == 1 ? I.n : e - 1);
  std::sort(next.begin(), next.end());
  return SchubertIndex(I.n, std::move(next));
}

}  // namespace

Int KZSystem::rank() const {
  std::vector<Weight> all = nu;
  all.push_back(Weight::fundamental(r, 1));
  return fusion_rank(r, k, all);
}

Rat casimir(const Weight& lambda) {
  Int r = lambda.n();
  // (mu, nu) = sum mu_i nu_i - |mu||nu|/r on any row representatives;
  // rho = (r-1, r-2, ..., 0)
  auto pair = [r](const std::vector<Int>& a, const std::vector<Int>& b) {
    Int dot = 0, sa = 0, sb = 0;
    for (Int i = 0; i < r; ++i) {
      dot += a[static_cast<size_t>(i)] * b[static_cast<size_t>(i)];
      sa += a[static_cast<size_t>(i)];
      sb += b[static_cast<size_t>(i)];
    }
    return Rat(dot) - Rat(sa * sb, r);
  };
  std::vector<Int> lam = lambda.rows();
  std::vector<Int> lam2rho = lam;
  for (Int i = 0; i < r; ++i) lam2rho[static_cast<size_t>(i)] += 2 * (r - 1 - i);
  return pair(lam, lam2rho);
}

std::vector<std::pair<Int, Weight>> fuse_with_vector(const Weight& nu, Int k) {
  Int r = nu.n();
  std::vector<std::pair<Int, Weight>> out;
  for (Int j = 1; j <= r; ++j) {
    std::vector<Int> rows = nu.rows();
    rows[static_cast<size_t>(j - 1)] += 1;
    // dominance
    bool ok = true;
    for (Int i = 0; i + 1 < r; ++i)
      if (rows[static_cast<size_t>(i)] < rows[static_cast<size_t>(i + 1)]) ok = false;
    if (!ok) continue;
    // alcove bound after normalization
    if (rows[0] - rows[static_cast<size_t>(r - 1)] > k) continue;
    out.emplace_back(j, Weight(r, std::move(rows)));
  }
  return out;
}

LocalExponentTable kz_exponents(const KZSystem& sys) {
  Int r = sys.r, k = sys.k, t = r + k;
  LocalExponentTable table;
  table.rank = sys.rank();
  table.at_infinity = casimir(Weight::fundamental(r, 1)) / Rat(t);
  table.finite.resize(static_cast<size_t>(sys.s()));
  if (table.rank == 0) return table;
  Weight omega1 = Weight::fundamental(r, 1);
  for (Int i = 0; i < sys.s(); ++i) {
    const Weight& nui = sys.nu[static_cast<size_t>(i)];
    for (const auto& [j, gamma] : fuse_with_vector(nui, k)) {
      // multiplicity: block of the remaining finite weights with gamma
      std::vector<Weight> rest;
      for (Int a = 0; a < sys.s(); ++a)
        if (a != i) rest.push_back(sys.nu[static_cast<size_t>(a)]);
      rest.push_back(gamma);
      Int mult = fusion_rank(r, k, rest);
      if (mult == 0) continue;
      Rat expo = (casimir(gamma) - casimir(nui) - casimir(omega1)) / Rat(2 * t);
      table.finite[static_cast<size_t>(i)][expo] += mult;
    }
    Int total = 0;
    for (const auto& [e, m] : table.finite[static_cast<size_t>(i)]) total += m;
    if (total != table.rank)
      throw internal_error("kz_exponents: multiplicities do not sum to the rank");
  }
  return table;
}

bool match_strange_dual(const CycleData& cycle) {
  if (cycle.codim() != 1) throw std::invalid_argument("match_strange_dual: codim must be 1");
  if (cycle.D != 0) throw std::invalid_argument("match_strange_dual: needs N = O");
  if (cycle.d < 0) throw std::invalid_argument("match_strange_dual: needs d >= 0");
  if (cycle.r < 2) throw std::invalid_argument("match_strange_dual: needs subbundle rank >= 2");
  Int n = cycle.n, r = cycle.r, k = n - r, s = cycle.s();

  // shift the cycle at the first point until its degree vanishes; t records
  // the total twist j^1_m (mod n via the n-fold identity)
  Int m = ((cycle.d % r) + r) % r;
  Int t = m == 0 ? 0 : cycle.J[0].elems[static_cast<size_t>(m - 1)];
  CycleData shifted = cycle;
  Int d0 = cycle.d;
  for (Int step = 0; step < t; ++step) {
    if (shifted.J[0].contains(1)) d0 -= 1;
    shifted.J[0] = cyclic_shift(shifted.J[0]);
  }
  shifted.d = d0;
  shifted.D = -t;
  while (shifted.d > 0) {  // strip r-fold residues by the n-fold identity
    shifted.d -= r;
    shifted.D -= n;
    t += n;
  }
  if (shifted.d != 0) throw internal_error("match_strange_dual: degree reduction failed");

  // (L2): the strange-dual family from the shifted divisor class
  LineBundleData L = divisor_class(shifted);
  Int ell = L.level;
  if (ell <= 0) return false;

  // (L1): KZ data for sl_r at level k with the duals of lambda(K^i)
  KZSystem sys;
  sys.r = r;
  sys.k = k;
  std::vector<Int> musizes(static_cast<size_t>(s), 0);
  for (Int i = 0; i < s; ++i) {
    Partition mu = index_to_partition(shifted.J[static_cast<size_t>(i)]).inner;
    musizes[static_cast<size_t>(i)] = mu.size();
    sys.nu.push_back(Weight::from_partition(r, mu).dual());
  }
  if (sys.rank() != ell) return false;

  LocalExponentTable kz = kz_exponents(sys);

  // compare per finite point: twisted KZ exponents vs (b - [i==0]*t)/n
  Int total_mu = 0;
  for (Int i = 0; i < s; ++i) total_mu += musizes[static_cast<size_t>(i)];
  for (Int i = 0; i < s; ++i) {
    std::map<Rat, Int> kz_side;
    Rat twist = Rat(-musizes[static_cast<size_t>(i)], r * n);
    for (const auto& [e, mult] : kz.finite[static_cast<size_t>(i)])
      kz_side[mod1(e + twist)] += mult;
    // the shifted weights already absorb the zeta^{-t} twist at the first
    // point, so the dual side reads off the transposed exponents directly
    std::map<Rat, Int> dual_side;
    const Weight& w = L.weights[static_cast<size_t>(i)];
    auto coeffs = w.fundamental_coeffs();
    Int used = 0;
    for (Int b = 1; b < n; ++b) {
      Int c = coeffs[static_cast<size_t>(b - 1)];
      if (c == 0) continue;
      used += c;
      dual_side[mod1(Rat(b, n))] += c;
    }
    if (ell - used > 0) dual_side[Rat(0)] += ell - used;
    if (kz_side != dual_side) return false;
  }
  // infinity: central with exponent (r^2-1)/(rn) + sum|mu^i|/(rn), matching
  // the twist exponent t/n
  Rat inf = (Rat(r * r - 1, r) + Rat(total_mu, r)) / Rat(n);
  if (mod1(inf) != mod1(Rat(t, n))) return false;

  // multiplicity identity: c_i^b = rk V_{..., gamma} for the matched gamma,
  // pairing b = (r+1-j)-th smallest element of K^i
  for (Int i = 0; i < s; ++i) {
    const auto& K = shifted.J[static_cast<size_t>(i)];
    auto coeffs = L.weights[static_cast<size_t>(i)].fundamental_coeffs();
    Int used = 0;
    for (Int b = 1; b < n; ++b) used += coeffs[static_cast<size_t>(b - 1)];
    auto fusions = fuse_with_vector(sys.nu[static_cast<size_t>(i)], k);
    for (Int j = 1; j <= r; ++j) {
      Int b = K.elems[static_cast<size_t>(r - j)];  // k^i_{r+1-j}
      Int cb = b == n ? ell - used : coeffs[static_cast<size_t>(b - 1)];
      Int mult = 0;
      for (const auto& [jj, gamma] : fusions) {
        if (jj != j) continue;
        std::vector<Weight> rest;
        for (Int a = 0; a < s; ++a)
          if (a != i) rest.push_back(sys.nu[static_cast<size_t>(a)]);
        rest.push_back(gamma);
        mult = fusion_rank(r, k, rest);
      }
      if (cb != mult) return false;
    }
  }
  return true;
}

}  // namespace qsc
