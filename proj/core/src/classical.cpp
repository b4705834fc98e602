#include "qsc/classical.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "qsc/fusion.hpp"

namespace qsc {
namespace {

std::vector<Rat> sorted_fracs(const std::vector<Rat>& xs) {
  std::vector<Rat> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(x.frac());
  std::sort(out.begin(), out.end());
  return out;
}

bool strictly_interlaced(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  // a_1 < b_1 < a_2 < b_2 < ...
  for (size_t i = 0; i < a.size(); ++i) {
    if (!(a[i] < b[i])) return false;
    if (i + 1 < a.size() && !(b[i] < a[i + 1])) return false;
  }
  return true;
}

Int common_order(const std::vector<Rat>& xs) {
  Int n = 1;
  for (const auto& x : xs) n = std::lcm(n, x.den());
  return n;
}

}  // namespace

void HypergeomData::validate() const {
  if (alpha.empty() || alpha.size() != beta.size())
    throw std::invalid_argument("HypergeomData: need matching nonempty alpha, beta");
}

bool HypergeomData::irreducible() const {
  for (const auto& a : alpha)
    for (const auto& b : beta)
      if ((a - b).is_integer()) return false;
  return true;
}

Rat PochhammerData::rho_prime() const {
  Rat total(0);
  for (const auto& l : lambda) total += l;
  return total - Rat(rank() - 1) * rho;
}

bool PochhammerData::irreducible() const {
  if (rho.is_integer() || rho_prime().is_integer()) return false;
  for (const auto& l : lambda)
    if ((l - rho).is_integer()) return false;
  return true;
}

bool hypergeom_unitary(const HypergeomData& h) {
  h.validate();
  auto a = sorted_fracs(h.alpha);
  auto b = sorted_fracs(h.beta);
  return strictly_interlaced(a, b) || strictly_interlaced(b, a);
}

bool pochhammer_unitary(const PochhammerData& p) {
  if (p.rank() < 2) throw std::invalid_argument("pochhammer_unitary: rank must exceed one");
  if (!p.irreducible())
    throw std::invalid_argument("pochhammer_unitary: irreducibility precondition fails");
  Rat r = p.rho.frac();
  Rat sum(0);
  bool all_above = true, all_below = true;
  for (const auto& l : p.lambda) {
    Rat f = l.frac();
    sum += f;
    if (!(r < f)) all_above = false;
    if (!(r > f)) all_below = false;
  }
  Int ell = p.rank();
  if (all_above && sum < Rat(ell - 1) * r + Rat(1)) return true;
  if (all_below && Rat(ell - 1) * r < sum) return true;
  return false;
}

LocalExponentTable hypergeom_exponents(const HypergeomData& h) {
  h.validate();
  LocalExponentTable table;
  table.rank = h.rank();
  table.finite.resize(3);
  for (const auto& b : h.beta) table.finite[0][Rat(1) - b] += 1;  // z = 0
  Rat last(-1);
  for (size_t i = 0; i < h.alpha.size(); ++i) last += h.beta[i] - h.alpha[i];
  for (Int i = 0; i + 1 < h.rank(); ++i) table.finite[1][Rat(i)] += 1;  // z = 1
  table.finite[1][last] += 1;
  for (const auto& a : h.alpha) table.finite[2][a] += 1;  // z = infinity
  table.at_infinity = Rat(0);
  return table;
}

ConjClassTuple hypergeom_classes(const HypergeomData& h) {
  h.validate();
  std::vector<Rat> all = h.alpha;
  all.insert(all.end(), h.beta.begin(), h.beta.end());
  Int n = common_order(all);
  ConjClassTuple A;
  A.rank = h.rank();
  A.n = n;
  auto to_class = [&](const std::vector<Rat>& exps) {
    std::vector<Int> e;
    e.reserve(exps.size());
    for (const auto& x : exps) e.push_back((x.frac() * Rat(n)).num());
    std::sort(e.rbegin(), e.rend());
    return Partition(std::move(e));
  };
  // classes at 1, 0, infinity: exponents sum(beta-alpha), -beta_i, alpha_i
  std::vector<Rat> at1(static_cast<size_t>(h.rank() - 1), Rat(0));
  Rat m(0);
  for (size_t i = 0; i < h.alpha.size(); ++i) m += h.beta[i] - h.alpha[i];
  at1.push_back(m);
  std::vector<Rat> at0;
  for (const auto& b : h.beta) at0.push_back(-b);
  A.classes = {to_class(at1), to_class(at0), to_class(h.alpha)};
  if (!A.det_condition()) throw internal_error("hypergeom_classes: determinant condition fails");
  return A;
}

HypergeomData hypergeom_katz_lower(const HypergeomData& h) {
  h.validate();
  if (h.rank() < 2) throw std::invalid_argument("hypergeom_katz_lower: rank already one");
  if (!hypergeom_unitary(h)) throw std::invalid_argument("hypergeom_katz_lower: input not unitary");
  std::vector<Rat> all = h.alpha;
  all.insert(all.end(), h.beta.begin(), h.beta.end());
  Int n = common_order(all);
  Int ell = h.rank();

  // integer exponents of the three classes; the normal form needs the
  // eigenvalue 1 on one of the 0/infinity classes, the other interlacing it
  auto exps = [&](const std::vector<Rat>& xs, bool negate) {
    std::vector<Int> e;
    for (const auto& x : xs) {
      Rat f = (negate ? -x : x).frac();
      e.push_back((f * Rat(n)).num());
    }
    std::sort(e.begin(), e.end());
    return e;
  };
  // try both 0/infinity arrangements and all central twists (0, -e, +e)
  // moving an eigenvalue of the p2 slot to 1
  for (int arrangement = 0; arrangement < 2; ++arrangement) {
    std::vector<Int> p2_raw = arrangement == 0 ? exps(h.beta, true) : exps(h.alpha, false);
    std::vector<Int> p3_raw = arrangement == 0 ? exps(h.alpha, false) : exps(h.beta, true);
    for (Int e : p2_raw) {
      std::vector<Int> p2, p3;
      for (Int x : p2_raw) p2.push_back(((x - e) % n + n) % n);
      for (Int x : p3_raw) p3.push_back(((x + e) % n + n) % n);
      std::sort(p2.begin(), p2.end());
      std::sort(p3.begin(), p3.end());
      if (p2.front() != 0 || (p2.size() > 1 && p2[1] == 0)) continue;
      // a_2 <= ... <= a_l are the negated nonzero exponents of p2
      std::vector<Int> a;
      for (size_t i = 1; i < p2.size(); ++i) a.push_back(n - p2[p2.size() - i]);
      std::sort(a.begin(), a.end());
      std::vector<Int> b = p3;
      // interlacing normal form 0 < b_1 < a_2 < b_2 < ... < a_l < b_l < n
      bool ok = b.front() > 0;
      for (size_t i = 0; i + 1 < b.size() && ok; ++i)
        ok = b[i] < a[i] && a[i] < b[i + 1];
      if (ok) ok = b.back() < n;
      if (!ok) continue;
      // lowered system: drop b_1, keep a as the new betas, b_2.. as alphas
      HypergeomData out;
      for (size_t i = 1; i < b.size(); ++i)
        out.alpha.push_back(arrangement == 0 ? Rat(b[i], n) : Rat(((n - b[i]) % n), n));
      for (size_t i = 0; i < a.size(); ++i)
        out.beta.push_back(arrangement == 0 ? Rat(a[i], n) : Rat(((n - a[i]) % n), n));
      if (arrangement == 1) std::swap(out.alpha, out.beta);
      if (static_cast<Int>(out.alpha.size()) != ell - 1)
        throw internal_error("hypergeom_katz_lower: rank bookkeeping failed");
      if (ell > 2 && !hypergeom_unitary(out))
        throw internal_error("hypergeom_katz_lower: output lost unitarity");
      return out;
    }
  }
  throw std::invalid_argument("hypergeom_katz_lower: no interlacing normal form");
}

}  // namespace qsc
