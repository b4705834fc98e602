#include "qsc/divisor.hpp"

#include <algorithm>
#include <stdexcept>

#include "qsc/fusion.hpp"

namespace qsc {
namespace {

std::vector<Int> swap_element(const std::vector<Int>& elems, Int out, Int in) {
  std::vector<Int> next;
  next.reserve(elems.size());
  for (Int e : elems)
    if (e != out) next.push_back(e);
  next.push_back(in);
  std::sort(next.begin(), next.end());
  return next;
}

}  // namespace

Int CycleData::codim() const {
  Int total = 0;
  for (const auto& I : J) total += I.codim();
  return total - (d * n - D * r + r * (n - r));
}

Int FaceData::gw() const {
  GWQuery q{r, n, d, D, I};
  return gw_generalized(q);
}

bool ConjClassTuple::det_condition() const {
  Int total = 0;
  for (const auto& c : classes) total += c.size();
  return total % n == 0;
}

void ConjClassTuple::validate() const {
  if (rank <= 0 || n <= 0) throw std::invalid_argument("ConjClassTuple: bad rank/n");
  for (const auto& c : classes) {
    if (c.length() > rank || c[0] >= n)
      throw std::invalid_argument("ConjClassTuple: exponents outside the rank x n box");
  }
  if (!det_condition()) throw std::invalid_argument("ConjClassTuple: determinant condition fails");
}

Int ConjClassTuple::multiplicity(Int i, Int e) const {
  const auto& c = classes[static_cast<size_t>(i)];
  Int count = 0;
  for (Int j = 0; j < rank; ++j)
    if (c[j] == e) ++count;
  return count;
}

LineBundleData divisor_class(const CycleData& c) {
  if (c.codim() != 1) throw std::invalid_argument("divisor_class: codimension must be 1");
  Int n = c.n, r = c.r;

  // level: append {1, n-r+1, ..., n-1} and raise the degree by one
  std::vector<Int> extra{1};
  for (Int v = n - r + 1; v <= n - 1; ++v) extra.push_back(v);
  GWQuery lq{r, n, c.d + 1, c.D, c.J};
  lq.indices.emplace_back(n, extra);
  Int level = gw_generalized(lq);

  LineBundleData out;
  out.n = n;
  out.degN = -c.D;
  out.level = level;
  for (Int i = 0; i < c.s(); ++i) {
    const auto& Ji = c.J[static_cast<size_t>(i)];
    std::vector<Int> coeffs(static_cast<size_t>(n - 1), 0);
    Int used = 0;
    for (Int b = 1; b <= n - 1; ++b) {
      if (!Ji.contains(b) || Ji.contains(b + 1)) continue;
      GWQuery q{r, n, c.d, c.D, c.J};
      q.indices[static_cast<size_t>(i)] = SchubertIndex(n, swap_element(Ji.elems, b, b + 1));
      coeffs[static_cast<size_t>(b - 1)] = gw_generalized(q);
      used += coeffs[static_cast<size_t>(b - 1)];
    }
    // eigenvalue-1 slack via the 1 <-> n swap at degree d+1
    Int slack = 0;
    if (!Ji.contains(1) && Ji.contains(n)) {
      GWQuery q{r, n, c.d + 1, c.D, c.J};
      q.indices[static_cast<size_t>(i)] = SchubertIndex(n, swap_element(Ji.elems, n, 1));
      slack = gw_generalized(q);
    }
    if (used + slack != level)
      throw internal_error("divisor_class: slack route disagrees with the level");
    // consistency (C): adjacent coefficients cannot both be nonzero
    for (Int b = 1; b <= n - 2; ++b)
      if (coeffs[static_cast<size_t>(b - 1)] != 0 && coeffs[static_cast<size_t>(b)] != 0)
        throw internal_error("divisor_class: adjacent fundamental coefficients");
    // consistency (D): nonzero boundary coefficient forces zero slack
    if ((coeffs[0] != 0 || coeffs[static_cast<size_t>(n - 2)] != 0) && slack != 0)
      throw internal_error("divisor_class: boundary coefficient with nonzero slack");
    out.weights.push_back(Weight::from_fundamental(n, coeffs));
  }
  return out;
}

bool daj_admissible(const FaceData& f, Int a, Int j) {
  if (j < 0 || j >= f.s()) return false;
  const auto& Ij = f.I[static_cast<size_t>(j)];
  if (a > 1) return Ij.contains(a) && !Ij.contains(a - 1);
  if (a == 1) return Ij.contains(1) && !Ij.contains(f.n);
  return false;
}

std::pair<CycleData, LineBundleData> build_Daj(const FaceData& f, Int a, Int j) {
  if (!daj_admissible(f, a, j)) throw std::invalid_argument("build_Daj: inadmissible (a, j)");
  CycleData c;
  c.r = f.r;
  c.n = f.n;
  c.D = f.D;
  c.J = f.I;
  const auto& Ij = f.I[static_cast<size_t>(j)];
  if (a > 1) {
    c.d = f.d;
    c.J[static_cast<size_t>(j)] = SchubertIndex(f.n, swap_element(Ij.elems, a, a - 1));
  } else {
    c.d = f.d - 1;
    c.J[static_cast<size_t>(j)] = SchubertIndex(f.n, swap_element(Ij.elems, 1, f.n));
  }
  LineBundleData L = divisor_class(c);
  auto [lhs, rhs] = face_pairing(f, L);
  if (lhs != rhs) throw internal_error("build_Daj: class does not lie on the face");
  return {c, L};
}

ConjClassTuple bundle_to_classes(const LineBundleData& L) {
  ConjClassTuple A;
  A.rank = L.level;
  A.n = L.n;
  for (const auto& w : L.weights) {
    BoxPartition t = transpose_in_box(BoxPartition(w.to_partition(), L.n, L.level));
    A.classes.push_back(t.inner);
  }
  return A;
}

ConjClassTuple rigid_from_face(const FaceData& f, Int a, Int j) {
  auto [cycle, L] = build_Daj(f, a, j);
  ConjClassTuple A = bundle_to_classes(L);
  A.validate();
  // rigidity count: sum of squared multiplicities = (s-2) l^2 + 2
  Int lhs = 0;
  for (Int i = 0; i < A.s(); ++i)
    for (Int e = 0; e < A.n; ++e) {
      Int m = A.multiplicity(i, e);
      lhs += m * m;
    }
  Int rhs = (A.s() - 2) * A.rank * A.rank + 2;
  if (lhs != rhs) throw internal_error("rigid_from_face: rigidity equation fails");
  return A;
}

void enumerate_codim1_cycles(Int n, Int s, std::optional<Int> d_max,
                             const std::function<void(const CycleData&)>& sink) {
  if (n < 2 || s < 2) throw std::invalid_argument("enumerate_codim1_cycles: bad bounds");
  for (Int r = 1; r < n; ++r) {
    Int dim = r * (n - r);
    Int bound = ((s - 1) * dim - 1) / n;
    if (d_max) bound = std::min(bound, *d_max);
    for (Int d = -1; d <= bound; ++d) {
      Int target = d * n + dim + 1;  // required total codimension
      if (target < 0 || target > s * dim) continue;
      std::vector<SchubertIndex> idx;
      std::vector<Int> cur;
      auto gen = [&](auto&& self, Int next) -> void {
        if (static_cast<Int>(cur.size()) == r) {
          idx.emplace_back(n, cur);
          return;
        }
        for (Int v = next; v <= n; ++v) {
          cur.push_back(v);
          self(self, v + 1);
          cur.pop_back();
        }
      };
      gen(gen, 1);
      std::vector<Int> codims;
      codims.reserve(idx.size());
      for (const auto& I : idx) codims.push_back(I.codim());
      std::vector<size_t> pick(static_cast<size_t>(s), 0);
      auto rec = [&](auto&& self, Int pos, Int have) -> void {
        if (have > target) return;
        if (pos == s) {
          if (have != target) return;
          CycleData c;
          c.d = d;
          c.r = r;
          c.n = n;
          c.D = 0;
          for (Int i = 0; i < s; ++i) c.J.push_back(idx[pick[static_cast<size_t>(i)]]);
          sink(c);
          return;
        }
        for (size_t k = 0; k < idx.size(); ++k) {
          pick[static_cast<size_t>(pos)] = k;
          self(self, pos + 1, have + codims[k]);
        }
      };
      rec(rec, 0, 0);
    }
  }
}

std::pair<Rat, Rat> face_pairing(const FaceData& f, const LineBundleData& L) {
  if (f.n != L.n || f.s() != L.s()) throw std::invalid_argument("face_pairing: shape mismatch");
  if (L.level <= 0) throw std::invalid_argument("face_pairing: level must be positive");
  Int sizes = 0;
  Int picked = 0;
  for (Int j = 0; j < f.s(); ++j) {
    const auto& w = L.weights[static_cast<size_t>(j)];
    sizes += w.size();
    for (Int k : f.I[static_cast<size_t>(j)].elems) picked += w.row(k - 1);
  }
  Rat lhs = (Rat(-f.d) + Rat(picked, L.level)) / Rat(f.r);
  Rat rhs = (Rat(-f.D) + Rat(sizes, L.level)) / Rat(f.n);
  return {lhs, rhs};
}

}  // namespace qsc
