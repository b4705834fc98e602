#include "qsc/qschubert.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace qsc {

Int QClass::coefficient(const Partition& p, Int degree) const {
  auto it = terms_.find({p, degree});
  return it == terms_.end() ? 0 : it->second;
}

void QClass::add(const Partition& p, Int degree, Int c) {
  if (c == 0) return;
  auto key = Key{p, degree};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

GrassmannianRing::GrassmannianRing(Int r, Int n) : r_(r), n_(n) {
  if (!(0 < r && r < n)) throw std::invalid_argument("GrassmannianRing: need 0 < r < n");
}

std::vector<Partition> GrassmannianRing::basis() const {
  std::vector<Partition> out;
  std::vector<Int> cur(static_cast<size_t>(r_), 0);
  // lexicographic enumeration of partitions in the r x (n-r) box
  auto rec = [&](auto&& self, Int row, Int maxval) -> void {
    if (row == r_) {
      out.emplace_back(cur);
      return;
    }
    for (Int v = 0; v <= maxval; ++v) {
      cur[static_cast<size_t>(row)] = v;
      self(self, row + 1, v);
    }
    cur[static_cast<size_t>(row)] = 0;
  };
  rec(rec, 0, n_ - r_);
  return out;
}

QClass GrassmannianRing::unit() const {
  QClass c(this);
  c.add(Partition{}, 0, 1);
  return c;
}

QClass GrassmannianRing::schubert(const Partition& p) const {
  if (!p.fits(r_, n_ - r_)) throw std::invalid_argument("schubert: partition exceeds box");
  QClass c(this);
  c.add(p, 0, 1);
  return c;
}

QClass GrassmannianRing::schubert(const SchubertIndex& I) const {
  if (I.n != n_ || I.rank() != r_) throw std::invalid_argument("schubert: index/ring mismatch");
  return schubert(index_to_partition(I).inner);
}

// Beta-number reduction: beta_a = p_a + r - a must become a permutation of
// distinct residues mod n; each removed n-rim-hook contributes height-sign
// (-1)^{r - ht}, so the accumulated sign is (-1)^{d(r-1)} times the sign of
// the sorting permutation of the residues.
std::optional<GrassmannianRing::Reduction> GrassmannianRing::reduce(const Partition& p) const {
  if (p.length() > r_) return std::nullopt;
  std::vector<Int> res(static_cast<size_t>(r_));
  Int hooks = 0;
  for (Int a = 0; a < r_; ++a) {
    Int beta = p[a] + r_ - 1 - a;
    res[static_cast<size_t>(a)] = beta % n_;
    hooks += beta / n_;
  }
  Int sign = (hooks * (r_ - 1)) % 2 == 0 ? 1 : -1;
  // sort residues strictly decreasing, tracking permutation parity
  for (size_t i = 0; i < res.size(); ++i) {
    for (size_t j = i + 1; j < res.size(); ++j) {
      if (res[j] == res[i]) return std::nullopt;
      if (res[j] > res[i]) {
        std::swap(res[i], res[j]);
        sign = -sign;
      }
    }
  }
  std::vector<Int> parts(static_cast<size_t>(r_));
  for (Int a = 0; a < r_; ++a) {
    parts[static_cast<size_t>(a)] = res[static_cast<size_t>(a)] - (r_ - 1 - a);
    if (parts[static_cast<size_t>(a)] < 0) throw std::logic_error("rim-hook reduce: negative part");
  }
  return Reduction{Partition(std::move(parts)), hooks, sign};
}

QClass GrassmannianRing::product(const QClass& a, const QClass& b) const {
  if ((a.ring() && a.ring() != this) || (b.ring() && b.ring() != this))
    throw std::invalid_argument("product: ring mismatch");
  QClass out(this);
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      const auto& expansion = lr_expand(r_, ka.first, kb.first);
      for (const auto& [rho, c] : expansion) {
        auto red = reduce(rho);
        if (!red) continue;
        out.add(red->box, ka.second + kb.second + red->hooks, red->sign * c * ca * cb);
      }
    }
  }
  for (const auto& [k, c] : out.terms()) {
    if (c < 0) throw std::logic_error("quantum product: negative structure constant");
  }
  return out;
}

QClass GrassmannianRing::fold(const std::vector<Partition>& classes, size_t lo, size_t hi) const {
  if (hi - lo == 1) return schubert(classes[lo]);
  size_t mid = lo + (hi - lo) / 2;
  return product(fold(classes, lo, mid), fold(classes, mid, hi));
}

Int GrassmannianRing::gw(const std::vector<Partition>& classes, Int d) const {
  if (classes.size() < 2) throw std::invalid_argument("gw: need at least two classes");
  if (d < 0) return 0;
  Int total = 0;
  for (const auto& p : classes) {
    if (!p.fits(r_, n_ - r_)) throw std::invalid_argument("gw: class exceeds box");
    total += p.size();
  }
  if (total != d * n_ + dim()) return 0;
  // pair the product of all but the last against the dual of the last
  std::vector<Partition> head(classes.begin(), classes.end() - 1);
  QClass prod = fold(head, 0, head.size());
  BoxPartition dual = complement_in_box(BoxPartition(classes.back(), r_, n_ - r_));
  return prod.coefficient(dual.inner, d);
}

const GrassmannianRing& ring(Int r, Int n) {
  static std::mutex mutex;
  static std::map<std::pair<Int, Int>, std::unique_ptr<GrassmannianRing>> rings;
  std::lock_guard lock(mutex);
  auto& slot = rings[{r, n}];
  if (!slot) slot = std::make_unique<GrassmannianRing>(r, n);
  return *slot;
}

Int gw_invariant(Int r, Int n, const std::vector<SchubertIndex>& indices, Int d) {
  if (indices.size() < 2) throw std::invalid_argument("gw_invariant: need s >= 2");
  if (d < 0) return 0;
  std::vector<Partition> classes;
  classes.reserve(indices.size());
  for (const auto& I : indices) {
    if (I.n != n || I.rank() != r) throw std::invalid_argument("gw_invariant: index shape mismatch");
    classes.push_back(index_to_partition(I).inner);
  }
  // Grassmann duality Gr(r,n) = Gr(n-r,n) transposes the classes and keeps
  // degrees; computing on the side with fewer rows keeps the classical
  // expansions small
  if (r > n - r) {
    for (auto& p : classes) p = transpose_in_box(BoxPartition(p, r, n - r)).inner;
    return ring(n - r, n).gw(classes, d);
  }
  return ring(r, n).gw(classes, d);
}

void shift_query(GWQuery& q, size_t at) {
  auto& I = q.indices.at(at);
  std::vector<Int> next;
  next.reserve(I.elems.size());
  bool wrapped = false;
  for (Int e : I.elems) {
    if (e == 1) {
      wrapped = true;
      next.push_back(q.n);
    } else {
      next.push_back(e - 1);
    }
  }
  std::sort(next.begin(), next.end());
  I = SchubertIndex(q.n, std::move(next));
  if (wrapped) q.d -= 1;
  q.D -= 1;
}

void unshift_query(GWQuery& q, size_t at) {
  auto& I = q.indices.at(at);
  std::vector<Int> next;
  next.reserve(I.elems.size());
  bool wrapped = false;
  for (Int e : I.elems) {
    if (e == q.n) {
      wrapped = true;
      next.push_back(1);
    } else {
      next.push_back(e + 1);
    }
  }
  std::sort(next.begin(), next.end());
  I = SchubertIndex(q.n, std::move(next));
  if (wrapped) q.d += 1;
  q.D += 1;
}

Int gw_generalized(const GWQuery& query) {
  if (query.indices.size() < 2) throw std::invalid_argument("gw_generalized: need s >= 2");
  Int total = 0;
  for (const auto& I : query.indices) {
    if (I.n != query.n || I.rank() != query.r)
      throw std::invalid_argument("gw_generalized: index shape mismatch");
    total += I.codim();
  }
  if (total != query.r * (query.n - query.r) + query.d * query.n - query.D * query.r) return 0;
  GWQuery q = query;
  while (q.D > 0) shift_query(q, 0);
  while (q.D < 0) unshift_query(q, 0);
  if (q.d < 0) return 0;
  return gw_invariant(q.r, q.n, q.indices, q.d);
}

}  // namespace qsc
