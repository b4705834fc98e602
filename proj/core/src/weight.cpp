#include "qsc/weight.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qsc {

Weight::Weight(Int n, std::vector<Int> rows) : n_(n), rows_(std::move(rows)) {
  if (n_ <= 0) throw std::invalid_argument("Weight: n must be positive");
  if (static_cast<Int>(rows_.size()) != n_) throw std::invalid_argument("Weight: wrong row count");
  Int last = rows_.back();
  if (last != 0)
    for (auto& x : rows_) x -= last;
}

Weight Weight::fundamental(Int n, Int b) {
  if (b < 1 || b >= n) throw std::invalid_argument("fundamental: b out of range");
  std::vector<Int> rows(static_cast<size_t>(n), 0);
  for (Int i = 0; i < b; ++i) rows[static_cast<size_t>(i)] = 1;
  return Weight(n, std::move(rows));
}

Weight Weight::from_fundamental(Int n, const std::vector<Int>& coeffs) {
  if (static_cast<Int>(coeffs.size()) != n - 1)
    throw std::invalid_argument("from_fundamental: need n-1 coefficients");
  std::vector<Int> rows(static_cast<size_t>(n), 0);
  for (Int b = 1; b < n; ++b) {
    for (Int i = 0; i < b; ++i) rows[static_cast<size_t>(i)] += coeffs[static_cast<size_t>(b - 1)];
  }
  return Weight(n, std::move(rows));
}

Weight Weight::from_partition(Int n, const Partition& p) {
  if (p.length() > n) throw std::invalid_argument("from_partition: too many rows");
  std::vector<Int> rows(static_cast<size_t>(n), 0);
  for (Int i = 0; i < n; ++i) rows[static_cast<size_t>(i)] = p[i];
  return Weight(n, std::move(rows));
}

Int Weight::size() const { return std::accumulate(rows_.begin(), rows_.end(), Int{0}); }

bool Weight::dominant() const {
  for (size_t i = 0; i + 1 < rows_.size(); ++i)
    if (rows_[i] < rows_[i + 1]) return false;
  return true;
}

bool Weight::is_zero() const {
  return std::all_of(rows_.begin(), rows_.end(), [](Int x) { return x == 0; });
}

std::vector<Int> Weight::fundamental_coeffs() const {
  std::vector<Int> c(static_cast<size_t>(n_ - 1));
  for (Int b = 1; b < n_; ++b)
    c[static_cast<size_t>(b - 1)] = rows_[static_cast<size_t>(b - 1)] - rows_[static_cast<size_t>(b)];
  return c;
}

Partition Weight::to_partition() const {
  if (!dominant()) throw std::invalid_argument("to_partition: weight not dominant");
  return Partition(rows_);
}

Weight Weight::dual() const {
  std::vector<Int> rows(rows_.rbegin(), rows_.rend());
  for (auto& x : rows) x = -x;
  return Weight(n_, std::move(rows));
}

AlcovePoint::AlcovePoint(Int n_, std::vector<Rat> coords_) : n(n_), coords(std::move(coords_)) {
  if (static_cast<Int>(coords.size()) != n) throw std::invalid_argument("AlcovePoint: wrong size");
}

AlcovePoint AlcovePoint::center(Int n) {
  return AlcovePoint(n, std::vector<Rat>(static_cast<size_t>(n), Rat(0)));
}

bool AlcovePoint::in_alcove() const {
  Rat sum(0);
  for (const auto& c : coords) sum += c;
  if (!sum.is_zero()) return false;
  for (size_t i = 0; i + 1 < coords.size(); ++i)
    if (coords[i] < coords[i + 1]) return false;
  return coords.back() >= coords.front() - Rat(1);
}

Int LineBundleData::grade() const {
  Int total = level * degN;
  for (const auto& w : weights) total += w.size();
  Int g = total % n;
  return g < 0 ? g + n : g;
}

bool LineBundleData::dominant_of_level() const {
  for (const auto& w : weights)
    if (!w.dominant() || w.width() > level) return false;
  return true;
}

AlcovePoint kappa(const Weight& w, Int level) {
  if (level <= 0) throw std::invalid_argument("kappa: level must be positive");
  if (!w.dominant() || w.width() > level) throw std::invalid_argument("kappa: weight above level");
  Rat avg(w.size(), w.n() * level);
  std::vector<Rat> coords;
  coords.reserve(static_cast<size_t>(w.n()));
  for (Int k = 0; k < w.n(); ++k) coords.push_back(Rat(w.row(k), level) - avg);
  return AlcovePoint(w.n(), std::move(coords));
}

LineBundleData shift_bundle(const LineBundleData& L, Int point, ShiftDirection dir) {
  if (point < 0 || point >= L.s()) throw std::invalid_argument("shift_bundle: bad point");
  LineBundleData out = L;
  const auto& rows = L.weights[static_cast<size_t>(point)].rows();
  std::vector<Int> next(rows.size());
  Int n = L.n;
  if (dir == ShiftDirection::forward) {
    for (Int a = 0; a + 1 < n; ++a) next[static_cast<size_t>(a)] = rows[static_cast<size_t>(a + 1)];
    next[static_cast<size_t>(n - 1)] = rows[0] - L.level;
    out.degN += 1;
  } else {
    next[0] = rows[static_cast<size_t>(n - 1)] + L.level;
    for (Int a = 1; a < n; ++a) next[static_cast<size_t>(a)] = rows[static_cast<size_t>(a - 1)];
    out.degN -= 1;
  }
  out.weights[static_cast<size_t>(point)] = Weight(n, std::move(next));
  return out;
}

Weight galois_Tm(const Weight& w, Int m) {
  Int n = w.n();
  Int mm = ((m % n) + n) % n;
  if (std::gcd(mm, n) != 1) throw std::invalid_argument("galois_Tm: m not coprime to n");
  auto c = w.fundamental_coeffs();
  std::vector<Int> out(static_cast<size_t>(n - 1), 0);
  for (Int b = 1; b < n; ++b) {
    Int target = (mm * b) % n;
    out[static_cast<size_t>(target - 1)] += c[static_cast<size_t>(b - 1)];
  }
  return Weight::from_fundamental(n, out);
}

LineBundleData normalize_indivisible(const LineBundleData& L) {
  if (L.level <= 0) throw std::invalid_argument("normalize_indivisible: level must be positive");
  if (L.grade() != 0) throw std::invalid_argument("normalize_indivisible: grade must be zero");
  Int g = L.level;
  for (const auto& w : L.weights)
    for (Int x : w.rows()) g = std::gcd(g, x < 0 ? -x : x);
  // largest divisor keeping grade zero: sum|lambda|/k must stay divisible by n
  Int total = 0;
  for (const auto& w : L.weights) total += w.size();
  total += L.level * L.degN;
  for (Int k = g; k >= 1; --k) {
    if (g % k != 0) continue;
    if ((total / k) % L.n != 0) continue;
    if (L.level % k != 0) continue;
    LineBundleData out = L;
    out.level = L.level / k;
    for (auto& w : out.weights) {
      std::vector<Int> rows = w.rows();
      for (auto& x : rows) x /= k;
      w = Weight(L.n, std::move(rows));
    }
    return out;
  }
  return L;
}

LineBundleData vertex_to_bundle_raw(const std::vector<AlcovePoint>& points) {
  if (points.empty()) throw std::invalid_argument("vertex_to_bundle: empty tuple");
  Int n = points.front().n;
  // the row form only needs the differences a_k - a_n cleared; a final
  // scaling restores the grade-zero condition
  Int denom = 1;
  for (const auto& p : points) {
    if (p.n != n) throw std::invalid_argument("vertex_to_bundle: mixed n");
    if (!p.in_alcove()) throw std::invalid_argument("vertex_to_bundle: point outside alcove");
    for (const auto& c : p.coords) denom = std::lcm(denom, (c - p.coords.back()).den());
  }
  Int total = 0;
  std::vector<std::vector<Int>> rows_all;
  for (const auto& p : points) {
    std::vector<Int> rows;
    rows.reserve(static_cast<size_t>(n));
    for (const auto& c : p.coords) rows.push_back(((c - p.coords.back()) * Rat(denom)).num());
    for (Int x : rows) total += x;
    rows_all.push_back(std::move(rows));
  }
  Int scale = n / std::gcd(((total % n) + n) % n == 0 ? n : ((total % n) + n) % n, n);
  LineBundleData L;
  L.n = n;
  L.degN = 0;
  L.level = denom * scale;
  for (auto& rows : rows_all) {
    for (auto& x : rows) x *= scale;
    L.weights.emplace_back(n, std::move(rows));
  }
  if (L.grade() != 0) throw std::logic_error("vertex_to_bundle: grade not zero after clearing");
  return L;
}

LineBundleData vertex_to_bundle(const std::vector<AlcovePoint>& points) {
  return normalize_indivisible(vertex_to_bundle_raw(points));
}

AlcovePoint central_twist(const AlcovePoint& a, Int m) {
  Int n = a.n;
  Int mm = ((m % n) + n) % n;
  if (mm == 0) return a;
  std::vector<Rat> out;
  out.reserve(static_cast<size_t>(n));
  Rat offset(mm, n);
  for (Int i = mm; i < n; ++i) out.push_back(a.coords[static_cast<size_t>(i)] + offset);
  for (Int i = 0; i < mm; ++i) out.push_back(a.coords[static_cast<size_t>(i)] - Rat(1) + offset);
  return AlcovePoint(n, std::move(out));
}

}  // namespace qsc
