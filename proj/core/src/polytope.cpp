#include "qsc/polytope.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "qsc/fusion.hpp"

namespace qsc {
namespace {

std::atomic<Int> g_threads{1};

// rank of a rational matrix by Gaussian elimination
Int rational_rank(std::vector<std::vector<Rat>> m) {
  Int rows = static_cast<Int>(m.size());
  if (rows == 0) return 0;
  Int cols = static_cast<Int>(m[0].size());
  Int rank = 0;
  for (Int c = 0; c < cols && rank < rows; ++c) {
    Int piv = -1;
    for (Int r = rank; r < rows; ++r)
      if (!m[static_cast<size_t>(r)][static_cast<size_t>(c)].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[static_cast<size_t>(piv)], m[static_cast<size_t>(rank)]);
    Rat d = m[static_cast<size_t>(rank)][static_cast<size_t>(c)];
    for (Int r = rank + 1; r < rows; ++r) {
      Rat f = m[static_cast<size_t>(r)][static_cast<size_t>(c)] / d;
      if (f.is_zero()) continue;
      for (Int c2 = c; c2 < cols; ++c2)
        m[static_cast<size_t>(r)][static_cast<size_t>(c2)] -=
            f * m[static_cast<size_t>(rank)][static_cast<size_t>(c2)];
    }
    ++rank;
  }
  return rank;
}

std::vector<std::vector<Rat>> wall_normals(Int n, Int s, std::vector<Rat>* rhs_out) {
  // per point: n-1 order walls a_i >= a_{i+1} as -(a_i - a_{i+1}) <= 0,
  // plus the affine wall a_1 - a_n <= 1
  std::vector<std::vector<Rat>> rows;
  for (Int j = 0; j < s; ++j) {
    for (Int i = 0; i + 1 < n; ++i) {
      std::vector<Rat> row(static_cast<size_t>(s * n), Rat(0));
      row[static_cast<size_t>(j * n + i)] = Rat(-1);
      row[static_cast<size_t>(j * n + i + 1)] = Rat(1);
      rows.push_back(std::move(row));
      if (rhs_out) rhs_out->push_back(Rat(0));
    }
    std::vector<Rat> wrap(static_cast<size_t>(s * n), Rat(0));
    wrap[static_cast<size_t>(j * n)] = Rat(1);
    wrap[static_cast<size_t>(j * n + n - 1)] = Rat(-1);
    rows.push_back(std::move(wrap));
    if (rhs_out) rhs_out->push_back(Rat(1));
  }
  return rows;
}

struct FacetKey {
  Int n, s;
  friend auto operator<=>(const FacetKey&, const FacetKey&) = default;
};
std::mutex g_facet_mutex;
std::map<FacetKey, std::vector<Facet>> g_facet_cache;

// enumerate all r-subsets of [n]
std::vector<SchubertIndex> all_indices(Int n, Int r) {
  std::vector<SchubertIndex> out;
  std::vector<Int> cur;
  auto gen = [&](auto&& self, Int next) -> void {
    if (static_cast<Int>(cur.size()) == r) {
      out.emplace_back(n, cur);
      return;
    }
    for (Int v = next; v <= n; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  gen(gen, 1);
  return out;
}

Facet make_regular_facet(const FaceData& f) {
  Facet out;
  out.regular = true;
  out.face = f;
  out.normal.assign(static_cast<size_t>(f.s()), std::vector<Rat>(static_cast<size_t>(f.n), Rat(0)));
  for (Int j = 0; j < f.s(); ++j)
    for (Int k : f.I[static_cast<size_t>(j)].elems)
      out.normal[static_cast<size_t>(j)][static_cast<size_t>(k - 1)] = Rat(1);
  out.rhs = Rat(f.d);
  return out;
}

bool strict_practical_inequality(const CycleData& c, const LineBundleData& L) {
  // sum_i sum_{k in J^i} lambda^i_k > d*l + sum_i r |lambda^i| / n, scaled by n
  Int picked = 0, sizes = 0;
  for (Int i = 0; i < c.s(); ++i) {
    const auto& w = L.weights[static_cast<size_t>(i)];
    sizes += w.size();
    for (Int k : c.J[static_cast<size_t>(i)].elems) picked += w.row(k - 1);
  }
  return picked * c.n > c.d * L.level * c.n + c.r * sizes;
}

}  // namespace

Rat Facet::eval(const std::vector<AlcovePoint>& pts) const {
  Rat total(0);
  for (size_t j = 0; j < normal.size(); ++j)
    for (size_t k = 0; k < normal[j].size(); ++k)
      total += normal[j][k] * pts[j].coords[k];
  return total;
}

void set_scan_threads(Int t) { g_threads.store(std::max<Int>(1, t)); }
Int scan_threads() { return g_threads.load(); }

std::vector<Facet> facets(Int n, Int s, std::optional<Int> d_max) {
  if (n < 2 || s < 2) throw std::invalid_argument("facets: need n >= 2, s >= 2");
  if (!d_max) {
    std::lock_guard lock(g_facet_mutex);
    auto it = g_facet_cache.find({n, s});
    if (it != g_facet_cache.end()) return it->second;
  }
  std::vector<Facet> out;
  // alcove walls, flagged non-regular
  std::vector<Rat> rhs;
  auto walls = wall_normals(n, s, &rhs);
  for (size_t w = 0; w < walls.size(); ++w) {
    Facet f;
    f.regular = false;
    f.normal.assign(static_cast<size_t>(s), std::vector<Rat>(static_cast<size_t>(n), Rat(0)));
    for (Int j = 0; j < s; ++j)
      for (Int k = 0; k < n; ++k)
        f.normal[static_cast<size_t>(j)][static_cast<size_t>(k)] = walls[w][static_cast<size_t>(j * n + k)];
    f.rhs = rhs[w];
    out.push_back(std::move(f));
  }
  // regular facets: gw = 1 data, bucketed by (r, d) for the workers
  struct Bucket {
    Int r, d;
  };
  std::vector<Bucket> buckets;
  for (Int r = 1; r < n; ++r) {
    Int dim = r * (n - r);
    Int bound = (s * dim - dim) / n;
    if (d_max) bound = std::min(bound, *d_max);
    for (Int d = 0; d <= bound; ++d) buckets.push_back({r, d});
  }
  auto scan_bucket = [&](const Bucket& b) {
    std::vector<Facet> found;
    Int dim = b.r * (n - b.r);
    Int target = b.d * n + dim;
    auto idx = all_indices(n, b.r);
    std::vector<Int> codims;
    codims.reserve(idx.size());
    for (const auto& I : idx) codims.push_back(I.codim());
    std::vector<size_t> pick(static_cast<size_t>(s), 0);
    auto rec = [&](auto&& self, Int pos, Int have) -> void {
      if (have > target) return;
      if (pos == s) {
        if (have != target) return;
        FaceData f;
        f.d = b.d;
        f.r = b.r;
        f.n = n;
        f.D = 0;
        for (Int i = 0; i < s; ++i) f.I.push_back(idx[pick[static_cast<size_t>(i)]]);
        if (f.gw() == 1) found.push_back(make_regular_facet(f));
        return;
      }
      for (size_t k = 0; k < idx.size(); ++k) {
        pick[static_cast<size_t>(pos)] = k;
        self(self, pos + 1, have + codims[k]);
      }
    };
    rec(rec, 0, 0);
    return found;
  };
  Int workers = scan_threads();
  if (workers <= 1) {
    for (const auto& b : buckets) {
      auto found = scan_bucket(b);
      out.insert(out.end(), found.begin(), found.end());
    }
  } else {
    std::vector<std::future<std::vector<Facet>>> futures;
    futures.reserve(buckets.size());
    for (const auto& b : buckets)
      futures.push_back(std::async(std::launch::async, scan_bucket, b));
    for (auto& fu : futures) {
      auto found = fu.get();
      out.insert(out.end(), found.begin(), found.end());
    }
  }
  if (!d_max) {
    std::lock_guard lock(g_facet_mutex);
    g_facet_cache[{n, s}] = out;
  }
  return out;
}

bool membership(const std::vector<AlcovePoint>& pts) {
  if (pts.empty()) throw std::invalid_argument("membership: empty tuple");
  Int n = pts.front().n, s = static_cast<Int>(pts.size());
  for (const auto& p : pts)
    if (p.n != n || !p.in_alcove()) return false;
  bool by_facets = true;
  for (const auto& f : facets(n, s))
    if (f.eval(pts) > f.rhs) {
      by_facets = false;
      break;
    }
  bool by_sections = h0(vertex_to_bundle_raw(pts)) > 0;
  if (by_facets != by_sections)
    throw internal_error("membership: facet route disagrees with section route");
  return by_facets;
}

LineBundleData canonical_orbit_bundle(const LineBundleData& L, Int* orbit_size) {
  Int n = L.n, s = L.s();
  std::set<LineBundleData> orbit;
  std::vector<Int> perm(static_cast<size_t>(s));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Int> twists(static_cast<size_t>(s), 0);
  // enumerate twists with sum = 0 mod n
  auto apply = [&](const std::vector<Int>& tw, const std::vector<Int>& pm) {
    LineBundleData out = L;
    out.degN = 0;
    for (Int j = 0; j < s; ++j) {
      LineBundleData tmp = L;
      for (Int t = 0; t < tw[static_cast<size_t>(j)]; ++t)
        tmp = shift_bundle(tmp, j, ShiftDirection::forward);
      out.weights[static_cast<size_t>(pm[static_cast<size_t>(j)])] =
          tmp.weights[static_cast<size_t>(j)];
    }
    return out;
  };
  auto rec = [&](auto&& self, Int pos, Int sum) -> void {
    if (pos == s - 1) {
      twists[static_cast<size_t>(pos)] = ((n - sum) % n + n) % n;
      std::vector<Int> pm(static_cast<size_t>(s));
      std::iota(pm.begin(), pm.end(), 0);
      do {
        orbit.insert(apply(twists, pm));
      } while (std::next_permutation(pm.begin(), pm.end()));
      return;
    }
    for (Int m = 0; m < n; ++m) {
      twists[static_cast<size_t>(pos)] = m;
      self(self, pos + 1, sum + m);
    }
  };
  rec(rec, 0, 0);
  if (orbit_size) *orbit_size = static_cast<Int>(orbit.size());
  return *orbit.begin();
}

std::vector<FVertexCertificate> f_vertices(Int n, Int s) {
  auto facet_list = facets(n, s);
  std::map<LineBundleData, FVertexCertificate> by_bundle;
  std::mutex merge_mutex;
  auto consider = [&](const CycleData& c) {
    LineBundleData L = divisor_class(c);
    if (L.level <= 0) return;
    if (!strict_practical_inequality(c, L)) return;
    if (normalize_indivisible(L) != L) return;
    std::lock_guard lock(merge_mutex);
    if (!by_bundle.count(L)) {
      FVertexCertificate cert;
      cert.bundle = L;
      cert.witness = c;
      for (const auto& w : L.weights) cert.point.push_back(kappa(w, L.level));
      by_bundle.emplace(L, std::move(cert));
    }
  };
  Int workers = scan_threads();
  if (workers <= 1) {
    enumerate_codim1_cycles(n, s, std::nullopt, consider);
  } else {
    // the scan parallelizes over (r, d) buckets; the enumeration itself is
    // cheap, so collect first and split deterministically
    std::vector<CycleData> cycles;
    enumerate_codim1_cycles(n, s, std::nullopt, [&](const CycleData& c) { cycles.push_back(c); });
    std::vector<std::future<void>> futures;
    size_t chunk = (cycles.size() + static_cast<size_t>(workers) - 1) / static_cast<size_t>(workers);
    for (size_t lo = 0; lo < cycles.size(); lo += chunk) {
      size_t hi = std::min(cycles.size(), lo + chunk);
      futures.push_back(std::async(std::launch::async, [&, lo, hi] {
        for (size_t i = lo; i < hi; ++i) consider(cycles[i]);
      }));
    }
    for (auto& fu : futures) fu.get();
  }
  // orbit dedup: keep the certificate whose bundle is the canonical
  // (lexicographically least) representative of its orbit
  std::map<LineBundleData, FVertexCertificate> reps;
  for (auto& [L, cert] : by_bundle) {
    Int orbit_size = 1;
    LineBundleData canon = canonical_orbit_bundle(L, &orbit_size);
    auto it = by_bundle.find(canon);
    // every orbit member produced by the scan shares the canonical bundle;
    // the representative itself must have been found
    if (it == by_bundle.end())
      throw internal_error("f_vertices: orbit representative missing from scan");
    if (!reps.count(canon)) {
      FVertexCertificate c = it->second;
      c.orbit_size = orbit_size;
      for (const auto& f : facet_list)
        if (f.active_at(c.point)) c.active_facets.push_back(f);
      reps.emplace(canon, std::move(c));
    }
  }
  std::vector<FVertexCertificate> out;
  out.reserve(reps.size());
  for (auto& [L, cert] : reps) out.push_back(std::move(cert));
  return out;
}

bool certify_vertex(const std::vector<AlcovePoint>& pts) {
  if (!membership(pts)) throw std::invalid_argument("certify_vertex: point outside P_n(s)");
  Int n = pts.front().n, s = static_cast<Int>(pts.size());
  std::vector<std::vector<Rat>> rows;
  // trace conditions define the ambient affine hull
  for (Int j = 0; j < s; ++j) {
    std::vector<Rat> row(static_cast<size_t>(s * n), Rat(0));
    for (Int k = 0; k < n; ++k) row[static_cast<size_t>(j * n + k)] = Rat(1);
    rows.push_back(std::move(row));
  }
  for (const auto& f : facets(n, s)) {
    if (!f.active_at(pts)) continue;
    std::vector<Rat> row(static_cast<size_t>(s * n), Rat(0));
    for (Int j = 0; j < s; ++j)
      for (Int k = 0; k < n; ++k)
        row[static_cast<size_t>(j * n + k)] = f.normal[static_cast<size_t>(j)][static_cast<size_t>(k)];
    rows.push_back(std::move(row));
  }
  return rational_rank(std::move(rows)) == s * n;
}

std::vector<std::vector<AlcovePoint>> central_vertices(Int n, Int s) {
  std::vector<std::vector<AlcovePoint>> out;
  std::vector<Int> m(static_cast<size_t>(s), 0);
  auto rec = [&](auto&& self, Int pos, Int sum) -> void {
    if (pos == s - 1) {
      m[static_cast<size_t>(pos)] = ((n - sum) % n + n) % n;
      std::vector<AlcovePoint> tuple;
      for (Int j = 0; j < s; ++j)
        tuple.push_back(central_twist(AlcovePoint::center(n), m[static_cast<size_t>(j)]));
      out.push_back(std::move(tuple));
      return;
    }
    for (Int v = 0; v < n; ++v) {
      m[static_cast<size_t>(pos)] = v;
      self(self, pos + 1, sum + v);
    }
  };
  rec(rec, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::set<std::vector<AlcovePoint>> symmetry_orbit(const std::vector<AlcovePoint>& pts) {
  Int n = pts.front().n, s = static_cast<Int>(pts.size());
  std::set<std::vector<AlcovePoint>> orbit;
  std::vector<Int> m(static_cast<size_t>(s), 0);
  auto rec = [&](auto&& self, Int pos, Int sum) -> void {
    if (pos == s - 1) {
      m[static_cast<size_t>(pos)] = ((n - sum) % n + n) % n;
      std::vector<AlcovePoint> twisted;
      for (Int j = 0; j < s; ++j)
        twisted.push_back(central_twist(pts[static_cast<size_t>(j)], m[static_cast<size_t>(j)]));
      std::sort(twisted.begin(), twisted.end());
      do {
        orbit.insert(twisted);
      } while (std::next_permutation(twisted.begin(), twisted.end()));
      return;
    }
    for (Int v = 0; v < n; ++v) {
      m[static_cast<size_t>(pos)] = v;
      self(self, pos + 1, sum + v);
    }
  };
  rec(rec, 0, 0);
  return orbit;
}

// ---- exact double description --------------------------------------------
//
// Vertices of the H-polytope in homogeneous coordinates (y, t): y drops the
// last alcove coordinate of each point. Rays are normalized to t = 1 at the
// end; adjacency during insertion uses the combinatorial criterion on the
// active-constraint sets.
namespace {

struct DDRay {
  std::vector<Rat> v;               // length dim + 1, last = t
  std::vector<char> active;        // per processed constraint
};

std::vector<Rat> to_y(const std::vector<AlcovePoint>& pts) {
  std::vector<Rat> y;
  for (const auto& p : pts)
    for (Int k = 0; k + 1 < p.n; ++k) y.push_back(p.coords[static_cast<size_t>(k)]);
  y.push_back(Rat(1));
  return y;
}

std::vector<AlcovePoint> from_y(const std::vector<Rat>& y, Int n, Int s) {
  std::vector<AlcovePoint> pts;
  size_t idx = 0;
  for (Int j = 0; j < s; ++j) {
    std::vector<Rat> coords;
    Rat sum(0);
    for (Int k = 0; k + 1 < n; ++k) {
      coords.push_back(y[idx]);
      sum += y[idx];
      ++idx;
    }
    coords.push_back(-sum);
    pts.emplace_back(n, std::move(coords));
  }
  return pts;
}

// constraint <c, (y,t)> <= 0 given ambient normal (s x n) and rhs
std::vector<Rat> homogenize(const std::vector<std::vector<Rat>>& normal, const Rat& rhs, Int n,
                            Int s) {
  std::vector<Rat> c(static_cast<size_t>(s * (n - 1) + 1), Rat(0));
  for (Int j = 0; j < s; ++j) {
    // a^j_k = y^j_k for k < n-1... note a^j_{n-1} = -(sum of y^j)
    Rat last = normal[static_cast<size_t>(j)][static_cast<size_t>(n - 1)];
    for (Int k = 0; k + 1 < n; ++k)
      c[static_cast<size_t>(j * (n - 1) + k)] =
          normal[static_cast<size_t>(j)][static_cast<size_t>(k)] - last;
  }
  c.back() = -rhs;
  return c;
}

Rat dot(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  Rat t(0);
  for (size_t i = 0; i < a.size(); ++i) t += a[i] * b[i];
  return t;
}

void normalize_ray(std::vector<Rat>& v) {
  // scale so the homogenizing coordinate is 1 (polytope rays always have t > 0)
  Rat t = v.back();
  if (t.is_zero()) throw internal_error("dd: unbounded direction in a compact polytope");
  for (auto& x : v) x /= t;
}

}  // namespace

std::vector<std::vector<AlcovePoint>> dd_vertex_enumeration(Int n, Int s) {
  if (s != 3 || n > 4) throw std::invalid_argument("dd_vertex_enumeration: guarded to n <= 4, s = 3");
  auto facet_list = facets(n, s);

  // start from the product simplex Delta_n^s: vertices = central points of
  // each factor in all combinations
  std::vector<DDRay> rays;
  std::vector<AlcovePoint> verts;
  for (Int m = 0; m < n; ++m) verts.push_back(central_twist(AlcovePoint::center(n), m));
  std::vector<Int> choice(static_cast<size_t>(s), 0);
  auto emit = [&](auto&& self, Int pos) -> void {
    if (pos == s) {
      std::vector<AlcovePoint> tuple;
      for (Int j = 0; j < s; ++j) tuple.push_back(verts[static_cast<size_t>(choice[static_cast<size_t>(j)])]);
      DDRay r;
      r.v = to_y(tuple);
      rays.push_back(std::move(r));
      return;
    }
    for (Int v = 0; v < n; ++v) {
      choice[static_cast<size_t>(pos)] = v;
      self(self, pos + 1);
    }
  };
  emit(emit, 0);

  std::vector<std::vector<Rat>> constraints;
  for (const auto& f : facet_list) constraints.push_back(homogenize(f.normal, f.rhs, n, s));

  size_t processed = 0;
  for (const auto& c : constraints) {
    std::vector<Rat> vals;
    vals.reserve(rays.size());
    for (const auto& r : rays) vals.push_back(dot(c, r.v));
    std::vector<DDRay> next;
    // keep non-violating rays, recording activity
    for (size_t i = 0; i < rays.size(); ++i) {
      if (vals[i] <= Rat(0)) {
        DDRay r = rays[i];
        r.active.push_back(vals[i].is_zero() ? 1 : 0);
        next.push_back(std::move(r));
      }
    }
    // combine adjacent (pos, neg) pairs on the hyperplane
    for (size_t i = 0; i < rays.size(); ++i) {
      if (vals[i] <= Rat(0)) continue;
      for (size_t j = 0; j < rays.size(); ++j) {
        if (vals[j] >= Rat(0)) continue;
        // adjacency: no third ray's active set contains the intersection
        bool adjacent = true;
        for (size_t k = 0; k < rays.size() && adjacent; ++k) {
          if (k == i || k == j) continue;
          bool contains = true;
          for (size_t a = 0; a < rays[i].active.size() && contains; ++a) {
            if (rays[i].active[a] && rays[j].active[a] && !rays[k].active[a]) contains = false;
          }
          if (contains) adjacent = false;
        }
        if (!adjacent) continue;
        DDRay mix;
        mix.v.resize(rays[i].v.size());
        for (size_t a = 0; a < mix.v.size(); ++a)
          mix.v[a] = rays[i].v[a] * (-vals[j]) + rays[j].v[a] * vals[i];
        // vals[i] > 0 > vals[j]: the combination lies on the hyperplane; flip
        // sign so t stays positive
        if (mix.v.back() < Rat(0))
          for (auto& x : mix.v) x = -x;
        normalize_ray(mix.v);
        // recompute activity exactly: a combination can land on earlier
        // hyperplanes that neither parent touches
        mix.active.reserve(processed + 1);
        for (size_t t = 0; t <= processed; ++t)
          mix.active.push_back(dot(constraints[t], mix.v).is_zero() ? 1 : 0);
        next.push_back(std::move(mix));
      }
    }
    // dedupe
    std::sort(next.begin(), next.end(), [](const DDRay& a, const DDRay& b) { return a.v < b.v; });
    next.erase(std::unique(next.begin(), next.end(),
                           [](const DDRay& a, const DDRay& b) { return a.v == b.v; }),
               next.end());
    rays = std::move(next);
    ++processed;
  }

  std::vector<std::vector<AlcovePoint>> out;
  out.reserve(rays.size());
  for (auto& r : rays) {
    normalize_ray(r.v);
    out.push_back(from_y(r.v, n, s));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace qsc
