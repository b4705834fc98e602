#include "repro.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>

#include "json_io.hpp"

#ifndef QSC_FIXTURE_DIR
#define QSC_FIXTURE_DIR "fixtures/golden"
#endif

namespace qsc {
namespace {

using nlohmann::json;

FaceData gr24_face() {
  FaceData f;
  f.d = 1;
  f.r = 2;
  f.n = 4;
  f.D = 0;
  f.I = {SchubertIndex(4, {1, 4}), SchubertIndex(4, {1, 3}), SchubertIndex(4, {1, 3})};
  return f;
}

FaceData thaddeus_face() {
  FaceData f;
  f.d = 2;
  f.r = 4;
  f.n = 8;
  f.D = 0;
  f.I = {SchubertIndex(8, {2, 3, 4, 7}), SchubertIndex(8, {1, 3, 4, 7}),
         SchubertIndex(8, {1, 3, 4, 7})};
  return f;
}

json daj_example(const FaceData& f, Int a, Int j) {
  json out;
  out["face"] = io::to_json(f);
  out["gw"] = f.gw();
  auto [cycle, cls] = build_Daj(f, a, j);
  out["cycle"] = io::to_json(cycle);
  out["class"] = io::to_json(cls);
  json kappa_points = json::array();
  for (const auto& w : cls.weights) kappa_points.push_back(io::to_json(kappa(w, cls.level)));
  out["point"] = kappa_points;
  ConjClassTuple A = rigid_from_face(f, a, j);
  out["classes"] = io::to_json(A);
  auto numerics = rigidity_numerics(A);
  out["rigidity"] = json{{"lhs", numerics.lhs}, {"rhs", numerics.rhs}, {"bound_ok", numerics.bound_ok}};
  out["kz_match"] = match_strange_dual(cycle);
  return out;
}

json repro_gr24() { return daj_example(gr24_face(), 4, 0); }

json repro_thaddeus() {
  json out = daj_example(thaddeus_face(), 2, 0);
  RigidReport rep = classify(io::classes_from_json(out["classes"]));
  out["rigid_unitary"] = rep.rigid_unitary;
  out["finite_monodromy"] = rep.finite_monodromy;
  return out;
}

json repro_wilson() {
  CycleData c;
  c.d = 0;
  c.r = 3;
  c.n = 9;
  c.D = 0;
  c.J = {SchubertIndex(9, {2, 6, 9}), SchubertIndex(9, {3, 6, 9}), SchubertIndex(9, {3, 6, 9})};
  json out;
  out["cycle"] = io::to_json(c);
  LineBundleData L = divisor_class(c);
  out["class"] = io::to_json(L);
  ConjClassTuple A = from_bundle(L);
  out["classes"] = io::to_json(A);
  auto numerics = rigidity_numerics(A);
  out["rigidity"] = json{{"lhs", numerics.lhs}, {"rhs", numerics.rhs}, {"bound_ok", numerics.bound_ok}};
  out["f_line_bundle"] = f_line_bundle_witness(L).has_value();
  out["kz_match"] = match_strange_dual(c);
  return out;
}

json repro_ko(Int k) {
  Int n = 3 * k - 1;
  FaceData f;
  f.d = 0;
  f.r = k;
  f.n = n;
  f.D = 0;
  std::vector<Int> i13, i2{k};
  for (Int v = 2; v <= n; v += 3) i13.push_back(v);
  for (Int v = 2 * k + 1; v <= n; ++v) i2.push_back(v);
  f.I = {SchubertIndex(n, i13), SchubertIndex(n, i2), SchubertIndex(n, i13)};
  json out;
  out["face"] = io::to_json(f);
  out["gw"] = f.gw();
  auto [cycle, cls] = build_Daj(f, 2 * k + 1, 1);
  out["class"] = io::to_json(cls);
  out["level"] = cls.level;
  out["level_formula"] = (k - 1) * (k - 1) + 1;
  ConjClassTuple A = rigid_from_face(f, 2 * k + 1, 1);
  out["classes"] = io::to_json(A);
  auto numerics = rigidity_numerics(A);
  out["rigidity"] = json{{"lhs", numerics.lhs}, {"rhs", numerics.rhs}, {"bound_ok", numerics.bound_ok}};
  return out;
}

json repro_catalog(Int n) {
  json out;
  out["n"] = n;
  json reps = json::array();
  Int nontrivial = 0;
  for (const auto& cert : f_vertices(n, 3)) {
    if (cert.bundle.level <= 1) continue;
    ++nontrivial;
    ConjClassTuple A = from_bundle(cert.bundle);
    json entry{{"bundle", io::to_json(cert.bundle)},
               {"classes", io::to_json(A)},
               {"orbit_size", cert.orbit_size},
               {"finite_monodromy", galois_test(A)}};
    reps.push_back(entry);
  }
  out["nontrivial_orbits"] = nontrivial;
  out["representatives"] = reps;
  return out;
}

json repro_ressayre() {
  FaceData f;
  f.d = 0;
  f.r = 3;
  f.n = 9;
  f.D = 0;
  f.I = {SchubertIndex(9, {3, 7, 8}), SchubertIndex(9, {3, 6, 9}), SchubertIndex(9, {3, 6, 9})};
  LeviBundle levi;
  levi.sub_level = 1;
  levi.sub.assign(3, Weight::fundamental(3, 2));
  levi.quot_level = 0;
  levi.quot.assign(3, Weight::zero(6));
  json out;
  out["face"] = io::to_json(f);
  LineBundleData induced = induce(levi, f);
  out["induced"] = io::to_json(induced);
  out["sections"] = h0(induced);
  FaceDecomposition dec = face_decompose(induced, f);
  bool pure = true;
  for (const auto& ray : dec.basic_rays) pure = pure && ray.coefficient == 0;
  out["pure_f2_part"] = pure;
  return out;
}

json repro_hyper6() {
  json out;
  std::vector<HypergeomData> systems = {
      {{Rat(1, 6), Rat(5, 6)}, {Rat(0), Rat(4, 6)}},
      {{Rat(1, 6), Rat(5, 6)}, {Rat(0), Rat(3, 6)}},
      {{Rat(1, 6), Rat(3, 6), Rat(5, 6)}, {Rat(0), Rat(2, 6), Rat(4, 6)}}};
  json arr = json::array();
  for (const auto& h : systems) arr.push_back(hypergeom_unitary(h));
  out["sixth_root_unitary"] = arr;
  HypergeomData bad{{Rat(5, 8), Rat(4, 8)}, {Rat(0), Rat(2, 8)}};
  out["e1_rank2_unitary"] = hypergeom_unitary(bad);
  HypergeomData e1{{Rat(0), Rat(4, 8), Rat(6, 8)}, {Rat(1, 8), Rat(5, 8), Rat(7, 8)}};
  HypergeomData low = hypergeom_katz_lower(e1);
  json a = json::array(), b = json::array();
  for (const auto& x : low.alpha) a.push_back(io::to_json(x));
  for (const auto& x : low.beta) b.push_back(io::to_json(x));
  out["e1_rank3_lowered"] = json{{"alpha", a}, {"beta", b}, {"unitary", hypergeom_unitary(low)}};
  return out;
}

json repro_polytope4() {
  json out;
  auto dd = dd_vertex_enumeration(4, 3);
  out["vertex_count"] = dd.size();
  std::set<std::vector<AlcovePoint>> expected;
  for (const auto& tuple : central_vertices(4, 3)) expected.insert(tuple);
  for (const auto& cert : f_vertices(4, 3))
    for (const auto& tuple : symmetry_orbit(cert.point)) expected.insert(tuple);
  std::set<std::vector<AlcovePoint>> got(dd.begin(), dd.end());
  out["equals_fvertices_and_central"] = got == expected;
  json nontrivial = json::array();
  for (const auto& cert : f_vertices(4, 3))
    if (cert.bundle.level > 1) nontrivial.push_back(io::to_json(cert.point));
  out["nontrivial_orbit_representatives"] = nontrivial;
  return out;
}

const std::map<std::string, std::function<json()>>& catalog() {
  static const std::map<std::string, std::function<json()>> cases = {
      {"gr24", repro_gr24},
      {"thaddeus", repro_thaddeus},
      {"wilson", repro_wilson},
      {"ko-2", [] { return repro_ko(2); }},
      {"ko-3", [] { return repro_ko(3); }},
      {"ko-4", [] { return repro_ko(4); }},
      {"ko-5", [] { return repro_ko(5); }},
      {"catalog-4", [] { return repro_catalog(4); }},
      {"catalog-5", [] { return repro_catalog(5); }},
      {"catalog-6", [] { return repro_catalog(6); }},
      {"ressayre", repro_ressayre},
      {"hyper-6", repro_hyper6},
      {"polytope-4", repro_polytope4},
  };
  return cases;
}

}  // namespace

int run_repro(const std::string& name, bool verbose) {
  if (name == "list") {
    for (const auto& [key, fn] : catalog()) std::cout << key << "\n";
    return 0;
  }
  auto it = catalog().find(name);
  if (it == catalog().end()) {
    std::cerr << "unknown example '" << name << "' (try 'repro list')\n";
    return 2;
  }
  json computed = it->second();
  if (const char* cache = std::getenv("QSC_CACHE_DIR")) {
    std::filesystem::create_directories(cache);
    std::ofstream out(std::filesystem::path(cache) / (name + ".json"));
    out << computed.dump(2) << "\n";
  }
  std::filesystem::path dir = QSC_FIXTURE_DIR;
  if (const char* env = std::getenv("QSC_FIXTURES")) dir = env;
  std::filesystem::path golden = dir / (name + ".json");
  std::ifstream in(golden);
  if (!in) {
    std::cerr << "repro " << name << ": missing golden file " << golden << "\n";
    if (verbose) std::cout << computed.dump(2) << "\n";
    return 1;
  }
  json expected;
  in >> expected;
  if (computed == expected) {
    std::cout << "repro " << name << ": OK\n";
    return 0;
  }
  std::cerr << "repro " << name << ": MISMATCH\n";
  if (verbose) {
    std::cerr << "computed:\n" << computed.dump(2) << "\nexpected:\n" << expected.dump(2) << "\n";
  }
  return 1;
}

}  // namespace qsc
