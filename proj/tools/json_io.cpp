#include "json_io.hpp"

namespace qsc::io {

json to_json(const Rat& r) { return r.str(); }

Rat rat_from_json(const json& j) {
  if (j.is_number_integer()) return Rat(j.get<Int>());
  return Rat::parse(j.get<std::string>());
}

json to_json(const Partition& p) { return json(p.parts()); }

Partition partition_from_json(const json& j) { return Partition(j.get<std::vector<Int>>()); }

json to_json(const SchubertIndex& I) { return json{{"n", I.n}, {"elems", I.elems}}; }

SchubertIndex index_from_json(const json& j) {
  return SchubertIndex(j.at("n").get<Int>(), j.at("elems").get<std::vector<Int>>());
}

json to_json(const Weight& w) { return json{{"rows", w.rows()}}; }

Weight weight_from_json(const json& j, Int n_hint) {
  if (j.contains("rows")) {
    auto rows = j.at("rows").get<std::vector<Int>>();
    return Weight(static_cast<Int>(rows.size()), rows);
  }
  auto fund = j.at("fund").get<std::vector<Int>>();
  Int n = j.contains("n") ? j.at("n").get<Int>() : n_hint;
  if (n == 0) n = static_cast<Int>(fund.size()) + 1;
  return Weight::from_fundamental(n, fund);
}

json to_json(const AlcovePoint& a) {
  json coords = json::array();
  for (const auto& c : a.coords) coords.push_back(to_json(c));
  return coords;
}

AlcovePoint point_from_json(const json& j) {
  std::vector<Rat> coords;
  for (const auto& c : j) coords.push_back(rat_from_json(c));
  Int n = static_cast<Int>(coords.size());
  return AlcovePoint(n, std::move(coords));
}

json to_json(const std::vector<AlcovePoint>& pts) {
  json out = json::array();
  for (const auto& p : pts) out.push_back(to_json(p));
  return out;
}

std::vector<AlcovePoint> points_from_json(const json& j) {
  std::vector<AlcovePoint> pts;
  for (const auto& p : j) pts.push_back(point_from_json(p));
  return pts;
}

json to_json(const LineBundleData& L) {
  json weights = json::array();
  for (const auto& w : L.weights) weights.push_back(to_json(w));
  return json{{"n", L.n}, {"degN", L.degN}, {"level", L.level}, {"weights", weights}};
}

LineBundleData bundle_from_json(const json& j) {
  LineBundleData L;
  L.n = j.at("n").get<Int>();
  L.degN = j.value("degN", Int{0});
  L.level = j.at("level").get<Int>();
  for (const auto& w : j.at("weights")) L.weights.push_back(weight_from_json(w, L.n));
  return L;
}

json to_json(const CycleData& c) {
  json J = json::array();
  for (const auto& I : c.J) J.push_back(to_json(I));
  return json{{"d", c.d}, {"r", c.r}, {"n", c.n}, {"D", c.D}, {"J", J}};
}

CycleData cycle_from_json(const json& j) {
  CycleData c;
  c.d = j.at("d").get<Int>();
  c.r = j.at("r").get<Int>();
  c.n = j.at("n").get<Int>();
  c.D = j.value("D", Int{0});
  for (const auto& I : j.at("J")) c.J.push_back(index_from_json(I));
  return c;
}

json to_json(const FaceData& f) {
  json I = json::array();
  for (const auto& idx : f.I) I.push_back(to_json(idx));
  return json{{"d", f.d}, {"r", f.r}, {"n", f.n}, {"D", f.D}, {"I", I}};
}

FaceData face_from_json(const json& j) {
  FaceData f;
  f.d = j.at("d").get<Int>();
  f.r = j.at("r").get<Int>();
  f.n = j.at("n").get<Int>();
  f.D = j.value("D", Int{0});
  for (const auto& I : j.at("I")) f.I.push_back(index_from_json(I));
  return f;
}

json to_json(const ConjClassTuple& A) {
  json classes = json::array();
  for (const auto& c : A.classes) classes.push_back(to_json(c));
  return json{{"rank", A.rank}, {"n", A.n}, {"classes", classes}};
}

ConjClassTuple classes_from_json(const json& j) {
  ConjClassTuple A;
  A.rank = j.at("rank").get<Int>();
  A.n = j.at("n").get<Int>();
  for (const auto& c : j.at("classes")) A.classes.push_back(partition_from_json(c));
  A.validate();
  return A;
}

json to_json(const GWQuery& q) {
  json idx = json::array();
  for (const auto& I : q.indices) idx.push_back(to_json(I));
  return json{{"r", q.r}, {"n", q.n}, {"d", q.d}, {"D", q.D}, {"indices", idx}};
}

GWQuery gw_query_from_json(const json& j) {
  GWQuery q;
  q.r = j.at("r").get<Int>();
  q.n = j.at("n").get<Int>();
  q.d = j.value("d", Int{0});
  q.D = j.value("D", Int{0});
  for (const auto& I : j.at("indices")) q.indices.push_back(index_from_json(I));
  return q;
}

json to_json(const RigidReport& rep) {
  json out{{"classes", to_json(rep.input)},
           {"exists_unitary", rep.exists_unitary},
           {"irreducible_forced", rep.irreducible_forced},
           {"rigid_unitary", rep.rigid_unitary},
           {"finite_monodromy", rep.finite_monodromy},
           {"sections", rep.sections},
           {"dual_bundle", to_json(rep.dual_bundle)},
           {"point", to_json(v_of_A(rep.input))}};
  if (rep.witness_cycle) out["witness_cycle"] = to_json(*rep.witness_cycle);
  return out;
}

json to_json(const Facet& f) {
  json normal = json::array();
  for (const auto& row : f.normal) {
    json r = json::array();
    for (const auto& x : row) r.push_back(to_json(x));
    normal.push_back(r);
  }
  json out{{"regular", f.regular}, {"normal", normal}, {"rhs", to_json(f.rhs)}};
  if (f.regular) out["face"] = to_json(f.face);
  return out;
}

json to_json(const FVertexCertificate& cert) {
  return json{{"point", to_json(cert.point)},
              {"bundle", to_json(cert.bundle)},
              {"witness_cycle", to_json(cert.witness)},
              {"orbit_size", cert.orbit_size},
              {"active_facets", cert.active_facets.size()}};
}

json to_json(const LocalExponentTable& t) {
  json finite = json::array();
  for (const auto& point : t.finite) {
    json entries = json::array();
    for (const auto& [e, m] : point) entries.push_back(json{{"exponent", to_json(e)}, {"multiplicity", m}});
    finite.push_back(entries);
  }
  return json{{"rank", t.rank}, {"finite", finite}, {"at_infinity", to_json(t.at_infinity)}};
}

json to_json(const FaceDecomposition& dec) {
  json rays = json::array();
  for (const auto& ray : dec.basic_rays)
    rays.push_back(json{{"a", ray.a}, {"j", ray.j + 1}, {"coefficient", ray.coefficient},
                        {"class", to_json(ray.cls)}});
  return json{{"face", to_json(dec.face)}, {"basic_rays", rays}, {"f2_part", to_json(dec.f2_part)}};
}

}  // namespace qsc::io
