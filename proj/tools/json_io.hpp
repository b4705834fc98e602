#pragma once

#include <json.hpp>

#include "qsc/classical.hpp"
#include "qsc/divisor.hpp"
#include "qsc/fusion.hpp"
#include "qsc/induction.hpp"
#include "qsc/kz.hpp"
#include "qsc/polytope.hpp"
#include "qsc/strange_dual.hpp"

namespace qsc::io {

using nlohmann::json;

// rationals travel as "p/q" strings (plain integers when q = 1)
json to_json(const Rat& r);
Rat rat_from_json(const json& j);

json to_json(const Partition& p);
Partition partition_from_json(const json& j);

json to_json(const SchubertIndex& I);
SchubertIndex index_from_json(const json& j);

json to_json(const Weight& w);
Weight weight_from_json(const json& j, Int n_hint = 0);

json to_json(const AlcovePoint& a);
AlcovePoint point_from_json(const json& j);
json to_json(const std::vector<AlcovePoint>& pts);
std::vector<AlcovePoint> points_from_json(const json& j);

json to_json(const LineBundleData& L);
LineBundleData bundle_from_json(const json& j);

json to_json(const CycleData& c);
CycleData cycle_from_json(const json& j);
json to_json(const FaceData& f);
FaceData face_from_json(const json& j);

json to_json(const ConjClassTuple& A);
ConjClassTuple classes_from_json(const json& j);

json to_json(const GWQuery& q);
GWQuery gw_query_from_json(const json& j);

json to_json(const RigidReport& rep);
json to_json(const Facet& f);
json to_json(const FVertexCertificate& cert);
json to_json(const LocalExponentTable& t);
json to_json(const FaceDecomposition& dec);

}  // namespace qsc::io
