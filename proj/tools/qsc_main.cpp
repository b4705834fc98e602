// Command-line front end: quantum Schubert calculus, eigenvalue-polytope
// vertex enumeration, and rigid local system classification, with `repro`
// replaying the worked examples against golden files.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "json_io.hpp"
#include "repro.hpp"

using namespace qsc;
using nlohmann::json;

namespace {

json parse_json(const std::string& text) { return json::parse(text); }

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  json j;
  in >> j;
  return j;
}

struct Output {
  std::string format = "json";
  void emit(const json& j) const {
    if (format == "tsv") {
      emit_tsv(j);
    } else {
      std::cout << j.dump(2) << "\n";
    }
  }
  void emit_tsv(const json& j, const std::string& prefix = "") const {
    if (j.is_object()) {
      for (auto it = j.begin(); it != j.end(); ++it)
        emit_tsv(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key());
    } else if (j.is_array()) {
      Int i = 0;
      for (const auto& e : j) emit_tsv(e, prefix + "[" + std::to_string(i++) + "]");
    } else {
      std::cout << prefix << "\t" << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
  }
};

std::vector<Rat> parse_rats(const std::vector<std::string>& xs) {
  std::vector<Rat> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(Rat::parse(x));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact quantum Schubert calculus, eigenvalue polytopes, rigid local systems"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  Output out;
  Int threads = 1;
  int precision = 0;
  bool verify = false;
  app.add_option("--format", out.format, "output format")->check(CLI::IsMember({"json", "tsv"}));
  app.add_option("--threads", threads, "worker threads for enumeration scans");
  app.add_option("--precision", precision, "Verlinde oracle precision (0 = auto, 1 = extended)");
  app.add_flag("--verify-oracle", verify, "cross-check section counts against the Verlinde oracle");

  std::string js, js2, name;
  Int arg_r = 0, arg_n = 0, arg_k = 0, arg_s = 3, arg_d = 0, arg_D = 0, arg_a = 0, arg_j = 1;
  std::optional<Int> d_max;
  bool orbits = false, lower = false;
  std::vector<std::string> alpha, beta, lambda;
  std::string rho;

  auto* gw_cmd = app.add_subcommand("gw", "generalized Gromov-Witten number");
  gw_cmd->add_option("--r", arg_r)->required();
  gw_cmd->add_option("--n", arg_n)->required();
  gw_cmd->add_option("--d", arg_d);
  gw_cmd->add_option("--deg-shift", arg_D, "D = -deg N");
  gw_cmd->add_option("--indices", js, "JSON array of index sets")->required();

  auto* qmul_cmd = app.add_subcommand("qmul", "small quantum product of Schubert classes");
  qmul_cmd->add_option("--r", arg_r)->required();
  qmul_cmd->add_option("--n", arg_n)->required();
  qmul_cmd->add_option("--a", js)->required();
  qmul_cmd->add_option("--b", js2)->required();

  auto* fusion_cmd = app.add_subcommand("fusion", "conformal block rank");
  fusion_cmd->add_option("--r", arg_r)->required();
  fusion_cmd->add_option("--k", arg_k)->required();
  fusion_cmd->add_option("--weights", js)->required();

  auto* h0_cmd = app.add_subcommand("h0", "section count of a parabolic line bundle");
  h0_cmd->add_option("--bundle", js)->required();

  auto* facets_cmd = app.add_subcommand("facets", "inequalities of P_n(s)");
  facets_cmd->add_option("--n", arg_n)->required();
  facets_cmd->add_option("--s", arg_s);
  facets_cmd->add_option("--d-max", d_max);

  auto* fv_cmd = app.add_subcommand("fvertices", "F-vertex certificates of P_n(s)");
  fv_cmd->add_option("--n", arg_n)->required();
  fv_cmd->add_option("--s", arg_s);
  fv_cmd->add_flag("--orbits", orbits, "expand full orbits");

  auto* member_cmd = app.add_subcommand("member", "membership in P_n(s)");
  member_cmd->add_option("--point", js)->required();

  auto* classify_cmd = app.add_subcommand("classify", "classify a conjugacy-class tuple");
  classify_cmd->add_option("--classes", js)->required();
  classify_cmd->add_option("--n", arg_n, "root-of-unity order (validated against the classes)");

  auto* rigids_cmd = app.add_subcommand("rigids", "catalog of rigid unitary tuples");
  rigids_cmd->add_option("--n", arg_n)->required();
  rigids_cmd->add_option("--s", arg_s);

  auto* galois_cmd = app.add_subcommand("galois", "finite-monodromy test");
  galois_cmd->add_option("--classes", js)->required();

  auto* kze_cmd = app.add_subcommand("kz-exponents", "local exponents of a KZ system");
  kze_cmd->add_option("--system", js)->required();

  auto* kzm_cmd = app.add_subcommand("kz-match", "match KZ local data with the strange dual");
  kzm_cmd->add_option("--cycle", js)->required();

  auto* hyp_cmd = app.add_subcommand("hypergeom", "hypergeometric unitarity / lowering");
  hyp_cmd->add_option("--alpha", alpha)->required()->expected(-1);
  hyp_cmd->add_option("--beta", beta)->required()->expected(-1);
  hyp_cmd->add_flag("--lower", lower, "apply one Katz lowering step");

  auto* poch_cmd = app.add_subcommand("pochhammer", "Pochhammer unitarity");
  poch_cmd->add_option("--lambda", lambda)->required()->expected(-1);
  poch_cmd->add_option("--rho", rho)->required();

  auto* dc_cmd = app.add_subcommand("divisor-class", "class of a codimension-one cycle");
  dc_cmd->add_option("--cycle", js)->required();

  auto* daj_cmd = app.add_subcommand("daj", "basic extremal ray D(a,j) on a face");
  daj_cmd->add_option("--face", js)->required();
  daj_cmd->add_option("--a", arg_a)->required();
  daj_cmd->add_option("--j", arg_j, "point index (1-based)")->required();

  auto* rff_cmd = app.add_subcommand("rigid-from-face", "rigid local system of D(a,j)");
  rff_cmd->add_option("--face", js)->required();
  rff_cmd->add_option("--a", arg_a)->required();
  rff_cmd->add_option("--j", arg_j, "point index (1-based)")->required();

  auto* fd_cmd = app.add_subcommand("face-decompose", "basic rays + Pic' component");
  fd_cmd->add_option("--face", js)->required();
  fd_cmd->add_option("--bundle", js2)->required();

  auto* ind_cmd = app.add_subcommand("induce", "Levi induction onto a face");
  ind_cmd->add_option("--face", js)->required();
  ind_cmd->add_option("--levi", js2)->required();

  auto* oracle_cmd = app.add_subcommand("polytope-oracle", "exhaustive vertex enumeration");
  oracle_cmd->add_option("--n", arg_n)->required();
  oracle_cmd->add_option("--s", arg_s);

  auto* repro_cmd = app.add_subcommand("repro", "replay a worked example against its golden file");
  repro_cmd->add_option("name", name, "example name (or 'list')")->required();

  CLI11_PARSE(app, argc, argv);

  set_scan_threads(threads);
  set_verify_oracles(verify);
  set_verlinde_precision(precision);

  try {
    if (*gw_cmd) {
      GWQuery q;
      q.r = arg_r;
      q.n = arg_n;
      q.d = arg_d;
      q.D = arg_D;
      for (const auto& I : parse_json(js)) q.indices.push_back(io::index_from_json(I));
      out.emit(json{{"value", gw_generalized(q)}});
    } else if (*qmul_cmd) {
      const auto& R = ring(arg_r, arg_n);
      QClass a = R.schubert(io::partition_from_json(parse_json(js)));
      QClass b = R.schubert(io::partition_from_json(parse_json(js2)));
      json terms = json::array();
      for (const auto& [key, c] : R.product(a, b).terms())
        terms.push_back(json{{"partition", io::to_json(key.first)}, {"q", key.second}, {"coeff", c}});
      out.emit(json{{"terms", terms}});
    } else if (*fusion_cmd) {
      std::vector<Weight> nu;
      for (const auto& w : parse_json(js)) nu.push_back(io::weight_from_json(w, arg_r));
      Int exact = fusion_rank(arg_r, arg_k, nu);
      Int oracle = verlinde_rank(FusionAlgebra(arg_r, arg_k), nu);
      if (exact != oracle)
        throw internal_error("fusion: quantum ring says " + std::to_string(exact) +
                             ", Verlinde oracle says " + std::to_string(oracle));
      out.emit(json{{"value", exact}});
    } else if (*h0_cmd) {
      out.emit(json{{"value", h0(io::bundle_from_json(parse_json(js)))}});
    } else if (*facets_cmd) {
      json arr = json::array();
      for (const auto& f : facets(arg_n, arg_s, d_max)) arr.push_back(io::to_json(f));
      out.emit(json{{"facets", arr}});
    } else if (*fv_cmd) {
      json arr = json::array();
      for (const auto& cert : f_vertices(arg_n, arg_s)) {
        json entry = io::to_json(cert);
        if (orbits) {
          json orbit = json::array();
          for (const auto& tuple : symmetry_orbit(cert.point)) orbit.push_back(io::to_json(tuple));
          entry["orbit"] = orbit;
        }
        arr.push_back(entry);
      }
      out.emit(json{{"fvertices", arr}});
    } else if (*member_cmd) {
      auto pts = io::points_from_json(parse_json(js));
      bool inside = membership(pts);
      json res{{"member", inside}};
      if (inside) res["vertex"] = certify_vertex(pts);
      out.emit(res);
    } else if (*classify_cmd) {
      ConjClassTuple A = io::classes_from_json(parse_json(js));
      if (arg_n != 0 && arg_n != A.n)
        throw std::invalid_argument("--n disagrees with the classes payload");
      out.emit(io::to_json(classify(A)));
    } else if (*rigids_cmd) {
      json arr = json::array();
      for (const auto& rep : rigid_catalog(arg_n, arg_s)) arr.push_back(io::to_json(rep));
      out.emit(json{{"rigids", arr}});
    } else if (*galois_cmd) {
      out.emit(json{{"finite_monodromy", galois_test(io::classes_from_json(parse_json(js)))}});
    } else if (*kze_cmd) {
      json j = parse_json(js);
      KZSystem sys;
      sys.r = j.at("r").get<Int>();
      sys.k = j.at("k").get<Int>();
      for (const auto& w : j.at("nu")) sys.nu.push_back(io::weight_from_json(w, sys.r));
      out.emit(io::to_json(kz_exponents(sys)));
    } else if (*kzm_cmd) {
      out.emit(json{{"match", match_strange_dual(io::cycle_from_json(parse_json(js)))}});
    } else if (*hyp_cmd) {
      HypergeomData h{parse_rats(alpha), parse_rats(beta)};
      json res{{"unitary", hypergeom_unitary(h)}, {"exponents", io::to_json(hypergeom_exponents(h))}};
      if (lower) {
        HypergeomData low = hypergeom_katz_lower(h);
        json a = json::array(), b = json::array();
        for (const auto& x : low.alpha) a.push_back(io::to_json(x));
        for (const auto& x : low.beta) b.push_back(io::to_json(x));
        res["lowered"] = json{{"alpha", a}, {"beta", b}, {"unitary", low.rank() > 1 ? hypergeom_unitary(low) : true}};
      }
      out.emit(res);
    } else if (*poch_cmd) {
      PochhammerData p{parse_rats(lambda), Rat::parse(rho)};
      out.emit(json{{"unitary", pochhammer_unitary(p)}, {"rho_prime", io::to_json(p.rho_prime())}});
    } else if (*dc_cmd) {
      out.emit(io::to_json(divisor_class(io::cycle_from_json(parse_json(js)))));
    } else if (*daj_cmd) {
      auto [cycle, cls] = build_Daj(io::face_from_json(parse_json(js)), arg_a, arg_j - 1);
      out.emit(json{{"cycle", io::to_json(cycle)}, {"class", io::to_json(cls)}});
    } else if (*rff_cmd) {
      ConjClassTuple A = rigid_from_face(io::face_from_json(parse_json(js)), arg_a, arg_j - 1);
      auto numerics = rigidity_numerics(A);
      out.emit(json{{"classes", io::to_json(A)},
                    {"rigidity", json{{"lhs", numerics.lhs}, {"rhs", numerics.rhs},
                                      {"bound_ok", numerics.bound_ok}}}});
    } else if (*fd_cmd) {
      out.emit(io::to_json(
          face_decompose(io::bundle_from_json(parse_json(js2)), io::face_from_json(parse_json(js)))));
    } else if (*ind_cmd) {
      json j = parse_json(js2);
      LeviBundle levi;
      levi.sub_level = j.at("sub").at("level").get<Int>();
      levi.quot_level = j.at("quot").at("level").get<Int>();
      FaceData f = io::face_from_json(parse_json(js));
      for (const auto& w : j.at("sub").at("weights")) levi.sub.push_back(io::weight_from_json(w, f.r));
      for (const auto& w : j.at("quot").at("weights"))
        levi.quot.push_back(io::weight_from_json(w, f.n - f.r));
      out.emit(io::to_json(induce(levi, f)));
    } else if (*oracle_cmd) {
      json arr = json::array();
      for (const auto& tuple : dd_vertex_enumeration(arg_n, arg_s)) arr.push_back(io::to_json(tuple));
      out.emit(json{{"vertices", arr}});
    } else if (*repro_cmd) {
      return run_repro(name, out.format == "json");
    }
  } catch (const internal_error& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
