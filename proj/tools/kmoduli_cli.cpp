// Command-line front end: every operation of the library behind one binary
// with JSON input/output. Exit codes: 0 success, 1 domain error (JSON
// {error, detail} on stdout), 2 usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "kmoduli/cbf.hpp"
#include "kmoduli/fixtures.hpp"
#include "kmoduli/json_io.hpp"
#include "kmoduli/models.hpp"
#include "kmoduli/suite.hpp"

namespace km = kmoduli;

namespace {

km::json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw km::Error("io error", "cannot open " + path);
  km::json j;
  in >> j;
  return j;
}

km::SurfaceModel model_by_spec(const std::string& spec) {
  if (spec == "p1xp1") return km::p1xp1();
  if (spec.rfind("hirzebruch:", 0) == 0) return km::hirzebruch(std::stol(spec.substr(11)));
  if (spec.rfind("wblowup:", 0) == 0) {
    std::string rest = spec.substr(8);
    auto comma = rest.find(',');
    if (comma == std::string::npos) throw km::Error("usage", "wblowup:a,b");
    return km::weighted_blowup_p1xp1(std::stol(rest.substr(0, comma)),
                                     std::stol(rest.substr(comma + 1)));
  }
  return km::model_from_json(load_json(spec));
}

km::DivisorClass class_from_csv(const std::string& csv) {
  km::DivisorClass out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) out.coords.push_back(km::Scalar::parse(item));
  return out;
}

void emit(const km::json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact K-stability, GIT and threshold computations for log pairs over P^1"};
  app.require_subcommand(1);

  // model
  auto* model_cmd = app.add_subcommand("model", "emit a built-in surface model as JSON");
  std::string model_kind;
  long model_m = 2, model_a = 1, model_b = 4;
  model_cmd->add_option("kind", model_kind, "p1xp1 | hirzebruch | wblowup")->required();
  model_cmd->add_option("--m", model_m, "Hirzebruch parameter");
  model_cmd->add_option("--a", model_a, "first blow-up weight");
  model_cmd->add_option("--b", model_b, "second blow-up weight");

  // zariski
  auto* zariski_cmd = app.add_subcommand("zariski", "piecewise Zariski decomposition of a ray");
  std::string z_model, z_start, z_direction, z_fixture, z_c = "1/4";
  zariski_cmd->add_option("--model", z_model, "p1xp1 | hirzebruch:m | wblowup:a,b | model.json");
  zariski_cmd->add_option("--start", z_start, "start class, comma-separated scalars");
  zariski_cmd->add_option("--direction", z_direction, "ray direction class");
  zariski_cmd->add_option("--fixture", z_fixture, "built-in configuration, e.g. p14/E");
  zariski_cmd->add_option("--c", z_c, "boundary coefficient for --fixture");

  // beta / s-invariant
  std::string b_fixture = "p14/E", b_c = "1/4";
  auto* beta_cmd = app.add_subcommand("beta", "log discrepancy minus expected vanishing order");
  beta_cmd->add_option("--fixture", b_fixture, "configuration id")->required();
  beta_cmd->add_option("--c", b_c, "boundary coefficient (scalar)");
  auto* s_cmd = app.add_subcommand("s-invariant", "expected vanishing order S");
  s_cmd->add_option("--fixture", b_fixture, "configuration id")->required();
  s_cmd->add_option("--c", b_c, "boundary coefficient (scalar)");

  // wall-scan
  auto* wall_cmd = app.add_subcommand("wall-scan", "walls of beta in the coefficient c");
  std::string w_fixture = "f2d0/f1";
  int w_degree_bound = 4;
  wall_cmd->add_option("--fixture", w_fixture, "configuration id")->required();
  wall_cmd->add_option("--degree-bound", w_degree_bound, "interpolation degree bound");

  // git-check
  auto* git_cmd = app.add_subcommand("git-check", "GIT stability of a bidegree form");
  std::string g_coeffs;
  int g_d1 = 4, g_d2 = 1;
  git_cmd->add_option("--d1", g_d1, "x-degree")->required();
  git_cmd->add_option("--d2", g_d2, "y-degree")->required();
  git_cmd->add_option("--coeffs", g_coeffs, "JSON term list [{i,j,num,den}]")->required();

  // lct
  auto* lct_cmd = app.add_subcommand("lct", "log canonical threshold along the fiber");
  std::string l_germ, l_fiber = "y", l_a = "1/2";
  lct_cmd->add_option("--germ", l_germ, "JSON germ [{alpha,beta,num,den}]")->required();
  lct_cmd->add_option("--fiber", l_fiber, "fiber axis: x or y");
  lct_cmd->add_option("--a", l_a, "boundary coefficient on the curve");

  // mmp-base
  auto* mmp_cmd = app.add_subcommand("mmp-base", "tail-contraction MMP on a decorated graph");
  std::string m_graph;
  bool m_single = false;
  mmp_cmd->add_option("--graph", m_graph, "JSON decorated dual graph")->required();
  mmp_cmd->add_flag("--step", m_single, "perform a single step instead of running to minimal");

  // enumerate-quasimaps
  auto* enum_cmd = app.add_subcommand("enumerate-quasimaps", "combinatorial quasimap types");
  int e_degree = 6;
  enum_cmd->add_option("--degree", e_degree, "total map degree")->required();

  // cbf
  auto* cbf_cmd = app.add_subcommand("cbf", "canonical bundle formula degrees");
  long c_degf = 0;
  cbf_cmd->add_option("--deg-f", c_degf, "degree of the classifying cover");
  auto* hb_cmd = cbf_cmd->add_subcommand("hirzebruch-bound", "effectivity bound 6n <= deg f");
  long hb_n = 0, hb_degf = 6;
  hb_cmd->add_option("--n", hb_n, "Hirzebruch index")->required();
  hb_cmd->add_option("--deg-f", hb_degf, "degree of the cover")->required();
  auto* n4_cmd = cbf_cmd->add_subcommand("n4-degree", "cover degree of a smooth (n,4)-curve");
  long n4_n = 1;
  n4_cmd->add_option("--n", n4_n, "first bidegree component")->required();

  // paper-suite
  app.add_subcommand("paper-suite", "run every acceptance fixture and print a pass/fail table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (model_cmd->parsed()) {
      if (model_kind == "p1xp1") emit(km::model_json(km::p1xp1()));
      else if (model_kind == "hirzebruch") emit(km::model_json(km::hirzebruch(model_m)));
      else if (model_kind == "wblowup")
        emit(km::model_json(km::weighted_blowup_p1xp1(model_a, model_b)));
      else {
        std::cerr << "unknown model kind\n";
        return 2;
      }
    } else if (zariski_cmd->parsed()) {
      km::SurfaceModel model;
      km::DivisorClass start, direction;
      if (!z_fixture.empty()) {
        km::RayProblem pb = km::fixtures::by_name(z_fixture);
        model = pb.model;
        start = pb.polarization(km::Scalar::parse(z_c));
        direction = pb.direction;
      } else {
        if (z_model.empty() || z_start.empty() || z_direction.empty()) {
          std::cerr << "need --model/--start/--direction or --fixture\n";
          return 2;
        }
        model = model_by_spec(z_model);
        start = class_from_csv(z_start);
        direction = class_from_csv(z_direction);
      }
      emit(km::decomposition_json(km::decompose_ray(model, start, direction)));
    } else if (beta_cmd->parsed() || s_cmd->parsed()) {
      km::RayProblem pb = km::fixtures::by_name(b_fixture);
      km::Scalar c = km::Scalar::parse(b_c);
      km::json j;
      j["fixture"] = pb.name;
      j["c"] = km::scalar_json(c);
      j["A"] = km::scalar_json(km::log_discrepancy(pb.spec, c));
      j["S"] = km::scalar_json(km::s_invariant(pb, c));
      if (beta_cmd->parsed()) j["beta"] = km::scalar_json(km::beta(pb, c));
      emit(j);
    } else if (wall_cmd->parsed()) {
      km::RayProblem pb = km::fixtures::by_name(w_fixture);
      km::json j = km::wallscan_json(km::wall_scan(pb, w_degree_bound));
      j["fixture"] = pb.name;
      emit(j);
    } else if (git_cmd->parsed()) {
      km::json terms = load_json(g_coeffs);
      km::json wrapper;
      if (terms.is_array()) {
        wrapper["d1"] = g_d1;
        wrapper["d2"] = g_d2;
        wrapper["terms"] = terms;
      } else {
        wrapper = terms;
      }
      km::BiForm f = km::biform_from_json(wrapper);
      emit(km::git_result_json(km::git_status(f), f));
    } else if (lct_cmd->parsed()) {
      km::json terms = load_json(l_germ);
      km::json wrapper;
      if (terms.is_array()) {
        wrapper["fiber"] = l_fiber;
        wrapper["a"] = l_a;
        wrapper["terms"] = terms;
      } else {
        wrapper = terms;
      }
      km::LocalPair p = km::localpair_from_json(wrapper);
      km::json j = km::threshold_json(km::lct_along_fiber(p));
      auto bad = km::degenerate_edges(p);
      j["degenerate_edges"] = bad;
      emit(j);
    } else if (mmp_cmd->parsed()) {
      km::DecoratedDualGraph g = km::graph_from_json(load_json(m_graph));
      km::json j;
      j["warnings"] = g.validate();
      j["total_degree_before"] = km::total_degree(g).str();
      if (m_single) {
        auto step = km::mmp_step(g);
        if (step) {
          j["status"] = "contracted";
          j["contracted"] = step->contracted;
          j["deposited"] = step->deposited.str();
          j["graph"] = km::graph_json(step->graph);
          j["total_degree_after"] = km::total_degree(step->graph).str();
        } else {
          j["status"] = "minimal";
          j["graph"] = km::graph_json(g);
        }
      } else {
        km::DecoratedDualGraph done = km::run_mmp(g);
        j["status"] = "minimal";
        j["graph"] = km::graph_json(done);
        j["total_degree_after"] = km::total_degree(done).str();
      }
      emit(j);
    } else if (enum_cmd->parsed()) {
      emit(km::quasimap_types_json(km::enumerate_quasimap_types(e_degree)));
    } else if (cbf_cmd->parsed()) {
      km::json j;
      if (hb_cmd->parsed()) {
        auto r = km::hirzebruch_bound_check(hb_n, hb_degf);
        j["consistent"] = r.consistent;
        j["D.e"] = r.d_dot_e.str();
        j["(D-e).e"] = r.d_minus_e_dot_e.str();
        j["detail"] = r.detail;
      } else if (n4_cmd->parsed()) {
        j["n"] = n4_n;
        j["map_degree"] = km::n4_curve_map_degree(n4_n);
        j["moduli_degree"] = km::moduli_degree_from_map(km::n4_curve_map_degree(n4_n)).str();
      } else if (c_degf > 0) {
        j["deg_f"] = c_degf;
        j["moduli_degree"] = km::moduli_degree_from_map(c_degf).str();
      } else {
        std::cerr << "cbf needs --deg-f or a subcommand\n";
        return 2;
      }
      emit(j);
    } else {  // paper-suite
      auto results = km::run_paper_suite();
      int failures = km::print_suite(std::cout, results);
      return failures == 0 ? 0 : 1;
    }
  } catch (const km::Error& e) {
    km::json err;
    err["error"] = e.code();
    err["detail"] = e.what();
    std::cout << err.dump(2) << "\n";
    return 1;
  }
  return 0;
}
