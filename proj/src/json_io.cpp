#include "kmoduli/json_io.hpp"

namespace kmoduli {

json scalar_json(const Scalar& s) {
  json j;
  j["exact"] = s.str();
  if (!s.is_rational()) j["pretty"] = s.pretty();
  j["display"] = s.decimal12();
  return j;
}

Scalar scalar_from_json(const json& j) {
  if (j.is_string()) return Scalar::parse(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(Rational(j.get<long>()));
  if (j.is_object() && j.contains("exact")) return Scalar::parse(j["exact"].get<std::string>());
  throw Error("parse error", "expected a scalar");
}

json class_json(const DivisorClass& c) {
  json arr = json::array();
  for (const auto& v : c.coords) arr.push_back(v.str());
  return arr;
}

DivisorClass class_from_json(const json& j) {
  if (!j.is_array()) throw Error("parse error", "expected a class array");
  DivisorClass out;
  for (const auto& v : j) out.coords.push_back(scalar_from_json(v));
  return out;
}

json model_json(const SurfaceModel& m) {
  json j;
  j["name"] = m.name;
  j["basis"] = m.basis_names;
  json gram = json::array();
  for (const auto& row : m.gram) {
    json r = json::array();
    for (const auto& v : row) r.push_back(v.str());
    gram.push_back(r);
  }
  j["gram"] = gram;
  j["canonical"] = class_json(m.canonical);
  json curves = json::array();
  for (const auto& c : m.negative_curves) {
    curves.push_back({{"name", c.name},
                      {"class", class_json(c.cls)},
                      {"self_intersection", c.self_intersection.str()}});
  }
  j["negative_curves"] = curves;
  if (m.exceptional_discrepancy) j["exceptional_discrepancy"] = m.exceptional_discrepancy->str();
  return j;
}

SurfaceModel model_from_json(const json& j) {
  SurfaceModel m;
  m.name = j.value("name", "model");
  for (const auto& b : j.at("basis")) m.basis_names.push_back(b.get<std::string>());
  for (const auto& row : j.at("gram")) {
    std::vector<Rational> r;
    for (const auto& v : row) r.push_back(Rational::parse(v.get<std::string>()));
    m.gram.push_back(std::move(r));
  }
  if (m.gram.size() != m.basis_names.size())
    throw Error("parse error", "gram size does not match basis");
  for (const auto& row : m.gram)
    if (row.size() != m.basis_names.size()) throw Error("parse error", "gram is not square");
  for (size_t i = 0; i < m.gram.size(); ++i)
    for (size_t k = 0; k < m.gram.size(); ++k)
      if (m.gram[i][k] != m.gram[k][i]) throw Error("parse error", "gram is not symmetric");
  m.canonical = class_from_json(j.at("canonical"));
  if (j.contains("negative_curves")) {
    for (const auto& c : j.at("negative_curves")) {
      NamedCurve nc;
      nc.name = c.at("name").get<std::string>();
      nc.cls = class_from_json(c.at("class"));
      nc.self_intersection = Rational::parse(c.at("self_intersection").get<std::string>());
      m.negative_curves.push_back(std::move(nc));
    }
  }
  if (j.contains("exceptional_discrepancy"))
    m.exceptional_discrepancy = Rational::parse(j.at("exceptional_discrepancy").get<std::string>());
  return m;
}

json decomposition_json(const RayDecomposition& dec) {
  json j;
  json bps = json::array();
  for (const auto& b : dec.breakpoints) bps.push_back(scalar_json(b));
  j["breakpoints"] = bps;
  j["threshold"] = scalar_json(dec.threshold());
  json pieces = json::array();
  for (const auto& piece : dec.pieces) {
    json p;
    p["interval"] = {piece.lo.str(), piece.hi.str()};
    json pos = json::array();
    for (const auto& lin : piece.positive.coords)
      pos.push_back({{"constant", lin.c0.str()}, {"slope", lin.c1.str()}});
    p["positive"] = pos;
    json neg = json::array();
    for (const auto& [name, lin] : piece.negative)
      neg.push_back(
          {{"curve", name}, {"constant", lin.c0.str()}, {"slope", lin.c1.str()}});
    p["negative"] = neg;
    pieces.push_back(p);
  }
  j["pieces"] = pieces;
  return j;
}

json biform_json(const BiForm& f) {
  json j;
  j["d1"] = f.d1;
  j["d2"] = f.d2;
  json terms = json::array();
  for (const auto& [ij, c] : f.terms)
    terms.push_back({{"i", ij.first},
                     {"j", ij.second},
                     {"num", c.num().get_str()},
                     {"den", c.den().get_str()}});
  j["terms"] = terms;
  return j;
}

BiForm biform_from_json(const json& j) {
  BiForm f;
  f.d1 = j.at("d1").get<int>();
  f.d2 = j.at("d2").get<int>();
  if (f.d1 < 0 || f.d2 < 0) throw Error("parse error", "negative bidegree");
  for (const auto& t : j.at("terms")) {
    mpz_class num(t.at("num").is_string() ? mpz_class(t.at("num").get<std::string>())
                                          : mpz_class(t.at("num").get<long>()));
    mpz_class den(t.at("den").is_string() ? mpz_class(t.at("den").get<std::string>())
                                          : mpz_class(t.at("den").get<long>()));
    f.set(t.at("i").get<int>(), t.at("j").get<int>(), Rational(num, den));
  }
  return f;
}

namespace {

json frame_json(const Frame& fr) {
  auto mat = [](const Rational m[2][2]) {
    return json::array({json::array({m[0][0].str(), m[0][1].str()}),
                        json::array({m[1][0].str(), m[1][1].str()})});
  };
  return {{"x", mat(fr.x)}, {"y", mat(fr.y)}, {"origin", fr.origin}};
}

}  // namespace

json git_result_json(const GitResult& r, const BiForm& f) {
  json j;
  j["verdict"] = to_string(r.verdict);
  j["d1"] = f.d1;
  j["d2"] = f.d2;
  json hull = json::array();
  for (const auto& p : r.certificate.hull) hull.push_back({{"i", p.i}, {"j", p.j}});
  j["certificate"] = {{"frame", frame_json(r.certificate.frame)},
                      {"hull", hull},
                      {"barycenter_position", to_string(r.certificate.position)}};
  j["irrational_special_locus"] = r.irrational_special_locus;
  return j;
}

json localpair_json(const LocalPair& p) {
  json j;
  j["fiber"] = p.fiber == FiberAxis::Y ? "y" : "x";
  j["a"] = p.a.str();
  json terms = json::array();
  for (const auto& [ab, c] : p.support)
    terms.push_back({{"alpha", ab.first},
                     {"beta", ab.second},
                     {"num", c.num().get_str()},
                     {"den", c.den().get_str()}});
  j["terms"] = terms;
  return j;
}

LocalPair localpair_from_json(const json& j) {
  LocalPair p;
  std::string fiber = j.value("fiber", "y");
  if (fiber != "x" && fiber != "y") throw Error("parse error", "fiber must be 'x' or 'y'");
  p.fiber = fiber == "y" ? FiberAxis::Y : FiberAxis::X;
  if (j.contains("a")) p.a = Rational::parse(j.at("a").get<std::string>());
  for (const auto& t : j.at("terms")) {
    mpz_class num(t.at("num").is_string() ? mpz_class(t.at("num").get<std::string>())
                                          : mpz_class(t.at("num").get<long>()));
    mpz_class den(t.at("den").is_string() ? mpz_class(t.at("den").get<std::string>())
                                          : mpz_class(t.at("den").get<long>()));
    p.set(t.at("alpha").get<long>(), t.at("beta").get<long>(), Rational(num, den));
  }
  return p;
}

json threshold_json(const ThresholdResult& r) {
  return {{"lct", r.lct.str()},
          {"b", r.b.str()},
          {"witness_weight", {r.witness_weight.first, r.witness_weight.second}}};
}

json graph_json(const DecoratedDualGraph& g) {
  json comps = json::array();
  for (const auto& c : g.components) {
    json boundary = json::array();
    for (const auto& bp : c.boundary)
      boundary.push_back({{"coefficient", bp.coefficient.str()}, {"location", bp.location}});
    comps.push_back({{"genus", c.genus},
                     {"moduli_degree", c.moduli_degree.str()},
                     {"boundary", boundary},
                     {"markings", c.markings}});
  }
  json edges = json::array();
  for (const auto& e : g.edges)
    edges.push_back({{"a", e.a}, {"b", e.b}, {"stabilizer", e.stabilizer}});
  return {{"components", comps}, {"edges", edges}};
}

DecoratedDualGraph graph_from_json(const json& j) {
  DecoratedDualGraph g;
  for (const auto& c : j.at("components")) {
    Component comp;
    comp.genus = c.value("genus", 0L);
    comp.moduli_degree = Rational::parse(c.at("moduli_degree").get<std::string>());
    if (c.contains("boundary")) {
      for (const auto& bp : c.at("boundary"))
        comp.boundary.push_back({Rational::parse(bp.at("coefficient").get<std::string>()),
                                 bp.value("location", "")});
    }
    comp.markings = c.value("markings", 0L);
    g.components.push_back(std::move(comp));
  }
  if (j.contains("edges")) {
    for (const auto& e : j.at("edges"))
      g.edges.push_back({e.at("a").get<size_t>(), e.at("b").get<size_t>(),
                         e.value("stabilizer", 1)});
  }
  return g;
}

json quasimap_types_json(const std::vector<QuasimapType>& types) {
  json arr = json::array();
  for (const auto& t : types) {
    json opts = json::array();
    for (const auto& ms : t.stabilizer_options) opts.push_back(ms);
    arr.push_back(
        {{"degrees", t.degrees}, {"stabilizer_options", opts}, {"contracted", t.contracted}});
  }
  return {{"types", arr}, {"count", types.size()}};
}

json wallscan_json(const WallScanResult& r) {
  json walls = json::array();
  for (const auto& w : r.walls) walls.push_back(scalar_json(w));
  json chambers = json::array();
  for (const auto& ch : r.chambers) {
    json c;
    c["interval"] = {ch.lo.str(), ch.hi.str()};
    c["numerator"] = ch.numerator.str();
    c["reduced_numerator"] = ch.reduced_numerator.str();
    json pat = json::array();
    for (const auto& piece : ch.pattern) pat.push_back(piece);
    c["breakpoint_pattern"] = pat;
    json cw = json::array();
    for (const auto& w : ch.walls) cw.push_back(scalar_json(w));
    c["walls"] = cw;
    chambers.push_back(c);
  }
  return {{"walls", walls}, {"chambers", chambers}};
}

}  // namespace kmoduli
