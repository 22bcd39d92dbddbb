#include "fuchsian/json_io.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

namespace fuchsian {

namespace {

const Json& field(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(std::string("missing field: ") + key);
  return *it;
}

Int parse_int(const std::string& s) {
  try {
    return Int(s);
  } catch (const std::exception&) {
    throw SchemaError("bad integer: " + s);
  }
}

Json int_json(const Int& n) { return n.str(); }

Json mat3_to_json(const Mat3& m) {
  Json rows = Json::array();
  for (int i = 0; i < 3; ++i) {
    Json row = Json::array();
    for (int j = 0; j < 3; ++j) row.push_back(rational_str(m.m[i][j]));
    rows.push_back(row);
  }
  return rows;
}

Mat3 mat3_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 3) throw SchemaError("bad 3x3 matrix");
  Mat3 m;
  for (int i = 0; i < 3; ++i) {
    if (!j[i].is_array() || j[i].size() != 3) throw SchemaError("bad 3x3 matrix");
    for (int k = 0; k < 3; ++k) m.m[i][k] = parse_rational(j[i][k].get<std::string>());
  }
  return m;
}

}  // namespace

std::string rational_str(const Rational& q) {
  std::string s = numerator(q).str();
  if (denominator(q) != 1) s += "/" + denominator(q).str();
  return s;
}

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den <= 0) throw SchemaError("bad rational: " + s);
    return Rational(num, den);
  } catch (const SchemaError&) {
    throw;
  } catch (const std::exception&) {
    throw SchemaError("bad rational: " + s);
  }
}

Json boundary_to_json(const BoundaryPoint& r) {
  return r.is_infinity ? Json("inf") : Json(rational_str(r.value));
}

BoundaryPoint boundary_from_json(const Json& j) {
  std::string s = j.get<std::string>();
  if (s == "inf") return BoundaryPoint::infinity();
  return BoundaryPoint::of(parse_rational(s));
}

Json vector_to_json(const LorentzVector& v) {
  return Json::array({rational_str(v.x1), rational_str(v.x2), rational_str(v.x0)});
}

LorentzVector vector_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 3) throw SchemaError("bad vector");
  return LorentzVector{parse_rational(j[0].get<std::string>()),
                       parse_rational(j[1].get<std::string>()),
                       parse_rational(j[2].get<std::string>())};
}

Json mat2_to_json(const Mat2& m) {
  return Json::array({Json::array({rational_str(m.a), rational_str(m.b)}),
                      Json::array({rational_str(m.c), rational_str(m.d)})});
}

Mat2 mat2_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 ||
      !j[1].is_array() || j[1].size() != 2)
    throw SchemaError("bad 2x2 matrix");
  return Mat2{parse_rational(j[0][0].get<std::string>()),
              parse_rational(j[0][1].get<std::string>()),
              parse_rational(j[1][0].get<std::string>()),
              parse_rational(j[1][1].get<std::string>())};
}

Json blueprint_to_json(const GroupBlueprint& b) {
  Json j;
  j["schema"] = "fuchsian-blueprint/1";

  Json in;
  Json points = Json::array();
  for (const Rational& y : b.input.points) points.push_back(rational_str(y));
  in["points"] = points;
  in["prime"] = int_json(b.input.prime_p);
  in["v0"] = rational_str(*b.input.v0);
  in["x1"] = rational_str(*b.input.x1);
  Json classes = Json::array();
  for (const Int& c : b.input.classes) classes.push_back(int_json(c));
  in["classes"] = classes;
  in["t_init"] = rational_str(b.input.t_init);
  in["retry_cap"] = b.input.retry_cap;
  j["input"] = in;

  j["n"] = b.n;
  Json sig;
  sig["genus"] = 0;
  sig["cone_orders"] = std::vector<int>(b.n + 1, 2);
  sig["cusps"] = 1;
  sig["boundary_components"] = 0;
  j["signature"] = sig;

  Json gens = Json::array();
  for (const InvolutionData& g : b.generators) {
    Json gj;
    gj["index"] = g.index;
    gj["f"] = vector_to_json(g.f);
    gj["lorentz"] = mat3_to_json(g.lorentz);
    gj["proj"] = mat2_to_json(g.proj);
    gj["a"] = rational_str(g.a);
    gj["b_sq"] = rational_str(g.b_sq);
    gj["det_class"] = int_json(g.det_class);
    gens.push_back(gj);
  }
  j["generators"] = gens;

  Json poly = Json::array();
  for (const BoundaryPoint& v : b.polygon) poly.push_back(boundary_to_json(v));
  j["polygon"] = poly;

  Json trace;
  Json steps = Json::array();
  for (const SteeredStep& s : b.trace.steps) {
    Json sj;
    sj["index"] = s.index;
    sj["x"] = boundary_to_json(s.x);
    sj["v"] = boundary_to_json(s.v);
    sj["f"] = vector_to_json(s.f);
    sj["lambda"] = rational_str(s.lambda);
    sj["t"] = rational_str(s.t);
    sj["abs_inner"] = rational_str(s.abs_inner);
    steps.push_back(sj);
  }
  trace["steps"] = steps;
  trace["f_n"] = vector_to_json(b.trace.f_n);
  trace["V"] = vector_to_json(b.trace.V);
  trace["f_0"] = vector_to_json(b.trace.f_0);
  j["trace"] = trace;
  return j;
}

GroupBlueprint blueprint_from_json(const Json& j) {
  if (!j.is_object()) throw SchemaError("blueprint must be an object");
  if (field(j, "schema").get<std::string>() != "fuchsian-blueprint/1")
    throw SchemaError("unsupported schema");

  GroupBlueprint b;
  const Json& in = field(j, "input");
  for (const Json& y : field(in, "points"))
    b.input.points.push_back(parse_rational(y.get<std::string>()));
  b.input.prime_p = parse_int(field(in, "prime").get<std::string>());
  b.input.v0 = parse_rational(field(in, "v0").get<std::string>());
  b.input.x1 = parse_rational(field(in, "x1").get<std::string>());
  for (const Json& c : field(in, "classes"))
    b.input.classes.push_back(parse_int(c.get<std::string>()));
  b.input.t_init = parse_rational(field(in, "t_init").get<std::string>());
  b.input.retry_cap = field(in, "retry_cap").get<int>();

  b.n = field(j, "n").get<int>();
  for (const Json& gj : field(j, "generators")) {
    InvolutionData g;
    g.index = field(gj, "index").get<int>();
    g.f = vector_from_json(field(gj, "f"));
    g.lorentz = mat3_from_json(field(gj, "lorentz"));
    g.proj = mat2_from_json(field(gj, "proj"));
    g.a = parse_rational(field(gj, "a").get<std::string>());
    g.b_sq = parse_rational(field(gj, "b_sq").get<std::string>());
    g.det_class = parse_int(field(gj, "det_class").get<std::string>());
    b.generators.push_back(g);
  }
  for (const Json& v : field(j, "polygon")) b.polygon.push_back(boundary_from_json(v));

  const Json& trace = field(j, "trace");
  for (const Json& sj : field(trace, "steps")) {
    SteeredStep s;
    s.index = field(sj, "index").get<int>();
    s.x = boundary_from_json(field(sj, "x"));
    s.v = boundary_from_json(field(sj, "v"));
    s.f = vector_from_json(field(sj, "f"));
    s.lambda = parse_rational(field(sj, "lambda").get<std::string>());
    s.t = parse_rational(field(sj, "t").get<std::string>());
    s.abs_inner = parse_rational(field(sj, "abs_inner").get<std::string>());
    b.trace.steps.push_back(s);
  }
  b.trace.f_n = vector_from_json(field(trace, "f_n"));
  b.trace.v_n = BoundaryPoint::infinity();
  b.trace.V = vector_from_json(field(trace, "V"));
  b.trace.f_0 = vector_from_json(field(trace, "f_0"));

  if (static_cast<int>(b.generators.size()) != b.n + 1)
    throw SchemaError("generator count does not match n");
  if (static_cast<int>(b.polygon.size()) != b.n + 1)
    throw SchemaError("polygon size does not match n");
  return b;
}

Json lattice_to_json(const LatticeClass& l) {
  Json j;
  j["p"] = int_json(l.p);
  j["a"] = int_json(l.a);
  j["b"] = rational_str(l.b);
  return j;
}

LatticeClass lattice_from_json(const Json& j) {
  return LatticeClass{parse_int(field(j, "p").get<std::string>()),
                      parse_int(field(j, "a").get<std::string>()),
                      parse_rational(field(j, "b").get<std::string>())};
}

Json verdict_to_json(const StabilizationVerdict& v) {
  Json j;
  j["prime"] = int_json(v.prime);
  if (v.stabilizes) {
    j["verdict"] = "stabilizes";
    j["witness"] = lattice_to_json(*v.witness);
  } else {
    j["verdict"] = "no";
    j["violating_pair"] = {v.violation->m, v.violation->k};
    j["reason"] = v.violation->reason;
  }
  return j;
}

Json certificate_to_json(const NoncommensurabilityCertificate& c) {
  Json j;
  j["schema"] = "fuchsian-certificate/1";
  j["prime"] = int_json(c.prime);
  j["group_a"] = c.group_a;
  j["group_b"] = c.group_b;
  j["witness"] = lattice_to_json(c.witness);
  j["violating_pair"] = {c.violation.m, c.violation.k};
  j["reason"] = c.violation.reason;
  j["note"] = c.note;
  return j;
}

NoncommensurabilityCertificate certificate_from_json(const Json& j) {
  if (!j.is_object()) throw SchemaError("certificate must be an object");
  if (field(j, "schema").get<std::string>() != "fuchsian-certificate/1")
    throw SchemaError("unsupported schema");
  NoncommensurabilityCertificate c;
  c.prime = parse_int(field(j, "prime").get<std::string>());
  c.group_a = field(j, "group_a").get<int>();
  c.group_b = field(j, "group_b").get<int>();
  c.witness = lattice_from_json(field(j, "witness"));
  const Json& vp = field(j, "violating_pair");
  c.violation.m = vp.at(0).get<int>();
  c.violation.k = vp.at(1).get<int>();
  c.violation.reason = field(j, "reason").get<std::string>();
  c.note = field(j, "note").get<std::string>();
  return c;
}

Json family_manifest(const std::vector<FamilyMember>& family,
                     const std::vector<NoncommensurabilityCertificate>& certs) {
  Json j;
  j["schema"] = "fuchsian-family/1";
  j["count"] = family.size();
  Json primes = Json::array();
  Json groups = Json::array();
  for (size_t i = 0; i < family.size(); ++i) {
    primes.push_back(int_json(family[i].prime));
    groups.push_back("group_" + std::to_string(i + 1) + ".json");
  }
  j["primes"] = primes;
  j["groups"] = groups;
  Json cs = Json::array();
  for (const auto& c : certs)
    cs.push_back("cert_" + std::to_string(c.group_a) + "_" +
                 std::to_string(c.group_b) + ".json");
  j["certificates"] = cs;
  return j;
}

GroupBlueprint load_blueprint(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw SchemaError(std::string("parse error: ") + e.what());
  }
  return blueprint_from_json(j);
}

void save_json(const Json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace fuchsian
