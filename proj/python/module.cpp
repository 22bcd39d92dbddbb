#include <pybind11/pybind11.h>

#include <nlohmann/json.hpp>

#include "fuchsian/json_io.hpp"
#include "fuchsian/svg.hpp"

namespace py = pybind11;
using namespace fuchsian;

namespace {

ConstructionInput input_from_json(const Json& j) {
  ConstructionInput in;
  for (const auto& v : j.at("points")) in.points.push_back(parse_rational(v.get<std::string>()));
  if (j.contains("prime")) in.prime_p = Int(j.at("prime").get<std::string>());
  if (j.contains("v0")) in.v0 = parse_rational(j.at("v0").get<std::string>());
  if (j.contains("x1")) in.x1 = parse_rational(j.at("x1").get<std::string>());
  if (j.contains("t_init")) in.t_init = parse_rational(j.at("t_init").get<std::string>());
  if (j.contains("classes"))
    for (const auto& v : j.at("classes")) in.classes.push_back(Int(v.get<std::string>()));
  return in;
}

std::string construct_json(const std::string& request) {
  return blueprint_to_json(construct_group(input_from_json(Json::parse(request)))).dump(2);
}

std::string verify_json(const std::string& blueprint) {
  GroupBlueprint b = blueprint_from_json(Json::parse(blueprint));
  ValidationReport rep = validate_blueprint(b);
  Json out;
  out["all_passed"] = rep.all_passed();
  out["checks"] = Json::array();
  for (const CheckResult& c : rep.checks)
    out["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return out.dump(2);
}

std::string tree_check_json(const std::string& blueprint, const std::string& prime) {
  GroupBlueprint b = blueprint_from_json(Json::parse(blueprint));
  return verdict_to_json(group_stabilizes(b, Int(prime))).dump(2);
}

std::string build_family_json(const std::string& request) {
  Json j = Json::parse(request);
  int count = j.at("count").get<int>();
  ConstructionInput base = input_from_json(j);
  std::vector<Rational> pts = base.points;
  std::vector<FamilyMember> fam = build_family(pts, count, base);
  std::vector<NoncommensurabilityCertificate> certs = certify_family(fam);
  Json out;
  out["manifest"] = family_manifest(fam, certs);
  out["groups"] = Json::array();
  for (const FamilyMember& f : fam) out["groups"].push_back(blueprint_to_json(f.blueprint));
  out["certificates"] = Json::array();
  for (const auto& c : certs) out["certificates"].push_back(certificate_to_json(c));
  return out.dump(2);
}

std::string render_svg_json(const std::string& blueprint) {
  GroupBlueprint b = blueprint_from_json(Json::parse(blueprint));
  return render_svg(b, RenderSpec::fit(b));
}

}  // namespace

PYBIND11_MODULE(_fuchsian, m) {
  m.doc() = "exact Fuchsian groups with prescribed rational hyperbolic fixed "
            "points, with tree-based noncommensurability certificates";
  m.def("construct_json", &construct_json, py::arg("request"),
        "build a blueprint from a JSON request and return it as JSON");
  m.def("verify_json", &verify_json, py::arg("blueprint"),
        "re-run all validation checks on a blueprint JSON document");
  m.def("tree_check_json", &tree_check_json, py::arg("blueprint"), py::arg("prime"),
        "stabilization verdict for the blueprint at a prime, as JSON");
  m.def("build_family_json", &build_family_json, py::arg("request"),
        "pairwise noncommensurable family with certificates, as JSON");
  m.def("render_svg", &render_svg_json, py::arg("blueprint"),
        "deterministic SVG of the fundamental domain");
  m.def("vp", [](const std::string& x, const std::string& p) {
          return vp(parse_rational(x), Int(p)).str();
        }, py::arg("x"), py::arg("p"), "p-adic valuation of a rational");
  m.def("next_prime_3mod4", [](const std::string& n) {
          return next_prime_3mod4(Int(n)).str();
        }, py::arg("n"), "smallest prime congruent to 3 mod 4 strictly above n");
}
