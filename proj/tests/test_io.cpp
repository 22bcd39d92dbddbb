#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <nlohmann/json.hpp>

#include "fuchsian/json_io.hpp"
#include "fuchsian/svg.hpp"

using namespace fuchsian;

namespace {

GroupBlueprint golden() {
  ConstructionInput in;
  in.points = {0, 2};
  in.prime_p = 3;
  in.v0 = -2;
  in.x1 = -1;
  return construct_group(in);
}

GroupBlueprint figure_run() {
  ConstructionInput in;
  in.points = {0, 1, 2, 3};
  in.prime_p = 3;
  return construct_group(in);
}

size_t count_occurrences(const std::string& hay, const std::string& needle) {
  size_t n = 0;
  for (size_t pos = hay.find(needle); pos != std::string::npos;
       pos = hay.find(needle, pos + needle.size()))
    ++n;
  return n;
}

}  // namespace

TEST_CASE("rational strings") {
  CHECK(rational_str(Rational(-3, 4)) == "-3/4");
  CHECK(rational_str(Rational(7)) == "7");
  CHECK(rational_str(Rational(0)) == "0");
  CHECK(parse_rational("-3/4") == Rational(-3, 4));
  CHECK(parse_rational("7") == 7);
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK_THROWS_AS(parse_rational("x"), SchemaError);
  CHECK_THROWS_AS(parse_rational("1/0"), SchemaError);
}

TEST_CASE("blueprint round trip is the identity") {
  GroupBlueprint b = golden();
  Json j = blueprint_to_json(b);
  CHECK(j["schema"] == "fuchsian-blueprint/1");
  GroupBlueprint c = blueprint_from_json(j);
  CHECK(blueprint_to_json(c) == j);
  CHECK(c.n == b.n);
  CHECK(c.generators.size() == b.generators.size());
  for (size_t i = 0; i < b.generators.size(); ++i) {
    CHECK(c.generators[i].proj == b.generators[i].proj);
    CHECK(c.generators[i].lorentz == b.generators[i].lorentz);
    CHECK(c.generators[i].b_sq == b.generators[i].b_sq);
    CHECK(c.generators[i].det_class == b.generators[i].det_class);
  }
  CHECK(c.polygon == b.polygon);
  CHECK(c.trace.V == b.trace.V);
  // the parsed copy still verifies
  CHECK(validate_blueprint(c).all_passed());
}

TEST_CASE("schema violations are rejected") {
  Json j = blueprint_to_json(golden());
  Json bad = j;
  bad["schema"] = "fuchsian-blueprint/9";
  CHECK_THROWS_AS(blueprint_from_json(bad), SchemaError);
  bad = j;
  bad.erase("generators");
  CHECK_THROWS_AS(blueprint_from_json(bad), SchemaError);
  bad = j;
  bad["generators"][0]["a"] = "zzz";
  CHECK_THROWS_AS(blueprint_from_json(bad), SchemaError);
  CHECK_THROWS_AS(blueprint_from_json(Json::array()), SchemaError);
}

TEST_CASE("verdict serialization") {
  GroupBlueprint b = golden();
  Json no = verdict_to_json(group_stabilizes(b, 3));
  CHECK(no["verdict"] == "no");
  CHECK(no["prime"] == "3");
  CHECK(no["violating_pair"] == Json::array({1, 2}));
  CHECK(no["reason"].get<std::string>().find("1/2") != std::string::npos);

  Json yes = verdict_to_json(group_stabilizes(b, 31));
  CHECK(yes["verdict"] == "stabilizes");
  CHECK(yes["witness"]["a"] == "0");
  CHECK(yes["witness"]["b"] == "0");
}

TEST_CASE("certificate and manifest round trip") {
  ConstructionInput base;
  base.v0 = -1;
  std::vector<FamilyMember> fam = build_family({0, 1}, 2, base);
  std::vector<NoncommensurabilityCertificate> certs = certify_family(fam);
  REQUIRE(certs.size() == 1);
  Json j = certificate_to_json(certs[0]);
  CHECK(j["schema"] == "fuchsian-certificate/1");
  NoncommensurabilityCertificate back = certificate_from_json(j);
  CHECK(certificate_to_json(back) == j);
  CHECK(validate_certificate(back, fam[0].blueprint, fam[1].blueprint));

  Json man = family_manifest(fam, certs);
  CHECK(man["schema"] == "fuchsian-family/1");
  CHECK(man["count"] == 2);
  CHECK(man["primes"] == Json::array({"3", "103"}));
  CHECK(man["groups"] == Json::array({"group_1.json", "group_2.json"}));
  CHECK(man["certificates"] == Json::array({"cert_1_2.json"}));
}

TEST_CASE("svg structure and determinism") {
  GroupBlueprint small = golden();  // n = 3
  std::string svg1 = render_svg(small, RenderSpec::fit(small));
  std::string svg2 = render_svg(small, RenderSpec::fit(small));
  CHECK(svg1 == svg2);
  CHECK(count_occurrences(svg1, "class=\"edge\"") == 4);
  CHECK(count_occurrences(svg1, "class=\"axis\"") == 2);
  CHECK(count_occurrences(svg1, "class=\"center\"") == 4);
  CHECK(count_occurrences(svg1, "<line class=\"edge\"") == 2);

  GroupBlueprint big = figure_run();  // n = 5
  std::string svg3 = render_svg(big, RenderSpec::fit(big));
  CHECK(count_occurrences(svg3, "class=\"edge\"") == 6);
  CHECK(count_occurrences(svg3, "class=\"axis\"") == 4);
  CHECK(count_occurrences(svg3, "<line class=\"edge\"") == 2);

  RenderSpec nolabel = RenderSpec::fit(small);
  nolabel.labels = false;
  CHECK(count_occurrences(render_svg(small, nolabel), "<text") == 0);
  CHECK(count_occurrences(svg1, "<text") == 4);

  RenderSpec badspec = RenderSpec::fit(small);
  badspec.xmax = badspec.xmin;
  CHECK_THROWS_AS(render_svg(small, badspec), InvalidInput);
}

TEST_CASE("file save and load") {
  GroupBlueprint b = golden();
  std::string path = "io_test_blueprint.json";
  save_json(blueprint_to_json(b), path);
  GroupBlueprint c = load_blueprint(path);
  CHECK(blueprint_to_json(c) == blueprint_to_json(b));
  CHECK_THROWS_AS(load_blueprint("does_not_exist.json"), SchemaError);
}
