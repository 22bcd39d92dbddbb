#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "fuchsian/json_io.hpp"
#include "fuchsian/svg.hpp"

#include <nlohmann/json.hpp>

using namespace fuchsian;

namespace {

std::vector<Rational> parse_rational_list(const std::string& s) {
  std::vector<Rational> out;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t comma = s.find(',', pos);
    if (comma == std::string::npos) comma = s.size();
    out.push_back(parse_rational(s.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  return out;
}

std::vector<Int> parse_int_list(const std::string& s) {
  std::vector<Int> out;
  for (const Rational& q : parse_rational_list(s)) {
    if (denominator(q) != 1) throw SchemaError("expected integers: " + s);
    out.push_back(numerator(q));
  }
  return out;
}

struct ConstructArgs {
  std::string points, prime = "3", v0, x1, classes, t_init, seed_out;
};

ConstructionInput input_from_args(const ConstructArgs& a) {
  ConstructionInput in;
  in.points = parse_rational_list(a.points);
  in.prime_p = Int(a.prime);
  if (!a.v0.empty()) in.v0 = parse_rational(a.v0);
  if (!a.x1.empty()) in.x1 = parse_rational(a.x1);
  if (!a.classes.empty()) in.classes = parse_int_list(a.classes);
  if (!a.t_init.empty()) in.t_init = parse_rational(a.t_init);
  return in;
}

void print_summary(const GroupBlueprint& b) {
  std::cout << "generators: " << b.n + 1 << " (rho_0 .. rho_" << b.n << ")\n";
  std::cout << "classes:";
  for (const InvolutionData& g : b.generators) std::cout << " " << g.det_class;
  std::cout << "\nsignature: (0; ";
  for (int i = 0; i <= b.n; ++i) std::cout << (i ? "," : "") << "2";
  std::cout << "; 1; 0)\n";
}

int run(int argc, char** argv) {
  CLI::App app{"exact Fuchsian groups with prescribed rational hyperbolic "
               "fixed points, and tree-based noncommensurability certificates"};
  app.require_subcommand(1);

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "build a group blueprint");
  construct->add_option("--points", ca.points, "comma-separated rationals")->required();
  construct->add_option("--prime", ca.prime, "steering prime, 3 mod 4");
  construct->add_option("--v0", ca.v0, "leftmost ideal vertex");
  construct->add_option("--x1", ca.x1, "first reflected point");
  construct->add_option("--classes", ca.classes, "square classes n_1,...");
  construct->add_option("--t-init", ca.t_init, "steering seed");
  construct->add_option("--seed-out", ca.seed_out, "blueprint output path");

  std::string verify_path;
  auto* verify = app.add_subcommand("verify", "re-check a blueprint file");
  verify->add_option("path", verify_path)->required();

  std::string tc_path, tc_prime;
  auto* tree = app.add_subcommand("tree-check", "stabilization verdict at a prime");
  tree->add_option("path", tc_path)->required();
  tree->add_option("--prime", tc_prime)->required();

  ConstructArgs fa;
  int fam_count = 2;
  std::string fam_out;
  auto* family = app.add_subcommand("family", "pairwise noncommensurable family");
  family->add_option("--points", fa.points)->required();
  family->add_option("--count", fam_count, "family size");
  family->add_option("--prime", fa.prime, "first steering prime candidate");
  family->add_option("--v0", fa.v0);
  family->add_option("--x1", fa.x1);
  family->add_option("--t-init", fa.t_init);
  family->add_option("--out", fam_out, "output directory")->required();

  std::string r_path, r_out, r_xmin, r_xmax;
  int r_width = 800, r_height = 400;
  bool r_nolabels = false;
  auto* render = app.add_subcommand("render", "draw the fundamental domain");
  render->add_option("path", r_path)->required();
  render->add_option("--out", r_out, "SVG output path");
  render->add_option("--xmin", r_xmin);
  render->add_option("--xmax", r_xmax);
  render->add_option("--width", r_width);
  render->add_option("--height", r_height);
  render->add_flag("--no-labels", r_nolabels);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (*construct) {
    GroupBlueprint b = construct_group(input_from_args(ca));
    Json j = blueprint_to_json(b);
    if (ca.seed_out.empty()) {
      std::cout << j.dump(2) << "\n";
    } else {
      save_json(j, ca.seed_out);
      print_summary(b);
      std::cout << "wrote " << ca.seed_out << "\n";
    }
    return 0;
  }

  if (*verify) {
    GroupBlueprint b = load_blueprint(verify_path);
    ValidationReport rep = validate_blueprint(b);
    for (const CheckResult& c : rep.checks)
      std::cout << (c.pass ? "ok   " : "FAIL ") << c.name
                << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
    return rep.all_passed() ? 0 : 1;
  }

  if (*tree) {
    GroupBlueprint b = load_blueprint(tc_path);
    StabilizationVerdict v = group_stabilizes(b, Int(tc_prime));
    std::cout << verdict_to_json(v).dump(2) << "\n";
    return v.stabilizes ? 0 : 1;
  }

  if (*family) {
    std::vector<FamilyMember> fam =
        build_family(parse_rational_list(fa.points), fam_count, input_from_args(fa));
    std::vector<NoncommensurabilityCertificate> certs = certify_family(fam);
    std::filesystem::create_directories(fam_out);
    for (size_t i = 0; i < fam.size(); ++i)
      save_json(blueprint_to_json(fam[i].blueprint),
                fam_out + "/group_" + std::to_string(i + 1) + ".json");
    for (const auto& c : certs)
      save_json(certificate_to_json(c), fam_out + "/cert_" +
                                            std::to_string(c.group_a) + "_" +
                                            std::to_string(c.group_b) + ".json");
    save_json(family_manifest(fam, certs), fam_out + "/manifest.json");
    std::cout << "family of " << fam.size() << ", primes";
    for (const auto& f : fam) std::cout << " " << f.prime;
    std::cout << ", " << certs.size() << " certificates in " << fam_out << "\n";
    return 0;
  }

  if (*render) {
    GroupBlueprint b = load_blueprint(r_path);
    RenderSpec spec = RenderSpec::fit(b);
    if (!r_xmin.empty()) spec.xmin = parse_rational(r_xmin);
    if (!r_xmax.empty()) spec.xmax = parse_rational(r_xmax);
    spec.width = r_width;
    spec.height = r_height;
    spec.labels = !r_nolabels;
    std::string svg = render_svg(b, spec);
    if (r_out.empty()) {
      std::cout << svg;
    } else {
      std::ofstream out(r_out);
      out << svg;
      std::cout << "wrote " << r_out << "\n";
    }
    return 0;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const SchemaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
