// End-to-end acceptance checks. Each criterion prints exactly one PASS/FAIL
// line; the process exits nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "fuchsian/certify.hpp"
#include "fuchsian/json_io.hpp"
#include "fuchsian/svg.hpp"

#include <nlohmann/json.hpp>

using namespace fuchsian;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int num, const std::string& name, bool pass, Clock::time_point start,
            double budget_s, const std::string& detail = "") {
  double secs = std::chrono::duration<double>(Clock::now() - start).count();
  bool in_budget = budget_s <= 0 || secs < budget_s;
  bool ok = pass && in_budget;
  if (!ok) ++failures;
  std::printf("%s criterion-%d %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", num,
              name.c_str(), secs, detail.empty() ? "" : ": ",
              detail.c_str());
  std::fflush(stdout);
}

GroupBlueprint golden() {
  ConstructionInput in;
  in.points = {0, 2};
  in.prime_p = 3;
  in.v0 = -2;
  in.x1 = -1;
  return construct_group(in);
}

void criterion1() {
  auto t0 = Clock::now();
  bool ok = false;
  std::string detail;
  try {
    GroupBlueprint b = golden();
    const SteeredStep& s1 = b.trace.steps.at(0);
    ok = s1.f == LorentzVector{-1, Rational(-3, 2), Rational(5, 2)} &&
         inner(s1.f, s1.f) == -3 &&
         b.generators.at(1).proj == canonical_projective(Mat2{-1, -1, 4, 1}) &&
         s1.v == BoundaryPoint::of(Rational(-1, 7)) && Rational(-2) < Rational(-1) &&
         Rational(-1) < Rational(-1, 7) && Rational(-1, 7) < Rational(0);
  } catch (const std::exception& e) {
    detail = e.what();
  }
  report(1, "golden-run", ok, t0, 1.0, detail);
}

void criterion2() {
  auto t0 = Clock::now();
  int passed = 0, total = 0;
  std::string detail;
  std::mt19937 rng(97);
  std::uniform_int_distribution<int> size_dist(2, 6);
  std::uniform_int_distribution<int> num(-20, 20);
  std::uniform_int_distribution<int> den(1, 20);
  std::uniform_int_distribution<int> prime_pick(0, 2);
  const int primes[3] = {3, 7, 11};
  try {
    while (total < 50) {
      int sz = size_dist(rng);
      std::vector<Rational> pts;
      for (int i = 0; i < sz; ++i) pts.push_back(Rational(num(rng), den(rng)));
      std::sort(pts.begin(), pts.end());
      pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
      if (static_cast<int>(pts.size()) < 2) continue;
      ConstructionInput in;
      in.points = pts;
      in.prime_p = primes[prime_pick(rng)];
      ++total;
      GroupBlueprint b = construct_group(in);
      ValidationReport rep = validate_blueprint(b);
      bool witnesses_fix = true;
      for (int i = 1; i <= b.n - 1; ++i)
        witnesses_fix = witnesses_fix &&
                        fixes_boundary_point(hyperbolic_witness(b, i),
                                             BoundaryPoint::of(b.y_point(i)));
      if (rep.all_passed() && witnesses_fix) ++passed;
    }
  } catch (const std::exception& e) {
    detail = e.what();
  }
  if (detail.empty()) detail = std::to_string(passed) + "/50 blueprints valid";
  report(2, "construction-sweep", passed == 50, t0, 60.0, detail);
}

void criterion3() {
  auto t0 = Clock::now();
  int agree = 0, total = 0;
  std::string detail;
  std::mt19937 rng(193);
  std::uniform_int_distribution<int> num(-20, 20);
  std::uniform_int_distribution<int> den(1, 12);
  std::uniform_int_distribution<int> coin(0, 9);
  auto rand_boundary = [&] {
    if (coin(rng) == 0) return BoundaryPoint::infinity();
    return BoundaryPoint::of(Rational(num(rng), den(rng)));
  };
  try {
    while (total < 200) {
      BoundaryPoint a = rand_boundary(), b = rand_boundary();
      if (a == b) continue;
      LorentzVector u = boundary_to_vector(a), w = boundary_to_vector(b);
      LorentzVector f{u.x1 + w.x1, u.x2 + w.x2, u.x0 + w.x0};
      BoundaryPoint pt = rand_boundary();
      ++total;
      Mat3 r = rotation_lorentz(f);
      HalfPlaneInvolution h = involution_halfplane(f);
      if (vector_to_boundary(r.apply(boundary_to_vector(pt))) ==
          mobius_boundary(h.proj, pt))
        ++agree;
    }
  } catch (const std::exception& e) {
    detail = e.what();
  }
  if (detail.empty()) detail = std::to_string(agree) + "/200 exact agreements";
  report(3, "model-equivalence", agree == 200, t0, 0, detail);
}

void criterion4() {
  auto t0 = Clock::now();
  bool ok = true;
  std::string detail;
  std::mt19937 rng(311);
  std::uniform_int_distribution<int> num(-12, 12);
  std::uniform_int_distribution<int> den(1, 10);
  try {
    for (int pi : {3, 7, 11}) {
      const Int p = pi;
      int tested = 0;
      while (tested < 200 && ok) {
        Rational a1(num(rng), den(rng)), a2(num(rng), den(rng));
        Rational b1(num(rng), den(rng)), b2(num(rng), den(rng));
        if (b1 <= 0 || b2 <= 0) continue;
        ++tested;
        InvolutionData g1, g2;
        g1.index = 1;
        g1.a = a1;
        g1.b_sq = b1;
        g1.proj = canonical_projective(Mat2{a1, -(b1 + a1 * a1), 1, -a1});
        g2.index = 2;
        g2.a = a2;
        g2.b_sq = b2;
        g2.proj = canonical_projective(Mat2{a2, -(b2 + a2 * a2), 1, -a2});
        bool cond = pair_condition(g1, g2, p);
        bool unit_test =
            vp(g1.b_sq / g2.b_sq, p) == 0 &&
            (g1.a == g2.a || vp((g1.a - g2.a) * (g1.a - g2.a) / g2.b_sq, p) >= 0);
        if (cond != unit_test) {
          ok = false;
          detail = "criterion disagreement at p=" + p.str();
          break;
        }
        if (tested % 10 != 0) continue;  // tree oracle on a slice
        GroupElement e1 = GroupElement::identity(), e2 = GroupElement::identity();
        e1.proj = g1.proj;
        e2.proj = g2.proj;
        std::vector<GroupElement> gs{e1, e2};
        if (!cond) {
          if (fixes_some_vertex(multiply(e1, e2), p) ||
              ball_common_fixed(gs, p, 6).has_value()) {
            ok = false;
            detail = "violating pair fixed a vertex at p=" + p.str();
          }
        } else if (vp_of_sqrt(g1.b_sq, p).is_integer()) {
          LatticeClass root = LatticeClass::standard(p);
          Int r = 0;
          for (const GroupElement& g : gs) {
            Int d = distance(root, act(g.proj, root));
            if (d > r) r = d;
          }
          auto w = ball_common_fixed(gs, p, static_cast<int>(r) + 1);
          if (!w) w = ball_common_fixed(gs, p, 2 * static_cast<int>(r) + 4);
          bool verified = w.has_value();
          for (const GroupElement& g : gs)
            verified = verified && act(g.proj, *w) == *w;
          if (!verified) {
            ok = false;
            detail = "no common vertex for a passing pair at p=" + p.str();
          }
        }
      }
    }
  } catch (const std::exception& e) {
    ok = false;
    detail = e.what();
  }
  report(4, "pair-criterion-equivalence", ok, t0, 0, detail);
}

void criterion5() {
  auto t0 = Clock::now();
  bool ok = true;
  std::string detail;
  try {
    for (int pi : {3, 7, 11, 19}) {
      ConstructionInput in;
      in.points = {0, 1, 2};
      in.prime_p = pi;
      GroupBlueprint b = construct_group(in);
      StabilizationVerdict no = group_stabilizes(b, pi);
      if (no.stabilizes || !no.violation || no.violation->m != 1 ||
          no.violation->k != 2 ||
          no.violation->reason.find("1/2") == std::string::npos) {
        ok = false;
        detail = "expected violating pair (1,2) at p=" + std::to_string(pi);
        break;
      }
      Int m = denominator_bound(b).m;
      for (Int q = next_prime_3mod4(m); q <= 100; q = next_prime_3mod4(q)) {
        StabilizationVerdict yes = group_stabilizes(b, q);
        if (!yes.stabilizes || !yes.witness) {
          ok = false;
          detail = "no witness at q=" + q.str();
          break;
        }
      }
    }
  } catch (const std::exception& e) {
    ok = false;
    detail = e.what();
  }
  report(5, "steering-contrast", ok, t0, 30.0, detail);
}

void criterion6() {
  auto t0 = Clock::now();
  bool ok = true;
  std::string detail;
  try {
    ConstructionInput base;
    base.v0 = -1;
    std::vector<FamilyMember> fam = build_family({0, 1}, 5, base);
    ok = fam.size() == 5;
    for (size_t j = 0; ok && j < fam.size(); ++j) {
      ok = fam[j].prime % 4 == 3 && is_prime(fam[j].prime) &&
           (j == 0 || fam[j].prime > fam[j - 1].prime);
    }
    std::vector<NoncommensurabilityCertificate> certs = certify_family(fam);
    ok = ok && certs.size() == 10;
    for (const auto& c : certs)
      ok = ok && validate_certificate(c, fam[c.group_a - 1].blueprint,
                                      fam[c.group_b - 1].blueprint);
    if (ok) {
      detail = "primes";
      for (const auto& f : fam) detail += " " + f.prime.str();
    }
  } catch (const std::exception& e) {
    ok = false;
    detail = e.what();
  }
  report(6, "family-pipeline", ok, t0, 300.0, detail);
}

void criterion7() {
  auto t0 = Clock::now();
  bool ok = true;
  std::string detail;
  try {
    ConstructionInput in;
    in.points = {0, 1};
    in.prime_p = 3;
    in.v0 = -2;
    in.x1 = -1;
    GroupBlueprint b2 = construct_group(in);  // classes 3,3,1,1
    PslKernel k2 = psl_kernel(b2);
    ok = k2.index == 2;
    for (const GroupElement& g : k2.kernel_generators) ok = ok && g.det_class == 1;

    GroupBlueprint b4 = golden();  // classes 2,3,1,6 span rank 2
    PslKernel k4 = psl_kernel(b4);
    ok = ok && k4.index == 4;
    for (const GroupElement& g : k4.kernel_generators) ok = ok && g.det_class == 1;
    detail = "indices 2 and 4";
  } catch (const std::exception& e) {
    ok = false;
    detail = e.what();
  }
  report(7, "psl-kernel", ok, t0, 0, detail);
}

void criterion8() {
  auto t0 = Clock::now();
  bool ok = true;
  std::string detail;
  try {
    GroupBlueprint b = golden();
    Json j1 = blueprint_to_json(b);
    GroupBlueprint parsed = blueprint_from_json(j1);
    ok = blueprint_to_json(parsed) == j1 && validate_blueprint(parsed).all_passed();

    std::string svg1 = render_svg(b, RenderSpec::fit(b));
    std::string svg2 = render_svg(parsed, RenderSpec::fit(parsed));
    ok = ok && svg1 == svg2;
    size_t edges = 0, axes = 0;
    for (size_t pos = svg1.find("class=\"edge\""); pos != std::string::npos;
         pos = svg1.find("class=\"edge\"", pos + 1))
      ++edges;
    for (size_t pos = svg1.find("class=\"axis\""); pos != std::string::npos;
         pos = svg1.find("class=\"axis\"", pos + 1))
      ++axes;
    ok = ok && edges == static_cast<size_t>(b.n) + 1 &&
         axes == static_cast<size_t>(b.n) - 1;
    detail = "round trip identical, " + std::to_string(edges) + " edges, " +
             std::to_string(axes) + " axes";
  } catch (const std::exception& e) {
    ok = false;
    detail = e.what();
  }
  report(8, "persistence-and-render", ok, t0, 0, detail);
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  return failures == 0 ? 0 : 1;
}
