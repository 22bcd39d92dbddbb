#include "fuchsian/certify.hpp"

namespace fuchsian {

DenominatorBound denominator_bound(const GroupBlueprint& b) {
  Int m = 1;
  auto take = [&](const Rational& q) {
    Int d = denominator(q);
    if (d > m) m = d;
  };
  for (const InvolutionData& g : b.generators) {
    take(g.a);
    take(-(g.b_sq + g.a * g.a));
    take(Rational(1));
    take(-g.a);
  }
  return DenominatorBound{m};
}

std::vector<FamilyMember> build_family(const std::vector<Rational>& points,
                                       int count, ConstructionInput base) {
  if (count < 1) throw InvalidInput("family size must be at least 1");
  base.points = points;
  base.classes.clear();

  std::vector<FamilyMember> out;
  Int p = base.prime_p;
  if (p % 4 != 3 || !is_prime(p)) p = next_prime_3mod4(p);
  Int bound_all = 1;
  for (int j = 0; j < count; ++j) {
    GroupBlueprint bp;
    for (int attempt = 0;; ++attempt) {
      if (attempt > 16) throw SteeringFailed("no admissible family prime found");
      ConstructionInput in = base;
      in.prime_p = p;
      bp = construct_group(in);
      // the new member must fail the pair criterion at its own prime and
      // every earlier member must pass there; on the rare miss, move on to
      // the next admissible prime
      bool ok = !group_stabilizes(bp, p).stabilizes;
      for (size_t i = 0; ok && i < out.size(); ++i)
        ok = group_stabilizes(out[i].blueprint, p).stabilizes;
      if (ok) break;
      p = next_prime_3mod4(p);
    }
    out.push_back(FamilyMember{bp, p});
    Int m = denominator_bound(bp).m;
    if (m > bound_all) bound_all = m;
    p = next_prime_3mod4(p > bound_all ? p : bound_all);
  }
  return out;
}

NoncommensurabilityCertificate certify_pair(const GroupBlueprint& bi, const Int& pi,
                                            const GroupBlueprint& bj, const Int& pj) {
  if (pj <= pi) throw std::invalid_argument("family order violated");
  if (pj <= denominator_bound(bi).m)
    throw std::invalid_argument("prime does not dominate denominator bound");
  StabilizationVerdict va = group_stabilizes(bi, pj);
  if (!va.stabilizes || !va.witness)
    throw InvariantViolation("earlier group fails to stabilize at the later prime");
  StabilizationVerdict vb = group_stabilizes(bj, pj);
  if (vb.stabilizes || !vb.violation)
    throw InvariantViolation("later group stabilizes at its own prime");
  NoncommensurabilityCertificate c;
  c.prime = pj;
  c.witness = *va.witness;
  c.violation = *vb.violation;
  c.note =
      "whether a group stabilizes a vertex of the tree at this prime is "
      "unchanged by conjugation and is shared with any finite index "
      "subgroup, so the two groups are not commensurable";
  return c;
}

std::vector<NoncommensurabilityCertificate> certify_family(
    const std::vector<FamilyMember>& family) {
  std::vector<NoncommensurabilityCertificate> out;
  for (size_t i = 0; i < family.size(); ++i)
    for (size_t j = i + 1; j < family.size(); ++j) {
      NoncommensurabilityCertificate c =
          certify_pair(family[i].blueprint, family[i].prime, family[j].blueprint,
                       family[j].prime);
      c.group_a = static_cast<int>(i) + 1;
      c.group_b = static_cast<int>(j) + 1;
      out.push_back(std::move(c));
    }
  return out;
}

bool validate_certificate(const NoncommensurabilityCertificate& c,
                          const GroupBlueprint& bi, const GroupBlueprint& bj) {
  if (c.prime % 4 != 3 || !is_prime(c.prime)) return false;
  StabilizationVerdict va = group_stabilizes(bi, c.prime);
  if (!va.stabilizes || !va.witness || !(*va.witness == c.witness)) return false;
  StabilizationVerdict vb = group_stabilizes(bj, c.prime);
  if (vb.stabilizes || !vb.violation) return false;
  return vb.violation->m == c.violation.m && vb.violation->k == c.violation.k;
}

}  // namespace fuchsian
