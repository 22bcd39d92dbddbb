#pragma once

#include "fuchsian/btree.hpp"

namespace fuchsian {

struct DenominatorBound {
  Int m = 1;
};

/// Largest denominator among the half-plane matrix entries
/// {a, -(b^2 + a^2), 1, -a} over all generators.
DenominatorBound denominator_bound(const GroupBlueprint& b);

struct FamilyMember {
  GroupBlueprint blueprint;
  Int prime;
};

/// Inductive family over a shared point set: each member is steered at a
/// prime (3 mod 4) exceeding both the previous prime and the denominator
/// bounds of all earlier members.
std::vector<FamilyMember> build_family(const std::vector<Rational>& points,
                                       int count, ConstructionInput base = {});

struct NoncommensurabilityCertificate {
  Int prime;               // the later member's steering prime
  int group_a = 0;         // 1-based family indices
  int group_b = 0;
  LatticeClass witness;    // vertex stabilized by group_a
  PairViolation violation; // generator pair of group_b failing the criterion
  std::string note;
};

/// Certificate separating an earlier member from a later one at the later
/// steering prime. Both verdicts are recomputed here, never cached.
NoncommensurabilityCertificate certify_pair(const GroupBlueprint& bi, const Int& pi,
                                            const GroupBlueprint& bj, const Int& pj);

/// All C(k,2) certificates of a family, in order (i, j) with i < j.
std::vector<NoncommensurabilityCertificate> certify_family(
    const std::vector<FamilyMember>& family);

/// Recompute both verdicts of a certificate against the stored blueprints.
bool validate_certificate(const NoncommensurabilityCertificate& c,
                          const GroupBlueprint& bi, const GroupBlueprint& bj);

}  // namespace fuchsian
