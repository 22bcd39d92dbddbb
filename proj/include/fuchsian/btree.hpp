#pragma once

#include <optional>

#include "fuchsian/construct.hpp"

namespace fuchsian {

struct SearchExhausted : std::runtime_error {
  explicit SearchExhausted(const std::string& what) : std::runtime_error(what) {}
};

/// Vertex of the tree at p: a lattice class with canonical basis
/// [[p^a, b], [0, 1]], b reduced mod p^a Z_p.
struct LatticeClass {
  Int p;
  Int a;
  Rational b;

  static LatticeClass standard(const Int& p) { return LatticeClass{p, 0, 0}; }
  Mat2 basis() const;

  friend bool operator==(const LatticeClass&, const LatticeClass&) = default;
  friend bool operator<(const LatticeClass& u, const LatticeClass& v) {
    if (u.a != v.a) return u.a < v.a;
    return u.b < v.b;
  }
  std::string str() const;
};

/// Class of the lattice spanned by the columns of an invertible matrix.
LatticeClass lattice_class(const Mat2& basis, const Int& p);

/// Action of g in GL2(Q) on lattice classes.
LatticeClass act(const Mat2& g, const LatticeClass& l);

/// Tree metric via elementary divisors of basis(l1)^-1 basis(l2).
Int distance(const LatticeClass& l1, const LatticeClass& l2);

/// The p+1 classes at distance 1.
std::vector<LatticeClass> neighbors(const LatticeClass& l);

/// Every entry p-integral and the determinant a p-unit.
bool in_gl2_zp(const Mat2& m, const Int& p);

/// The pairwise valuation criterion on two involutions:
/// v(b_m) = v(b_k) as half-integers and v(a_m - a_k) at least that value.
/// Returns the reason of failure, or nullopt when the pair passes.
std::optional<std::string> pair_condition_failure(const InvolutionData& gm,
                                                  const InvolutionData& gk,
                                                  const Int& p);

bool pair_condition(const InvolutionData& gm, const InvolutionData& gk, const Int& p);

/// Vertex criterion for a single element: even determinant valuation and
/// 2 v(tr) >= v(det) (trace zero counts as +infinity).
bool fixes_some_vertex(const GroupElement& g, const Int& p);
bool matrix_fixes_some_vertex(const Mat2& m, const Int& p);

struct BallSearchOptions {
  bool exhaustive = false;       // disable tree-convexity pruning
  size_t max_vertices = 4000000;
};

/// Breadth-first search of the ball around the standard vertex for a vertex
/// fixed by every element. Unless exhaustive, subtrees in which some
/// displacement function increases are pruned; this cannot change the result
/// because fixed sets are convex in a tree.
std::optional<LatticeClass> ball_common_fixed(const std::vector<GroupElement>& gs,
                                              const Int& p, int radius,
                                              const BallSearchOptions& opts = {});

struct PairViolation {
  int m = 0;
  int k = 0;
  std::string reason;
};

struct StabilizationVerdict {
  Int prime;
  bool stabilizes = false;
  std::optional<LatticeClass> witness;
  std::optional<PairViolation> violation;
};

/// Pairwise criterion over the generators in the order rho_1, ..., rho_n,
/// rho_0; on success the witness vertex is found by the ball oracle.
StabilizationVerdict group_stabilizes(const GroupBlueprint& b, const Int& p);

}  // namespace fuchsian
