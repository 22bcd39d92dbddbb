#include "fuchsian/btree.hpp"

#include <deque>
#include <set>

namespace fuchsian {

namespace {

Rational pow_p(const Int& p, const Int& e) {
  Int ae = abs(e);
  if (ae > 4096) throw std::domain_error("unreasonable p-power exponent");
  Int n = 1;
  for (Int i = 0; i < ae; ++i) n *= p;
  return e >= 0 ? Rational(n) : Rational(1, n);
}

Int egcd_inverse(Int a, const Int& m) {
  Int r0 = m, r1 = a % m;
  if (r1 < 0) r1 += m;
  Int s0 = 0, s1 = 1;
  while (r1 != 0) {
    Int q = r0 / r1;
    Int r2 = r0 - q * r1;
    Int s2 = s0 - q * s1;
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
  }
  if (r0 != 1) throw std::domain_error("not invertible modulo p^k");
  Int inv = s0 % m;
  if (inv < 0) inv += m;
  return inv;
}

// Canonical representative of q + p^a Z_p among rationals.
Rational canonical_mod(const Rational& q, const Int& a, const Int& p) {
  if (q == 0) return 0;
  Int e = vp(q, p);
  if (e >= a) return 0;
  Rational u = q / pow_p(p, e);
  Int m = numerator(pow_p(p, a - e));
  Int w = (numerator(u) % m) * egcd_inverse(denominator(u), m) % m;
  if (w < 0) w += m;
  return Rational(w) * pow_p(p, e);
}

Mat2 inverse(const Mat2& m) {
  Rational d = m.det();
  if (d == 0) throw std::domain_error("singular matrix");
  return Mat2{m.d / d, -m.b / d, -m.c / d, m.a / d};
}

}  // namespace

Mat2 LatticeClass::basis() const { return Mat2{pow_p(p, a), b, 0, 1}; }

std::string LatticeClass::str() const {
  std::string bs = numerator(b).str();
  if (denominator(b) != 1) bs += "/" + denominator(b).str();
  return "[p^" + a.str() + ", " + bs + "; 0, 1]";
}

LatticeClass lattice_class(const Mat2& m, const Int& p) {
  if (m.det() == 0) throw std::domain_error("lattice basis must be invertible");
  Rational x = m.a, y = m.b, c = m.c, d = m.d;
  if (c != 0 && (d == 0 || vp(c, p) < vp(d, p))) {
    std::swap(x, y);
    std::swap(c, d);
  }
  if (c != 0) {
    // vp(c) >= vp(d): clear the bottom-left entry with a Z_p column op
    x -= (c / d) * y;
    c = 0;
  }
  // now the basis is [[x, y], [0, d]]
  Int a = vp(x, p) - vp(d, p);
  Rational b = canonical_mod(y / d, a, p);
  return LatticeClass{p, a, b};
}

LatticeClass act(const Mat2& g, const LatticeClass& l) {
  return lattice_class(g * l.basis(), l.p);
}

Int distance(const LatticeClass& l1, const LatticeClass& l2) {
  if (l1.p != l2.p) throw std::domain_error("classes at different primes");
  Mat2 m = inverse(l1.basis()) * l2.basis();
  Int vdet = vp(m.det(), l1.p);
  bool have = false;
  Int mn = 0;
  for (const Rational& e : {m.a, m.b, m.c, m.d}) {
    if (e == 0) continue;
    Int v = vp(e, l1.p);
    if (!have || v < mn) {
      mn = v;
      have = true;
    }
  }
  return abs(vdet - 2 * mn);
}

std::vector<LatticeClass> neighbors(const LatticeClass& l) {
  if (l.p > 1000000)
    throw SearchExhausted("neighbor enumeration infeasible at this prime");
  std::vector<LatticeClass> out;
  Mat2 b = l.basis();
  for (Int j = 0; j < l.p; ++j)
    out.push_back(lattice_class(b * Mat2{Rational(l.p), Rational(j), 0, 1}, l.p));
  out.push_back(lattice_class(b * Mat2{1, 0, 0, Rational(l.p)}, l.p));
  return out;
}

bool in_gl2_zp(const Mat2& m, const Int& p) {
  if (m.det() == 0) throw std::domain_error("singular matrix");
  for (const Rational& e : {m.a, m.b, m.c, m.d})
    if (e != 0 && vp(e, p) < 0) return false;
  return vp(m.det(), p) == 0;
}

std::optional<std::string> pair_condition_failure(const InvolutionData& gm,
                                                  const InvolutionData& gk,
                                                  const Int& p) {
  if (p % 4 != 3)
    throw InvalidInput("criterion requires -1 to be a nonsquare");
  HalfInt vbm = vp_of_sqrt(gm.b_sq, p);
  HalfInt vbk = vp_of_sqrt(gk.b_sq, p);
  if (!(vbm == vbk))
    return "v(b_" + std::to_string(gm.index) + ") = " + vbm.str() +
           " differs from v(b_" + std::to_string(gk.index) + ") = " + vbk.str();
  HalfInt va = vp_or_infinity(gm.a - gk.a, p);
  if (va < vbm)
    return "v(a_" + std::to_string(gm.index) + " - a_" + std::to_string(gk.index) +
           ") = " + va.str() + " is below the common v(b) = " + vbm.str();
  return std::nullopt;
}

bool pair_condition(const InvolutionData& gm, const InvolutionData& gk, const Int& p) {
  return !pair_condition_failure(gm, gk, p).has_value();
}

bool matrix_fixes_some_vertex(const Mat2& m, const Int& p) {
  Rational det = m.det();
  if (det == 0) throw std::domain_error("singular matrix");
  Int vdet = vp(det, p);
  if (vdet % 2 != 0) return false;
  Rational tr = m.trace();
  if (tr == 0) return true;
  return 2 * vp(tr, p) >= vdet;
}

bool fixes_some_vertex(const GroupElement& g, const Int& p) {
  return matrix_fixes_some_vertex(g.proj, p);
}

std::optional<LatticeClass> ball_common_fixed(const std::vector<GroupElement>& gs,
                                              const Int& p, int radius,
                                              const BallSearchOptions& opts) {
  if (radius < 0) throw std::domain_error("radius must be nonnegative");
  auto displacements = [&](const LatticeClass& l) {
    std::vector<Int> d;
    d.reserve(gs.size());
    for (const GroupElement& g : gs) d.push_back(distance(l, act(g.proj, l)));
    return d;
  };
  auto all_zero = [](const std::vector<Int>& d) {
    for (const Int& x : d)
      if (x != 0) return false;
    return true;
  };

  LatticeClass root = LatticeClass::standard(p);
  std::vector<Int> droot = displacements(root);
  if (all_zero(droot)) return root;
  if (radius == 0) return std::nullopt;

  struct Node {
    LatticeClass l;
    int depth;
    std::vector<Int> disp;
  };
  std::set<LatticeClass> visited{root};
  std::deque<Node> queue{{root, 0, droot}};
  while (!queue.empty()) {
    Node node = std::move(queue.front());
    queue.pop_front();
    if (node.depth == radius) continue;
    for (const LatticeClass& nb : neighbors(node.l)) {
      if (!visited.insert(nb).second) continue;
      if (visited.size() > opts.max_vertices) throw SearchExhausted("search exhausted");
      std::vector<Int> d = displacements(nb);
      if (all_zero(d)) return nb;
      if (!opts.exhaustive) {
        bool receding = false;
        for (size_t i = 0; i < d.size(); ++i)
          if (d[i] > node.disp[i]) {
            receding = true;
            break;
          }
        if (receding) continue;  // fixed sets are convex; nothing below here
      }
      queue.push_back({nb, node.depth + 1, std::move(d)});
    }
  }
  return std::nullopt;
}

StabilizationVerdict group_stabilizes(const GroupBlueprint& b, const Int& p) {
  if (p % 4 != 3)
    throw InvalidInput("criterion requires -1 to be a nonsquare");
  StabilizationVerdict out;
  out.prime = p;

  // pairs scanned in the order rho_1, ..., rho_n, rho_0
  std::vector<int> order;
  for (int i = 1; i <= b.n; ++i) order.push_back(i);
  order.push_back(0);

  for (size_t i = 0; i < order.size(); ++i)
    for (size_t j = i + 1; j < order.size(); ++j) {
      const InvolutionData& gm = b.generators.at(order[i]);
      const InvolutionData& gk = b.generators.at(order[j]);
      if (auto why = pair_condition_failure(gm, gk, p)) {
        out.stabilizes = false;
        out.violation = PairViolation{order[i], order[j], *why};
        return out;
      }
    }

  std::vector<GroupElement> gs;
  for (const InvolutionData& g : b.generators) gs.push_back(element_of(g));
  Int r0 = 0;
  LatticeClass root = LatticeClass::standard(p);
  for (const GroupElement& g : gs) {
    Int d = distance(root, act(g.proj, root));
    if (d > r0) r0 = d;
  }
  int radius = r0 == 0 ? 0 : static_cast<int>(r0);
  for (int attempt = 0; attempt < 4; ++attempt) {
    if (auto w = ball_common_fixed(gs, p, radius)) {
      out.stabilizes = true;
      out.witness = *w;
      return out;
    }
    radius = radius == 0 ? 1 : radius * 2;
  }
  throw SearchExhausted("pairwise criterion holds but no common vertex was found");
}

}  // namespace fuchsian
