#include "fuchsian/construct.hpp"

#include <sstream>
#include <tuple>

namespace fuchsian {

namespace {

Rational pt(const BoundaryPoint& b) {
  if (b.is_infinity) throw InvariantViolation("unexpected point at infinity");
  return b.value;
}

std::string rstr(const Rational& q) {
  std::string s = numerator(q).str();
  if (denominator(q) != 1) s += "/" + denominator(q).str();
  return s;
}

}  // namespace

ConstructionInput normalize_input(ConstructionInput in) {
  if (in.points.empty()) throw InvalidInput("Y must contain at least one point");
  if (in.points.size() == 1) in.points.push_back(in.points[0] + 1);
  for (size_t i = 0; i + 1 < in.points.size(); ++i) {
    if (!(in.points[i] < in.points[i + 1]))
      throw InvalidInput("Y must be strictly increasing");
  }
  if (in.prime_p % 4 != 3 || !is_prime(in.prime_p))
    throw InvalidInput("prime_p must be a prime congruent to 3 mod 4");
  const size_t n = in.points.size() + 1;
  if (!in.v0) in.v0 = in.points.front() - 1;
  if (!(*in.v0 < in.points.front())) throw InvalidInput("v0 must be below min(Y)");
  if (!in.x1) in.x1 = (*in.v0 + in.points.front()) / 2;
  if (!(*in.v0 < *in.x1 && *in.x1 < in.points.front()))
    throw InvalidInput("x1 must satisfy v0 < x1 < y1");
  if (in.classes.empty()) {
    in.classes.assign(n - 1, Int(1));
    in.classes[0] = in.prime_p;
  }
  if (in.classes.size() != n - 1)
    throw InvalidInput("classes must have one entry per steered generator");
  if (in.classes[0] != in.prime_p)
    throw InvalidInput("first square class must equal the steering prime");
  for (size_t i = 1; i < in.classes.size(); ++i) {
    if (in.classes[i] < 1 || !is_square_free(in.classes[i]))
      throw InvalidInput("square classes must be square-free positive integers");
    if (in.classes[i] % in.prime_p == 0)
      throw InvalidInput("steering prime must not divide later square classes");
  }
  if (!(in.t_init > 0)) throw InvalidInput("t_init must be positive");
  if (in.retry_cap < 1) throw InvalidInput("retry_cap must be positive");
  return in;
}

std::pair<LorentzVector, Rational> pick_on_geodesic(const LorentzVector& x,
                                                    const LorentzVector& y,
                                                    const Int& n_class,
                                                    const Rational& t) {
  Rational ip = inner(x, y);
  if (ip >= 0) throw InvariantViolation("rays must be distinct and future light-like");
  Rational lambda = Rational(n_class) * t * t / (-2 * ip);
  LorentzVector f{x.x1 + lambda * y.x1, x.x2 + lambda * y.x2, x.x0 + lambda * y.x0};
  return {f, lambda};
}

GroupBlueprint construct_group(const ConstructionInput& raw) {
  ConstructionInput in = normalize_input(raw);
  const int n = static_cast<int>(in.points.size()) + 1;
  const auto& Y = in.points;

  GroupBlueprint bp;
  bp.input = in;
  bp.n = n;

  LorentzVector v0_vec = boundary_to_vector(BoundaryPoint::of(*in.v0));

  // 1st step
  {
    auto [f1, lambda] = pick_on_geodesic(boundary_to_vector(BoundaryPoint::of(*in.x1)),
                                         boundary_to_vector(BoundaryPoint::of(Y[0])),
                                         in.classes[0], in.t_init);
    BoundaryPoint v1 = vector_to_boundary(rotation_lorentz(f1).apply(v0_vec));
    if (!(*in.v0 < *in.x1 && *in.x1 < pt(v1) && pt(v1) < Y[0]))
      throw InvariantViolation("first step ordering failed");
    bp.trace.steps.push_back({1, BoundaryPoint::of(*in.x1), v1, f1, lambda,
                              in.t_init, Rational(in.classes[0]) * in.t_init * in.t_init});
  }

  // i-th steps, 2 <= i <= n-1
  for (int i = 2; i <= n - 1; ++i) {
    const SteeredStep& prev = bp.trace.steps.back();
    const Rational x_prev = pt(prev.x);
    const Rational v_prev = pt(prev.v);
    const Rational& y_prev = Y[i - 2];
    const Rational& y_i = Y[i - 1];
    LorentzVector xv = boundary_to_vector(BoundaryPoint::of(x_prev));
    LorentzVector yv = boundary_to_vector(BoundaryPoint::of(y_prev));

    // find the smallest t = t_init * 2^k meeting the ordering; the accepting
    // region is a tail in k, so exponential then binary search locates the
    // same k a one-by-one doubling scan would, in O(log k) trials
    auto try_exponent = [&](int k) {
      Rational t = in.t_init;
      for (int j = 0; j < k; ++j) t *= 2;
      auto [fi, lambda] = pick_on_geodesic(xv, yv, in.classes[i - 1], t);
      Mat3 rot = rotation_lorentz(fi);
      BoundaryPoint xi = vector_to_boundary(rot.apply(boundary_to_vector(BoundaryPoint::of(y_i))));
      BoundaryPoint vi = vector_to_boundary(rot.apply(boundary_to_vector(BoundaryPoint::of(v_prev))));
      bool ok = v_prev < pt(xi) && pt(xi) < y_prev && y_prev < pt(vi) && pt(vi) < y_i;
      return std::tuple{ok, fi, lambda, t, xi, vi};
    };
    int hi = 0;
    while (!std::get<0>(try_exponent(hi))) {
      hi = hi == 0 ? 1 : 2 * hi;
      if (hi > in.retry_cap) {
        std::ostringstream os;
        os << "steering failed at step " << i << " within " << in.retry_cap
           << " doublings";
        throw SteeringFailed(os.str());
      }
    }
    int lo = hi / 2;  // hi accepts; below lo everything failed
    while (hi - lo > 1) {
      int mid = lo + (hi - lo) / 2;
      if (std::get<0>(try_exponent(mid)))
        hi = mid;
      else
        lo = mid;
    }
    auto [ok, fi, lambda, t, xi, vi] = try_exponent(hi);
    if (!ok) throw InvariantViolation("steering search lost its bracket");
    bp.trace.steps.push_back({i, xi, vi, fi, lambda, t,
                              Rational(in.classes[i - 1]) * t * t});
  }

  // n-th step
  const SteeredStep& last = bp.trace.steps.back();
  LorentzVector x_last = boundary_to_vector(last.x);
  LorentzVector y_last = boundary_to_vector(BoundaryPoint::of(Y[n - 2]));
  LorentzVector v_last = boundary_to_vector(last.v);
  LorentzVector v_inf = boundary_to_vector(BoundaryPoint::infinity());
  bp.trace.f_n = geodesic_meet(x_last, y_last, v_last, v_inf);
  bp.trace.v_n = vector_to_boundary(rotation_lorentz(bp.trace.f_n).apply(v_last));
  if (!bp.trace.v_n.is_infinity)
    throw InvariantViolation("v_n is not the point at infinity");

  // last step
  LorentzVector V = v0_vec;
  for (const SteeredStep& s : bp.trace.steps) V = rotation_lorentz(s.f).apply(V);
  V = rotation_lorentz(bp.trace.f_n).apply(V);
  bp.trace.V = V;
  bp.trace.f_0 = LorentzVector{V.x1 + v0_vec.x1, V.x2 + v0_vec.x2, V.x0 + v0_vec.x0};
  if (!(rotation_lorentz(bp.trace.f_0).apply(V) == v0_vec))
    throw InvariantViolation("rho_0 does not map V to v0");

  // generators rho_0 .. rho_n
  auto make_gen = [&](int index, const LorentzVector& f, std::optional<Int> cls) {
    HalfPlaneInvolution h = involution_halfplane(f);
    InvolutionData g;
    g.index = index;
    g.f = f;
    g.lorentz = rotation_lorentz(f);
    g.proj = h.proj;
    g.a = h.a;
    g.b_sq = h.b_sq;
    g.det_class = cls ? *cls : square_class_of(h.b_sq);
    return g;
  };
  bp.generators.push_back(make_gen(0, bp.trace.f_0, std::nullopt));
  for (const SteeredStep& s : bp.trace.steps)
    bp.generators.push_back(make_gen(s.index, s.f, in.classes[s.index - 1]));
  bp.generators.push_back(make_gen(n, bp.trace.f_n, std::nullopt));

  // polygon v_0 .. v_n
  bp.polygon.push_back(BoundaryPoint::of(*in.v0));
  for (const SteeredStep& s : bp.trace.steps) bp.polygon.push_back(s.v);
  bp.polygon.push_back(BoundaryPoint::infinity());

  // cusp word sanity: rho_n ... rho_1 rho_0 is parabolic
  Mat2 P = bp.generators[0].proj;
  for (int i = 1; i <= n; ++i) P = bp.generators[i].proj * P;
  P = canonical_projective(P);
  if (is_scalar(P) || P.trace() * P.trace() != 4 * P.det())
    throw InvariantViolation("composite is not parabolic");

  return bp;
}

namespace {

struct SpanSolution {
  bool ok = false;
  Rational alpha, beta;
};

// f = alpha u + beta w, if solvable.
SpanSolution solve_span(const LorentzVector& u, const LorentzVector& w,
                        const LorentzVector& f) {
  std::array<Rational, 3> uc{u.x1, u.x2, u.x0}, wc{w.x1, w.x2, w.x0},
      fc{f.x1, f.x2, f.x0};
  for (int r = 0; r < 3; ++r)
    for (int s = r + 1; s < 3; ++s) {
      Rational det = uc[r] * wc[s] - uc[s] * wc[r];
      if (det == 0) continue;
      Rational alpha = (fc[r] * wc[s] - fc[s] * wc[r]) / det;
      Rational beta = (uc[r] * fc[s] - uc[s] * fc[r]) / det;
      for (int k = 0; k < 3; ++k)
        if (alpha * uc[k] + beta * wc[k] != fc[k]) return {};
      return {true, alpha, beta};
    }
  return {};
}

Rational det3(const LorentzVector& a, const LorentzVector& b, const LorentzVector& c) {
  return a.x1 * (b.x2 * c.x0 - b.x0 * c.x2) - a.x2 * (b.x1 * c.x0 - b.x0 * c.x1) +
         a.x0 * (b.x1 * c.x2 - b.x2 * c.x1);
}

}  // namespace

bool ValidationReport::all_passed() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

ValidationReport validate_blueprint(const GroupBlueprint& b) {
  ValidationReport rep;
  auto add = [&](const std::string& name, bool pass, const std::string& detail = "") {
    rep.checks.push_back({name, pass, detail});
  };
  const int n = b.n;
  const auto& Y = b.input.points;

  // step orderings
  {
    bool ok = true;
    std::string detail;
    const Rational v0 = *b.input.v0;
    const Rational x1 = *b.input.x1;
    const SteeredStep& s1 = b.trace.steps.at(0);
    if (!(v0 < x1 && x1 < pt(s1.v) && pt(s1.v) < Y[0])) {
      ok = false;
      detail = "step 1";
    }
    for (int i = 2; i <= n - 1 && ok; ++i) {
      const SteeredStep& s = b.trace.steps.at(i - 1);
      const SteeredStep& prev = b.trace.steps.at(i - 2);
      if (!(pt(prev.v) < pt(s.x) && pt(s.x) < Y[i - 2] && Y[i - 2] < pt(s.v) &&
            pt(s.v) < Y[i - 1])) {
        ok = false;
        detail = "step " + std::to_string(i);
      }
    }
    add("step-orderings", ok, detail);
  }

  // f_i lies on the polygon edge between v_{i-1} and v_i, positive span
  {
    bool ok = true;
    std::string detail;
    for (int i = 1; i <= n && ok; ++i) {
      const LorentzVector& f = i == n ? b.trace.f_n : b.trace.steps.at(i - 1).f;
      auto sol = solve_span(boundary_to_vector(b.polygon.at(i - 1)),
                            boundary_to_vector(b.polygon.at(i)), f);
      if (!sol.ok || sol.alpha <= 0 || sol.beta <= 0) {
        ok = false;
        detail = "edge " + std::to_string(i);
      }
    }
    if (ok) {
      auto sol = solve_span(boundary_to_vector(b.polygon.at(n)),
                            boundary_to_vector(b.polygon.at(0)), b.trace.f_0);
      if (!sol.ok || sol.alpha <= 0 || sol.beta <= 0) {
        ok = false;
        detail = "edge 0";
      }
    }
    add("edge-incidence", ok, detail);
  }

  // f_i lies in span{x_{i-1}, y_{i-1}} (f_1 in span{x_1, y_1})
  {
    bool ok = true;
    std::string detail;
    for (int i = 1; i <= n && ok; ++i) {
      const LorentzVector& f = i == n ? b.trace.f_n : b.trace.steps.at(i - 1).f;
      int k = i == 1 ? 1 : i - 1;
      LorentzVector xv = boundary_to_vector(b.x_point(k));
      LorentzVector yv = boundary_to_vector(BoundaryPoint::of(b.y_point(k)));
      if (det3(xv, yv, f) != 0) {
        ok = false;
        detail = "f_" + std::to_string(i);
      }
    }
    add("geodesic-span", ok, detail);
  }

  // generators are involutions in both models
  {
    bool ok = true;
    std::string detail;
    for (const InvolutionData& g : b.generators) {
      if (!is_scalar(g.proj * g.proj) || !(g.lorentz * g.lorentz == Mat3::identity())) {
        ok = false;
        detail = "rho_" + std::to_string(g.index);
        break;
      }
    }
    add("involutions", ok, detail);
  }

  // cusp word is parabolic
  {
    Mat2 P = b.generators.at(0).proj;
    for (int i = 1; i <= n; ++i) P = b.generators.at(i).proj * P;
    P = canonical_projective(P);
    bool ok = !is_scalar(P) && P.trace() * P.trace() == 4 * P.det();
    if (ok) {
      Mat3 L = b.generators.at(0).lorentz;
      for (int i = 1; i <= n; ++i) L = b.generators.at(i).lorentz * L;
      ok = L.apply(b.trace.V) == b.trace.V;
    }
    add("parabolic-cusp", ok);
  }

  // hyperbolic witnesses fixing x_i and y_i
  {
    bool ok = true;
    std::string detail;
    for (int i = 1; i <= n - 1 && ok; ++i) {
      GroupElement h = hyperbolic_witness(b, i);
      Rational disc = h.proj.trace() * h.proj.trace() - 4 * h.proj.det();
      BoundaryPoint xi = b.x_point(i);
      BoundaryPoint yi = BoundaryPoint::of(b.y_point(i));
      if (!(disc > 0) || !fixes_boundary_point(h, xi) || !fixes_boundary_point(h, yi)) {
        ok = false;
        detail = "h_" + std::to_string(i);
      }
    }
    add("hyperbolic-witnesses", ok, detail);
  }

  // steered square classes, checked by valuation parity at p
  {
    bool ok = true;
    std::string detail;
    for (int i = 1; i <= n - 1; ++i) {
      Int v = vp(b.generators.at(i).b_sq, b.input.prime_p);
      bool want_odd = i == 1;
      if ((v % 2 != 0) != want_odd) {
        ok = false;
        detail = "rho_" + std::to_string(i);
        break;
      }
    }
    add("class-parity", ok, detail);
  }

  return rep;
}

}  // namespace fuchsian
