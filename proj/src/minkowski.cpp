#include "fuchsian/minkowski.hpp"

namespace fuchsian {

std::string to_string(VectorKind k) {
  switch (k) {
    case VectorKind::LightlikeFuture: return "lightlike-future";
    case VectorKind::TimelikeFuture: return "timelike-future";
    case VectorKind::Spacelike: return "spacelike";
    case VectorKind::LightlikePast: return "lightlike-past";
    case VectorKind::TimelikePast: return "timelike-past";
    case VectorKind::Zero: return "zero";
  }
  return "?";
}

Rational inner(const LorentzVector& u, const LorentzVector& v) {
  return u.x1 * v.x1 + u.x2 * v.x2 - u.x0 * v.x0;
}

VectorKind classify(const LorentzVector& v) {
  if (v.x1 == 0 && v.x2 == 0 && v.x0 == 0) return VectorKind::Zero;
  Rational q = inner(v, v);
  if (q > 0) return VectorKind::Spacelike;
  if (q == 0) {
    return v.x0 > 0 ? VectorKind::LightlikeFuture : VectorKind::LightlikePast;
  }
  return v.x0 > 0 ? VectorKind::TimelikeFuture : VectorKind::TimelikePast;
}

std::string BoundaryPoint::str() const {
  if (is_infinity) return "inf";
  std::string s = numerator(value).str();
  if (denominator(value) != 1) s += "/" + denominator(value).str();
  return s;
}

bool boundary_less(const BoundaryPoint& a, const BoundaryPoint& b) {
  if (a.is_infinity || b.is_infinity)
    throw std::domain_error("boundary order excludes the point at infinity");
  return a.value < b.value;
}

LorentzVector canonical_vector(const LorentzVector& v) {
  Int l = lcm(lcm(denominator(v.x1), denominator(v.x2)), denominator(v.x0));
  Int a = numerator(v.x1 * l);
  Int b = numerator(v.x2 * l);
  Int c = numerator(v.x0 * l);
  Int g = gcd(gcd(abs(a), abs(b)), abs(c));
  if (g == 0) return LorentzVector{0, 0, 0};
  a /= g;
  b /= g;
  c /= g;
  Int lead = c != 0 ? c : (a != 0 ? a : b);
  if (lead < 0) {
    a = -a;
    b = -b;
    c = -c;
  }
  return LorentzVector{Rational(a), Rational(b), Rational(c)};
}

LorentzVector boundary_to_vector(const BoundaryPoint& r) {
  if (r.is_infinity) return LorentzVector{0, 1, 1};
  const Rational& t = r.value;
  return canonical_vector(LorentzVector{2 * t, t * t - 1, t * t + 1});
}

BoundaryPoint vector_to_boundary(const LorentzVector& v) {
  if (classify(v) != VectorKind::LightlikeFuture)
    throw std::domain_error("not a future boundary ray");
  if (v.x2 == v.x0) return BoundaryPoint::infinity();
  return BoundaryPoint::of(-v.x1 / (v.x2 - v.x0));
}

Mat2 Mat2::operator*(const Mat2& o) const {
  return Mat2{a * o.a + b * o.c, a * o.b + b * o.d,
              c * o.a + d * o.c, c * o.b + d * o.d};
}

Mat2 canonical_projective(const Mat2& m) {
  Int l = lcm(lcm(denominator(m.a), denominator(m.b)),
              lcm(denominator(m.c), denominator(m.d)));
  Int e[4] = {numerator(m.a * l), numerator(m.b * l), numerator(m.c * l),
              numerator(m.d * l)};
  Int g = 0;
  for (const Int& x : e) g = gcd(g, abs(x));
  if (g == 0) throw std::domain_error("zero matrix has no projective representative");
  int lead = 0;
  while (e[lead] == 0) ++lead;
  bool flip = e[lead] < 0;
  for (Int& x : e) {
    x /= g;
    if (flip) x = -x;
  }
  return Mat2{Rational(e[0]), Rational(e[1]), Rational(e[2]), Rational(e[3])};
}

bool is_scalar(const Mat2& m) { return m.b == 0 && m.c == 0 && m.a == m.d; }

Mat3 Mat3::identity() {
  Mat3 r;
  for (int i = 0; i < 3; ++i) r.m[i][i] = 1;
  return r;
}

Mat3 Mat3::operator*(const Mat3& o) const {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Rational s = 0;
      for (int k = 0; k < 3; ++k) s += m[i][k] * o.m[k][j];
      r.m[i][j] = s;
    }
  return r;
}

LorentzVector Mat3::apply(const LorentzVector& v) const {
  std::array<Rational, 3> in{v.x1, v.x2, v.x0};
  std::array<Rational, 3> out{};
  for (int i = 0; i < 3; ++i) {
    Rational s = 0;
    for (int k = 0; k < 3; ++k) s += m[i][k] * in[k];
    out[i] = s;
  }
  return LorentzVector{out[0], out[1], out[2]};
}

Mat2 vector_to_symmetric(const LorentzVector& v) {
  return Mat2{v.x2 - v.x0, v.x1, v.x1, -v.x2 - v.x0};
}

Mat3 rotation_lorentz(const LorentzVector& f) {
  if (classify(f) != VectorKind::TimelikeFuture)
    throw std::domain_error("rotation center must be time-like");
  Rational q = inner(f, f);
  std::array<Rational, 3> fv{f.x1, f.x2, f.x0};
  std::array<Rational, 3> jf{f.x1, f.x2, -f.x0};  // J f with J = diag(1,1,-1)
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      r.m[i][j] = 2 * fv[i] * jf[j] / q;
      if (i == j) r.m[i][j] -= 1;
    }
  return r;
}

HalfPlaneInvolution involution_halfplane(const LorentzVector& f) {
  if (classify(f) != VectorKind::TimelikeFuture)
    throw std::domain_error("rotation center must be time-like");
  Rational s = f.x2 - f.x0;  // <f, e2+e0>, negative on the future cone
  Rational a = -f.x1 / s;
  Rational b_sq = -inner(f, f) / (s * s);
  Mat2 m{a, -(b_sq + a * a), 1, -a};
  return HalfPlaneInvolution{a, b_sq, canonical_projective(m)};
}

namespace {

std::array<Rational, 3> cross(const std::array<Rational, 3>& a,
                              const std::array<Rational, 3>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

std::array<Rational, 3> coords(const LorentzVector& v) { return {v.x1, v.x2, v.x0}; }

}  // namespace

bool strictly_separates(const BoundaryPoint& a, const BoundaryPoint& b,
                        const BoundaryPoint& c, const BoundaryPoint& d) {
  auto inside_arc = [](const BoundaryPoint& p, const BoundaryPoint& u,
                       const BoundaryPoint& v) {
    // open arc between u and v not containing infinity when both finite;
    // otherwise the ray past the finite endpoint
    if (p == u || p == v) return false;
    if (u.is_infinity && v.is_infinity) return false;
    if (u.is_infinity) return p.is_infinity ? false : p.value < v.value;
    if (v.is_infinity) return p.is_infinity ? false : p.value > u.value;
    if (p.is_infinity) return false;
    Rational lo = u.value < v.value ? u.value : v.value;
    Rational hi = u.value < v.value ? v.value : u.value;
    return lo < p.value && p.value < hi;
  };
  if (a == b || c == d || a == c || a == d || b == c || b == d) return false;
  return inside_arc(c, a, b) != inside_arc(d, a, b);
}

LorentzVector geodesic_meet(const LorentzVector& x, const LorentzVector& y,
                            const LorentzVector& u, const LorentzVector& w) {
  BoundaryPoint bx = vector_to_boundary(x), by = vector_to_boundary(y);
  BoundaryPoint bu = vector_to_boundary(u), bw = vector_to_boundary(w);
  if (!strictly_separates(bx, by, bu, bw))
    throw std::domain_error("geodesics do not meet");
  auto n1 = cross(coords(x), coords(y));
  auto n2 = cross(coords(u), coords(w));
  auto d = cross(n1, n2);
  LorentzVector f = canonical_vector(LorentzVector{d[0], d[1], d[2]});
  if (classify(f) == VectorKind::Zero)
    throw std::domain_error("degenerate intersection");
  if (f.x0 < 0) f = LorentzVector{-f.x1, -f.x2, -f.x0};
  return f;
}

BoundaryPoint mobius_boundary(const Mat2& m, const BoundaryPoint& r) {
  if (m.det() == 0) throw std::domain_error("singular projective matrix");
  Rational num, den;
  if (r.is_infinity) {
    num = m.a;
    den = m.c;
  } else {
    num = m.a * r.value + m.b;
    den = m.c * r.value + m.d;
  }
  if (den == 0) return BoundaryPoint::infinity();
  return BoundaryPoint::of(num / den);
}

}  // namespace fuchsian
