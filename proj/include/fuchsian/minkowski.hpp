#pragma once

#include <array>
#include <optional>
#include <string>

#include "fuchsian/exactnum.hpp"

namespace fuchsian {

/// Point of R^{2,1} in a Lorentz orthonormal basis (e1, e2, e0).
struct LorentzVector {
  Rational x1, x2, x0;

  friend bool operator==(const LorentzVector&, const LorentzVector&) = default;
};

enum class VectorKind {
  LightlikeFuture,
  TimelikeFuture,
  Spacelike,
  LightlikePast,
  TimelikePast,
  Zero,
};

std::string to_string(VectorKind k);

/// u1*v1 + u2*v2 - u0*v0.
Rational inner(const LorentzVector& u, const LorentzVector& v);

VectorKind classify(const LorentzVector& v);

/// Point of the boundary circle Q u {inf}.
struct BoundaryPoint {
  bool is_infinity = false;
  Rational value;

  static BoundaryPoint infinity() { return BoundaryPoint{true, 0}; }
  static BoundaryPoint of(const Rational& r) { return BoundaryPoint{false, r}; }

  friend bool operator==(const BoundaryPoint&, const BoundaryPoint&) = default;
  std::string str() const;
};

/// Strict order on Q inside the circle Q u {inf}; comparing inf throws.
bool boundary_less(const BoundaryPoint& a, const BoundaryPoint& b);

/// Scale v to its primitive integer representative. For future vectors the
/// x0-coordinate stays positive; otherwise the first nonzero coordinate is
/// made positive.
LorentzVector canonical_vector(const LorentzVector& v);

/// r -> (2r, r^2-1, r^2+1), inf -> (0,1,1), then primitive integer scaling.
LorentzVector boundary_to_vector(const BoundaryPoint& r);

/// Inverse dictionary; requires a future light-like input.
BoundaryPoint vector_to_boundary(const LorentzVector& v);

/// 2x2 rational matrix [[a,b],[c,d]].
struct Mat2 {
  Rational a, b, c, d;

  static Mat2 identity() { return Mat2{1, 0, 0, 1}; }
  Rational det() const { return a * d - b * c; }
  Rational trace() const { return a + d; }
  Mat2 operator*(const Mat2& o) const;
  friend bool operator==(const Mat2&, const Mat2&) = default;
};

/// Clear denominators, divide by content, make the first nonzero entry
/// (scanning a, b, c, d) positive.
Mat2 canonical_projective(const Mat2& m);

bool is_scalar(const Mat2& m);

/// 3x3 rational matrix acting on LorentzVectors.
struct Mat3 {
  std::array<std::array<Rational, 3>, 3> m{};  // rows, column order (x1,x2,x0)

  static Mat3 identity();
  Mat3 operator*(const Mat3& o) const;
  LorentzVector apply(const LorentzVector& v) const;
  friend bool operator==(const Mat3&, const Mat3&) = default;
};

/// Symmetric matrix [[<v,e2+e0>, <v,e1>], [<v,e1>, <v,-e2+e0>]];
/// its determinant is -<v,v>.
Mat2 vector_to_symmetric(const LorentzVector& v);

/// Rotation by pi about a future time-like axis f:
/// x -> (2<x,f>/<f,f>) f - x.
Mat3 rotation_lorentz(const LorentzVector& f);

struct HalfPlaneInvolution {
  Rational a;
  Rational b_sq;
  Mat2 proj;  // canonical representative of [[a, -(b^2+a^2)], [1, -a]]
};

/// Half-plane data of the rotation by pi about f (future time-like).
HalfPlaneInvolution involution_halfplane(const LorentzVector& f);

/// Unique-up-to-scale intersection of span{x,y} and span{u,w}, scaled to a
/// primitive future time-like vector. The boundary pairs must strictly
/// interleave.
LorentzVector geodesic_meet(const LorentzVector& x, const LorentzVector& y,
                            const LorentzVector& u, const LorentzVector& w);

/// Whether the pair {a,b} separates {c,d} on the boundary circle.
bool strictly_separates(const BoundaryPoint& a, const BoundaryPoint& b,
                        const BoundaryPoint& c, const BoundaryPoint& d);

/// Fractional-linear action on the boundary circle.
BoundaryPoint mobius_boundary(const Mat2& m, const BoundaryPoint& r);

}  // namespace fuchsian
