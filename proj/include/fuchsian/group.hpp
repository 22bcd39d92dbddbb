#pragma once

#include <vector>

#include "fuchsian/minkowski.hpp"

namespace fuchsian {

/// One generator rho_i: rotation by pi about f_i, in both models.
struct InvolutionData {
  int index = 0;
  LorentzVector f;
  Mat3 lorentz;
  Mat2 proj;          // canonical projective representative
  Rational a;
  Rational b_sq;
  Int det_class = 1;  // square-class label of b_sq
};

enum class ElementKind { Identity, Elliptic, Parabolic, Hyperbolic };

std::string to_string(ElementKind k);

struct GroupElement {
  std::vector<int> word;  // generator indices, freely reduced mod g_i^2
  Mat2 proj;              // canonical
  Mat3 lorentz;
  Int det_class = 1;

  static GroupElement identity();
};

struct GroupBlueprint;

GroupElement element_of(const InvolutionData& g);
GroupElement multiply(const GroupElement& g, const GroupElement& h);

ElementKind classify_element(const GroupElement& g);

bool fixes_boundary_point(const GroupElement& g, const BoundaryPoint& r);

/// Free product of n+1 copies of Z/2 plus the parabolic cusp word.
struct Presentation {
  int generator_count = 0;
  std::vector<int> cusp_word;  // [n, n-1, ..., 1, 0], parabolic
};

Presentation presentation_of(const GroupBlueprint& b);

/// h_i = rho_i rho_{i+1}, hyperbolic with axis through x_i and y_i.
GroupElement hyperbolic_witness(const GroupBlueprint& b, int i);

struct PslKernel {
  Int index;  // power of 2
  std::vector<std::vector<int>> transversal;
  std::vector<GroupElement> kernel_generators;
};

/// Finite-index kernel of the determinant square-class homomorphism,
/// computed by Reidemeister-Schreier over its elementary abelian image.
PslKernel psl_kernel(const GroupBlueprint& b);

struct NotCuspCertificate {
  Rational point;
  GroupElement witness;
  std::string note;
};

NotCuspCertificate not_cusp_certificate(const GroupBlueprint& b, const Rational& y);

}  // namespace fuchsian
