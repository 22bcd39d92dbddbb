#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fuchsian/group.hpp"

namespace fuchsian {

struct InvalidInput : std::invalid_argument {
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

struct SteeringFailed : std::runtime_error {
  explicit SteeringFailed(const std::string& what) : std::runtime_error(what) {}
};

struct InvariantViolation : std::logic_error {
  explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

struct ConstructionInput {
  std::vector<Rational> points;        // Y, strictly increasing
  Int prime_p = 3;                     // steering prime, 3 mod 4
  std::optional<Rational> v0;          // default min(Y) - 1
  std::optional<Rational> x1;          // default (v0 + y1)/2
  std::vector<Int> classes;            // n_1..n_{n-1}; default (p, 1, ..., 1)
  Rational t_init = 1;
  int retry_cap = 4096;
};

/// Apply defaults, pad a single-point Y, and check every input invariant.
ConstructionInput normalize_input(ConstructionInput in);

struct SteeredStep {
  int index = 0;
  BoundaryPoint x;
  BoundaryPoint v;
  LorentzVector f;
  Rational lambda;
  Rational t;
  Rational abs_inner;  // |<f_i, f_i>|
};

struct ConstructionTrace {
  std::vector<SteeredStep> steps;  // indices 1..n-1
  LorentzVector f_n;
  BoundaryPoint v_n;               // always infinity
  LorentzVector V;                 // rho_n ... rho_1 applied to the v0 vector
  LorentzVector f_0;
};

struct GroupBlueprint {
  ConstructionInput input;             // normalized echo
  int n = 0;                           // |Y| + 1
  std::vector<InvolutionData> generators;  // rho_0 .. rho_n
  std::vector<BoundaryPoint> polygon;      // v_0 .. v_n (v_n = inf)
  ConstructionTrace trace;

  BoundaryPoint vertex(int i) const { return polygon.at(i); }
  /// x_i for 1 <= i <= n-1.
  BoundaryPoint x_point(int i) const { return trace.steps.at(i - 1).x; }
  /// y_i for 1 <= i <= n-1.
  const Rational& y_point(int i) const { return input.points.at(i - 1); }
};

/// f = x + lambda y with lambda = n_class t^2 / (-2 <x,y>), so that
/// <f,f> = -n_class t^2.
std::pair<LorentzVector, Rational> pick_on_geodesic(const LorentzVector& x,
                                                    const LorentzVector& y,
                                                    const Int& n_class,
                                                    const Rational& t);

GroupBlueprint construct_group(const ConstructionInput& input);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<CheckResult> checks;
  bool all_passed() const;
};

ValidationReport validate_blueprint(const GroupBlueprint& b);

}  // namespace fuchsian
