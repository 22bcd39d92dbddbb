#pragma once

#include <nlohmann/json_fwd.hpp>

#include "fuchsian/certify.hpp"

namespace fuchsian {

using Json = nlohmann::json;

struct SchemaError : std::runtime_error {
  explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

std::string rational_str(const Rational& q);
Rational parse_rational(const std::string& s);

Json boundary_to_json(const BoundaryPoint& r);
BoundaryPoint boundary_from_json(const Json& j);

Json vector_to_json(const LorentzVector& v);
LorentzVector vector_from_json(const Json& j);

Json mat2_to_json(const Mat2& m);
Mat2 mat2_from_json(const Json& j);

Json blueprint_to_json(const GroupBlueprint& b);
GroupBlueprint blueprint_from_json(const Json& j);

Json verdict_to_json(const StabilizationVerdict& v);

Json lattice_to_json(const LatticeClass& l);
LatticeClass lattice_from_json(const Json& j);

Json certificate_to_json(const NoncommensurabilityCertificate& c);
NoncommensurabilityCertificate certificate_from_json(const Json& j);

Json family_manifest(const std::vector<FamilyMember>& family,
                     const std::vector<NoncommensurabilityCertificate>& certs);

GroupBlueprint load_blueprint(const std::string& path);
void save_json(const Json& j, const std::string& path);

}  // namespace fuchsian
