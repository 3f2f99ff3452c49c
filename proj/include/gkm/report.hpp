#pragma once

#include <json.hpp>

#include "gkm/cohomology.hpp"
#include "gkm/shelling.hpp"

namespace gkm {

// JSON objects with sorted keys; polynomials in canonical string form.
using Json = nlohmann::json;

Json error_json(const std::string& kind, const std::string& message);
Json validation_json(const ValidationReport& rep);
Json hyperplanes_json(const ValidGraph& vg, const HyperplaneSet& hs);
Json assumptions_json(const HyperplaneSet& hs, const AssumptionReport& rep);
Json class_json(const ValidGraph& vg, const CohomologyClass& f);
Json cohomology_json(const ValidGraph& vg, const std::vector<GradedPiece>& pieces);
Json iso_json(const IsoReport& rep, const std::string& orientation);
Json face_json(const HyperplaneSet& hs, const Face& f);
Json basis_json(const ValidGraph& vg, const Arrangement& arr, const SimplicialComplex& c, const ShellingData& s);
Json structure_json(const Arrangement& arr, const StructureTable& t);
Json expansion_json(const std::vector<Polynomial>& basis, const BasisExpansion& e);

}  // namespace gkm
