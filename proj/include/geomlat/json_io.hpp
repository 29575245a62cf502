#pragma once

/**
 * @file json_io.hpp
 * @brief JSON encodings of points, affine maps, verdicts and lattice reports.
 *
 * Field elements travel as their text form ("3/5", "1+2√2"); points as arrays
 * of those strings; affine maps as {"d", "linear" (row-major), "translation"}.
 */

#include "geomlat/lattice.hpp"

#include "json.hpp"

namespace geomlat {

nlohmann::json to_json(const FieldElement& x);
nlohmann::json to_json(const PointVec& p);
nlohmann::json to_json(const AffineMap& map);
nlohmann::json to_json(const SimilarityVerdict& verdict);
nlohmann::json to_json(const WitnessEvidence& ev);
nlohmann::json to_json(const SampledEvidence& ev);
nlohmann::json to_json(const ConceptVerdict& verdict);
nlohmann::json to_json(const ContainmentEvidence& ev);
nlohmann::json to_json(const CompareResult& result);
nlohmann::json to_json(const Leiras2Result& result);
nlohmann::json to_json(const DimensionReport& report);
nlohmann::json to_json(const LatticeReport& report);

/// Classification of one map against all five groups and all eight relations.
nlohmann::json classification_json(const AffineMap& map);

/// Parsers; `extension` fixes the ambient field world (0 = rationals).
PointVec point_from_json(const nlohmann::json& j, std::uint64_t extension = 0);
AffineMap affine_from_json(const nlohmann::json& j, std::uint64_t extension = 0);

}  // namespace geomlat
