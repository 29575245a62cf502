#pragma once

/**
 * @file groups.hpp
 * @brief The five similarity groups: membership deciders with extracted
 *        square-factors, seeded member generators, the witness catalog, and
 *        Euclidean-field decompositions.
 *
 * Membership is decided by finitely many unit-vector equations on the linear
 * part; the translation part never matters (all five groups contain every
 * translation).
 */

#include "geomlat/affine.hpp"

#include <cstdint>
#include <optional>
#include <string_view>

namespace geomlat {

enum class GroupId { EuclSim, PoiSim, GalSim, TrivGalSim, TrivEuclSim };

inline constexpr GroupId kAllGroups[] = {
    GroupId::EuclSim, GroupId::PoiSim, GroupId::GalSim, GroupId::TrivGalSim,
    GroupId::TrivEuclSim,
};

std::string_view group_name(GroupId g);
GroupId group_from_name(std::string_view name);

struct SimilarityVerdict {
  bool member = false;
  /// Square-factor a (spatial square-factor for the Galilean groups).
  std::optional<FieldElement> square_factor;
  /// Temporal factor b, present for Galilean-group members.
  std::optional<FieldElement> temporal_factor;
};

/// Exact membership of A in the group, with factors extracted when member.
SimilarityVerdict classify(const AffineMap& map, GroupId g);

/// Galilean similarity with spatial square-factor 1 that also preserves time
/// differences (first row of the linear part is (1, 0, ..., 0)).
bool is_galilean_transformation(const AffineMap& map);

struct GenParams {
  /// Scale c applied to the (J-)orthogonal core; square-factor becomes c².
  /// Drawn at random (nonzero) when unset.
  std::optional<FieldElement> scale;
  /// Temporal factor b for the Galilean groups; random nonzero when unset.
  std::optional<FieldElement> temporal;
  /// Allow composing with a fixed spatial reflection (covers det < 0).
  bool allow_reflection = true;
  /// d = 2 only: allow composing PoiSim members with the time/space swap,
  /// producing negative square-factors.
  bool allow_time_space_swap = false;
  bool with_translation = true;
  int coeff_bound = 3;
};

/// Random member of the group; classify(result, g).member is always true.
AffineMap generate(GroupId g, std::size_t d, std::uint64_t seed, const GenParams& params = {});

/// The named transformations used in the separation arguments.
enum class WitnessName { E, P, N, G, Swap };

inline constexpr WitnessName kAllWitnesses[] = {
    WitnessName::E, WitnessName::P, WitnessName::N, WitnessName::G, WitnessName::Swap,
};

std::string_view witness_name(WitnessName w);
WitnessName witness_from_name(std::string_view name);

/// E:  e1 ↦ (3/5)e1 + (4/5)e2,  e2 ↦ (4/5)e1 - (3/5)e2   (Euclidean, a = 1)
/// P:  e1 ↦ (5/3)e1 + (4/3)e2,  e2 ↦ (4/3)e1 + (5/3)e2   (Poincaré, a = 1)
/// N:  e1 ↦ 2e1                                           (temporal scaling)
/// G:  e1 ↦ e1 + e2                                       (Galilean boost)
/// Swap: e1 ↔ e2                                          (Poincaré, a = -1)
/// All keep the remaining unit vectors fixed.
AffineMap witness(WitnessName w, std::size_t d);

struct SimilarityDecomposition {
  /// The transformation part: a Euclidean (resp. Galilean) transformation.
  AffineMap transformation;
  /// Uniform scale factor sqrt(a) (EuclSim) resp. spatial scale (GalSim).
  FieldElement scale;
  /// Temporal scale b, GalSim only.
  std::optional<FieldElement> temporal_scale;
};

/// Split a Euclidean similarity into transformation ∘ uniform scaling, or a
/// Galilean similarity into transformation ∘ spatial ∘ temporal scaling.
/// Returns nullopt when sqrt(a) is not representable in the map's field
/// (the non-Euclidean-field obstruction). Throws std::invalid_argument when
/// the map is not a member of `g` or `g` is not EuclSim/GalSim.
std::optional<SimilarityDecomposition> decompose_similarity(const AffineMap& map, GroupId g);

}  // namespace geomlat
