#pragma once

/**
 * @file lattice.hpp
 * @brief The seven geometries as first-class objects and the reconstruction
 *        of their definability lattice via the automorphism bridge.
 *
 * Concept-set comparison is performed entirely through affine-automorphism
 * groups: a relation is a concept of a geometry exactly when every member of
 * the geometry's automorphism group respects it, and two geometries have the
 * same concepts exactly when their groups coincide. Non-membership and
 * strictness verdicts carry a conclusive, replayable witness map; membership
 * and equality verdicts carry a sampling certificate (trial count and seed)
 * and are corroborating evidence, not proofs.
 */

#include "geomlat/groups.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace geomlat {

class InadmissiblePair : public FieldError {
 public:
  explicit InadmissiblePair(const std::string& what) : FieldError(what) {}
};

enum class GeometryId { OAff, Eucl, Rel, Mink, Gal, Newt, LClass };

inline constexpr GeometryId kAllGeometries[] = {
    GeometryId::OAff, GeometryId::Eucl, GeometryId::Rel,  GeometryId::Mink,
    GeometryId::Gal,  GeometryId::Newt, GeometryId::LClass,
};

std::string_view geometry_name(GeometryId g);   // "oaff", "eucl", ...
std::string_view geometry_label(GeometryId g);  // "OAff", "Eucl", ...
GeometryId geometry_from_name(std::string_view name);

/// The geometry's defining relations (always includes Bw).
std::span<const RelationId> defining_relations(GeometryId g);

/// The similarity group equal to AffAut(g); nullopt for OAff, whose affine
/// automorphisms are all affine bijections.
std::optional<GroupId> automorphism_group(GeometryId g);

/// Exact membership of A in AffAut(g).
bool affaut_member(GeometryId g, const AffineMap& map);

/// Ground truth of the concept-location table (Bw belongs to every geometry).
bool table_expects_in(RelationId rel, GeometryId g);

// ---------------------------------------------------------------------------
// Evidence

/// Conclusive evidence: a replayable map that witnesses a failure, either of
/// a relation (with the violating argument tuple) or of group membership.
struct WitnessEvidence {
  std::string name;  // "E", "P", "N", "G", "swap", or "generated"
  AffineMap map;
  std::optional<RelationId> violated_relation;
  std::optional<GeometryId> outside_group_of;
  std::vector<PointVec> counterexample;
};

/// Supporting evidence: N trials from a recorded seed, zero counterexamples.
struct SampledEvidence {
  int trials = 0;
  std::uint64_t seed = 0;
};

enum class CellVerdict { In, NotIn };

struct ConceptVerdict {
  CellVerdict verdict = CellVerdict::In;
  std::optional<WitnessEvidence> witness;  // set for NotIn
  std::optional<SampledEvidence> sampled;  // set for In
};

/// Is `rel` a concept of `g`? Decided by the bridge: NotIn as soon as some
/// member of AffAut(g) fails to respect `rel` (witness catalog first, then
/// generated members); In when `trials` members all respect it exactly.
ConceptVerdict concept_in_geometry(RelationId rel, GeometryId g, std::size_t d, int trials,
                                   std::uint64_t seed);

// ---------------------------------------------------------------------------
// Concept-set comparison

enum class SetRelation { Equal, StrictSubset, StrictSuperset, Incomparable };

std::string_view set_relation_name(SetRelation r);

/// One direction of a comparison: does Ca(g1) ⊆ Ca(g2) hold, i.e. is every
/// sampled member of AffAut(g2) a member of AffAut(g1)?
struct ContainmentEvidence {
  bool holds = false;
  std::optional<SampledEvidence> support;      // holds
  std::optional<WitnessEvidence> refutation;   // fails
};

struct CompareResult {
  GeometryId g1;
  GeometryId g2;
  SetRelation relation;
  ContainmentEvidence ca1_in_ca2;
  ContainmentEvidence ca2_in_ca1;
};

/// Compare concept sets through bidirectional group-containment sampling
/// plus witness-based strictness.
CompareResult compare_concept_sets(GeometryId g1, GeometryId g2, std::size_t d, int trials,
                                   std::uint64_t seed);

// ---------------------------------------------------------------------------
// Expansions by one concept

enum class Leiras2Kind { EquivLClass, EquivExceptionalTriple, Rejected };

std::string_view leiras2_kind_name(Leiras2Kind k);

struct Leiras2Result {
  Leiras2Kind kind = Leiras2Kind::Rejected;
  /// Target group ⊆ AffAut(⟨G,R⟩) direction.
  SampledEvidence lower;
  /// AffAut(⟨G,R⟩) ⊆ target group direction.
  SampledEvidence upper;
  /// Exceptional verdicts: the map keeping ⟨G,R⟩ apart from the lattice top.
  std::optional<WitnessEvidence> separation;
  std::string reason;  // nonempty iff Rejected
};

/// Decide where the expansion ⟨G,R⟩ lands: definability-equivalent to the
/// lattice top (its automorphisms are exactly the trivial Euclidean
/// similarities), or - for the three d = 2 exceptions - to the common value
/// of the exceptional triple (automorphisms EuclSim ∩ PoiSim, separated from
/// the top by the time/space swap). Throws InadmissiblePair when R is
/// already a concept of G, when (G, R) = (Gal, Rest), or when G is not one
/// of the supported base geometries.
Leiras2Result check_leiras2(GeometryId g, RelationId rel, std::size_t d, int trials,
                            std::uint64_t seed);

// ---------------------------------------------------------------------------
// Whole-lattice report

struct TableCell {
  RelationId relation;
  GeometryId geometry;
  ConceptVerdict verdict;
};

struct HasseEdge {
  GeometryId from;  // Ca(from) ⊊ Ca(to)
  GeometryId to;
  SampledEvidence containment;
  WitnessEvidence strictness;
};

struct EquivalenceClaim {
  GeometryId a;
  GeometryId b;
  SampledEvidence forward;
  SampledEvidence backward;
};

struct DimensionReport {
  std::size_t d = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  std::vector<TableCell> cells;
  std::vector<CompareResult> comparisons;  // all unordered geometry pairs
  std::vector<HasseEdge> edges;            // cover edges of the strict order
  std::vector<EquivalenceClaim> equivalences;
};

struct LatticeReport {
  int trials = 0;
  std::uint64_t seed = 0;
  std::vector<DimensionReport> dims;
};

/// Reconstruct the full lattice: the concept-location table over the five
/// table geometries (plus the Bw row), all pairwise concept-set comparisons,
/// the Hasse cover edges, and the definitional equivalences.
LatticeReport build_report(const std::vector<std::size_t>& dims, int trials,
                           std::uint64_t seed);

/// Graphviz rendering of the Hasse diagram; deterministic node/edge order.
/// Geometries proven definitionally equivalent share one merged-label node.
std::string emit_dot(const LatticeReport& report);

}  // namespace geomlat
