#include "geomlat/lattice.hpp"

#include "geomlat/sampling.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>

namespace geomlat {

namespace {

using sampling::mix_seed;
using sampling::Rng;

constexpr std::array<RelationId, 1> kOAffRels = {RelationId::Bw};
constexpr std::array<RelationId, 2> kEuclRels = {RelationId::CongE, RelationId::Bw};
constexpr std::array<RelationId, 2> kRelRels = {RelationId::Lambda, RelationId::Bw};
constexpr std::array<RelationId, 2> kMinkRels = {RelationId::CongMu, RelationId::Bw};
constexpr std::array<RelationId, 2> kGalRels = {RelationId::CongS, RelationId::Bw};
constexpr std::array<RelationId, 3> kNewtRels = {RelationId::CongS, RelationId::Rest,
                                                 RelationId::Bw};
constexpr std::array<RelationId, 3> kLClassRels = {RelationId::CongS, RelationId::Lambda,
                                                   RelationId::Bw};

}  // namespace

std::string_view geometry_name(GeometryId g) {
  switch (g) {
    case GeometryId::OAff: return "oaff";
    case GeometryId::Eucl: return "eucl";
    case GeometryId::Rel: return "rel";
    case GeometryId::Mink: return "mink";
    case GeometryId::Gal: return "gal";
    case GeometryId::Newt: return "newt";
    case GeometryId::LClass: return "lclass";
  }
  throw std::logic_error("unknown geometry");
}

std::string_view geometry_label(GeometryId g) {
  switch (g) {
    case GeometryId::OAff: return "OAff";
    case GeometryId::Eucl: return "Eucl";
    case GeometryId::Rel: return "Rel";
    case GeometryId::Mink: return "Mink";
    case GeometryId::Gal: return "Gal";
    case GeometryId::Newt: return "Newt";
    case GeometryId::LClass: return "LClass";
  }
  throw std::logic_error("unknown geometry");
}

GeometryId geometry_from_name(std::string_view name) {
  for (GeometryId g : kAllGeometries)
    if (geometry_name(g) == name) return g;
  throw ParseError("unknown geometry name: '" + std::string(name) + "'");
}

std::span<const RelationId> defining_relations(GeometryId g) {
  switch (g) {
    case GeometryId::OAff: return kOAffRels;
    case GeometryId::Eucl: return kEuclRels;
    case GeometryId::Rel: return kRelRels;
    case GeometryId::Mink: return kMinkRels;
    case GeometryId::Gal: return kGalRels;
    case GeometryId::Newt: return kNewtRels;
    case GeometryId::LClass: return kLClassRels;
  }
  throw std::logic_error("unknown geometry");
}

std::optional<GroupId> automorphism_group(GeometryId g) {
  switch (g) {
    case GeometryId::OAff: return std::nullopt;
    case GeometryId::Eucl: return GroupId::EuclSim;
    case GeometryId::Rel:
    case GeometryId::Mink: return GroupId::PoiSim;
    case GeometryId::Gal: return GroupId::GalSim;
    case GeometryId::Newt: return GroupId::TrivGalSim;
    case GeometryId::LClass: return GroupId::TrivEuclSim;
  }
  throw std::logic_error("unknown geometry");
}

bool affaut_member(GeometryId g, const AffineMap& map) {
  const auto grp = automorphism_group(g);
  if (!grp) return true;  // every affine bijection is an automorphism of OAff
  return classify(map, *grp).member;
}

bool table_expects_in(RelationId rel, GeometryId g) {
  if (rel == RelationId::Bw) return true;
  switch (g) {
    case GeometryId::OAff:
      return false;
    case GeometryId::Eucl:
      return rel == RelationId::CongE;
    case GeometryId::Rel:
    case GeometryId::Mink:
      return rel == RelationId::CongMu || rel == RelationId::Lambda;
    case GeometryId::Gal:
      return rel == RelationId::CongS || rel == RelationId::S;
    case GeometryId::Newt:
      return rel == RelationId::CongS || rel == RelationId::S || rel == RelationId::Rest;
    case GeometryId::LClass:
      return true;
  }
  throw std::logic_error("unknown geometry");
}

namespace {

/// A random member of AffAut(g): a group member for the five similarity
/// geometries, an arbitrary affine bijection for OAff.
AffineMap sample_member(GeometryId g, std::size_t d, std::uint64_t seed) {
  if (const auto grp = automorphism_group(g)) {
    GenParams params;
    params.allow_time_space_swap = (*grp == GroupId::PoiSim && d == 2);
    return generate(*grp, d, seed, params);
  }
  Rng rng(seed);
  return sampling::random_affine_bijection(rng, d, 3);
}

AffineMap compose_with_swap(const AffineMap& map) {
  return witness(WitnessName::Swap, map.dim()).compose(map);
}

/// Member stream for the ⊆ direction of expansion checks: generic members of
/// AffAut(g) interleaved with members of the expected smaller groups, so the
/// "respects R" filter is satisfied by a useful fraction of the stream.
AffineMap sample_biased_member(GeometryId g, std::size_t d, int index, std::uint64_t seed) {
  const std::uint64_t s = mix_seed(seed, {static_cast<std::uint64_t>(index)});
  switch (index % 3) {
    case 0:
      return sample_member(g, d, s);
    case 1:
      return generate(GroupId::TrivEuclSim, d, s);
    default: {
      const AffineMap base = generate(GroupId::TrivEuclSim, d, s);
      if (d == 2) {
        const AffineMap swapped = compose_with_swap(base);
        if (affaut_member(g, swapped)) return swapped;
      }
      return base;
    }
  }
}

std::vector<PointVec> violation_tuple(const AffineMap& map, RelationId rel,
                                      std::uint64_t seed) {
  const RespectSample sample = respects_sampled(map, rel, 256, seed);
  return sample.counterexample.value_or(std::vector<PointVec>{});
}

WitnessEvidence relation_witness(std::string name, const AffineMap& map, RelationId rel,
                                 std::uint64_t seed) {
  return WitnessEvidence{std::move(name), map, rel, std::nullopt,
                         violation_tuple(map, rel, seed)};
}

}  // namespace

ConceptVerdict concept_in_geometry(RelationId rel, GeometryId g, std::size_t d, int trials,
                                   std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  const std::uint64_t cell_seed =
      mix_seed(seed, {static_cast<std::uint64_t>(rel), static_cast<std::uint64_t>(g), d});

  // The named witnesses give deterministic, minimal refutations.
  for (WitnessName w : kAllWitnesses) {
    const AffineMap m = witness(w, d);
    if (!affaut_member(g, m)) continue;
    if (!respects_exact(m, rel)) {
      return {CellVerdict::NotIn,
              relation_witness(std::string(witness_name(w)), m, rel, cell_seed), std::nullopt};
    }
  }
  for (int i = 0; i < trials; ++i) {
    const AffineMap m = sample_member(g, d, mix_seed(cell_seed, {static_cast<std::uint64_t>(i)}));
    if (!respects_exact(m, rel))
      return {CellVerdict::NotIn, relation_witness("generated", m, rel, cell_seed),
              std::nullopt};
  }
  return {CellVerdict::In, std::nullopt, SampledEvidence{trials, cell_seed}};
}

namespace {

/// Ca(outer) ⊆ Ca(inner)? Holds iff AffAut(outer) ⊇ AffAut(inner), checked by
/// sampling AffAut(inner) and testing exact membership in AffAut(outer).
ContainmentEvidence check_containment(GeometryId outer, GeometryId inner, std::size_t d,
                                      int trials, std::uint64_t seed) {
  const std::uint64_t dir_seed = mix_seed(
      seed, {static_cast<std::uint64_t>(outer), static_cast<std::uint64_t>(inner), d});
  for (WitnessName w : kAllWitnesses) {
    const AffineMap m = witness(w, d);
    if (!affaut_member(inner, m)) continue;
    if (!affaut_member(outer, m)) {
      return {false, std::nullopt,
              WitnessEvidence{std::string(witness_name(w)), m, std::nullopt, outer, {}}};
    }
  }
  for (int i = 0; i < trials; ++i) {
    const AffineMap m =
        sample_member(inner, d, mix_seed(dir_seed, {static_cast<std::uint64_t>(i)}));
    if (!affaut_member(outer, m))
      return {false, std::nullopt, WitnessEvidence{"generated", m, std::nullopt, outer, {}}};
  }
  return {true, SampledEvidence{trials, dir_seed}, std::nullopt};
}

}  // namespace

std::string_view set_relation_name(SetRelation r) {
  switch (r) {
    case SetRelation::Equal: return "equal";
    case SetRelation::StrictSubset: return "strict_subset";
    case SetRelation::StrictSuperset: return "strict_superset";
    case SetRelation::Incomparable: return "incomparable";
  }
  throw std::logic_error("unknown set relation");
}

CompareResult compare_concept_sets(GeometryId g1, GeometryId g2, std::size_t d, int trials,
                                   std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  CompareResult result;
  result.g1 = g1;
  result.g2 = g2;
  result.ca1_in_ca2 = check_containment(g1, g2, d, trials, seed);
  result.ca2_in_ca1 = check_containment(g2, g1, d, trials, seed);
  if (result.ca1_in_ca2.holds && result.ca2_in_ca1.holds)
    result.relation = SetRelation::Equal;
  else if (result.ca1_in_ca2.holds)
    result.relation = SetRelation::StrictSubset;
  else if (result.ca2_in_ca1.holds)
    result.relation = SetRelation::StrictSuperset;
  else
    result.relation = SetRelation::Incomparable;
  return result;
}

std::string_view leiras2_kind_name(Leiras2Kind k) {
  switch (k) {
    case Leiras2Kind::EquivLClass: return "equiv_lclass";
    case Leiras2Kind::EquivExceptionalTriple: return "equiv_exceptional_triple";
    case Leiras2Kind::Rejected: return "rejected";
  }
  throw std::logic_error("unknown verdict kind");
}

Leiras2Result check_leiras2(GeometryId g, RelationId rel, std::size_t d, int trials,
                            std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  const bool base_supported = g == GeometryId::Eucl || g == GeometryId::Rel ||
                              g == GeometryId::Gal || g == GeometryId::Newt;
  if (g == GeometryId::OAff && rel != RelationId::Delta)
    throw InadmissiblePair("only the delta expansion of oaff is covered");
  if (g != GeometryId::OAff && !base_supported)
    throw InadmissiblePair("expansion base must be eucl, rel, gal, newt, or oaff");
  if (table_expects_in(rel, g))
    throw InadmissiblePair(std::string(relation_name(rel)) + " is already a concept of " +
                           std::string(geometry_name(g)));
  if (g == GeometryId::Gal && rel == RelationId::Rest)
    throw InadmissiblePair("gal expanded by Rest is the Newtonian geometry, not covered");

  const std::uint64_t base_seed =
      mix_seed(seed, {static_cast<std::uint64_t>(g), static_cast<std::uint64_t>(rel), d});
  const auto in_expansion = [&](const AffineMap& m) {
    return affaut_member(g, m) && respects_exact(m, rel);
  };

  // The time/space swap decides between the generic verdict and the d = 2
  // exceptional one: it belongs to the expanded geometry's automorphisms
  // exactly for the three exceptional pairs.
  const AffineMap swap = witness(WitnessName::Swap, d);
  const bool exceptional = in_expansion(swap) && !classify(swap, GroupId::TrivEuclSim).member;

  const auto in_target = [&](const AffineMap& m) {
    if (exceptional)
      return classify(m, GroupId::EuclSim).member && classify(m, GroupId::PoiSim).member;
    return classify(m, GroupId::TrivEuclSim).member;
  };
  const auto target_sample = [&](int i) {
    const std::uint64_t s = mix_seed(base_seed, {0xbeefULL, static_cast<std::uint64_t>(i)});
    AffineMap m = generate(GroupId::TrivEuclSim, d, s);
    if (exceptional && (i & 1) != 0) m = compose_with_swap(m);
    return m;
  };

  Leiras2Result result;
  result.lower = SampledEvidence{trials, base_seed};
  result.upper = SampledEvidence{trials, base_seed};

  for (int i = 0; i < trials; ++i) {
    const AffineMap m = target_sample(i);
    if (!in_expansion(m)) {
      result.kind = Leiras2Kind::Rejected;
      result.reason = "target group member is not an automorphism of the expansion";
      return result;
    }
  }
  for (int i = 0; i < trials; ++i) {
    const AffineMap m = sample_biased_member(g, d, i, mix_seed(base_seed, {0xfeedULL}));
    if (respects_exact(m, rel) && !in_target(m)) {
      result.kind = Leiras2Kind::Rejected;
      result.reason = "expansion automorphism found outside the target group";
      return result;
    }
  }

  if (exceptional) {
    result.kind = Leiras2Kind::EquivExceptionalTriple;
    result.separation =
        WitnessEvidence{"swap", swap, std::nullopt, GeometryId::LClass, {}};
  } else {
    result.kind = Leiras2Kind::EquivLClass;
  }
  return result;
}

namespace {

constexpr GeometryId kTableColumns[] = {GeometryId::Eucl, GeometryId::Rel, GeometryId::Gal,
                                        GeometryId::Newt, GeometryId::LClass};
constexpr RelationId kTableRows[] = {RelationId::CongE,  RelationId::CongMu,
                                     RelationId::Lambda, RelationId::CongS,
                                     RelationId::S,      RelationId::Rest,
                                     RelationId::Delta,  RelationId::Bw};

DimensionReport build_dimension_report(std::size_t d, int trials, std::uint64_t seed) {
  DimensionReport report;
  report.d = d;
  report.trials = trials;
  report.seed = seed;

  for (RelationId rel : kTableRows)
    for (GeometryId g : kTableColumns)
      report.cells.push_back({rel, g, concept_in_geometry(rel, g, d, trials, seed)});

  for (std::size_t i = 0; i < std::size(kAllGeometries); ++i)
    for (std::size_t j = i + 1; j < std::size(kAllGeometries); ++j)
      report.comparisons.push_back(
          compare_concept_sets(kAllGeometries[i], kAllGeometries[j], d, trials, seed));

  // Equivalence classes and their first-in-enum-order representatives.
  std::map<GeometryId, GeometryId> rep;
  for (GeometryId g : kAllGeometries) rep[g] = g;
  for (const CompareResult& cmp : report.comparisons) {
    if (cmp.relation != SetRelation::Equal) continue;
    report.equivalences.push_back(EquivalenceClaim{cmp.g1, cmp.g2, *cmp.ca1_in_ca2.support,
                                                   *cmp.ca2_in_ca1.support});
    rep[cmp.g2] = std::min(rep[cmp.g2], rep[cmp.g1]);
  }

  const auto find_compare = [&](GeometryId a, GeometryId b) -> const CompareResult& {
    for (const CompareResult& cmp : report.comparisons)
      if ((cmp.g1 == a && cmp.g2 == b) || (cmp.g1 == b && cmp.g2 == a)) return cmp;
    throw std::logic_error("comparison missing");
  };
  const auto strictly_below = [&](GeometryId a, GeometryId b) {
    const CompareResult& cmp = find_compare(a, b);
    return cmp.g1 == a ? cmp.relation == SetRelation::StrictSubset
                       : cmp.relation == SetRelation::StrictSuperset;
  };

  std::vector<GeometryId> reps;
  for (GeometryId g : kAllGeometries)
    if (rep[g] == g) reps.push_back(g);

  // Cover edges of the strict inclusion order (transitive reduction).
  for (GeometryId from : reps) {
    for (GeometryId to : reps) {
      if (from == to || !strictly_below(from, to)) continue;
      bool covered = false;
      for (GeometryId mid : reps)
        if (mid != from && mid != to && strictly_below(from, mid) && strictly_below(mid, to))
          covered = true;
      if (covered) continue;
      const CompareResult& cmp = find_compare(from, to);
      const ContainmentEvidence& containment = cmp.g1 == from ? cmp.ca1_in_ca2 : cmp.ca2_in_ca1;
      const ContainmentEvidence& strictness = cmp.g1 == from ? cmp.ca2_in_ca1 : cmp.ca1_in_ca2;
      report.edges.push_back(
          HasseEdge{from, to, *containment.support, *strictness.refutation});
    }
  }
  return report;
}

}  // namespace

LatticeReport build_report(const std::vector<std::size_t>& dims, int trials,
                           std::uint64_t seed) {
  LatticeReport report;
  report.trials = trials;
  report.seed = seed;
  for (std::size_t d : dims) {
    if (d < 2) throw DimensionMismatch("lattice reports need dimension >= 2");
    report.dims.push_back(build_dimension_report(d, trials, mix_seed(seed, {d})));
  }
  return report;
}

std::string emit_dot(const LatticeReport& report) {
  // Merge nodes along proven equivalences; all dimensions must agree.
  std::map<GeometryId, GeometryId> rep;
  for (GeometryId g : kAllGeometries) rep[g] = g;
  std::vector<std::pair<GeometryId, GeometryId>> first_edges;
  for (std::size_t i = 0; i < report.dims.size(); ++i) {
    const DimensionReport& dim = report.dims[i];
    std::vector<std::pair<GeometryId, GeometryId>> edges;
    for (const HasseEdge& e : dim.edges) edges.emplace_back(e.from, e.to);
    std::sort(edges.begin(), edges.end());
    if (i == 0)
      first_edges = edges;
    else if (edges != first_edges)
      throw FieldError("hasse structure differs between dimensions");
    for (const EquivalenceClaim& eq : dim.equivalences)
      rep[std::max(eq.a, eq.b)] = std::min(eq.a, eq.b);
  }

  std::ostringstream out;
  out << "digraph concept_lattice {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=box];\n";
  for (GeometryId g : kAllGeometries) {
    if (rep[g] != g) continue;
    std::string label(geometry_label(g));
    for (GeometryId other : kAllGeometries)
      if (other != g && rep[other] == g) label += " = " + std::string(geometry_label(other));
    out << "  " << geometry_label(g) << " [label=\"" << label << "\"];\n";
  }
  for (const auto& [from, to] : first_edges)
    out << "  " << geometry_label(rep[from]) << " -> " << geometry_label(rep[to]) << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace geomlat
