#include "geomlat/json_io.hpp"

namespace geomlat {

using nlohmann::json;

json to_json(const FieldElement& x) { return to_string(x); }

json to_json(const PointVec& p) {
  json arr = json::array();
  for (std::size_t i = 0; i < p.dim(); ++i) arr.push_back(to_string(p[i]));
  return arr;
}

json to_json(const AffineMap& map) {
  const std::size_t d = map.dim();
  json linear = json::array();
  for (std::size_t row = 0; row < d; ++row) {
    json r = json::array();
    for (std::size_t col = 0; col < d; ++col)
      r.push_back(to_string(map.linear_part().at(row, col)));
    linear.push_back(std::move(r));
  }
  return json{{"d", d}, {"linear", std::move(linear)},
              {"translation", to_json(map.translation_part())}};
}

json to_json(const SimilarityVerdict& verdict) {
  json j{{"member", verdict.member}};
  if (verdict.square_factor) j["a"] = to_string(*verdict.square_factor);
  if (verdict.temporal_factor) j["b"] = to_string(*verdict.temporal_factor);
  return j;
}

json to_json(const WitnessEvidence& ev) {
  json j{{"kind", "witness"}, {"name", ev.name}, {"map", to_json(ev.map)}};
  if (ev.violated_relation) j["violated_relation"] = relation_name(*ev.violated_relation);
  if (ev.outside_group_of) j["outside_group_of"] = geometry_name(*ev.outside_group_of);
  if (!ev.counterexample.empty()) {
    json tuple = json::array();
    for (const PointVec& p : ev.counterexample) tuple.push_back(to_json(p));
    j["counterexample"] = std::move(tuple);
  }
  return j;
}

json to_json(const SampledEvidence& ev) {
  return json{{"kind", "sampled"}, {"trials", ev.trials}, {"seed", ev.seed}};
}

json to_json(const ConceptVerdict& verdict) {
  json j{{"verdict", verdict.verdict == CellVerdict::In ? "in" : "not_in"}};
  if (verdict.witness) j["evidence"] = to_json(*verdict.witness);
  if (verdict.sampled) j["evidence"] = to_json(*verdict.sampled);
  return j;
}

json to_json(const ContainmentEvidence& ev) {
  json j{{"holds", ev.holds}};
  if (ev.support) j["support"] = to_json(*ev.support);
  if (ev.refutation) j["refutation"] = to_json(*ev.refutation);
  return j;
}

json to_json(const CompareResult& result) {
  return json{{"g1", geometry_name(result.g1)},
              {"g2", geometry_name(result.g2)},
              {"relation", set_relation_name(result.relation)},
              {"ca1_in_ca2", to_json(result.ca1_in_ca2)},
              {"ca2_in_ca1", to_json(result.ca2_in_ca1)}};
}

json to_json(const Leiras2Result& result) {
  json j{{"kind", leiras2_kind_name(result.kind)},
         {"lower", to_json(result.lower)},
         {"upper", to_json(result.upper)}};
  if (result.separation) j["separation"] = to_json(*result.separation);
  if (!result.reason.empty()) j["reason"] = result.reason;
  return j;
}

json to_json(const DimensionReport& report) {
  json cells = json::array();
  for (const TableCell& cell : report.cells) {
    json c = to_json(cell.verdict);
    c["relation"] = relation_name(cell.relation);
    c["geometry"] = geometry_name(cell.geometry);
    cells.push_back(std::move(c));
  }
  json comparisons = json::array();
  for (const CompareResult& cmp : report.comparisons) comparisons.push_back(to_json(cmp));
  json edges = json::array();
  for (const HasseEdge& e : report.edges)
    edges.push_back(json{{"from", geometry_name(e.from)},
                         {"to", geometry_name(e.to)},
                         {"containment", to_json(e.containment)},
                         {"strictness", to_json(e.strictness)}});
  json equivalences = json::array();
  for (const EquivalenceClaim& eq : report.equivalences)
    equivalences.push_back(json{{"a", geometry_name(eq.a)},
                                {"b", geometry_name(eq.b)},
                                {"forward", to_json(eq.forward)},
                                {"backward", to_json(eq.backward)}});
  return json{{"d", report.d},           {"trials", report.trials},
              {"seed", report.seed},     {"cells", std::move(cells)},
              {"comparisons", std::move(comparisons)}, {"edges", std::move(edges)},
              {"equivalences", std::move(equivalences)}};
}

json to_json(const LatticeReport& report) {
  json dims = json::array();
  for (const DimensionReport& dim : report.dims) dims.push_back(to_json(dim));
  return json{{"trials", report.trials}, {"seed", report.seed},
              {"dimensions", std::move(dims)}};
}

json classification_json(const AffineMap& map) {
  json j{{"d", map.dim()}};
  for (GroupId g : kAllGroups) j[std::string(group_name(g))] = to_json(classify(map, g));
  json respects;
  for (RelationId rel : kAllRelations)
    respects[std::string(relation_name(rel))] = respects_exact(map, rel);
  j["respects"] = std::move(respects);
  return j;
}

PointVec point_from_json(const json& j, std::uint64_t extension) {
  if (!j.is_array()) throw ParseError("point must be a JSON array of field strings");
  std::vector<FieldElement> coords;
  coords.reserve(j.size());
  for (const auto& c : j) {
    if (!c.is_string()) throw ParseError("point coordinates must be strings");
    coords.push_back(parse_field_element(c.get<std::string>(), extension));
  }
  return PointVec(std::move(coords));
}

AffineMap affine_from_json(const json& j, std::uint64_t extension) {
  if (!j.is_object() || !j.contains("d") || !j.contains("linear") ||
      !j.contains("translation"))
    throw ParseError("affine map needs fields d, linear, translation");
  const auto d = j.at("d").get<std::size_t>();
  if (d < 2) throw ParseError("d must be >= 2");
  const json& rows = j.at("linear");
  if (!rows.is_array() || rows.size() != d)
    throw ParseError("linear must be a d x d row-major array");
  Matrix linear(d);
  for (std::size_t row = 0; row < d; ++row) {
    const json& r = rows.at(row);
    if (!r.is_array() || r.size() != d)
      throw ParseError("linear must be a d x d row-major array");
    for (std::size_t col = 0; col < d; ++col) {
      if (!r.at(col).is_string()) throw ParseError("matrix entries must be strings");
      linear.at(row, col) = parse_field_element(r.at(col).get<std::string>(), extension);
    }
  }
  PointVec translation = point_from_json(j.at("translation"), extension);
  if (translation.dim() != d) throw ParseError("translation length must equal d");
  return AffineMap(std::move(linear), std::move(translation));
}

}  // namespace geomlat
