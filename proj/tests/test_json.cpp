#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "geomlat/json_io.hpp"
#include "geomlat/sampling.hpp"

using namespace geomlat;
using nlohmann::json;

TEST_CASE("affine map round trip") {
  sampling::Rng rng(64);
  for (int i = 0; i < 300; ++i) {
    const std::size_t d = 2 + i % 3;
    const AffineMap m = sampling::random_affine_bijection(rng, d, 6);
    REQUIRE(affine_from_json(to_json(m)) == m);
  }
}

TEST_CASE("affine map json shape") {
  const json j = to_json(witness(WitnessName::E, 2));
  CHECK(j.at("d") == 2);
  CHECK(j.at("linear").at(0).at(0) == "3/5");
  CHECK(j.at("linear").at(0).at(1) == "4/5");
  CHECK(j.at("linear").at(1).at(1) == "-3/5");
  CHECK(j.at("translation").at(0) == "0");
}

TEST_CASE("quadratic extension mode") {
  const json j = json::parse(R"({
    "d": 2,
    "linear": [["1", "1"], ["1", "-1"]],
    "translation": ["0", "0"]
  })");
  const AffineMap m = affine_from_json(j, 2);
  CHECK(m.linear_part().at(0, 0).extension() == 2);
  const auto verdict = classify(m, GroupId::EuclSim);
  CHECK(*verdict.square_factor == FieldElement::rational(BigRational(2), 2));

  const json surd = json::parse(R"({
    "d": 2,
    "linear": [["1√2", "0"], ["0", "1√2"]],
    "translation": ["0", "0"]
  })");
  const AffineMap scaled = affine_from_json(surd);
  CHECK(*classify(scaled, GroupId::EuclSim).square_factor == FieldElement(2));
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(affine_from_json(json::parse("[1,2]")), ParseError);
  CHECK_THROWS_AS(affine_from_json(json::parse(R"({"d":2,"linear":[["1"]],"translation":["0","0"]})")),
                  ParseError);
  CHECK_THROWS_AS(affine_from_json(json::parse(
                      R"({"d":2,"linear":[["1","x"],["0","1"]],"translation":["0","0"]})")),
                  ParseError);
  CHECK_THROWS_AS(affine_from_json(json::parse(
                      R"({"d":2,"linear":[["1","0"],["2","0"]],"translation":["0","0"]})")),
                  SingularMatrix);
  CHECK_THROWS_AS(affine_from_json(json::parse(
                      R"({"d":1,"linear":[["1"]],"translation":["0"]})")),
                  ParseError);
}

TEST_CASE("classification json") {
  const json j = classification_json(witness(WitnessName::E, 2));
  CHECK(j.at("eucl_sim").at("member") == true);
  CHECK(j.at("eucl_sim").at("a") == "1");
  CHECK(j.at("poi_sim").at("member") == false);
  CHECK(j.at("respects").at("S") == false);
  CHECK(j.at("respects").at("Bw") == true);
  CHECK(j.at("respects").at("cong_e") == true);

  const json id = classification_json(AffineMap::identity(3));
  for (GroupId g : kAllGroups) CHECK(id.at(std::string(group_name(g))).at("member") == true);
  for (RelationId rel : kAllRelations)
    CHECK(id.at("respects").at(std::string(relation_name(rel))) == true);

  const json n = classification_json(witness(WitnessName::N, 2));
  CHECK(n.at("triv_gal_sim").at("member") == true);
  CHECK(n.at("triv_gal_sim").at("a") == "1");
  CHECK(n.at("triv_gal_sim").at("b") == "2");
}

TEST_CASE("report serialization carries evidence") {
  const LatticeReport report = build_report({2}, 40, 11);
  const json j = to_json(report);
  CHECK(j.at("seed") == 11);
  const json& dim = j.at("dimensions").at(0);
  CHECK(dim.at("d") == 2);
  CHECK(dim.at("cells").size() == 40);  // 8 relations x 5 table columns
  bool saw_witness = false, saw_sampled = false;
  for (const json& cell : dim.at("cells")) {
    const json& ev = cell.at("evidence");
    if (ev.at("kind") == "witness") {
      saw_witness = true;
      CHECK(ev.contains("map"));
      CHECK(ev.contains("violated_relation"));
    } else {
      saw_sampled = true;
      CHECK(ev.contains("seed"));
      CHECK(ev.at("trials") == 40);
    }
  }
  CHECK(saw_witness);
  CHECK(saw_sampled);
  CHECK(dim.at("edges").size() == 7);
  CHECK(dim.at("equivalences").size() == 1);
  // byte-identical serialization for identical seeds
  CHECK(to_json(build_report({2}, 40, 11)).dump(2) == j.dump(2));
}
