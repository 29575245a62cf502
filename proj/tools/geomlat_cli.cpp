// geomlat - classify affine transformations against the five similarity
// groups and rebuild the definability lattice of the classical spacetime
// geometries.
//
// Exit codes: 0 success; 1 a sampled check contradicted an expected lattice
// fact (treat as an alarm, never expected to fire); 2 usage or parse error;
// 3 bad input (singular matrix, bad dimension); 4 inadmissible query.

#include "geomlat/json_io.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <string>

namespace {

using namespace geomlat;

constexpr int kExitOk = 0;
constexpr int kExitContradiction = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBadInput = 3;
constexpr int kExitInadmissible = 4;

std::uint64_t parse_field_mode(const std::string& mode) {
  if (mode == "rational") return 0;
  constexpr std::string_view prefix = "quadext:";
  if (mode.rfind(prefix, 0) == 0) {
    const std::string index = mode.substr(prefix.size());
    try {
      const unsigned long long k = std::stoull(index);
      if (k >= 2 && is_squarefree(k)) return k;
    } catch (const std::exception&) {
    }
  }
  throw ParseError("field mode must be 'rational' or 'quadext:K' with square-free K >= 2");
}

std::string_view relation_symbol(RelationId rel) {
  switch (rel) {
    case RelationId::Bw: return "Bw";
    case RelationId::S: return "S";
    case RelationId::Rest: return "Rest";
    case RelationId::Lambda: return "λ";
    case RelationId::CongE: return "≡";
    case RelationId::CongMu: return "≡μ";
    case RelationId::CongS: return "≡S";
    case RelationId::Delta: return "δ";
  }
  return "?";
}

int cmd_classify(const std::string& in_path, std::uint64_t extension) {
  std::ifstream in(in_path);
  if (!in) {
    std::cerr << "cannot open " << in_path << "\n";
    return kExitBadInput;
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "JSON parse error: " << e.what() << "\n";
    return kExitUsage;
  }
  const AffineMap map = affine_from_json(j, extension);
  std::cout << classification_json(map).dump(2) << "\n";
  return kExitOk;
}

void print_human_table(const DimensionReport& report) {
  constexpr GeometryId columns[] = {GeometryId::Eucl, GeometryId::Rel, GeometryId::Gal,
                                    GeometryId::Newt, GeometryId::LClass};
  constexpr RelationId rows[] = {RelationId::CongE, RelationId::CongMu, RelationId::Lambda,
                                 RelationId::CongS, RelationId::S,      RelationId::Rest,
                                 RelationId::Delta, RelationId::Bw};
  const auto cell = [&](RelationId rel, GeometryId g) -> const TableCell& {
    for (const TableCell& c : report.cells)
      if (c.relation == rel && c.geometry == g) return c;
    throw std::logic_error("cell missing");
  };
  std::cout << "concept-location table (d=" << report.d << ", trials=" << report.trials
            << ", seed=" << report.seed << ")\n";
  std::cout << "        ";
  for (GeometryId g : columns) {
    std::string label(geometry_label(g));
    label.resize(8, ' ');
    std::cout << label;
  }
  std::cout << "\n";
  for (RelationId rel : rows) {
    std::string label(relation_symbol(rel));
    // pad by displayed width, not byte count
    std::size_t width = 0;
    for (char c : label)
      if ((c & 0xC0) != 0x80) ++width;
    label += std::string(8 > width ? 8 - width : 1, ' ');
    std::cout << label;
    for (GeometryId g : columns) {
      const bool in = cell(rel, g).verdict.verdict == CellVerdict::In;
      std::cout << (in ? "∈       " : "∉       ");
    }
    std::cout << "\n";
  }
}

bool report_matches_expectations(const LatticeReport& report) {
  bool ok = true;
  for (const DimensionReport& dim : report.dims) {
    for (const TableCell& cell : dim.cells) {
      const bool expected = table_expects_in(cell.relation, cell.geometry);
      const bool got = cell.verdict.verdict == CellVerdict::In;
      if (expected != got) {
        std::cerr << "ALARM: cell (" << relation_name(cell.relation) << ", "
                  << geometry_name(cell.geometry) << ") at d=" << dim.d
                  << " contradicts the expected table\n";
        ok = false;
      }
    }
  }
  return ok;
}

int cmd_table(std::size_t d, int trials, std::uint64_t seed, const std::string& json_path) {
  const LatticeReport report = build_report({d}, trials, seed);
  print_human_table(report.dims.front());
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) {
      std::cerr << "cannot write " << json_path << "\n";
      return kExitBadInput;
    }
    out << to_json(report).dump(2) << "\n";
  }
  return report_matches_expectations(report) ? kExitOk : kExitContradiction;
}

int cmd_hasse(std::size_t d, int trials, std::uint64_t seed, const std::string& out_path) {
  const LatticeReport report = build_report({d}, trials, seed);
  const std::string dot = emit_dot(report);
  if (out_path.empty()) {
    std::cout << dot;
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "cannot write " << out_path << "\n";
      return kExitBadInput;
    }
    out << dot;
  }
  return report_matches_expectations(report) ? kExitOk : kExitContradiction;
}

int cmd_leiras2(const std::string& geometry, const std::string& relation, std::size_t d,
                int trials, std::uint64_t seed) {
  const GeometryId g = geometry_from_name(geometry);
  const RelationId rel = relation_from_name(relation);
  const Leiras2Result result = check_leiras2(g, rel, d, trials, seed);
  std::cout << to_json(result).dump(2) << "\n";
  return result.kind == Leiras2Kind::Rejected ? kExitContradiction : kExitOk;
}

int cmd_witness(const std::string& name, std::size_t d) {
  const AffineMap map = witness(witness_from_name(name), d);
  std::cout << to_json(map).dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact similarity-group classification and the definability lattice "
               "of classical spacetime geometries"};
  app.require_subcommand(1);

  std::string in_path, json_path, out_path, geometry, relation, name;
  std::string field_mode = "rational";
  std::size_t d = 2;
  int trials = 1000;
  std::uint64_t seed = 0;

  CLI::App* classify_cmd = app.add_subcommand("classify", "classify an affine map (JSON file)");
  classify_cmd->add_option("--in", in_path, "affine map JSON file")->required();
  classify_cmd->add_option("--field", field_mode, "rational | quadext:K");

  CLI::App* table_cmd = app.add_subcommand("table", "rebuild the concept-location table");
  table_cmd->add_option("--dim", d, "dimension (>= 2)")->required();
  table_cmd->add_option("--trials", trials, "samples per verdict");
  table_cmd->add_option("--seed", seed, "RNG seed");
  table_cmd->add_option("--json", json_path, "also write the full report JSON here");

  CLI::App* hasse_cmd = app.add_subcommand("hasse", "emit the Hasse diagram as DOT");
  hasse_cmd->add_option("--dim", d, "dimension (>= 2)")->required();
  hasse_cmd->add_option("--trials", trials, "samples per verdict");
  hasse_cmd->add_option("--seed", seed, "RNG seed");
  hasse_cmd->add_option("--out", out_path, "DOT output file (stdout when omitted)");

  CLI::App* leiras2_cmd =
      app.add_subcommand("leiras2", "decide where a one-concept expansion lands");
  leiras2_cmd->add_option("--geometry", geometry, "base geometry name")->required();
  leiras2_cmd->add_option("--relation", relation, "added relation name")->required();
  leiras2_cmd->add_option("--dim", d, "dimension (>= 2)")->required();
  leiras2_cmd->add_option("--trials", trials, "samples per direction");
  leiras2_cmd->add_option("--seed", seed, "RNG seed");

  CLI::App* witness_cmd = app.add_subcommand("witness", "print a named witness map");
  witness_cmd->add_option("--name", name, "E | P | N | G | swap")->required();
  witness_cmd->add_option("--dim", d, "dimension (>= 2)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*classify_cmd) return cmd_classify(in_path, parse_field_mode(field_mode));
    if (*table_cmd) return cmd_table(d, trials, seed, json_path);
    if (*hasse_cmd) return cmd_hasse(d, trials, seed, out_path);
    if (*leiras2_cmd) return cmd_leiras2(geometry, relation, d, trials, seed);
    if (*witness_cmd) return cmd_witness(name, d);
  } catch (const InadmissiblePair& e) {
    std::cerr << "inadmissible: " << e.what() << "\n";
    return kExitInadmissible;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SingularMatrix& e) {
    std::cerr << "bad input: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const FieldError& e) {
    std::cerr << "bad input: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
