// isat: construct, verify and search for P_n-induced-saturated graphs.
//
// Exit codes: 0 success / SATURATED, 1 property fails, 2 usage or format error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "isat/gf2k.hpp"
#include "isat/graph.hpp"
#include "isat/graph_io.hpp"
#include "isat/saturation.hpp"
#include "isat/search.hpp"
#include "isat/symmetry.hpp"

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kFails = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_text(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// First non-blank line of the input.
isat::Graph read_graph(const std::string& path) {
  std::istringstream lines(read_text(path));
  for (std::string line; std::getline(lines, line);) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) return isat::decode_graph6(line);
  }
  throw isat::Graph6Error("graph6: no graph in input");
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

std::uint32_t parse_mask(const std::string& text, int base) {
  std::size_t used = 0;
  unsigned long value = 0;
  try {
    value = std::stoul(text, &used, base);
  } catch (const std::exception&) {
    throw UsageError("invalid number '" + text + "'");
  }
  if (used != text.size() || value > 0xffffffffUL) throw UsageError("invalid number '" + text + "'");
  return static_cast<std::uint32_t>(value);
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

struct FieldSpec {
  int bits = 0;
  std::string modulus;
  std::string multipliers = "cubes";

  isat::BinaryField field() const {
    if (bits == 0 || modulus.empty()) throw UsageError("--field-bits and --modulus are required");
    try {
      return isat::BinaryField(bits, parse_mask(modulus, 16));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }

  // "cubes" or an explicit comma-separated list of element masks.
  std::vector<isat::FieldElement> elements(const isat::BinaryField& f, const std::string& spec) const {
    if (spec == "cubes") return f.nonzero_cubes();
    std::vector<isat::FieldElement> out;
    for (const auto& item : split_commas(spec)) {
      const isat::FieldElement e{parse_mask(item, 0)};
      if (!f.contains(e)) throw UsageError("mask " + item + " is outside the field");
      out.push_back(e);
    }
    return out;
  }
};

void add_field_options(CLI::App* cmd, FieldSpec& spec) {
  cmd->add_option("--field-bits", spec.bits, "Field bit-width k")->check(CLI::Range(1, 16));
  cmd->add_option("--modulus", spec.modulus, "Modulus polynomial as a hex mask, e.g. 0x13");
}

int cmd_construct(const FieldSpec& spec, const std::string& connection, const std::string& format,
                  const std::string& output) {
  const auto field = spec.field();
  const auto conn = spec.elements(field, connection);
  isat::Graph g;
  try {
    g = isat::cayley_graph(field, conn);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  if (format == "json") {
    write_output(output, isat::adjacency_json(g).dump(2) + "\n");
  } else {
    write_output(output, isat::encode_graph6(g) + "\n");
  }
  return kOk;
}

std::vector<isat::Permutation> orbit_generators(const FieldSpec& spec, const std::string& group) {
  const auto field = spec.field();
  if (group == "translations") return isat::translation_generators(field.bits());
  return isat::affine_group(field, spec.elements(field, spec.multipliers));
}

int cmd_verify(const std::string& input, int n, const std::string& orbits, const std::string& group,
               const FieldSpec& spec, int jobs, const std::string& output) {
  const isat::Graph g = read_graph(input);
  isat::VerifyOptions options;
  options.jobs = jobs;
  if (orbits == "on") {
    options.generators = orbit_generators(spec, group);
    for (const auto& gen : *options.generators) {
      if (static_cast<int>(gen.size()) != g.vertex_count() || !isat::is_automorphism(g, gen)) {
        std::cerr << "error: orbit generator is not an automorphism of the input graph\n";
        return kUsage;
      }
    }
  }
  const auto result = isat::verify_induced_saturated(g, n, options);
  std::cerr << isat::to_string(result.verdict.status) << " (additions checked "
            << result.stats.additions_checked << ", removals checked " << result.stats.removals_checked
            << ")\n";
  if (result.certificate) {
    write_output(output, isat::certificate_to_json(*result.certificate).dump(2) + "\n");
    return kOk;
  }
  write_output(output, isat::verdict_to_json(result).dump(2) + "\n");
  return kFails;
}

int cmd_witness(const std::string& input, int n, const std::string& pair_text, const std::string& output) {
  const isat::Graph g = read_graph(input);
  const auto parts = split_commas(pair_text);
  if (parts.size() != 2) throw UsageError("--pair expects u,v");
  const int u = static_cast<int>(parse_mask(parts[0], 10));
  const int v = static_cast<int>(parse_mask(parts[1], 10));
  if (u == v || u >= g.vertex_count() || v >= g.vertex_count()) throw UsageError("invalid vertex pair");
  const auto e = isat::VertexPair::of(u, v);

  const bool free = isat::is_path_free(g, n).free;
  const auto witness = free ? isat::toggled_pair_witness(g, e, n)
                            : isat::find_induced_path(isat::toggle_edge(g, e), n);
  json doc = {{"pair", {e.u, e.v}}, {"was_edge", g.has_edge(e)}, {"n", n}, {"graph_is_path_free", free}};
  doc["path"] = witness ? json(witness->vertices) : json(nullptr);
  write_output(output, doc.dump(2) + "\n");
  return witness ? kOk : kFails;
}

int cmd_orbits(const std::string& input, bool affine, const FieldSpec& spec, const std::string& output) {
  const isat::Graph g = read_graph(input);
  std::vector<isat::Permutation> gens;
  if (affine) {
    const auto field = spec.field();
    if (static_cast<int>(field.order()) != g.vertex_count()) {
      throw UsageError("graph vertex count does not match the field order");
    }
    gens = isat::affine_group(field, spec.elements(field, spec.multipliers));
    for (const auto& gen : gens) {
      if (!isat::is_automorphism(g, gen)) {
        std::cerr << "error: affine map is not an automorphism of the input graph\n";
        return kUsage;
      }
    }
  } else {
    gens.push_back(isat::identity_permutation(g.vertex_count()));
  }
  auto dump = [](const std::vector<isat::PairOrbit>& orbits) {
    json arr = json::array();
    for (const auto& orbit : orbits) arr.push_back(isat::orbit_json(orbit));
    return arr;
  };
  const auto edges = g.edges();
  const auto non_edges = g.non_edges();
  const json doc = {{"edge_orbits", dump(isat::pair_orbits(g, gens, edges))},
                    {"non_edge_orbits", dump(isat::pair_orbits(g, gens, non_edges))},
                    {"group_generators", gens.size()}};
  write_output(output, doc.dump(2) + "\n");
  return kOk;
}

int cmd_check_cert(const std::string& cert_path, const std::string& graph_path) {
  json doc;
  try {
    doc = json::parse(read_text(cert_path));
  } catch (const json::parse_error& e) {
    throw UsageError(std::string("certificate is not valid JSON: ") + e.what());
  }
  const auto cert = isat::certificate_from_json(doc);
  const isat::Graph g = graph_path.empty() ? isat::decode_graph6(cert.graph) : read_graph(graph_path);
  const bool ok = isat::check_certificate(cert, g);
  std::cout << (ok ? "VALID" : "INVALID") << "\n";
  return ok ? kOk : kFails;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Induced-saturation toolkit for paths"};
  app.require_subcommand(1);

  FieldSpec field_spec;
  std::string input = "-";
  std::string output;
  int n = 0;
  int jobs = 1;

  auto* construct = app.add_subcommand("construct", "Build a Cayley graph over GF(2^k)");
  add_field_options(construct, field_spec);
  std::string connection = "cubes";
  std::string format = "graph6";
  construct->add_option("--connection", connection, "'cubes' or comma-separated element masks");
  construct->add_option("--format", format)->check(CLI::IsMember({"graph6", "json"}));
  construct->add_option("-o,--output", output);

  auto* verify = app.add_subcommand("verify", "Decide P_n-induced saturation and emit a certificate");
  std::string orbits = "off";
  std::string group = "affine";
  verify->add_option("input", input, "graph6 file or - for stdin");
  verify->add_option("-n,--path-length", n)->required()->check(CLI::Range(2, 64));
  verify->add_option("--orbits", orbits)->check(CLI::IsMember({"on", "off"}));
  verify->add_option("--group", group, "Orbit group: affine or translations")
      ->check(CLI::IsMember({"affine", "translations"}));
  add_field_options(verify, field_spec);
  verify->add_option("--multipliers", field_spec.multipliers, "'cubes' or element masks");
  verify->add_option("-j,--jobs", jobs)->check(CLI::PositiveNumber);
  verify->add_option("-o,--output", output);

  auto* witness = app.add_subcommand("witness", "Induced path created by toggling one pair");
  std::string pair_text;
  witness->add_option("input", input);
  witness->add_option("-n,--path-length", n)->required()->check(CLI::Range(2, 64));
  witness->add_option("--pair", pair_text, "u,v")->required();
  witness->add_option("-o,--output", output);

  auto* orbit_cmd = app.add_subcommand("orbits", "Edge and non-edge orbits under an affine group");
  bool affine = false;
  orbit_cmd->add_option("input", input);
  orbit_cmd->add_flag("--affine", affine, "Use x -> a*x + b over the given field");
  add_field_options(orbit_cmd, field_spec);
  orbit_cmd->add_option("--multipliers", field_spec.multipliers, "'cubes' or element masks");
  orbit_cmd->add_option("-o,--output", output);

  auto* search = app.add_subcommand("search", "Exhaustive search over a candidate family");
  std::string family = "cayley";
  int vertices = 0;
  isat::SearchLimits limits;
  std::string hits_file;
  search->add_option("--family", family)->check(CLI::IsMember({"cayley", "circulant", "all"}));
  add_field_options(search, field_spec);
  search->add_option("-m,--vertices", vertices);
  search->add_option("-n,--path-length", n)->required()->check(CLI::Range(2, 64));
  search->add_option("-j,--jobs", jobs)->check(CLI::PositiveNumber);
  search->add_option("--max-candidates", limits.max_candidates);
  search->add_option("--time-budget", limits.time_budget_seconds, "Seconds");
  search->add_option("--sample", limits.sample, "Examine this many seeded random candidates");
  search->add_option("--seed", limits.seed);
  search->add_flag("--allow-large", limits.allow_large, "Permit ALL_GRAPHS on 8 vertices");
  search->add_option("-o,--output", output);
  search->add_option("--hits-file", hits_file, "One graph6 line per hit");

  auto* check = app.add_subcommand("check-cert", "Re-validate a certificate");
  std::string cert_path;
  std::string graph_path;
  check->add_option("certificate", cert_path)->required();
  check->add_option("--graph", graph_path, "graph6 file; defaults to the graph named in the certificate");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*construct) return cmd_construct(field_spec, connection, format, output);
    if (*verify) return cmd_verify(input, n, orbits, group, field_spec, jobs, output);
    if (*witness) return cmd_witness(input, n, pair_text, output);
    if (*orbit_cmd) return cmd_orbits(input, affine, field_spec, output);
    if (*check) return cmd_check_cert(cert_path, graph_path);
    if (*search) {
      isat::SearchSpace space;
      const auto fam = isat::parse_family(family);
      if (fam == isat::Family::cayley_z2k) {
        space = isat::SearchSpace::cayley(field_spec.bits, parse_mask(field_spec.modulus, 16), n);
      } else if (fam == isat::Family::circulant) {
        space = isat::SearchSpace::circulant(vertices, n);
      } else {
        space = isat::SearchSpace::all_graphs(vertices, n);
      }
      space.limits = limits;
      const auto report = isat::run_search(space, jobs);
      std::cerr << report.candidates_examined << "/" << report.candidates_total << " candidates, "
                << report.hits.size() << " hits\n";
      write_output(output, isat::report_json(report).dump(2) + "\n");
      if (!hits_file.empty()) write_output(hits_file, isat::hits_graph6(report));
      return kOk;
    }
  } catch (const std::exception& e) {
    // Malformed input, bad flags, reducible moduli and certificate/graph
    // mismatches all land here.
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
