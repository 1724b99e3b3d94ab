#include "woideal/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "woideal/census.hpp"
#include "woideal/classification.hpp"
#include "woideal/errors.hpp"
#include "woideal/ideals.hpp"
#include "woideal/io.hpp"
#include "woideal/oracle.hpp"

namespace woideal::cli {

using nlohmann::ordered_json;

namespace {

struct Options {
  std::string format = "text";
  std::optional<std::size_t> cap;
  std::string file;
  bool force = false;
  std::optional<double> budget;
  std::string field = "both";
  bool no_verify = false;

  std::size_t min_n = 1;
  std::size_t max_n = 5;
  std::string weights = "1,2";
  std::string mode = "exhaustive";
  std::optional<std::uint64_t> seed;
  std::size_t samples = 16;
  std::size_t random_graphs = 8;
  std::size_t threads = 0;
  std::size_t oracle_cap = kDefaultOracleCap;
  std::string output;
  std::string counterexamples;
};

bool json_format(const Options& o) { return o.format == "json"; }

std::string names(const WeightedOrientedGraph& g, std::span<const VertexId> vs) {
  std::string out = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? "," : "") + g.name(vs[i]);
  return out + "}";
}

std::string names(const WeightedOrientedGraph& g, VertexMask set) {
  const auto vs = members(set);
  return names(g, vs);
}

std::string yes_no(std::optional<bool> b) { return b ? (*b ? "yes" : "no") : "n/a"; }

int analyze(const Options& o, std::ostream& out) {
  const auto doc = load_graph_document(o.file);
  const auto& d = doc.graph;
  const std::size_t cap = o.cap.value_or(kDefaultExactCap);
  const auto g = underlying(d);
  const auto chordality = is_chordal(g);
  const auto simplicial = simplicial_analysis(g);
  const auto partition = simplex_partition(g);
  const auto minimal = minimal_vertex_covers(g, cap);
  const auto strong = strong_vertex_covers(d, cap);

  if (json_format(o)) {
    ordered_json j;
    j["vertices"] = d.vertex_count();
    j["arcs"] = d.arc_count();
    j["chordal"] = chordality.chordal;
    ordered_json order = ordered_json::array(), cycle = ordered_json::array();
    for (VertexId v : chordality.elimination_order) order.push_back(d.name(v));
    for (VertexId v : chordality.induced_cycle) cycle.push_back(d.name(v));
    j["elimination_order"] = chordality.chordal ? order : ordered_json(nullptr);
    j["induced_cycle"] = chordality.chordal ? ordered_json(nullptr) : cycle;
    j["simplicial_vertices"] = vertex_list_json(d, mask_of(simplicial.simplicial_vertices));
    ordered_json simplices = ordered_json::array();
    for (const auto& s : simplicial.simplices) simplices.push_back(vertex_list_json(d, mask_of(s)));
    j["simplices"] = std::move(simplices);
    j["simplicial_graph"] = simplicial.is_simplicial_graph;
    if (partition.partition) {
      ordered_json blocks = ordered_json::array();
      for (const auto& b : partition.partition->blocks) blocks.push_back(vertex_list_json(d, mask_of(b)));
      j["simplex_partition"] = std::move(blocks);
    } else {
      j["simplex_partition"] = nullptr;
      j["partition_witness"] = {{"vertex", d.name(*partition.witness)},
                                {"simplices", partition.witness_simplex_count}};
    }
    ordered_json covers = ordered_json::array();
    for (const auto& c : minimal) covers.push_back(vertex_list_json(d, c.members));
    j["minimal_covers"] = std::move(covers);
    j["minimal_cover_sizes"] = ordered_json::array();
    for (const auto& c : minimal) j["minimal_cover_sizes"].push_back(c.size());
    j["strong_cover_count"] = strong.size();
    j["edge_ideal"] = ideal_json(edge_ideal(d));
    out << j.dump(2) << '\n';
    return kOk;
  }

  out << "vertices: " << d.vertex_count() << ", arcs: " << d.arc_count() << '\n';
  if (chordality.chordal)
    out << "chordal: yes (perfect elimination ordering " << names(d, chordality.elimination_order) << ")\n";
  else
    out << "chordal: no (induced cycle " << names(d, chordality.induced_cycle) << ")\n";
  out << "simplicial vertices: " << names(d, simplicial.simplicial_vertices) << '\n';
  out << "simplices:";
  for (const auto& s : simplicial.simplices) out << ' ' << names(d, s);
  out << "\nsimplicial graph: " << (simplicial.is_simplicial_graph ? "yes" : "no") << '\n';
  if (partition.partition)
    out << "simplex partition: m = " << partition.partition->m() << '\n';
  else
    out << "simplex partition: none (" << d.name(*partition.witness) << " lies in " << partition.witness_simplex_count
        << " simplices)\n";
  out << "minimal vertex covers: " << minimal.size() << ", strong vertex covers: " << strong.size() << '\n';
  out << "edge ideal: " << to_string(edge_ideal(d)) << '\n';
  return kOk;
}

int decompose(const Options& o, std::ostream& out) {
  const auto doc = load_graph_document(o.file);
  const auto& d = doc.graph;
  const auto components = primary_decomposition(d, o.cap.value_or(kDefaultExactCap));
  std::optional<DecompositionCheck> check;
  if (!o.no_verify) check = verify_decomposition(d, components);
  if (json_format(o)) {
    out << decomposition_json(d, components, check).dump(2) << '\n';
  } else {
    out << "I(D) = " << to_string(edge_ideal(d)) << '\n';
    out << components.size() << " strong vertex covers\n";
    for (const auto& c : components) {
      out << "  C = " << names(d, c.cover.cover) << "  L1=" << names(d, c.cover.l1) << " L2=" << names(d, c.cover.l2)
          << " L3=" << names(d, c.cover.l3) << "  Q_C = " << to_string(c.ideal) << '\n';
    }
    if (check) {
      out << "intersection: " << to_string(check->intersection) << '\n';
      out << "intersection verified: " << (check->matches_edge_ideal ? "yes" : "NO") << '\n';
      out << "redundant components: " << check->redundant.size() << '\n';
    }
  }
  if (check && (!check->matches_edge_ideal || !check->redundant.empty())) return kInternal;
  return kOk;
}

int classify_command(const Options& o, std::ostream& out) {
  const auto doc = load_graph_document(o.file);
  const auto& d = doc.graph;
  const auto report = classify(d, o.cap.value_or(kDefaultExactCap));
  if (json_format(o)) {
    out << classification_json(d, report).dump(2) << '\n';
    return kOk;
  }
  out << "applicable: " << (report.applicable ? "yes (" + report.applicable_via + ")" : std::string("no")) << '\n';
  if (report.edgeless) out << "edgeless: yes (zero ideal)\n";
  out << "unmixed: " << (report.unmixed ? "yes" : "no") << '\n';
  if (report.unmixed_detail.embedded_cover)
    out << "  embedded strong cover " << names(d, report.unmixed_detail.embedded_cover->cover) << " with L3 = "
        << names(d, report.unmixed_detail.embedded_cover->l3) << '\n';
  out << "Cohen-Macaulay: " << yes_no(report.cohen_macaulay) << '\n';
  out << "Gorenstein: " << yes_no(report.gorenstein) << '\n';
  out << "height: " << report.height << ", dimension: " << report.dimension << '\n';
  if (report.simplex_partition.partition) out << "m: " << report.simplex_partition.partition->m() << '\n';
  if (report.parameters) {
    out << "system of parameters:";
    for (const auto& h : *report.parameters) out << ' ' << to_string(h, d);
    out << '\n';
  }
  if (!report.applicable) out << "note: run `wo-ideal oracle` for a homological verdict\n";
  return kOk;
}

int oracle_command(const Options& o, std::ostream& out) {
  const auto doc = load_graph_document(o.file);
  OracleOptions options;
  options.cap = o.cap.value_or(kDefaultOracleCap);
  options.force = o.force;
  options.budget_seconds = o.budget;
  if (o.field == "F2")
    options.fields = {Field::F2};
  else if (o.field == "Q")
    options.fields = {Field::Q};
  const auto report = oracle_verify(doc.graph, options);
  if (json_format(o)) {
    out << oracle_json(report).dump(2) << '\n';
  } else {
    out << "polarized variables: " << report.polarized_variables << " (" << report.added_count << " added)\n";
    out << "complex: dimension " << report.complex_dimension << ", " << report.facet_count << " facets, "
        << (report.pure ? "pure" : "not pure") << '\n';
    out << "dim R/I(D): " << report.derived_dimension << '\n';
    for (const auto& v : report.verdicts)
      out << "Cohen-Macaulay over " << to_string(v.field) << ": "
          << (v.timed_out ? std::string("timed out") : yes_no(v.cohen_macaulay)) << '\n';
    if (report.classification)
      out << "classification: Cohen-Macaulay " << yes_no(report.classification->cohen_macaulay) << ", unmixed "
          << (report.classification->unmixed ? "yes" : "no") << '\n';
    out << (report.has_mismatch() ? "MISMATCH between oracle and classification\n" : "consistent\n");
    out << std::fixed << std::setprecision(3) << "elapsed: " << report.elapsed_seconds << " s\n";
  }
  if (report.has_mismatch()) return kInternal;
  if (report.timed_out()) return kCapacity;
  return kOk;
}

std::vector<std::uint64_t> parse_weights(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const auto w = std::stoull(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(w);
    } catch (const std::exception&) {
      throw InvalidInput("bad weight '" + item + "' in --weights");
    }
  }
  return out;
}

int census_command(const Options& o, std::ostream& out) {
  CensusConfig config;
  config.min_n = o.min_n;
  config.max_n = o.max_n;
  config.weight_set = parse_weights(o.weights);
  config.mode = o.mode == "sampled" ? OrientationMode::sampled : OrientationMode::exhaustive;
  config.seed = o.seed;
  config.samples = o.samples;
  config.random_graphs = o.random_graphs;
  config.instance_budget_seconds = o.budget;
  config.exact_cap = o.cap.value_or(kDefaultExactCap);
  config.oracle_cap = o.oracle_cap;
  config.verify_decomposition = !o.no_verify;
  config.threads = o.threads;

  const auto report = run_census(config);
  const auto j = census_json(report);
  if (!o.output.empty()) {
    std::ofstream file(o.output);
    if (!file) throw InvalidInput("cannot write " + o.output);
    file << j.dump(2) << '\n';
  }
  if (!o.counterexamples.empty()) {
    std::ofstream file(o.counterexamples);
    if (!file) throw InvalidInput("cannot write " + o.counterexamples);
    for (const auto& m : report.mismatches) file << counterexample_json(m).dump() << '\n';
  }
  if (json_format(o)) {
    if (o.output.empty()) out << j.dump(2) << '\n';
  } else {
    const auto& c = report.counts;
    out << "instances: " << c.total << " (applicable " << c.applicable << ", unmixed " << c.unmixed << ", CM "
        << c.cohen_macaulay << ", Gorenstein " << c.gorenstein << ")\n";
    out << "oracle checked: " << c.oracle_checked << " (CM " << c.oracle_cohen_macaulay << ", pure " << c.oracle_pure
        << "), skipped by cap: " << c.oracle_skipped_capacity << ", timeouts: " << c.oracle_timeouts << '\n';
    out << "decompositions verified: " << c.decompositions_verified << '\n';
    out << "mismatches: " << c.mismatches << '\n';
  }
  return report.mismatches.empty() ? kOk : kInternal;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cohen-Macaulay and Gorenstein tests for edge ideals of weighted oriented graphs", "wo-ideal"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--cap", o.cap, "Exact-mode vertex cap (oracle: polarized variable cap)");
  };
  auto add_file = [&](CLI::App* sub) { sub->add_option("file", o.file, "Graph JSON file")->required(); };

  auto* analyze_cmd = app.add_subcommand("analyze", "Graph facts: chordality, simplices, covers");
  auto* decompose_cmd = app.add_subcommand("decompose", "Strong covers and the irreducible decomposition");
  auto* classify_cmd = app.add_subcommand("classify", "Unmixed / Cohen-Macaulay / Gorenstein verdicts");
  auto* oracle_cmd = app.add_subcommand("oracle", "Polarization + Reisner criterion over F2 and Q");
  auto* census_cmd = app.add_subcommand("census", "Cross-check over small connected chordal graphs");
  for (auto* sub : {analyze_cmd, decompose_cmd, classify_cmd, oracle_cmd}) {
    add_common(sub);
    add_file(sub);
  }
  add_common(census_cmd);
  decompose_cmd->add_flag("--no-verify", o.no_verify, "Skip the intersection check");
  oracle_cmd->add_flag("--force", o.force, "Lift the oracle cap");
  oracle_cmd->add_option("--budget", o.budget, "Wall-clock budget in seconds");
  oracle_cmd->add_option("--field", o.field, "F2, Q or both")->check(CLI::IsMember({"F2", "Q", "both"}));
  census_cmd->add_option("--min-n", o.min_n, "Smallest vertex count");
  census_cmd->add_option("--max-n", o.max_n, "Largest vertex count");
  census_cmd->add_option("--weights", o.weights, "Comma-separated weight set");
  census_cmd->add_option("--mode", o.mode, "Orientation mode")->check(CLI::IsMember({"exhaustive", "sampled"}));
  census_cmd->add_option("--seed", o.seed, "RNG seed (sampled mode, n > 6)");
  census_cmd->add_option("--samples", o.samples, "Sampled instances per graph");
  census_cmd->add_option("--random-graphs", o.random_graphs, "Random chordal graphs per n above 6");
  census_cmd->add_option("--budget", o.budget, "Per-instance oracle budget in seconds");
  census_cmd->add_option("--threads", o.threads, "Worker threads (0 = all cores)");
  census_cmd->add_option("--oracle-cap", o.oracle_cap, "Polarized variable cap for the oracle");
  census_cmd->add_option("--output", o.output, "Write the JSON report here");
  census_cmd->add_option("--counterexamples", o.counterexamples, "Write mismatches as JSON lines here");
  census_cmd->add_flag("--no-verify", o.no_verify, "Skip decomposition verification");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidInput;
  }

  try {
    if (*analyze_cmd) return analyze(o, out);
    if (*decompose_cmd) return decompose(o, out);
    if (*classify_cmd) return classify_command(o, out);
    if (*oracle_cmd) return oracle_command(o, out);
    if (*census_cmd) return census_command(o, out);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const CapacityError& e) {
    err << "capacity: " << e.what() << '\n';
    return kCapacity;
  } catch (const TimeoutError& e) {
    err << "timeout: " << e.what() << '\n';
    return kCapacity;
  } catch (const InternalError& e) {
    err << "internal invariant violated: " << e.what() << '\n';
    return kInternal;
  }
  return kInvalidInput;
}

}  // namespace woideal::cli
