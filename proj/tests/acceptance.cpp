// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "structural.hpp"
#include "woideal/census.hpp"
#include "woideal/classification.hpp"
#include "woideal/ideals.hpp"
#include "woideal/io.hpp"
#include "woideal/oracle.hpp"

using namespace woideal;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Verdict {
  bool pass = true;
  std::ostringstream note;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      note << " [failed: " << what << "]";
    }
  }
};

WeightedOrientedGraph load(const char* file) {
  return load_graph_document(std::string(WOIDEAL_DATA_DIR) + "/" + file).graph;
}

// Counts gathered by walking the census instances directly.
struct CensusTally {
  std::size_t instances = 0;
  std::size_t oracle_cm = 0;
  std::size_t cm_vs_oracle = 0;
  std::size_t purity_vs_unmixed = 0;
  std::size_t cm_not_unmixed = 0;
  std::size_t gorenstein_checked = 0;
  std::size_t gorenstein_violations = 0;
  std::size_t errors = 0;
  double seconds = 0;
};

bool degree_at_most_one(const SimpleGraph& g) {
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) > 1) return false;
  return true;
}

void tally_instance(const WeightedOrientedGraph& d, CensusTally& t) {
  ++t.instances;
  const auto report = classify(d);
  OracleOptions options;
  options.compare_with_classification = false;
  options.whole_complex_homology = false;
  const auto oracle = oracle_verify(d, options);
  const auto f2 = oracle.verdicts.at(0).cohen_macaulay;
  const auto q = oracle.verdicts.at(1).cohen_macaulay;
  if (!f2 || !q || !report.cohen_macaulay || *f2 != *report.cohen_macaulay || *q != *report.cohen_macaulay)
    ++t.cm_vs_oracle;
  if (oracle.pure != report.unmixed) ++t.purity_vs_unmixed;
  const bool oracle_cm = f2.value_or(false) && q.value_or(false);
  t.oracle_cm += oracle_cm;
  if (oracle_cm && !report.unmixed) ++t.cm_not_unmixed;

  const bool union_of_edges = degree_at_most_one(underlying(d));
  const bool gorenstein = report.gorenstein.value_or(false);
  if (gorenstein || union_of_edges) {
    ++t.gorenstein_checked;
    if (gorenstein != union_of_edges || edge_ideal(d).generator_count() != report.height || !oracle_cm)
      ++t.gorenstein_violations;
  }
}

CensusTally walk_census(std::size_t max_n) {
  CensusTally t;
  const auto start = Clock::now();
  for (std::size_t n = 1; n <= max_n; ++n) {
    for (const auto& g : connected_chordal_graphs(n)) {
      const std::vector<std::string> names(g.names().begin(), g.names().end());
      const std::size_t edges = g.edge_count();
      for (std::uint64_t orientation = 0; orientation < (std::uint64_t{1} << edges); ++orientation) {
        std::vector<Arc> arcs;
        std::vector<bool> source(n, true);
        for (std::size_t e = 0; e < edges; ++e) {
          auto [u, v] = g.edges()[e];
          if ((orientation >> e) & 1U) std::swap(u, v);
          arcs.push_back({u, v});
          source[v] = false;
        }
        std::vector<VertexId> free;
        for (VertexId v = 0; v < n; ++v)
          if (!source[v]) free.push_back(v);
        for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << free.size()); ++pick) {
          std::vector<std::uint64_t> weights(n, 1);
          for (std::size_t i = 0; i < free.size(); ++i) weights[free[i]] = (pick >> i) & 1U ? 2 : 1;
          try {
            tally_instance(WeightedOrientedGraph::from_indices(names, weights, arcs), t);
          } catch (const std::exception& e) {
            ++t.errors;
            std::cerr << "census instance failed: " << e.what() << "\n";
          }
        }
      }
    }
  }
  t.seconds = seconds_since(start);
  return t;
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, bool>> results;
  auto report = [&](int id, const std::string& title, Verdict& v, const std::string& summary) {
    std::cout << (v.pass ? "PASS" : "FAIL") << "  criterion " << id << ": " << title << " -- " << summary
              << v.note.str() << std::endl;
    results.emplace_back(title, v.pass);
  };
  auto guarded = [&](int id, const std::string& title, const std::function<std::string(Verdict&)>& body) {
    Verdict v;
    std::string summary;
    try {
      summary = body(v);
    } catch (const std::exception& e) {
      v.require(false, std::string("exception: ") + e.what());
    }
    report(id, title, v, summary);
  };

  guarded(1, "figure1 fixture golden classification", [](Verdict& v) {
    const auto start = Clock::now();
    const auto g = load("figure1.json");
    const auto r = classify(g);
    const double elapsed = seconds_since(start);
    std::vector<std::string> forms;
    for (const auto& h : r.parameters.value_or(std::vector<LinearForm>{})) forms.push_back(to_string(h, g));
    v.require(r.applicable && r.applicable_via == "chordal", "applicable via chordality");
    v.require(r.unmixed, "unmixed");
    v.require(r.cohen_macaulay == true, "Cohen-Macaulay");
    v.require(r.simplex_partition.partition && r.simplex_partition.partition->m() == 3, "m = 3");
    v.require(r.height == 7, "height 7");
    v.require(r.dimension == 3, "dimension 3");
    v.require(forms == std::vector<std::string>{"x1+x2+x3+x4", "x5+x6+x7", "x8+x9+x10"}, "parameters");
    v.require(elapsed < 5.0, "runtime under 5 s");
    std::ostringstream s;
    s << "CM, m=3, height=7, dim=3, parameters {" << forms.size() << " forms} in " << elapsed << " s";
    return s.str();
  });

  guarded(2, "figure1 fixture decomposition identity", [](Verdict& v) {
    const auto start = Clock::now();
    const auto g = load("figure1.json");
    const auto components = primary_decomposition(g);
    const auto check = verify_decomposition(g, components);
    const double elapsed = seconds_since(start);
    v.require(check.intersection == edge_ideal(g), "intersection equals I(D)");
    v.require(check.redundant.empty(), "irredundant");
    v.require(elapsed < 30.0, "runtime under 30 s");
    std::ostringstream s;
    s << components.size() << " components, intersection has " << check.intersection.generator_count()
      << " minimal generators, in " << elapsed << " s";
    return s.str();
  });

  guarded(3, "hand-verified path fixture", [](Verdict& v) {
    const auto g = load("path123.json");
    std::vector<std::string> covers, comps;
    for (const auto& p : strong_vertex_covers(g)) {
      std::string c = "{";
      for (VertexId x : members(p.cover)) c += (c.size() > 1 ? "," : "") + g.name(x);
      covers.push_back(c + "}");
    }
    const auto components = primary_decomposition(g);
    for (const auto& c : components) comps.push_back(to_string(c.ideal));
    const auto check = verify_decomposition(g, components);
    const auto r = classify(g);
    const auto oracle = oracle_verify(g);
    v.require(covers == std::vector<std::string>{"{x2}", "{x1,x3}", "{x2,x3}"}, "strong covers");
    v.require(comps == std::vector<std::string>{"<x2>", "<x1, x3^2>", "<x2^2, x3^2>"}, "components");
    v.require(to_string(check.intersection) == "<x1*x2^2, x2*x3^2>", "intersection");
    v.require(!r.unmixed && r.cohen_macaulay == false, "mixed and not CM");
    v.require(oracle.verdicts.size() == 2 && oracle.verdicts[0].cohen_macaulay == false &&
                  oracle.verdicts[1].cohen_macaulay == false,
              "oracle says not CM over F2 and Q");
    return "covers " + std::to_string(covers.size()) + ", intersection " + to_string(check.intersection) +
           ", oracle not CM over F2 and Q";
  });

  CensusTally tally;
  CensusReport harness;
  bool census_ran = false;
  std::string census_error;
  try {
    tally = walk_census(5);
    CensusConfig config;
    config.max_n = 5;
    harness = run_census(config);
    census_ran = true;
  } catch (const std::exception& e) {
    census_error = e.what();
  }

  guarded(4, "oracle equivalence census (n <= 5, weights {1,2})", [&](Verdict& v) {
    v.require(census_ran, "census ran: " + census_error);
    v.require(tally.instances > 0 && tally.errors == 0, "every instance evaluated");
    v.require(tally.cm_vs_oracle == 0, "classify CM equals Reisner over F2 and Q");
    v.require(tally.purity_vs_unmixed == 0, "purity equals unmixedness");
    v.require(harness.counts.total == tally.instances && harness.counts.mismatches == 0 &&
                  harness.counts.oracle_checked == harness.counts.total,
              "census harness agrees with the direct walk");
    v.require(tally.seconds < 600.0, "runtime under 10 minutes");
    std::ostringstream s;
    s << tally.instances << " instances, " << tally.cm_vs_oracle << " CM mismatches, " << tally.purity_vs_unmixed
      << " purity mismatches, harness mismatches " << harness.counts.mismatches << ", " << tally.seconds << " s";
    return s.str();
  });

  guarded(5, "Cohen-Macaulay implies unmixed", [&](Verdict& v) {
    v.require(census_ran && tally.instances > 0, "census ran");
    v.require(tally.cm_not_unmixed == 0 && harness.counts.cm_implies_unmixed_violations == 0, "no violations");
    std::ostringstream s;
    s << tally.oracle_cm << " oracle-CM instances, " << tally.cm_not_unmixed << " mixed";
    return s.str();
  });

  guarded(6, "Gorenstein exactly for disjoint unions of edges", [&](Verdict& v) {
    v.require(census_ran && tally.gorenstein_checked > 0, "census ran");
    v.require(tally.gorenstein_violations == 0 && harness.counts.gorenstein_violations == 0, "no violations");
    std::ostringstream s;
    s << tally.gorenstein_checked << " Gorenstein candidates, " << tally.gorenstein_violations << " violations";
    return s.str();
  });

  guarded(7, "structural invariants over 1000 random instances", [](Verdict& v) {
    const auto start = Clock::now();
    const auto outcomes = testing::run_structural_suite(1000, 20260417);
    std::ostringstream s;
    for (const auto& p : outcomes) {
      v.require(p.passed(), p.name + (p.failures.empty() ? "" : " on " + p.failures.front()));
      s << p.name << " (" << p.checked << "), ";
    }
    s << "in " << seconds_since(start) << " s";
    return s.str();
  });

  std::size_t failed = 0;
  for (const auto& [title, ok] : results) failed += !ok;
  std::cout << (failed == 0 ? "all acceptance criteria passed" : std::to_string(failed) + " criteria failed")
            << std::endl;
  return failed == 0 ? 0 : 1;
}
