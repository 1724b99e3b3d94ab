#include "woideal/classification.hpp"

#include <numeric>

#include "woideal/errors.hpp"

namespace woideal {

std::string to_string(const LinearForm& form, const WeightedOrientedGraph& graph) {
  std::string out;
  for (VertexId v : form.vertices) out += (out.empty() ? "" : "+") + graph.name(v);
  return out.empty() ? "0" : out;
}

bool is_disjoint_union_of_edges(const SimpleGraph& graph) {
  for (VertexId v = 0; v < graph.vertex_count(); ++v)
    if (graph.degree(v) > 1) return false;
  return true;
}

ClassificationReport classify(const WeightedOrientedGraph& graph, std::size_t cap) {
  check_exact_capacity(graph.vertex_count(), cap);
  ClassificationReport report;
  const auto g = underlying(graph);
  const std::size_t n = graph.vertex_count();
  report.vertex_count = n;
  report.edgeless = g.edge_count() == 0;

  report.chordality = is_chordal(g);
  report.chordal = report.chordality.chordal;
  report.simplicial_graph = simplicial_analysis(g).is_simplicial_graph;
  report.applicable = report.chordal || report.simplicial_graph;
  report.applicable_via = report.chordal ? "chordal" : report.simplicial_graph ? "simplicial" : "none";

  report.unmixed_detail = is_unmixed(graph, cap);
  report.unmixed = report.unmixed_detail.unmixed;
  report.height = report.unmixed_detail.height;
  report.dimension = n - report.height;
  report.simplex_partition = simplex_partition(g);

  if (!report.applicable) return report;

  report.cohen_macaulay = report.unmixed;
  report.gorenstein = is_disjoint_union_of_edges(g);
  if (*report.gorenstein && !report.unmixed)
    throw InternalError("a disjoint union of edges was classified as mixed");

  if (report.unmixed) {
    const auto& partition = report.simplex_partition.partition;
    if (!partition) throw InternalError("unmixed chordal/simplicial graph without a simplex partition");
    const std::size_t m = partition->m();
    const std::size_t expected_height = std::accumulate(
        partition->blocks.begin(), partition->blocks.end(), std::size_t{0},
        [](std::size_t acc, const auto& block) { return acc + block.size() - 1; });
    if (report.height != n - m || report.dimension != m || expected_height != report.height)
      throw InternalError("height " + std::to_string(report.height) + " and dimension " +
                          std::to_string(report.dimension) + " disagree with " + std::to_string(m) +
                          " simplex blocks on " + std::to_string(n) + " vertices");
    std::vector<LinearForm> forms;
    for (const auto& block : partition->blocks) forms.push_back({block});
    report.parameters = std::move(forms);
  }
  return report;
}

std::vector<LinearForm> system_of_parameters(const WeightedOrientedGraph& graph, std::size_t cap) {
  auto report = classify(graph, cap);
  if (!report.applicable)
    throw PreconditionError("system of parameters needs a chordal or simplicial underlying graph");
  if (!report.unmixed) throw PreconditionError("system of parameters needs an unmixed edge ideal");
  return std::move(*report.parameters);
}

}  // namespace woideal
