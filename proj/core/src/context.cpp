#include "resonance/context.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "resonance/compare.hpp"
#include "resonance/error.hpp"
#include "resonance/relatedness.hpp"

namespace resonance {

ContextNetwork Relate(const QueryExpression& query, const SemanticMatrix& index,
                      const LayoutOptions& layout) {
  if (query.show == 0) throw InvalidArgument("show must be at least 1");
  const ResolvedQuery resolved = ResolveQuery(query, index);

  std::vector<std::size_t> cluster_candidates;
  for (const auto& id : resolved.solution_ids) {
    const auto rows = index.cluster_rows(id);
    if (rows.empty()) {
      throw QueryError(QueryError::Reason::kUnknownSolution,
                       "no clusters for solution '" + id + "'");
    }
    cluster_candidates.insert(cluster_candidates.end(), rows.begin(), rows.end());
  }

  ContextNetwork net;
  if (resolved.rows.empty() && !resolved.solution_ids.empty()) {
    if (query.type_filter.contains(EntityKind::kCluster)) {
      net = CompareSolutions(resolved.solution_ids, index, query.show, layout);
    }
  } else {
    const std::vector<double> v = ComposeQueryVector(query, index);
    RankOptions options;
    options.show = query.show;
    options.type_filter = query.type_filter;
    options.exclude = resolved.rows;
    if (!resolved.solution_ids.empty()) options.candidates = &cluster_candidates;
    const RankResult ranked = TopRelated(v, index, options);
    net.truncated = ranked.truncated;
    net.nodes = MakeNodes(index, ranked.ranked, layout);
  }
  net.query_echo = EchoQuery(query);
  if (net.nodes.empty()) net.reason = "no_results";
  return net;
}

double RoundForOutput(double value) {
  const double r = std::round(value * 1e6) / 1e6;
  return r == 0.0 ? 0.0 : r;  // no negative zero
}

nlohmann::json NetworkToJson(const ContextNetwork& network) {
  nlohmann::json nodes = nlohmann::json::array();
  for (const auto& n : network.nodes) {
    nodes.push_back({
        {"kind", KindName(n.id.kind)},
        {"key", n.id.key},
        {"display_label", n.label},
        {"score", RoundForOutput(n.score)},
        {"count", n.count},
        {"x", RoundForOutput(n.position.x)},
        {"y", RoundForOutput(n.position.y)},
    });
  }
  return {
      {"schema_version", kResponseSchemaVersion},
      {"query", network.query_echo},
      {"truncated", network.truncated},
      {"reason", network.reason.empty() ? nlohmann::json(nullptr) : nlohmann::json(network.reason)},
      {"nodes", std::move(nodes)},
  };
}

std::string FormatNetworkTable(const ContextNetwork& network) {
  std::ostringstream out;
  out << "kind\tkey\tscore\tcount\n";
  char score[32];
  for (const auto& n : network.nodes) {
    std::snprintf(score, sizeof score, "%.6f", RoundForOutput(n.score));
    out << KindName(n.id.kind) << '\t' << n.id.key << '\t' << score << '\t' << n.count << '\n';
  }
  return out.str();
}

}  // namespace resonance
