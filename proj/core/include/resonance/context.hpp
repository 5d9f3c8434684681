#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "resonance/layout.hpp"
#include "resonance/network.hpp"
#include "resonance/query.hpp"
#include "resonance/semantic_matrix.hpp"

namespace resonance {

/// Answers a query with its context network.
///
/// Entities and free terms are averaged into a query vector and the
/// `query.show` most related entities of the permitted kinds are returned,
/// excluding the query entities themselves. Class selectors restrict the
/// candidates to the clusters of those solutions; a query of class selectors
/// alone becomes a solution comparison.
///
/// Throws QueryError(kNoResonance) when nothing resolves,
/// QueryError(kUnknownSolution) for a class selector without clusters, and
/// InvalidArgument when show is 0.
ContextNetwork Relate(const QueryExpression& query, const SemanticMatrix& index,
                      const LayoutOptions& layout = {});

inline constexpr int kResponseSchemaVersion = 1;

/// Scores and coordinates are rounded to six decimals for stable output.
double RoundForOutput(double value);

/// {schema_version, query, truncated, reason, nodes: [{kind, key,
/// display_label, score, count, x, y}]}
nlohmann::json NetworkToJson(const ContextNetwork& network);

/// Tab-separated `kind key score count` lines with a header row.
std::string FormatNetworkTable(const ContextNetwork& network);

}  // namespace resonance
