#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "resonance/entity.hpp"
#include "resonance/layout.hpp"
#include "resonance/relatedness.hpp"
#include "resonance/semantic_matrix.hpp"

namespace resonance {

struct ContextNode {
  EntityId id;
  std::string label;
  double score = 0.0;
  std::uint64_t count = 0;
  Point position;
};

/// The ranked, laid-out answer to a query. Nodes are sorted by descending
/// score. An empty network carries a machine-readable `reason`.
struct ContextNetwork {
  std::vector<ContextNode> nodes;
  std::string query_echo;
  bool truncated = false;
  std::string reason;
};

/// Materializes ranked rows as nodes and lays them out by their pairwise
/// cosine.
std::vector<ContextNode> MakeNodes(const SemanticMatrix& index,
                                   std::span<const RankedEntity> ranked,
                                   const LayoutOptions& layout = {});

}  // namespace resonance
