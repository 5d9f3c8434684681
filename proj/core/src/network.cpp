#include "resonance/network.hpp"

namespace resonance {

std::vector<ContextNode> MakeNodes(const SemanticMatrix& index,
                                   std::span<const RankedEntity> ranked,
                                   const LayoutOptions& layout) {
  std::vector<std::size_t> rows;
  rows.reserve(ranked.size());
  for (const auto& r : ranked) rows.push_back(r.row);
  const std::vector<Point> positions =
      LayoutNetwork(PairwiseCosine(index, rows), rows.size(), layout);

  std::vector<ContextNode> nodes;
  nodes.reserve(ranked.size());
  for (std::size_t i = 0; i < ranked.size(); ++i) {
    const EntityRecord& e = index.entity(ranked[i].row);
    nodes.push_back({e.id, e.label, ranked[i].score, e.count, positions[i]});
  }
  return nodes;
}

}  // namespace resonance
