#pragma once

#include <string>
#include <vector>

#include "resonance/cluster_solution.hpp"
#include "resonance/corpus.hpp"
#include "resonance/pipeline.hpp"
#include "resonance/semantic_matrix.hpp"

namespace resonance::testing {

/// The SS Cyg article (ISI:000276828000006) with its six cluster labels.
BibRecord SsCygRecord();

/// Solutions a..f assigning the SS Cyg article to 19, 16, 15, 51, 17, 1.
std::vector<ClusterSolution> SsCygSolutions();

/// Deterministic three-topic corpus with planted solutions "a" (exact) and
/// "b" (10% noise), built once per process.
struct SyntheticFixture {
  std::vector<BibRecord> records;
  std::vector<ClusterSolution> solutions;
  BuildResult build;
};
const SyntheticFixture& Synthetic();

/// Builds an index directly from given vectors. Keys must already be sorted
/// by (kind, key).
SemanticMatrix MatrixFromVectors(const std::vector<EntityId>& ids,
                                 const std::vector<std::vector<float>>& vectors,
                                 std::uint64_t count = 1);

/// Directory holding golden files.
std::string GoldenDir();

/// Compares `actual` against the golden file, or rewrites it when the
/// environment variable RESONANCE_UPDATE_GOLDEN is set. Returns an empty
/// string on match, otherwise a description of the mismatch.
std::string CheckGolden(const std::string& name, const std::string& actual);

}  // namespace resonance::testing
