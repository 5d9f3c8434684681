#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "resonance/cluster_solution.hpp"
#include "resonance/corpus.hpp"

namespace resonance::synthetic {

/// Planted vocabulary for one topic. Word lists of different topics are
/// disjoint.
struct Topic {
  std::string name;
  std::vector<std::string> words;
  std::vector<std::string> subjects;
  std::vector<std::string> authors;
  std::string issn;
  std::string journal;
};

struct CorpusSpec {
  std::size_t documents = 200;
  std::size_t topics = 2;  // up to 4 named topics, more get generated names
  std::uint64_t seed = 1;
  std::size_t title_words = 5;
  std::size_t sentences = 3;
  std::size_t sentence_words = 8;
  double filler_rate = 0.25;  // chance a word comes from the shared filler list
};

struct Corpus {
  std::vector<BibRecord> records;
  std::vector<std::size_t> topic_of;  // planted topic per record
  std::vector<Topic> topics;
  std::vector<std::string> filler;
};

/// Documents cycle through topics (record i has topic i % topics) and draw
/// their words, subjects, authors and journal from that topic.
Corpus MakeCorpus(const CorpusSpec& spec);

/// Solution that assigns each record to its planted topic, with a fraction
/// `noise` of records moved to a uniformly drawn topic. Cluster ids are the
/// topic numbers.
ClusterSolution PlantedSolution(const Corpus& corpus, const std::string& solution_id,
                                double noise = 0.0, std::uint64_t seed = 1);

}  // namespace resonance::synthetic
