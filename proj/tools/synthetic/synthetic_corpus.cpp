#include "synthetic_corpus.hpp"

#include "resonance/random.hpp"

namespace resonance::synthetic {
namespace {

const std::vector<std::vector<std::string>>& NamedWords() {
  static const std::vector<std::vector<std::string>> words = {
      {"cosmology", "dark", "energy", "inflation", "planck", "curvature", "perturbations",
       "baryon", "acoustic", "redshift", "supernovae", "lensing", "microwave", "background",
       "anisotropy", "polarization", "horizon", "expansion", "vacuum", "reionization"},
      {"accretion", "outburst", "quiescence", "novae", "dwarf", "disk", "binary", "eclipse",
       "transfer", "spot", "mass", "viscosity", "superhump", "orbital", "period", "donor",
       "hydrogen", "helium", "cataclysmic", "variables"},
      {"magnetic", "flux", "reconnection", "corona", "sunspot", "dynamo", "coronal", "loops",
       "photosphere", "chromosphere", "helicity", "emergence", "prominence", "filament",
       "granulation", "wind", "plasma", "alfven", "waves", "oscillations"},
      {"galaxy", "halo", "merger", "spiral", "bulge", "quasar", "nucleus", "starburst",
       "metallicity", "morphology", "interstellar", "molecular", "gas", "formation",
       "elliptical", "stellar", "populations", "tidal", "feedback", "bar"},
  };
  return words;
}

const std::vector<std::string>& TopicNames() {
  static const std::vector<std::string> names = {"cosmology", "cataclysmic variables",
                                                 "solar magnetism", "galaxies"};
  return names;
}

const std::vector<std::string>& Surnames() {
  static const std::vector<std::string> names = {
      "peebles", "efstathiou", "spergel", "riess", "perlmutter", "hu", "sunyaev", "kaiser",
      "smak", "osaki", "warner", "hameury", "lasota", "kato", "patterson", "buat",
      "parker", "priest", "solanki", "schrijver", "hood", "nordlund", "stein", "title",
      "kennicutt", "faber", "kormendy", "toomre", "mo", "white", "frenk", "bland"};
  return names;
}

Topic MakeTopic(std::size_t t) {
  Topic topic;
  if (t < NamedWords().size()) {
    topic.name = TopicNames()[t];
    topic.words = NamedWords()[t];
  } else {
    topic.name = "topic " + std::to_string(t);
    for (std::size_t i = 0; i < 20; ++i) {
      topic.words.push_back("t" + std::to_string(t) + "word" + std::to_string(i));
    }
  }
  for (std::size_t i = 0; i < 6; ++i) {
    topic.subjects.push_back(topic.name + ", " + topic.words[i * 3]);
  }
  const auto& surnames = Surnames();
  for (std::size_t i = 0; i < 8; ++i) {
    const std::string initial(1, static_cast<char>('a' + (t + i) % 26));
    topic.authors.push_back(surnames[(t * 8 + i) % surnames.size()] + " " + initial +
                            (t >= 4 ? std::to_string(t) : ""));
  }
  char issn[16];
  std::snprintf(issn, sizeof issn, "%04zu-%04zu", 1000 + t, 2000 + 7 * t);
  topic.issn = issn;
  topic.journal = "Journal of " + topic.name;
  topic.journal[11] = static_cast<char>(std::toupper(static_cast<unsigned char>(topic.journal[11])));
  return topic;
}

template <typename T>
const T& Pick(Rng& rng, const std::vector<T>& items) {
  return items[static_cast<std::size_t>(rng.below(items.size()))];
}

}  // namespace

Corpus MakeCorpus(const CorpusSpec& spec) {
  Corpus corpus;
  corpus.filler = {"study", "results", "observations", "model", "data", "analysis",
                   "method", "present", "using", "show", "find", "new"};
  for (std::size_t t = 0; t < spec.topics; ++t) corpus.topics.push_back(MakeTopic(t));

  Rng rng(spec.seed);
  auto word = [&](const Topic& topic) -> const std::string& {
    return rng.uniform() < spec.filler_rate ? Pick(rng, corpus.filler) : Pick(rng, topic.words);
  };
  for (std::size_t i = 0; i < spec.documents; ++i) {
    const std::size_t t = i % spec.topics;
    const Topic& topic = corpus.topics[t];
    BibRecord rec;
    char id[32];
    std::snprintf(id, sizeof id, "SYN:%06zu", i);
    rec.article_id = id;
    for (std::size_t w = 0; w < spec.title_words; ++w) {
      rec.title += (w ? " " : "") + Pick(rng, topic.words);
    }
    for (std::size_t s = 0; s < spec.sentences; ++s) {
      std::string sentence;
      for (std::size_t w = 0; w < spec.sentence_words; ++w) {
        sentence += (w ? " " : "") + word(topic);
      }
      sentence[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(sentence[0])));
      rec.abstract += (s ? " " : "") + sentence + ".";
    }
    const std::size_t n_authors = 1 + static_cast<std::size_t>(rng.below(3));
    for (std::size_t a = 0; a < n_authors; ++a) {
      const std::string& name = Pick(rng, topic.authors);
      if (std::find(rec.authors.begin(), rec.authors.end(), name) == rec.authors.end()) {
        rec.authors.push_back(name);
      }
    }
    rec.issn = topic.issn;
    rec.journal_title = topic.journal;
    const std::size_t n_subjects = 1 + static_cast<std::size_t>(rng.below(3));
    for (std::size_t s = 0; s < n_subjects; ++s) {
      const std::string& subject = Pick(rng, topic.subjects);
      if (std::find(rec.subjects.begin(), rec.subjects.end(), subject) == rec.subjects.end()) {
        rec.subjects.push_back(subject);
      }
    }
    corpus.records.push_back(std::move(rec));
    corpus.topic_of.push_back(t);
  }
  return corpus;
}

ClusterSolution PlantedSolution(const Corpus& corpus, const std::string& solution_id,
                                double noise, std::uint64_t seed) {
  ClusterSolution sol;
  sol.solution_id = solution_id;
  sol.source_name = "planted " + solution_id;
  Rng rng(seed);
  for (std::size_t i = 0; i < corpus.records.size(); ++i) {
    std::size_t topic = corpus.topic_of[i];
    if (noise > 0.0 && rng.uniform() < noise) {
      topic = static_cast<std::size_t>(rng.below(corpus.topics.size()));
    }
    sol.assignments.emplace(corpus.records[i].article_id, std::to_string(topic));
  }
  return sol;
}

}  // namespace resonance::synthetic
