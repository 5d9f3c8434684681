// Writes a synthetic corpus (and optionally a planted cluster solution) for
// demos and smoke tests.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "synthetic_corpus.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Generate a synthetic bibliographic corpus"};
  resonance::synthetic::CorpusSpec spec;
  std::string out_path, solution_path, solution_id = "p";
  double noise = 0.0;
  app.add_option("--documents", spec.documents, "Number of records")->capture_default_str();
  app.add_option("--topics", spec.topics, "Number of planted topics")->capture_default_str();
  app.add_option("--seed", spec.seed, "Random seed")->capture_default_str();
  app.add_option("--out", out_path, "Corpus file to write")->required();
  app.add_option("--solution-out", solution_path, "Also write the planted assignment file");
  app.add_option("--solution-id", solution_id, "Id for the planted solution")->capture_default_str();
  app.add_option("--noise", noise, "Fraction of reassigned records in the planted solution")
      ->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  const auto corpus = resonance::synthetic::MakeCorpus(spec);
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "cannot write " << out_path << '\n';
    return 1;
  }
  for (const auto& rec : corpus.records) out << resonance::FormatRecord(rec) << '\n';

  if (!solution_path.empty()) {
    const auto sol = resonance::synthetic::PlantedSolution(corpus, solution_id, noise, spec.seed);
    std::ofstream sol_out(solution_path);
    std::vector<std::string> order;
    for (const auto& rec : corpus.records) order.push_back(rec.article_id);
    resonance::WriteAssignments(sol_out, sol, order);
  }
  return 0;
}
