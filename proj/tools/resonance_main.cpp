// Command line front end: build-index, cluster, label, query, compare, serve.

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <string>
#include <unordered_set>
#include <vector>

#include "resonance/article_entities.hpp"
#include "resonance/cluster_solution.hpp"
#include "resonance/clustering.hpp"
#include "resonance/compare.hpp"
#include "resonance/context.hpp"
#include "resonance/error.hpp"
#include "resonance/parallel.hpp"
#include "resonance/pipeline.hpp"
#include "resonance/query.hpp"
#include "resonance/semantic_matrix.hpp"
#include "resonance/service.hpp"

namespace {

using namespace resonance;

constexpr int kExitError = 1;
constexpr int kExitNoResult = 2;

struct SolutionArg {
  std::string id;
  std::string path;
};

// "a=clusters/cwts.tsv"
SolutionArg SplitAssignment(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0 || eq + 1 == text.size()) {
    throw InvalidArgument("expected ID=PATH, got '" + text + "'");
  }
  return {text.substr(0, eq), text.substr(eq + 1)};
}

std::map<std::string, std::string> SplitNames(const std::vector<std::string>& items) {
  std::map<std::string, std::string> out;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw InvalidArgument("expected ID=NAME, got '" + item + "'");
    }
    out[NormalizeKey(item.substr(0, eq))] = item.substr(eq + 1);
  }
  return out;
}

std::vector<BibRecord> ReadCorpus(const std::string& path) {
  ParseResult parsed = ParseRecordsFile(path);
  for (const auto& e : parsed.errors) {
    std::cerr << path << ":" << e.line << ": skipped: " << e.message << '\n';
  }
  return std::move(parsed.records);
}

std::vector<ClusterSolution> ReadSolutions(const std::vector<std::string>& args,
                                           const std::map<std::string, std::string>& names,
                                           std::size_t min_size,
                                           const std::unordered_set<std::string>* known,
                                           bool verbose) {
  std::vector<ClusterSolution> out;
  for (const auto& arg : args) {
    const SolutionArg s = SplitAssignment(arg);
    LoadedSolution loaded = LoadClusterSolutionFile(s.path, s.id, min_size, known);
    if (auto it = names.find(loaded.solution.solution_id); it != names.end()) {
      loaded.solution.source_name = it->second;
    }
    if (verbose) {
      std::cout << "solution " << loaded.solution.solution_id << " ("
                << loaded.solution.source_name << "): " << loaded.report.raw_clusters
                << " clusters, " << loaded.report.retained_clusters << " retained (min size "
                << min_size << ")\n";
    }
    if (!loaded.report.unknown_ids.empty()) {
      std::cerr << "warning: solution " << loaded.solution.solution_id << ": "
                << loaded.report.unknown_ids.size() << " article ids not in the corpus";
      for (std::size_t i = 0; i < std::min<std::size_t>(5, loaded.report.unknown_ids.size()); ++i) {
        std::cerr << (i == 0 ? " (" : ", ") << loaded.report.unknown_ids[i];
      }
      std::cerr << (loaded.report.unknown_ids.size() > 5 ? ", ...)\n" : ")\n");
    }
    out.push_back(std::move(loaded.solution));
  }
  return out;
}

std::unordered_set<std::string> IdsOf(const std::vector<BibRecord>& records) {
  std::unordered_set<std::string> ids;
  for (const auto& r : records) ids.insert(r.article_id);
  return ids;
}

const char* EnvOr(const char* name) {
  const char* v = std::getenv(name);
  return (v != nullptr && *v != '\0') ? v : nullptr;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Contextual relatedness over bibliographic entities"};
  app.require_subcommand(1);
  unsigned threads = 0;
  app.add_option("--threads", threads, "Worker threads (0 = hardware concurrency)");

  // build-index
  auto* build = app.add_subcommand("build-index", "Build a semantic index from a corpus");
  std::string corpus_path, out_path, config_path;
  std::vector<std::string> solution_args, solution_names;
  std::optional<std::uint32_t> dims, min_df;
  std::optional<std::uint64_t> seed;
  std::size_t min_cluster_size = kDefaultMinClusterSize;
  bool log_damping = false;
  build->add_option("--corpus", corpus_path, "Corpus file, one JSON record per line")
      ->required()->check(CLI::ExistingFile);
  build->add_option("--solution", solution_args,
                    "Cluster assignment file as ID=PATH (repeatable)");
  build->add_option("--solution-name", solution_names,
                    "Source name for a solution as ID=NAME (repeatable)");
  build->add_option("--config", config_path, "JSON config with extraction/projection settings")
      ->check(CLI::ExistingFile);
  build->add_option("--dims", dims, "Projected dimensions (default 600)");
  build->add_option("--seed", seed, "Projection seed");
  build->add_option("--min-df", min_df, "Minimum document frequency for topical terms");
  build->add_option("--min-cluster-size", min_cluster_size,
                    "Discard clusters with fewer articles")->capture_default_str();
  build->add_flag("--log-damping", log_damping, "Weight counts by log(1 + count)");
  build->add_option("--out", out_path, "Index file to write")->required();

  // cluster
  auto* cluster = app.add_subcommand("cluster", "Cluster articles with mini-batch k-means");
  std::string index_path, assign_out, cluster_solution_id = "oclc";
  KMeansParams kmeans;
  bool include_clusters = false;
  std::vector<std::string> cluster_solution_args;
  cluster->add_option("--index", index_path, "Index file")->required()->check(CLI::ExistingFile);
  cluster->add_option("--corpus", corpus_path, "Corpus file")->required()->check(CLI::ExistingFile);
  cluster->add_option("--k", kmeans.k, "Number of clusters")->capture_default_str();
  cluster->add_option("--seed", kmeans.seed, "Random seed")->capture_default_str();
  cluster->add_option("--batch-size", kmeans.batch_size, "Mini-batch size")->capture_default_str();
  cluster->add_option("--max-iter", kmeans.max_iterations, "Mini-batch steps")->capture_default_str();
  cluster->add_option("--tolerance", kmeans.tolerance, "Relative centroid-shift stop")
      ->capture_default_str();
  cluster->add_flag("--spherical", kmeans.spherical, "Normalize article vectors first");
  cluster->add_flag("--include-cluster-entities", include_clusters,
                    "Use cluster-label entities in article vectors");
  cluster->add_option("--solution", cluster_solution_args,
                      "Assignment files (ID=PATH) whose cluster entities to include");
  cluster->add_option("--min-cluster-size", min_cluster_size,
                      "Min cluster size for --solution files")->capture_default_str();
  cluster->add_option("--out", assign_out, "Assignment file to write (default stdout)");

  // label
  auto* label = app.add_subcommand("label", "Most related topical terms per cluster");
  std::string label_solution;
  std::size_t label_n = 9;
  label->add_option("--index", index_path, "Index file")->required()->check(CLI::ExistingFile);
  label->add_option("--solution", label_solution, "Solution id")->required();
  label->add_option("--n", label_n, "Terms per cluster")->capture_default_str();

  // query
  auto* query_cmd = app.add_subcommand("query", "Context network around a query");
  std::string input, types;
  std::size_t show = kDefaultShow;
  bool as_json = false;
  query_cmd->add_option("--index", index_path, "Index file")->required()->check(CLI::ExistingFile);
  query_cmd->add_option("--input", input, "Query text, e.g. 'magnetic flux' or '[author:smak j]'")
      ->required();
  query_cmd->add_option("--show", show, "Number of nodes")->capture_default_str();
  query_cmd->add_option("--type", types, "Comma-separated kinds to keep (default all)");
  query_cmd->add_flag("--json", as_json, "Print the /relate response body instead of a table");

  // compare
  auto* compare = app.add_subcommand("compare", "Compare cluster solutions");
  std::vector<std::string> compare_ids, compare_assignments;
  std::size_t compare_show = kDefaultShow;
  compare->add_option("--index", index_path, "Index file")->required()->check(CLI::ExistingFile);
  compare->add_option("--ids", compare_ids, "Solution ids")->required()->delimiter(',');
  compare->add_option("--show", compare_show, "Number of nodes")->capture_default_str();
  compare->add_option("--assignments", compare_assignments,
                      "Assignment files (ID=PATH) for the overlap report");
  compare->add_option("--min-cluster-size", min_cluster_size,
                      "Min cluster size for assignment files")->capture_default_str();
  compare->add_flag("--json", as_json, "Print the /compare response body");

  // serve
  auto* serve = app.add_subcommand("serve", "Serve the HTTP API");
  ServerOptions server_options;
  std::vector<std::string> serve_solutions;
  serve->add_option("--index", index_path, "Index file (env RESONANCE_INDEX)");
  serve->add_option("--port", server_options.port, "Port (env RESONANCE_PORT)")
      ->capture_default_str();
  serve->add_option("--host", server_options.host, "Bind address")->capture_default_str();
  serve->add_option("--solutions", serve_solutions,
                    "Assignment files (ID=PATH) enabling overlap summaries in /compare");
  serve->add_option("--min-cluster-size", min_cluster_size,
                    "Min cluster size for --solutions files")->capture_default_str();
  serve->add_option("--ui-dir", server_options.ui_dir, "Static UI files served under /ui");

  CLI11_PARSE(app, argc, argv);
  if (threads != 0) SetWorkerCount(threads);

  try {
    if (*build) {
      BuildConfig config = config_path.empty() ? BuildConfig{} : LoadBuildConfig(config_path);
      if (dims) config.projection.dims = *dims;
      if (seed) config.projection.seed = *seed;
      if (min_df) config.extraction.min_df = *min_df;
      if (log_damping) config.weighting = CellWeighting::kLog1p;

      const std::vector<BibRecord> records = ReadCorpus(corpus_path);
      const auto known = IdsOf(records);
      const auto solutions = ReadSolutions(solution_args, SplitNames(solution_names),
                                           min_cluster_size, &known, true);
      const BuildResult result = BuildIndex(records, solutions, config);
      SaveIndex(result.index, out_path);

      std::cout << "records: " << records.size() << '\n'
                << "topical terms: " << result.vocabulary.size() << " (min_df "
                << result.vocabulary.min_df() << ")\n";
      for (EntityKind kind : kAllKinds) {
        std::cout << "  " << KindName(kind) << ": " << result.census.count(kind) << '\n';
      }
      std::cout << "entities: " << result.census.total() << '\n'
                << "co-occurrence: " << result.index.size() << " x " << result.cooccurrence_cols
                << ", " << result.cooccurrence_nonzeros << " non-zeros\n"
                << "index: " << result.index.size() << " x " << result.index.dims() << " -> "
                << out_path << '\n';
      return 0;
    }

    if (*cluster) {
      const SemanticMatrix index = LoadIndex(index_path);
      const std::vector<BibRecord> records = ReadCorpus(corpus_path);
      const auto known = IdsOf(records);
      const auto solutions =
          ReadSolutions(cluster_solution_args, {}, min_cluster_size, &known, false);
      const auto articles = ExtractAllEntities(records, VocabularyFromIndex(index), solutions);
      const ArticleEmbedding embedding =
          EmbedArticles(articles, index, EmbeddingOptions{include_clusters});
      if (!embedding.unembeddable.empty()) {
        std::cerr << embedding.unembeddable.size() << " articles have no indexed entity\n";
      }
      const KMeansResult result = MiniBatchKMeans(embedding.matrix, kmeans);
      std::cerr << "k-means: " << result.iterations << " mini-batch steps, inertia "
                << result.initial_inertia << " -> " << result.inertia << '\n';
      for (auto c : result.reseeded) std::cerr << "cluster " << c << " was empty; reseeded\n";

      const ClusterSolution solution =
          ToSolution(embedding.matrix, result, cluster_solution_id, cluster_solution_id);
      if (assign_out.empty()) {
        WriteAssignments(std::cout, solution, embedding.matrix.article_ids);
      } else {
        std::ofstream out(assign_out);
        if (!out) throw FormatError("cannot write " + assign_out);
        WriteAssignments(out, solution, embedding.matrix.article_ids);
      }
      return 0;
    }

    if (*label) {
      const SemanticMatrix index = LoadIndex(index_path);
      for (const auto& l : LabelSolution(NormalizeKey(label_solution), index, label_n)) {
        std::cout << l.cluster.key << '\t';
        for (std::size_t i = 0; i < l.terms.size(); ++i) {
          std::cout << (i ? ", " : "") << index.entity(l.terms[i].row).id.key;
        }
        std::cout << '\n';
      }
      return 0;
    }

    if (*query_cmd) {
      const SemanticMatrix index = LoadIndex(index_path);
      QueryExpression q = ParseQuery(input);
      q.show = show;
      q.type_filter = ParseKindList(types);
      ContextNetwork network;
      int code = 0;
      try {
        network = Relate(q, index);
      } catch (const QueryError& e) {
        network.query_echo = EchoQuery(q);
        network.reason = ReasonCode(e.reason());
        std::cerr << e.what() << '\n';
        code = kExitNoResult;
      }
      if (as_json) {
        std::cout << NetworkToJson(network).dump(2) << '\n';
      } else {
        std::cout << FormatNetworkTable(network);
      }
      return code;
    }

    if (*compare) {
      const SemanticMatrix index = LoadIndex(index_path);
      const ContextNetwork network = CompareSolutions(compare_ids, index, compare_show);
      if (as_json) {
        std::cout << NetworkToJson(network).dump(2) << '\n';
      } else {
        std::cout << FormatNetworkTable(network);
      }
      std::map<std::string, ClusterSolution> loaded;
      for (auto& s : ReadSolutions(compare_assignments, {}, min_cluster_size, nullptr, false)) {
        loaded.emplace(s.solution_id, std::move(s));
      }
      for (std::size_t i = 0; i < compare_ids.size(); ++i) {
        for (std::size_t j = i + 1; j < compare_ids.size(); ++j) {
          const auto a = loaded.find(NormalizeKey(compare_ids[i]));
          const auto b = loaded.find(NormalizeKey(compare_ids[j]));
          if (a == loaded.end() || b == loaded.end()) continue;
          const OverlapReport report = SolutionOverlap(a->second, b->second);
          std::cout << '\n' << FormatOverlapTable(report) << '\n' << FormatOverlapRows(report);
        }
      }
      return 0;
    }

    if (*serve) {
      if (index_path.empty()) {
        if (const char* env = EnvOr("RESONANCE_INDEX")) index_path = env;
      }
      if (const char* env = EnvOr("RESONANCE_PORT"); env != nullptr && serve->count("--port") == 0) {
        server_options.port = std::stoi(env);
      }
      std::shared_ptr<const SemanticMatrix> index;
      if (!index_path.empty()) {
        index = std::make_shared<const SemanticMatrix>(LoadIndex(index_path));
      } else {
        std::cerr << "warning: no index given; endpoints will answer 503\n";
      }
      std::map<std::string, ClusterSolution> loaded;
      for (auto& s : ReadSolutions(serve_solutions, {}, min_cluster_size, nullptr, false)) {
        loaded.emplace(s.solution_id, std::move(s));
      }
      const ContextService service(index, std::move(loaded));
      HttpServer server(service, server_options);
      if (!server.Bind()) {
        std::cerr << "cannot bind " << server_options.host << ':' << server_options.port << '\n';
        return kExitError;
      }
      std::cerr << "listening on http://" << server_options.host << ':' << server.port() << '\n';
      return server.Listen() ? 0 : kExitError;
    }
  } catch (const QueryError& e) {
    std::cerr << "error: " << ReasonCode(e.reason()) << ": " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return 0;
}
