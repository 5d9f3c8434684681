#include "resonance/cluster_solution.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>

#include "resonance/entity.hpp"
#include "resonance/error.hpp"

namespace resonance {
namespace {

std::string Trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

bool AllDigits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c));
  });
}

}  // namespace

std::map<std::string, std::size_t> ClusterSolution::ClusterSizes() const {
  std::map<std::string, std::size_t> sizes;
  for (const auto& [article, cluster] : assignments) ++sizes[cluster];
  return sizes;
}

bool ClusterIdLess(const std::string& a, const std::string& b) {
  if (AllDigits(a) && AllDigits(b)) {
    const auto sa = a.substr(std::min(a.find_first_not_of('0'), a.size() - 1));
    const auto sb = b.substr(std::min(b.find_first_not_of('0'), b.size() - 1));
    if (sa.size() != sb.size()) return sa.size() < sb.size();
    if (sa != sb) return sa < sb;
    return a < b;
  }
  if (AllDigits(a) != AllDigits(b)) return AllDigits(a);
  return a < b;
}

LoadedSolution LoadClusterSolution(std::istream& in, const std::string& solution_id,
                                   std::size_t min_size,
                                   const std::unordered_set<std::string>* known_ids) {
  if (min_size < 1) throw InvalidArgument("min_size must be at least 1");
  const std::string id = NormalizeKey(solution_id);
  if (id.empty() || id.find(' ') != std::string::npos) {
    throw InvalidArgument("solution id must be a single non-empty word: '" +
                          solution_id + "'");
  }

  std::map<std::string, std::string> raw;
  std::set<std::string> duplicates;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw FormatError("assignment line " + std::to_string(line_no) +
                        ": expected article_id<TAB>cluster_id");
    }
    std::string article = Trim(line.substr(0, tab));
    std::string cluster = NormalizeKey(Trim(line.substr(tab + 1)));
    if (article.empty() || cluster.empty()) {
      throw FormatError("assignment line " + std::to_string(line_no) +
                        ": empty article or cluster id");
    }
    if (!raw.emplace(article, std::move(cluster)).second) duplicates.insert(article);
  }
  if (in.bad()) throw FormatError("assignment stream is unreadable");
  if (!duplicates.empty()) {
    std::string msg = "duplicate article ids in solution '" + id + "':";
    for (const auto& d : duplicates) msg += " " + d;
    throw FormatError(msg);
  }

  std::map<std::string, std::size_t> sizes;
  for (const auto& [article, cluster] : raw) ++sizes[cluster];

  LoadedSolution out;
  out.solution.solution_id = id;
  out.solution.source_name = id;
  out.report.raw_clusters = sizes.size();
  for (auto& [article, cluster] : raw) {
    if (sizes[cluster] < min_size) {
      ++out.report.discarded_articles;
      continue;
    }
    if (known_ids != nullptr && !known_ids->contains(article)) {
      out.report.unknown_ids.push_back(article);
      continue;
    }
    out.solution.assignments.emplace(article, cluster);
  }
  out.report.retained_clusters = static_cast<std::size_t>(std::count_if(
      sizes.begin(), sizes.end(), [&](const auto& s) { return s.second >= min_size; }));
  return out;
}

LoadedSolution LoadClusterSolutionFile(const std::filesystem::path& path,
                                       const std::string& solution_id, std::size_t min_size,
                                       const std::unordered_set<std::string>* known_ids) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open assignment file " + path.string());
  return LoadClusterSolution(in, solution_id, min_size, known_ids);
}

void WriteAssignments(std::ostream& out, const ClusterSolution& solution,
                      const std::vector<std::string>& article_order) {
  for (const auto& article : article_order) {
    const auto it = solution.assignments.find(article);
    if (it == solution.assignments.end()) continue;
    out << article << '\t' << it->second << '\n';
  }
}

}  // namespace resonance
