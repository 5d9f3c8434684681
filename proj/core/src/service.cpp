#include "resonance/service.hpp"

#include <charconv>
#include <nlohmann/json.hpp>
#include <set>

#include "resonance/compare.hpp"
#include "resonance/context.hpp"
#include "resonance/error.hpp"
#include "resonance/query.hpp"

namespace resonance {
namespace {

using nlohmann::json;

HttpResponse JsonResponse(int status, const json& body) {
  HttpResponse r;
  r.status = status;
  r.body = body.dump(2) + "\n";
  return r;
}

HttpResponse ErrorResponse(int status, std::string_view code, std::string_view message) {
  return JsonResponse(status, {{"schema_version", kResponseSchemaVersion},
                               {"error", code},
                               {"message", message}});
}

const std::string* Param(const QueryParams& params, const std::string& name) {
  const auto it = params.find(name);
  return it == params.end() ? nullptr : &it->second;
}

// Parses a positive count; nullopt on garbage or values < 1.
std::optional<std::size_t> ParseShow(const std::string& text) {
  long long value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || value < 1) return std::nullopt;
  return static_cast<std::size_t>(value);
}

void WarnIgnored(HttpResponse& r, const QueryParams& params,
                 std::initializer_list<std::string_view> known) {
  std::set<std::string> ignored;
  for (const auto& [name, value] : params) {
    if (std::find(known.begin(), known.end(), name) == known.end()) ignored.insert(name);
  }
  if (ignored.empty()) return;
  std::string names;
  for (const auto& n : ignored) names += (names.empty() ? "" : ", ") + n;
  r.headers.emplace_back("Warning", "299 - \"ignored parameters: " + names + "\"");
}

}  // namespace

ContextService::ContextService(std::shared_ptr<const SemanticMatrix> index,
                               std::map<std::string, ClusterSolution> assignments)
    : index_(std::move(index)), assignments_(std::move(assignments)) {}

HttpResponse ContextService::Handle(std::string_view path, const QueryParams& params) const {
  if (path == "/relate") return Relate(params);
  if (path == "/entity") return Entity(params);
  if (path == "/solutions") return Solutions(params);
  if (path == "/compare") return Compare(params);
  return ErrorResponse(404, "not_found", "no such endpoint");
}

HttpResponse ContextService::Relate(const QueryParams& params) const {
  if (!index_) return ErrorResponse(503, "index_unavailable", "no index loaded");
  const std::string* input = Param(params, "input");
  if (input == nullptr) return ErrorResponse(400, "missing_parameter", "input is required");

  QueryExpression query;
  try {
    query = ParseQuery(*input);
  } catch (const QueryError& e) {
    return ErrorResponse(400, ReasonCode(e.reason()), e.what());
  }
  if (const std::string* show = Param(params, "show")) {
    const auto parsed = ParseShow(*show);
    if (!parsed) return ErrorResponse(400, "invalid_show", "show must be a positive integer");
    query.show = *parsed;
  }
  try {
    std::string kinds;
    for (auto [it, end] = params.equal_range("type"); it != end; ++it) {
      kinds += (kinds.empty() ? "" : ",") + it->second;
    }
    query.type_filter = ParseKindList(kinds);
  } catch (const InvalidArgument& e) {
    return ErrorResponse(400, "invalid_type", e.what());
  }

  HttpResponse response;
  try {
    response = JsonResponse(200, NetworkToJson(resonance::Relate(query, *index_)));
  } catch (const QueryError& e) {
    ContextNetwork empty;
    empty.query_echo = EchoQuery(query);
    empty.reason = ReasonCode(e.reason());
    response = JsonResponse(200, NetworkToJson(empty));
  }
  WarnIgnored(response, params, {"input", "show", "type"});
  return response;
}

HttpResponse ContextService::Entity(const QueryParams& params) const {
  if (!index_) return ErrorResponse(503, "index_unavailable", "no index loaded");
  const std::string* kind_text = Param(params, "kind");
  const std::string* key = Param(params, "key");
  if (kind_text == nullptr || key == nullptr) {
    return ErrorResponse(400, "missing_parameter", "kind and key are required");
  }
  const auto kind = ParseKind(NormalizeKey(*kind_text));
  if (!kind) return ErrorResponse(400, "invalid_kind", "unknown entity kind '" + *kind_text + "'");
  const EntityId id{*kind, NormalizeKey(*key)};
  const auto row = index_->find(id);
  if (!row) return ErrorResponse(404, "unknown_entity", ToSelector(id) + " is not in the index");

  const EntityRecord& e = index_->entity(*row);
  HttpResponse response = JsonResponse(200, {{"schema_version", kResponseSchemaVersion},
                                             {"kind", KindName(e.id.kind)},
                                             {"key", e.id.key},
                                             {"display_label", e.label},
                                             {"count", e.count},
                                             {"selector", ToSelector(e.id)}});
  WarnIgnored(response, params, {"kind", "key"});
  return response;
}

HttpResponse ContextService::Solutions(const QueryParams& params) const {
  if (!index_) return ErrorResponse(503, "index_unavailable", "no index loaded");
  json list = json::array();
  for (const auto& s : index_->solutions()) {
    list.push_back({{"id", s.solution_id},
                    {"source", s.source_name},
                    {"clusters", s.cluster_count}});
  }
  HttpResponse response =
      JsonResponse(200, {{"schema_version", kResponseSchemaVersion}, {"solutions", list}});
  WarnIgnored(response, params, {});
  return response;
}

HttpResponse ContextService::Compare(const QueryParams& params) const {
  if (!index_) return ErrorResponse(503, "index_unavailable", "no index loaded");
  const std::string* list = Param(params, "solutions");
  if (list == nullptr) return ErrorResponse(400, "missing_parameter", "solutions is required");
  std::vector<std::string> ids;
  std::size_t start = 0;
  while (start <= list->size()) {
    auto comma = list->find(',', start);
    if (comma == std::string::npos) comma = list->size();
    std::string id = NormalizeKey(list->substr(start, comma - start));
    if (!id.empty()) ids.push_back(std::move(id));
    start = comma + 1;
  }
  if (ids.empty()) return ErrorResponse(400, "missing_parameter", "solutions is empty");

  std::size_t show = kDefaultShow;
  if (const std::string* s = Param(params, "show")) {
    const auto parsed = ParseShow(*s);
    if (!parsed) return ErrorResponse(400, "invalid_show", "show must be a positive integer");
    show = *parsed;
  }

  json body;
  try {
    body = NetworkToJson(CompareSolutions(ids, *index_, show));
  } catch (const InvalidArgument& e) {
    return ErrorResponse(400, "unknown_solution", e.what());
  }
  if (ids.size() == 2 && assignments_.contains(ids[0]) && assignments_.contains(ids[1])) {
    try {
      const OverlapReport overlap =
          SolutionOverlap(assignments_.at(ids[0]), assignments_.at(ids[1]));
      json matches = json::array();
      for (const auto& m : overlap.a_to_b) {
        matches.push_back({{"cluster", m.cluster}, {"best_match", m.best_match},
                           {"overlap", m.overlap}});
      }
      body["overlap"] = {{"shared_articles", overlap.shared_articles},
                         {"adjusted_rand", RoundForOutput(overlap.adjusted_rand)},
                         {"best_matches", matches}};
    } catch (const InvalidArgument&) {
      body["overlap"] = nullptr;
    }
  }
  HttpResponse response = JsonResponse(200, body);
  WarnIgnored(response, params, {"solutions", "show"});
  return response;
}

}  // namespace resonance
