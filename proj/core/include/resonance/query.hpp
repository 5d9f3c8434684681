#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "resonance/entity.hpp"

namespace resonance {

inline constexpr std::size_t kDefaultShow = 25;

/// `[cluster:a]`: every cluster of solution `a`.
struct ClassSelector {
  EntityKind kind = EntityKind::kCluster;
  std::string solution_id;

  friend bool operator==(const ClassSelector&, const ClassSelector&) = default;
};

struct QueryExpression {
  std::vector<std::string> free_terms;
  std::vector<EntityId> selectors;
  std::vector<ClassSelector> class_selectors;
  std::size_t show = kDefaultShow;
  KindSet type_filter = KindSet::All();

  bool empty() const {
    return free_terms.empty() && selectors.empty() && class_selectors.empty();
  }
};

/// Percent-decoding with `+` as space. Invalid escapes are kept verbatim.
std::string UrlDecode(std::string_view text);

/// Parses the query syntax. Bracket groups `[kind:key]` become entity
/// selectors (`issn` and `journal` both name journals); `[cluster:x]` with a
/// single-word key selects all clusters of solution x. Text outside brackets
/// is split on commas into normalized free-text phrases. The input is
/// URL-decoded first.
///
/// Throws QueryError(kEmpty) for an empty query and QueryError(kMalformed)
/// naming the offending fragment for unbalanced brackets, unknown kinds or
/// empty keys.
QueryExpression ParseQuery(std::string_view raw);

/// Canonical text form: phrases joined by ", ", then selectors.
std::string EchoQuery(const QueryExpression& query);

/// Parses a comma-separated list of kind names. Throws InvalidArgument on an
/// unknown name. An empty list means all kinds.
KindSet ParseKindList(std::string_view text);

}  // namespace resonance
