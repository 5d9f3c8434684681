#include "resonance/cooccurrence.hpp"

#include <gtest/gtest.h>

#include <map>

#include "resonance/random.hpp"

namespace resonance {
namespace {

EntityOccurrence Occ(EntityKind kind, std::string key, std::uint32_t m = 1) {
  return {{kind, std::move(key)}, m};
}

ArticleEntities Article(std::vector<EntityOccurrence> entities) {
  std::sort(entities.begin(), entities.end(),
            [](const auto& a, const auto& b) { return a.id < b.id; });
  return {"", std::move(entities)};
}

TEST(CooccurrenceTest, SingleArticleTwoTerms) {
  const std::vector<ArticleEntities> articles = {
      Article({Occ(EntityKind::kTerm, "x"), Occ(EntityKind::kTerm, "y")})};
  const CooccurrenceMatrix c = BuildCooccurrence(articles);
  const EntityId x{EntityKind::kTerm, "x"}, y{EntityKind::kTerm, "y"};
  EXPECT_EQ(c.row_count(), 2u);
  EXPECT_EQ(c.col_count(), 2u);
  EXPECT_EQ(c.at(x, y), 1u);
  EXPECT_EQ(c.at(y, x), 1u);
  EXPECT_EQ(c.at(x, x), 1u);
  EXPECT_EQ(c.occurrence_count(*c.find_row(x)), 1u);
}

TEST(CooccurrenceTest, OnlyTermsAndSubjectsAreColumns) {
  const std::vector<ArticleEntities> articles = {
      Article({Occ(EntityKind::kTerm, "x"), Occ(EntityKind::kAuthor, "doe j"),
               Occ(EntityKind::kSubject, "astronomy"), Occ(EntityKind::kCluster, "a 1")})};
  const CooccurrenceMatrix c = BuildCooccurrence(articles);
  EXPECT_EQ(c.row_count(), 4u);
  EXPECT_EQ(c.col_count(), 2u);
  EXPECT_FALSE(c.find_col({EntityKind::kAuthor, "doe j"}).has_value());
  EXPECT_EQ(c.at({EntityKind::kAuthor, "doe j"}, {EntityKind::kSubject, "astronomy"}), 1u);
  EXPECT_EQ(c.at({EntityKind::kTerm, "x"}, {EntityKind::kAuthor, "doe j"}), 0u);
}

TEST(CooccurrenceTest, EmptyInput) {
  const CooccurrenceMatrix c = BuildCooccurrence({});
  EXPECT_EQ(c.row_count(), 0u);
  EXPECT_EQ(c.nonzeros(), 0u);
}

// Dense brute force over articles, entity pairs and multiplicities.
TEST(CooccurrenceTest, MatchesBruteForceOnRandomCorpora) {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    Rng rng(seed);
    std::vector<ArticleEntities> articles;
    const std::size_t n_articles = 1 + rng.below(30);
    for (std::size_t a = 0; a < n_articles; ++a) {
      std::map<EntityId, std::uint32_t> ents;
      const std::size_t n = rng.below(8);
      for (std::size_t i = 0; i < n; ++i) {
        const auto kind = kAllKinds[rng.below(kAllKinds.size())];
        const std::uint32_t m = kind == EntityKind::kTerm ? 1 + rng.below(3) : 1;
        ents[{kind, "e" + std::to_string(rng.below(12))}] = m;
      }
      std::vector<EntityOccurrence> occ;
      for (const auto& [id, m] : ents) occ.push_back({id, m});
      articles.push_back(Article(occ));
    }
    const CooccurrenceMatrix c = BuildCooccurrence(articles);

    std::map<std::pair<EntityId, EntityId>, std::uint64_t> expected;
    std::map<EntityId, std::uint64_t> occurrences;
    for (const auto& art : articles) {
      for (const auto& r : art.entities) {
        occurrences[r.id] += r.multiplicity;
        for (const auto& col : art.entities) {
          if (col.id.kind != EntityKind::kTerm && col.id.kind != EntityKind::kSubject) continue;
          expected[{r.id, col.id}] += std::uint64_t{r.multiplicity} * col.multiplicity;
        }
      }
    }
    ASSERT_EQ(c.row_count(), occurrences.size()) << "seed " << seed;
    ASSERT_TRUE(std::is_sorted(c.rows().begin(), c.rows().end()));
    ASSERT_TRUE(std::is_sorted(c.cols().begin(), c.cols().end()));
    std::size_t nnz = 0;
    for (std::size_t r = 0; r < c.row_count(); ++r) {
      EXPECT_EQ(c.occurrence_count(r), occurrences[c.rows()[r]]);
      for (const auto& cell : c.row(r)) {
        const auto it = expected.find({c.rows()[r], c.cols()[cell.col]});
        ASSERT_NE(it, expected.end());
        EXPECT_EQ(cell.count, it->second) << "seed " << seed;
        ++nnz;
      }
    }
    EXPECT_EQ(nnz, expected.size()) << "seed " << seed;
  }
}

}  // namespace
}  // namespace resonance
