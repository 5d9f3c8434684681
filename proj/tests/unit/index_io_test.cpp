#include <gtest/gtest.h>

#include <sstream>

#include "fixtures.hpp"
#include "resonance/error.hpp"
#include "resonance/relatedness.hpp"
#include "resonance/semantic_matrix.hpp"

namespace resonance {
namespace {

SemanticMatrix TenEntities() {
  std::vector<EntityRecord> ents;
  std::vector<float> vectors;
  const std::uint32_t dims = 6;
  for (int i = 0; i < 10; ++i) {
    const EntityKind kind = i < 6 ? EntityKind::kTerm : (i < 8 ? EntityKind::kAuthor : EntityKind::kCluster);
    std::string key = i < 8 ? "k" + std::to_string(i) : "a " + std::to_string(i);
    ents.push_back({{kind, key}, "label " + std::to_string(i), static_cast<std::uint64_t>(i + 1)});
    for (std::uint32_t j = 0; j < dims; ++j) vectors.push_back(static_cast<float>((i * 7 + j * 3) % 11) - 5.0f);
  }
  return SemanticMatrix(ProjectionSpec{dims, 9}, CellWeighting::kRaw, ents, vectors,
                        {{"a", "planted", 2}});
}

std::string Serialize(const SemanticMatrix& m) {
  std::ostringstream out(std::ios::binary);
  SaveIndex(m, out);
  return out.str();
}

SemanticMatrix Parse(const std::string& bytes) {
  std::istringstream in(bytes, std::ios::binary);
  return LoadIndex(in);
}

TEST(IndexIoTest, RoundTripIsExactAndByteIdentical) {
  const SemanticMatrix m = TenEntities();
  const std::string bytes = Serialize(m);
  const SemanticMatrix back = Parse(bytes);
  EXPECT_TRUE(back == m);
  EXPECT_EQ(Serialize(back), bytes);
  EXPECT_EQ(back.find_solution("a")->source_name, "planted");
  EXPECT_EQ(back.cluster_rows("a").size(), 2u);
}

TEST(IndexIoTest, TopKUnchangedAfterReload) {
  const auto& index = testing::Synthetic().build.index;
  const SemanticMatrix back = Parse(Serialize(index));
  for (std::size_t row = 0; row < index.size(); row += 97) {
    const auto v = index.vector(row);
    std::vector<double> q(v.begin(), v.end());
    RankOptions opts;
    opts.show = 10;
    EXPECT_EQ(TopRelated(q, index, opts).ranked, TopRelated(q, back, opts).ranked);
  }
}

TEST(IndexIoTest, RejectsWrongMagic) {
  std::string bytes = Serialize(TenEntities());
  bytes[0] = 'X';
  EXPECT_THROW(Parse(bytes), FormatError);
}

TEST(IndexIoTest, RejectsVersionMismatch) {
  std::string bytes = Serialize(TenEntities());
  bytes[8] = static_cast<char>(kIndexFormatVersion + 1);
  try {
    Parse(bytes);
    FAIL();
  } catch (const FormatError& e) {
    EXPECT_NE(std::string(e.what()).find("version"), std::string::npos) << e.what();
  }
}

TEST(IndexIoTest, RejectsEveryTruncation) {
  const std::string bytes = Serialize(TenEntities());
  for (std::size_t len = 0; len < bytes.size(); len += 7) {
    EXPECT_THROW(Parse(bytes.substr(0, len)), FormatError) << "length " << len;
  }
  EXPECT_THROW(Parse(bytes.substr(0, bytes.size() - 1)), FormatError);
}

TEST(IndexIoTest, RejectsTrailingBytes) {
  EXPECT_THROW(Parse(Serialize(TenEntities()) + "x"), FormatError);
}

TEST(IndexIoTest, MissingFile) {
  EXPECT_THROW(LoadIndex(std::filesystem::path("/nonexistent/index.bin")), FormatError);
}

TEST(SemanticMatrixTest, RejectsUnsortedOrMisshapenInput) {
  std::vector<EntityRecord> ents = {{{EntityKind::kTerm, "b"}, "b", 1}, {{EntityKind::kTerm, "a"}, "a", 1}};
  EXPECT_THROW(SemanticMatrix(ProjectionSpec{2, 1}, CellWeighting::kRaw, ents, {1, 0, 0, 1}, {}),
               InvalidArgument);
  std::sort(ents.begin(), ents.end(), [](auto& x, auto& y) { return x.id < y.id; });
  EXPECT_THROW(SemanticMatrix(ProjectionSpec{2, 1}, CellWeighting::kRaw, ents, {1, 0, 0}, {}),
               InvalidArgument);
}

TEST(SemanticMatrixTest, KindRangesPartitionRows) {
  const SemanticMatrix m = TenEntities();
  EXPECT_EQ(m.kind_range(EntityKind::kTerm), (std::pair<std::size_t, std::size_t>{0, 6}));
  EXPECT_EQ(m.kind_range(EntityKind::kAuthor), (std::pair<std::size_t, std::size_t>{6, 8}));
  EXPECT_EQ(m.kind_range(EntityKind::kSubject).first, m.kind_range(EntityKind::kSubject).second);
  EXPECT_EQ(m.find({EntityKind::kAuthor, "k7"}), 7u);
  EXPECT_FALSE(m.find({EntityKind::kAuthor, "k0"}).has_value());
}

}  // namespace
}  // namespace resonance
