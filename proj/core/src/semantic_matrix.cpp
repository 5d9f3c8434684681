#include "resonance/semantic_matrix.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>

#include "resonance/error.hpp"

namespace resonance {
namespace {

constexpr std::array<char, 8> kMagic = {'R', 'S', 'N', 'I', 'D', 'X', '\r', '\n'};
constexpr std::uint64_t kMaxStringLength = 1u << 20;

static_assert(std::endian::native == std::endian::little ||
                  std::endian::native == std::endian::big,
              "mixed-endian platforms are not supported");

template <typename T>
T ToLittle(T value) {
  if constexpr (std::endian::native == std::endian::big) {
    auto bytes = std::bit_cast<std::array<unsigned char, sizeof(T)>>(value);
    std::reverse(bytes.begin(), bytes.end());
    return std::bit_cast<T>(bytes);
  }
  return value;
}

class Writer {
 public:
  explicit Writer(std::ostream& out) : out_(out) {}

  template <typename T>
  void put(T value) {
    value = ToLittle(value);
    out_.write(reinterpret_cast<const char*>(&value), sizeof(T));
  }
  void put_string(const std::string& s) {
    put<std::uint32_t>(static_cast<std::uint32_t>(s.size()));
    out_.write(s.data(), static_cast<std::streamsize>(s.size()));
  }
  void put_bytes(const char* data, std::size_t n) {
    out_.write(data, static_cast<std::streamsize>(n));
  }

 private:
  std::ostream& out_;
};

class Reader {
 public:
  explicit Reader(std::istream& in) : in_(in) {}

  template <typename T>
  T get(const char* what) {
    T value{};
    read(reinterpret_cast<char*>(&value), sizeof(T), what);
    return ToLittle(value);
  }
  std::string get_string(const char* what) {
    const auto n = get<std::uint32_t>(what);
    if (n > kMaxStringLength) throw FormatError(std::string("index: oversized ") + what);
    std::string s(n, '\0');
    read(s.data(), n, what);
    return s;
  }
  void read(char* dst, std::size_t n, const char* what) {
    in_.read(dst, static_cast<std::streamsize>(n));
    if (static_cast<std::size_t>(in_.gcount()) != n) {
      throw FormatError(std::string("index file truncated while reading ") + what);
    }
  }
  bool at_end() { return in_.peek() == std::char_traits<char>::eof(); }

 private:
  std::istream& in_;
};

}  // namespace

SemanticMatrix::SemanticMatrix(ProjectionSpec spec, CellWeighting weighting,
                               std::vector<EntityRecord> entities, std::vector<float> vectors,
                               std::vector<SolutionInfo> solutions)
    : spec_(spec),
      weighting_(weighting),
      entities_(std::move(entities)),
      vectors_(std::move(vectors)),
      solutions_(std::move(solutions)) {
  Validate(spec_);
  if (vectors_.size() != entities_.size() * spec_.dims) {
    throw InvalidArgument("semantic matrix: vector storage does not match entities x dims");
  }
  for (std::size_t i = 1; i < entities_.size(); ++i) {
    if (!(entities_[i - 1].id < entities_[i].id)) {
      throw InvalidArgument("semantic matrix: entities must be sorted and unique");
    }
  }
  norms_.resize(entities_.size());
  for (std::size_t r = 0; r < entities_.size(); ++r) {
    double sq = 0.0;
    for (float x : vector(r)) {
      if (!std::isfinite(x)) throw InvalidArgument("semantic matrix: non-finite value");
      sq += static_cast<double>(x) * x;
    }
    norms_[r] = std::sqrt(sq);
  }
  std::sort(solutions_.begin(), solutions_.end(),
            [](const SolutionInfo& a, const SolutionInfo& b) { return a.solution_id < b.solution_id; });
}

std::optional<std::size_t> SemanticMatrix::find(const EntityId& id) const {
  const auto it = std::lower_bound(
      entities_.begin(), entities_.end(), id,
      [](const EntityRecord& rec, const EntityId& key) { return rec.id < key; });
  if (it == entities_.end() || it->id != id) return std::nullopt;
  return static_cast<std::size_t>(it - entities_.begin());
}

std::pair<std::size_t, std::size_t> SemanticMatrix::kind_range(EntityKind kind) const {
  const auto lo = std::partition_point(entities_.begin(), entities_.end(),
                                       [kind](const EntityRecord& r) { return r.id.kind < kind; });
  const auto hi = std::partition_point(lo, entities_.end(),
                                       [kind](const EntityRecord& r) { return r.id.kind == kind; });
  return {static_cast<std::size_t>(lo - entities_.begin()),
          static_cast<std::size_t>(hi - entities_.begin())};
}

std::vector<std::size_t> SemanticMatrix::cluster_rows(std::string_view solution_id) const {
  std::vector<std::size_t> rows;
  const auto [first, last] = kind_range(EntityKind::kCluster);
  for (std::size_t r = first; r < last; ++r) {
    if (ClusterSolutionOf(entities_[r].id.key) == solution_id) rows.push_back(r);
  }
  return rows;
}

const SolutionInfo* SemanticMatrix::find_solution(std::string_view solution_id) const {
  for (const auto& s : solutions_) {
    if (s.solution_id == solution_id) return &s;
  }
  return nullptr;
}

void SaveIndex(const SemanticMatrix& matrix, std::ostream& out) {
  Writer w(out);
  w.put_bytes(kMagic.data(), kMagic.size());
  w.put<std::uint32_t>(kIndexFormatVersion);
  w.put<std::uint32_t>(matrix.dims());
  w.put<std::uint64_t>(matrix.projection().seed);
  w.put<std::uint8_t>(static_cast<std::uint8_t>(matrix.projection().scheme));
  w.put<std::uint8_t>(static_cast<std::uint8_t>(matrix.weighting()));
  w.put<std::uint64_t>(matrix.size());
  for (const auto& e : matrix.entities()) {
    w.put<std::uint8_t>(static_cast<std::uint8_t>(e.id.kind));
    w.put_string(e.id.key);
    w.put_string(e.label);
    w.put<std::uint64_t>(e.count);
  }
  w.put<std::uint32_t>(static_cast<std::uint32_t>(matrix.solutions().size()));
  for (const auto& s : matrix.solutions()) {
    w.put_string(s.solution_id);
    w.put_string(s.source_name);
    w.put<std::uint32_t>(s.cluster_count);
  }
  if constexpr (std::endian::native == std::endian::little) {
    w.put_bytes(reinterpret_cast<const char*>(matrix.data().data()),
                matrix.data().size_bytes());
  } else {
    for (float x : matrix.data()) w.put<std::uint32_t>(std::bit_cast<std::uint32_t>(x));
  }
  if (!out) throw FormatError("failed writing index");
}

void SaveIndex(const SemanticMatrix& matrix, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw FormatError("cannot open " + path.string() + " for writing");
  SaveIndex(matrix, out);
  out.flush();
  if (!out) throw FormatError("failed writing " + path.string());
}

SemanticMatrix LoadIndex(std::istream& in) {
  Reader r(in);
  std::array<char, kMagic.size()> magic{};
  try {
    r.read(magic.data(), magic.size(), "magic header");
  } catch (const FormatError&) {
    throw FormatError("not an index file: missing magic header");
  }
  if (magic != kMagic) throw FormatError("not an index file: bad magic header");
  const auto version = r.get<std::uint32_t>("version");
  if (version != kIndexFormatVersion) {
    throw FormatError("unsupported index format version " + std::to_string(version) +
                      " (expected " + std::to_string(kIndexFormatVersion) + ")");
  }
  ProjectionSpec spec;
  spec.dims = r.get<std::uint32_t>("dims");
  spec.seed = r.get<std::uint64_t>("seed");
  const auto scheme = r.get<std::uint8_t>("scheme");
  if (scheme != static_cast<std::uint8_t>(ProjectionScheme::kDensePlusMinusOne)) {
    throw FormatError("index: unknown projection scheme");
  }
  const auto weighting = r.get<std::uint8_t>("weighting");
  if (weighting > static_cast<std::uint8_t>(CellWeighting::kLog1p)) {
    throw FormatError("index: unknown cell weighting");
  }
  if (spec.dims < 2) throw FormatError("index: dims must be at least 2");

  const auto count = r.get<std::uint64_t>("entity count");
  std::vector<EntityRecord> entities;
  entities.reserve(std::min<std::uint64_t>(count, 1u << 20));
  for (std::uint64_t i = 0; i < count; ++i) {
    EntityRecord e;
    const auto kind = r.get<std::uint8_t>("entity kind");
    if (kind >= kAllKinds.size()) throw FormatError("index: unknown entity kind");
    e.id.kind = static_cast<EntityKind>(kind);
    e.id.key = r.get_string("entity key");
    e.label = r.get_string("entity label");
    e.count = r.get<std::uint64_t>("entity count");
    entities.push_back(std::move(e));
  }
  const auto n_solutions = r.get<std::uint32_t>("solution count");
  std::vector<SolutionInfo> solutions;
  for (std::uint32_t i = 0; i < n_solutions; ++i) {
    SolutionInfo s;
    s.solution_id = r.get_string("solution id");
    s.source_name = r.get_string("solution source");
    s.cluster_count = r.get<std::uint32_t>("solution cluster count");
    solutions.push_back(std::move(s));
  }
  std::vector<float> vectors(entities.size() * spec.dims);
  r.read(reinterpret_cast<char*>(vectors.data()), vectors.size() * sizeof(float), "vectors");
  if constexpr (std::endian::native == std::endian::big) {
    for (float& x : vectors) x = ToLittle(x);
  }
  if (!r.at_end()) throw FormatError("index: trailing bytes after vector data");

  try {
    return SemanticMatrix(spec, static_cast<CellWeighting>(weighting), std::move(entities),
                          std::move(vectors), std::move(solutions));
  } catch (const InvalidArgument& e) {
    throw FormatError(std::string("index: ") + e.what());
  }
}

SemanticMatrix LoadIndex(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open index " + path.string());
  return LoadIndex(in);
}

}  // namespace resonance
