#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "json.hpp"

#include "gcx/complex.hpp"
#include "gcx/enumerate.hpp"
#include "gcx/lie.hpp"
#include "gcx/linalg.hpp"
#include "gcx/rep.hpp"

namespace gcx {

using json = nlohmann::json;

// Bumping this invalidates every cache entry.
inline constexpr const char* kCacheVersion = "v1";
inline constexpr int kReportSchema = 1;

// Cache root: explicit flag, else $GCX_CACHE_DIR, else ./gcx-cache.
std::filesystem::path resolve_cache_root(const std::string& flag);

// 128-bit content hash as 32 hex digits.
std::string content_hash(const std::string& data);

// Content-addressed JSON store under <root>/<version>/<key[0:2]>/<key>.
// Writes go to a temporary file in the same directory and are renamed into
// place; entries whose checksum does not match are treated as misses.
class Cache {
 public:
  explicit Cache(std::filesystem::path root, std::string version = kCacheVersion);

  std::string key_for(const std::string& descriptor) const;
  std::filesystem::path path_for(const std::string& key) const;
  std::optional<json> get(const std::string& descriptor);
  void put(const std::string& descriptor, const json& payload);

  size_t hits() const { return hits_; }
  size_t misses() const { return misses_; }
  const std::filesystem::path& root() const { return root_; }

 private:
  std::filesystem::path root_;
  std::string version_;
  size_t hits_ = 0;
  size_t misses_ = 0;
};

void to_json(json& j, const ComplexSpec& s);
void from_json(const json& j, ComplexSpec& s);
void to_json(json& j, const StableSpec& s);
void from_json(const json& j, StableSpec& s);
void to_json(json& j, const ChainBasis& b);
void from_json(const json& j, ChainBasis& b);
void to_json(json& j, const SparseIntMatrix& M);
void from_json(const json& j, SparseIntMatrix& M);
void to_json(json& j, const DimReport& r);
void from_json(const json& j, DimReport& r);
void to_json(json& j, const GradedDims& d);
void from_json(const json& j, GradedDims& d);

// Decomposition as a list of [coefficient vector, multiplicity].
json decomposition_json(const std::vector<std::pair<Weight, long>>& dec);

// {spec, strata: {E: [encodings]}}
json basis_document(const ComplexSpec& spec, const ChainBasis& B);
json basis_document(const StableSpec& spec, const ChainBasis& B);

// Enumeration and homology through an optional cache.
ChainBasis cached_basis(Cache* cache, const ComplexSpec& spec, const Limits& lim = {});
ChainBasis cached_basis(Cache* cache, const StableSpec& spec, const Limits& lim = {});
DimReport cached_cohomology(Cache* cache, const ComplexSpec& spec, const Limits& lim = {}, const RankOptions& ro = {});
DimReport cached_stable_cohomology(Cache* cache, const StableSpec& spec, int g, const Limits& lim = {},
                                   const RankOptions& ro = {});

}  // namespace gcx
