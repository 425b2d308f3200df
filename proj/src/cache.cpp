#include "gcx/cache.hpp"

#include <unistd.h>

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

namespace gcx {

namespace fs = std::filesystem;

fs::path resolve_cache_root(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("GCX_CACHE_DIR"); env && *env) return env;
  return "gcx-cache";
}

std::string content_hash(const std::string& data) {
  // two FNV-1a lanes with different offsets
  uint64_t h1 = 0xcbf29ce484222325ull, h2 = 0x84222325cbf29ce4ull;
  for (unsigned char c : data) {
    h1 = (h1 ^ c) * 0x100000001b3ull;
    h2 = (h2 ^ (c + 0x9e)) * 0x100000001b3ull;
  }
  h2 ^= h1 >> 29;
  char buf[33];
  std::snprintf(buf, sizeof buf, "%016llx%016llx", (unsigned long long)h1, (unsigned long long)h2);
  return buf;
}

Cache::Cache(fs::path root, std::string version) : root_(std::move(root)), version_(std::move(version)) {}

std::string Cache::key_for(const std::string& descriptor) const { return content_hash(version_ + "\n" + descriptor); }

fs::path Cache::path_for(const std::string& key) const { return root_ / version_ / key.substr(0, 2) / key; }

std::optional<json> Cache::get(const std::string& descriptor) {
  const auto key = key_for(descriptor);
  std::ifstream in(path_for(key));
  if (!in) {
    ++misses_;
    return std::nullopt;
  }
  try {
    json entry = json::parse(in);
    const std::string body = entry.at("payload").dump();
    if (entry.at("descriptor") != descriptor || entry.at("checksum") != content_hash(body)) {
      ++misses_;
      return std::nullopt;
    }
    ++hits_;
    return entry.at("payload");
  } catch (const std::exception&) {
    ++misses_;
    return std::nullopt;
  }
}

void Cache::put(const std::string& descriptor, const json& payload) {
  const auto key = key_for(descriptor);
  const fs::path dst = path_for(key);
  fs::create_directories(dst.parent_path());
  static std::atomic<unsigned long> counter{0};
  std::ostringstream tmpname;
  tmpname << key << ".tmp." << ::getpid() << "." << std::hash<std::thread::id>{}(std::this_thread::get_id()) << "."
          << counter++;
  const fs::path tmp = dst.parent_path() / tmpname.str();
  json entry = {{"version", version_},
                {"key", key},
                {"descriptor", descriptor},
                {"checksum", content_hash(payload.dump())},
                {"payload", payload}};
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cache: cannot write " + tmp.string());
    out << entry.dump();
    out.flush();
    if (!out) throw std::runtime_error("cache: short write " + tmp.string());
  }
  fs::rename(tmp, dst);
}

void to_json(json& j, const ComplexSpec& s) {
  j = {{"variant", to_string(s.variant)}, {"side", to_string(s.side)}, {"g", s.g},
       {"parity", (s.m & 1) ? "odd" : "even"}, {"W", s.W}};
}

void from_json(const json& j, ComplexSpec& s) {
  s.variant = parse_variant(j.at("variant").get<std::string>());
  s.side = j.at("side").get<std::string>() == "ce" ? Side::CE : Side::Connected;
  s.g = j.at("g").get<int>();
  s.m = j.at("parity").get<std::string>() == "odd" ? 1 : 2;
  s.W = j.at("W").get<int>();
}

void to_json(json& j, const StableSpec& s) {
  j = {{"family", to_string(s.family)}, {"M", s.M}, {"W", s.W}, {"parity", (s.m & 1) ? "odd" : "even"}};
}

void from_json(const json& j, StableSpec& s) {
  s.family = parse_family(j.at("family").get<std::string>());
  s.M = j.at("M").get<int>();
  s.W = j.at("W").get<int>();
  s.m = j.at("parity").get<std::string>() == "odd" ? 1 : 2;
}

void to_json(json& j, const ChainBasis& b) {
  j = json::object();
  for (const auto& [E, v] : b.strata) j[std::to_string(E)] = v;
}

void from_json(const json& j, ChainBasis& b) {
  b.strata.clear();
  for (auto it = j.begin(); it != j.end(); ++it) b.strata[std::stoi(it.key())] = it.value().get<std::vector<std::string>>();
}

void to_json(json& j, const SparseIntMatrix& M) {
  json cols = json::array();
  for (const auto& c : M.col) {
    json col = json::array();
    for (const auto& [r, v] : c) col.push_back({r, v});
    cols.push_back(col);
  }
  j = {{"rows", M.rows}, {"cols", M.cols}, {"entries", cols}};
}

void from_json(const json& j, SparseIntMatrix& M) {
  M = SparseIntMatrix(j.at("rows").get<int>(), j.at("cols").get<int>());
  const auto& cols = j.at("entries");
  if (int(cols.size()) != M.cols) throw std::invalid_argument("matrix json: column count mismatch");
  for (int c = 0; c < M.cols; ++c)
    for (const auto& e : cols[c]) M.col[c].push_back({e[0].get<int>(), e[1].get<int64_t>()});
}

void to_json(json& j, const DimReport& r) {
  json strata = json::object();
  for (const auto& [E, s] : r.strata)
    strata[std::to_string(E)] = {{"dim", s.dim}, {"rank_out", s.rank_out}, {"homology", s.homology}};
  j = {{"label", r.label}, {"W", r.W}, {"strata", strata}, {"primes", r.primes}};
}

void from_json(const json& j, DimReport& r) {
  r.label = j.at("label").get<std::string>();
  r.W = j.at("W").get<int>();
  r.strata.clear();
  for (auto it = j.at("strata").begin(); it != j.at("strata").end(); ++it) {
    StratumDims s;
    s.dim = it.value().at("dim").get<long>();
    s.rank_out = it.value().at("rank_out").get<long>();
    s.homology = it.value().at("homology").get<long>();
    r.strata[std::stoi(it.key())] = s;
  }
  r.primes = j.at("primes").get<std::vector<uint32_t>>();
}

void to_json(json& j, const GradedDims& d) {
  json a = json::array();
  for (const auto& [w, x] : d.dim) {
    auto it = d.parity.find(w);
    a.push_back({{"weight", w}, {"dim", x}, {"parity", it == d.parity.end() ? 0 : it->second}});
  }
  j = a;
}

void from_json(const json& j, GradedDims& d) {
  d = {};
  for (const auto& e : j) {
    int w = e.at("weight").get<int>();
    d.dim[w] = e.at("dim").get<long>();
    d.parity[w] = e.at("parity").get<int>();
  }
}

json decomposition_json(const std::vector<std::pair<Weight, long>>& dec) {
  json a = json::array();
  for (const auto& [w, c] : dec) a.push_back({to_fundamental(w), c});
  return a;
}

json basis_document(const ComplexSpec& spec, const ChainBasis& B) { return {{"spec", spec}, {"strata", B}}; }

json basis_document(const StableSpec& spec, const ChainBasis& B) { return {{"spec", spec}, {"strata", B}}; }

namespace {

template <class Spec, class F>
ChainBasis through_cache(Cache* cache, const Spec& spec, const std::string& kind, F compute) {
  if (!cache) return compute();
  const std::string desc = kind + ":" + json(spec).dump();
  if (auto hit = cache->get(desc)) return hit->template get<ChainBasis>();
  ChainBasis B = compute();
  cache->put(desc, B);
  return B;
}

}  // namespace

ChainBasis cached_basis(Cache* cache, const ComplexSpec& spec, const Limits& lim) {
  // limits never change a successful result, so they are not part of the key
  return through_cache(cache, spec, "basis", [&] { return enumerate_basis(spec, lim); });
}

ChainBasis cached_basis(Cache* cache, const StableSpec& spec, const Limits& lim) {
  return through_cache(cache, spec, "stable-basis", [&] { return enumerate_stable_basis(spec, lim); });
}

DimReport cached_cohomology(Cache* cache, const ComplexSpec& spec, const Limits& lim, const RankOptions& ro) {
  if (!cache) return cohomology_dims(spec, lim, ro);
  const std::string desc = "cohomology:" + json(spec).dump();
  if (auto hit = cache->get(desc)) return hit->get<DimReport>();
  ChainBasis B = cached_basis(cache, spec, lim);
  DimReport rep = homology_of(B, rules_for(spec), spec_label(spec), ro);
  rep.W = spec.W;
  cache->put(desc, rep);
  return rep;
}

DimReport cached_stable_cohomology(Cache* cache, const StableSpec& spec, int g, const Limits& lim,
                                   const RankOptions& ro) {
  if (!cache) return stable_cohomology_dims(spec, g, lim, ro);
  const std::string desc = "stable-cohomology:" + json(spec).dump() + ":g=" + std::to_string(g);
  if (auto hit = cache->get(desc)) return hit->get<DimReport>();
  ChainBasis B = cached_basis(cache, spec, lim);
  DimReport rep = homology_of(B, rules_for(spec, g), spec_label(spec) + " g=" + std::to_string(g), ro);
  rep.W = spec.W;
  cache->put(desc, rep);
  return rep;
}

}  // namespace gcx
