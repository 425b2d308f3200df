#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "gcx/cache.hpp"

namespace gcx {

enum class Status { Pass, Fail, Skipped };
std::string to_string(Status s);

// Where an expected value comes from: "published" (a stated table entry or
// formula), "definition" (holds by construction), "derived" (computed from
// published data by independent arithmetic).
struct Check {
  std::string description;
  json computed;
  json expected;
  std::string source;
  Status status = Status::Pass;
  std::string reason;  // skip reason or failure note
  std::string repro;   // CLI invocation reproducing the failing piece
};

struct ScenarioRun {
  std::string name;
  std::string anchor;
  json params = json::object();
  std::vector<Check> checks;
  double seconds = 0;
  size_t cache_hits = 0;

  Status status() const;  // Fail if any check failed, Skipped if all skipped
};

struct Report {
  std::vector<ScenarioRun> runs;
  bool ok() const;
};

void to_json(json& j, const Check& c);
void to_json(json& j, const ScenarioRun& r);
void to_json(json& j, const Report& r);

using Params = std::map<std::string, long>;

class Context {
 public:
  Context(ScenarioRun& run, Params params, Cache* cache, Limits lim, RankOptions ro)
      : cache(cache), lim(lim), ro(ro), run_(run), params_(std::move(params)) {}

  long param(const std::string& key) const;
  // Pass iff computed == expected.
  void check(const std::string& desc, const json& computed, const json& expected, const std::string& source,
             const std::string& repro = "");
  // Pass iff ok; expected is a description of the requirement.
  void require(const std::string& desc, const json& computed, const json& expected, bool ok,
               const std::string& source, const std::string& repro = "");
  void skip(const std::string& desc, const std::string& reason, const std::string& repro = "");

  Cache* cache;
  Limits lim;
  RankOptions ro;

 private:
  ScenarioRun& run_;
  Params params_;
};

struct Scenario {
  std::string name;
  std::string anchor;   // the statement being checked, in words
  Params defaults;
  std::function<void(Context&)> body;
};

class UnknownScenario : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

const std::vector<Scenario>& scenarios();

// Unknown parameter names are rejected.
ScenarioRun run_scenario(const std::string& name, const Params& overrides = {}, Cache* cache = nullptr,
                         const Limits& lim = {}, const RankOptions& ro = {});

// CLI arguments reproducing a spec: "--variant gc1tp --side connected ...".
std::string cli_args(const ComplexSpec& s);
std::string cli_args(const StableSpec& s, int g);

// Weight-1 table entry: highest weight and E-number of each summand.
struct TableEntry {
  Weight weight;
  int E = 0;
};
std::vector<TableEntry> weight1_expected(Variant v, int m, int g);

}  // namespace gcx
