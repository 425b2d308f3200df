#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>

#include "catch_amalgamated.hpp"
#include "gcx/cache.hpp"
#include "gcx/verify.hpp"

using namespace gcx;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& tag) {
  auto p = fs::temp_directory_path() / ("gcx-test-" + tag + "-" + std::to_string(::getpid()));
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

struct Run {
  int code;
  std::string out;
};

Run run_cli(const std::string& args) {
  std::string cmd = std::string(GCX_CLI_PATH) + " " + args + " 2>&1";
  FILE* f = popen(cmd.c_str(), "r");
  REQUIRE(f);
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, f)) > 0) out.append(buf, n);
  int st = pclose(f);
  return {WEXITSTATUS(st), out};
}

template <class T>
T round_trip(const T& x) {
  json j = x;
  return json::parse(j.dump()).get<T>();
}

}  // namespace

TEST_CASE("JSON round trips") {
  ComplexSpec s{Variant::GCEX, Side::CE, 3, 2, 2};
  auto s2 = round_trip(s);
  CHECK(s2.variant == s.variant);
  CHECK(s2.side == s.side);
  CHECK(s2.g == 3);
  CHECK(s2.m % 2 == 0);
  CHECK(s2.W == 2);

  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    std::uniform_int_distribution<int> d(0, 12), v(-5, 5);
    SparseIntMatrix M(d(rng), d(rng));
    for (int c = 0; c < M.cols; ++c)
      for (int r = 0; r < M.rows; ++r)
        if (d(rng) < 3) M.add(r, c, v(rng));
    M.normalize();
    CHECK(round_trip(M) == M);
  }

  auto B = enumerate_basis(ComplexSpec{Variant::GC1TP, Side::Connected, 2, 1, 2});
  CHECK(round_trip(B) == B);
  auto R = cohomology_dims(ComplexSpec{Variant::GC1, Side::Connected, 3, 1, 1});
  CHECK(round_trip(R) == R);
  auto L = wgfr_dims(3, 2, 4);
  CHECK(round_trip(L) == L);
}

TEST_CASE("cache root resolution: flag, then environment, then default") {
  ::setenv("GCX_CACHE_DIR", "/tmp/from-env", 1);
  CHECK(resolve_cache_root("/tmp/from-flag") == fs::path("/tmp/from-flag"));
  CHECK(resolve_cache_root("") == fs::path("/tmp/from-env"));
  ::unsetenv("GCX_CACHE_DIR");
  CHECK(resolve_cache_root("") == fs::path("gcx-cache"));
}

TEST_CASE("cache layout, integrity and versioning") {
  auto root = fresh_dir("layout");
  Cache c(root);
  json payload = {{"x", 1}};
  c.put("descriptor", payload);
  auto key = c.key_for("descriptor");
  CHECK(key.size() == 32);
  CHECK(c.path_for(key) == root / kCacheVersion / key.substr(0, 2) / key);
  CHECK(fs::exists(c.path_for(key)));
  CHECK(c.get("descriptor") == payload);
  CHECK(c.hits() == 1);
  CHECK_FALSE(c.get("other").has_value());
  CHECK(c.misses() == 1);

  Cache bumped(root, "v-next");
  CHECK_FALSE(bumped.get("descriptor").has_value());

  // a damaged entry is a miss, not an error
  {
    std::ofstream f(c.path_for(key), std::ios::app);
    f << "garbage";
  }
  CHECK_FALSE(c.get("descriptor").has_value());
  fs::remove_all(root);
}

TEST_CASE("cold and warm runs agree") {
  auto root = fresh_dir("warm");
  ComplexSpec s{Variant::GCEX, Side::Connected, 3, 1, 2};
  Cache cold(root);
  auto a = cached_cohomology(&cold, s);
  auto ba = cached_basis(&cold, s);
  CHECK(cold.hits() <= 1);
  Cache warm(root);
  auto b = cached_cohomology(&warm, s);
  auto bb = cached_basis(&warm, s);
  CHECK(warm.hits() == 2);
  CHECK(a == b);
  CHECK(ba == bb);
  CHECK(a == cohomology_dims(s));
  fs::remove_all(root);
}

TEST_CASE("scenario registry") {
  CHECK_THROWS_AS(run_scenario("nosuch"), UnknownScenario);
  CHECK_THROWS_AS(run_scenario("cgamma", {{"nosuch", 1}}), std::invalid_argument);
  auto r = run_scenario("cgamma", {{"cores", 5}});
  CHECK(r.status() == Status::Pass);
  CHECK(r.checks.size() == 6);
  json j = r;
  CHECK(j["status"] == "PASS");
  CHECK(j["params"]["cores"] == 5);
  // idempotent: identical checks on a rerun
  json k = run_scenario("cgamma", {{"cores", 5}});
  CHECK(j["checks"] == k["checks"]);
}

TEST_CASE("weight-1 expectations") {
  CHECK(weight1_expected(Variant::GC1TP, 1, 0).empty());
  auto e = weight1_expected(Variant::GCEX, 1, 1);
  REQUIRE(e.size() == 1);
  CHECK(e[0].E == -1);
  CHECK(weight1_expected(Variant::GC1, 2, 5).size() == 2);
}

TEST_CASE("command line") {
  auto root = fresh_dir("cli");
  const std::string cd = "--cache-dir " + root.string() + " ";

  auto b = run_cli(cd + "basis --variant gc1tp --g 3 --parity odd --W 1 --summary");
  CHECK(b.code == 0);
  CHECK(b.out == "E=0: 20, E=1: 6\n");
  CHECK(run_cli(cd + "basis --variant gc1 --g 0 --W 1").out == "empty\n");

  auto js = run_cli(cd + "basis --variant gc1tp --g 1 --parity odd --W 1 --json");
  CHECK(js.code == 0);
  auto doc = json::parse(js.out);
  CHECK(doc.contains("spec"));
  CHECK(doc.contains("strata"));

  CHECK(run_cli(cd + "cohomology --variant gc1tp --g 3 --parity odd --W 1 --m 1").out == "degree 0: 14\n");
  CHECK(run_cli(cd + "cohomology --variant gc1tp --g 3 --parity odd --W 1 --m 3").out == "degree -2: 14\n");
  CHECK(run_cli(cd + "cohomology --variant gc1 --g 0 --W 1 --m 1").out.empty());
  CHECK(run_cli(cd + "cohomology --variant gc1tp --g 3 --parity even --W 1 --m 1").code != 0);

  auto v = run_cli(cd + "verify nosuch");
  CHECK(v.code != 0);

  auto report = root / "report.json";
  auto w = run_cli(cd + "verify weight1_tables --param gmax=3 --report " + report.string());
  CHECK(w.code == 0);
  CHECK(w.out.rfind("PASS  weight1_tables", 0) == 0);
  std::ifstream rf(report);
  auto rj = json::parse(rf);
  CHECK(rj["ok"] == true);
  CHECK(rj["schema"] == kReportSchema);
  CHECK(rj["runs"][0]["params"]["gmax"] == 3);

  auto t = run_cli(cd + "table weight1 --parity even");
  CHECK(t.code == 0);
  CHECK(t.out.find("|  | g=0 | g≥1 |") == 0);
  CHECK(t.out.find("| gc1 | 0 | V(λ1)[m-1] ⊕ V(3λ1)[m-1] |") != std::string::npos);

  auto odd = run_cli(cd + "--format csv table weight1 --parity odd");
  CHECK(odd.out.find("gc1tp,\"0\",\"V(λ1)[m-2]\",\"0\",\"V(λ3)[m-1]\"") != std::string::npos);

  auto nc = run_cli("--no-cache cohomology --variant gc1tp --g 3 --parity odd --W 1 --m 1");
  CHECK(nc.out == "degree 0: 14\n");

  auto cap = run_cli(cd + "--no-cache --max-stratum 3 basis --variant gc1tp --g 3 --W 1");
  CHECK(cap.code == 3);
  fs::remove_all(root);
}
