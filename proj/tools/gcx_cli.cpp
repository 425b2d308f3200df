#include <omp.h>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "gcx/cache.hpp"
#include "gcx/verify.hpp"

using namespace gcx;

namespace {

struct Global {
  std::string cache_dir;
  bool no_cache = false;
  int threads = 0;
  uint64_t seed = 1;
  size_t max_stratum = Limits{}.max_stratum;
  int max_vertices = Limits{}.max_vertices;
  std::string format = "markdown";
};

struct SpecArgs {
  std::string variant, family, side = "connected", parity;
  int g = -1, M = 0, W = 1, m = 0;
};

void add_spec_options(CLI::App* c, SpecArgs& a) {
  c->add_option("--variant", a.variant, "gc1tp | gc1 | gcex");
  c->add_option("--family", a.family, "jtp | j | k (stable two-coloured complexes)");
  c->add_option("--side", a.side, "connected | ce")->check(CLI::IsMember({"connected", "ce"}));
  c->add_option("--g", a.g, "genus (stable families: only enters the K differential, default 6)");
  c->add_option("--parity", a.parity, "odd | even")->check(CLI::IsMember({"odd", "even"}));
  c->add_option("--W", a.W, "weight")->check(CLI::PositiveNumber);
  c->add_option("--M", a.M, "number of legs (stable families)")->check(CLI::NonNegativeNumber);
}

// m representative: --m if given, else the parity (odd -> 1, even -> 2).
int resolve_m(const SpecArgs& a) {
  if (a.m != 0) {
    if (!a.parity.empty() && ((a.m & 1) != (a.parity == "odd")))
      throw CLI::ValidationError("--m " + std::to_string(a.m) + " contradicts --parity " + a.parity);
    return a.m;
  }
  return a.parity == "even" ? 2 : 1;
}

bool is_stable(const SpecArgs& a) {
  if (!a.family.empty() && !a.variant.empty()) throw CLI::ValidationError("give either --variant or --family");
  if (a.family.empty() && a.variant.empty()) throw CLI::ValidationError("one of --variant or --family is required");
  return !a.family.empty();
}

ComplexSpec complex_spec(const SpecArgs& a) {
  if (a.g < 0) throw CLI::ValidationError("--g is required");
  return ComplexSpec{parse_variant(a.variant), a.side == "ce" ? Side::CE : Side::Connected, a.g, resolve_m(a) , a.W};
}

StableSpec stable_spec(const SpecArgs& a) { return StableSpec{parse_family(a.family), a.M, a.W, resolve_m(a)}; }

std::string summary(const ChainBasis& B) {
  std::string s;
  for (const auto& [E, v] : B.strata) {
    if (v.empty()) continue;
    if (!s.empty()) s += ", ";
    s += "E=" + std::to_string(E) + ": " + std::to_string(v.size());
  }
  return s.empty() ? "empty" : s;
}

// --- table weight1 ---------------------------------------------------------

// Homology summands by E, read off the equivariant Euler characteristic: a
// summand with sign (-1)^E sits at the unique E of that parity carrying
// homology.  Returns nullopt when the placement is ambiguous.
std::optional<std::map<int, std::vector<Weight>>> weight1_cell(Cache* cache, Variant v, int m, int g, const Limits& lim,
                                                              const RankOptions& ro) {
  ComplexSpec s{v, Side::Connected, g, m, 1};
  auto rep = cached_cohomology(cache, s, lim, ro);
  auto B = cached_basis(cache, s, lim);
  const Group G = group_for_parity(m);
  std::map<int, std::vector<int>> byparity;
  for (const auto& [E, d] : rep.strata)
    if (d.homology) byparity[E & 1].push_back(E);
  std::map<int, std::vector<Weight>> out;
  std::map<int, long> dims;
  for (const auto& [w, c] : decompose(G, equivariant_euler(B, g))) {
    const int par = c > 0 ? 0 : 1;
    auto it = byparity.find(par);
    if (it == byparity.end() || it->second.size() != 1) return std::nullopt;
    const int E = it->second[0];
    for (long k = 0; k < std::labs(c); ++k) out[E].push_back(w);
    dims[E] += std::labs(c) * weyl_dim(G, w, g);
  }
  for (const auto& [E, d] : rep.strata)
    if (d.homology != (dims.count(E) ? dims[E] : 0)) return std::nullopt;
  return out;
}

std::string shift_label(int E) {
  const int k = -1 - E;  // [m - 1 - E]
  if (k == 0) return "[m]";
  return k > 0 ? "[m+" + std::to_string(k) + "]" : "[m-" + std::to_string(-k) + "]";
}

std::string cell_text(const std::optional<std::map<int, std::vector<Weight>>>& cell) {
  if (!cell) return "?";
  std::string s;
  for (const auto& [E, ws] : *cell)
    for (const auto& w : ws) {
      if (!s.empty()) s += " ⊕ ";
      s += "V(" + weight_label(w) + ")" + shift_label(E);
    }
  return s.empty() ? "0" : s;
}

int cmd_table(const Global& gl, Cache* cache, const std::string& name, const std::string& parity, int gmax) {
  if (name != "weight1") {
    std::cerr << "unknown table: " << name << " (available: weight1)\n";
    return 2;
  }
  const int m = parity == "even" ? 2 : 1;
  Limits lim{gl.max_stratum, gl.max_vertices};
  RankOptions ro;
  ro.seed = gl.seed;
  const std::vector<Variant> vs = {Variant::GC1TP, Variant::GC1, Variant::GCEX};
  std::vector<std::vector<std::string>> cells(vs.size());
  for (size_t i = 0; i < vs.size(); ++i)
    for (int g = 0; g <= gmax; ++g) cells[i].push_back(cell_text(weight1_cell(cache, vs[i], m, g, lim, ro)));
  // collapse identical trailing columns into "g>=k"
  int first = gmax;
  while (first > 0) {
    bool same = true;
    for (const auto& row : cells) same = same && row[first - 1] == row[gmax];
    if (!same) break;
    --first;
  }
  std::vector<std::string> head;
  for (int g = 0; g < first; ++g) head.push_back("g=" + std::to_string(g));
  head.push_back(first == gmax ? "g=" + std::to_string(gmax) : "g≥" + std::to_string(first));
  if (gl.format == "json") {
    json j;
    j["schema"] = kReportSchema;
    j["table"] = "weight1";
    j["parity"] = parity;
    j["columns"] = head;
    for (size_t i = 0; i < vs.size(); ++i) {
      json row = json::array();
      for (int g = 0; g <= first; ++g) row.push_back(cells[i][g]);
      j["rows"][to_string(vs[i])] = row;
    }
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  const bool csv = gl.format == "csv";
  auto line = [&](const std::string& label, const std::vector<std::string>& v) {
    if (csv) {
      std::cout << label;
      for (const auto& x : v) std::cout << ",\"" << x << "\"";
      std::cout << "\n";
    } else {
      std::cout << "| " << label;
      for (const auto& x : v) std::cout << " | " << x;
      std::cout << " |\n";
    }
  };
  line(csv ? "variant" : "", head);
  if (!csv) {
    std::cout << "|---";
    for (size_t k = 0; k < head.size(); ++k) std::cout << "|---";
    std::cout << "|\n";
  }
  for (size_t i = 0; i < vs.size(); ++i)
    line(to_string(vs[i]), std::vector<std::string>(cells[i].begin(), cells[i].begin() + first + 1));
  return 0;
}

// --- verify ----------------------------------------------------------------

int cmd_verify(const Global& gl, Cache* cache, std::vector<std::string> names, bool all,
               const std::vector<std::string>& kv, const std::string& report_path) {
  if (all)
    for (const auto& s : scenarios()) names.push_back(s.name);
  if (names.empty()) {
    std::cerr << "verify: give a scenario name or --all\n";
    return 2;
  }
  Params overrides;
  for (const auto& p : kv) {
    auto eq = p.find('=');
    if (eq == std::string::npos) {
      std::cerr << "verify: --param expects key=value, got " << p << "\n";
      return 2;
    }
    overrides[p.substr(0, eq)] = std::stol(p.substr(eq + 1));
  }
  Limits lim{gl.max_stratum, gl.max_vertices};
  RankOptions ro;
  ro.seed = gl.seed;
  Report rep;
  for (const auto& n : names) {
    // with --all, parameters apply to the scenarios that declare them
    Params mine;
    if (all) {
      for (const auto& s : scenarios())
        if (s.name == n)
          for (const auto& [k, v] : overrides)
            if (s.defaults.count(k)) mine[k] = v;
    } else {
      mine = overrides;
    }
    try {
      rep.runs.push_back(run_scenario(n, mine, cache, lim, ro));
    } catch (const UnknownScenario& e) {
      std::cerr << e.what() << "\n";
      return 2;
    } catch (const std::invalid_argument& e) {
      std::cerr << e.what() << "\n";
      return 2;
    }
    const auto& r = rep.runs.back();
    if (gl.format == "json") continue;
    std::cout << to_string(r.status()) << "  " << r.name << "  (" << r.checks.size() << " checks, " << std::fixed
              << std::setprecision(1) << r.seconds << " s, " << r.cache_hits << " cache hits)\n";
    for (const auto& c : r.checks) {
      std::cout << "    " << to_string(c.status) << "  " << c.description;
      if (c.status == Status::Fail)
        std::cout << "\n        computed " << c.computed.dump() << ", expected " << c.expected.dump();
      if (!c.reason.empty()) std::cout << "\n        " << c.reason;
      if (c.status != Status::Pass && !c.repro.empty()) std::cout << "\n        repro: " << c.repro;
      std::cout << "\n";
    }
  }
  json j = rep;
  if (gl.format == "json") std::cout << j.dump(2) << "\n";
  if (!report_path.empty()) {
    std::ofstream f(report_path);
    if (!f) {
      std::cerr << "cannot write report " << report_path << "\n";
      return 2;
    }
    f << j.dump(2) << "\n";
  }
  return rep.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gcx: decorated graph complexes of surfaces, exact cohomology and checks"};
  app.require_subcommand(1);
  Global gl;
  app.add_option("--cache-dir", gl.cache_dir, "cache root (default $GCX_CACHE_DIR, else ./gcx-cache)");
  app.add_flag("--no-cache", gl.no_cache, "do not read or write the cache");
  app.add_option("--threads", gl.threads, "OpenMP threads (0 = runtime default)")->check(CLI::NonNegativeNumber);
  app.add_option("--seed", gl.seed, "seed for the prime draw of modular ranks");
  app.add_option("--max-stratum", gl.max_stratum, "largest stratum enumerated before giving up");
  app.add_option("--max-vertices", gl.max_vertices, "largest vertex count enumerated");
  app.add_option("--format", gl.format, "markdown | csv | json")->check(CLI::IsMember({"markdown", "csv", "json"}));

  SpecArgs bs;
  bool bjson = false, bsummary = false;
  auto* basis = app.add_subcommand("basis", "enumerate a chain basis");
  add_spec_options(basis, bs);
  basis->add_option("--m", bs.m, "representative m (parity only)");
  auto* jf = basis->add_flag("--json", bjson, "print the basis document {spec, strata}");
  basis->add_flag("--summary", bsummary, "print stratum sizes (default)")->excludes(jf);

  SpecArgs cs;
  bool eraw = false;
  auto* coh = app.add_subcommand("cohomology", "homology dimensions by degree");
  add_spec_options(coh, cs);
  coh->add_option("--m", cs.m, "m used for the degree conversion");
  coh->add_flag("--e-number", eraw, "print raw strata by E-number");

  std::vector<std::string> vnames, kv;
  std::string report;
  bool vall = false;
  auto* ver = app.add_subcommand("verify", "run verification scenarios");
  ver->add_option("names", vnames, "scenario names");
  ver->add_flag("--all", vall, "run every registered scenario");
  ver->add_option("--param", kv, "override a scenario parameter, key=value")->allow_extra_args(false);
  ver->add_option("--report", report, "write the JSON report to this file");
  bool vlist = false;
  ver->add_flag("--list", vlist, "list scenarios and their parameters");

  std::string tname, tparity = "odd";
  int tgmax = 4;
  auto* tab = app.add_subcommand("table", "emit a cohomology table");
  tab->add_option("name", tname, "weight1")->required();
  tab->add_option("--parity", tparity, "odd | even")->check(CLI::IsMember({"odd", "even"}));
  tab->add_option("--gmax", tgmax, "largest genus")->check(CLI::NonNegativeNumber);

  CLI11_PARSE(app, argc, argv);

  if (gl.threads > 0) omp_set_num_threads(gl.threads);
  std::optional<Cache> cache_store;
  if (!gl.no_cache) cache_store.emplace(resolve_cache_root(gl.cache_dir));
  Cache* cache = cache_store ? &*cache_store : nullptr;
  const Limits lim{gl.max_stratum, gl.max_vertices};
  RankOptions ro;
  ro.seed = gl.seed;

  try {
    if (*basis) {
      ChainBasis B;
      json doc;
      if (is_stable(bs)) {
        auto s = stable_spec(bs);
        B = cached_basis(cache, s, lim);
        doc = basis_document(s, B);
      } else {
        auto s = complex_spec(bs);
        B = cached_basis(cache, s, lim);
        doc = basis_document(s, B);
      }
      if (bjson || gl.format == "json") std::cout << doc.dump(2) << "\n";
      else std::cout << summary(B) << "\n";
      return 0;
    }
    if (*coh) {
      DimReport r;
      bool gc_side = false;
      int m = resolve_m(cs);
      if (is_stable(cs)) {
        r = cached_stable_cohomology(cache, stable_spec(cs), cs.g < 0 ? 6 : cs.g, lim, ro);
      } else {
        auto s = complex_spec(cs);
        r = cached_cohomology(cache, s, lim, ro);
        gc_side = s.side == Side::Connected;
      }
      if (gl.format == "json") {
        json j = r;
        if (!eraw) j["degrees"] = r.by_degree(m, gc_side);
        std::cout << j.dump(2) << "\n";
        return 0;
      }
      if (eraw) {
        for (const auto& [E, d] : r.strata)
          std::cout << "E=" << E << ": dim " << d.dim << ", rank " << d.rank_out << ", homology " << d.homology << "\n";
      } else {
        auto deg = r.by_degree(m, gc_side);
        for (auto it = deg.rbegin(); it != deg.rend(); ++it)
          std::cout << "degree " << it->first << ": " << it->second << "\n";
      }
      return 0;
    }
    if (*ver) {
      if (vlist) {
        for (const auto& s : scenarios()) {
          std::cout << s.name << "  " << s.anchor << "\n   ";
          for (const auto& [k, v] : s.defaults) std::cout << " " << k << "=" << v;
          std::cout << "\n";
        }
        return 0;
      }
      return cmd_verify(gl, cache, vnames, vall, kv, report);
    }
    if (*tab) return cmd_table(gl, cache, tname, tparity, tgmax);
  } catch (const ResourceLimit& e) {
    std::cerr << "resource cap exceeded: " << e.what() << " (" << e.produced << " produced)\n";
    return 3;
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
