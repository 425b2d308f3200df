#include "gcx/complex.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "gcx/canon.hpp"

namespace gcx {

Rules rules_for(const ComplexSpec& spec) { return rules_for(spec.variant, spec.side, spec.m, spec.g); }

Rules rules_for(const StableSpec& spec, int g) { return rules_for(spec.family, spec.m, g); }

namespace {

std::unordered_map<std::string, int> index_of(const std::vector<std::string>& v) {
  std::unordered_map<std::string, int> idx;
  idx.reserve(v.size() * 2);
  for (size_t i = 0; i < v.size(); ++i) idx.emplace(v[i], int(i));
  return idx;
}

void fill_column(SparseIntMatrix& M, int j, const std::string& enc, const std::unordered_map<std::string, int>& idx,
                 const Rules& R) {
  auto sum = differential(decode(enc), R);
  for (const auto& [t, c] : sum) {
    auto it = idx.find(t);
    if (it == idx.end()) throw std::runtime_error("assemble: term " + t + " of d(" + enc + ") not in target basis");
    M.col[j].push_back({it->second, c});
  }
  std::sort(M.col[j].begin(), M.col[j].end());
}

}  // namespace

SparseIntMatrix assemble_serial(const std::vector<std::string>& source, const std::vector<std::string>& target,
                                const Rules& R) {
  SparseIntMatrix M(int(target.size()), int(source.size()));
  auto idx = index_of(target);
  for (size_t j = 0; j < source.size(); ++j) fill_column(M, int(j), source[j], idx, R);
  return M;
}

SparseIntMatrix assemble(const std::vector<std::string>& source, const std::vector<std::string>& target,
                         const Rules& R) {
  SparseIntMatrix M(int(target.size()), int(source.size()));
  auto idx = index_of(target);
  std::string error;
#pragma omp parallel for schedule(dynamic, 64)
  for (size_t j = 0; j < source.size(); ++j) {
    try {
      fill_column(M, int(j), source[j], idx, R);
    } catch (const std::exception& e) {
#pragma omp critical
      if (error.empty()) error = e.what();
    }
  }
  if (!error.empty()) throw std::runtime_error(error);
  return M;
}

std::map<int, SparseIntMatrix> assemble_all(const ChainBasis& B, const Rules& R) {
  std::map<int, SparseIntMatrix> out;
  static const std::vector<std::string> empty;
  for (const auto& [E, src] : B.strata) {
    auto it = B.strata.find(E - 1);
    out[E] = assemble(src, it == B.strata.end() ? empty : it->second, R);
  }
  return out;
}

int64_t d2_defect(const std::map<int, SparseIntMatrix>& blocks) {
  int64_t worst = 0;
  for (const auto& [E, d] : blocks) {
    auto it = blocks.find(E - 1);
    if (it == blocks.end() || d.rows == 0) continue;
    auto P = multiply(it->second, d);
    for (const auto& c : P.col)
      for (const auto& [r, v] : c) worst = std::max(worst, v < 0 ? -v : v);
  }
  return worst;
}

long DimReport::euler_chain() const {
  long s = 0;
  for (const auto& [E, d] : strata) s += (E % 2 == 0 ? 1 : -1) * d.dim;
  return s;
}

long DimReport::euler_homology() const {
  long s = 0;
  for (const auto& [E, d] : strata) s += (E % 2 == 0 ? 1 : -1) * d.homology;
  return s;
}

long DimReport::total_homology() const {
  long s = 0;
  for (const auto& [E, d] : strata) s += d.homology;
  return s;
}

std::vector<int> DimReport::support() const {
  std::vector<int> out;
  for (const auto& [E, d] : strata)
    if (d.homology) out.push_back(E);
  return out;
}

std::map<int, long> DimReport::by_degree(int m, bool gc_side) const {
  std::map<int, long> out;
  for (const auto& [E, d] : strata)
    if (d.homology) out[gc_side ? 1 - m * W + E : m * W - E] += d.homology;
  return out;
}

DimReport homology_of(const ChainBasis& B, const Rules& R, const std::string& label, const RankOptions& ro) {
  DimReport rep;
  rep.label = label;
  auto blocks = assemble_all(B, R);
  for (const auto& [E, d] : blocks) {
    auto rr = rank_exact(d, ro);
    rep.strata[E].dim = long(B.size(E));
    rep.strata[E].rank_out = rr.rank;
    for (uint32_t p : rr.primes_used)
      if (std::find(rep.primes.begin(), rep.primes.end(), p) == rep.primes.end()) rep.primes.push_back(p);
  }
  for (auto& [E, s] : rep.strata) {
    auto up = rep.strata.find(E + 1);
    long in = up == rep.strata.end() ? 0 : up->second.rank_out;
    s.homology = s.dim - s.rank_out - in;
  }
  return rep;
}

std::string spec_label(const ComplexSpec& s) {
  return to_string(s.variant) + "/" + to_string(s.side) + " g=" + std::to_string(s.g) +
         " parity=" + (s.m % 2 ? "odd" : "even") + " W=" + std::to_string(s.W);
}

std::string spec_label(const StableSpec& s) {
  return to_string(s.family) + " M=" + std::to_string(s.M) + " W=" + std::to_string(s.W) +
         " parity=" + (s.m % 2 ? "odd" : "even");
}

DimReport cohomology_dims(const ComplexSpec& spec, const Limits& lim, const RankOptions& ro) {
  auto B = enumerate_basis(spec, lim);
  auto rep = homology_of(B, rules_for(spec), spec_label(spec), ro);
  rep.W = spec.W;
  return rep;
}

DimReport stable_cohomology_dims(const StableSpec& spec, int g, const Limits& lim, const RankOptions& ro) {
  auto B = enumerate_stable_basis(spec, lim);
  auto rep = homology_of(B, rules_for(spec, g), spec_label(spec) + " g=" + std::to_string(g), ro);
  rep.W = spec.W;
  return rep;
}

}  // namespace gcx
