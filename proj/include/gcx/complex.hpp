#pragma once

#include <map>
#include <string>
#include <vector>

#include "gcx/differential.hpp"
#include "gcx/enumerate.hpp"
#include "gcx/linalg.hpp"

namespace gcx {

Rules rules_for(const ComplexSpec& spec);
Rules rules_for(const StableSpec& spec, int g);

// Matrix of d from the source stratum to the target stratum.  Every output term
// must be a target basis element; a missing one throws (enumeration hole).
SparseIntMatrix assemble(const std::vector<std::string>& source, const std::vector<std::string>& target,
                         const Rules& R);
// Single-threaded reference with the same contract.
SparseIntMatrix assemble_serial(const std::vector<std::string>& source, const std::vector<std::string>& target,
                                const Rules& R);

// All differential blocks d_E : C_E -> C_{E-1} of a basis.
std::map<int, SparseIntMatrix> assemble_all(const ChainBasis& B, const Rules& R);

// Largest |entry| of d_{E-1} d_E over all E (0 means d^2 = 0).
int64_t d2_defect(const std::map<int, SparseIntMatrix>& blocks);

struct StratumDims {
  long dim = 0;
  long rank_out = 0;  // rank of d_E : C_E -> C_{E-1}
  long homology = 0;
  bool operator==(const StratumDims&) const = default;
};

struct DimReport {
  std::string label;
  int W = 0;
  std::map<int, StratumDims> strata;
  std::vector<uint32_t> primes;

  bool operator==(const DimReport&) const = default;

  long euler_chain() const;
  long euler_homology() const;
  long total_homology() const;
  std::vector<int> support() const;  // E with nonzero homology
  // Homology by cohomological degree of the dual side, 1 - mW + E for
  // connected generators and mW - E (chain side) otherwise.
  std::map<int, long> by_degree(int m, bool gc_side) const;
};

DimReport homology_of(const ChainBasis& B, const Rules& R, const std::string& label, const RankOptions& ro = {});
DimReport cohomology_dims(const ComplexSpec& spec, const Limits& lim = {}, const RankOptions& ro = {});
DimReport stable_cohomology_dims(const StableSpec& spec, int g, const Limits& lim = {}, const RankOptions& ro = {});

std::string spec_label(const ComplexSpec& s);
std::string spec_label(const StableSpec& s);

}  // namespace gcx
