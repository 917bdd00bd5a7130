#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ccsp/core.hpp"

namespace ccsp {

struct GenParams {
  int n = 1;
  int m = 1;
  std::uint64_t seed = 1;
  long long value_cap = 100;     // max misrepresentation value
  double tie_probability = 0.25; // chance an outward step stays flat
  int d = 0;                     // deletion-set size for nearly-SP instances
  int min_interval_len = 0;      // approval interval length bounds; max < 0 means m
  int max_interval_len = -1;

  void validate() const;
};

// Seeded valley-shaped rows along a random axis; always passes verify_sp_axis.
std::pair<MisrepProfile<long long>, Axis> gen_sp_misrep(const GenParams& params);

// Seeded random axis intervals (possibly empty); always passes
// verify_candidate_intervals.
std::pair<ApprovalProfile, Axis> gen_ci_approvals(const GenParams& params);

struct NearlySpMisrep {
  MisrepProfile<long long> profile;  // over all m candidates
  Axis axis;                         // over the m-d kept candidates
  std::vector<CandidateId> deleted;  // sorted
};

struct NearlySpApprovals {
  ApprovalProfile approvals;
  Axis axis;
  std::vector<CandidateId> deleted;
};

// SP core of m-d candidates plus d unconstrained extra candidates; the
// restriction to the kept candidates passes the structural check.
NearlySpMisrep gen_nearly_sp_misrep(const GenParams& params);
NearlySpApprovals gen_nearly_sp_approvals(const GenParams& params);

}  // namespace ccsp
