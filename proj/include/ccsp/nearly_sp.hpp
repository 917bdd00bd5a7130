#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ccsp/cc_sp.hpp"
#include "ccsp/core.hpp"
#include "ccsp/errors.hpp"
#include "ccsp/thiele.hpp"

namespace ccsp {

// ---------------------------------------------------------------------------
// Chamberlin-Courant with a given candidate-deletion set.
// ---------------------------------------------------------------------------
template <ScoreType S>
struct CcDeletionInstance {
  MisrepProfile<S> profile;               // over all m candidates
  std::vector<CandidateId> deletion_set;  // D, sorted
  Axis axis;                              // over C \ D, original ids
  int k = 1;

  void validate() const {
    if (static_cast<int>(deletion_set.size()) > profile.m - 1)
      throw input_error("deletion set must leave at least one candidate");
    auto restricted = restrict_after_deletion(profile, deletion_set);
    Axis reduced = reindex_axis(axis, restricted.kept_ids);
    if (!verify_sp_axis(restricted.profile, reduced).ok)
      throw input_error("restricted profile is not single-peaked on the given axis");
  }
};

// r'(v,c) = min(r(v,W_D), r(v,c)) over the kept candidates; empty W_D leaves
// the restriction untouched (r(v,empty) acts as +infinity).
template <ScoreType S>
RestrictedProfile<S> reduce_cc_with_preelected(const MisrepProfile<S>& profile,
                                               const std::vector<CandidateId>& deletion_set,
                                               const std::vector<CandidateId>& preelected) {
  for (CandidateId c : preelected) {
    bool in_d = false;
    for (CandidateId dcand : deletion_set) in_d = in_d || dcand == c;
    if (!in_d) throw input_error("pre-elected winners must come from the deletion set");
  }
  RestrictedProfile<S> restricted = restrict_after_deletion(profile, deletion_set);
  if (preelected.empty()) return restricted;
  for (int v = 0; v < profile.n; ++v) {
    S cap = profile.at(v, preelected.front());
    for (std::size_t i = 1; i < preelected.size(); ++i)
      cap = std::min(cap, profile.at(v, preelected[i]));
    for (CandidateId c = 1; c <= restricted.profile.m; ++c) {
      S& cell = restricted.profile.at(v, c);
      cell = std::min(cell, cap);
    }
  }
  return restricted;
}

template <ScoreType S>
struct CcDeletionOutcome {
  CcResult<S> result;
  std::uint64_t subsets_considered = 0;  // sum over i<=min(k,d) of C(d,i)
};

// Enumerates every W_D subset of D with |W_D| <= k, solves the reduced
// single-peaked instance for the remaining seats, and keeps the best
// committee: smallest objective, then lexicographically smallest members.
// Subsets are independent; the loop runs across threads with a deterministic
// reduction.
template <ScoreType S>
CcDeletionOutcome<S> solve_cc_with_deletion_set(const CcDeletionInstance<S>& instance,
                                                PathAlgorithm algo = PathAlgorithm::smawk) {
  if (instance.k < 1 || instance.k > instance.profile.m)
    throw input_error("committee size k out of range");
  instance.validate();
  const auto& dset = instance.deletion_set;
  const int d = static_cast<int>(dset.size());
  if (d >= 64) throw input_error("deletion set too large to enumerate");
  const std::uint64_t masks = 1ULL << d;
  const int kept_count = instance.profile.m - d;

  bool found = false;
  CcResult<S> best{};
  std::uint64_t considered = 0;
#ifdef _OPENMP
#pragma omp parallel
#endif
  {
    bool local_found = false;
    CcResult<S> local{};
    std::uint64_t local_considered = 0;
#ifdef _OPENMP
#pragma omp for schedule(dynamic, 1) nowait
#endif
    for (std::int64_t mask_s = 0; mask_s < static_cast<std::int64_t>(masks); ++mask_s) {
      const auto mask = static_cast<std::uint64_t>(mask_s);
      const int picked = std::popcount(mask);
      if (picked > instance.k) continue;
      ++local_considered;
      std::vector<CandidateId> preelected;
      for (int b = 0; b < d; ++b)
        if (mask & (1ULL << b)) preelected.push_back(dset[static_cast<std::size_t>(b)]);

      std::optional<CcResult<S>> cand;
      if (picked == instance.k) {
        Committee committee(preelected);
        cand = CcResult<S>{committee, misrep_of_committee(instance.profile, committee)};
      } else if (instance.k - picked <= kept_count) {
        RestrictedProfile<S> reduced =
            reduce_cc_with_preelected(instance.profile, dset, preelected);
        Axis reduced_axis = reindex_axis(instance.axis, reduced.kept_ids);
        CcSpInstance<S> sub{reduced.profile, reduced_axis, instance.k - picked, std::nullopt};
        CcResult<S> sub_result = solve_cc_sp(sub, algo);
        std::vector<CandidateId> members = preelected;
        for (CandidateId c : sub_result.committee.members)
          members.push_back(reduced.kept_ids[static_cast<std::size_t>(c - 1)]);
        cand = CcResult<S>{Committee(std::move(members)), sub_result.objective};
      }
      if (cand && (!local_found || cand->objective < local.objective ||
                   (cand->objective == local.objective &&
                    cand->committee.members < local.committee.members))) {
        local_found = true;
        local = *cand;
      }
    }
#ifdef _OPENMP
#pragma omp critical
#endif
    {
      considered += local_considered;
      if (local_found &&
          (!found || local.objective < best.objective ||
           (local.objective == best.objective && local.committee.members < best.committee.members))) {
        found = true;
        best = local;
      }
    }
  }
  if (!found) throw internal_error("deletion solver produced no committee");
  return {best, considered};
}

// ---------------------------------------------------------------------------
// Generalized Thiele with a given candidate-deletion set.
// ---------------------------------------------------------------------------
struct ThieleDeletionInstance {
  ApprovalProfile approvals;
  ThieleWeightSet weights;
  std::vector<CandidateId> deletion_set;  // sorted
  Axis axis;                              // over C \ D, original ids
  int k = 1;
};

// One record per solved pre-election, for the utility-decomposition checks.
struct ThieleSubsetAudit {
  std::vector<CandidateId> preelected;
  Rational base_utility;
  Rational sub_objective;
  Committee assembled;
};

struct ThieleDeletionOutcome {
  ThieleResult result;
  std::uint64_t subsets_considered = 0;
  std::vector<ThieleSubsetAudit> audit;  // filled only when requested
};

// w-hat_i = w_{i + overlap} per voter; sequences must be long enough.
ThieleWeightSet shift_weights(const ThieleWeightSet& weights, const std::vector<int>& overlaps);

ThieleDeletionOutcome solve_thiele_with_deletion_set(const ThieleDeletionInstance& instance,
                                                     bool record_audit = false);

}  // namespace ccsp
