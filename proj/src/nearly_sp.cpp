#include "ccsp/nearly_sp.hpp"

#include <algorithm>
#include <bit>

namespace ccsp {

ThieleWeightSet shift_weights(const ThieleWeightSet& weights, const std::vector<int>& overlaps) {
  if (overlaps.size() != weights.rows.size())
    throw input_error("one overlap count per voter required");
  std::vector<std::vector<Rational>> rows(weights.rows.size());
  for (std::size_t v = 0; v < weights.rows.size(); ++v) {
    const auto& w = weights.rows[v];
    const int shift = overlaps[v];
    if (shift < 0 || static_cast<std::size_t>(shift) > w.size())
      throw input_error("weight sequence shorter than the requested shift");
    rows[v].assign(w.begin() + shift, w.end());
  }
  return ThieleWeightSet(std::move(rows));
}

ThieleDeletionOutcome solve_thiele_with_deletion_set(const ThieleDeletionInstance& instance,
                                                     bool record_audit) {
  const auto& approvals = instance.approvals;
  const auto& dset = instance.deletion_set;
  const int d = static_cast<int>(dset.size());
  const int k = instance.k;
  if (k < 1 || k > approvals.m) throw input_error("committee size k out of range");
  if (d > approvals.m - 1) throw input_error("deletion set must leave at least one candidate");
  if (d >= 64) throw input_error("deletion set too large to enumerate");
  if (instance.weights.voters() != approvals.n)
    throw input_error("weight sequence count does not match voter count");
  for (int v = 0; v < approvals.n; ++v)
    if (static_cast<int>(instance.weights.of(v).size()) < k)
      throw input_error("Thiele weight sequence shorter than k");

  RestrictedApprovals restricted = restrict_approvals(approvals, dset);
  Axis reduced_axis = reindex_axis(instance.axis, restricted.kept_ids);
  auto ci = verify_candidate_intervals(restricted.approvals, reduced_axis);
  if (!ci.ok)
    throw input_error("restricted approvals are not candidate intervals on the given axis");

  const int kept_count = restricted.approvals.m;
  const std::uint64_t masks = 1ULL << d;

  bool found = false;
  ThieleResult best{};
  std::uint64_t considered = 0;
  std::vector<ThieleSubsetAudit> audit;

#ifdef _OPENMP
#pragma omp parallel
#endif
  {
    bool local_found = false;
    ThieleResult local{};
    std::uint64_t local_considered = 0;
    std::vector<ThieleSubsetAudit> local_audit;
#ifdef _OPENMP
#pragma omp for schedule(dynamic, 1) nowait
#endif
    for (std::int64_t mask_s = 0; mask_s < static_cast<std::int64_t>(masks); ++mask_s) {
      const auto mask = static_cast<std::uint64_t>(mask_s);
      const int picked = std::popcount(mask);
      if (picked > k) continue;
      ++local_considered;
      std::vector<CandidateId> preelected;
      for (int b = 0; b < d; ++b)
        if (mask & (1ULL << b)) preelected.push_back(dset[static_cast<std::size_t>(b)]);

      // Utility the pre-elected winners already provide, plus per-voter
      // overlap counts used to shift the sequences.
      std::vector<int> overlaps(static_cast<std::size_t>(approvals.n), 0);
      Rational base = 0;
      for (int v = 0; v < approvals.n; ++v) {
        int x = 0;
        for (CandidateId c : preelected)
          if (approvals.approves(v, c)) ++x;
        overlaps[static_cast<std::size_t>(v)] = x;
        const auto& w = instance.weights.of(v);
        for (int i = 0; i < x; ++i) base += w[static_cast<std::size_t>(i)];
      }

      std::optional<ThieleResult> cand;
      Rational sub_objective = 0;
      if (picked == k) {
        cand = ThieleResult{Committee(preelected), base};
      } else if (k - picked <= kept_count) {
        ThieleWeightSet shifted = shift_weights(instance.weights, overlaps);
        ThieleResult sub = solve_generalized_thiele_sp(restricted.approvals, shifted,
                                                       reduced_axis, k - picked);
        sub_objective = sub.objective;
        std::vector<CandidateId> members = preelected;
        for (CandidateId c : sub.committee.members)
          members.push_back(restricted.kept_ids[static_cast<std::size_t>(c - 1)]);
        cand = ThieleResult{Committee(std::move(members)), base + sub.objective};
      }
      if (!cand) continue;
      if (record_audit)
        local_audit.push_back(ThieleSubsetAudit{preelected, base, sub_objective, cand->committee});
      if (!local_found || cand->objective > local.objective ||
          (cand->objective == local.objective &&
           cand->committee.members < local.committee.members)) {
        local_found = true;
        local = *cand;
      }
    }
#ifdef _OPENMP
#pragma omp critical
#endif
    {
      considered += local_considered;
      if (record_audit)
        audit.insert(audit.end(), local_audit.begin(), local_audit.end());
      if (local_found &&
          (!found || local.objective > best.objective ||
           (local.objective == best.objective && local.committee.members < best.committee.members))) {
        found = true;
        best = local;
      }
    }
  }
  if (!found) throw internal_error("deletion solver produced no committee");
  return {best, considered, std::move(audit)};
}

}  // namespace ccsp
