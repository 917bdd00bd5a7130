#include "ccsp/gen.hpp"

#include <algorithm>
#include <cstdint>

#include "ccsp/errors.hpp"
#include "ccsp/prng.hpp"

namespace ccsp {

void GenParams::validate() const {
  if (n < 0 || m < 1) throw input_error("generator needs n >= 0 and m >= 1");
  if (value_cap < 0) throw input_error("value cap must be non-negative");
  if (tie_probability < 0.0 || tie_probability > 1.0)
    throw input_error("tie probability must lie in [0,1]");
  if (d < 0 || d >= m) throw input_error("deletion-set size must satisfy 0 <= d < m");
  if (min_interval_len < 0) throw input_error("interval length bounds must be non-negative");
  if (max_interval_len >= 0 && max_interval_len < min_interval_len)
    throw input_error("interval length bounds out of order");
}

namespace {

Axis random_axis(Prng& rng, const std::vector<CandidateId>& ids) {
  std::vector<CandidateId> order = ids;
  for (std::size_t i = order.size(); i > 1; --i)
    std::swap(order[i - 1], order[rng.below(i)]);
  return Axis(std::move(order));
}

std::vector<CandidateId> id_range(int m) {
  std::vector<CandidateId> ids(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) ids[static_cast<std::size_t>(i)] = i + 1;
  return ids;
}

// Valley along axis positions: weakly decreasing to a random peak position,
// weakly increasing after it. Outward steps are 0 with the tie probability,
// otherwise 1..3, clamped at the cap.
std::vector<long long> valley_row(Prng& rng, int m, const GenParams& p) {
  std::vector<long long> vals(static_cast<std::size_t>(m));
  const int peak = static_cast<int>(rng.below(static_cast<std::uint64_t>(m)));
  const long long bottom =
      p.value_cap == 0 ? 0 : static_cast<long long>(rng.below(static_cast<std::uint64_t>(p.value_cap / 8 + 1)));
  vals[static_cast<std::size_t>(peak)] = bottom;
  auto step = [&]() -> long long {
    if (rng.chance(p.tie_probability)) return 0;
    return 1 + static_cast<long long>(rng.below(3));
  };
  for (int pos = peak - 1; pos >= 0; --pos)
    vals[static_cast<std::size_t>(pos)] =
        std::min(p.value_cap, vals[static_cast<std::size_t>(pos) + 1] + step());
  for (int pos = peak + 1; pos < m; ++pos)
    vals[static_cast<std::size_t>(pos)] =
        std::min(p.value_cap, vals[static_cast<std::size_t>(pos) - 1] + step());
  return vals;
}

std::vector<CandidateId> random_interval(Prng& rng, const Axis& axis, const GenParams& p) {
  const int m = axis.size();
  const int max_len = p.max_interval_len < 0 ? m : std::min(p.max_interval_len, m);
  const int min_len = std::min(p.min_interval_len, max_len);
  const int len = min_len + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_len - min_len + 1)));
  if (len == 0) return {};
  const int start = static_cast<int>(rng.below(static_cast<std::uint64_t>(m - len + 1)));
  std::vector<CandidateId> ids;
  ids.reserve(static_cast<std::size_t>(len));
  for (int pos = start; pos < start + len; ++pos) ids.push_back(axis.at(pos));
  return ids;
}

// Random d-subset of 1..m (sorted) via partial Fisher-Yates.
std::vector<CandidateId> random_subset(Prng& rng, int m, int d) {
  std::vector<CandidateId> pool = id_range(m);
  for (int i = 0; i < d; ++i)
    std::swap(pool[static_cast<std::size_t>(i)],
              pool[static_cast<std::size_t>(i) + rng.below(static_cast<std::uint64_t>(m - i))]);
  std::vector<CandidateId> chosen(pool.begin(), pool.begin() + d);
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

}  // namespace

std::pair<MisrepProfile<long long>, Axis> gen_sp_misrep(const GenParams& params) {
  params.validate();
  Prng rng(params.seed);
  Axis axis = random_axis(rng, id_range(params.m));
  std::vector<long long> values(static_cast<std::size_t>(params.n) *
                                static_cast<std::size_t>(params.m));
  MisrepProfile<long long> profile(params.n, params.m, std::move(values));
  for (int v = 0; v < params.n; ++v) {
    std::vector<long long> row = valley_row(rng, params.m, params);
    for (int pos = 0; pos < params.m; ++pos)
      profile.at(v, axis.at(pos)) = row[static_cast<std::size_t>(pos)];
  }
  if (!verify_sp_axis(profile, axis).ok)
    throw internal_error("generated profile failed the single-peakedness check");
  return {std::move(profile), std::move(axis)};
}

std::pair<ApprovalProfile, Axis> gen_ci_approvals(const GenParams& params) {
  params.validate();
  Prng rng(params.seed);
  Axis axis = random_axis(rng, id_range(params.m));
  std::vector<std::vector<CandidateId>> sets(static_cast<std::size_t>(params.n));
  for (int v = 0; v < params.n; ++v) sets[static_cast<std::size_t>(v)] = random_interval(rng, axis, params);
  ApprovalProfile approvals(params.n, params.m, std::move(sets));
  if (!verify_candidate_intervals(approvals, axis).ok)
    throw internal_error("generated approvals failed the interval check");
  return {std::move(approvals), std::move(axis)};
}

NearlySpMisrep gen_nearly_sp_misrep(const GenParams& params) {
  params.validate();
  Prng rng(params.seed);
  std::vector<CandidateId> deleted = random_subset(rng, params.m, params.d);
  std::vector<bool> is_deleted(static_cast<std::size_t>(params.m) + 1, false);
  for (CandidateId c : deleted) is_deleted[static_cast<std::size_t>(c)] = true;
  std::vector<CandidateId> kept;
  for (CandidateId c = 1; c <= params.m; ++c)
    if (!is_deleted[static_cast<std::size_t>(c)]) kept.push_back(c);

  Axis axis = random_axis(rng, kept);
  const int core = static_cast<int>(kept.size());
  std::vector<long long> values(static_cast<std::size_t>(params.n) *
                                static_cast<std::size_t>(params.m));
  MisrepProfile<long long> profile(params.n, params.m, std::move(values));
  for (int v = 0; v < params.n; ++v) {
    std::vector<long long> row = valley_row(rng, core, params);
    for (int pos = 0; pos < core; ++pos)
      profile.at(v, axis.at(pos)) = row[static_cast<std::size_t>(pos)];
    for (CandidateId c : deleted)
      profile.at(v, c) = static_cast<long long>(
          rng.below(static_cast<std::uint64_t>(params.value_cap) + 1));
  }
  auto restricted = restrict_after_deletion(profile, deleted);
  if (!verify_sp_axis(restricted.profile, reindex_axis(axis, restricted.kept_ids)).ok)
    throw internal_error("generated core failed the single-peakedness check");
  return {std::move(profile), std::move(axis), std::move(deleted)};
}

NearlySpApprovals gen_nearly_sp_approvals(const GenParams& params) {
  params.validate();
  Prng rng(params.seed);
  std::vector<CandidateId> deleted = random_subset(rng, params.m, params.d);
  std::vector<bool> is_deleted(static_cast<std::size_t>(params.m) + 1, false);
  for (CandidateId c : deleted) is_deleted[static_cast<std::size_t>(c)] = true;
  std::vector<CandidateId> kept;
  for (CandidateId c = 1; c <= params.m; ++c)
    if (!is_deleted[static_cast<std::size_t>(c)]) kept.push_back(c);

  Axis axis = random_axis(rng, kept);
  std::vector<std::vector<CandidateId>> sets(static_cast<std::size_t>(params.n));
  for (int v = 0; v < params.n; ++v) {
    auto ids = random_interval(rng, axis, params);
    for (CandidateId c : deleted)
      if (rng.below(2) == 0) ids.push_back(c);
    sets[static_cast<std::size_t>(v)] = std::move(ids);
  }
  ApprovalProfile approvals(params.n, params.m, std::move(sets));
  auto restricted = restrict_approvals(approvals, deleted);
  if (!verify_candidate_intervals(restricted.approvals, reindex_axis(axis, restricted.kept_ids)).ok)
    throw internal_error("generated core failed the interval check");
  return {std::move(approvals), std::move(axis), std::move(deleted)};
}

}  // namespace ccsp
