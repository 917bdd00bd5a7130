#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ccsp/errors.hpp"
#include "ccsp/rational.hpp"
#include "ccsp/score.hpp"

namespace ccsp {

// Candidates are 1-based dense integer ids; display names, when a caller has
// them, live in a sidecar map and never enter the solvers.
using CandidateId = int;

// ---------------------------------------------------------------------------
// Axis: a linear order over a candidate set, position 0 = leftmost.
// ---------------------------------------------------------------------------
struct Axis {
  std::vector<CandidateId> order;

  Axis() = default;
  explicit Axis(std::vector<CandidateId> o) : order(std::move(o)) {}

  static Axis identity(int m) {
    std::vector<CandidateId> o(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) o[static_cast<std::size_t>(i)] = i + 1;
    return Axis(std::move(o));
  }

  int size() const { return static_cast<int>(order.size()); }
  CandidateId at(int pos) const { return order[static_cast<std::size_t>(pos)]; }

  // Each candidate of 1..m exactly once.
  bool is_permutation_of(int m) const {
    if (size() != m) return false;
    std::vector<bool> seen(static_cast<std::size_t>(m) + 1, false);
    for (CandidateId c : order) {
      if (c < 1 || c > m || seen[static_cast<std::size_t>(c)]) return false;
      seen[static_cast<std::size_t>(c)] = true;
    }
    return true;
  }

  // Permutation of an explicit candidate set (used for deletion instances).
  bool covers_exactly(std::vector<CandidateId> candidates) const {
    std::sort(candidates.begin(), candidates.end());
    std::vector<CandidateId> mine = order;
    std::sort(mine.begin(), mine.end());
    if (std::adjacent_find(mine.begin(), mine.end()) != mine.end()) return false;
    return mine == candidates;
  }

  bool operator==(const Axis&) const = default;
};

// ---------------------------------------------------------------------------
// MisrepProfile: n x m matrix of non-negative misrepresentation scores.
// ---------------------------------------------------------------------------
template <ScoreType S>
struct MisrepProfile {
  int n = 0;
  int m = 0;
  std::vector<S> values;  // row-major, n*m

  MisrepProfile() = default;
  MisrepProfile(int n_, int m_, std::vector<S> vals) : n(n_), m(m_), values(std::move(vals)) {
    validate();
  }

  S at(int voter, CandidateId c) const {
    return values[static_cast<std::size_t>(voter) * static_cast<std::size_t>(m) +
                  static_cast<std::size_t>(c - 1)];
  }
  S& at(int voter, CandidateId c) {
    return values[static_cast<std::size_t>(voter) * static_cast<std::size_t>(m) +
                  static_cast<std::size_t>(c - 1)];
  }

  // Largest score in the profile (the sentinel value U); 0 for n == 0.
  S max_value() const {
    S u = S{};
    for (const S& v : values)
      if (v > u) u = v;
    return u;
  }

  void validate() const {
    if (m < 1) throw validation_error("profile needs at least one candidate");
    if (n < 0) throw validation_error("negative voter count");
    if (values.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(m))
      throw validation_error("misrepresentation matrix size mismatch");
    for (const S& v : values)
      if (!score_traits<S>::valid(v))
        throw validation_error("misrepresentation scores must be finite and non-negative");
  }

  bool operator==(const MisrepProfile&) const = default;
};

// ---------------------------------------------------------------------------
// ApprovalProfile: per-voter approval sets, stored sorted.
// ---------------------------------------------------------------------------
struct ApprovalProfile {
  int n = 0;
  int m = 0;
  std::vector<std::vector<CandidateId>> approvals;  // sorted, distinct; may be empty

  ApprovalProfile() = default;
  ApprovalProfile(int n_, int m_, std::vector<std::vector<CandidateId>> sets)
      : n(n_), m(m_), approvals(std::move(sets)) {
    for (auto& a : approvals) {
      std::sort(a.begin(), a.end());
      a.erase(std::unique(a.begin(), a.end()), a.end());
    }
    validate();
  }

  void validate() const {
    if (m < 1) throw validation_error("profile needs at least one candidate");
    if (static_cast<int>(approvals.size()) != n)
      throw validation_error("approval set count mismatch");
    for (const auto& a : approvals)
      for (CandidateId c : a)
        if (c < 1 || c > m) throw validation_error("approval of unknown candidate");
  }

  bool approves(int voter, CandidateId c) const {
    const auto& a = approvals[static_cast<std::size_t>(voter)];
    return std::binary_search(a.begin(), a.end(), c);
  }

  bool operator==(const ApprovalProfile&) const = default;
};

// ---------------------------------------------------------------------------
// ThieleWeightSet: one non-increasing weight sequence in [0,1] per voter,
// always exact rationals.
// ---------------------------------------------------------------------------
struct ThieleWeightSet {
  std::vector<std::vector<Rational>> rows;

  ThieleWeightSet() = default;
  explicit ThieleWeightSet(std::vector<std::vector<Rational>> r) : rows(std::move(r)) {
    validate();
  }

  void validate() const {
    for (const auto& w : rows) {
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] < 0 || w[i] > 1)
          throw validation_error("Thiele weights must lie in [0,1]");
        if (i + 1 < w.size() && w[i] < w[i + 1])
          throw validation_error("Thiele weight sequences must be non-increasing");
      }
    }
  }

  int voters() const { return static_cast<int>(rows.size()); }
  const std::vector<Rational>& of(int voter) const {
    return rows[static_cast<std::size_t>(voter)];
  }

  bool operator==(const ThieleWeightSet&) const = default;
};

// ---------------------------------------------------------------------------
// Committee and results.
// ---------------------------------------------------------------------------
struct Committee {
  std::vector<CandidateId> members;  // sorted ascending, distinct

  Committee() = default;
  explicit Committee(std::vector<CandidateId> ids) : members(std::move(ids)) {
    std::sort(members.begin(), members.end());
    if (std::adjacent_find(members.begin(), members.end()) != members.end())
      throw input_error("committee members must be distinct");
  }

  int size() const { return static_cast<int>(members.size()); }
  bool contains(CandidateId c) const {
    return std::binary_search(members.begin(), members.end(), c);
  }

  bool operator==(const Committee&) const = default;
  // Lexicographic order on sorted member lists; the deterministic tie-break.
  bool operator<(const Committee& o) const { return members < o.members; }
};

template <ScoreType S>
struct CcResult {
  Committee committee;
  S objective{};
};

struct ThieleResult {
  Committee committee;
  Rational objective;
};

// ---------------------------------------------------------------------------
// Structural checks.
// ---------------------------------------------------------------------------
struct SpWitness {
  int voter = -1;                         // 0-based voter index
  std::array<CandidateId, 3> triple{};    // axis-ordered, implication violated
};

struct SpCheckResult {
  bool ok = true;
  std::optional<SpWitness> witness;
  explicit operator bool() const { return ok; }
};

struct CiCheckResult {
  bool ok = true;
  int voter = -1;  // first violating voter when !ok
  explicit operator bool() const { return ok; }
};

// Single-peakedness along `axis`, one left/right sweep per voter: each row,
// read in axis order, must be weakly decreasing and then weakly increasing.
// On failure the returned triple (c_i, c_j, c_k), i<j<k in axis positions,
// has r(v,c_i) < r(v,c_j) and r(v,c_j) > r(v,c_k).
template <ScoreType S>
SpCheckResult verify_sp_axis(const MisrepProfile<S>& profile, const Axis& axis) {
  using T = score_traits<S>;
  if (!axis.is_permutation_of(profile.m))
    throw input_error("axis does not cover the profile's candidate set");
  const int m = profile.m;
  std::vector<S> vals(static_cast<std::size_t>(m));
  for (int v = 0; v < profile.n; ++v) {
    for (int p = 0; p < m; ++p) vals[static_cast<std::size_t>(p)] = profile.at(v, axis.at(p));
    int q = 0;
    while (q + 1 < m && !T::lt(vals[q], vals[q + 1])) ++q;  // weakly decreasing prefix
    int t = q;
    while (t + 1 < m && !T::lt(vals[t + 1], vals[t])) ++t;  // weakly increasing tail
    if (t == m - 1) continue;
    // vals[q] < vals[q+1] (first up-step) and vals[t] > vals[t+1] (later down-step).
    SpWitness w;
    w.voter = v;
    if (T::lt(vals[q], vals[t]))
      w.triple = {axis.at(q), axis.at(t), axis.at(t + 1)};
    else
      w.triple = {axis.at(q), axis.at(q + 1), axis.at(t + 1)};
    return {false, w};
  }
  return {true, std::nullopt};
}

// Every approval set must be a contiguous run of axis positions.
inline CiCheckResult verify_candidate_intervals(const ApprovalProfile& approvals,
                                                const Axis& axis) {
  if (!axis.is_permutation_of(approvals.m))
    throw input_error("axis does not cover the profile's candidate set");
  std::vector<int> pos(static_cast<std::size_t>(approvals.m) + 1, 0);
  for (int p = 0; p < axis.size(); ++p) pos[static_cast<std::size_t>(axis.at(p))] = p;
  for (int v = 0; v < approvals.n; ++v) {
    const auto& a = approvals.approvals[static_cast<std::size_t>(v)];
    if (a.empty()) continue;
    int lo = approvals.m, hi = -1;
    for (CandidateId c : a) {
      lo = std::min(lo, pos[static_cast<std::size_t>(c)]);
      hi = std::max(hi, pos[static_cast<std::size_t>(c)]);
    }
    if (hi - lo + 1 != static_cast<int>(a.size())) return {false, v};
  }
  return {true, -1};
}

// ---------------------------------------------------------------------------
// Scoring.
// ---------------------------------------------------------------------------
template <ScoreType S>
S misrep_of_committee(const MisrepProfile<S>& profile, const Committee& committee) {
  if (committee.size() == 0) throw input_error("committee must be non-empty");
  for (CandidateId c : committee.members)
    if (c < 1 || c > profile.m) throw input_error("committee contains unknown candidate");
  S total{};
  for (int v = 0; v < profile.n; ++v) {
    S best = profile.at(v, committee.members.front());
    for (std::size_t i = 1; i < committee.members.size(); ++i)
      best = std::min(best, profile.at(v, committee.members[i]));
    total += best;
  }
  return total;
}

inline Rational thiele_utility(const ApprovalProfile& approvals, const ThieleWeightSet& weights,
                               const Committee& committee) {
  if (weights.voters() != approvals.n)
    throw input_error("weight sequence count does not match voter count");
  Rational total = 0;
  for (int v = 0; v < approvals.n; ++v) {
    const auto& a = approvals.approvals[static_cast<std::size_t>(v)];
    const auto& w = weights.of(v);
    if (static_cast<int>(w.size()) < committee.size())
      throw input_error("Thiele weight sequence shorter than committee size");
    int x = 0;
    for (CandidateId c : a)
      if (committee.contains(c)) ++x;
    for (int i = 0; i < x; ++i) total += w[static_cast<std::size_t>(i)];
  }
  return total;
}

// ---------------------------------------------------------------------------
// Candidate deletion.
// ---------------------------------------------------------------------------
template <ScoreType S>
struct RestrictedProfile {
  MisrepProfile<S> profile;             // over the kept candidates, re-indexed 1..m'
  std::vector<CandidateId> kept_ids;    // kept_ids[i] = original id of new id i+1
};

template <ScoreType S>
RestrictedProfile<S> restrict_after_deletion(const MisrepProfile<S>& profile,
                                             const std::vector<CandidateId>& deleted) {
  std::vector<bool> drop(static_cast<std::size_t>(profile.m) + 1, false);
  for (CandidateId c : deleted) {
    if (c < 1 || c > profile.m) throw input_error("deletion of unknown candidate");
    drop[static_cast<std::size_t>(c)] = true;
  }
  std::vector<CandidateId> kept;
  for (CandidateId c = 1; c <= profile.m; ++c)
    if (!drop[static_cast<std::size_t>(c)]) kept.push_back(c);
  if (kept.empty()) throw input_error("cannot delete the entire candidate set");
  std::vector<S> vals;
  vals.reserve(static_cast<std::size_t>(profile.n) * kept.size());
  for (int v = 0; v < profile.n; ++v)
    for (CandidateId c : kept) vals.push_back(profile.at(v, c));
  return {MisrepProfile<S>(profile.n, static_cast<int>(kept.size()), std::move(vals)), kept};
}

struct RestrictedApprovals {
  ApprovalProfile approvals;
  std::vector<CandidateId> kept_ids;
};

inline RestrictedApprovals restrict_approvals(const ApprovalProfile& approvals,
                                              const std::vector<CandidateId>& deleted) {
  std::vector<bool> drop(static_cast<std::size_t>(approvals.m) + 1, false);
  for (CandidateId c : deleted) {
    if (c < 1 || c > approvals.m) throw input_error("deletion of unknown candidate");
    drop[static_cast<std::size_t>(c)] = true;
  }
  std::vector<CandidateId> kept;
  std::vector<int> new_id(static_cast<std::size_t>(approvals.m) + 1, 0);
  for (CandidateId c = 1; c <= approvals.m; ++c)
    if (!drop[static_cast<std::size_t>(c)]) {
      kept.push_back(c);
      new_id[static_cast<std::size_t>(c)] = static_cast<int>(kept.size());
    }
  if (kept.empty()) throw input_error("cannot delete the entire candidate set");
  std::vector<std::vector<CandidateId>> sets(static_cast<std::size_t>(approvals.n));
  for (int v = 0; v < approvals.n; ++v)
    for (CandidateId c : approvals.approvals[static_cast<std::size_t>(v)])
      if (!drop[static_cast<std::size_t>(c)])
        sets[static_cast<std::size_t>(v)].push_back(new_id[static_cast<std::size_t>(c)]);
  return {ApprovalProfile(approvals.n, static_cast<int>(kept.size()), std::move(sets)), kept};
}

// Re-express an axis over original ids in the re-indexed id space of a
// restriction (axis must cover exactly the kept candidates).
inline Axis reindex_axis(const Axis& axis, const std::vector<CandidateId>& kept_ids) {
  std::vector<int> new_id;
  CandidateId max_id = 0;
  for (CandidateId c : kept_ids) max_id = std::max(max_id, c);
  new_id.assign(static_cast<std::size_t>(max_id) + 1, 0);
  for (std::size_t i = 0; i < kept_ids.size(); ++i)
    new_id[static_cast<std::size_t>(kept_ids[i])] = static_cast<int>(i) + 1;
  std::vector<CandidateId> order;
  order.reserve(axis.order.size());
  for (CandidateId c : axis.order) {
    if (c < 1 || c > max_id || new_id[static_cast<std::size_t>(c)] == 0)
      throw input_error("axis names a candidate outside the restriction");
    order.push_back(new_id[static_cast<std::size_t>(c)]);
  }
  return Axis(std::move(order));
}

// Approval misrepresentation: r(v,c) = 1 - [c approved by v].
inline MisrepProfile<long long> approval_misrep_profile(const ApprovalProfile& approvals) {
  std::vector<long long> vals(
      static_cast<std::size_t>(approvals.n) * static_cast<std::size_t>(approvals.m), 1);
  for (int v = 0; v < approvals.n; ++v)
    for (CandidateId c : approvals.approvals[static_cast<std::size_t>(v)])
      vals[static_cast<std::size_t>(v) * static_cast<std::size_t>(approvals.m) +
           static_cast<std::size_t>(c - 1)] = 0;
  return MisrepProfile<long long>(approvals.n, approvals.m, std::move(vals));
}

}  // namespace ccsp
