#pragma once

#include <cstdlib>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ccsp/core.hpp"
#include "ccsp/errors.hpp"

namespace ccsp {

// Enumeration guard so an accidental huge instance cannot hang CI; override
// with CCSP_BRUTE_BUDGET for deep local testing.
inline unsigned long long brute_force_budget() {
  if (const char* env = std::getenv("CCSP_BRUTE_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 1'000'000ULL;
}

inline unsigned long long combinations_capped(int m, int k, unsigned long long cap) {
  if (k < 0 || k > m) return 0;
  unsigned long long c = 1;
  for (int i = 1; i <= k; ++i) {
    if (c > cap) return cap + 1;
    c = c * static_cast<unsigned long long>(m - k + i) / static_cast<unsigned long long>(i);
  }
  return c > cap ? cap + 1 : c;
}

namespace detail {

// All k-subsets of {first..m} extending `prefix`, ascending ids.
template <class Visit>
void enumerate_committees(int first, int m, int k, std::vector<CandidateId>& prefix,
                          Visit& visit) {
  if (static_cast<int>(prefix.size()) == k) {
    visit(prefix);
    return;
  }
  const int need = k - static_cast<int>(prefix.size());
  for (CandidateId c = first; c <= m - need + 1; ++c) {
    prefix.push_back(c);
    enumerate_committees(c + 1, m, k, prefix, visit);
    prefix.pop_back();
  }
}

}  // namespace detail

// Exhaustive optimum over all size-k committees. Deterministic: smallest
// objective, then lexicographically smallest member list. The enumeration is
// split across threads by leading candidate; the reduction is a total order,
// so the result does not depend on scheduling.
template <ScoreType S>
CcResult<S> brute_force_cc(const MisrepProfile<S>& profile, int k,
                           unsigned long long budget = brute_force_budget()) {
  if (k < 1 || k > profile.m) throw input_error("committee size k out of range");
  if (combinations_capped(profile.m, k, budget) > budget)
    throw input_error("brute-force budget exceeded (" + std::to_string(budget) + " committees)");

  const int m = profile.m;
  bool found = false;
  CcResult<S> best{};
#ifdef _OPENMP
#pragma omp parallel
#endif
  {
    bool local_found = false;
    CcResult<S> local{};
    std::vector<CandidateId> prefix;
    auto visit = [&](const std::vector<CandidateId>& members) {
      S obj{};
      for (int v = 0; v < profile.n; ++v) {
        S mn = profile.at(v, members.front());
        for (std::size_t i = 1; i < members.size(); ++i)
          mn = std::min(mn, profile.at(v, members[i]));
        obj += mn;
      }
      if (!local_found || obj < local.objective ||
          (obj == local.objective && members < local.committee.members)) {
        local_found = true;
        local.objective = obj;
        local.committee.members = members;
      }
    };
#ifdef _OPENMP
#pragma omp for schedule(dynamic) nowait
#endif
    for (CandidateId c1 = 1; c1 <= m - k + 1; ++c1) {
      prefix.assign(1, c1);
      detail::enumerate_committees(c1 + 1, m, k, prefix, visit);
    }
#ifdef _OPENMP
#pragma omp critical
#endif
    {
      if (local_found &&
          (!found || local.objective < best.objective ||
           (local.objective == best.objective && local.committee.members < best.committee.members))) {
        found = true;
        best = local;
      }
    }
  }
  if (!found) throw internal_error("brute force enumerated no committee");
  return best;
}

// Exhaustive Thiele optimum, exact rationals. Largest utility wins, then the
// lexicographically smallest member list.
inline ThieleResult brute_force_thiele(const ApprovalProfile& approvals,
                                       const ThieleWeightSet& weights, int k,
                                       unsigned long long budget = brute_force_budget()) {
  if (k < 1 || k > approvals.m) throw input_error("committee size k out of range");
  if (weights.voters() != approvals.n)
    throw input_error("weight sequence count does not match voter count");
  if (combinations_capped(approvals.m, k, budget) > budget)
    throw input_error("brute-force budget exceeded (" + std::to_string(budget) + " committees)");

  // prefix_util[v][x] = sum of the first x weights of voter v.
  std::vector<std::vector<Rational>> prefix_util(static_cast<std::size_t>(approvals.n));
  for (int v = 0; v < approvals.n; ++v) {
    const auto& w = weights.of(v);
    if (static_cast<int>(w.size()) < k)
      throw input_error("Thiele weight sequence shorter than committee size");
    auto& pu = prefix_util[static_cast<std::size_t>(v)];
    pu.assign(static_cast<std::size_t>(k) + 1, Rational(0));
    for (int i = 0; i < k; ++i)
      pu[static_cast<std::size_t>(i) + 1] = pu[static_cast<std::size_t>(i)] + w[static_cast<std::size_t>(i)];
  }

  const int m = approvals.m;
  bool found = false;
  ThieleResult best{};
#ifdef _OPENMP
#pragma omp parallel
#endif
  {
    bool local_found = false;
    ThieleResult local{};
    std::vector<CandidateId> prefix;
    auto visit = [&](const std::vector<CandidateId>& members) {
      Rational obj = 0;
      for (int v = 0; v < approvals.n; ++v) {
        const auto& a = approvals.approvals[static_cast<std::size_t>(v)];
        int x = 0;
        std::size_t ai = 0, wi = 0;
        while (ai < a.size() && wi < members.size()) {
          if (a[ai] == members[wi]) {
            ++x;
            ++ai;
            ++wi;
          } else if (a[ai] < members[wi])
            ++ai;
          else
            ++wi;
        }
        obj += prefix_util[static_cast<std::size_t>(v)][static_cast<std::size_t>(x)];
      }
      if (!local_found || obj > local.objective ||
          (obj == local.objective && members < local.committee.members)) {
        local_found = true;
        local.objective = obj;
        local.committee.members = members;
      }
    };
#ifdef _OPENMP
#pragma omp for schedule(dynamic) nowait
#endif
    for (CandidateId c1 = 1; c1 <= m - k + 1; ++c1) {
      prefix.assign(1, c1);
      detail::enumerate_committees(c1 + 1, m, k, prefix, visit);
    }
#ifdef _OPENMP
#pragma omp critical
#endif
    {
      if (local_found &&
          (!found || local.objective > best.objective ||
           (local.objective == best.objective && local.committee.members < best.committee.members))) {
        found = true;
        best = local;
      }
    }
  }
  if (!found) throw internal_error("brute force enumerated no committee");
  return best;
}

// O(n) reference for one edge weight on the sentinel-augmented axis,
// independent of the preprocessed oracle.
template <ScoreType S>
S direct_edge_weight(const MisrepProfile<S>& profile, const Axis& axis, int i, int j) {
  const int last = profile.m + 1;
  if (i < 0 || j <= i || j > last) throw input_error("edge weight query out of range");
  const S u = profile.max_value();
  auto value = [&](int v, int node) -> S {
    if (node == 0 || node == last) return u;
    return profile.at(v, axis.at(node - 1));
  };
  S pair_total{};
  S single_total{};
  for (int v = 0; v < profile.n; ++v) {
    pair_total += std::min(value(v, i), value(v, j));
    single_total += value(v, i);
  }
  return pair_total - single_total;
}

// Definitional single-peakedness check over all axis triples in both
// orientations; cubic, test authority for the sweep in verify_sp_axis.
template <ScoreType S>
SpCheckResult verify_sp_axis_triples(const MisrepProfile<S>& profile, const Axis& axis) {
  using T = score_traits<S>;
  if (!axis.is_permutation_of(profile.m))
    throw input_error("axis does not cover the profile's candidate set");
  const int m = profile.m;
  for (int v = 0; v < profile.n; ++v) {
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b)
        for (int c = b + 1; c < m; ++c) {
          const S ra = profile.at(v, axis.at(a));
          const S rb = profile.at(v, axis.at(b));
          const S rc = profile.at(v, axis.at(c));
          if (T::lt(ra, rb) && !T::le(rb, rc))
            return {false, SpWitness{v, {axis.at(a), axis.at(b), axis.at(c)}}};
          if (T::lt(rc, rb) && !T::le(rb, ra))
            return {false, SpWitness{v, {axis.at(c), axis.at(b), axis.at(a)}}};
        }
  }
  return {true, std::nullopt};
}

}  // namespace ccsp
