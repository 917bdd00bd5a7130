#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ccsp/core.hpp"
#include "ccsp/edge_oracle.hpp"
#include "ccsp/errors.hpp"
#include "ccsp/t_link.hpp"

namespace ccsp {

template <ScoreType S>
struct CcSpInstance {
  MisrepProfile<S> profile;
  Axis axis;
  int k = 1;
  std::optional<S> bound;  // misrepresentation bound R for the decision form
};

enum class PathAlgorithm { smawk, divide_and_conquer, naive };

// Dominates every real t-link path weight: |w(i,j)| <= U*n per edge.
template <ScoreType S>
S t_link_big(S sentinel, int n, int t) {
  const S un = sentinel * static_cast<S>(n);
  return static_cast<S>(t + 2) * (un + 1) + 1;
}

// Committee from a prebuilt oracle; the path solve is separated out so the
// benchmark can time it apart from preprocessing.
template <ScoreType S>
CcResult<S> solve_cc_path(const MisrepProfile<S>& profile, const Axis& axis,
                          const EdgeWeightOracle<S>& oracle, int k,
                          PathAlgorithm algo = PathAlgorithm::smawk) {
  if (k < 1 || k > profile.m) throw input_error("committee size k out of range");
  const int t = k + 1;
  const S un = oracle.sentinel_value() * static_cast<S>(profile.n);
  const S big = t_link_big<S>(oracle.sentinel_value(), profile.n, t);
  auto weight = [&](int i, int j) { return oracle.edge_weight(i, j); };
  PathResult<S> path =
      algo == PathAlgorithm::naive
          ? naive_t_link_path<S>(weight, oracle.node_count(), t, big)
          : min_weight_t_link_path<S>(weight, oracle.node_count(), t, big,
                                      algo == PathAlgorithm::smawk
                                          ? LayeredSolver::smawk
                                          : LayeredSolver::divide_and_conquer);
  std::vector<CandidateId> members;
  members.reserve(static_cast<std::size_t>(k));
  for (int idx = 1; idx <= k; ++idx)
    members.push_back(axis.at(path.nodes[static_cast<std::size_t>(idx)] - 1));
  CcResult<S> result{Committee(std::move(members)), path.weight + un};
  if constexpr (score_traits<S>::exact) {
    if (misrep_of_committee(profile, result.committee) != result.objective)
      throw internal_error("path weight does not match the recovered committee");
  }
  return result;
}

// Exact optimum over all size-k committees: sentinel-augmented reduction to a
// minimum-weight (k+1)-link path, recovered through the interior path nodes.
template <ScoreType S>
CcResult<S> solve_cc_sp(const CcSpInstance<S>& instance,
                        PathAlgorithm algo = PathAlgorithm::smawk) {
  auto oracle = EdgeWeightOracle<S>::build(instance.profile, instance.axis);
  return solve_cc_path(instance.profile, instance.axis, oracle, instance.k, algo);
}

// YES with an optimal committee iff the optimum is within the bound.
template <ScoreType S>
std::optional<CcResult<S>> decide_cc_sp(const CcSpInstance<S>& instance,
                                        PathAlgorithm algo = PathAlgorithm::smawk) {
  if (!instance.bound) throw input_error("decision form needs a misrepresentation bound");
  CcResult<S> best = solve_cc_sp(instance, algo);
  if (score_traits<S>::le(best.objective, *instance.bound)) return best;
  return std::nullopt;
}

}  // namespace ccsp
