#pragma once

#include <string>
#include <vector>

#include "ccsp/core.hpp"
#include "ccsp/lp.hpp"
#include "ccsp/rational.hpp"

namespace ccsp {

// The committee LP: y_c selects candidate c, x_{v,l} means voter v has at
// least l approved committee members. Coefficients all in {-1,0,1}, boxes
// [0,1], one cardinality equality, one coupling row per voter.
struct PavIpInstance {
  int n = 0;
  int m = 0;
  int k = 0;
  LinearProgram lp;

  int num_variables() const { return lp.num_vars; }           // n*k + m
  int num_coupling_constraints() const { return n + 1; }      // cardinality + per-voter
  // Variable layout: y_c at c-1 (c in 1..m), x_{v,l} at m + v*k + (l-1).
  int y_index(CandidateId c) const { return c - 1; }
  int x_index(int voter, int level) const { return m + voter * k + (level - 1); }
};

PavIpInstance build_pav_ip(const ApprovalProfile& approvals, const ThieleWeightSet& weights,
                           int k);

// Exact basic optimum of the instance's LP relaxation.
LpSolution solve_lp_exact(const PavIpInstance& instance);

// Optimal size-k committee under per-voter Thiele sequences on a
// candidate-interval profile. The LP vertex must come out exactly integral;
// anything else signals a broken formulation and raises internal_error.
ThieleResult solve_generalized_thiele_sp(const ApprovalProfile& approvals,
                                         const ThieleWeightSet& weights, const Axis& axis,
                                         int k);

// Canonical weight sequences as exact rationals.
enum class ThieleRule { cc, pav, av, inverse_square };

std::vector<Rational> thiele_sequence(ThieleRule rule, int length);
ThieleWeightSet uniform_weights(ThieleRule rule, int voters, int length);

}  // namespace ccsp
