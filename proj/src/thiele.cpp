#include "ccsp/thiele.hpp"

#include <utility>

#include "ccsp/errors.hpp"

namespace ccsp {

PavIpInstance build_pav_ip(const ApprovalProfile& approvals, const ThieleWeightSet& weights,
                           int k) {
  if (k < 1) throw input_error("committee size k must be positive");
  if (k > approvals.m) throw input_error("committee size k exceeds the candidate count");
  if (weights.voters() != approvals.n)
    throw input_error("weight sequence count does not match voter count");
  for (int v = 0; v < approvals.n; ++v)
    if (static_cast<int>(weights.of(v).size()) < k)
      throw input_error("Thiele weight sequence shorter than k");

  PavIpInstance inst;
  inst.n = approvals.n;
  inst.m = approvals.m;
  inst.k = k;
  const int vars = approvals.n * k + approvals.m;
  inst.lp.num_vars = vars;
  inst.lp.objective.assign(static_cast<std::size_t>(vars), Rational(0));
  for (int v = 0; v < approvals.n; ++v)
    for (int l = 1; l <= k; ++l)
      inst.lp.objective[static_cast<std::size_t>(inst.x_index(v, l))] =
          weights.of(v)[static_cast<std::size_t>(l - 1)];

  // sum_c y_c = k
  LpRow cardinality;
  cardinality.kind = RowKind::equal;
  cardinality.rhs = k;
  cardinality.coeffs.assign(static_cast<std::size_t>(vars), Rational(0));
  for (CandidateId c = 1; c <= approvals.m; ++c)
    cardinality.coeffs[static_cast<std::size_t>(inst.y_index(c))] = 1;
  inst.lp.rows.push_back(std::move(cardinality));

  // sum_l x_{v,l} - sum_{c in A_v} y_c <= 0
  for (int v = 0; v < approvals.n; ++v) {
    LpRow row;
    row.kind = RowKind::less_equal;
    row.rhs = 0;
    row.coeffs.assign(static_cast<std::size_t>(vars), Rational(0));
    for (int l = 1; l <= k; ++l)
      row.coeffs[static_cast<std::size_t>(inst.x_index(v, l))] = 1;
    for (CandidateId c : approvals.approvals[static_cast<std::size_t>(v)])
      row.coeffs[static_cast<std::size_t>(inst.y_index(c))] = -1;
    inst.lp.rows.push_back(std::move(row));
  }

  // Boxes: every variable <= 1.
  for (int j = 0; j < vars; ++j) {
    LpRow row;
    row.kind = RowKind::less_equal;
    row.rhs = 1;
    row.coeffs.assign(static_cast<std::size_t>(vars), Rational(0));
    row.coeffs[static_cast<std::size_t>(j)] = 1;
    inst.lp.rows.push_back(std::move(row));
  }
  return inst;
}

LpSolution solve_lp_exact(const PavIpInstance& instance) { return solve_lp_max(instance.lp); }

ThieleResult solve_generalized_thiele_sp(const ApprovalProfile& approvals,
                                         const ThieleWeightSet& weights, const Axis& axis,
                                         int k) {
  auto ci = verify_candidate_intervals(approvals, axis);
  if (!ci.ok)
    throw input_error("approval sets are not candidate intervals on the given axis (voter " +
                      std::to_string(ci.voter + 1) + ")");

  PavIpInstance instance = build_pav_ip(approvals, weights, k);
  LpSolution sol = solve_lp_exact(instance);

  for (const Rational& v : sol.values)
    if (v != 0 && v != 1)
      throw internal_error("LP vertex is non-integral (" + rational_to_string(v) +
                           "); totally-unimodular structure violated");

  std::vector<CandidateId> members;
  for (CandidateId c = 1; c <= approvals.m; ++c)
    if (sol.values[static_cast<std::size_t>(instance.y_index(c))] == 1) members.push_back(c);
  if (static_cast<int>(members.size()) != k)
    throw internal_error("integral LP vertex selected a wrong-size committee");

  ThieleResult result{Committee(std::move(members)), sol.objective};
  if (thiele_utility(approvals, weights, result.committee) != result.objective)
    throw internal_error("LP objective does not match the recovered committee's utility");
  return result;
}

std::vector<Rational> thiele_sequence(ThieleRule rule, int length) {
  std::vector<Rational> w;
  w.reserve(static_cast<std::size_t>(length));
  for (int i = 1; i <= length; ++i) {
    switch (rule) {
      case ThieleRule::cc:
        w.push_back(i == 1 ? Rational(1) : Rational(0));
        break;
      case ThieleRule::pav:
        w.push_back(rational_of(1, i));
        break;
      case ThieleRule::av:
        w.push_back(Rational(1));
        break;
      case ThieleRule::inverse_square:
        w.push_back(rational_of(1, i * i));
        break;
    }
  }
  return w;
}

ThieleWeightSet uniform_weights(ThieleRule rule, int voters, int length) {
  std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(voters),
                                          thiele_sequence(rule, length));
  return ThieleWeightSet(std::move(rows));
}

}  // namespace ccsp
