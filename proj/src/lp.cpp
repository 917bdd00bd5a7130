#include "ccsp/lp.hpp"

#include <cstddef>
#include <vector>

#include "ccsp/errors.hpp"

namespace ccsp {

namespace {

// Full tableau: `table[r]` holds the row coefficients plus the rhs in the
// last slot; `basis[r]` is the variable basic in row r.
struct Tableau {
  std::size_t rows = 0;
  std::size_t cols = 0;  // total variable columns (structural + slack + artificial)
  std::vector<std::vector<Rational>> table;
  std::vector<int> basis;
  std::vector<Rational> cost;  // reduced-cost row; last slot = objective value
};

void pivot(Tableau& t, std::size_t pr, std::size_t pc) {
  auto& prow = t.table[pr];
  const Rational inv = 1 / prow[pc];
  for (auto& x : prow) x *= inv;
  for (std::size_t r = 0; r < t.rows; ++r) {
    if (r == pr) continue;
    auto& row = t.table[r];
    if (row[pc] == 0) continue;
    const Rational factor = row[pc];
    for (std::size_t c = 0; c <= t.cols; ++c) row[c] -= factor * prow[c];
  }
  if (t.cost[pc] != 0) {
    const Rational factor = t.cost[pc];
    for (std::size_t c = 0; c <= t.cols; ++c) t.cost[c] -= factor * prow[c];
  }
  t.basis[pr] = static_cast<int>(pc);
}

// Bland's rule: smallest eligible entering column; leaving row by minimum
// ratio with ties broken toward the smallest basic variable index.
// `allowed` masks out columns that may not enter (artificials in phase 2).
bool simplex_iterate(Tableau& t, const std::vector<bool>& allowed) {
  for (;;) {
    std::size_t enter = t.cols;
    for (std::size_t c = 0; c < t.cols; ++c)
      if (allowed[c] && t.cost[c] < 0) {
        enter = c;
        break;
      }
    if (enter == t.cols) return true;  // optimal

    std::size_t leave = t.rows;
    Rational best_ratio;
    for (std::size_t r = 0; r < t.rows; ++r) {
      const Rational& a = t.table[r][enter];
      if (a <= 0) continue;
      Rational ratio = t.table[r][t.cols] / a;
      if (leave == t.rows || ratio < best_ratio ||
          (ratio == best_ratio && t.basis[r] < t.basis[leave])) {
        leave = r;
        best_ratio = ratio;
      }
    }
    if (leave == t.rows) return false;  // unbounded
    pivot(t, leave, enter);
  }
}

// cost row for maximizing sum of obj[j]*x_j: cost[j] = cB^T B^-1 A_j - obj[j].
void install_cost_row(Tableau& t, const std::vector<Rational>& obj) {
  t.cost.assign(t.cols + 1, Rational(0));
  for (std::size_t c = 0; c < obj.size(); ++c) t.cost[c] = -obj[c];
  for (std::size_t r = 0; r < t.rows; ++r) {
    const std::size_t b = static_cast<std::size_t>(t.basis[r]);
    if (b < obj.size() && obj[b] != 0) {
      const Rational cb = obj[b];
      for (std::size_t c = 0; c <= t.cols; ++c) t.cost[c] += cb * t.table[r][c];
    }
  }
  // Basic columns must read exactly zero.
  for (std::size_t r = 0; r < t.rows; ++r) t.cost[static_cast<std::size_t>(t.basis[r])] = 0;
}

}  // namespace

LpSolution solve_lp_max(const LinearProgram& lp) {
  const std::size_t n = static_cast<std::size_t>(lp.num_vars);
  if (lp.objective.size() != n) throw input_error("objective size mismatch");
  std::size_t slacks = 0;
  for (const auto& row : lp.rows) {
    if (row.coeffs.size() != n) throw input_error("constraint size mismatch");
    if (row.rhs < 0) throw input_error("constraint rhs must be non-negative");
    if (row.kind == RowKind::less_equal) ++slacks;
  }

  Tableau t;
  t.rows = lp.rows.size();
  const std::size_t art0 = n + slacks;
  std::size_t arts = 0;
  for (const auto& row : lp.rows)
    if (row.kind == RowKind::equal) ++arts;
  t.cols = n + slacks + arts;
  t.table.assign(t.rows, std::vector<Rational>(t.cols + 1, Rational(0)));
  t.basis.assign(t.rows, -1);

  std::size_t next_slack = n;
  std::size_t next_art = art0;
  for (std::size_t r = 0; r < t.rows; ++r) {
    const auto& row = lp.rows[r];
    for (std::size_t c = 0; c < n; ++c) t.table[r][c] = row.coeffs[c];
    t.table[r][t.cols] = row.rhs;
    if (row.kind == RowKind::less_equal) {
      t.table[r][next_slack] = 1;
      t.basis[r] = static_cast<int>(next_slack++);
    } else {
      t.table[r][next_art] = 1;
      t.basis[r] = static_cast<int>(next_art++);
    }
  }

  std::vector<bool> allowed(t.cols, true);

  // Phase 1: maximize -(sum of artificials); feasible iff the optimum is 0.
  if (arts > 0) {
    std::vector<Rational> phase1(t.cols, Rational(0));
    for (std::size_t c = art0; c < t.cols; ++c) phase1[c] = -1;
    install_cost_row(t, phase1);
    if (!simplex_iterate(t, allowed)) throw internal_error("phase-1 LP unbounded");
    if (t.cost[t.cols] != 0) throw input_error("linear program is infeasible");
    // Drive any degenerate basic artificial out of the basis.
    for (std::size_t r = 0; r < t.rows; ++r) {
      if (static_cast<std::size_t>(t.basis[r]) < art0) continue;
      std::size_t pc = t.cols;
      for (std::size_t c = 0; c < art0; ++c)
        if (t.table[r][c] != 0) {
          pc = c;
          break;
        }
      if (pc < t.cols) pivot(t, r, pc);
      // A fully zero row is redundant; its artificial stays basic at zero.
    }
  }
  for (std::size_t c = art0; c < t.cols; ++c) allowed[c] = false;

  // Phase 2.
  std::vector<Rational> obj(t.cols, Rational(0));
  for (std::size_t c = 0; c < n; ++c) obj[c] = lp.objective[c];
  install_cost_row(t, obj);
  if (!simplex_iterate(t, allowed)) throw input_error("linear program is unbounded");

  LpSolution sol;
  sol.values.assign(n, Rational(0));
  for (std::size_t r = 0; r < t.rows; ++r) {
    const std::size_t b = static_cast<std::size_t>(t.basis[r]);
    if (b < n) sol.values[b] = t.table[r][t.cols];
  }
  sol.objective = 0;
  for (std::size_t c = 0; c < n; ++c) sol.objective += lp.objective[c] * sol.values[c];
  return sol;
}

}  // namespace ccsp
