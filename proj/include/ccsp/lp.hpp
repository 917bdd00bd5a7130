#pragma once

#include <vector>

#include "ccsp/rational.hpp"

namespace ccsp {

// Small dense LP in exact rational arithmetic:
//   maximize c^T x  subject to  A x (<= | =) b,  x >= 0,
// with every rhs non-negative. Solved by two-phase full-tableau primal
// simplex under Bland's rule, so it terminates and returns a basic optimal
// solution (a vertex).
enum class RowKind { less_equal, equal };

struct LpRow {
  std::vector<Rational> coeffs;
  RowKind kind = RowKind::less_equal;
  Rational rhs;
};

struct LinearProgram {
  int num_vars = 0;
  std::vector<Rational> objective;
  std::vector<LpRow> rows;
};

struct LpSolution {
  Rational objective;
  std::vector<Rational> values;  // one per structural variable
};

LpSolution solve_lp_max(const LinearProgram& lp);

}  // namespace ccsp
