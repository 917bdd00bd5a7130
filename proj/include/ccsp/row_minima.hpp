#pragma once

#include <utility>
#include <vector>

#include "ccsp/errors.hpp"

namespace ccsp {

namespace detail {

// SMAWK on explicit row/column index lists. `value(r, c)` may be evaluated
// on any listed pair; ties resolve to the smaller column index. Every row is
// finalized in exactly one INTERPOLATE step, which also records its minimum.
template <class Value, class Fn>
void smawk_rec(const std::vector<int>& rows, const std::vector<int>& cols, Fn& value,
               std::vector<int>& argmin, std::vector<Value>& minima) {
  if (rows.empty()) return;

  // REDUCE: keep at most |rows| columns that can still hold a row minimum.
  std::vector<int> surv;
  surv.reserve(rows.size() < cols.size() ? rows.size() : cols.size());
  for (int c : cols) {
    while (!surv.empty()) {
      int r = rows[surv.size() - 1];
      if (!(value(r, c) < value(r, surv.back()))) break;
      surv.pop_back();
    }
    if (surv.size() < rows.size()) surv.push_back(c);
  }

  std::vector<int> odd;
  odd.reserve(rows.size() / 2);
  for (std::size_t i = 1; i < rows.size(); i += 2) odd.push_back(rows[i]);
  smawk_rec<Value>(odd, surv, value, argmin, minima);

  // INTERPOLATE even rows between the argmins of their odd neighbours.
  std::size_t start = 0;
  for (std::size_t i = 0; i < rows.size(); i += 2) {
    int r = rows[i];
    std::size_t stop = surv.size() - 1;
    if (i + 1 < rows.size()) {
      int next_arg = argmin[static_cast<std::size_t>(rows[i + 1])];
      std::size_t p = start;
      while (surv[p] != next_arg) ++p;
      stop = p;
    }
    int best_col = surv[start];
    Value best = value(r, best_col);
    for (std::size_t p = start + 1; p <= stop; ++p) {
      Value cand = value(r, surv[p]);
      if (cand < best) {
        best = cand;
        best_col = surv[p];
      }
    }
    argmin[static_cast<std::size_t>(r)] = best_col;
    minima[static_cast<std::size_t>(r)] = best;
    start = stop;
  }
}

template <class Value, class Fn>
void dc_row_minima_rec(int row_lo, int row_hi, int col_lo, int col_hi, Fn& value,
                       std::vector<int>& argmin, std::vector<Value>& minima) {
  if (row_lo > row_hi) return;
  int r = row_lo + (row_hi - row_lo) / 2;
  int best_col = col_lo;
  Value best = value(r, col_lo);
  for (int c = col_lo + 1; c <= col_hi; ++c) {
    Value cand = value(r, c);
    if (cand < best) {
      best = cand;
      best_col = c;
    }
  }
  argmin[static_cast<std::size_t>(r)] = best_col;
  minima[static_cast<std::size_t>(r)] = best;
  dc_row_minima_rec<Value>(row_lo, r - 1, col_lo, best_col, value, argmin, minima);
  dc_row_minima_rec<Value>(r + 1, row_hi, best_col, col_hi, value, argmin, minima);
}

}  // namespace detail

template <class Value>
struct RowMinima {
  std::vector<int> argmin;
  std::vector<Value> minima;
};

// Row minima of a totally monotone implicit matrix in O(rows + cols)
// evaluations. Returns the argmin column per row (smallest column on ties)
// and the minimum value itself.
template <class Value, class Fn>
RowMinima<Value> smawk_row_minima(Fn&& value, int row_count, int col_count) {
  if (row_count < 1 || col_count < 1) throw input_error("empty matrix");
  std::vector<int> rows(static_cast<std::size_t>(row_count));
  std::vector<int> cols(static_cast<std::size_t>(col_count));
  for (int i = 0; i < row_count; ++i) rows[static_cast<std::size_t>(i)] = i;
  for (int j = 0; j < col_count; ++j) cols[static_cast<std::size_t>(j)] = j;
  RowMinima<Value> result;
  result.argmin.assign(static_cast<std::size_t>(row_count), -1);
  result.minima.assign(static_cast<std::size_t>(row_count), Value{});
  detail::smawk_rec<Value>(rows, cols, value, result.argmin, result.minima);
  return result;
}

// Divide-and-conquer reference for matrices whose leftmost row argmins are
// non-decreasing. O((rows + cols) log rows) evaluations.
template <class Value, class Fn>
RowMinima<Value> dc_row_minima(Fn&& value, int row_count, int col_count) {
  if (row_count < 1 || col_count < 1) throw input_error("empty matrix");
  RowMinima<Value> result;
  result.argmin.assign(static_cast<std::size_t>(row_count), -1);
  result.minima.assign(static_cast<std::size_t>(row_count), Value{});
  detail::dc_row_minima_rec<Value>(0, row_count - 1, 0, col_count - 1, value, result.argmin,
                                   result.minima);
  return result;
}

}  // namespace ccsp
