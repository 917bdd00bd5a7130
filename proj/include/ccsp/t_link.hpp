#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ccsp/errors.hpp"
#include "ccsp/row_minima.hpp"

namespace ccsp {

template <class S>
struct PathResult {
  std::vector<int> nodes;  // strictly increasing, nodes.front()==0, nodes.back()==node_count-1
  S weight{};

  int edges() const { return static_cast<int>(nodes.size()) - 1; }
};

template <class S>
struct MongeWitness {
  int i = -1;
  int j = -1;
};

template <class S>
struct MongeCheckResult {
  bool ok = true;
  std::optional<MongeWitness<S>> witness;
  explicit operator bool() const { return ok; }
};

// Checks w(i,j) + w(i+1,j+1) <= w(i,j+1) + w(i+1,j) over every pair with
// 0 <= i, i+1 < j, j+1 <= node_count-1.
template <class S, class WeightFn>
MongeCheckResult<S> check_concave_monge(WeightFn&& weight, int node_count) {
  if (node_count < 4) throw input_error("concave Monge check needs at least 4 nodes");
  for (int i = 0; i + 3 <= node_count - 1; ++i)
    for (int j = i + 2; j + 1 <= node_count - 1; ++j) {
      S lhs = weight(i, j) + weight(i + 1, j + 1);
      S rhs = weight(i, j + 1) + weight(i + 1, j);
      if (lhs > rhs) return {false, MongeWitness<S>{i, j}};
    }
  return {true, std::nullopt};
}

enum class LayeredSolver { smawk, divide_and_conquer };

namespace detail {

// One DP layer: rows are target nodes in [layer .. last], columns are
// predecessors in [layer-1 .. last-1]; cells with predecessor >= target are
// padded with `big`, which the caller chooses to dominate any real path.
template <class S, class WeightFn>
void t_link_layer(const std::vector<S>& dp_prev, std::vector<S>& dp_next,
                  std::vector<int>& parent, int layer, int last, S big, WeightFn& weight,
                  LayeredSolver solver) {
  const int row0 = layer;
  const int col0 = layer - 1;
  const int rows = last - row0 + 1;
  const int cols = last - col0;
  auto value = [&](int r, int c) -> S {
    const int j = row0 + r;
    const int i = col0 + c;
    if (i >= j) return big;
    const S base = dp_prev[static_cast<std::size_t>(i)];
    if (!(base < big)) return big;
    return base + weight(i, j);
  };
  RowMinima<S> result = solver == LayeredSolver::smawk ? smawk_row_minima<S>(value, rows, cols)
                                                       : dc_row_minima<S>(value, rows, cols);
  for (int r = 0; r < rows; ++r) {
    const int j = row0 + r;
    dp_next[static_cast<std::size_t>(j)] = result.minima[static_cast<std::size_t>(r)];
    parent[static_cast<std::size_t>(j)] = col0 + result.argmin[static_cast<std::size_t>(r)];
  }
}

template <class S>
PathResult<S> recover_path(const std::vector<std::vector<int>>& parents, int last, int t,
                           S weight) {
  std::vector<int> nodes(static_cast<std::size_t>(t) + 1);
  nodes[static_cast<std::size_t>(t)] = last;
  for (int layer = t; layer >= 1; --layer)
    nodes[static_cast<std::size_t>(layer - 1)] =
        parents[static_cast<std::size_t>(layer)][static_cast<std::size_t>(nodes[static_cast<std::size_t>(layer)])];
  return {std::move(nodes), weight};
}

}  // namespace detail

// Minimum-weight path from node 0 to node node_count-1 using exactly t edges,
// for concave Monge weights. Layered DP, each layer solved by SMAWK or the
// divide-and-conquer row-minima routine; argmin ties go to the smaller
// predecessor. `big` must exceed any achievable |path weight|; pass e.g.
// (t+2)*(max|w|+1)+1.
template <class S, class WeightFn>
PathResult<S> min_weight_t_link_path(WeightFn&& weight, int node_count, int t, S big,
                                     LayeredSolver solver = LayeredSolver::smawk) {
  if (node_count < 2) throw input_error("need at least two nodes");
  if (t < 1 || t > node_count - 1) throw input_error("edge count t out of range");
  const int last = node_count - 1;
  std::vector<S> dp_prev(static_cast<std::size_t>(last) + 1, big);
  std::vector<S> dp_next(static_cast<std::size_t>(last) + 1, big);
  dp_prev[0] = S{};
  std::vector<std::vector<int>> parents(
      static_cast<std::size_t>(t) + 1, std::vector<int>(static_cast<std::size_t>(last) + 1, -1));
  for (int layer = 1; layer <= t; ++layer) {
    detail::t_link_layer(dp_prev, dp_next, parents[static_cast<std::size_t>(layer)], layer, last,
                         big, weight, solver);
    dp_prev.swap(dp_next);
  }
  const S best = dp_prev[static_cast<std::size_t>(last)];
  if (!(best < big)) throw internal_error("t-link DP found no finite path");
  return detail::recover_path(parents, last, t, best);
}

// Reference layered DP with a full predecessor scan per node: O(t * n^2)
// weight evaluations, no Monge requirement. Also the quadratic baseline the
// benchmark compares against.
template <class S, class WeightFn>
PathResult<S> naive_t_link_path(WeightFn&& weight, int node_count, int t, S big) {
  if (node_count < 2) throw input_error("need at least two nodes");
  if (t < 1 || t > node_count - 1) throw input_error("edge count t out of range");
  const int last = node_count - 1;
  std::vector<S> dp_prev(static_cast<std::size_t>(last) + 1, big);
  std::vector<S> dp_next(static_cast<std::size_t>(last) + 1, big);
  dp_prev[0] = S{};
  std::vector<std::vector<int>> parents(
      static_cast<std::size_t>(t) + 1, std::vector<int>(static_cast<std::size_t>(last) + 1, -1));
  for (int layer = 1; layer <= t; ++layer) {
    auto& parent = parents[static_cast<std::size_t>(layer)];
    for (int j = 0; j <= last; ++j) {
      S best = big;
      int arg = -1;
      for (int i = layer - 1; i < j; ++i) {
        const S base = dp_prev[static_cast<std::size_t>(i)];
        if (!(base < big)) continue;
        const S cand = base + weight(i, j);
        if (cand < best) {
          best = cand;
          arg = i;
        }
      }
      dp_next[static_cast<std::size_t>(j)] = best;
      parent[static_cast<std::size_t>(j)] = arg;
    }
    dp_prev.swap(dp_next);
  }
  const S best = dp_prev[static_cast<std::size_t>(last)];
  if (!(best < big)) throw internal_error("t-link DP found no finite path");
  return detail::recover_path(parents, last, t, best);
}

}  // namespace ccsp
