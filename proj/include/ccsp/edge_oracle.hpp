#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "ccsp/core.hpp"
#include "ccsp/errors.hpp"
#include "ccsp/score.hpp"

namespace ccsp {

// Per-query instrumentation; passed explicitly so queries stay pure and the
// oracle can be shared across threads.
struct QueryStats {
  std::uint64_t queries = 0;
  std::uint64_t comparisons = 0;
  std::uint64_t max_comparisons = 0;

  void record(std::uint64_t cmps) {
    ++queries;
    comparisons += cmps;
    if (cmps > max_comparisons) max_comparisons = cmps;
  }
};

// Answers w(i,j) = r({c_i,c_j}) - r({c_i}) on the sentinel-augmented axis
// (nodes 0..m+1, both sentinels scored U = max misrepresentation) with two
// binary searches per query.
//
// For each target node j the voters whose pair minimum is r(v,c_j) are
// exactly those with i <= p_{v,j}, a prefix of the predecessors; the mirror
// statement holds per source node i with a suffix threshold q_{v,i}. Both
// threshold families are found by a monotone two-pointer sweep and stored as
// sorted, de-duplicated arrays with cumulative weight sums, flattened into
// one table per direction.
template <ScoreType S>
class EdgeWeightOracle {
 public:
  static EdgeWeightOracle build(const MisrepProfile<S>& profile, const Axis& axis) {
    auto sp = verify_sp_axis(profile, axis);
    if (!sp.ok) throw input_error("profile is not single-peaked on the given axis");

    EdgeWeightOracle o;
    const int m = profile.m;
    const int n = profile.n;
    const int last = m + 1;
    o.m_ = m;
    o.n_ = n;
    o.sentinel_ = profile.max_value();

    // Augmented per-voter rows in axis order, sentinels at both ends.
    std::vector<S> row(static_cast<std::size_t>(last) + 1);
    std::vector<std::vector<S>> rows(static_cast<std::size_t>(n), row);
    for (int v = 0; v < n; ++v) {
      auto& r = rows[static_cast<std::size_t>(v)];
      r[0] = o.sentinel_;
      r[static_cast<std::size_t>(last)] = o.sentinel_;
      for (int pos = 1; pos <= m; ++pos)
        r[static_cast<std::size_t>(pos)] = profile.at(v, axis.at(pos - 1));
    }

    o.singleton_.assign(static_cast<std::size_t>(last) + 1, S{});
    for (int node = 0; node <= last; ++node) {
      S total{};
      for (int v = 0; v < n; ++v)
        total += rows[static_cast<std::size_t>(v)][static_cast<std::size_t>(node)];
      o.singleton_[static_cast<std::size_t>(node)] = total;
    }

    o.peak_.assign(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
      const auto& r = rows[static_cast<std::size_t>(v)];
      int best = 0;
      for (int node = 1; node <= last; ++node)
        if (score_traits<S>::lt(r[static_cast<std::size_t>(node)], r[static_cast<std::size_t>(best)]))
          best = node;
      o.peak_[static_cast<std::size_t>(v)] = best;
    }

    // Forward thresholds p_{v,j}: the set {i < j : r(v,c_i) > r(v,c_j) or
    // (equal and i <= l_v)} equals {0..p_{v,j}}, empty encoded as -1.
    o.fwd_p_.assign(static_cast<std::size_t>(n) * (static_cast<std::size_t>(last) + 1), -1);
    for (int v = 0; v < n; ++v) {
      const auto& r = rows[static_cast<std::size_t>(v)];
      const int lv = o.peak_[static_cast<std::size_t>(v)];
      auto qual = [&](int a, int b) {
        const S& ra = r[static_cast<std::size_t>(a)];
        const S& rb = r[static_cast<std::size_t>(b)];
        if (score_traits<S>::lt(rb, ra)) return true;
        return score_traits<S>::eq(ra, rb) && a <= lv;
      };
      int p = -1;
      for (int j = 0; j <= last; ++j) {
        while (p + 1 < j && qual(p + 1, j)) ++p;
        while (p >= 0 && !qual(p, j)) --p;
        o.fwd_p_[o.pidx(v, j)] = p;
      }
    }

    // Mirror thresholds q_{v,i} via the same sweep on the reversed axis; the
    // tie clause flips to the complementary half so f and g partition every
    // pair exactly once.
    o.mir_q_.assign(static_cast<std::size_t>(n) * (static_cast<std::size_t>(last) + 1), last + 1);
    for (int v = 0; v < n; ++v) {
      const auto& r = rows[static_cast<std::size_t>(v)];
      const int lv = o.peak_[static_cast<std::size_t>(v)];
      auto rev = [&](int y) -> const S& { return r[static_cast<std::size_t>(last - y)]; };
      auto qual = [&](int a, int b) {
        if (score_traits<S>::lt(rev(b), rev(a))) return true;
        return score_traits<S>::eq(rev(a), rev(b)) && b < last - lv;
      };
      int p = -1;
      for (int b = 0; b <= last; ++b) {
        while (p + 1 < b && qual(p + 1, b)) ++p;
        while (p >= 0 && !qual(p, b)) --p;
        // set of qualifying j > i is {last - p, ..., last}; empty -> last+1
        o.mir_q_[o.pidx(v, last - b)] = last - p;
      }
    }

    // Flattened cumulative-weight tables. Forward slice at j: distinct
    // thresholds ascending with suffix sums of r(v,c_j). Mirror slice at i:
    // distinct q ascending with prefix sums of r(v,c_i).
    std::vector<std::pair<int, S>> entries;
    auto append_slice = [&entries](Table& table, bool suffix) {
      std::sort(entries.begin(), entries.end(),
                [](const auto& x, const auto& y) { return x.first < y.first; });
      const std::size_t begin = table.keys.size();
      for (const auto& [key, w] : entries) {
        if (table.keys.size() > begin && table.keys.back() == key)
          table.sums.back() += w;
        else {
          table.keys.push_back(key);
          table.sums.push_back(w);
        }
      }
      if (suffix) {
        for (std::size_t t = table.sums.size(); t-- > begin + 1;) table.sums[t - 1] += table.sums[t];
      } else {
        for (std::size_t t = begin + 1; t < table.sums.size(); ++t) table.sums[t] += table.sums[t - 1];
      }
      table.offset.push_back(table.keys.size());
    };

    o.fwd_.offset.assign(1, 0);
    for (int j = 0; j <= last; ++j) {
      entries.clear();
      if (j >= 1)
        for (int v = 0; v < n; ++v) {
          int p = o.fwd_p_[o.pidx(v, j)];
          if (p >= 0)
            entries.emplace_back(p, rows[static_cast<std::size_t>(v)][static_cast<std::size_t>(j)]);
        }
      append_slice(o.fwd_, /*suffix=*/true);
    }
    o.mir_.offset.assign(1, 0);
    for (int i = 0; i <= last; ++i) {
      entries.clear();
      if (i < last)
        for (int v = 0; v < n; ++v) {
          int q = o.mir_q_[o.pidx(v, i)];
          if (q <= last)
            entries.emplace_back(q, rows[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)]);
        }
      append_slice(o.mir_, /*suffix=*/false);
    }
    return o;
  }

  int node_count() const { return m_ + 2; }
  int candidate_count() const { return m_; }
  int voter_count() const { return n_; }
  S sentinel_value() const { return sentinel_; }
  S singleton_total(int node) const { return singleton_[static_cast<std::size_t>(node)]; }
  int peak_index(int voter) const { return peak_[static_cast<std::size_t>(voter)]; }
  int forward_threshold(int voter, int j) const { return fwd_p_[pidx(voter, j)]; }
  int mirror_threshold(int voter, int i) const { return mir_q_[pidx(voter, i)]; }

  S edge_weight(int i, int j) const {
    std::uint64_t cmps = 0;
    return weight_impl(i, j, cmps);
  }

  S edge_weight(int i, int j, QueryStats& stats) const {
    std::uint64_t cmps = 0;
    S w = weight_impl(i, j, cmps);
    stats.record(cmps);
    return w;
  }

 private:
  struct Table {
    std::vector<std::size_t> offset;  // node -> slice [offset[node], offset[node+1])
    std::vector<int> keys;            // distinct thresholds, ascending per slice
    std::vector<S> sums;              // cumulative weights, aligned with keys
  };

  std::size_t pidx(int voter, int node) const {
    return static_cast<std::size_t>(voter) * (static_cast<std::size_t>(m_) + 2) +
           static_cast<std::size_t>(node);
  }

  // Branchless lower bound: index of the first key >= target within the
  // slice, counting one comparison per halving step.
  static std::size_t search_ge(const int* keys, std::size_t len, int target,
                               std::uint64_t& cmps) {
    const int* base = keys;
    std::size_t n = len;
    while (n > 1) {
      const std::size_t half = n / 2;
      ++cmps;
      base += (base[half - 1] < target) ? half : 0;
      n -= half;
    }
    if (n == 1) {
      ++cmps;
      base += (base[0] < target) ? 1 : 0;
    }
    return static_cast<std::size_t>(base - keys);
  }

  S weight_impl(int i, int j, std::uint64_t& cmps) const {
    if (i < 0 || j <= i || j > m_ + 1) throw input_error("edge weight query out of range");
    // f(i,j): voters with p_{v,j} >= i contribute r(v,c_j).
    S f{};
    {
      const std::size_t lo = fwd_.offset[static_cast<std::size_t>(j)];
      const std::size_t hi = fwd_.offset[static_cast<std::size_t>(j) + 1];
      const std::size_t at = lo + search_ge(fwd_.keys.data() + lo, hi - lo, i, cmps);
      if (at < hi) f = fwd_.sums[at];
    }
    // g(i,j): voters with q_{v,i} <= j contribute r(v,c_i).
    S g{};
    {
      const std::size_t lo = mir_.offset[static_cast<std::size_t>(i)];
      const std::size_t hi = mir_.offset[static_cast<std::size_t>(i) + 1];
      const std::size_t at = lo + search_ge(mir_.keys.data() + lo, hi - lo, j + 1, cmps);
      if (at > lo) g = mir_.sums[at - 1];
    }
    return f + g - singleton_[static_cast<std::size_t>(i)];
  }

  int m_ = 0;
  int n_ = 0;
  S sentinel_{};
  std::vector<S> singleton_;
  std::vector<int> peak_;
  std::vector<int> fwd_p_;
  std::vector<int> mir_q_;
  Table fwd_;
  Table mir_;
};

}  // namespace ccsp
