#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <vector>

#include "ccsp/cc_sp.hpp"
#include "ccsp/edge_oracle.hpp"
#include "ccsp/gen.hpp"
#include "ccsp/oracle.hpp"
#include "ccsp/prng.hpp"
#include "ccsp/row_minima.hpp"
#include "ccsp/t_link.hpp"
#include "fixtures.hpp"

using namespace ccsp;

namespace {

// Definitional evaluation of the f-side qualifying set for (v, j).
std::vector<int> qualifying_set(const MisrepProfile<long long>& profile, const Axis& axis,
                                int voter, int j, int peak) {
  const int last = profile.m + 1;
  const long long u = profile.max_value();
  auto value = [&](int node) -> long long {
    if (node == 0 || node == last) return u;
    return profile.at(voter, axis.at(node - 1));
  };
  std::vector<int> set;
  for (int i = 0; i < j; ++i)
    if (value(i) > value(j) || (value(i) == value(j) && i <= peak)) set.push_back(i);
  return set;
}

}  // namespace

TEST_CASE("oracle internals on P1 match the definitions") {
  auto oracle = EdgeWeightOracle<long long>::build(fixtures::p1_profile(), fixtures::p1_axis());
  CHECK(oracle.node_count() == 5);
  CHECK(oracle.sentinel_value() == 2);

  // Singleton totals over c_0..c_4.
  const std::vector<long long> expected_singletons{4, 2, 2, 2, 4};
  for (int node = 0; node <= 4; ++node)
    CHECK(oracle.singleton_total(node) == expected_singletons[static_cast<std::size_t>(node)]);

  CHECK(oracle.peak_index(0) == 1);
  CHECK(oracle.peak_index(1) == 3);

  // Voter 1 (augmented row 2,0,1,2,2): every prefix set ends at 0.
  for (int j = 1; j <= 4; ++j) CHECK(oracle.forward_threshold(0, j) == 0);
  // Voter 2 (augmented row 2,2,1,0,2).
  CHECK(oracle.forward_threshold(1, 1) == 0);
  CHECK(oracle.forward_threshold(1, 2) == 1);
  CHECK(oracle.forward_threshold(1, 3) == 2);
  CHECK(oracle.forward_threshold(1, 4) == 1);  // {0,1}: both sentinel-tied with i <= l_v
}

TEST_CASE("forward thresholds carve exactly the definitional prefix sets") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    GenParams params;
    params.n = 1 + static_cast<int>(seed % 6);
    params.m = 2 + static_cast<int>(seed % 14);
    params.seed = seed;
    params.tie_probability = 0.5;
    params.value_cap = 6;  // force plenty of ties
    auto [profile, axis] = gen_sp_misrep(params);
    auto oracle = EdgeWeightOracle<long long>::build(profile, axis);
    for (int v = 0; v < profile.n; ++v)
      for (int j = 1; j <= profile.m + 1; ++j) {
        auto set = qualifying_set(profile, axis, v, j, oracle.peak_index(v));
        const int p = oracle.forward_threshold(v, j);
        REQUIRE(static_cast<int>(set.size()) == p + 1);
        for (std::size_t idx = 0; idx < set.size(); ++idx)
          REQUIRE(set[idx] == static_cast<int>(idx));  // contiguous from 0
      }
  }
}

TEST_CASE("edge weights on P1") {
  auto p1 = fixtures::p1_profile();
  auto axis = fixtures::p1_axis();
  auto oracle = EdgeWeightOracle<long long>::build(p1, axis);
  CHECK(oracle.edge_weight(0, 1) == -2);
  CHECK(oracle.edge_weight(1, 3) == -2);
  CHECK(oracle.edge_weight(3, 4) == 0);
  CHECK(direct_edge_weight(p1, axis, 0, 1) == -2);
  CHECK(direct_edge_weight(p1, axis, 1, 3) == -2);
  CHECK(direct_edge_weight(p1, axis, 3, 4) == 0);
  CHECK_THROWS_AS(oracle.edge_weight(2, 2), input_error);
  CHECK_THROWS_AS(oracle.edge_weight(0, 5), input_error);
}

TEST_CASE("oracle equals the direct computation on every pair") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    GenParams params;
    params.n = 1 + static_cast<int>(seed % 9);
    params.m = 2 + static_cast<int>(seed % 24);
    params.seed = seed;
    params.tie_probability = 0.4;
    params.value_cap = 8;
    auto [profile, axis] = gen_sp_misrep(params);
    auto oracle = EdgeWeightOracle<long long>::build(profile, axis);
    QueryStats stats;
    const int last = profile.m + 1;
    for (int i = 0; i <= last; ++i)
      for (int j = i + 1; j <= last; ++j)
        REQUIRE(oracle.edge_weight(i, j, stats) == direct_edge_weight(profile, axis, i, j));
    const std::uint64_t budget =
        2 * static_cast<std::uint64_t>(std::ceil(std::log2(profile.m + 2))) + 16;
    CHECK(stats.max_comparisons <= budget);
  }
}

TEST_CASE("oracle build rejects non-SP input") {
  MisrepProfile<long long> bad(1, 3, {0, 2, 1});
  CHECK_THROWS_AS(EdgeWeightOracle<long long>::build(bad, Axis({1, 2, 3})), input_error);
}

TEST_CASE("float-mode oracle matches the direct computation within tolerance") {
  Prng rng(3);
  for (int iter = 0; iter < 10; ++iter) {
    const int n = 3, m = 8;
    std::vector<double> vals;
    for (int v = 0; v < n; ++v) {
      const int peak = static_cast<int>(rng.below(m));
      std::vector<double> row(m);
      row[static_cast<std::size_t>(peak)] = static_cast<double>(rng.below(100)) / 7.0;
      for (int p = peak - 1; p >= 0; --p)
        row[static_cast<std::size_t>(p)] =
            row[static_cast<std::size_t>(p) + 1] + static_cast<double>(rng.below(50)) / 9.0;
      for (int p = peak + 1; p < m; ++p)
        row[static_cast<std::size_t>(p)] =
            row[static_cast<std::size_t>(p) - 1] + static_cast<double>(rng.below(50)) / 9.0;
      vals.insert(vals.end(), row.begin(), row.end());
    }
    MisrepProfile<double> profile(n, m, vals);
    Axis axis = Axis::identity(m);
    REQUIRE(verify_sp_axis(profile, axis).ok);
    auto oracle = EdgeWeightOracle<double>::build(profile, axis);
    for (int i = 0; i <= m + 1; ++i)
      for (int j = i + 1; j <= m + 1; ++j)
        REQUIRE(oracle.edge_weight(i, j) ==
                doctest::Approx(direct_edge_weight(profile, axis, i, j)).epsilon(1e-9));
  }
}

TEST_CASE("concave Monge holds for oracle weights and simple functions") {
  auto oracle = EdgeWeightOracle<long long>::build(fixtures::p1_profile(), fixtures::p1_axis());
  auto w = [&](int i, int j) { return oracle.edge_weight(i, j); };
  CHECK(check_concave_monge<long long>(w, oracle.node_count()).ok);

  auto linear = [](int i, int j) { return static_cast<long long>(j - i); };
  CHECK(check_concave_monge<long long>(linear, 10).ok);

  // Over the checked range (i+1 < j) the squared gap satisfies the
  // inequality: 2d^2 <= (d+1)^2 + (d-1)^2. Its negation violates it.
  auto squared = [](int i, int j) {
    return static_cast<long long>(j - i) * static_cast<long long>(j - i);
  };
  CHECK(check_concave_monge<long long>(squared, 10).ok);
  auto neg_squared = [&](int i, int j) { return -squared(i, j); };
  auto res = check_concave_monge<long long>(neg_squared, 10);
  REQUIRE_FALSE(res.ok);
  const auto& wit = *res.witness;
  CHECK(neg_squared(wit.i, wit.j) + neg_squared(wit.i + 1, wit.j + 1) >
        neg_squared(wit.i, wit.j + 1) + neg_squared(wit.i + 1, wit.j));

  CHECK_THROWS_AS(check_concave_monge<long long>(linear, 3), input_error);
}

TEST_CASE("concave Monge property holds across generated SP instances") {
  for (std::uint64_t seed = 1; seed <= 500; ++seed) {
    GenParams params;
    params.n = 1 + static_cast<int>(seed % 7);
    params.m = 2 + static_cast<int>(seed % 49);
    params.seed = seed;
    params.tie_probability = 0.35;
    auto [profile, axis] = gen_sp_misrep(params);
    auto oracle = EdgeWeightOracle<long long>::build(profile, axis);
    auto w = [&](int i, int j) { return oracle.edge_weight(i, j); };
    REQUIRE(check_concave_monge<long long>(w, oracle.node_count()).ok);
  }
}

TEST_CASE("smawk basics") {
  auto one = [](int, int) { return 1LL; };
  auto tiny = smawk_row_minima<long long>(one, 1, 1);
  CHECK(tiny.argmin == std::vector<int>{0});
  CHECK(tiny.minima == std::vector<long long>{1});

  const int size = 9;
  auto banded = [](int r, int c) { return static_cast<long long>(std::abs(r - c)); };
  auto mins = smawk_row_minima<long long>(banded, size, size);
  for (int r = 0; r < size; ++r) {
    CHECK(mins.argmin[static_cast<std::size_t>(r)] == r);
    CHECK(mins.minima[static_cast<std::size_t>(r)] == 0);
  }

  CHECK_THROWS_AS(smawk_row_minima<long long>(one, 0, 3), input_error);
}

TEST_CASE("smawk and divide-and-conquer match an exhaustive scan on Monge matrices") {
  Prng rng(99);
  for (int iter = 0; iter < 120; ++iter) {
    const int rows = 1 + static_cast<int>(rng.below(12));
    const int cols = 1 + static_cast<int>(rng.below(12));
    // Random Monge matrix: M[r][c] = concave-in-(c-r) kernel + row and column
    // offsets, which preserves the quadrangle inequality.
    std::vector<long long> row_off, col_off;
    for (int r = 0; r < rows; ++r) row_off.push_back(static_cast<long long>(rng.below(20)));
    for (int c = 0; c < cols; ++c) col_off.push_back(static_cast<long long>(rng.below(20)));
    const long long scale = 1 + static_cast<long long>(rng.below(3));
    auto value = [&](int r, int c) {
      const long long d = c - r;
      return scale * d * d + row_off[static_cast<std::size_t>(r)] +
             col_off[static_cast<std::size_t>(c)];
    };
    auto by_smawk = smawk_row_minima<long long>(value, rows, cols);
    auto by_dc = dc_row_minima<long long>(value, rows, cols);
    for (int r = 0; r < rows; ++r) {
      long long best = value(r, 0);
      int arg = 0;
      for (int c = 1; c < cols; ++c)
        if (value(r, c) < best) {
          best = value(r, c);
          arg = c;
        }
      REQUIRE(by_smawk.argmin[static_cast<std::size_t>(r)] == arg);
      REQUIRE(by_smawk.minima[static_cast<std::size_t>(r)] == best);
      REQUIRE(by_dc.argmin[static_cast<std::size_t>(r)] == arg);
      REQUIRE(by_dc.minima[static_cast<std::size_t>(r)] == best);
    }
  }
}

TEST_CASE("t-link paths on P1") {
  auto oracle = EdgeWeightOracle<long long>::build(fixtures::p1_profile(), fixtures::p1_axis());
  auto w = [&](int i, int j) { return oracle.edge_weight(i, j); };
  const long long big = t_link_big<long long>(oracle.sentinel_value(), 2, 4);

  auto t3 = min_weight_t_link_path<long long>(w, 5, 3, big);
  CHECK(t3.weight == -4);
  CHECK(t3.nodes == std::vector<int>{0, 1, 3, 4});

  auto t2 = min_weight_t_link_path<long long>(w, 5, 2, big);
  CHECK(t2.weight == -2);  // -U*n + best single-committee misrepresentation

  auto full = min_weight_t_link_path<long long>(w, 5, 4, big);
  CHECK(full.nodes == std::vector<int>{0, 1, 2, 3, 4});

  auto single = naive_t_link_path<long long>(w, 5, 1, big);
  CHECK(single.nodes == std::vector<int>{0, 4});

  for (int t = 2; t <= 4; ++t) {
    auto fast = min_weight_t_link_path<long long>(w, 5, t, big);
    auto slow = naive_t_link_path<long long>(w, 5, t, big);
    CHECK(fast.weight == slow.weight);
  }

  CHECK_THROWS_AS(min_weight_t_link_path<long long>(w, 5, 0, big), input_error);
  CHECK_THROWS_AS(min_weight_t_link_path<long long>(w, 5, 5, big), input_error);
}

TEST_CASE("three solvers agree and paths re-evaluate to their weight") {
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    GenParams params;
    params.n = 1 + static_cast<int>(seed % 6);
    params.m = 2 + static_cast<int>(seed % 16);
    params.seed = seed;
    params.tie_probability = 0.5;
    params.value_cap = 7;
    auto [profile, axis] = gen_sp_misrep(params);
    auto oracle = EdgeWeightOracle<long long>::build(profile, axis);
    auto w = [&](int i, int j) { return oracle.edge_weight(i, j); };
    const int nodes = oracle.node_count();
    for (int t = 1; t <= std::min(nodes - 1, 8); ++t) {
      const long long big = t_link_big<long long>(oracle.sentinel_value(), profile.n, t);
      auto smawk = min_weight_t_link_path<long long>(w, nodes, t, big, LayeredSolver::smawk);
      auto dc = min_weight_t_link_path<long long>(w, nodes, t, big,
                                                  LayeredSolver::divide_and_conquer);
      auto naive = naive_t_link_path<long long>(w, nodes, t, big);
      REQUIRE(smawk.weight == naive.weight);
      REQUIRE(dc.weight == naive.weight);
      for (const auto* path : {&smawk, &dc, &naive}) {
        REQUIRE(path->edges() == t);
        REQUIRE(path->nodes.front() == 0);
        REQUIRE(path->nodes.back() == nodes - 1);
        long long total = 0;
        for (std::size_t idx = 0; idx + 1 < path->nodes.size(); ++idx) {
          REQUIRE(path->nodes[idx] < path->nodes[idx + 1]);
          total += oracle.edge_weight(path->nodes[idx], path->nodes[idx + 1]);
        }
        REQUIRE(total == path->weight);
      }
    }
  }
}

TEST_CASE("solvers agree on synthetic concave Monge weight functions") {
  Prng rng(1234);
  for (int iter = 0; iter < 40; ++iter) {
    const int nodes = 4 + static_cast<int>(rng.below(20));
    std::vector<long long> node_off;
    for (int i = 0; i < nodes; ++i) node_off.push_back(static_cast<long long>(rng.below(30)));
    auto w = [&](int i, int j) {
      const long long d = j - i;
      return d * d + node_off[static_cast<std::size_t>(i)] + node_off[static_cast<std::size_t>(j)];
    };
    REQUIRE(check_concave_monge<long long>(w, nodes).ok);
    const long long maxabs = static_cast<long long>(nodes) * nodes + 60;
    for (int t = 1; t < std::min(nodes, 7); ++t) {
      const long long big = (t + 2) * (maxabs * (t + 1) + 1) + 1;
      auto fast = min_weight_t_link_path<long long>(w, nodes, t, big);
      auto slow = naive_t_link_path<long long>(w, nodes, t, big);
      REQUIRE(fast.weight == slow.weight);
    }
  }
}
