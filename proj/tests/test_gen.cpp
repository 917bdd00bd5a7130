#include <doctest.h>

#include <set>
#include <vector>

#include "ccsp/core.hpp"
#include "ccsp/gen.hpp"
#include "ccsp/io.hpp"

using namespace ccsp;

TEST_CASE("every generated instance passes its structural validator") {
  for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
    GenParams params;
    params.n = 1 + static_cast<int>(seed % 5);
    params.m = 2 + static_cast<int>(seed % 9);
    params.seed = seed;
    params.d = static_cast<int>(seed % static_cast<std::uint64_t>(params.m));

    auto [profile, axis] = gen_sp_misrep(params);
    REQUIRE(verify_sp_axis(profile, axis).ok);

    auto [approvals, ci_axis] = gen_ci_approvals(params);
    REQUIRE(verify_candidate_intervals(approvals, ci_axis).ok);

    auto nearly = gen_nearly_sp_misrep(params);
    auto restricted = restrict_after_deletion(nearly.profile, nearly.deleted);
    REQUIRE(verify_sp_axis(restricted.profile, reindex_axis(nearly.axis, restricted.kept_ids)).ok);

    auto nearly_app = gen_nearly_sp_approvals(params);
    auto rapp = restrict_approvals(nearly_app.approvals, nearly_app.deleted);
    REQUIRE(verify_candidate_intervals(rapp.approvals, reindex_axis(nearly_app.axis, rapp.kept_ids)).ok);
  }
}

TEST_CASE("same seed reproduces the instance, d=0 degenerates to plain SP") {
  GenParams params;
  params.n = 6;
  params.m = 10;
  params.seed = 42;
  auto a = gen_sp_misrep(params);
  auto b = gen_sp_misrep(params);
  CHECK(a.first == b.first);
  CHECK(a.second == b.second);

  auto ca = gen_ci_approvals(params);
  auto cb = gen_ci_approvals(params);
  CHECK(ca.first == cb.first);

  params.d = 0;
  auto nearly = gen_nearly_sp_misrep(params);
  CHECK(nearly.deleted.empty());
  CHECK(verify_sp_axis(nearly.profile, nearly.axis).ok);
}

TEST_CASE("distinct seeds rarely collide") {
  int distinct = 0;
  for (std::uint64_t s = 1; s <= 100; ++s) {
    GenParams params;
    params.n = 4;
    params.m = 8;
    params.seed = s;
    auto a = gen_sp_misrep(params);
    params.seed = s + 1000;
    auto b = gen_sp_misrep(params);
    if (a.first != b.first || a.second != b.second) ++distinct;
  }
  CHECK(distinct >= 99);
}

TEST_CASE("tie_probability zero yields strictly unimodal rows off-peak") {
  GenParams params;
  params.n = 8;
  params.m = 12;
  params.tie_probability = 0.0;
  params.value_cap = 16 * params.m;  // steps of at most 3 can never hit the cap
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    params.seed = seed;
    auto [profile, axis] = gen_sp_misrep(params);
    for (int v = 0; v < profile.n; ++v) {
      std::vector<long long> vals;
      for (int pos = 0; pos < profile.m; ++pos) vals.push_back(profile.at(v, axis.at(pos)));
      int pos = 0;
      while (pos + 1 < profile.m && vals[pos] > vals[pos + 1]) ++pos;
      for (; pos + 1 < profile.m; ++pos) REQUIRE(vals[pos] < vals[pos + 1]);
    }
  }
}

TEST_CASE("generator parameters are validated") {
  GenParams params;
  params.m = 0;
  CHECK_THROWS_AS(gen_sp_misrep(params), input_error);
  params.m = 4;
  params.d = 4;
  CHECK_THROWS_AS(gen_nearly_sp_misrep(params), input_error);
  params.d = 0;
  params.tie_probability = 1.5;
  CHECK_THROWS_AS(gen_sp_misrep(params), input_error);
}

TEST_CASE("golden rendering of a fixed seed stays stable") {
  GenParams params;
  params.n = 2;
  params.m = 4;
  params.seed = 7;
  params.value_cap = 9;
  auto [profile, axis] = gen_sp_misrep(params);
  std::string text = render_profile_file(make_misrep_instance(profile, axis, 2));
  // Frozen output of the documented PRNG; a change here breaks cross-language
  // fixture reproducibility.
  CHECK(text ==
        "ccprofile v1 misrep\n"
        "n 2 m 4 k 2\n"
        "axis 1 4 2 3\n"
        "row 1 3 6 2\n"
        "row 4 1 0 3\n");
}
