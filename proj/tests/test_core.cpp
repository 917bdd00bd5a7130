#include <doctest.h>

#include <algorithm>
#include <vector>

#include "ccsp/core.hpp"
#include "ccsp/gen.hpp"
#include "ccsp/oracle.hpp"
#include "ccsp/prng.hpp"
#include "fixtures.hpp"

using namespace ccsp;

TEST_CASE("verify_sp_axis accepts P1 and rejects a bumped row") {
  CHECK(verify_sp_axis(fixtures::p1_profile(), fixtures::p1_axis()).ok);

  MisrepProfile<long long> bumped(1, 3, {0, 2, 1});
  auto res = verify_sp_axis(bumped, Axis({1, 2, 3}));
  REQUIRE_FALSE(res.ok);
  CHECK(res.witness->voter == 0);
  CHECK(res.witness->triple == std::array<CandidateId, 3>{1, 2, 3});
}

TEST_CASE("profiles with at most two candidates are always single-peaked") {
  MisrepProfile<long long> two(3, 2, {5, 0, 0, 5, 7, 7});
  CHECK(verify_sp_axis(two, Axis({1, 2})).ok);
  CHECK(verify_sp_axis(two, Axis({2, 1})).ok);
  MisrepProfile<long long> one(2, 1, {3, 4});
  CHECK(verify_sp_axis(one, Axis({1})).ok);
}

TEST_CASE("verify_sp_axis rejects an axis that does not cover the candidates") {
  CHECK_THROWS_AS(verify_sp_axis(fixtures::p1_profile(), Axis({1, 2})), input_error);
  CHECK_THROWS_AS(verify_sp_axis(fixtures::p1_profile(), Axis({1, 2, 2})), input_error);
}

TEST_CASE("sweep checker agrees with the all-triples oracle") {
  // Random small matrices, most of them not single-peaked; the cubic
  // definitional check is the authority, witnesses must really violate.
  Prng rng(7);
  int sp_seen = 0, non_sp_seen = 0;
  for (int iter = 0; iter < 400; ++iter) {
    const int n = 1 + static_cast<int>(rng.below(3));
    const int m = 3 + static_cast<int>(rng.below(10));
    std::vector<long long> vals;
    for (int i = 0; i < n * m; ++i) vals.push_back(static_cast<long long>(rng.below(4)));
    MisrepProfile<long long> profile(n, m, vals);
    Axis axis = Axis::identity(m);
    auto fast = verify_sp_axis(profile, axis);
    auto slow = verify_sp_axis_triples(profile, axis);
    REQUIRE(fast.ok == slow.ok);
    if (fast.ok) {
      ++sp_seen;
    } else {
      ++non_sp_seen;
      const auto& w = *fast.witness;
      const long long ri = profile.at(w.voter, w.triple[0]);
      const long long rj = profile.at(w.voter, w.triple[1]);
      const long long rk = profile.at(w.voter, w.triple[2]);
      CHECK(ri < rj);
      CHECK(rj > rk);
    }
  }
  CHECK(sp_seen > 0);
  CHECK(non_sp_seen > 0);
}

TEST_CASE("generated SP instances pass verification on permuted axes") {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    GenParams params;
    params.n = 4;
    params.m = 9;
    params.seed = seed;
    auto [profile, axis] = gen_sp_misrep(params);
    CHECK(verify_sp_axis(profile, axis).ok);
  }
}

TEST_CASE("verify_candidate_intervals on P2 and a gapped ballot") {
  CHECK(verify_candidate_intervals(fixtures::p2_approvals(), fixtures::p2_axis()).ok);

  ApprovalProfile gapped(1, 3, {{1, 3}});
  auto res = verify_candidate_intervals(gapped, Axis({1, 2, 3}));
  REQUIRE_FALSE(res.ok);
  CHECK(res.voter == 0);
  // The same ballot is an interval once the axis moves c2 aside.
  CHECK(verify_candidate_intervals(gapped, Axis({1, 3, 2})).ok);

  ApprovalProfile empty(2, 3, {{}, {}});
  CHECK(verify_candidate_intervals(empty, Axis({1, 2, 3})).ok);
}

TEST_CASE("misrep_of_committee on P1") {
  auto p1 = fixtures::p1_profile();
  CHECK(misrep_of_committee(p1, Committee({1, 3})) == 0);
  CHECK(misrep_of_committee(p1, Committee({2})) == 2);
  MisrepProfile<long long> empty(0, 3, {});
  CHECK(misrep_of_committee(empty, Committee({2})) == 0);
  CHECK_THROWS_AS(misrep_of_committee(p1, Committee{}), input_error);
  CHECK_THROWS_AS(misrep_of_committee(p1, Committee({4})), input_error);
}

TEST_CASE("thiele_utility on P2") {
  auto p2 = fixtures::p2_approvals();
  auto pav = fixtures::p2_pav_weights();
  CHECK(thiele_utility(p2, pav, Committee({1, 2})) == rational_of(7, 2));
  CHECK(thiele_utility(p2, pav, Committee({1, 3})) == 3);

  ApprovalProfile none(2, 3, {{}, {}});
  CHECK(thiele_utility(none, uniform_weights(ThieleRule::pav, 2, 3), Committee({1, 2})) == 0);

  auto short_weights = uniform_weights(ThieleRule::pav, 3, 1);
  CHECK_THROWS_AS(thiele_utility(p2, short_weights, Committee({1, 2})), input_error);
}

TEST_CASE("misrepresentation is monotone under committee growth") {
  Prng rng(11);
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    GenParams params;
    params.n = 5;
    params.m = 8;
    params.seed = seed;
    auto [profile, axis] = gen_sp_misrep(params);
    std::vector<CandidateId> small{1 + static_cast<CandidateId>(rng.below(8))};
    std::vector<CandidateId> big = small;
    CandidateId extra = 1 + static_cast<CandidateId>(rng.below(8));
    if (extra == small[0]) extra = extra % 8 + 1;
    big.push_back(extra);
    CHECK(misrep_of_committee(profile, Committee(big)) <=
          misrep_of_committee(profile, Committee(small)));
  }
}

TEST_CASE("thiele utility is monotone under committee growth") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    GenParams params;
    params.n = 5;
    params.m = 8;
    params.seed = seed;
    auto [approvals, axis] = gen_ci_approvals(params);
    auto weights = uniform_weights(ThieleRule::pav, 5, 8);
    Prng rng(seed);
    CandidateId a = 1 + static_cast<CandidateId>(rng.below(8));
    CandidateId b = a % 8 + 1;
    CHECK(thiele_utility(approvals, weights, Committee({a, b})) >=
          thiele_utility(approvals, weights, Committee({a})));
  }
}

TEST_CASE("cross-rule identity: CC-weight utility plus approval misrep equals n") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    GenParams params;
    params.n = 6;
    params.m = 7;
    params.seed = seed;
    auto [approvals, axis] = gen_ci_approvals(params);
    auto cc_weights = uniform_weights(ThieleRule::cc, 6, 7);
    auto misrep = approval_misrep_profile(approvals);
    Prng rng(seed ^ 0xabcd);
    CandidateId a = 1 + static_cast<CandidateId>(rng.below(7));
    CandidateId b = a % 7 + 1;
    Committee w({a, b});
    Rational util = thiele_utility(approvals, cc_weights, w);
    long long mis = misrep_of_committee(misrep, w);
    CHECK(util + to_rational(mis) == approvals.n);
  }
}

TEST_CASE("restrict_after_deletion") {
  auto p3 = fixtures::p3_profile();
  auto restricted = restrict_after_deletion(p3, {4});
  CHECK(restricted.profile == fixtures::p1_profile());
  CHECK(restricted.kept_ids == std::vector<CandidateId>{1, 2, 3});

  auto identity = restrict_after_deletion(fixtures::p1_profile(), {});
  CHECK(identity.profile == fixtures::p1_profile());

  CHECK_THROWS_AS(restrict_after_deletion(fixtures::p1_profile(), {1, 2, 3}), input_error);
}

TEST_CASE("float-mode profiles verify with tolerance") {
  MisrepProfile<double> profile(1, 3, {1.0, 1.0 + 4e-10, 2.0});
  CHECK(verify_sp_axis(profile, Axis({1, 2, 3})).ok);
  MisrepProfile<double> bad(1, 3, {0.0, 2.0, 1.0});
  CHECK_FALSE(verify_sp_axis(bad, Axis({1, 2, 3})).ok);
  CHECK_THROWS_AS(MisrepProfile<double>(1, 1, {-0.5}), validation_error);
}

TEST_CASE("committee construction rejects duplicates") {
  CHECK_THROWS_AS(Committee({1, 1}), input_error);
  Committee c({3, 1, 2});
  CHECK(c.members == std::vector<CandidateId>{1, 2, 3});
}
