#pragma once

// Shared hand-checked fixtures:
//   P1: two mirrored Borda-style voters over three candidates.
//   P2: three interval approval ballots over three candidates, PAV weights.
//   P3: P1 plus an off-axis candidate c4 forming the deletion set {4}.

#include <utility>
#include <vector>

#include "ccsp/core.hpp"
#include "ccsp/thiele.hpp"

namespace fixtures {

inline ccsp::MisrepProfile<long long> p1_profile() {
  return ccsp::MisrepProfile<long long>(2, 3, {0, 1, 2, 2, 1, 0});
}

inline ccsp::Axis p1_axis() { return ccsp::Axis({1, 2, 3}); }

inline ccsp::ApprovalProfile p2_approvals() {
  return ccsp::ApprovalProfile(3, 3, {{1}, {1, 2}, {2, 3}});
}

inline ccsp::Axis p2_axis() { return ccsp::Axis({1, 2, 3}); }

inline ccsp::ThieleWeightSet p2_pav_weights(int length = 3) {
  return ccsp::uniform_weights(ccsp::ThieleRule::pav, 3, length);
}

inline ccsp::MisrepProfile<long long> p3_profile() {
  return ccsp::MisrepProfile<long long>(2, 4, {0, 1, 2, 1, 2, 1, 0, 1});
}

inline std::vector<ccsp::CandidateId> p3_deletion_set() { return {4}; }

}  // namespace fixtures
