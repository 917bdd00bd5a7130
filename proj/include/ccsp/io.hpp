#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ccsp/core.hpp"
#include "ccsp/rational.hpp"
#include "ccsp/thiele.hpp"

namespace ccsp {

enum class BallotMode { misrep, approval };
enum class NumericMode { integer, real };

// One parsed `ccprofile v1` file. The axis is always materialized (identity
// over the kept candidates when the file omits it), so parse(render(x)) == x.
struct ParsedInstance {
  BallotMode mode = BallotMode::misrep;
  NumericMode numeric = NumericMode::integer;
  int n = 0;
  int m = 0;
  std::optional<int> k;
  std::optional<long long> bound_int;    // misrep, integer mode
  std::optional<double> bound_real;      // misrep, real mode
  std::optional<Rational> bound_rational;  // approval mode (utility bound)
  Axis axis;                             // over the kept candidates
  std::vector<CandidateId> deleted;      // sorted, possibly empty
  std::vector<long long> int_values;     // n*m row-major (misrep, integer)
  std::vector<double> real_values;       // n*m row-major (misrep, real)
  std::vector<std::vector<CandidateId>> approvals;
  std::optional<ThieleRule> weight_rule;               // pav / cc / av
  std::vector<std::vector<Rational>> custom_weights;   // when `weights custom`

  bool operator==(const ParsedInstance&) const = default;

  std::vector<CandidateId> kept_candidates() const;
  MisrepProfile<long long> misrep_int() const;
  MisrepProfile<double> misrep_real() const;
  ApprovalProfile approval_profile() const;
  bool has_weights() const { return weight_rule.has_value() || !custom_weights.empty(); }
  // Weight sequences of length >= max(k,1); rules are materialized, custom
  // sequences must already be long enough.
  ThieleWeightSet weights_for(int committee_size) const;
};

// Throws parse_error (malformed text) or validation_error (well-formed text
// with invalid content).
ParsedInstance parse_profile_file(const std::string& text);

std::string render_profile_file(const ParsedInstance& instance);

// Convenience builders used by the generator CLI and tests.
ParsedInstance make_misrep_instance(const MisrepProfile<long long>& profile, const Axis& axis,
                                    std::optional<int> k = std::nullopt,
                                    std::vector<CandidateId> deleted = {});
ParsedInstance make_approval_instance(const ApprovalProfile& approvals, const Axis& axis,
                                      ThieleRule rule, std::optional<int> k = std::nullopt,
                                      std::vector<CandidateId> deleted = {});

}  // namespace ccsp
