#include "ccsp/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <sstream>
#include <utility>

#include "ccsp/errors.hpp"

namespace ccsp {

namespace {

struct Line {
  int number = 0;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    Line line{number, {}};
    std::string tok;
    while (ls >> tok) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

long long parse_int(const std::string& tok, int line) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw parse_error(line, "expected an integer, got '" + tok + "'");
  return v;
}

bool looks_integer(const std::string& tok) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  return ec == std::errc() && ptr == tok.data() + tok.size();
}

double parse_real(const std::string& tok, int line) {
  char* end = nullptr;
  double v = std::strtod(tok.c_str(), &end);
  if (end != tok.c_str() + tok.size() || tok.empty())
    throw parse_error(line, "expected a number, got '" + tok + "'");
  return v;
}

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::vector<CandidateId> ParsedInstance::kept_candidates() const {
  std::vector<bool> drop(static_cast<std::size_t>(m) + 1, false);
  for (CandidateId c : deleted) drop[static_cast<std::size_t>(c)] = true;
  std::vector<CandidateId> kept;
  for (CandidateId c = 1; c <= m; ++c)
    if (!drop[static_cast<std::size_t>(c)]) kept.push_back(c);
  return kept;
}

MisrepProfile<long long> ParsedInstance::misrep_int() const {
  if (mode != BallotMode::misrep || numeric != NumericMode::integer)
    throw input_error("instance is not an integer misrepresentation profile");
  return MisrepProfile<long long>(n, m, int_values);
}

MisrepProfile<double> ParsedInstance::misrep_real() const {
  if (mode != BallotMode::misrep || numeric != NumericMode::real)
    throw input_error("instance is not a real-valued misrepresentation profile");
  return MisrepProfile<double>(n, m, real_values);
}

ApprovalProfile ParsedInstance::approval_profile() const {
  if (mode != BallotMode::approval) throw input_error("instance is not an approval profile");
  return ApprovalProfile(n, m, approvals);
}

ThieleWeightSet ParsedInstance::weights_for(int committee_size) const {
  const int len = std::max(committee_size, 1);
  if (weight_rule) return uniform_weights(*weight_rule, n, len);
  if (custom_weights.empty()) throw input_error("instance carries no Thiele weights");
  for (const auto& w : custom_weights)
    if (static_cast<int>(w.size()) < len)
      throw input_error("custom weight sequence shorter than the committee size");
  return ThieleWeightSet(custom_weights);
}

ParsedInstance parse_profile_file(const std::string& text) {
  std::vector<Line> lines = tokenize(text);
  std::size_t at = 0;
  auto need = [&](const char* what) -> const Line& {
    if (at >= lines.size()) throw parse_error(lines.empty() ? 1 : lines.back().number, std::string("unexpected end of file, expected ") + what);
    return lines[at];
  };

  // Magic line.
  {
    const Line& l = need("'ccprofile v1 <misrep|approval>'");
    if (l.tokens.size() != 3 || l.tokens[0] != "ccprofile" || l.tokens[1] != "v1")
      throw parse_error(l.number, "expected 'ccprofile v1 <misrep|approval>'");
  }
  ParsedInstance inst;
  {
    const Line& l = lines[at];
    if (l.tokens[2] == "misrep")
      inst.mode = BallotMode::misrep;
    else if (l.tokens[2] == "approval")
      inst.mode = BallotMode::approval;
    else
      throw parse_error(l.number, "unknown ballot mode '" + l.tokens[2] + "'");
    ++at;
  }

  // Header: n <N> m <M> [k <K>] [bound <R>]
  std::optional<std::string> bound_token;
  int bound_line = 0;
  {
    const Line& l = need("header 'n <N> m <M>'");
    std::size_t i = 0;
    auto key_value = [&](const std::string& key) -> std::optional<std::string> {
      if (i + 1 < l.tokens.size() && l.tokens[i] == key) {
        std::string v = l.tokens[i + 1];
        i += 2;
        return v;
      }
      return std::nullopt;
    };
    auto nv = key_value("n");
    auto mv = key_value("m");
    if (!nv || !mv) throw parse_error(l.number, "header must start with 'n <N> m <M>'");
    inst.n = static_cast<int>(parse_int(*nv, l.number));
    inst.m = static_cast<int>(parse_int(*mv, l.number));
    if (inst.n < 0) throw parse_error(l.number, "voter count must be non-negative");
    if (inst.m < 1) throw parse_error(l.number, "candidate count must be at least 1");
    if (auto kv = key_value("k")) {
      inst.k = static_cast<int>(parse_int(*kv, l.number));
      if (*inst.k < 1) throw parse_error(l.number, "k must be positive");
    }
    if (auto bv = key_value("bound")) {
      bound_token = *bv;
      bound_line = l.number;
    }
    if (i != l.tokens.size()) throw parse_error(l.number, "trailing tokens in header");
    ++at;
  }

  // Optional axis / deleted lines, in either order.
  std::optional<std::vector<CandidateId>> axis_ids;
  int axis_line = 0;
  while (at < lines.size() &&
         (lines[at].tokens[0] == "axis" || lines[at].tokens[0] == "deleted")) {
    const Line& l = lines[at];
    std::vector<CandidateId> ids;
    for (std::size_t i = 1; i < l.tokens.size(); ++i) {
      long long v = parse_int(l.tokens[i], l.number);
      if (v < 1 || v > inst.m) throw parse_error(l.number, "candidate index out of range");
      ids.push_back(static_cast<CandidateId>(v));
    }
    if (l.tokens[0] == "axis") {
      if (axis_ids) throw parse_error(l.number, "duplicate axis line");
      axis_ids = std::move(ids);
      axis_line = l.number;
    } else {
      if (!inst.deleted.empty()) throw parse_error(l.number, "duplicate deleted line");
      std::sort(ids.begin(), ids.end());
      if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
        throw parse_error(l.number, "deleted candidates must be distinct");
      if (static_cast<int>(ids.size()) > inst.m - 1)
        throw parse_error(l.number, "deleted set must leave at least one candidate");
      inst.deleted = std::move(ids);
    }
    ++at;
  }

  // Ballot lines.
  if (inst.mode == BallotMode::misrep) {
    std::vector<std::vector<std::string>> row_tokens;
    std::vector<int> row_lines;
    for (int v = 0; v < inst.n; ++v) {
      const Line& l = need("a 'row' line");
      if (l.tokens[0] != "row") throw parse_error(l.number, "expected a 'row' line");
      if (static_cast<int>(l.tokens.size()) - 1 != inst.m)
        throw parse_error(l.number, "row needs exactly " + std::to_string(inst.m) +
                                        " entries, got " +
                                        std::to_string(l.tokens.size() - 1));
      row_tokens.emplace_back(l.tokens.begin() + 1, l.tokens.end());
      row_lines.push_back(l.number);
      ++at;
    }
    bool integer = true;
    for (const auto& row : row_tokens)
      for (const auto& tok : row) integer = integer && looks_integer(tok);
    if (bound_token && !looks_integer(*bound_token)) integer = false;
    inst.numeric = integer ? NumericMode::integer : NumericMode::real;
    for (std::size_t r = 0; r < row_tokens.size(); ++r)
      for (const auto& tok : row_tokens[r]) {
        if (integer)
          inst.int_values.push_back(parse_int(tok, row_lines[r]));
        else
          inst.real_values.push_back(parse_real(tok, row_lines[r]));
      }
    if (bound_token) {
      if (integer)
        inst.bound_int = parse_int(*bound_token, bound_line);
      else
        inst.bound_real = parse_real(*bound_token, bound_line);
    }
  } else {
    for (int v = 0; v < inst.n; ++v) {
      const Line& l = need("an 'approve' line");
      if (l.tokens[0] != "approve") throw parse_error(l.number, "expected an 'approve' line");
      std::vector<CandidateId> ids;
      for (std::size_t i = 1; i < l.tokens.size(); ++i) {
        long long c = parse_int(l.tokens[i], l.number);
        if (c < 1 || c > inst.m) throw parse_error(l.number, "candidate index out of range");
        ids.push_back(static_cast<CandidateId>(c));
      }
      std::sort(ids.begin(), ids.end());
      ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
      inst.approvals.push_back(std::move(ids));
      ++at;
    }
    if (bound_token) inst.bound_rational = parse_rational(*bound_token);

    // Optional weights block.
    if (at < lines.size() && lines[at].tokens[0] == "weights") {
      const Line& l = lines[at];
      if (l.tokens.size() != 2) throw parse_error(l.number, "expected 'weights <pav|cc|av|custom>'");
      const std::string& rule = l.tokens[1];
      ++at;
      if (rule == "pav")
        inst.weight_rule = ThieleRule::pav;
      else if (rule == "cc")
        inst.weight_rule = ThieleRule::cc;
      else if (rule == "av")
        inst.weight_rule = ThieleRule::av;
      else if (rule == "custom") {
        for (int v = 0; v < inst.n; ++v) {
          const Line& wl = need("a per-voter weight list");
          std::vector<Rational> w;
          for (const auto& tok : wl.tokens) {
            try {
              w.push_back(parse_rational(tok));
            } catch (const input_error& e) {
              throw parse_error(wl.number, e.what());
            }
          }
          inst.custom_weights.push_back(std::move(w));
          ++at;
        }
      } else {
        throw parse_error(l.number, "unknown weight rule '" + rule + "'");
      }
    }
  }

  if (at < lines.size())
    throw parse_error(lines[at].number, "unexpected line '" + lines[at].tokens[0] + "'");

  // Materialize the axis and run the structural validators.
  std::vector<CandidateId> kept = inst.kept_candidates();
  if (axis_ids) {
    inst.axis = Axis(*axis_ids);
    if (!inst.axis.covers_exactly(kept))
      throw validation_error("line " + std::to_string(axis_line) +
                             ": axis must cover each non-deleted candidate exactly once");
  } else {
    inst.axis = Axis(kept);
  }
  if (inst.k && *inst.k > inst.m) throw validation_error("k exceeds the candidate count");
  try {
    if (inst.mode == BallotMode::misrep) {
      if (inst.numeric == NumericMode::integer)
        inst.misrep_int();
      else
        inst.misrep_real();
      if (inst.bound_int && *inst.bound_int < 0)
        throw validation_error("bound must be non-negative");
      if (inst.bound_real && !(*inst.bound_real >= 0))
        throw validation_error("bound must be non-negative");
    } else {
      inst.approval_profile();
      if (inst.bound_rational && *inst.bound_rational < 0)
        throw validation_error("bound must be non-negative");
      if (!inst.custom_weights.empty()) ThieleWeightSet(inst.custom_weights);
    }
  } catch (const validation_error&) {
    throw;
  } catch (const input_error& e) {
    throw validation_error(e.what());
  }
  return inst;
}

std::string render_profile_file(const ParsedInstance& inst) {
  std::ostringstream out;
  out << "ccprofile v1 " << (inst.mode == BallotMode::misrep ? "misrep" : "approval") << "\n";
  out << "n " << inst.n << " m " << inst.m;
  if (inst.k) out << " k " << *inst.k;
  if (inst.bound_int) out << " bound " << *inst.bound_int;
  if (inst.bound_real) out << " bound " << format_real(*inst.bound_real);
  if (inst.bound_rational) out << " bound " << rational_to_string(*inst.bound_rational);
  out << "\n";
  out << "axis";
  for (CandidateId c : inst.axis.order) out << ' ' << c;
  out << "\n";
  if (!inst.deleted.empty()) {
    out << "deleted";
    for (CandidateId c : inst.deleted) out << ' ' << c;
    out << "\n";
  }
  if (inst.mode == BallotMode::misrep) {
    for (int v = 0; v < inst.n; ++v) {
      out << "row";
      for (int c = 0; c < inst.m; ++c) {
        const std::size_t idx =
            static_cast<std::size_t>(v) * static_cast<std::size_t>(inst.m) + static_cast<std::size_t>(c);
        if (inst.numeric == NumericMode::integer)
          out << ' ' << inst.int_values[idx];
        else
          out << ' ' << format_real(inst.real_values[idx]);
      }
      out << "\n";
    }
  } else {
    for (const auto& a : inst.approvals) {
      out << "approve";
      for (CandidateId c : a) out << ' ' << c;
      out << "\n";
    }
    if (inst.weight_rule) {
      switch (*inst.weight_rule) {
        case ThieleRule::pav: out << "weights pav\n"; break;
        case ThieleRule::cc: out << "weights cc\n"; break;
        case ThieleRule::av: out << "weights av\n"; break;
        case ThieleRule::inverse_square:
          throw input_error("the 1/i^2 rule has no file-format name; render custom weights");
      }
    } else if (!inst.custom_weights.empty()) {
      out << "weights custom\n";
      for (const auto& w : inst.custom_weights) {
        bool first = true;
        for (const auto& q : w) {
          out << (first ? "" : " ") << rational_to_string(q);
          first = false;
        }
        out << "\n";
      }
    }
  }
  return out.str();
}

ParsedInstance make_misrep_instance(const MisrepProfile<long long>& profile, const Axis& axis,
                                    std::optional<int> k, std::vector<CandidateId> deleted) {
  ParsedInstance inst;
  inst.mode = BallotMode::misrep;
  inst.numeric = NumericMode::integer;
  inst.n = profile.n;
  inst.m = profile.m;
  inst.k = k;
  inst.axis = axis;
  std::sort(deleted.begin(), deleted.end());
  inst.deleted = std::move(deleted);
  inst.int_values = profile.values;
  return inst;
}

ParsedInstance make_approval_instance(const ApprovalProfile& approvals, const Axis& axis,
                                      ThieleRule rule, std::optional<int> k,
                                      std::vector<CandidateId> deleted) {
  ParsedInstance inst;
  inst.mode = BallotMode::approval;
  inst.n = approvals.n;
  inst.m = approvals.m;
  inst.k = k;
  inst.axis = axis;
  std::sort(deleted.begin(), deleted.end());
  inst.deleted = std::move(deleted);
  inst.approvals = approvals.approvals;
  inst.weight_rule = rule;
  return inst;
}

}  // namespace ccsp
