#include "ccsp/cli.hpp"

#include <array>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ccsp/cc_sp.hpp"
#include "ccsp/core.hpp"
#include "ccsp/errors.hpp"
#include "ccsp/gen.hpp"
#include "ccsp/io.hpp"
#include "ccsp/nearly_sp.hpp"
#include "ccsp/thiele.hpp"

namespace ccsp {

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitNo = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot open input file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Writes to the --output path when given, stdout otherwise.
void emit(const std::string& text, const std::string& output_path, std::ostream& out) {
  if (output_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(output_path, std::ios::binary);
  if (!f) throw input_error("cannot open output file '" + output_path + "'");
  f << text;
}

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct SolveOptions {
  std::string input;
  int k = 0;  // 0 = take from file
  std::string bound;
  std::string algorithm = "smawk";
  bool json_output = false;
  std::string output;
};

void add_solve_options(CLI::App* cmd, SolveOptions& opts, bool with_algorithm) {
  cmd->add_option("--input", opts.input, "profile file")->required();
  cmd->add_option("--k", opts.k, "committee size (overrides the file's k)");
  cmd->add_option("--bound", opts.bound, "decision bound (overrides the file's bound)");
  if (with_algorithm)
    cmd->add_option("--algorithm", opts.algorithm, "path solver: smawk|dc|naive")
        ->check(CLI::IsMember({"smawk", "dc", "naive"}));
  cmd->add_flag("--json", opts.json_output, "machine-readable output");
  cmd->add_option("--output", opts.output, "write the result to a file instead of stdout");
}

PathAlgorithm algo_from_name(const std::string& name) {
  if (name == "dc") return PathAlgorithm::divide_and_conquer;
  if (name == "naive") return PathAlgorithm::naive;
  return PathAlgorithm::smawk;
}

int resolve_k(const SolveOptions& opts, const ParsedInstance& inst) {
  if (opts.k > 0) return opts.k;
  if (inst.k) return *inst.k;
  throw input_error("no committee size: pass --k or store k in the file");
}

json committee_json(const Committee& committee) {
  json arr = json::array();
  for (CandidateId c : committee.members) arr.push_back(c);
  return arr;
}

std::string committee_text(const Committee& committee) {
  std::string s;
  for (CandidateId c : committee.members) {
    if (!s.empty()) s += ' ';
    s += std::to_string(c);
  }
  return s;
}

// decision: nullopt = optimization only, true = YES, false = NO.
int emit_result(const SolveOptions& opts, const std::string& rule, json fields,
                const std::string& objective_text, const Committee& committee,
                std::optional<bool> decision, std::ostream& out) {
  std::ostringstream text;
  if (opts.json_output) {
    fields["command"] = "solve";
    fields["rule"] = rule;
    fields["committee"] = committee_json(committee);
    if (decision) fields["decision"] = *decision ? "yes" : "no";
    text << fields.dump() << "\n";
  } else {
    text << "objective " << objective_text << "\n";
    text << "committee " << committee_text(committee) << "\n";
    if (decision) text << "decision " << (*decision ? "yes" : "no") << "\n";
  }
  emit(text.str(), opts.output, out);
  return decision && !*decision ? kExitNo : kExitOk;
}

template <ScoreType S>
std::optional<S> parse_bound(const SolveOptions& opts, const ParsedInstance& inst);

template <>
std::optional<long long> parse_bound<long long>(const SolveOptions& opts,
                                                const ParsedInstance& inst) {
  if (!opts.bound.empty()) {
    try {
      return std::stoll(opts.bound);
    } catch (...) {
      throw input_error("--bound must be an integer for this instance");
    }
  }
  return inst.bound_int;
}

template <>
std::optional<double> parse_bound<double>(const SolveOptions& opts, const ParsedInstance& inst) {
  if (!opts.bound.empty()) {
    try {
      return std::stod(opts.bound);
    } catch (...) {
      throw input_error("--bound must be a number");
    }
  }
  return inst.bound_real;
}

template <ScoreType S>
std::string objective_to_text(S v) {
  if constexpr (score_traits<S>::exact)
    return std::to_string(v);
  else
    return format_real(v);
}

template <ScoreType S>
void objective_to_json(json& j, S v) {
  if constexpr (score_traits<S>::exact)
    j["objective"] = std::to_string(v);
  else
    j["objective"] = v;
}

template <ScoreType S>
int solve_cc_command(const SolveOptions& opts, const ParsedInstance& inst,
                     const MisrepProfile<S>& profile, bool with_deletion, std::ostream& out) {
  const int k = resolve_k(opts, inst);
  const PathAlgorithm algo = algo_from_name(opts.algorithm);
  std::optional<S> bound = parse_bound<S>(opts, inst);

  CcResult<S> result;
  if (with_deletion) {
    CcDeletionInstance<S> del{profile, inst.deleted, inst.axis, k};
    result = solve_cc_with_deletion_set(del, algo).result;
  } else {
    if (!inst.deleted.empty())
      throw input_error("file has a deletion set; use 'solve cc-del'");
    CcSpInstance<S> sp{profile, inst.axis, k, std::nullopt};
    result = solve_cc_sp(sp, algo);
  }

  std::optional<bool> decision;
  if (bound) decision = score_traits<S>::le(result.objective, *bound);
  json fields{{"n", profile.n}, {"m", profile.m}, {"k", k}, {"algorithm", opts.algorithm}};
  objective_to_json(fields, result.objective);
  return emit_result(opts, with_deletion ? "cc-del" : "cc-sp", std::move(fields),
                     objective_to_text(result.objective), result.committee, decision, out);
}

int solve_cc_dispatch(const SolveOptions& opts, bool with_deletion, std::ostream& out) {
  ParsedInstance inst = parse_profile_file(read_file(opts.input));
  if (inst.mode != BallotMode::misrep)
    throw input_error("Chamberlin-Courant solvers need a misrep profile");
  if (inst.numeric == NumericMode::integer)
    return solve_cc_command<long long>(opts, inst, inst.misrep_int(), with_deletion, out);
  return solve_cc_command<double>(opts, inst, inst.misrep_real(), with_deletion, out);
}

int solve_thiele_dispatch(const SolveOptions& opts, bool with_deletion, std::ostream& out) {
  ParsedInstance inst = parse_profile_file(read_file(opts.input));
  if (inst.mode != BallotMode::approval)
    throw input_error("Thiele solvers need an approval profile");
  if (!inst.has_weights())
    throw input_error("approval file carries no Thiele weights");
  const int k = resolve_k(opts, inst);
  ApprovalProfile approvals = inst.approval_profile();
  ThieleWeightSet weights = inst.weights_for(k);

  ThieleResult result;
  if (with_deletion) {
    ThieleDeletionInstance del{approvals, weights, inst.deleted, inst.axis, k};
    result = solve_thiele_with_deletion_set(del).result;
  } else {
    if (!inst.deleted.empty())
      throw input_error("file has a deletion set; use 'solve thiele-del'");
    result = solve_generalized_thiele_sp(approvals, weights, inst.axis, k);
  }

  std::optional<Rational> bound = inst.bound_rational;
  if (!opts.bound.empty()) bound = parse_rational(opts.bound);
  std::optional<bool> decision;
  if (bound) decision = result.objective >= *bound;  // utility bound: YES iff optimum >= U
  json fields{{"n", approvals.n},
              {"m", approvals.m},
              {"k", k},
              {"objective", rational_to_string(result.objective)}};
  return emit_result(opts, with_deletion ? "thiele-del" : "thiele-sp", std::move(fields),
                     rational_to_string(result.objective), result.committee, decision, out);
}

struct VerifyOptions {
  std::string input;
  bool json_output = false;
};

// Checks the profile restricted to the kept candidates against the file axis.
int verify_command(const VerifyOptions& opts, bool check_sp, std::ostream& out) {
  ParsedInstance inst = parse_profile_file(read_file(opts.input));
  bool ok = false;
  json report;
  std::ostringstream text;
  if (check_sp) {
    if (inst.mode != BallotMode::misrep)
      throw input_error("'verify sp' needs a misrep profile");
    auto run = [&](const auto& profile) {
      auto restricted = restrict_after_deletion(profile, inst.deleted);
      auto res = verify_sp_axis(restricted.profile, reindex_axis(inst.axis, restricted.kept_ids));
      ok = res.ok;
      if (!res.ok) {
        const auto& w = *res.witness;
        json triple = json::array();
        for (CandidateId c : w.triple)
          triple.push_back(restricted.kept_ids[static_cast<std::size_t>(c - 1)]);
        report["witness"] = {{"voter", w.voter + 1}, {"triple", triple}};
        text << "violation voter " << (w.voter + 1) << " triple";
        for (const auto& c : triple) text << ' ' << c.get<CandidateId>();
        text << "\n";
      }
    };
    if (inst.numeric == NumericMode::integer)
      run(inst.misrep_int());
    else
      run(inst.misrep_real());
    report["property"] = "single-peaked";
  } else {
    if (inst.mode != BallotMode::approval)
      throw input_error("'verify ci' needs an approval profile");
    auto restricted = restrict_approvals(inst.approval_profile(), inst.deleted);
    auto res =
        verify_candidate_intervals(restricted.approvals, reindex_axis(inst.axis, restricted.kept_ids));
    ok = res.ok;
    if (!res.ok) {
      report["witness"] = {{"voter", res.voter + 1}};
      text << "violation voter " << (res.voter + 1) << "\n";
    }
    report["property"] = "candidate-interval";
  }
  report["command"] = "verify";
  report["ok"] = ok;
  if (opts.json_output)
    out << report.dump() << "\n";
  else
    out << (ok ? "ok" : "violated") << "\n" << text.str();
  return ok ? kExitOk : kExitNo;
}

struct GenOptions {
  int n = 5;
  int m = 5;
  int d = 1;
  int k = 0;
  std::uint64_t seed = 1;
  long long value_cap = 100;
  double tie_prob = 0.25;
  int min_len = 0;
  int max_len = -1;
  std::string weights = "pav";
  std::string ballots = "misrep";
  std::string output;
};

ThieleRule rule_from_name(const std::string& name) {
  if (name == "pav") return ThieleRule::pav;
  if (name == "cc") return ThieleRule::cc;
  if (name == "av") return ThieleRule::av;
  throw input_error("unknown weight rule '" + name + "'");
}

int gen_command(const GenOptions& opts, const std::string& kind, std::ostream& out) {
  GenParams params;
  params.n = opts.n;
  params.m = opts.m;
  params.seed = opts.seed;
  params.value_cap = opts.value_cap;
  params.tie_probability = opts.tie_prob;
  params.min_interval_len = opts.min_len;
  params.max_interval_len = opts.max_len;
  std::optional<int> k;
  if (opts.k > 0) k = opts.k;

  ParsedInstance inst;
  if (kind == "sp") {
    auto [profile, axis] = gen_sp_misrep(params);
    inst = make_misrep_instance(profile, axis, k);
  } else if (kind == "ci") {
    auto [approvals, axis] = gen_ci_approvals(params);
    inst = make_approval_instance(approvals, axis, rule_from_name(opts.weights), k);
  } else {
    params.d = opts.d;
    if (opts.ballots == "misrep") {
      auto res = gen_nearly_sp_misrep(params);
      inst = make_misrep_instance(res.profile, res.axis, k, res.deleted);
    } else if (opts.ballots == "approval") {
      auto res = gen_nearly_sp_approvals(params);
      inst = make_approval_instance(res.approvals, res.axis, rule_from_name(opts.weights), k,
                                    res.deleted);
    } else {
      throw input_error("--ballots must be misrep or approval");
    }
  }
  emit(render_profile_file(inst), opts.output, out);
  return kExitOk;
}

struct BenchOptions {
  std::vector<int> n{100};
  std::vector<int> m{100};
  std::vector<int> k{10};
  int seeds = 3;
  std::uint64_t seed0 = 0;
  long long value_cap = 100;
  std::string tags = "smawk,dc,naive";
  std::string output;
};

double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

int bench_command(const BenchOptions& opts, std::ostream& out, std::ostream& err) {
  std::vector<std::pair<std::string, PathAlgorithm>> tags;
  {
    std::stringstream ss(opts.tags);
    std::string tag;
    while (std::getline(ss, tag, ',')) {
      if (tag == "smawk")
        tags.emplace_back("monge-smawk", PathAlgorithm::smawk);
      else if (tag == "dc")
        tags.emplace_back("monge-dc", PathAlgorithm::divide_and_conquer);
      else if (tag == "naive")
        tags.emplace_back("naive-quadratic", PathAlgorithm::naive);
      else
        throw input_error("unknown bench tag '" + tag + "'");
    }
  }
  if (tags.empty()) throw input_error("no bench tags selected");
  const bool unverified = tags.size() == 1;

  std::ostringstream csv;
  csv << "algorithm,n,m,k,d,seed,preprocess_ms,solve_ms,objective,unverified\n";
  for (int n : opts.n)
    for (int m : opts.m)
      for (int k : opts.k) {
        if (k < 1 || k > m) throw input_error("bench needs 1 <= k <= m");
        for (int s = 1; s <= opts.seeds; ++s) {
          GenParams params;
          params.n = n;
          params.m = m;
          params.seed = opts.seed0 + static_cast<std::uint64_t>(s);
          params.value_cap = opts.value_cap;
          auto [profile, axis] = gen_sp_misrep(params);

          std::optional<long long> reference;
          for (const auto& [name, algo] : tags) {
            auto t0 = std::chrono::steady_clock::now();
            auto oracle = EdgeWeightOracle<long long>::build(profile, axis);
            const double preprocess_ms = ms_since(t0);
            auto t1 = std::chrono::steady_clock::now();
            CcResult<long long> result = solve_cc_path(profile, axis, oracle, k, algo);
            const double solve_ms = ms_since(t1);
            if (reference && *reference != result.objective) {
              err << "bench objective mismatch on n=" << n << " m=" << m << " k=" << k
                  << " seed=" << params.seed << ": " << name << " got " << result.objective
                  << ", expected " << *reference << "\n";
              return kExitInternal;
            }
            reference = result.objective;
            char row[256];
            std::snprintf(row, sizeof row, "%s,%d,%d,%d,%d,%llu,%.3f,%.3f,%lld,%s\n",
                          name.c_str(), n, m, k, 0,
                          static_cast<unsigned long long>(params.seed), preprocess_ms, solve_ms,
                          static_cast<long long>(result.objective),
                          unverified ? "true" : "false");
            csv << row;
          }
        }
      }
  emit(csv.str(), opts.output, out);
  return kExitOk;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact Chamberlin-Courant and Thiele committee solvers on single-peaked domains"};
  app.require_subcommand(1);

  auto* solve = app.add_subcommand("solve", "compute an optimal committee");
  solve->require_subcommand(1);
  SolveOptions cc_sp_opts, cc_del_opts, thiele_sp_opts, thiele_del_opts;
  auto* cc_sp_cmd = solve->add_subcommand("cc-sp", "Chamberlin-Courant on a single-peaked profile");
  add_solve_options(cc_sp_cmd, cc_sp_opts, true);
  auto* cc_del_cmd =
      solve->add_subcommand("cc-del", "Chamberlin-Courant with a candidate-deletion set");
  add_solve_options(cc_del_cmd, cc_del_opts, true);
  auto* thiele_sp_cmd =
      solve->add_subcommand("thiele-sp", "generalized Thiele on a candidate-interval profile");
  add_solve_options(thiele_sp_cmd, thiele_sp_opts, false);
  auto* thiele_del_cmd =
      solve->add_subcommand("thiele-del", "generalized Thiele with a candidate-deletion set");
  add_solve_options(thiele_del_cmd, thiele_del_opts, false);

  auto* verify = app.add_subcommand("verify", "check structural properties");
  verify->require_subcommand(1);
  VerifyOptions sp_opts, ci_opts;
  auto* verify_sp_cmd = verify->add_subcommand("sp", "single-peakedness on the file axis");
  verify_sp_cmd->add_option("--input", sp_opts.input, "profile file")->required();
  verify_sp_cmd->add_flag("--json", sp_opts.json_output, "machine-readable output");
  auto* verify_ci_cmd = verify->add_subcommand("ci", "candidate-interval approvals");
  verify_ci_cmd->add_option("--input", ci_opts.input, "profile file")->required();
  verify_ci_cmd->add_flag("--json", ci_opts.json_output, "machine-readable output");

  auto* gen = app.add_subcommand("gen", "generate seeded instances");
  gen->require_subcommand(1);
  GenOptions gen_opts;
  std::vector<CLI::App*> gen_cmds;
  for (const char* kind : {"sp", "ci", "nearly"}) {
    auto* cmd = gen->add_subcommand(kind, std::string("generate a ") + kind + " instance");
    cmd->add_option("--n", gen_opts.n, "voters");
    cmd->add_option("--m", gen_opts.m, "candidates");
    cmd->add_option("--seed", gen_opts.seed, "random seed");
    cmd->add_option("--k", gen_opts.k, "committee size to store in the file");
    cmd->add_option("--value-cap", gen_opts.value_cap, "maximum misrepresentation value");
    cmd->add_option("--tie-prob", gen_opts.tie_prob, "probability of flat steps");
    cmd->add_option("--min-len", gen_opts.min_len, "minimum approval interval length");
    cmd->add_option("--max-len", gen_opts.max_len, "maximum approval interval length");
    cmd->add_option("--weights", gen_opts.weights, "weight rule for approval files: pav|cc|av");
    cmd->add_option("--d", gen_opts.d, "deletion-set size (nearly only)");
    cmd->add_option("--ballots", gen_opts.ballots, "nearly ballot kind: misrep|approval");
    cmd->add_option("--output", gen_opts.output, "write to a file instead of stdout");
    gen_cmds.push_back(cmd);
  }

  auto* bench = app.add_subcommand("bench", "compare path algorithms on generated instances");
  BenchOptions bench_opts;
  bench->add_option("--n", bench_opts.n, "voter counts")->delimiter(',');
  bench->add_option("--m", bench_opts.m, "candidate counts")->delimiter(',');
  bench->add_option("--k", bench_opts.k, "committee sizes")->delimiter(',');
  bench->add_option("--seeds", bench_opts.seeds, "seeds per cell");
  bench->add_option("--seed", bench_opts.seed0, "seed offset");
  bench->add_option("--value-cap", bench_opts.value_cap, "maximum misrepresentation value");
  bench->add_option("--tags", bench_opts.tags, "comma list of smawk,dc,naive");
  bench->add_option("--output", bench_opts.output, "write CSV to a file instead of stdout");

  std::vector<const char*> argv;
  argv.push_back("ccsp");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    if (cc_sp_cmd->parsed()) return solve_cc_dispatch(cc_sp_opts, false, out);
    if (cc_del_cmd->parsed()) return solve_cc_dispatch(cc_del_opts, true, out);
    if (thiele_sp_cmd->parsed()) return solve_thiele_dispatch(thiele_sp_opts, false, out);
    if (thiele_del_cmd->parsed()) return solve_thiele_dispatch(thiele_del_opts, true, out);
    if (verify_sp_cmd->parsed()) return verify_command(sp_opts, true, out);
    if (verify_ci_cmd->parsed()) return verify_command(ci_opts, false, out);
    for (std::size_t i = 0; i < gen_cmds.size(); ++i)
      if (gen_cmds[i]->parsed())
        return gen_command(gen_opts, std::array{"sp", "ci", "nearly"}[i], out);
    if (bench->parsed()) return bench_command(bench_opts, out, err);
    err << "usage error: no subcommand\n";
    return kExitInput;
  } catch (const input_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const internal_error& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace ccsp
