// Copyright 2026 The clcs Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "clcs/oracle.hpp"
#include "clcs/predicates.hpp"

namespace clcs::cli {

using nlohmann::json;

std::string read_sequence_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open sequence file '" + path + "'");
  std::string seq, line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.front() == '>') continue;
    for (char c : line) {
      if (!std::isspace(static_cast<unsigned char>(c))) seq.push_back(c);
    }
  }
  return seq;
}

void require_printable(std::string_view name, std::string_view value) {
  for (char c : value) {
    const auto u = static_cast<unsigned char>(c);
    if (u < 0x20 || u > 0x7E) {
      throw UsageError(std::string(name) +
                       " contains a symbol outside printable ASCII");
    }
  }
}

std::size_t memory_budget_from_env() {
  const char* raw = std::getenv("CLCS_MEMORY_BUDGET");
  if (raw == nullptr || *raw == '\0') return kDefaultMemoryBudget;
  std::string_view text(raw);
  std::size_t bytes = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), bytes);
  if (ec != std::errc() || end != text.data() + text.size() || bytes == 0) {
    throw UsageError("CLCS_MEMORY_BUDGET must be a positive byte count, got '" +
                     std::string(text) + "'");
  }
  return bytes;
}

namespace {

Instance make_instance(const Inputs& inputs) {
  if (inputs.include.empty()) {
    throw UsageError(
        "--include must be a nonempty string: without it the problem is "
        "SEQ-EC-LCS, which this tool does not solve");
  }
  if (inputs.exclude.empty()) {
    throw UsageError(
        "--exclude must be a nonempty string: without it the problem is "
        "STR-IC-LCS, which this tool does not solve");
  }
  require_printable("X", inputs.x);
  require_printable("Y", inputs.y);
  require_printable("P", inputs.include);
  require_printable("Q", inputs.exclude);
  return Instance(inputs.x, inputs.y, inputs.include, inputs.exclude);
}

double millis(std::chrono::nanoseconds d) {
  return std::chrono::duration<double, std::milli>(d).count();
}

json stats_json(const SolverStats& stats) {
  return {
      {"suffix_updates", stats.suffix_updates},
      {"forward_updates", stats.forward_updates},
      {"reverse_updates", stats.reverse_updates},
      {"cell_updates", stats.cell_updates},
      {"combine_candidates", stats.combine_candidates},
      {"wall_time_ms", millis(stats.wall_time)},
  };
}

json length_json(ExtLen len) {
  return len.finite() ? json(len.value()) : json(nullptr);
}

const char* yes_no(bool flag) { return flag ? "yes" : "no"; }

}  // namespace

int cmd_solve(const SolveRequest& request, std::ostream& out, std::ostream& err) {
  const Instance instance = make_instance(request.inputs);
  SolverConfig config;
  config.algorithm = request.algorithm;
  config.memory_budget = request.memory_budget;
  config.collect_stats = request.stats;

  SolveResult result;
  try {
    result = solve(instance, config);
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const SizeError& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  const Outcome& outcome = result.outcome;

  if (request.format == Format::kJson) {
    json doc = {
        {"feasible", outcome.feasible()},
        {"length", length_json(outcome.length)},
        {"lcs", outcome.witness ? json(*outcome.witness) : json(nullptr)},
        {"algorithm", to_string(request.algorithm)},
        {"n", instance.n()},
        {"m", instance.m()},
        {"s", instance.s()},
        {"t", instance.t()},
        {"x", instance.x().str()},
        {"y", instance.y().str()},
        {"include", instance.p().str()},
        {"exclude", instance.q().str()},
    };
    if (outcome.feasible()) {
      doc["decomposition"] = {{"i", outcome.indices.i},
                              {"j", outcome.indices.j},
                              {"k", outcome.indices.k},
                              {"r", outcome.indices.r}};
    }
    if (request.stats) doc["stats"] = stats_json(result.stats);
    out << doc.dump() << "\n";
  } else if (outcome.feasible()) {
    out << "length: " << outcome.length << "\n"
        << "lcs: " << *outcome.witness << "\n";
  } else {
    out << "infeasible: no common subsequence includes P as a substring "
           "while excluding Q as a subsequence\n";
  }
  if (request.format == Format::kText && request.stats) {
    const SolverStats& st = result.stats;
    out << "algorithm: " << to_string(request.algorithm) << "\n"
        << "cell_updates: " << st.cell_updates << " (suffix " << st.suffix_updates
        << ", forward " << st.forward_updates << ", reverse "
        << st.reverse_updates << ")\n"
        << "combine_candidates: " << st.combine_candidates << "\n"
        << "wall_time_ms: " << millis(st.wall_time) << "\n";
  }
  return outcome.feasible() ? kExitOk : kExitNegative;
}

int cmd_check(const CheckRequest& request, std::ostream& out, std::ostream& err) {
  (void)err;
  const Instance instance = make_instance(request.inputs);
  require_printable("candidate", request.candidate);
  const ValidationReport report = validate(instance, request.candidate);
  if (request.format == Format::kJson) {
    out << json{{"valid", report.valid()},
                {"is_common_subsequence", report.is_common_subsequence},
                {"includes_p_substring", report.includes_p_substring},
                {"excludes_q_subsequence", report.excludes_q_subsequence},
                {"length", report.length}}
               .dump()
        << "\n";
  } else {
    out << "valid: " << yes_no(report.valid()) << "\n"
        << "common subsequence of X and Y: "
        << yes_no(report.is_common_subsequence) << "\n"
        << "includes P as substring: " << yes_no(report.includes_p_substring)
        << "\n"
        << "excludes Q as subsequence: "
        << yes_no(report.excludes_q_subsequence) << "\n"
        << "length: " << report.length << "\n";
  }
  return report.valid() ? kExitOk : kExitNegative;
}

int cmd_fuzz(const FuzzRequest& request, std::span<const SolverUnderTest> solvers,
             std::ostream& out, std::ostream& err) {
  const DifferentialReport report = run_differential(request.options, solvers);
  const std::uint64_t seed = request.options.params.seed;

  if (request.format == Format::kJson) {
    json mismatches = json::array();
    for (const Mismatch& mm : report.mismatches) {
      mismatches.push_back({{"seed", seed},
                            {"index", mm.index},
                            {"x", mm.instance.x().str()},
                            {"y", mm.instance.y().str()},
                            {"include", mm.instance.p().str()},
                            {"exclude", mm.instance.q().str()},
                            {"detail", mm.detail}});
    }
    out << json{{"seed", seed},
                {"checked", report.checked},
                {"feasible", report.feasible},
                {"ok", report.ok()},
                {"mismatches", mismatches}}
               .dump()
        << "\n";
  } else {
    for (const Mismatch& mm : report.mismatches) {
      err << "mismatch: seed=" << seed << " index=" << mm.index << " "
          << mm.instance << ": " << mm.detail << "\n";
    }
    if (report.ok()) {
      out << report.checked << " ok\n";
    } else {
      out << report.checked << " checked, " << report.mismatches.size()
          << " mismatched\n";
    }
    const double fraction =
        report.checked == 0 ? 0.0
                            : static_cast<double>(report.feasible) /
                                  static_cast<double>(report.checked);
    out << "feasible: " << report.feasible << "/" << report.checked << " ("
        << std::fixed << std::setprecision(1) << 100.0 * fraction << "%)\n";
  }
  return report.ok() ? kExitOk : kExitNegative;
}

Instance bench_instance(const BenchRequest& request, std::size_t s) {
  Xorshift64Star rng(request.seed, s);
  auto draw = [&](std::size_t len) {
    std::string out(len, 'a');
    for (char& c : out) c = static_cast<char>('a' + rng.below(request.alphabet));
    return out;
  };
  std::string x = draw(request.n), y = draw(request.m);
  const std::string p = draw(s), q = draw(request.t);
  for (std::string* host : {&x, &y}) {
    if (host->size() >= p.size()) {
      host->replace(rng.below(host->size() - p.size() + 1), p.size(), p);
    }
  }
  return Instance(std::move(x), std::move(y), p, q);
}

std::vector<BenchRow> run_bench(const BenchRequest& request) {
  if (request.alphabet < 1 || request.alphabet > 26) {
    throw UsageError("--alphabet must be in [1, 26]");
  }
  if (request.t < 1) throw UsageError("--t must be >= 1");
  std::vector<BenchRow> rows;
  for (std::size_t s : request.s_values) {
    if (s < 1) throw UsageError("--s values must be >= 1");
    const Instance instance = bench_instance(request, s);
    BenchRow row{instance.n(), instance.m(), s, instance.t(), {}, {}};
    auto measure = [&](BenchCell& cell, auto&& solver) {
      try {
        SolveResult result = solver(instance, request.memory_budget);
        cell.stats = result.stats;
        cell.length = result.outcome.length;
      } catch (const CapacityError& e) {
        cell.error = e.what();
      }
    };
    measure(row.quartic, [](const Instance& in, std::size_t budget) {
      return solve_quartic(in, budget);
    });
    measure(row.cubic, [](const Instance& in, std::size_t budget) {
      return solve_cubic(in, budget);
    });
    rows.push_back(std::move(row));
  }
  return rows;
}

int cmd_bench(const BenchRequest& request, std::ostream& out, std::ostream& err) {
  (void)err;
  const std::vector<BenchRow> rows = run_bench(request);
  bool any_error = false;

  if (request.format == Format::kJson) {
    json doc = json::array();
    auto cell_json = [](const BenchCell& cell) {
      if (cell.error) return json{{"error", *cell.error}};
      json j = stats_json(cell.stats);
      j["length"] = length_json(cell.length);
      return j;
    };
    for (const BenchRow& row : rows) {
      any_error = any_error || row.quartic.error || row.cubic.error;
      doc.push_back({{"n", row.n},
                     {"m", row.m},
                     {"s", row.s},
                     {"t", row.t},
                     {"quartic", cell_json(row.quartic)},
                     {"cubic", cell_json(row.cubic)}});
    }
    out << doc.dump() << "\n";
    return any_error ? kExitError : kExitOk;
  }

  out << std::left << std::setw(5) << "s" << std::setw(16) << "quartic.f"
      << std::setw(12) << "quartic.h" << std::setw(12) << "quartic.ms"
      << std::setw(12) << "cubic.v" << std::setw(12) << "cubic.h"
      << std::setw(12) << "cubic.ms" << "length\n";
  for (const BenchRow& row : rows) {
    out << std::left << std::setw(5) << row.s;
    if (row.quartic.error) {
      any_error = true;
      out << std::setw(40) << "capacity error";
    } else {
      const SolverStats& q = row.quartic.stats;
      out << std::setw(16) << q.suffix_updates << std::setw(12)
          << q.reverse_updates << std::setw(12) << std::fixed
          << std::setprecision(2) << millis(q.wall_time);
    }
    if (row.cubic.error) {
      any_error = true;
      out << std::setw(36) << "capacity error";
    } else {
      const SolverStats& c = row.cubic.stats;
      out << std::setw(12) << c.forward_updates << std::setw(12)
          << c.reverse_updates << std::setw(12) << std::fixed
          << std::setprecision(2) << millis(c.wall_time);
    }
    const ExtLen len = row.cubic.error ? row.quartic.length : row.cubic.length;
    out << len << "\n";
  }
  for (const BenchRow& row : rows) {
    if (row.quartic.error) out << "s=" << row.s << " quartic: " << *row.quartic.error << "\n";
    if (row.cubic.error) out << "s=" << row.s << " cubic: " << *row.cubic.error << "\n";
  }
  out << "n=" << request.n << " m=" << request.m << " t=" << request.t
      << " seed=" << request.seed
      << "; quartic.f = n*m*(s+1)*(t+1), cubic.v = n*m*(t+1), h = n*m*t\n";
  return any_error ? kExitError : kExitOk;
}

namespace {

struct SequenceFlag {
  std::optional<std::string> value;
  std::optional<std::string> path;
};

struct InputFlags {
  SequenceFlag x, y, include, exclude;
};

void add_sequence_flag(CLI::App* sub, SequenceFlag& flag, const std::string& name,
                       const std::string& what) {
  CLI::Option* inline_opt = sub->add_option("--" + name, flag.value, what);
  CLI::Option* file_opt =
      sub->add_option("--" + name + "-file", flag.path,
                      what + ", read from a plain or FASTA file");
  inline_opt->excludes(file_opt);
}

void add_input_flags(CLI::App* sub, InputFlags& flags) {
  add_sequence_flag(sub, flags.x, "x", "first input sequence X");
  add_sequence_flag(sub, flags.y, "y", "second input sequence Y");
  add_sequence_flag(sub, flags.include, "include",
                    "constraint P that must appear as a substring");
  add_sequence_flag(sub, flags.exclude, "exclude",
                    "constraint Q that must not appear as a subsequence");
}

std::string resolve(const SequenceFlag& flag, const std::string& name) {
  if (flag.value) return *flag.value;
  if (flag.path) return read_sequence_file(*flag.path);
  throw UsageError("missing --" + name + " (or --" + name + "-file)");
}

Inputs resolve_inputs(const InputFlags& flags) {
  return Inputs{resolve(flags.x, "x"), resolve(flags.y, "y"),
                resolve(flags.include, "include"),
                resolve(flags.exclude, "exclude")};
}

void add_format_flag(CLI::App* sub, std::string& format) {
  sub->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
}

Format parse_format(const std::string& text) {
  return text == "json" ? Format::kJson : Format::kText;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err, std::span<const SolverUnderTest> solvers) {
  CLI::App app{"Longest common subsequence of X and Y that contains P as a "
               "substring and avoids Q as a subsequence.",
               "clcs"};
  app.require_subcommand(1);

  InputFlags solve_inputs, check_inputs;
  std::string solve_algo = "cubic", solve_format = "text";
  bool solve_stats = false;
  CLI::App* solve_cmd = app.add_subcommand("solve", "compute a constrained LCS");
  add_input_flags(solve_cmd, solve_inputs);
  solve_cmd->add_option("--algo", solve_algo, "solver")
      ->check(CLI::IsMember({"quartic", "cubic", "oracle"}));
  add_format_flag(solve_cmd, solve_format);
  solve_cmd->add_flag("--stats", solve_stats, "report exact work counters");

  std::optional<std::string> candidate, candidate_path, solution_path;
  std::string check_format = "text";
  CLI::App* check_cmd =
      app.add_subcommand("check", "validate a candidate answer");
  add_input_flags(check_cmd, check_inputs);
  CLI::Option* cand_opt =
      check_cmd->add_option("--candidate", candidate, "candidate string");
  CLI::Option* cand_file_opt = check_cmd->add_option(
      "--candidate-file", candidate_path, "candidate string from a file");
  CLI::Option* solution_opt = check_cmd->add_option(
      "--solution", solution_path,
      "JSON document written by `solve --format json`; supplies every input");
  cand_opt->excludes(cand_file_opt);
  solution_opt->excludes(cand_opt)->excludes(cand_file_opt);
  add_format_flag(check_cmd, check_format);

  FuzzRequest fuzz;
  std::optional<std::size_t> fuzz_max_m;
  std::string fuzz_format = "text";
  fuzz.options.params.seed = 42;
  CLI::App* fuzz_cmd = app.add_subcommand(
      "fuzz", "differential test of both solvers against brute force");
  fuzz_cmd->add_option("--seed", fuzz.options.params.seed, "generator seed");
  fuzz_cmd->add_option("--iters", fuzz.options.iterations, "instances to check")
      ->required();
  fuzz_cmd->add_option("--max-n", fuzz.options.params.n_max, "longest X")
      ->check(CLI::Range(1, 18));
  fuzz_cmd->add_option("--max-m", fuzz_max_m, "longest Y (default: --max-n)");
  fuzz_cmd->add_option("--max-s", fuzz.options.params.s_max, "longest P")
      ->check(CLI::Range(1, 18));
  fuzz_cmd->add_option("--max-t", fuzz.options.params.t_max, "longest Q")
      ->check(CLI::PositiveNumber);
  fuzz_cmd->add_option("--alphabet", fuzz.options.params.alphabet_size,
                       "largest alphabet size (2..8)")
      ->check(CLI::Range(2, 8));
  fuzz_cmd->add_option("--plant", fuzz.options.params.plant_probability,
                       "probability of planting P in X and Y")
      ->check(CLI::Range(0.0, 1.0));
  fuzz_cmd->add_option("--threads", fuzz.options.threads, "worker threads")
      ->check(CLI::PositiveNumber);
  fuzz_cmd->add_flag("--keep-going", fuzz.options.keep_going,
                     "collect every mismatch instead of stopping at the first");
  add_format_flag(fuzz_cmd, fuzz_format);

  BenchRequest bench;
  std::optional<std::size_t> bench_m;
  std::string bench_format = "text";
  CLI::App* bench_cmd = app.add_subcommand(
      "bench", "time both solvers and report exact DP update counts");
  bench_cmd->add_option("--n", bench.n, "length of X");
  bench_cmd->add_option("--m", bench_m, "length of Y (default: --n)");
  bench_cmd->add_option("--t", bench.t, "length of Q")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--s", bench.s_values, "comma-separated lengths of P")
      ->delimiter(',');
  bench_cmd->add_option("--seed", bench.seed, "generator seed");
  bench_cmd->add_option("--alphabet", bench.alphabet, "alphabet size")
      ->check(CLI::Range(1, 26));
  add_format_flag(bench_cmd, bench_format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (solve_cmd->parsed()) {
      SolveRequest request;
      request.inputs = resolve_inputs(solve_inputs);
      request.algorithm = *parse_algorithm(solve_algo);
      request.format = parse_format(solve_format);
      request.stats = solve_stats;
      request.memory_budget = memory_budget_from_env();
      return cmd_solve(request, out, err);
    }
    if (check_cmd->parsed()) {
      CheckRequest request;
      request.format = parse_format(check_format);
      if (solution_path) {
        std::ifstream in(*solution_path);
        if (!in) throw UsageError("cannot open solution file '" + *solution_path + "'");
        const json doc = json::parse(in);
        if (!doc.value("feasible", false) || !doc.contains("lcs") ||
            !doc["lcs"].is_string()) {
          throw UsageError("solution document has no witness to check");
        }
        request.inputs = Inputs{doc.at("x").get<std::string>(),
                                doc.at("y").get<std::string>(),
                                doc.at("include").get<std::string>(),
                                doc.at("exclude").get<std::string>()};
        request.candidate = doc.at("lcs").get<std::string>();
      } else {
        request.inputs = resolve_inputs(check_inputs);
        if (candidate) {
          request.candidate = *candidate;
        } else if (candidate_path) {
          request.candidate = read_sequence_file(*candidate_path);
        } else {
          throw UsageError("missing --candidate (or --candidate-file / --solution)");
        }
      }
      return cmd_check(request, out, err);
    }
    if (fuzz_cmd->parsed()) {
      fuzz.options.params.m_max = fuzz_max_m.value_or(fuzz.options.params.n_max);
      fuzz.format = parse_format(fuzz_format);
      try {
        fuzz.options.params.check();
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      const std::vector<SolverUnderTest> defaults =
          solvers.empty() ? default_solvers() : std::vector<SolverUnderTest>{};
      return cmd_fuzz(fuzz, solvers.empty() ? defaults : solvers, out, err);
    }
    if (bench_cmd->parsed()) {
      bench.m = bench_m.value_or(bench.n);
      bench.format = parse_format(bench_format);
      bench.memory_budget = memory_budget_from_env();
      return cmd_bench(bench, out, err);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const json::exception& e) {
    err << "error: malformed solution document: " << e.what() << "\n";
    return kExitError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace clcs::cli
