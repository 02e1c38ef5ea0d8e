#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "supra/interpretation.hpp"
#include "supra/preprocess.hpp"
#include "supra/spec_parser.hpp"
#include "supra/trace.hpp"

namespace {

constexpr int kExitSuccess = 0;
constexpr int kExitSaturated = 1;
constexpr int kExitLimit = 2;
constexpr int kExitCounterexample = 3;
constexpr int kExitInputError = 4;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

int run_replay(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open " << path << "\n";
    return kExitInputError;
  }
  supra::ReplayReport report = supra::replay_trace(in);
  if (!report.ok) {
    std::cerr << "replay failed: " << report.error << "\n";
    return 1;
  }
  std::cout << "replay ok: " << report.inferences_checked << " inferences revalidated\n";
  return kExitSuccess;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"supra - recursion-free program synthesis by saturation"};
  app.require_subcommand(0, 1);

  std::string spec_path;
  std::string ordering = "lpo";
  std::string precedence_arg;
  std::string selection = "maximal";
  std::string trace_path;
  std::uint64_t max_iterations = 10000;
  std::uint64_t max_clauses = 100000;
  double timeout = 60.0;
  int verify_size = -1;  // -1: no verification requested
  bool all_solutions = false;
  bool no_abs = false;
  bool no_partition = false;
  bool inject_bool_axiom = false;

  app.add_option("spec", spec_path, "specification file")->type_name("FILE");
  app.add_option("--ordering", ordering, "simplification order (lpo|tkbo)")
      ->check(CLI::IsMember({"lpo", "tkbo"}));
  app.add_option("--precedence", precedence_arg,
                 "comma list of symbols, greatest first (within-class hints; the "
                 "full order with --no-partition)");
  app.add_option("--selection", selection,
                 "literal selection (maximal|prefer-neg); prefer-neg is a "
                 "compatibility mode")
      ->check(CLI::IsMember({"maximal", "prefer-neg"}));
  app.add_option("--max-iterations", max_iterations, "activation limit");
  app.add_option("--max-clauses", max_clauses, "stored clause limit");
  app.add_option("--timeout", timeout, "saturation time budget in seconds");
  app.add_flag("--verify{3}", verify_size,
               "check the result by finite-model enumeration up to SIZE "
               "(--verify=SIZE, default 3)");
  app.add_option("--trace", trace_path, "write a machine-readable inference log");
  app.add_flag("--all-solutions", all_solutions, "keep enumerating empty clauses");
  app.add_flag("--no-abs", no_abs, "diagnostic: disable the abstraction rule");
  app.add_flag("--no-partition", no_partition,
               "diagnostic: take --precedence as the full symbol order instead of "
               "a partitioned one");
  app.add_flag("--inject-bool-axiom", inject_bool_axiom,
               "add the clause true != false to the initial set");

  auto* replay_cmd = app.add_subcommand("replay", "revalidate a trace file");
  std::string replay_path;
  replay_cmd->add_option("trace", replay_path, "trace file")->required();

  CLI11_PARSE(app, argc, argv);

  if (replay_cmd->parsed()) return run_replay(replay_path);

  if (spec_path.empty()) {
    std::cerr << "error: no specification file given\n";
    return kExitInputError;
  }

  std::string spec_text;
  supra::Specification spec;
  supra::PreprocessResult pre;
  try {
    spec_text = read_file(spec_path);
    spec = supra::parse_spec(spec_text);
    pre = supra::preprocess(spec, inject_bool_axiom);
  } catch (const supra::ParseError& e) {
    std::cerr << spec_path << ":" << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  supra::SaturationConfig cfg;
  cfg.ordering = ordering == "tkbo" ? supra::OrderingChoice::Tkbo : supra::OrderingChoice::Lpo;
  cfg.partitioned = !no_partition;
  cfg.selection = selection == "prefer-neg" ? supra::SelectionMode::PreferNegative
                                            : supra::SelectionMode::MaximalOnly;
  cfg.abs_enabled = !no_abs;
  cfg.all_solutions = all_solutions;
  cfg.limits.max_iterations = max_iterations;
  cfg.limits.max_clauses = max_clauses;
  cfg.limits.timeout_seconds = timeout;
  for (const std::string& name : split_commas(precedence_arg)) {
    auto sym = pre.signature.find_symbol(name);
    if (!sym) {
      std::cerr << "error: unknown symbol in --precedence: " << name << "\n";
      return kExitInputError;
    }
    cfg.precedence.push_back(*sym);
  }

  supra::OrderSetup setup;
  try {
    setup = supra::build_order(pre.signature, cfg);
  } catch (const supra::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  std::ofstream trace_file;
  std::unique_ptr<supra::JsonlTraceWriter> tracer;
  if (!trace_path.empty()) {
    trace_file.open(trace_path);
    if (!trace_file) {
      std::cerr << "error: cannot write " << trace_path << "\n";
      return kExitInputError;
    }
    tracer = std::make_unique<supra::JsonlTraceWriter>(trace_file, spec_text, cfg,
                                                       pre.signature, inject_bool_axiom);
  }

  supra::SynthesisResult result = supra::saturate(pre, cfg, tracer.get());

  std::cerr << "generated " << result.stats.generated << " clauses, activated "
            << result.stats.activated << ", " << result.stats.elapsed_seconds << "s\n";

  std::vector<std::string> rendered;
  int exit_code = kExitSuccess;
  if (result.outcome == supra::Outcome::Success) {
    for (const auto& sol : result.solutions) {
      supra::ExtractionResult ex =
          supra::extract_program(sol.success_clause, spec, pre, setup.precedence);
      if (!ex.grounded) {
        std::cerr << "extraction error: " << ex.error << "\n";
        std::cerr << "parametric program: "
                  << supra::to_string(ex.program, spec.signature) << "\n";
        exit_code = kExitInputError;
        continue;
      }
      supra::ProgramPtr program = supra::simplify_program(ex.program);
      std::string text = supra::to_string(program, spec.signature);
      rendered.push_back(text);
      std::cout << text << "\n";
      if (verify_size >= 0) {
        if (verify_size < 1) {
          std::cerr << "error: --verify size must be at least 1\n";
          return kExitInputError;
        }
        try {
          supra::SolutionVerdict v = supra::check_solution(spec, program,
                                                           static_cast<std::uint32_t>(verify_size));
          if (v.verified) {
            std::cerr << v.message << "\n";
          } else {
            std::cerr << "verification counterexample found (" << v.message << ")\n";
            exit_code = kExitCounterexample;
          }
        } catch (const supra::EnumerationGuardError& e) {
          std::cerr << "verification refused: " << e.what() << "\n";
          exit_code = kExitInputError;
        }
      }
    }
  } else if (result.outcome == supra::Outcome::Saturated) {
    std::cerr << "stuck: saturated without deriving a program\n";
    exit_code = kExitSaturated;
  } else {
    std::cerr << "stuck: limit reached (" << result.limit_reason << ")\n";
    exit_code = kExitLimit;
  }

  if (tracer) tracer->on_result(result, rendered);
  return exit_code;
}
