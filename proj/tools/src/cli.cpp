#include "confhodge_cli/cli.hpp"

#include <filesystem>
#include <ostream>

#include "CLI11.hpp"
#include "confhodge/checks.hpp"
#include "confhodge/duality.hpp"
#include "confhodge/error.hpp"
#include "confhodge/io.hpp"
#include "confhodge/kriz.hpp"
#include "confhodge/motivic.hpp"

namespace confhodge::cli {

namespace {

struct Problem {
  std::string algebra_path;
  int n = 2;
  std::string graph = "complete";
  unsigned jobs = 1;
};

void add_problem_options(CLI::App& cmd, Problem& problem) {
  cmd.add_option("--algebra", problem.algebra_path, "algebra file")->required();
  cmd.add_option("--n", problem.n, "number of points")->required()->check(CLI::Range(1, 64));
  cmd.add_option("--graph", problem.graph, "\"complete\" or an edge list such as 1-2,2-3")
      ->capture_default_str();
  cmd.add_option("--jobs", problem.jobs, "worker threads for block-level work")
      ->capture_default_str()
      ->check(CLI::Range(1U, 256U));
}

std::string route_file(const std::string& output, const std::string& route) {
  std::filesystem::path path(output);
  std::filesystem::path stem = path.parent_path() / path.stem();
  return stem.string() + "." + route + ".json";
}

int cmd_validate(const std::string& path, std::ostream& out) {
  const Algebra algebra = load_algebra(path);
  const ValidationReport report = algebra.has_differential() ? validate_cdga(algebra) : validate_algebra(algebra);
  if (report.empty()) {
    out << "valid: " << algebra.name() << " (dim " << algebra.dim() << ", complex dimension "
        << algebra.complex_dim() << ")\n";
    return kSuccess;
  }
  out << "invalid: " << algebra.name() << "\n";
  for (const auto& line : report) out << "  " << line << "\n";
  return kFailure;
}

int cmd_compute(const Problem& problem, const std::string& route, const std::string& output, std::ostream& out,
                std::ostream& err) {
  const Algebra algebra = load_algebra(problem.algebra_path);
  const DiagonalGraph graph = DiagonalGraph::parse(problem.n, problem.graph);
  if (route == "kriz" && !graph.is_complete())
    throw ScopeError("route kriz needs the complete graph, got '" + graph.to_string() + "'");

  std::vector<std::pair<std::string, HodgeTable>> tables;
  if (route != "kriz") {
    const HodgeTable relative = relative_cohomology(algebra, graph, problem.jobs);
    if (route == "relative" || route == "all") tables.emplace_back("relative", relative);
    if (route == "open" || route == "all") tables.emplace_back("open", lefschetz_dual(relative));
  }
  if (route == "kriz" || (route == "all" && graph.is_complete() && algebra.complex_dim() >= 1))
    tables.emplace_back("kriz", e3_table(algebra, problem.n, problem.jobs));

  int status = kSuccess;
  for (const auto& [name, table] : tables) {
    const auto violations = table.kind() == SpaceKind::Open
                                ? open_table_violations(table, graph.edge_count())
                                : relative_table_violations(table, graph.edge_count());
    for (const auto& v : violations) {
      err << name << ": " << v << "\n";
      status = kFailure;
    }
    const std::string text = format_result({algebra.name(), problem.n, graph.to_string(), name}, table);
    if (output.empty())
      out << text;
    else
      write_file(route == "all" ? route_file(output, name) : output, text);
  }
  return status;
}

int cmd_check(const Problem& problem, const std::string& fault, std::ostream& out) {
  const Algebra algebra = load_algebra(problem.algebra_path);
  const DiagonalGraph graph = DiagonalGraph::parse(problem.n, problem.graph);
  CheckOptions options;
  options.jobs = problem.jobs;
  if (fault == "delta-sign") {
    if (graph.edge_count() == 0) throw ValidationError("fault delta-sign needs at least one edge");
    options.flip = FlippedComponent{EdgeSubset{}, 0};
  }
  const CheckReport report = run_checks(algebra, graph, options);
  out << "check " << algebra.name() << " n=" << problem.n << " graph=" << graph.to_string() << "\n";
  out << report.to_string();
  out << (report.passed() ? "all checks passed\n" : "checks failed\n");
  return report.passed() ? kSuccess : kFailure;
}

int cmd_oracle(const Problem& problem, std::ostream& out) {
  const Algebra algebra = load_algebra(problem.algebra_path);
  const DiagonalGraph graph = DiagonalGraph::parse(problem.n, problem.graph);
  const EPolynomial expected = expected_ec(algebra, graph);
  const EPolynomial actual = table_ec(relative_cohomology(algebra, graph, problem.jobs));
  out << "chromatic:   " << chromatic_polynomial(graph).to_string() << "\n";
  out << "expected_ec: " << expected.to_string() << "\n";
  out << "table_ec:    " << actual.to_string() << "\n";
  out << (expected == actual ? "equal" : "different") << "\n";
  return expected == actual ? kSuccess : kFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mixed Hodge numbers of configuration spaces and diagonal arrangement complements", "confhodge"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  std::string validate_path;
  auto* validate = app.add_subcommand("validate", "check the axioms of an algebra file");
  validate->add_option("path", validate_path, "algebra file")->required();

  Problem problem;
  std::string route = "open";
  std::string output;
  auto* compute = app.add_subcommand("compute", "compute a Hodge table");
  add_problem_options(*compute, problem);
  compute->add_option("--route", route, "relative, open, kriz or all")
      ->capture_default_str()
      ->check(CLI::IsMember({"relative", "open", "kriz", "all"}));
  compute->add_option("--output", output, "result file (with --route all: <stem>.<route>.json)");

  std::string fault;
  auto* check = app.add_subcommand("check", "run the consistency checks");
  add_problem_options(*check, problem);
  check->add_option("--inject-fault", fault)->group("")->check(CLI::IsMember({"delta-sign"}));

  auto* oracle = app.add_subcommand("oracle", "compare the E-polynomial with the chromatic prediction");
  add_problem_options(*oracle, problem);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << "\n";
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }

  try {
    if (*validate) return cmd_validate(validate_path, out);
    if (*compute) return cmd_compute(problem, route, output, out, err);
    if (*check) return cmd_check(problem, fault, out);
    if (*oracle) return cmd_oracle(problem, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const ScopeError& e) {
    err << "scope error: " << e.what() << "\n";
    return kScopeError;
  } catch (const ValidationError& e) {
    err << "invalid input: " << e.what() << "\n";
    return kFailure;
  } catch (const ConsistencyError& e) {
    err << "inconsistent: " << e.what() << "\n";
    return kFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }
  return kFailure;
}

}  // namespace confhodge::cli
