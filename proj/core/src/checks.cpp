#include "confhodge/checks.hpp"

#include <functional>
#include <sstream>

#include "confhodge/duality.hpp"
#include "confhodge/error.hpp"
#include "confhodge/kriz.hpp"
#include "confhodge/motivic.hpp"

namespace confhodge {

bool CheckReport::passed() const {
  for (const auto& r : results)
    if (!r.passed) return false;
  return true;
}

const CheckResult* CheckReport::find(const std::string& name) const {
  for (const auto& r : results)
    if (r.name == name) return &r;
  return nullptr;
}

std::string CheckReport::to_string() const {
  std::ostringstream out;
  for (const auto& r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name << "\n";
    for (const auto& d : r.details) out << "    " << d << "\n";
  }
  return out.str();
}

namespace {

class Runner {
 public:
  // Runs body; an exception counts as a failure carrying its message.
  void run(const std::string& name, const std::function<std::vector<std::string>()>& body) {
    CheckResult result{name, true, {}};
    try {
      result.details = body();
      result.passed = result.details.empty();
    } catch (const std::exception& e) {
      result.passed = false;
      result.details = {e.what()};
    }
    report.results.push_back(std::move(result));
  }

  CheckReport report;
};

std::vector<std::string> starting_with(const std::vector<std::string>& lines, const std::vector<std::string>& prefixes) {
  std::vector<std::string> out;
  for (const auto& line : lines)
    for (const auto& prefix : prefixes)
      if (line.rfind(prefix, 0) == 0) {
        out.push_back(line);
        break;
      }
  return out;
}

}  // namespace

CheckReport run_checks(const Algebra& algebra, const DiagonalGraph& graph, const CheckOptions& options) {
  Runner runner;
  const bool dg = algebra.has_differential();
  ValidationReport axioms;
  runner.run("algebra axioms", [&] {
    axioms = dg ? validate_cdga(algebra) : validate_algebra(algebra);
    return axioms;
  });
  if (!axioms.empty()) return runner.report;

  ComplexOptions complex_options{options.jobs, options.flip};
  std::optional<DoubleComplex> complex;
  std::vector<std::string> violations;
  runner.run("double complex", [&] {
    complex.emplace(build_double_complex(algebra, graph, complex_options));
    violations = differential_violations(*complex);
    return std::vector<std::string>{};
  });
  if (!complex) return runner.report;

  runner.run("delta^2 = 0", [&] { return starting_with(violations, {"delta^2"}); });
  runner.run("(d' + delta)^2 = 0", [&] { return starting_with(violations, {"d'^2", "d' delta"}); });

  if (dg) {
    runner.run("total cohomology", [&] {
      total_cohomology(*complex);
      return std::vector<std::string>{};
    });
    return runner.report;
  }

  std::optional<HodgeTable> relative;
  runner.run("relative cohomology", [&] {
    relative.emplace(relative_table(*complex, options.jobs));
    return relative_table_violations(*relative, graph.edge_count());
  });
  if (!relative) return runner.report;

  const HodgeTable open = lefschetz_dual(*relative);
  runner.run("open table invariants", [&] { return open_table_violations(open, graph.edge_count()); });

  runner.run("oracle identity", [&] {
    const EPolynomial expected = expected_ec(algebra, graph);
    const EPolynomial actual = table_ec(*relative);
    if (expected == actual) return std::vector<std::string>{};
    return std::vector<std::string>{"expected_ec = " + expected.to_string(), "table_ec    = " + actual.to_string()};
  });

  runner.run("weight spectral sequence degenerates at E2", [&] {
    const SpectralSequenceDims ss = relative_weight_spectral_sequence(*complex, options.jobs);
    std::vector<std::string> out;
    if (!ss.degenerates_at(2)) {
      auto page = ss.pages.count(2) ? ss.pages.at(2) : PageDims{};
      for (const auto& [bidegree, dim] : page) {
        auto it = ss.limit.find(bidegree);
        const std::size_t limit = it == ss.limit.end() ? 0 : it->second;
        if (dim != limit)
          out.push_back("E2(" + std::to_string(bidegree.first) + "," + std::to_string(bidegree.second) +
                        ") = " + std::to_string(dim) + " but limit = " + std::to_string(limit));
      }
      for (const auto& [bidegree, limit] : ss.limit)
        if (!page.count(bidegree))
          out.push_back("E2(" + std::to_string(bidegree.first) + "," + std::to_string(bidegree.second) +
                        ") = 0 but limit = " + std::to_string(limit));
    }
    return out;
  });

  if (graph.is_complete() && algebra.complex_dim() >= 1) {
    std::optional<E2Page> page;
    runner.run("E2 model", [&] {
      KrizOptions kriz_options;
      kriz_options.jobs = options.jobs;
      page.emplace(build_e2(algebra, graph, kriz_options));
      return std::vector<std::string>{};
    });
    if (!page) return runner.report;
    std::vector<std::string> ill_defined;
    runner.run("d2 well defined", [&] {
      ill_defined = well_definedness_violations(*page, options.jobs);
      return ill_defined;
    });
    if (!ill_defined.empty()) return runner.report;
    runner.run("d2^2 = 0", [&] { return d2_square_violations(*page, options.jobs); });
    runner.run("E3 equals dual of relative table", [&] {
      const HodgeTable e3 = e3_table(*page, options.jobs);
      std::vector<std::string> out = open_table_violations(e3, graph.edge_count());
      for (auto& line : diff_tables(open, e3)) out.push_back(line);
      return out;
    });
  }
  return runner.report;
}

}  // namespace confhodge
