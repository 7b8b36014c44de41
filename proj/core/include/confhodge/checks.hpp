#pragma once

#include <optional>
#include <string>
#include <vector>

#include "confhodge/algebra.hpp"
#include "confhodge/arrangement.hpp"
#include "confhodge/double_complex.hpp"

namespace confhodge {

struct CheckOptions {
  unsigned jobs = 1;
  // Builds the double complex with one Čech component negated.
  std::optional<FlippedComponent> flip;
};

struct CheckResult {
  std::string name;
  bool passed = true;
  std::vector<std::string> details;
};

struct CheckReport {
  std::vector<CheckResult> results;

  bool passed() const;
  const CheckResult* find(const std::string& name) const;
  // "PASS name" / "FAIL name" lines, failure details indented below.
  std::string to_string() const;
};

// Everything that can be verified for (algebra, graph): algebra axioms,
// δ^2 = 0 and (d' + δ)^2 = 0, table invariants on both sides of duality, the
// E-polynomial identity and degeneration of the weight spectral sequence.
// For complete graphs and d >= 1 the E_2 model is checked too (d_2
// well defined, d_2^2 = 0) and its E_3 table compared with the dual table.
// Algebras with a differential only get the axioms and differential checks.
CheckReport run_checks(const Algebra& algebra, const DiagonalGraph& graph, const CheckOptions& options = {});

}  // namespace confhodge
