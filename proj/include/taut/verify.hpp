#pragma once

#include <string>
#include <vector>

namespace taut {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Names accepted by run_suite.
const std::vector<std::string>& suite_names();

/// identities: theta quadruples, Plücker relation, antisymmetry, discriminant, semipositivity
/// valuations: the worked valuation vectors
/// dimensions: graded dimensions against basis sizes
/// decompositions: S6 isotypic decompositions of C'_{1,2}, C'_{2,4}, C'_{2,6}
/// divisor: the two divisor examples
/// Deterministic in (suite, box). Throws InvalidArgument for an unknown suite.
std::vector<CheckResult> run_suite(const std::string& suite, int box);

}  // namespace taut
