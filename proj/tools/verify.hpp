#pragma once

#include <string>
#include <vector>

#include "qslip/semigroup.hpp"

namespace qslip::cli {

struct CheckResult {
  std::string name;
  double deviation = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

struct VerifyTolerances {
  double algebraic = 1e-10;
  double ode = 1e-8;
  double maximizer = 1e-6;
};

/// Cross-checks every closed form at one parameter point against the numerical
/// references (RK4, Jacobi, Wootters, golden-section search, partial transpose).
std::vector<CheckResult> run_checks(const ModelParams& p, double mu, const VerifyTolerances& tol);

}  // namespace qslip::cli
