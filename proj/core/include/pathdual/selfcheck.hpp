#pragma once

#include <functional>
#include <string>
#include <vector>

#include "pathdual/average.hpp"
#include "pathdual/duality.hpp"

namespace pathdual {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Pluggable path-operator construction, so a deliberately corrupted builder
/// can serve as a negative control for the oracle check.
using PathOperatorBuilder = std::function<Matrix4c(
    Path, const Polarization&, const Polarization&, const Geometry&)>;

/// Matrix pipeline vs the perpendicular-geometry closed forms over a
/// 41 x 41 grid of (u, u') and 15 values of p, at 1e-10 absolute tolerance.
/// Exactly dark grid points (the p = 1, u = -1 line) are skipped and counted.
CheckResult check_closed_form_oracle(const PathOperatorBuilder& builder = {});

/// D^2 + V^2 <= 1 on randomized inputs (random direction, random pure Jones
/// vectors, random p), slack >= -1e-10.
CheckResult check_duality_relation(int samples = 10000, std::uint64_t seed = 0xD0A11);

/// The p-resolved D(V) bound on the same grids as the oracle check.
CheckResult check_duality_bound();

/// Difference-operator decomposition on randomized symmetric-family inputs:
/// residual <= 1e-10, D = 4 sqrt(|a|^2+|b|^2), eigenvalues (l, 0, 0, -l).
CheckResult check_difference_decomposition(int samples = 1000, std::uint64_t seed = 0xDEC0);

/// Angular averages stable under grid refinement (< 1e-6 between successive
/// doublings past resolution 16).
CheckResult check_average_convergence();

/// Known angular-average values in the helicity-preserving channel at p = 0:
/// D_avg = 1/2, V_avg = 2/5 within 1e-3.
CheckResult check_average_reference();

/// All checks above, in order.
std::vector<CheckResult> run_all_checks();

}  // namespace pathdual
