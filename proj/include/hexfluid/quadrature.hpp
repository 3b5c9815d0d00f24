#pragma once

#include <functional>
#include <vector>

namespace hexfluid {

struct QuadratureOptions {
  double rel_tol = 1e-10;
  double abs_tol = 0.0;
  int max_depth = 48;
};

struct QuadratureResult {
  double value = 0.0;
  double error_bound = 0.0;
  long evaluations = 0;
};

// Deterministic adaptive Gauss-Kronrod (G7/K15) by recursive bisection.
// Known integrand kinks should be passed as interior breakpoints so panels
// never straddle them. Throws NumericalError when the tolerance cannot be met.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    const QuadratureOptions& opt = {},
                                    const std::vector<double>& breakpoints = {});

}  // namespace hexfluid
