#pragma once

#include <functional>

namespace pentamod {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
};

/// Adaptive 15-point Gauss-Kronrod on [a, b], bisecting at most 15 levels
/// deep (2^15 subintervals).
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double tol = 1e-13);

}  // namespace pentamod
