#include "pentamod/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace pentamod {

namespace {
constexpr unsigned kMaxDepth = 15;
}

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double tol) {
  QuadratureResult out;
  if (a == b) return out;
  out.value = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
      f, a, b, kMaxDepth, tol, &out.error_estimate);
  return out;
}

}  // namespace pentamod
