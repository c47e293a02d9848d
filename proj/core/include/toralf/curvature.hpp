#pragma once

#include <functional>

#include "toralf/metric.hpp"

namespace toralf {

// A metric field over the (rho, z) half-plane in coordinates (t, x3, rho, z);
// all coordinate dependence is through rho and z.
using MetricFn = std::function<Mat4(double rho, double z)>;

struct CurvatureSample {
  Mat4 ricci{};
  double scalar = 0.0;
  double max_d2g = 0.0;      // max |second derivative of g| seen on the stencil
  double cond_est = 0.0;     // ||g||_inf * ||g^-1||_inf at the centre
};

// Second-order central differences with step h through the Christoffel
// symbols. No extrapolation.
CurvatureSample curvature_fd(const MetricFn& g, double rho, double z, double h);

// One Richardson level: (4 C(h/2) - C(h)) / 3 on the Ricci entries and the
// scalar; the reported max_d2g and cond_est come from the finer step.
CurvatureSample curvature_fd_richardson(const MetricFn& g, double rho, double z, double h);

Mat4 invert4(const Mat4& m);

}  // namespace toralf
