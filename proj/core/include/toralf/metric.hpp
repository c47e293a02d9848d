#pragma once

#include <array>
#include <functional>
#include <vector>

#include "toralf/profile.hpp"

namespace toralf {

using Mat4 = std::array<std::array<double, 4>, 4>;

// The three Harmark metric functions at an off-axis point.
struct FieldSample {
  double rho = 0.0, z = 0.0;
  double V = 0.0;
  double F = 0.0;
  double e2nu = 0.0;
};

// Axis values. On an interval where f' = 0 the closed axis formula for V is
// invalid and V in fact diverges like 1/rho^2 (bolt behaviour); there V is
// reported as +inf, e^{2nu} from its regular closed form and F from a
// Richardson-extrapolated rho -> 0 limit, with zero_slope set.
struct AxisFieldSample {
  double z = 0.0;
  double V = 0.0;
  double F = 0.0;
  double e2nu = 0.0;
  bool zero_slope = false;
};

// Per-interval axis constants of F. On the (at most one) zero-slope interval
// F(0, z) is not constant; that entry is NaN and the chain of differences is
// bridged by the two-step jump formula.
struct AxisData {
  std::vector<double> F_consts;   // F_0 .. F_r
  double af_defect = 0.0;         // F_r - F_0, from the axis formulas
  double af_defect_closed = 0.0;  // 2/A (A^2 + (sum a_i z_i)^2 - sum a_i z_i^2)
  double A_recovered = 0.0;       // A recovered from the defect and the moments
};

// Metric in coordinates (t, x3, rho, z).
struct MetricAtPoint {
  double rho = 0.0, z = 0.0;
  Mat4 g{};
};

FieldSample eval_fields(const Profile& p, double rho, double z);

AxisFieldSample eval_axis_fields(const Profile& p, double z);

AxisData axis_data(const Profile& p);

MetricAtPoint metric_tensor(const Profile& p, double rho, double z);

// Max-abs entry of the finite-difference Ricci tensor, normalized by
// (1 + max |d2 g|) so the tolerance is scale-free. Requires rho > 2h > 0.
double ricci_residual(const Profile& p, double rho, double z, double h);

namespace detail {
// rho -> 0 limit of fn along rho_0 2^{-k}, k <= kmax, Richardson-accelerated
// assuming an even expansion in rho.
double axis_limit(const std::function<double(double)>& fn, double rho0, int kmax);
}  // namespace detail

}  // namespace toralf
