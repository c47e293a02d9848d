#include "toralf/potential.hpp"

#include <cmath>
#include <string>

#include "rod_sums.hpp"

namespace toralf {

double u0(double rho, double z) {
  if (!(rho > 0.0)) fail(errc::axis_evaluation, "u0 requires rho > 0");
  const double d = std::hypot(rho, z);
  return 2.0 * d - z * detail::log_ratio(z, d);
}

double eval_u(const Profile& p, double rho, double z) {
  if (!(rho > 0.0)) fail(errc::axis_log_divergence, "U diverges on the axis");
  double u = p.constant() * std::log(rho * rho);
  for (const Turn& t : p.turns()) u += t.a * u0(rho, z - t.z);
  return u;
}

PotentialSample eval_potential(const Profile& p, double rho, double z) {
  if (rho < 0.0) fail(errc::axis_evaluation, "rho < 0");
  if (rho == 0.0)
    fail(errc::axis_log_divergence,
         "U is log-divergent at rho = 0; use eval_axis_potential for the axis limits");

  const detail::RodSums s = detail::rod_sums(p, rho, z);
  const double A = p.constant();

  PotentialSample out;
  out.U = eval_u(p, rho, z);
  out.U_rho = 2.0 / rho * s.W;
  out.U_z = -s.aL;
  out.U_rhorho = -2.0 / (rho * rho) * s.W + 2.0 * s.S;
  out.U_rhoz = 2.0 / rho * s.P;
  out.U_zz = -2.0 * s.S;
  out.H = 2.0 * A * z + s.aud + 0.5 * rho * rho * s.aL;
  out.d = s.d;
  return out;
}

AxisPotentialSample eval_axis_potential(const Profile& p, double z) {
  if (p.is_turning_point(z))
    fail(errc::turning_point_on_axis, "z = " + std::to_string(z) + " is a turning point");

  AxisPotentialSample out;
  out.rho_U_rho = 2.0 * p.value(z);
  out.rho_U_z = 0.0;
  double h = 2.0 * p.constant() * z;
  double uzz = 0.0;
  for (const Turn& t : p.turns()) {
    const double u = z - t.z;
    out.d.push_back(std::abs(u));
    h += t.a * u * std::abs(u);
    uzz -= 2.0 * t.a / std::abs(u);
  }
  out.H = h;
  out.U_zz = uzz;
  return out;
}

std::pair<double, double> conjugacy_residual(const Profile& p, double rho, double z, double h) {
  if (!(h > 0.0) || !(rho > h))
    fail(errc::step_too_large, "requires rho > h > 0");

  auto H_at = [&](double r, double zz) { return eval_potential(p, r, zz).H; };
  const PotentialSample c = eval_potential(p, rho, z);
  const double dH_dz = (H_at(rho, z + h) - H_at(rho, z - h)) / (2.0 * h);
  const double dH_drho = (H_at(rho + h, z) - H_at(rho - h, z)) / (2.0 * h);
  return {dH_dz - rho * c.U_rho, dH_drho + rho * c.U_z};
}

}  // namespace toralf
