#pragma once

#include <utility>
#include <vector>

#include "toralf/profile.hpp"

namespace toralf {

// U and its derivatives at an off-axis point (rho > 0), together with the
// conjugate function H (H_z = rho U_rho, H_rho = -rho U_z; additive constant
// fixed to the closed-form antiderivative with nothing added) and the
// distances d_i = sqrt(rho^2 + (z - z_i)^2).
struct PotentialSample {
  double U = 0.0;
  double U_rho = 0.0, U_z = 0.0;
  double U_rhorho = 0.0, U_rhoz = 0.0, U_zz = 0.0;
  double H = 0.0;
  std::vector<double> d;
};

// Axis limits (rho = 0): U itself is log-divergent there but rho*U_rho,
// rho*U_z and H have finite limits.
struct AxisPotentialSample {
  double rho_U_rho = 0.0;  // -> 2 f(z)
  double rho_U_z = 0.0;    // -> 0
  double H = 0.0;
  double U_zz = 0.0;
  std::vector<double> d;
};

// Building block U0(rho, z) = 2 sqrt(rho^2+z^2) - 2 z artanh(z / sqrt(rho^2+z^2)).
double u0(double rho, double z);

// U(rho, z) = A log rho^2 + sum_i a_i U0(rho, z - z_i).
double eval_u(const Profile& p, double rho, double z);

PotentialSample eval_potential(const Profile& p, double rho, double z);

AxisPotentialSample eval_axis_potential(const Profile& p, double z);

// Central-difference residuals (dH/dz - rho U_rho, dH/drho + rho U_z) of the
// conjugacy relations, both evaluated from closed forms. Requires rho > h > 0.
std::pair<double, double> conjugacy_residual(const Profile& p, double rho, double z, double h);

}  // namespace toralf
