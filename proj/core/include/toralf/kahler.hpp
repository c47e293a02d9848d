#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "toralf/metric.hpp"
#include "toralf/profile.hpp"

namespace toralf {

// Moments of the Hamiltonian Killing fields d/dt and d/dx3 of the conformal
// Kahler metric g_K = x1^2 g.
struct MomentPair {
  double x1 = 0.0;
  double mu = 0.0;
};

struct PolytopeVertex {
  double x = 0.0;  // x1 (or the first Figure-basis coordinate)
  double y = 0.0;  // mu (or the second)
  std::string label;
};

struct PolytopeEdge {
  std::string label;
  int from = 0, to = 0;  // vertex indices
  bool dashed = false;   // the edge at infinity
  // Killing field vanishing on the divisor over this edge, as (c_t, c_x3);
  // present when cone angles were supplied.
  std::optional<std::array<double, 2>> normal;
};

// Boundary cycle of the moment-map image: vertices V_0 (z -> -inf),
// V_1..V_r (turning points), V_{r+1} (z -> +inf); edges E_0..E_r along the
// axis intervals and the dashed E_inf closing the cycle.
struct Polytope {
  std::vector<PolytopeVertex> vertices;
  std::vector<PolytopeEdge> edges;
  bool fig2_basis = false;
};

MomentPair moments(const Profile& p, double rho, double z);

// Coefficient of the Kahler volume form (1/2) omega_K ^ omega_K relative to
// dt ^ dx3 ^ drho ^ dz; equals x1^4 e^{2nu} rho.
double volume_density(const Profile& p, double rho, double z);

Polytope moment_polytope(const Profile& p);

// With one cone angle per interval, the edges also carry the Killing fields
// alpha_i f'_i (d/dx3 + F_i d/dt) (or alpha_i f_i^2/A d/dt on a zero-slope
// interval) vanishing on the corresponding divisors.
Polytope moment_polytope(const Profile& p, const std::vector<double>& alphas);

// The moment polytope of the r = 3 instanton of parameter p in the adapted
// integer basis (F re-gauged so F_0 = 0, y = mu + (sum a_i z_i)/A,
// x = -p (y + F_1 x1)), in which the boundary vertices take closed forms.
Polytope chen_teo_fig2_polytope(double p);

// (FD scalar curvature of g_K = x1^2 g, the conformal identity value 12 A x1).
std::pair<double, double> scalar_curvature_check(const Profile& p, double rho, double z,
                                                 double h);

namespace detail {
// Moments computed with an additive constant on H; test hook for the gauge
// dependence (mu picks up shift * x1 / A).
MomentPair moments_with_gauge(const Profile& p, double rho, double z, double h_shift);
}  // namespace detail

}  // namespace toralf
