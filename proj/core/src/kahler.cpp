#include "toralf/kahler.hpp"

#include <cmath>

#include "rod_sums.hpp"
#include "toralf/curvature.hpp"
#include "toralf/potential.hpp"
#include "toralf/regularity.hpp"

namespace toralf {

namespace detail {

MomentPair moments_with_gauge(const Profile& p, double rho, double z, double h_shift) {
  if (!(rho > 0.0)) fail(errc::axis_evaluation, "moments require rho > 0");
  const PotentialSample s = eval_potential(p, rho, z);
  const double H_z = rho * s.U_rho;
  const double H_rho = -rho * s.U_z;
  if (H_z == 0.0) fail(errc::degenerate_hz, "H_z vanishes");
  const double H = s.H + h_shift;
  MomentPair out;
  out.x1 = 2.0 / H_z;
  out.mu = -(z * H_z + rho * H_rho - 2.0 * H) / (p.constant() * H_z);
  return out;
}

}  // namespace detail

MomentPair moments(const Profile& p, double rho, double z) {
  return detail::moments_with_gauge(p, rho, z, 0.0);
}

double volume_density(const Profile& p, double rho, double z) {
  if (!(rho > 0.0)) fail(errc::axis_evaluation, "volume density requires rho > 0");
  const detail::RodSums s = detail::rod_sums(p, rho, z);
  const FieldSample f = eval_fields(p, rho, z);
  const double x1 = 1.0 / s.W;
  return x1 * x1 * x1 * x1 * f.e2nu * rho;
}

namespace {

// mu on the axis from the interval-j branch: mu = -F_j x1 + (f/f'_j - z)/A.
double axis_mu(const Profile& p, const AxisData& ad, int interval, double z) {
  const double f = p.value(z);
  const double fp = p.slope_in(interval);
  return -ad.F_consts[static_cast<std::size_t>(interval)] / f +
         (f / fp - z) / p.constant();
}

}  // namespace

Polytope moment_polytope(const Profile& p) { return moment_polytope(p, {}); }

Polytope moment_polytope(const Profile& p, const std::vector<double>& alphas) {
  const int r = p.rank();
  const AxisData ad = axis_data(p);
  const double shift = p.moment1() / p.constant();

  Polytope poly;
  poly.vertices.push_back({0.0, -1.0 - shift, "V0"});
  for (int i = 1; i <= r; ++i) {
    const double zi = p.turns()[static_cast<std::size_t>(i - 1)].z;
    // Sides i-1 and i adjoin the vertex; take the better-conditioned one.
    const double sl = p.slope_in(i - 1), sr = p.slope_in(i);
    if (sl == 0.0 && sr == 0.0)
      fail(errc::adjacent_slopes_both_zero, "slopes increase strictly; cannot happen");
    const int j = (std::abs(sl) > std::abs(sr)) ? i - 1 : i;
    poly.vertices.push_back(
        {1.0 / p.value(zi), axis_mu(p, ad, j, zi), "V" + std::to_string(i)});
  }
  poly.vertices.push_back({0.0, 1.0 - shift, "V" + std::to_string(r + 1)});

  for (int i = 0; i <= r; ++i)
    poly.edges.push_back({"E" + std::to_string(i), i, i + 1, false, std::nullopt});
  poly.edges.push_back({"Einf", r + 1, 0, true, std::nullopt});

  if (!alphas.empty()) {
    const auto vs = killing_vectors(p, ad, alphas);
    for (int i = 0; i <= r; ++i)
      poly.edges[static_cast<std::size_t>(i)].normal = {
          {vs[static_cast<std::size_t>(i)].c_t, vs[static_cast<std::size_t>(i)].c_x3}};
  }
  return poly;
}

Polytope chen_teo_fig2_polytope(double p_param) {
  const Profile prof = presets::chen_teo_instanton(p_param);
  const AxisData ad = axis_data(prof);
  const double F0 = ad.F_consts[0];
  const double F1 = ad.F_consts[1] - F0;
  const double shift = prof.moment1() / prof.constant();

  // Re-gauge F so that F_0 = 0; the (t, F) shift by -F0 moves the moment of
  // d/dx3 by +F0 x1. Then y is mu plus the constant making the ends sit at
  // y = -+1, and x completes the basis adapted to v_1.
  Polytope poly = moment_polytope(prof);
  for (PolytopeVertex& v : poly.vertices) {
    const double x1 = v.x;
    const double y = v.y + F0 * x1 + shift;
    v.x = -p_param * (y + F1 * x1);
    v.y = y;
  }
  poly.fig2_basis = true;
  return poly;
}

std::pair<double, double> scalar_curvature_check(const Profile& p, double rho, double z,
                                                 double h) {
  if (!(h > 0.0) || !(rho > 2.0 * h)) fail(errc::step_too_large, "requires rho > 2h > 0");
  const MetricFn gk = [&p](double r, double zz) {
    Mat4 g = metric_tensor(p, r, zz).g;
    const detail::RodSums s = detail::rod_sums(p, r, zz);
    const double c = 1.0 / (s.W * s.W);  // x1^2
    for (auto& row : g)
      for (double& x : row) x *= c;
    return g;
  };
  const CurvatureSample c = curvature_fd_richardson(gk, rho, z, h);
  const double x1 = moments(p, rho, z).x1;
  return {c.scalar, 12.0 * p.constant() * x1};
}

}  // namespace toralf
