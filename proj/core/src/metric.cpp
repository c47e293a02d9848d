#include "toralf/metric.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "rod_sums.hpp"
#include "toralf/curvature.hpp"

namespace toralf {

FieldSample eval_fields(const Profile& p, double rho, double z) {
  if (!(rho > 0.0)) fail(errc::axis_evaluation, "eval_fields requires rho > 0");
  const detail::RodSums s = detail::rod_sums(p, rho, z);
  const double A = p.constant();
  const double PQ2 = s.P * s.P + s.Q * s.Q;

  FieldSample out;
  out.rho = rho;
  out.z = z;
  out.V = s.W / A * (s.S * s.W / PQ2 - 1.0);
  out.e2nu = s.W / A * (s.S * s.W - PQ2);
  out.F = (s.W * s.W * s.P / PQ2 - 2.0 * A * z - s.aud) / A;
  return out;
}

namespace detail {

double axis_limit(const std::function<double(double)>& fn, double rho0, int kmax) {
  // fn(rho) = L + c1 rho^2 + c2 rho^4 + ...; halving rho divides each error
  // term by 4^m, so the standard Richardson table applies. The diagonal is
  // tracked for its most stable entry, since very small rho eventually runs
  // into cancellation noise in the sums.
  std::vector<double> row;
  double prev_diag = fn(rho0);
  row.push_back(prev_diag);
  double best = prev_diag;
  double best_step = std::numeric_limits<double>::infinity();
  for (int k = 1; k <= kmax; ++k) {
    std::vector<double> next;
    next.push_back(fn(rho0 * std::ldexp(1.0, -k)));
    double pow4 = 4.0;
    for (double prev : row) {
      next.push_back((pow4 * next.back() - prev) / (pow4 - 1.0));
      pow4 *= 4.0;
    }
    const double est = next.back();
    const double step = std::abs(est - prev_diag);
    if (step < best_step) {
      best_step = step;
      best = est;
    }
    if (step <= 1e-13 * (1.0 + std::abs(est))) return est;
    prev_diag = est;
    row = std::move(next);
  }
  return best;
}

}  // namespace detail

AxisFieldSample eval_axis_fields(const Profile& p, double z) {
  if (p.is_turning_point(z))
    fail(errc::turning_point_on_axis, "z = " + std::to_string(z) + " is a turning point");

  const double A = p.constant();
  const double f = p.value(z);
  const double fp = p.slope_at(z);
  double S0 = 0.0;
  for (const Turn& t : p.turns()) S0 += t.a / std::abs(z - t.z);

  AxisFieldSample out;
  out.z = z;
  out.e2nu = f / A * (f * S0 - fp * fp);
  if (fp != 0.0) {
    out.V = out.e2nu / (fp * fp);
    double h0 = 2.0 * A * z;
    for (const Turn& t : p.turns()) h0 += t.a * (z - t.z) * std::abs(z - t.z);
    out.F = (f * f / fp - h0) / A;
    return out;
  }

  // Zero-slope interval: V(0,z) diverges like 1/rho^2; F has a finite but
  // z-dependent limit obtained by extrapolation.
  out.zero_slope = true;
  out.V = std::numeric_limits<double>::infinity();
  double gap = 1.0;
  const int i = p.interval_of(z);
  if (i >= 1 && i <= p.rank() - 1)
    gap = p.turns()[static_cast<std::size_t>(i)].z - p.turns()[static_cast<std::size_t>(i - 1)].z;
  out.F = detail::axis_limit([&](double rho) { return eval_fields(p, rho, z).F; },
                             0.05 * gap, 20);
  return out;
}

AxisData axis_data(const Profile& p) {
  const int r = p.rank();
  const auto& turns = p.turns();
  AxisData out;
  out.F_consts.resize(static_cast<std::size_t>(r) + 1);
  for (int i = 0; i <= r; ++i) {
    if (p.slope_in(i) == 0.0) {
      out.F_consts[static_cast<std::size_t>(i)] = std::numeric_limits<double>::quiet_NaN();
      continue;
    }
    double z;
    if (i == 0)
      z = turns.front().z - 1.0;
    else if (i == r)
      z = turns.back().z + 1.0;
    else
      z = 0.5 * (turns[static_cast<std::size_t>(i - 1)].z + turns[static_cast<std::size_t>(i)].z);
    out.F_consts[static_cast<std::size_t>(i)] = eval_axis_fields(p, z).F;
  }

  const double A = p.constant();
  const double s1 = p.moment1();
  const double s2 = p.moment2();
  out.af_defect = out.F_consts.back() - out.F_consts.front();
  out.af_defect_closed = 2.0 / A * (A * A + s1 * s1 - s2);
  const double D = out.af_defect;
  out.A_recovered = 0.25 * (D + std::sqrt(D * D + 16.0 * (s2 - s1 * s1)));
  return out;
}

MetricAtPoint metric_tensor(const Profile& p, double rho, double z) {
  const FieldSample f = eval_fields(p, rho, z);
  MetricAtPoint out;
  out.rho = rho;
  out.z = z;
  out.g[0][0] = 1.0 / f.V;
  out.g[0][1] = out.g[1][0] = -f.F / f.V;
  out.g[1][1] = f.F * f.F / f.V + f.V * rho * rho;
  out.g[2][2] = f.e2nu;
  out.g[3][3] = f.e2nu;
  return out;
}

double ricci_residual(const Profile& p, double rho, double z, double h) {
  if (!(h > 0.0) || !(rho > 2.0 * h)) fail(errc::step_too_large, "requires rho > 2h > 0");
  const MetricFn g = [&p](double r, double zz) { return metric_tensor(p, r, zz).g; };
  const CurvatureSample c = curvature_fd_richardson(g, rho, z, h);
  if (c.cond_est > 1e12) fail(errc::ill_conditioned, "metric condition estimate exceeds 1e12");
  double m = 0.0;
  for (const auto& row : c.ricci)
    for (double x : row) m = std::max(m, std::abs(x));
  return m / (1.0 + c.max_d2g);
}

}  // namespace toralf
