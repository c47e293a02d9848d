#include "toralf/families.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace toralf {

namespace {

void check_range(bool ok, const std::string& what) {
  if (!ok) fail(errc::parameter_out_of_range, what);
}

// (sqrt(1/(1-x)) - 1)/x, algebraically stabilized; equals 1/2 at x = 0.
double equal_angle_gap(double x) {
  const double s = std::sqrt(1.0 - x);
  return 1.0 / (s * (1.0 + s));
}

}  // namespace

FamilyMember family_pc33(double p, long long l2) {
  check_range(p > 0.5 && p < 1.0, "family_pc33 requires 1/2 < p < 1");
  const double alpha = 1.0 / p;
  const double d3 = 0.5 * (1.0 + alpha - static_cast<double>(l2));
  check_range(d3 > 0.0, "l2 = " + std::to_string(l2) + " gives a nonpositive gap");
  // a = p/(1-p); d1 = (sqrt a - 1)/p = (sqrt p - sqrt(1-p))/(p sqrt(1-p)).
  const double sp = std::sqrt(p), sq = std::sqrt(1.0 - p);
  const double d1 = (sp - sq) / (p * sq);
  const ChenTeoParams params = ChenTeoParams::from_gaps(p, 0.0, d1, d3);
  check_range(params.normalized_A() > 0.0,
              "l2 = " + std::to_string(l2) + " leaves the ALF range at p = " + std::to_string(p));
  Profile prof = to_profile(params);
  RegularityReport rep = solve_regularity(params);
  return {params, std::move(prof), std::move(rep)};
}

PseudoProfile family_pc33_limit(long long l2, int alpha_endpoint) {
  check_range(alpha_endpoint == 1 || alpha_endpoint == 2, "endpoint angle is 1 or 2");
  // At alpha -> 1 the first turning coefficient vanishes; at alpha -> 2 the
  // first two turning points coincide. Either way two turns of weight 1/2
  // survive, separated by (1 + alpha - l2)/2.
  const double gap = 0.5 * (1.0 + static_cast<double>(alpha_endpoint) - static_cast<double>(l2));
  check_range(gap >= 0.0, "l2 too large for this endpoint");
  const double A = 1.0 - 0.5 * gap;
  check_range(A >= 0.0, "l2 = " + std::to_string(l2) + " leaves the family (A < 0)");
  const double c = 0.5 * gap;  // centre the surviving turns at +-gap/2
  std::vector<Turn> turns = merge_turns({{-c, 0.5}, {c, 0.5}});
  return make_pseudo_profile(A, std::move(turns));
}

FamilyMember family_af_equal_angles(double p, double q) {
  check_range(p > -1.0 && p < 1.0 && q > -1.0 && q < 1.0 && p + q > 0.0,
              "require -1 < p, q < 1 and p + q > 0");
  const ChenTeoParams params =
      ChenTeoParams::from_gaps(p, q, equal_angle_gap(p), equal_angle_gap(q));
  check_range(params.normalized_A() > 0.0, "outside the ALF range");
  Profile prof = to_profile(params);
  RegularityReport rep = solve_regularity(params);
  return {params, std::move(prof), std::move(rep)};
}

PseudoProfile family_af_equal_angles_limit(EqualAngleEndpoint endpoint) {
  if (endpoint == EqualAngleEndpoint::taub_nut_quotient)
    return make_pseudo_profile(1.0, {{0.0, 1.0}});
  return make_pseudo_profile(0.0, {{-0.5, 0.5}, {0.5, 0.5}});
}

Profile family_af_q_tau(double q, double tau) {
  check_range(q >= 0.0 && q < 1.0, "require 0 <= q < 1");
  check_range(tau >= -q && tau <= 1.0, "require -q <= tau <= 1");

  const double s_mid = std::sqrt(1.0 + q * tau);
  const double s_left = std::sqrt(q + tau);
  const double s_right = std::sqrt(1.0 - q);

  const double c1 = (q + tau) / (2.0 * (1.0 + tau));
  const double c2 = (1.0 + q * tau) / (2.0 * (1.0 + tau));
  const double c3 = 0.5 * (1.0 - q);
  const double z3 = (1.0 + tau) / (s_right * (s_mid + s_right));

  std::vector<Turn> turns;
  double a_const = 1.0;  // f(0) = 1: A = 1 - sum a_i |z_i|
  if (c1 > 0.0) {
    const double z1 = -(1.0 - tau * tau) / (s_left * (s_mid + s_left));
    turns.push_back({z1, c1});
    // c1 |z1| = sqrt(q+tau) (1-tau) / (2 (s_mid + s_left)), stable as tau -> -q
    a_const -= s_left * (1.0 - tau) / (2.0 * (s_mid + s_left));
  }
  turns.push_back({0.0, c2});
  turns.push_back({z3, c3});
  a_const -= s_right * (1.0 + tau) / (2.0 * (s_mid + s_right));

  return Profile(a_const, merge_turns(std::move(turns)));
}

EhFamilyPoint family_eh(double A) {
  check_range(A >= 0.0 && A <= 1.0, "require 0 <= A <= 1");
  EhFamilyPoint out{presets::eh_family(A), 0, 1.0, 0.0, false};

  const double target = 2.0 * (2.0 * A - 1.0);  // l alpha_1 = A (F_2 - F_0)
  if (std::abs(target) <= 1e-12) {
    out.l = 0;
    out.alpha1 = 1.0;  // Schwarzschild point; the bolt angle is free, smooth choice
    out.smooth = true;
  } else if (A > 0.0 && A < 1.0) {
    out.l = target > 0.0 ? 1 : -1;
    const AxisData ad = axis_data(as_profile(out.profile));
    out.alpha1 = A * ad.af_defect / static_cast<double>(out.l);
    out.smooth = std::abs(out.alpha1 - 1.0) <= 1e-9;
  } else {
    // Endpoints: the bolt angle tends to 4 pi on both sides.
    out.l = A == 0.0 ? -1 : 1;
    out.alpha1 = 2.0;
  }
  out.cone_angle = 2.0 * std::numbers::pi * out.alpha1;
  return out;
}

}  // namespace toralf
