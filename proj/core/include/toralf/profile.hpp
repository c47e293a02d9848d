#pragma once

#include <cstddef>
#include <vector>

#include "toralf/errors.hpp"

namespace toralf {

// One turning point of a rod profile: slope jump by 2a at z.
struct Turn {
  double z = 0.0;
  double a = 0.0;
};

class Profile;

namespace detail {
// Skips every construction invariant (sum of coefficients included); for
// negative-control tests that need rod data outside the valid family.
Profile unchecked_profile(double A, std::vector<Turn> turns);
}  // namespace detail

// Convex piecewise-affine rod profile
//
//   f(z) = A + sum_i a_i |z - z_i|,   a_i > 0,  sum_i a_i = 1,
//
// so the slopes f'_0 = -1 < f'_1 < ... < f'_r = +1 increase strictly and
// f > 0 everywhere. PseudoProfile allows A = 0 (outside the ALF family);
// Profile additionally guarantees A > 0 and is the only type accepted by
// the generating-function and metric evaluators.
class PseudoProfile {
public:
  double constant() const { return A_; }
  const std::vector<Turn>& turns() const { return turns_; }
  int rank() const { return static_cast<int>(turns_.size()); }  // r

  // Slope f'_i on the open interval (z_i, z_{i+1}), i in [0, r].
  double slope_in(int interval) const;

  // Slope at z; z must not be a turning point.
  double slope_at(double z) const;

  // Interval index i such that z_i <= z < z_{i+1} (z_0 = -inf, z_{r+1} = +inf).
  int interval_of(double z) const;

  bool is_turning_point(double z) const;

  double value(double z) const;

  // f at the minimizing turning point (region).
  double min_value() const;

  // sum a_i z_i and sum a_i z_i^2 (first/second moments of the slope measure).
  double moment1() const;
  double moment2() const;

protected:
  PseudoProfile() = default;
  PseudoProfile(double A, std::vector<Turn> turns, bool require_positive_A);

  double A_ = 0.0;
  std::vector<Turn> turns_;
  std::vector<double> slopes_;  // f'_0 .. f'_r

  friend PseudoProfile make_pseudo_profile(double, std::vector<Turn>);
};

class Profile : public PseudoProfile {
public:
  Profile(double A, std::vector<Turn> turns);

private:
  Profile() = default;
  friend Profile detail::unchecked_profile(double, std::vector<Turn>);
};

Profile make_profile(double A, std::vector<Turn> turns);
PseudoProfile make_pseudo_profile(double A, std::vector<Turn> turns);

// Upgrades a pseudo-profile with A > 0 to a Profile; throws NonPositiveA.
Profile as_profile(const PseudoProfile& p);

// f~(z) = f(alpha z + beta)/alpha: same coefficients, A/alpha, (z_i - beta)/alpha.
Profile rescale(const Profile& p, double alpha, double beta);
PseudoProfile rescale(const PseudoProfile& p, double alpha, double beta);

// Drops vanishing coefficients and merges coincident turning points
// (coefficients add). Used when a family member degenerates at an endpoint.
std::vector<Turn> merge_turns(std::vector<Turn> turns, double tol = 1e-12);

namespace presets {

// f(z) = 2n + |z|
Profile taub_nut(double n);
// f(z) = 3b + (|z + b| + |z - b|)/2, b = 3|n|/4
Profile taub_bolt(double n);
// f(z) = m + (1 - a/b)|z + b|/2 + (1 + a/b)|z - b|/2, b = sqrt(m^2 + a^2), 0 < |a| < b
Profile kerr(double m, double a);
// f(z) = m + (|z + m| + |z - m|)/2
Profile schwarzschild(double m);
// f(z) = (1 - p^{3/2} - q^{3/2} + q|z - (q - sqrt q)| + |z| + p|z - (sqrt p - p)|)/2, q = 1 - p
Profile chen_teo_instanton(double p);
// f(z) = (|z + b| + |z - b|)/2, A = 0: outside the ALF ansatz
PseudoProfile eguchi_hanson(double b);
// f_A(z) = A + (|z + b| + |z - b|)/2 with b = 1 - A, 0 <= A <= 1
PseudoProfile eh_family(double A);

}  // namespace presets

}  // namespace toralf
