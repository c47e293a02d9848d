#pragma once

#include <cmath>
#include <vector>

#include "toralf/profile.hpp"

namespace toralf::detail {

// log((d + u)/(d - u)) evaluated as 2 artanh(u/d); the quotient form cancels
// catastrophically near the axis where u -> +-d.
inline double log_ratio(double u, double d) {
  double t = u / d;
  const double lim = 1.0 - 1e-15;
  if (t > lim) t = lim;
  if (t < -lim) t = -lim;
  return 2.0 * std::atanh(t);
}

// The four sums every field formula is built from, plus the two auxiliary
// sums needed for H and F. All are smooth off the axis.
struct RodSums {
  double W = 0.0;    // A + sum a_i d_i
  double S = 0.0;    // sum a_i / d_i
  double P = 0.0;    // sum a_i (z - z_i) / d_i
  double Q = 0.0;    // sum a_i rho / d_i
  double aud = 0.0;  // sum a_i (z - z_i) d_i
  double aL = 0.0;   // sum a_i log((d_i + u_i)/(d_i - u_i))
  std::vector<double> d;
};

inline RodSums rod_sums(const PseudoProfile& p, double rho, double z) {
  RodSums s;
  s.W = p.constant();
  s.d.reserve(p.turns().size());
  for (const Turn& t : p.turns()) {
    const double u = z - t.z;
    const double d = std::hypot(rho, u);
    s.d.push_back(d);
    s.W += t.a * d;
    s.S += t.a / d;
    s.P += t.a * u / d;
    s.aud += t.a * u * d;
    s.aL += t.a * log_ratio(u, d);
  }
  s.Q = rho * s.S;
  return s;
}

}  // namespace toralf::detail
