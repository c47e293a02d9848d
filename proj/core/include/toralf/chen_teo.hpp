#pragma once

#include "toralf/profile.hpp"

namespace toralf {

// The r = 3 family in the parameters (p, q, a, b): slopes (-1, -p, q, 1) and
// a = f_1^2/f_2^2, b = f_3^2/f_2^2. Stored primitives are the gaps of the
// f_2 = 1 normalization, d1 = z_2 - z_1 = (sqrt a - 1)/p and
// d3 = z_3 - z_2 = (sqrt b - 1)/q, so that p = 0 and q = 0 (where a = 1,
// b = 1) are ordinary points of the family.
class ChenTeoParams {
public:
  static ChenTeoParams from_ab(double p, double q, double a, double b);
  static ChenTeoParams from_gaps(double p, double q, double d1, double d3);

  double p() const { return p_; }
  double q() const { return q_; }
  double a() const;
  double b() const;
  double gap1() const { return d1_; }
  double gap3() const { return d3_; }

  // A of the f_2 = 1 normalized profile, (sqrt a + sqrt b)/2 - (d1 + d3)/2.
  double normalized_A() const;

private:
  ChenTeoParams(double p, double q, double d1, double d3);
  double p_, q_, d1_, d3_;
};

// The f_2 = 1, z_2 = 0 normalized profile: turns (-d1, (1-p)/2), (0, (p+q)/2),
// (d3, (1-q)/2). Throws NonPositiveA outside the ALF range.
Profile to_profile(const ChenTeoParams& params);

// Inverse on r = 3 profiles; insensitive to rescaling.
ChenTeoParams params_from_profile(const PseudoProfile& p);

}  // namespace toralf
