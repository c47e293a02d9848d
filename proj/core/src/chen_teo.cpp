#include "toralf/chen_teo.hpp"

#include <cmath>
#include <string>

namespace toralf {

namespace {

void check_range(bool ok, const std::string& what) {
  if (!ok) fail(errc::parameter_out_of_range, what);
}

}  // namespace

ChenTeoParams::ChenTeoParams(double p, double q, double d1, double d3)
    : p_(p), q_(q), d1_(d1), d3_(d3) {
  check_range(std::isfinite(p) && std::isfinite(q) && p > -1.0 && p < 1.0 && q > -1.0 && q < 1.0,
              "require -1 < p < 1 and -1 < q < 1");
  check_range(p + q > 0.0, "require p + q > 0");
  check_range(d1 > 0.0 && d3 > 0.0, "require positive gaps z2 - z1 and z3 - z2");
  check_range(1.0 + p * d1 > 0.0 && 1.0 + q * d3 > 0.0,
              "require sqrt(a) = 1 + p d1 > 0 and sqrt(b) = 1 + q d3 > 0");
}

ChenTeoParams ChenTeoParams::from_gaps(double p, double q, double d1, double d3) {
  return ChenTeoParams(p, q, d1, d3);
}

ChenTeoParams ChenTeoParams::from_ab(double p, double q, double a, double b) {
  check_range(a > 0.0 && b > 0.0, "require a > 0 and b > 0");
  check_range(p != 0.0 || a == 1.0, "p = 0 forces a = 1; pass the gap d1 instead");
  check_range(q != 0.0 || b == 1.0, "q = 0 forces b = 1; pass the gap d3 instead");
  if (p == 0.0 || q == 0.0)
    fail(errc::parameter_out_of_range,
         "(a, b) do not determine the gaps at p = 0 or q = 0; use from_gaps");
  return ChenTeoParams(p, q, (std::sqrt(a) - 1.0) / p, (std::sqrt(b) - 1.0) / q);
}

double ChenTeoParams::a() const {
  const double s = 1.0 + p_ * d1_;
  return s * s;
}

double ChenTeoParams::b() const {
  const double s = 1.0 + q_ * d3_;
  return s * s;
}

double ChenTeoParams::normalized_A() const {
  return 0.5 * ((1.0 + p_ * d1_) + (1.0 + q_ * d3_)) - 0.5 * (d1_ + d3_);
}

Profile to_profile(const ChenTeoParams& params) {
  const double A = params.normalized_A();
  if (!(A > 0.0))
    fail(errc::non_positive_a, "normalized A = " + std::to_string(A) + "; outside the ALF family");
  return Profile(A, {{-params.gap1(), 0.5 * (1.0 - params.p())},
                     {0.0, 0.5 * (params.p() + params.q())},
                     {params.gap3(), 0.5 * (1.0 - params.q())}});
}

ChenTeoParams params_from_profile(const PseudoProfile& prof) {
  if (prof.rank() != 3)
    fail(errc::wrong_turning_point_count,
         "r = " + std::to_string(prof.rank()) + "; the family has three turning points");
  const double p = -prof.slope_in(1);
  const double q = prof.slope_in(2);
  const double f2 = prof.value(prof.turns()[1].z);
  const double d1 = (prof.turns()[1].z - prof.turns()[0].z) / f2;
  const double d3 = (prof.turns()[2].z - prof.turns()[1].z) / f2;
  return ChenTeoParams::from_gaps(p, q, d1, d3);
}

}  // namespace toralf
