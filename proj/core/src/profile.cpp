#include "toralf/profile.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

namespace toralf {

namespace {

constexpr double kSumTol = 1e-12;

std::string describe(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

}  // namespace

PseudoProfile::PseudoProfile(double A, std::vector<Turn> turns, bool require_positive_A)
    : A_(A), turns_(std::move(turns)) {
  if (!std::isfinite(A_)) fail(errc::non_positive_a, "A is not finite");
  if (require_positive_A && !(A_ > 0.0))
    fail(errc::non_positive_a, "A = " + describe(A_));
  if (A_ < 0.0) fail(errc::non_positive_a, "A = " + describe(A_));
  if (turns_.empty())
    fail(errc::non_monotone_turning_points, "at least one turning point required");

  double sum = 0.0;
  for (std::size_t i = 0; i < turns_.size(); ++i) {
    const Turn& t = turns_[i];
    if (!std::isfinite(t.z) || !std::isfinite(t.a))
      fail(errc::non_positive_coefficient, "non-finite turning point");
    if (!(t.a > 0.0))
      fail(errc::non_positive_coefficient,
           "a[" + std::to_string(i) + "] = " + describe(t.a));
    if (i > 0 && !(turns_[i - 1].z < t.z))
      fail(errc::non_monotone_turning_points,
           "z[" + std::to_string(i - 1) + "] = " + describe(turns_[i - 1].z) +
               " >= z[" + std::to_string(i) + "] = " + describe(t.z));
    sum += t.a;
  }
  if (std::abs(sum - 1.0) > kSumTol)
    fail(errc::coefficients_dont_sum_to_one, "sum a_i = " + describe(sum));

  slopes_.resize(turns_.size() + 1);
  slopes_[0] = -1.0;
  double cum = 0.0;
  for (std::size_t i = 0; i < turns_.size(); ++i) {
    cum += turns_[i].a;
    slopes_[i + 1] = -1.0 + 2.0 * cum;
  }

  if (!(min_value() > 0.0))
    fail(errc::non_positive_function, "min f = " + describe(min_value()));
}

double PseudoProfile::slope_in(int interval) const {
  if (interval < 0 || interval > rank())
    fail(errc::turning_point_slope_undefined,
         "interval index " + std::to_string(interval) + " out of range");
  return slopes_[static_cast<std::size_t>(interval)];
}

int PseudoProfile::interval_of(double z) const {
  int i = 0;
  while (i < rank() && turns_[static_cast<std::size_t>(i)].z <= z) ++i;
  return i;
}

bool PseudoProfile::is_turning_point(double z) const {
  for (const Turn& t : turns_)
    if (t.z == z) return true;
  return false;
}

double PseudoProfile::slope_at(double z) const {
  if (is_turning_point(z))
    fail(errc::turning_point_slope_undefined, "z = " + describe(z) + " is a turning point");
  return slopes_[static_cast<std::size_t>(interval_of(z))];
}

double PseudoProfile::value(double z) const {
  double f = A_;
  for (const Turn& t : turns_) f += t.a * std::abs(z - t.z);
  return f;
}

double PseudoProfile::min_value() const {
  // The minimum sits at the first turning point with nonnegative right slope.
  for (std::size_t i = 0; i < turns_.size(); ++i)
    if (slopes_[i + 1] >= 0.0) return value(turns_[i].z);
  return value(turns_.back().z);
}

double PseudoProfile::moment1() const {
  double s = 0.0;
  for (const Turn& t : turns_) s += t.a * t.z;
  return s;
}

double PseudoProfile::moment2() const {
  double s = 0.0;
  for (const Turn& t : turns_) s += t.a * t.z * t.z;
  return s;
}

Profile::Profile(double A, std::vector<Turn> turns)
    : PseudoProfile(A, std::move(turns), /*require_positive_A=*/true) {}

Profile make_profile(double A, std::vector<Turn> turns) { return Profile(A, std::move(turns)); }

PseudoProfile make_pseudo_profile(double A, std::vector<Turn> turns) {
  return PseudoProfile(A, std::move(turns), /*require_positive_A=*/false);
}

Profile as_profile(const PseudoProfile& p) { return Profile(p.constant(), p.turns()); }

namespace detail {

Profile unchecked_profile(double A, std::vector<Turn> turns) {
  Profile p;
  p.A_ = A;
  p.turns_ = std::move(turns);
  p.slopes_.resize(p.turns_.size() + 1);
  p.slopes_[0] = -1.0;
  double cum = 0.0;
  for (std::size_t i = 0; i < p.turns_.size(); ++i) {
    cum += p.turns_[i].a;
    p.slopes_[i + 1] = -1.0 + 2.0 * cum;
  }
  return p;
}

}  // namespace detail

namespace {

std::vector<Turn> rescaled_turns(const PseudoProfile& p, double alpha, double beta) {
  if (!(alpha > 0.0)) fail(errc::non_positive_scale, "alpha = " + describe(alpha));
  std::vector<Turn> turns = p.turns();
  for (Turn& t : turns) t.z = (t.z - beta) / alpha;
  return turns;
}

}  // namespace

Profile rescale(const Profile& p, double alpha, double beta) {
  return Profile(p.constant() / alpha, rescaled_turns(p, alpha, beta));
}

PseudoProfile rescale(const PseudoProfile& p, double alpha, double beta) {
  return make_pseudo_profile(p.constant() / alpha, rescaled_turns(p, alpha, beta));
}

std::vector<Turn> merge_turns(std::vector<Turn> turns, double tol) {
  std::sort(turns.begin(), turns.end(), [](const Turn& x, const Turn& y) { return x.z < y.z; });
  std::vector<Turn> out;
  for (const Turn& t : turns) {
    if (t.a <= tol) continue;
    if (!out.empty() && t.z - out.back().z <= tol) {
      // Coincident turning points: coefficients add, position is the
      // coefficient-weighted mean.
      double w = out.back().a + t.a;
      out.back().z = (out.back().a * out.back().z + t.a * t.z) / w;
      out.back().a = w;
    } else {
      out.push_back(t);
    }
  }
  return out;
}

namespace presets {

Profile taub_nut(double n) {
  if (!(n > 0.0)) fail(errc::parameter_out_of_range, "taub_nut requires n > 0");
  return Profile(2.0 * n, {{0.0, 1.0}});
}

Profile taub_bolt(double n) {
  if (n == 0.0 || !std::isfinite(n))
    fail(errc::parameter_out_of_range, "taub_bolt requires n != 0");
  double b = 0.75 * std::abs(n);
  return Profile(3.0 * b, {{-b, 0.5}, {b, 0.5}});
}

Profile kerr(double m, double a) {
  if (!(m > 0.0)) fail(errc::parameter_out_of_range, "kerr requires m > 0");
  double b = std::hypot(m, a);
  if (!(std::abs(a) > 0.0 && std::abs(a) < b))
    fail(errc::parameter_out_of_range, "kerr requires 0 < |a| < sqrt(m^2 + a^2)");
  return Profile(m, {{-b, 0.5 * (1.0 - a / b)}, {b, 0.5 * (1.0 + a / b)}});
}

Profile schwarzschild(double m) {
  if (!(m > 0.0)) fail(errc::parameter_out_of_range, "schwarzschild requires m > 0");
  return Profile(m, {{-m, 0.5}, {m, 0.5}});
}

Profile chen_teo_instanton(double p) {
  if (!(p > 0.0 && p < 1.0))
    fail(errc::parameter_out_of_range, "chen_teo_instanton requires 0 < p < 1");
  double q = 1.0 - p;
  double A = 0.5 * (1.0 - std::pow(p, 1.5) - std::pow(q, 1.5));
  return Profile(A, {{q - std::sqrt(q), 0.5 * q}, {0.0, 0.5}, {std::sqrt(p) - p, 0.5 * p}});
}

PseudoProfile eguchi_hanson(double b) {
  if (!(b > 0.0)) fail(errc::parameter_out_of_range, "eguchi_hanson requires b > 0");
  return make_pseudo_profile(0.0, {{-b, 0.5}, {b, 0.5}});
}

PseudoProfile eh_family(double A) {
  if (!(A >= 0.0 && A <= 1.0))
    fail(errc::parameter_out_of_range, "eh_family requires 0 <= A <= 1");
  double b = 1.0 - A;
  if (b == 0.0) return make_pseudo_profile(A, {{0.0, 1.0}});  // Taub-NUT endpoint
  return make_pseudo_profile(A, {{-b, 0.5}, {b, 0.5}});
}

}  // namespace presets

}  // namespace toralf
