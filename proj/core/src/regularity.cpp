#include "toralf/regularity.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <string>

namespace toralf {

namespace {

using bigrat = boost::multiprecision::cpp_rational;
using bigint = boost::multiprecision::cpp_int;

constexpr double kSnapTol = 1e-9;

std::optional<long long> snap_integer(double x, double tol = kSnapTol) {
  const double r = std::round(x);
  if (std::abs(x - r) <= tol * std::max(1.0, std::abs(x))) return static_cast<long long>(r);
  return std::nullopt;
}

std::vector<long long> divisors_of(long long m) {
  std::vector<long long> ds;
  for (long long d = 1; d * d <= m; ++d) {
    if (m % d != 0) continue;
    ds.push_back(d);
    if (d != m / d) ds.push_back(m / d);
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

}  // namespace

std::vector<KillingVector> killing_vectors(const PseudoProfile& p, const AxisData& axis,
                                           const std::vector<double>& alphas) {
  const int r = p.rank();
  if (static_cast<int>(alphas.size()) != r + 1)
    fail(errc::angle_non_positive, "need one angle per interval (r + 1 of them)");
  for (double a : alphas)
    if (!(a > 0.0)) fail(errc::angle_non_positive, "alpha = " + std::to_string(a));

  std::vector<KillingVector> vs;
  vs.reserve(static_cast<std::size_t>(r) + 1);
  for (int i = 0; i <= r; ++i) {
    const double fp = p.slope_in(i);
    if (fp != 0.0) {
      const double Fi = axis.F_consts[static_cast<std::size_t>(i)];
      vs.push_back({alphas[static_cast<std::size_t>(i)] * fp * Fi,
                    alphas[static_cast<std::size_t>(i)] * fp});
    } else {
      // f is constant on the interval; its value there is f(z_i).
      const double fi = p.value(p.turns()[static_cast<std::size_t>(i - 1)].z);
      vs.push_back({alphas[static_cast<std::size_t>(i)] * fi * fi / p.constant(), 0.0});
    }
  }
  return vs;
}

ChainResult chain_check(const std::vector<KillingVector>& vs) {
  if (vs.size() < 2) fail(errc::degenerate_pair, "need at least two vectors");
  ChainResult out;
  out.ok = true;
  for (std::size_t i = 1; i + 1 < vs.size(); ++i) {
    const KillingVector& prev = vs[i - 1];
    const KillingVector& cur = vs[i];
    const KillingVector& next = vs[i + 1];
    const double det = det2(cur, next);
    const double scale = (std::abs(cur.c_t) + std::abs(cur.c_x3)) *
                         (std::abs(next.c_t) + std::abs(next.c_x3));
    if (std::abs(det) <= 1e-14 * std::max(1.0, scale))
      fail(errc::degenerate_pair, "v_" + std::to_string(i) + " parallel to v_" + std::to_string(i + 1));

    // Cramer on l v_i - eps v_{i+1} = v_{i-1}.
    ChainStep step;
    step.l_raw = det2(prev, next) / det;
    step.eps_raw = det2(prev, cur) / det;

    const auto l = snap_integer(step.l_raw);
    const bool eps_ok = std::abs(std::abs(step.eps_raw) - 1.0) <= kSnapTol;
    if (l && eps_ok) {
      step.l = *l;
      step.eps = step.eps_raw > 0.0 ? 1 : -1;
    } else {
      out.ok = false;
    }
    out.steps.push_back(step);
  }
  return out;
}

double nut_charge(const std::array<double, 4>& F) {
  const double den = (F[1] - F[0]) * (F[2] - F[3]);
  const double scale = (std::abs(F[1]) + std::abs(F[0])) * (std::abs(F[2]) + std::abs(F[3]));
  if (std::abs(den) <= 1e-14 * std::max(1.0, scale))
    fail(errc::degenerate_denominator, "(F1 - F0)(F2 - F3) vanishes");
  return (F[3] - F[0]) * (F[1] - F[2]) / den;
}

double nut_charge(const ChenTeoParams& c) {
  // n = (p+q) (a + b - (a-1)/p - (b-1)/q) / (a b (1-p)(1-q)), with
  // (a-1)/p = d1 (2 + p d1) so p = 0 and q = 0 are ordinary points.
  const double p = c.p(), q = c.q(), a = c.a(), b = c.b();
  const double num = a + b - c.gap1() * (2.0 + p * c.gap1()) - c.gap3() * (2.0 + q * c.gap3());
  return (p + q) * num / (a * b * (1.0 - p) * (1.0 - q));
}

Topology classify_boundary(long long n, long long l2) {
  if (n == -1) return {BoundaryKind::sphere3, n, l2};
  if (n == 0) return {BoundaryKind::s1_x_s2, n, l2};
  return {BoundaryKind::lens_space, n, l2};
}

namespace {

// Completes a report once the integer NUT charge and the bracket data
// (signs, exact-zero flags) are known.
RegularityReport finish_solve(const ChenTeoParams& c, double n_float, long long n_int,
                              int sign_b1, int sign_b2, bool b1_zero, bool b2_zero) {
  const double p = c.p(), q = c.q(), a = c.a(), b = c.b();
  const double sigma = p + q;
  const double G = a * q * (1.0 - p);   // n-coefficient in the first bracket
  const double K = b * p * (1.0 - q);
  const double nd = static_cast<double>(n_int);
  const double B1 = 1.0 + G * nd / sigma;
  const double B2 = 1.0 + K * nd / sigma;

  RegularityReport rep;
  rep.nut_charge = n_float;
  rep.nut_is_integer = true;
  rep.n = n_int;

  long long l1 = 0, l2 = 0;
  double alpha3 = 1.0;
  if (n_int == -1) {
    rep.angles_unique = false;
    if (b1_zero && b2_zero) {
      alpha3 = 1.0;
    } else if (b1_zero) {
      l2 = sign_b2;  // any integer of this sign works; take the smallest
      alpha3 = static_cast<double>(l2) / B2;
    } else {
      l1 = sign_b1;
      alpha3 = B1 / static_cast<double>(l1);
    }
  } else {
    const long long m = n_int + 1;
    if (n_int >= 0 && (sign_b1 < 0 || sign_b2 < 0))
      fail(errc::no_positive_angle_solution,
           "bracket factors not positive at n = " + std::to_string(n_int));
    long long best_d = 0;
    double best_score = 0.0;
    for (long long d : divisors_of(std::llabs(m))) {
      const long long cand_l1 = sign_b1 * d;
      const double a3 = B1 / static_cast<double>(cand_l1);
      if (!(a3 > 0.0)) continue;
      const double score = std::abs(std::log(a3));
      if (best_d == 0 || score < best_score - 1e-15 ||
          (std::abs(score - best_score) <= 1e-15 && std::llabs(m / cand_l1) < std::llabs(l2))) {
        best_d = d;
        best_score = score;
        l1 = cand_l1;
        l2 = m / cand_l1;
      }
    }
    if (best_d == 0)
      fail(errc::no_positive_angle_solution, "no sign-consistent divisor of n + 1");
    alpha3 = B1 / static_cast<double>(l1);
  }

  const double alpha1 = b * (1.0 - q) / sigma * alpha3;
  const double alpha2 = a * (1.0 - p) / sigma;  // alpha_0 = 1
  if (!(alpha1 > 0.0 && alpha2 > 0.0 && alpha3 > 0.0))
    fail(errc::no_positive_angle_solution, "solved angles not all positive");

  rep.regular = true;
  rep.l1 = l1;
  rep.l2 = l2;
  rep.alphas = {1.0, alpha1, alpha2, alpha3};
  rep.topology = classify_boundary(n_int, l2);

  const double ld1 = static_cast<double>(l1), ld2 = static_cast<double>(l2);
  const double r1 = ld1 * p * alpha1 + q * alpha2 - 1.0;
  const double r2 = p * alpha1 + ld2 * q * alpha2 - alpha3;
  const double r3 = -ld1 * a * p * (1.0 - p) * alpha1 + (sigma - G) * alpha2;
  const double r4 = (sigma - K) * alpha1 - ld2 * b * q * (1.0 - q) * alpha2;
  double res = 0.0;
  res = std::max(res, std::abs(r1) / std::max(1.0, std::abs(q * alpha2)));
  res = std::max(res, std::abs(r2) / std::max(1.0, std::abs(p * alpha1)));
  res = std::max(res, std::abs(r3) / std::max(1.0, std::abs((sigma - G) * alpha2)));
  res = std::max(res, std::abs(r4) / std::max(1.0, std::abs((sigma - K) * alpha1)));
  rep.relation_residual = res;

  // Witness vectors live on the normalized profile; on the A <= 0 boundary
  // of the family the axis constants diverge and no witnesses are reported.
  if (c.normalized_A() > 0.0) {
    const Profile prof = to_profile(c);
    rep.witnesses = killing_vectors(prof, axis_data(prof), {1.0, alpha1, alpha2, alpha3});
  }
  return rep;
}

}  // namespace

RegularityReport solve_regularity(const ChenTeoParams& c) {
  const double n_float = nut_charge(c);
  const auto n_int = snap_integer(n_float);
  if (!n_int) {
    RegularityReport rep;
    rep.nut_charge = n_float;
    rep.nut_is_integer = false;
    rep.regular = false;
    return rep;
  }

  const double sigma = c.p() + c.q();
  const double G = c.a() * c.q() * (1.0 - c.p());
  const double K = c.b() * c.p() * (1.0 - c.q());
  const double B1 = 1.0 + G * static_cast<double>(*n_int) / sigma;
  const double B2 = 1.0 + K * static_cast<double>(*n_int) / sigma;
  const double s1 = std::abs(G * static_cast<double>(*n_int) / sigma);
  const double s2 = std::abs(K * static_cast<double>(*n_int) / sigma);
  bool b1_zero = std::abs(B1) <= kSnapTol * (1.0 + s1);
  bool b2_zero = std::abs(B2) <= kSnapTol * (1.0 + s2);
  if (*n_int == -1 && !b1_zero && !b2_zero) {
    // B1 B2 = 0 up to rounding; zero the smaller bracket.
    (std::abs(B1) <= std::abs(B2) ? b1_zero : b2_zero) = true;
  }
  return finish_solve(c, n_float, *n_int, B1 >= 0.0 ? 1 : -1, B2 >= 0.0 ? 1 : -1, b1_zero,
                      b2_zero);
}

bool check_smooth(const ChenTeoParams& c, double tol) {
  const double p = c.p(), q = c.q(), a = c.a(), b = c.b();
  const double sigma = p + q;
  if (std::abs(sigma - a * (1.0 - p)) > tol) return false;
  if (std::abs(sigma - b * (1.0 - q)) > tol) return false;
  // l1 p + q = 1 and p + l2 q = 1 with l1, l2 integers.
  const double l1 = (p != 0.0) ? std::round((1.0 - q) / p) : 0.0;
  const double l2 = (q != 0.0) ? std::round((1.0 - p) / q) : 0.0;
  if (std::abs(l1 * p + q - 1.0) > tol) return false;
  if (std::abs(p + l2 * q - 1.0) > tol) return false;
  return true;
}

// --- exact-rational path ---------------------------------------------------

namespace {

bigrat to_bigrat(const Rational& r) {
  if (r.den == 0) fail(errc::parameter_out_of_range, "zero denominator");
  return bigrat(bigint(r.num), bigint(r.den));
}

}  // namespace

ChenTeoParams to_params(const ExactParams& e) {
  return ChenTeoParams::from_gaps(static_cast<double>(to_bigrat(e.p)),
                                  static_cast<double>(to_bigrat(e.q)),
                                  static_cast<double>(to_bigrat(e.d1)),
                                  static_cast<double>(to_bigrat(e.d3)));
}

ExactNut nut_charge_exact(const ExactParams& e) {
  const bigrat p = to_bigrat(e.p), q = to_bigrat(e.q), d1 = to_bigrat(e.d1), d3 = to_bigrat(e.d3);
  const bigrat sa = 1 + p * d1, sb = 1 + q * d3;
  const bigrat a = sa * sa, b = sb * sb;
  const bigrat num = a + b - d1 * (2 + p * d1) - d3 * (2 + q * d3);
  const bigrat n = (p + q) * num / (a * b * (1 - p) * (1 - q));

  ExactNut out;
  out.value = static_cast<double>(n);
  if (boost::multiprecision::denominator(n) == 1) {
    out.is_integer = true;
    out.n = static_cast<long long>(boost::multiprecision::numerator(n));
  }
  return out;
}

RegularityReport solve_regularity(const ExactParams& e) {
  const ExactNut nut = nut_charge_exact(e);
  const ChenTeoParams c = to_params(e);
  if (!nut.is_integer) {
    RegularityReport rep;
    rep.nut_charge = nut.value;
    rep.nut_is_integer = false;
    rep.regular = false;
    return rep;
  }

  const bigrat p = to_bigrat(e.p), q = to_bigrat(e.q), d1 = to_bigrat(e.d1), d3 = to_bigrat(e.d3);
  const bigrat sa = 1 + p * d1, sb = 1 + q * d3;
  const bigrat a = sa * sa, b = sb * sb;
  const bigrat B1 = 1 + a * q * (1 - p) * nut.n / (p + q);
  const bigrat B2 = 1 + b * p * (1 - q) * nut.n / (p + q);
  return finish_solve(c, nut.value, nut.n, B1 >= 0 ? 1 : -1, B2 >= 0 ? 1 : -1, B1 == 0,
                      B2 == 0);
}

}  // namespace toralf
