#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "toralf/chen_teo.hpp"
#include "toralf/metric.hpp"
#include "toralf/profile.hpp"

namespace toralf {

// Edge Killing field as an element of the Lie algebra of the torus, in the
// (d/dt, d/dx3) frame.
struct KillingVector {
  double c_t = 0.0;
  double c_x3 = 0.0;
};

inline double det2(const KillingVector& u, const KillingVector& v) {
  return u.c_t * v.c_x3 - u.c_x3 * v.c_t;
}

// v_i = alpha_i f'_i (d/dx3 + F_i d/dt) when f'_i != 0,
// v_i = alpha_i f_i^2 / A d/dt on the zero-slope interval.
// One angle per interval (r + 1 of them).
std::vector<KillingVector> killing_vectors(const PseudoProfile& p, const AxisData& axis,
                                           const std::vector<double>& alphas);

struct ChainStep {
  long long l = 0;      // snapped integer
  int eps = 1;          // snapped sign
  double l_raw = 0.0;   // solved values before snapping
  double eps_raw = 0.0;
};

struct ChainResult {
  bool ok = false;  // every l is an integer and every eps is +-1
  std::vector<ChainStep> steps;
};

// Solves v_{i-1} = l_i v_i - eps_i v_{i+1} for each interior i and snaps.
ChainResult chain_check(const std::vector<KillingVector>& vs);

// Normalized total NUT charge, as the cross-ratio of the four axis constants.
double nut_charge(const std::array<double, 4>& F_consts);

// The closed form in (p, q, a, b), written through the gap primitives so
// p = 0 and q = 0 are ordinary points.
double nut_charge(const ChenTeoParams& params);

enum class BoundaryKind { lens_space, sphere3, s1_x_s2 };

struct Topology {
  BoundaryKind kind = BoundaryKind::s1_x_s2;
  long long n = 0;
  long long l = 0;  // lens space of type l/n when kind == lens_space
};

Topology classify_boundary(long long n, long long l2);

struct RegularityReport {
  double nut_charge = 0.0;
  bool nut_is_integer = false;
  bool regular = false;
  std::optional<long long> n;  // snapped integer NUT charge
  std::optional<long long> l1, l2;
  int epsilon1 = 1, epsilon2 = 1;
  std::array<double, 4> alphas{1.0, 1.0, 1.0, 1.0};  // alpha_0 .. alpha_3, alpha_0 = 1
  std::optional<Topology> topology;
  std::vector<KillingVector> witnesses;  // v_0 .. v_3
  bool angles_unique = true;   // false on the n = -1 free-integer branches
  double relation_residual = 0.0;  // max residual of the four closure relations
};

// Decides regularity (n integer), chooses the integer pair l1 l2 = n + 1 and
// the angles alpha_1..alpha_3 with alpha_0 = 1, and classifies the boundary.
RegularityReport solve_regularity(const ChenTeoParams& params);

// True iff the all-angles-one system has an integer solution; on the family
// this happens exactly on the curve p + q = 1, a = 1/q, b = 1/p.
bool check_smooth(const ChenTeoParams& params, double tol = 1e-10);

// --- exact-rational path ---------------------------------------------------

struct Rational {
  long long num = 0;
  long long den = 1;
};

// Gap-form parameters with exact rational entries.
struct ExactParams {
  Rational p, q, d1, d3;
};

// Exact NUT charge; integral part returned when n is an integer.
struct ExactNut {
  double value = 0.0;
  bool is_integer = false;
  long long n = 0;
};

ExactNut nut_charge_exact(const ExactParams& params);

// As solve_regularity but with the integrality decision (and the bracket
// signs) taken in exact arithmetic.
RegularityReport solve_regularity(const ExactParams& params);

ChenTeoParams to_params(const ExactParams& params);

}  // namespace toralf
