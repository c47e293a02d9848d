#pragma once

#include "toralf/chen_teo.hpp"
#include "toralf/regularity.hpp"

namespace toralf {

struct FamilyMember {
  ChenTeoParams params;
  Profile profile;  // f_2 = 1 normalized
  RegularityReport report;
};

// q = 0 family: 1/2 < p < 1, one conical divisor of angle 2 pi / p, l_1 = 1,
// n = l_2 - 1. Requires l_2 <= 2 (positive gap) and a positive normalized A,
// which restricts l_2 to {-1, 0, 1, 2}.
FamilyMember family_pc33(double p, long long l2);

// Endpoint profiles of the q = 0 family, at the angle 2 pi (p -> 1) and the
// angle 4 pi (p -> 1/2), emitted with the two surviving turning points
// centred about z = 0. A degenerates to 0 (Eguchi-Hanson) at l2 = -2, -1.
PseudoProfile family_pc33_limit(long long l2, int alpha_endpoint);

// AF family with equal interior angles: a = 1/(1-p), b = 1/(1-q),
// alpha_1 = alpha_2 = 1/(p+q).
FamilyMember family_af_equal_angles(double p, double q);

enum class EqualAngleEndpoint {
  taub_nut_quotient,  // p = q -> 1: f = 1 + |z|, angle -> pi (Z/2 quotient)
  eguchi_hanson,      // p = q -> 0: f = |z + 1/2|/2 + |z - 1/2|/2, angle -> inf
};

PseudoProfile family_af_equal_angles_limit(EqualAngleEndpoint endpoint);

// AF family at fixed asymptotics q with one conical divisor, parametrised by
// tau = alpha - 1 in [-q, 1]; tau = 0 is the smooth instanton, the endpoints
// merge a turning point (r = 2).
Profile family_af_q_tau(double q, double tau);

// The r = 2 family f_A = A + |z+b|/2 + |z-b|/2, A + b = 1.
struct EhFamilyPoint {
  PseudoProfile profile;
  long long l = 0;          // lattice chain integer, in {-1, 0, 1}
  double alpha1 = 1.0;      // bolt angle / 2 pi
  double cone_angle = 0.0;  // 2 pi alpha1
  bool smooth = false;      // exactly at A in {1/4, 1/2, 3/4}
};

EhFamilyPoint family_eh(double A);

}  // namespace toralf
