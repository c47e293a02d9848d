#pragma once

#include <string>

#include "toralf/chen_teo.hpp"
#include "toralf/kahler.hpp"
#include "toralf/metric.hpp"
#include "toralf/potential.hpp"
#include "toralf/profile.hpp"
#include "toralf/regularity.hpp"

namespace toralf {

// All emitters write doubles with 17 significant digits (lossless round
// trip) and fixed key order, so equal inputs give byte-equal output.
// Non-finite values are emitted as null.
std::string format_double(double x);

std::string to_json(const PseudoProfile& p);
std::string to_json(const ChenTeoParams& p);
std::string to_json(const PotentialSample& s);
std::string to_json(const AxisPotentialSample& s);
std::string to_json(const FieldSample& s);
std::string to_json(const AxisFieldSample& s);
std::string to_json(const AxisData& d);
std::string to_json(const MomentPair& m);
std::string to_json(const Polytope& p);
std::string to_json(const KillingVector& v);
std::string to_json(const RegularityReport& r);

// Parsers accept exactly the schemas the emitters produce. The profile
// parser accepts A >= 0 (pseudo-profiles included); use as_profile for the
// strict type. The params parser accepts {"p","q","a","b"} or
// {"p","q","d1","d3"}.
PseudoProfile profile_from_json(const std::string& text);
ChenTeoParams params_from_json(const std::string& text);

}  // namespace toralf
