#pragma once

#include <stdexcept>
#include <string>

namespace toralf {

enum class errc {
  non_positive_a,
  coefficients_dont_sum_to_one,
  non_monotone_turning_points,
  non_positive_coefficient,
  non_positive_function,
  turning_point_slope_undefined,
  non_positive_scale,
  unknown_preset,
  parameter_out_of_range,
  axis_evaluation,
  turning_point_on_axis,
  axis_log_divergence,
  step_too_large,
  ill_conditioned,
  degenerate_hz,
  adjacent_slopes_both_zero,
  angle_non_positive,
  degenerate_pair,
  degenerate_denominator,
  wrong_turning_point_count,
  no_positive_angle_solution,
  usage_error,
};

const char* errc_name(errc code);

// Single exception type; the code carries the contract violation, the
// message the offending values.
class error : public std::runtime_error {
public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

inline const char* errc_name(errc code) {
  switch (code) {
    case errc::non_positive_a: return "NonPositiveA";
    case errc::coefficients_dont_sum_to_one: return "CoefficientsDontSumToOne";
    case errc::non_monotone_turning_points: return "NonMonotoneTurningPoints";
    case errc::non_positive_coefficient: return "NonPositiveCoefficient";
    case errc::non_positive_function: return "NonPositiveFunction";
    case errc::turning_point_slope_undefined: return "TurningPointSlopeUndefined";
    case errc::non_positive_scale: return "NonPositiveScale";
    case errc::unknown_preset: return "UnknownPreset";
    case errc::parameter_out_of_range: return "ParameterOutOfRange";
    case errc::axis_evaluation: return "AxisEvaluation";
    case errc::turning_point_on_axis: return "TurningPointOnAxis";
    case errc::axis_log_divergence: return "AxisLogDivergence";
    case errc::step_too_large: return "StepTooLarge";
    case errc::ill_conditioned: return "IllConditioned";
    case errc::degenerate_hz: return "DegenerateHz";
    case errc::adjacent_slopes_both_zero: return "AdjacentSlopesBothZero";
    case errc::angle_non_positive: return "AngleNonPositive";
    case errc::degenerate_pair: return "DegeneratePair";
    case errc::degenerate_denominator: return "DegenerateDenominator";
    case errc::wrong_turning_point_count: return "WrongTurningPointCount";
    case errc::no_positive_angle_solution: return "NoPositiveAngleSolution";
    case errc::usage_error: return "UsageError";
  }
  return "UnknownError";
}

}  // namespace toralf
