#pragma once

#include <optional>
#include <string>

#include "sgl/errors.hpp"

namespace sgl {

enum class ScheduleMode { dynamic_cosine, static_value };
enum class ScheduleContinuation { mirror, restart };

// Periodic generator L1 weight: lambda(e) = lower + amplitude*(cos(pi*e/half_period)+1)/2,
// starting at lower+amplitude and reaching lower after one half-period. With
// `mirror` the cosine simply continues (full period = 2*half_period); with
// `restart` the phase snaps back to 0 every half-period.
struct LambdaSchedule {
    double lower = 50.0;       // i
    double amplitude = 100.0;  // j
    double half_period = 1.5;  // epochs
    ScheduleMode mode = ScheduleMode::dynamic_cosine;
    ScheduleContinuation continuation = ScheduleContinuation::mirror;
    std::optional<double> static_value;  // defaults to lower + amplitude/2

    void validate() const;
};

double lambda_at(const LambdaSchedule& schedule, double epoch_progress);

std::string schedule_mode_name(ScheduleMode m);
ScheduleMode schedule_mode_from_name(const std::string& s);
std::string continuation_name(ScheduleContinuation c);
ScheduleContinuation continuation_from_name(const std::string& s);

}  // namespace sgl
