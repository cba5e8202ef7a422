#include "sgl/schedule.hpp"

#include <cmath>

namespace sgl {

void LambdaSchedule::validate() const {
    if (lower < 0.0) throw ConfigError("schedule.i must be >= 0");
    if (amplitude < 0.0) throw ConfigError("schedule.j must be >= 0");
    if (!(half_period > 0.0)) throw ConfigError("schedule.half_period must be > 0");
}

double lambda_at(const LambdaSchedule& schedule, double epoch_progress) {
    schedule.validate();
    if (epoch_progress < 0.0) throw RangeError("epoch_progress must be >= 0");
    if (schedule.mode == ScheduleMode::static_value)
        return schedule.static_value.value_or(schedule.lower + schedule.amplitude / 2.0);
    double phase = epoch_progress / schedule.half_period;
    if (schedule.continuation == ScheduleContinuation::restart) phase = std::fmod(phase, 1.0);
    return schedule.lower + schedule.amplitude * (std::cos(M_PI * phase) + 1.0) / 2.0;
}

std::string schedule_mode_name(ScheduleMode m) {
    return m == ScheduleMode::dynamic_cosine ? "dynamic" : "static";
}

ScheduleMode schedule_mode_from_name(const std::string& s) {
    if (s == "dynamic") return ScheduleMode::dynamic_cosine;
    if (s == "static") return ScheduleMode::static_value;
    throw ConfigError("unknown schedule mode '" + s + "' (expected dynamic|static)");
}

std::string continuation_name(ScheduleContinuation c) {
    return c == ScheduleContinuation::mirror ? "mirror" : "restart";
}

ScheduleContinuation continuation_from_name(const std::string& s) {
    if (s == "mirror") return ScheduleContinuation::mirror;
    if (s == "restart") return ScheduleContinuation::restart;
    throw ConfigError("unknown schedule continuation '" + s + "' (expected mirror|restart)");
}

}  // namespace sgl
