#pragma once

#include "aic/types.hpp"

namespace aic {

enum class PlatoonRole : int { Free = 0, Lva = 1, Fva = 2 };

// Longitudinal position is the front-bumper coordinate along the vehicle's
// route: negative upstream of the stop line, 0 at the stop line, then along
// the crossing trajectory and the exit lane.
struct Vehicle {
    int id = -1;
    MovementId movement = 0;
    double pos = 0.0;
    double speed = 0.0;
    double accel = 0.0;
    double length = 5.0;
    double width = 1.8;
    double a_max = 5.0;
    double entry_time = 0.0;
    double wait_time = 0.0;   // accumulated, seconds below threshold upstream of the line
    double fuel_ml = 0.0;
    double desired_speed = 0.0;  // crossing speed assigned at release
    PlatoonRole role = PlatoonRole::Free;
    bool released = false;       // stop-line hold lifted
    int platoon_id = -1;
    int platoon_size_joined = 0;
    bool platoon_is_target = false;
    bool requested = false;      // request message emitted
    bool granted = false;        // removed from the pending queue

    double rear() const { return pos - length; }
};

struct TripRecord {
    int id = 0;
    MovementId movement = 0;
    double entry_time = 0.0;
    double exit_time = 0.0;
    double travel_time = 0.0;
    double wait_time = 0.0;
    double fuel_ml = 0.0;
    int platoon_size_joined = 0;   // 0 = never platooned
    bool platoon_was_target = false;
    bool was_leader = false;
};

}  // namespace aic
