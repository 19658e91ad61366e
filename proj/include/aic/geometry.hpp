#pragma once

#include <array>
#include <vector>

#include "aic/types.hpp"

namespace aic {

struct GeometryParams {
    double intersection_side = 15.0;    // S
    double control_zone_radius = 200.0; // L
    double lane_width = 2.5;            // l_lane
    double vehicle_width = 1.8;         // w_c, conflict threshold
    double sample_resolution = 0.25;    // trajectory sampling step, m
};

// A movement's crossing path: straight segment or quarter arc, sampled as a
// polyline at <= sample_resolution spacing. Arc-length parameterized; s=0 at
// the stop line, s=total_length at the exit boundary.
struct Trajectory {
    MovementId movement = 0;
    std::vector<Vec2> polyline;
    double total_length = 0.0;
    double curvature_radius = 0.0;  // infinity() for straight
    Vec2 entry_point;               // stop-line centerline point
    Vec2 exit_point;                // exit boundary centerline point
    Vec2 entry_dir;                 // unit heading into the zone
    Vec2 exit_dir;                  // unit heading out of the zone
    Vec2 arc_center;                // valid iff curved
    double arc_start_angle = 0.0;
    double arc_sign = 0.0;          // +1 left (ccw), -1 right (cw), 0 straight

    bool curved() const { return arc_sign != 0.0; }
    // Position on the full route: s<0 upstream on the entry lane, s in
    // [0,total_length] on the crossing path, s beyond along the exit lane.
    Vec2 point_at(double s) const;
};

struct ConflictMatrix {
    std::array<std::array<bool, kNumMovements>, kNumMovements> conflict{};
    std::array<uint16_t, kNumMovements> neighbor_mask{};  // bit j set iff conflicts with j

    bool operator()(MovementId a, MovementId b) const { return conflict[a][b]; }
};

struct IntersectionLayout {
    GeometryParams params;
    double approach_length = 0.0;  // L - S/2, upstream run inside the control zone
    std::array<Trajectory, kNumMovements> trajectories;
    ConflictMatrix conflicts;

    double turn_radius(MovementId m) const { return trajectories[m].curvature_radius; }
    double crossing_length(MovementId m) const { return trajectories[m].total_length; }
};

// Validates the lane tiling constraint (3 * lane_width == S/2) and builds
// lanes, trajectories and the derived conflict relation.
IntersectionLayout build_layout(const GeometryParams& params);

Trajectory trajectory_for(MovementId m, const GeometryParams& params);

// True iff the sampled trajectories pass within vehicle_width of each other.
bool conflicts(const Trajectory& a, const Trajectory& b, double vehicle_width);

ConflictMatrix build_conflict_matrix(const std::array<Trajectory, kNumMovements>& trajs,
                                     double vehicle_width);

// All maximal pairwise-nonconflicting movement sets containing `target`,
// each sorted by movement id, the list ordered lexicographically.
std::vector<std::vector<MovementId>> compatible_sets(MovementId target, const ConflictMatrix& cm);

std::string conflict_matrix_csv(const ConflictMatrix& cm);

}  // namespace aic
