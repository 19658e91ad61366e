#pragma once

#include <array>
#include <deque>
#include <optional>
#include <vector>

#include "aic/fuel.hpp"
#include "aic/geometry.hpp"
#include "aic/rng.hpp"
#include "aic/vehicle.hpp"

namespace aic {

struct SimParams {
    double dt = 0.1;
    double v_max = 20.0;
    double a_max = 5.0;
    double vehicle_length = 5.0;
    double vehicle_width = 1.8;
    double headway_platoon = 1.0;  // d_h, intra-platoon target gap
    double headway_min = 1.5;      // minimum gap outside platoons
    double k_v = 1.0;              // platoon regulator speed gain, 1/s
    double k_g = 0.5;              // platoon regulator gap gain, 1/s^2
    double a_lat_max = 2.5;        // lateral comfort bound -> turn speed cap
    double wait_speed_threshold = 0.1;
    double exit_run = 50.0;        // retire distance past the zone exit
};

struct FlowSpec {
    std::array<double, kNumMovements> veh_per_hour{};
};

struct SimClock {
    long step = 0;
    double dt = 0.1;
    double horizon = 3600.0;
    double now() const { return step * dt; }
};

struct ScheduledArrival {
    double time = 0.0;
    MovementId movement = 0;
};

// v such that braking at a_max behind a leader doing v_leader never closes
// the gap below min_headway.
double safe_speed(double gap, double v_leader, double a_max, double min_headway);

// Deterministic fixed-step vehicle dynamics on the 12 movement routes.
class World {
public:
    World(const IntersectionLayout& layout, const SimParams& params, const FuelModel& fuel,
          const FlowSpec& flows, uint64_t seed);

    // Poisson arrivals due this step; returns ids of vehicles actually placed.
    std::vector<int> spawn_step();
    // Integrates one dt for every vehicle and retires finished trips.
    void dynamics_step();
    // Violating pairs: same-lane overlap or conflicting-trajectory proximity in the zone.
    std::vector<std::pair<int, int>> detect_collisions() const;

    double turn_speed_cap(MovementId m) const;
    double desired_crossing_speed(MovementId m) const;

    void release_vehicle(int id, double desired_speed);
    void assign_platoon(int id, int platoon_id, int size, PlatoonRole role, bool is_target);

    const SimClock& clock() const { return clock_; }
    double now() const { return clock_.now(); }
    double dt() const { return params_.dt; }
    const SimParams& params() const { return params_; }
    const IntersectionLayout& layout() const { return *layout_; }

    Vehicle& vehicle(int id) { return vehicles_[id]; }
    const Vehicle& vehicle(int id) const { return vehicles_[id]; }
    bool active(int id) const { return vehicles_[id].id >= 0; }
    const std::vector<int>& lane_vehicles(MovementId m) const { return lane_order_[m]; }
    std::vector<int> active_vehicles() const;

    const std::vector<TripRecord>& trips() const { return trips_; }
    const std::vector<ScheduledArrival>& arrival_log() const { return arrival_log_; }
    int spawned_count() const { return spawned_; }
    int active_count() const { return active_; }
    int max_spawn_backlog() const { return max_backlog_; }
    int spawn_backlog() const;

    // Test hook: place a vehicle directly (bypasses the arrival process).
    int inject_vehicle(MovementId m, double pos, double speed);

private:
    void integrate_vehicle(Vehicle& v, const std::optional<Vehicle>& leader_before, double len);
    void retire_finished();

    const IntersectionLayout* layout_;
    SimParams params_;
    FuelModel fuel_;
    FlowSpec flows_;
    SimClock clock_;

    std::vector<Vehicle> vehicles_;  // indexed by id; retired slots have id = -1
    std::array<std::vector<int>, kNumMovements> lane_order_;  // front -> back
    std::array<std::mt19937_64, kNumMovements> arrival_rng_;
    std::array<double, kNumMovements> next_arrival_;
    std::array<std::deque<double>, kNumMovements> backlog_;  // scheduled times awaiting space
    std::vector<TripRecord> trips_;
    std::vector<ScheduledArrival> arrival_log_;
    int spawned_ = 0;
    int active_ = 0;
    int max_backlog_ = 0;
};

}  // namespace aic
