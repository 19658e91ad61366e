#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace aic {

// Canonical ordering: approaches N,E,S,W; turns left,straight,right.
// MovementId = approach*3 + turn. This ordering fixes FCFS tie-breaks and
// every deterministic enumeration downstream.
enum class Approach : int { North = 0, East = 1, South = 2, West = 3 };
enum class Turn : int { Left = 0, Straight = 1, Right = 2 };

using MovementId = int;
constexpr int kNumApproaches = 4;
constexpr int kLanesPerApproach = 3;
constexpr int kNumMovements = kNumApproaches * kLanesPerApproach;

constexpr MovementId movement_id(Approach a, Turn t) {
    return static_cast<int>(a) * kLanesPerApproach + static_cast<int>(t);
}
constexpr Approach approach_of(MovementId m) { return static_cast<Approach>(m / kLanesPerApproach); }
constexpr Turn turn_of(MovementId m) { return static_cast<Turn>(m % kLanesPerApproach); }

Approach destination_of(MovementId m);
std::string approach_name(Approach a);
std::string movement_name(MovementId m);      // e.g. "north_east"
std::string movement_label(MovementId m);     // e.g. "N-E"
MovementId movement_from_name(const std::string& name);

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};
struct ProtocolError : std::runtime_error {
    explicit ProtocolError(const std::string& what) : std::runtime_error(what) {}
};
struct SchedulerFault : std::runtime_error {
    explicit SchedulerFault(const std::string& what) : std::runtime_error(what) {}
};
struct SimulationFault : std::runtime_error {
    explicit SimulationFault(const std::string& what) : std::runtime_error(what) {}
};
struct TrainingFault : std::runtime_error {
    explicit TrainingFault(const std::string& what) : std::runtime_error(what) {}
};

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    double dot(Vec2 o) const { return x * o.x + y * o.y; }
    double norm() const;
};

double distance(Vec2 a, Vec2 b);

}  // namespace aic
