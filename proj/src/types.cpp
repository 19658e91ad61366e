#include "aic/types.hpp"

#include <cmath>

namespace aic {

double Vec2::norm() const { return std::sqrt(x * x + y * y); }

double distance(Vec2 a, Vec2 b) { return (a - b).norm(); }

Approach destination_of(MovementId m) {
    int a = static_cast<int>(approach_of(m));
    switch (turn_of(m)) {
        case Turn::Left: return static_cast<Approach>((a + 1) % 4);
        case Turn::Straight: return static_cast<Approach>((a + 2) % 4);
        case Turn::Right: return static_cast<Approach>((a + 3) % 4);
    }
    throw std::logic_error("bad turn");
}

std::string approach_name(Approach a) {
    switch (a) {
        case Approach::North: return "north";
        case Approach::East: return "east";
        case Approach::South: return "south";
        case Approach::West: return "west";
    }
    throw std::logic_error("bad approach");
}

std::string movement_name(MovementId m) {
    return approach_name(approach_of(m)) + "_" + approach_name(destination_of(m));
}

std::string movement_label(MovementId m) {
    auto letter = [](Approach a) {
        switch (a) {
            case Approach::North: return "N";
            case Approach::East: return "E";
            case Approach::South: return "S";
            case Approach::West: return "W";
        }
        return "?";
    };
    return std::string(letter(approach_of(m))) + "-" + letter(destination_of(m));
}

MovementId movement_from_name(const std::string& name) {
    for (MovementId m = 0; m < kNumMovements; ++m) {
        if (movement_name(m) == name || movement_label(m) == name) return m;
    }
    throw ConfigError("unknown movement name: " + name);
}

}  // namespace aic
