#include "aic/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace aic {

namespace {

Vec2 rotate_cw(Vec2 v) { return {v.y, -v.x}; }
Vec2 rotate_ccw(Vec2 v) { return {-v.y, v.x}; }

Vec2 inbound_heading(Approach a) {
    switch (a) {
        case Approach::North: return {0.0, -1.0};
        case Approach::East: return {-1.0, 0.0};
        case Approach::South: return {0.0, 1.0};
        case Approach::West: return {1.0, 0.0};
    }
    throw std::logic_error("bad approach");
}

double lane_offset(int lane_index, double lane_width) {
    return (lane_index + 0.5) * lane_width;
}

}  // namespace

Vec2 Trajectory::point_at(double s) const {
    if (s <= 0.0) return entry_point + entry_dir * s;
    if (s >= total_length) return exit_point + exit_dir * (s - total_length);
    if (!curved()) return entry_point + entry_dir * s;
    double angle = arc_start_angle + arc_sign * (s / curvature_radius);
    return {arc_center.x + curvature_radius * std::cos(angle),
            arc_center.y + curvature_radius * std::sin(angle)};
}

Trajectory trajectory_for(MovementId m, const GeometryParams& p) {
    const double half = p.intersection_side / 2.0;
    const Approach origin = approach_of(m);
    const Approach dest = destination_of(m);
    const int lane_index = static_cast<int>(turn_of(m));

    const Vec2 h = inbound_heading(origin);
    const Vec2 r_in = rotate_cw(h);
    const Vec2 o = inbound_heading(dest) * -1.0;  // outbound heading of destination leg
    const Vec2 r_out = rotate_cw(o);

    Trajectory t;
    t.movement = m;
    t.entry_dir = h;
    t.exit_dir = o;
    t.entry_point = h * -half + r_in * lane_offset(lane_index, p.lane_width);
    t.exit_point = o * half + r_out * lane_offset(lane_index, p.lane_width);

    if (turn_of(m) == Turn::Straight) {
        t.curvature_radius = std::numeric_limits<double>::infinity();
        t.arc_sign = 0.0;
        t.total_length = p.intersection_side;
    } else {
        // Quarter arc tangent to both lane centerlines. Radius is the
        // perpendicular distance from the entry point to the exit axis.
        Vec2 d = t.entry_point - t.exit_point;
        Vec2 perp = d - o * d.dot(o);
        t.curvature_radius = perp.norm();
        t.arc_sign = (turn_of(m) == Turn::Left) ? 1.0 : -1.0;
        Vec2 normal = (turn_of(m) == Turn::Left) ? rotate_ccw(h) : rotate_cw(h);
        t.arc_center = t.entry_point + normal * t.curvature_radius;
        Vec2 from_center = t.entry_point - t.arc_center;
        t.arc_start_angle = std::atan2(from_center.y, from_center.x);
        t.total_length = (M_PI / 2.0) * t.curvature_radius;
    }

    int n = static_cast<int>(std::ceil(t.total_length / p.sample_resolution));
    n = std::max(n, 1);
    t.polyline.reserve(n + 1);
    for (int i = 0; i <= n; ++i) {
        double s = t.total_length * static_cast<double>(i) / n;
        t.polyline.push_back(t.point_at(s));
    }
    return t;
}

bool conflicts(const Trajectory& a, const Trajectory& b, double vehicle_width) {
    const double thr2 = vehicle_width * vehicle_width;
    for (const Vec2& pa : a.polyline) {
        for (const Vec2& pb : b.polyline) {
            double dx = pa.x - pb.x;
            double dy = pa.y - pb.y;
            if (dx * dx + dy * dy < thr2) return true;
        }
    }
    return false;
}

ConflictMatrix build_conflict_matrix(const std::array<Trajectory, kNumMovements>& trajs,
                                     double vehicle_width) {
    ConflictMatrix cm;
    for (MovementId i = 0; i < kNumMovements; ++i) {
        for (MovementId j = i + 1; j < kNumMovements; ++j) {
            bool c = conflicts(trajs[i], trajs[j], vehicle_width);
            cm.conflict[i][j] = c;
            cm.conflict[j][i] = c;
        }
    }
    for (MovementId i = 0; i < kNumMovements; ++i) {
        uint16_t mask = 0;
        for (MovementId j = 0; j < kNumMovements; ++j) {
            if (cm.conflict[i][j]) mask |= static_cast<uint16_t>(1u << j);
        }
        cm.neighbor_mask[i] = mask;
    }
    return cm;
}

IntersectionLayout build_layout(const GeometryParams& p) {
    if (p.intersection_side <= 0.0 || p.control_zone_radius <= 0.0 || p.lane_width <= 0.0) {
        throw ConfigError("geometry lengths must be positive");
    }
    if (p.control_zone_radius <= p.intersection_side / 2.0) {
        throw ConfigError("control zone radius must exceed half the intersection side");
    }
    if (p.lane_width <= p.vehicle_width) {
        throw ConfigError("lane width must exceed vehicle width");
    }
    const double tiled = kLanesPerApproach * p.lane_width;
    const double half = p.intersection_side / 2.0;
    if (std::abs(tiled - half) > 1e-9) {
        std::ostringstream os;
        os << "lane tiling violated: " << kLanesPerApproach << " * lane_width = " << tiled
           << " but intersection_side/2 = " << half;
        throw ConfigError(os.str());
    }

    IntersectionLayout layout;
    layout.params = p;
    layout.approach_length = p.control_zone_radius - half;
    for (MovementId m = 0; m < kNumMovements; ++m) {
        layout.trajectories[m] = trajectory_for(m, p);
    }
    layout.conflicts = build_conflict_matrix(layout.trajectories, p.vehicle_width);
    return layout;
}

std::vector<std::vector<MovementId>> compatible_sets(MovementId target, const ConflictMatrix& cm) {
    // 12 movements: exhaustive subset scan is cheap and trivially correct.
    std::vector<uint16_t> cliques;
    const uint16_t all = (1u << kNumMovements) - 1;
    for (uint32_t set = 0; set <= all; ++set) {
        if (!(set & (1u << target))) continue;
        bool ok = true;
        for (MovementId m = 0; m < kNumMovements && ok; ++m) {
            if ((set & (1u << m)) && (set & cm.neighbor_mask[m])) ok = false;
        }
        if (!ok) continue;
        bool maximal = true;
        for (MovementId m = 0; m < kNumMovements && maximal; ++m) {
            if ((set & (1u << m)) || (cm.neighbor_mask[m] & set)) continue;
            maximal = false;
        }
        if (maximal) cliques.push_back(static_cast<uint16_t>(set));
    }
    std::vector<std::vector<MovementId>> out;
    out.reserve(cliques.size());
    for (uint16_t set : cliques) {
        std::vector<MovementId> members;
        for (MovementId m = 0; m < kNumMovements; ++m) {
            if (set & (1u << m)) members.push_back(m);
        }
        out.push_back(std::move(members));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string conflict_matrix_csv(const ConflictMatrix& cm) {
    std::ostringstream os;
    os << "movement";
    for (MovementId m = 0; m < kNumMovements; ++m) os << "," << movement_label(m);
    os << "\n";
    for (MovementId i = 0; i < kNumMovements; ++i) {
        os << movement_label(i);
        for (MovementId j = 0; j < kNumMovements; ++j) os << "," << (cm.conflict[i][j] ? 1 : 0);
        os << "\n";
    }
    return os.str();
}

}  // namespace aic
