#include "collapse/geometry.hpp"

namespace collapse {

double member_injectivity(const Member& m) {
    return std::visit([](const auto& x) { return x.injectivity_radius(); }, m);
}

double member_diameter(const Member& m) {
    return std::visit([](const auto& x) { return x.diameter(); }, m);
}

double member_total_volume(const Member& m) {
    return std::visit([](const auto& x) { return x.total_volume(); }, m);
}

double member_ball_volume(const Member& m, double r, VolumeMode mode, const McOptions& mc) {
    if (mode == VolumeMode::exact)
        return std::visit([r](const auto& x) { return x.ball_volume_exact(r); }, m);
    return std::visit(
        [&](const auto& x) { return mc_ball_volume(x, r, mc.samples, mc.seed, mc.exec).estimate; },
        m);
}

double criterion_ratio(const Member& m, double r, VolumeMode mode, const McOptions& mc) {
    if (r == 0.0) return 0.0;
    return member_ball_volume(m, r, mode, mc) / member_injectivity(m);
}

}  // namespace collapse
