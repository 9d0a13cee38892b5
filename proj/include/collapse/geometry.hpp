#pragma once

#include <cstdint>
#include <variant>

#include "collapse/berger_sphere.hpp"
#include "collapse/flat_torus.hpp"
#include "collapse/mc_volume.hpp"

namespace collapse {

/// A member of one of the model families.
using Member = std::variant<FlatTorus, BergerSphere>;

enum class VolumeMode { exact, monte_carlo };

struct McOptions {
    std::uint64_t samples = 1'000'000;
    std::uint64_t seed = 0;
    Exec exec = Exec::parallel;
};

double member_injectivity(const Member& m);
double member_diameter(const Member& m);
double member_total_volume(const Member& m);

/// Ball volume through the selected backend. Exact mode uses the closed forms
/// (tori up to dimension 2, tube volume on the fibered sphere); Monte Carlo mode
/// uses seeded rejection sampling.
double member_ball_volume(const Member& m, double r, VolumeMode mode, const McOptions& mc = {});

/// The collapse diagnostic vol(B_r(x)) / inj(x). Point-independent on these
/// homogeneous families; r = 0 returns 0.
double criterion_ratio(const Member& m, double r, VolumeMode mode, const McOptions& mc = {});

}  // namespace collapse
