#pragma once

#include <cstdint>
#include <optional>

#include "collapse/berger_sphere.hpp"
#include "collapse/flat_torus.hpp"
#include "collapse/parallel.hpp"
#include "collapse/point.hpp"

namespace collapse {

struct McVolume {
    double estimate;   // total_volume * hit fraction
    double std_error;  // binomial standard error scaled by total volume
    std::uint64_t hits;
    std::uint64_t samples;
};

/// Rejection-sampling ball volume over the fundamental domain. The variate for
/// sample i is a pure function of (seed, i), so the hit count -- an integer sum --
/// is bit-identical for any shard/thread layout; Exec::serial and Exec::parallel
/// agree bit for bit. samples >= 1000 required; r = 0 returns {0, 0}.
McVolume mc_ball_volume(const FlatTorus& torus, double r, std::uint64_t samples,
                        std::uint64_t seed, Exec exec = Exec::parallel,
                        const std::optional<Point>& center = std::nullopt);

/// Same estimator on the fibered 3-sphere with its comparison metric.
McVolume mc_ball_volume(const BergerSphere& sphere, double r, std::uint64_t samples,
                        std::uint64_t seed, Exec exec = Exec::parallel,
                        const std::optional<Point>& center = std::nullopt);

}  // namespace collapse
