#pragma once

#include <cstdint>
#include <vector>

#include "collapse/finite_metric_space.hpp"
#include "collapse/geometry.hpp"
#include "collapse/parallel.hpp"
#include "collapse/point.hpp"

namespace collapse {

struct EpsilonNetParams {
    double eps;
    std::uint64_t seed = 0;
    std::size_t max_points = 20000;
    // Coverage is measured against a uniform candidate pool; the construction
    // stops at stop_fraction * eps so the pool's own fill distance does not eat
    // the budget.
    std::size_t pool_size = 200000;
    double stop_fraction = 0.9;
    Exec exec = Exec::parallel;
};

struct EpsilonNet {
    std::vector<Point> points;
    /// Pool-measured covering radius at the moment construction stopped.
    double covering_radius = 0.0;
    /// False when max_points ran out first; the net is still valid, just coarser.
    bool covered = false;
};

/// Greedy farthest-point sampling over a seeded uniform candidate pool, starting
/// from the pool's first point, until the pool is covered at stop_fraction * eps
/// or max_points is reached. Deterministic for fixed (params, member) regardless
/// of thread count.
EpsilonNet build_epsilon_net(const Member& member, const EpsilonNetParams& params);

/// Materializes net points as a labeled metric space ("p0", "p1", ...) using the
/// member's distance. Refuses nets above 4096 points (the matrix is dense).
FiniteMetricSpace net_to_metric_space(const Member& member, const EpsilonNet& net);

}  // namespace collapse
