#include "collapse/epsilon_net.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include "collapse/counter_rng.hpp"
#include "collapse/errors.hpp"

namespace collapse {

namespace {

struct Best {
    double value;
    std::size_t index;
};

Best better(Best a, Best b) {
    if (b.value > a.value || (b.value == a.value && b.index < a.index)) return b;
    return a;
}

// Relaxes min-distances against a freshly added net point and returns the pool
// point now farthest from the net. The (value desc, index asc) tiebreak makes the
// selection independent of the thread partition.
template <typename DistFn>
Best relax_serial(const std::vector<double>& pool, std::size_t dim, std::vector<double>& min_dist,
                  const double* added, DistFn&& dist) {
    Best best{-1.0, std::numeric_limits<std::size_t>::max()};
    const std::size_t n = min_dist.size();
    for (std::size_t i = 0; i < n; ++i) {
        const double d = dist(added, pool.data() + i * dim);
        if (d < min_dist[i]) min_dist[i] = d;
        best = better(best, {min_dist[i], i});
    }
    return best;
}

template <typename DistFn>
Best relax_parallel(const std::vector<double>& pool, std::size_t dim, std::vector<double>& min_dist,
                    const double* added, DistFn&& dist) {
    Best best{-1.0, std::numeric_limits<std::size_t>::max()};
    const auto n = static_cast<std::int64_t>(min_dist.size());
#pragma omp parallel
    {
        Best local{-1.0, std::numeric_limits<std::size_t>::max()};
#pragma omp for schedule(static) nowait
        for (std::int64_t i = 0; i < n; ++i) {
            const double d = dist(added, pool.data() + i * dim);
            if (d < min_dist[i]) min_dist[i] = d;
            local = better(local, {min_dist[i], static_cast<std::size_t>(i)});
        }
#pragma omp critical
        best = better(best, local);
    }
    return best;
}

template <typename DistFn>
EpsilonNet run_fps(const std::vector<double>& pool, std::size_t dim, const EpsilonNetParams& params,
                   double member_diameter, DistFn&& dist) {
    const std::size_t n = pool.size() / dim;
    EpsilonNet net;
    auto point_at = [&](std::size_t i) {
        return Point(std::vector<double>(pool.begin() + i * dim, pool.begin() + (i + 1) * dim));
    };

    std::vector<double> min_dist(n, std::numeric_limits<double>::infinity());
    std::size_t next = 0;  // start from the pool's first point
    const double stop_radius = params.stop_fraction * params.eps;
    while (true) {
        net.points.push_back(point_at(next));
        const double* added = pool.data() + next * dim;
        const Best far = (params.exec == Exec::serial)
                             ? relax_serial(pool, dim, min_dist, added, dist)
                             : relax_parallel(pool, dim, min_dist, added, dist);
        net.covering_radius = far.value;
        if (member_diameter <= params.eps) {
            // One point covers the whole space at this scale.
            net.covered = true;
            return net;
        }
        if (far.value <= stop_radius) {
            net.covered = true;
            return net;
        }
        if (net.points.size() >= params.max_points) {
            net.covered = false;
            return net;
        }
        next = far.index;
    }
}

}  // namespace

EpsilonNet build_epsilon_net(const Member& member, const EpsilonNetParams& params) {
    if (!(params.eps > 0.0)) throw InvalidInput("net scale eps must be positive");
    if (params.max_points == 0 || params.pool_size == 0)
        throw InvalidInput("net needs max_points >= 1 and a nonempty pool");

    const CounterRng rng(params.seed);
    return std::visit(
        [&](const auto& m) {
            using M = std::decay_t<decltype(m)>;
            constexpr bool is_torus = std::is_same_v<M, FlatTorus>;
            const std::size_t dim = is_torus ? m.dimension() : 4;
            std::vector<double> pool(params.pool_size * dim);
            for (std::size_t i = 0; i < params.pool_size; ++i) {
                const Point p = m.sample(rng, i);
                std::copy(p.coords.begin(), p.coords.end(), pool.begin() + i * dim);
            }
            if constexpr (is_torus) {
                std::vector<double> circ(dim);
                for (std::size_t j = 0; j < dim; ++j) circ[j] = m.circumference(j);
                auto dist = [&circ, dim](const double* a, const double* b) {
                    double s = 0.0;
                    for (std::size_t j = 0; j < dim; ++j) {
                        double d = std::fabs(a[j] - b[j]);
                        if (d > 0.5 * circ[j]) d = circ[j] - d;
                        s += d * d;
                    }
                    return std::sqrt(s);
                };
                return run_fps(pool, dim, params, m.diameter(), dist);
            } else {
                const double eps_scale = m.epsilon();
                auto dist = [eps_scale](const double* a, const double* b) {
                    const double re = a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
                    const double im = a[1] * b[0] - a[0] * b[1] + a[3] * b[2] - a[2] * b[3];
                    const double base =
                        std::acos(std::clamp(std::sqrt(re * re + im * im), -1.0, 1.0));
                    const double round = std::acos(std::clamp(re, -1.0, 1.0));
                    return std::max(base, eps_scale * round);
                };
                return run_fps(pool, dim, params, m.diameter(), dist);
            }
        },
        member);
}

FiniteMetricSpace net_to_metric_space(const Member& member, const EpsilonNet& net) {
    const std::size_t n = net.points.size();
    if (n == 0) throw InvalidInput("empty net");
    if (n > 4096) throw InvalidInput("net too large to materialize as a dense metric space");
    std::vector<std::string> labels(n);
    std::vector<std::vector<double>> dist(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) labels[i] = "p" + std::to_string(i);
    std::visit(
        [&](const auto& m) {
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j) {
                    const double d = m.distance(net.points[i], net.points[j]);
                    dist[i][j] = d;
                    dist[j][i] = d;
                }
        },
        member);
    return FiniteMetricSpace(std::move(labels), std::move(dist));
}

}  // namespace collapse
