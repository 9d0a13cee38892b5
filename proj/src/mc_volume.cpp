#include "collapse/mc_volume.hpp"

#include <cmath>
#include <vector>

#include "collapse/counter_rng.hpp"
#include "collapse/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace collapse {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_samples(std::uint64_t samples) {
    if (samples < 1000) throw InvalidInput("Monte Carlo needs samples >= 1000");
}

McVolume finish(double total_volume, std::uint64_t hits, std::uint64_t samples) {
    const double p = static_cast<double>(hits) / static_cast<double>(samples);
    const double se = total_volume * std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
    return {total_volume * p, se, hits, samples};
}

// The two kernels below are the project's hot loops. Hit tests are branch-light
// inner-product comparisons; all transcendentals are hoisted out of the loop.

std::uint64_t torus_hits_serial(const FlatTorus& t, const std::vector<double>& c, double r2,
                                const CounterRng& rng, std::uint64_t samples) {
    const std::size_t n = t.dimension();
    std::uint64_t hits = 0;
    for (std::uint64_t i = 0; i < samples; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            const double len = t.circumference(j);
            double d = std::fabs(len * rng.uniform(i, j) - c[j]);
            if (d > 0.5 * len) d = len - d;
            s += d * d;
        }
        hits += (s < r2) ? 1 : 0;
    }
    return hits;
}

std::uint64_t torus_hits_parallel(const FlatTorus& t, const std::vector<double>& c, double r2,
                                  const CounterRng& rng, std::uint64_t samples) {
    const std::size_t n = t.dimension();
    std::uint64_t hits = 0;
#pragma omp parallel for schedule(static) reduction(+ : hits)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(samples); ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            const double len = t.circumference(j);
            double d = std::fabs(len * rng.uniform(static_cast<std::uint64_t>(i), j) - c[j]);
            if (d > 0.5 * len) d = len - d;
            s += d * d;
        }
        hits += (s < r2) ? 1 : 0;
    }
    return hits;
}

struct BergerHitTest {
    double q0, q1, q2, q3;    // center quaternion
    double cos_base;          // base condition: |<q,c>_C| > cos_base
    bool base_always;         // r > pi/2
    double cos_fiber;         // round condition: <q,c> > cos_fiber
    bool fiber_always;        // r/eps >= pi

    bool operator()(const double q[4]) const {
        const double re = q[0] * q0 + q[1] * q1 + q[2] * q2 + q[3] * q3;
        if (!fiber_always && !(re > cos_fiber)) return false;
        if (base_always) return true;
        const double im = q[1] * q0 - q[0] * q1 + q[3] * q2 - q[2] * q3;
        return re * re + im * im > cos_base * cos_base;
    }
};

void berger_draw(const CounterRng& rng, std::uint64_t i, double q[4]) {
    for (int pair = 0; pair < 2; ++pair) {
        const double u1 = rng.uniform_open(i, 2 * pair);
        const double u2 = rng.uniform(i, 2 * pair + 1);
        const double rad = std::sqrt(-2.0 * std::log(u1));
        q[2 * pair] = rad * std::cos(2.0 * kPi * u2);
        q[2 * pair + 1] = rad * std::sin(2.0 * kPi * u2);
    }
    const double n = std::sqrt(q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3]);
    for (int k = 0; k < 4; ++k) q[k] /= n;
}

std::uint64_t berger_hits_serial(const BergerHitTest& test, const CounterRng& rng,
                                 std::uint64_t samples) {
    std::uint64_t hits = 0;
    for (std::uint64_t i = 0; i < samples; ++i) {
        double q[4];
        berger_draw(rng, i, q);
        hits += test(q) ? 1 : 0;
    }
    return hits;
}

std::uint64_t berger_hits_parallel(const BergerHitTest& test, const CounterRng& rng,
                                   std::uint64_t samples) {
    std::uint64_t hits = 0;
#pragma omp parallel for schedule(static) reduction(+ : hits)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(samples); ++i) {
        double q[4];
        berger_draw(rng, static_cast<std::uint64_t>(i), q);
        hits += test(q) ? 1 : 0;
    }
    return hits;
}

}  // namespace

McVolume mc_ball_volume(const FlatTorus& torus, double r, std::uint64_t samples,
                        std::uint64_t seed, Exec exec, const std::optional<Point>& center) {
    check_samples(samples);
    if (r < 0.0) throw InvalidInput("ball radius must be nonnegative");
    if (r == 0.0) return {0.0, 0.0, 0, samples};

    std::vector<double> c(torus.dimension(), 0.0);
    if (center) {
        const Point wrapped = torus.wrap(*center);
        c.assign(wrapped.coords.begin(), wrapped.coords.end());
    }
    const CounterRng rng(seed);
    const double r2 = r * r;
    const std::uint64_t hits = (exec == Exec::serial)
                                   ? torus_hits_serial(torus, c, r2, rng, samples)
                                   : torus_hits_parallel(torus, c, r2, rng, samples);
    return finish(torus.total_volume(), hits, samples);
}

McVolume mc_ball_volume(const BergerSphere& sphere, double r, std::uint64_t samples,
                        std::uint64_t seed, Exec exec, const std::optional<Point>& center) {
    check_samples(samples);
    if (r < 0.0) throw InvalidInput("ball radius must be nonnegative");
    if (r == 0.0) return {0.0, 0.0, 0, samples};

    BergerHitTest test;
    test.q0 = 1.0, test.q1 = 0.0, test.q2 = 0.0, test.q3 = 0.0;
    if (center) {
        const Point& p = *center;
        const double d = sphere.distance(p, p);  // runs the unit-norm validation
        (void)d;
        test.q0 = p[0], test.q1 = p[1], test.q2 = p[2], test.q3 = p[3];
    }
    test.base_always = r > 0.5 * kPi;
    test.cos_base = test.base_always ? -1.0 : std::cos(r);
    const double fiber_reach = r / sphere.epsilon();
    test.fiber_always = fiber_reach >= kPi;
    test.cos_fiber = test.fiber_always ? -1.0 : std::cos(fiber_reach);

    const CounterRng rng(seed);
    const std::uint64_t hits = (exec == Exec::serial) ? berger_hits_serial(test, rng, samples)
                                                      : berger_hits_parallel(test, rng, samples);
    return finish(sphere.total_volume(), hits, samples);
}

}  // namespace collapse
