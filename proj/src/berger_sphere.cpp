#include "collapse/berger_sphere.hpp"

#include <algorithm>
#include <cmath>

#include "collapse/errors.hpp"

namespace collapse {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_unit_quaternion(const Point& p) {
    if (p.size() != 4) throw InvalidInput("fibered 3-sphere point must have 4 coordinates");
    const double n2 = p[0] * p[0] + p[1] * p[1] + p[2] * p[2] + p[3] * p[3];
    if (std::fabs(n2 - 1.0) > 1e-12)
        throw InvalidInput("fibered 3-sphere point must be a unit quaternion (|q| - 1 within 1e-12)");
}

double clamped_acos(double c) { return std::acos(std::clamp(c, -1.0, 1.0)); }

}  // namespace

BergerSphere::BergerSphere(double epsilon) : epsilon_(epsilon) {
    if (!(epsilon > 0.0) || !(epsilon <= 1.0))
        throw DomainError("fiber scale must satisfy 0 < epsilon <= 1");
}

BergerGeometry BergerSphere::geometry() const {
    return {kPi * epsilon_, 2.0 * kPi * kPi * epsilon_, epsilon_ * epsilon_,
            4.0 - 3.0 * epsilon_ * epsilon_, kPi * epsilon_};
}

double BergerSphere::injectivity_radius() const { return kPi * epsilon_; }

double BergerSphere::total_volume() const { return 2.0 * kPi * kPi * epsilon_; }

double BergerSphere::fiber_diameter() const { return kPi * epsilon_; }

double BergerSphere::diameter() const { return std::max(0.5 * kPi, kPi * epsilon_); }

double BergerSphere::base_distance(const Point& x, const Point& y) {
    // Viewing q = (q0 + q1 i) + (q2 + q3 i) j as a point of C^2, fibers are the
    // orbits of left multiplication by e^{i t}; the distance between fibers is
    // arccos |<x, y>_C|.
    const double re = x[0] * y[0] + x[1] * y[1] + x[2] * y[2] + x[3] * y[3];
    const double im = x[1] * y[0] - x[0] * y[1] + x[3] * y[2] - x[2] * y[3];
    return clamped_acos(std::sqrt(re * re + im * im));
}

double BergerSphere::round_distance(const Point& x, const Point& y) {
    return clamped_acos(x[0] * y[0] + x[1] * y[1] + x[2] * y[2] + x[3] * y[3]);
}

double BergerSphere::distance(const Point& x, const Point& y) const {
    check_unit_quaternion(x);
    check_unit_quaternion(y);
    return std::max(base_distance(x, y), epsilon_ * round_distance(x, y));
}

double BergerSphere::ball_volume_exact(double r) const {
    if (r < 0.0) throw InvalidInput("ball radius must be nonnegative");
    if (r == 0.0) return 0.0;
    if (r >= 0.5 * kPi) return total_volume();
    const double s = std::sin(r);
    return total_volume() * s * s;
}

Point BergerSphere::sample(const CounterRng& rng, std::uint64_t counter) const {
    // Marsaglia-free route: four Gaussians via two Box-Muller pairs, normalized.
    Point q;
    q.coords.resize(4);
    for (int pair = 0; pair < 2; ++pair) {
        const double u1 = rng.uniform_open(counter, 2 * pair);
        const double u2 = rng.uniform(counter, 2 * pair + 1);
        const double rad = std::sqrt(-2.0 * std::log(u1));
        q[2 * pair] = rad * std::cos(2.0 * kPi * u2);
        q[2 * pair + 1] = rad * std::sin(2.0 * kPi * u2);
    }
    const double n = std::sqrt(q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3]);
    for (int i = 0; i < 4; ++i) q[i] /= n;
    return q;
}

}  // namespace collapse
