#pragma once

#include "collapse/counter_rng.hpp"
#include "collapse/point.hpp"

namespace collapse {

struct BergerGeometry {
    double injectivity_radius;
    double volume;
    double sec_lo;
    double sec_hi;
    double fiber_diameter;
};

/// Total space of the circle fibration over the half-radius 2-sphere, with the
/// fiber directions rescaled by epsilon in (0, 1]. Points are unit quaternions.
///
/// Closed forms: inj = pi*eps, volume = 2*pi^2*eps, sectional curvature in
/// [eps^2, 4 - 3*eps^2], fiber diameter pi*eps.
///
/// Point distance is the collapse-adapted comparison metric
///     d(x, y) = max( d_base(h(x), h(y)), eps * d_round(x, y) ),
/// where h is the fibration projection onto the half-radius sphere and d_round is
/// the round unit-sphere distance. Both arguments bound the Riemannian distance
/// from below and the max is within pi*eps of it, so at scales above the fiber
/// size it is interchangeable with the true metric. It satisfies the metric
/// axioms exactly, and at eps = 1 it reduces to the round metric exactly.
///
/// Ball volumes are for the fiber tube { y : d_base < r }, the set the comparison
/// metric's ball equals whenever r >= fiber diameter. Closed form:
/// 2*pi^2*eps*sin(r)^2 for r < pi/2, total volume beyond.
class BergerSphere {
public:
    /// Throws DomainError unless epsilon is in (0, 1].
    explicit BergerSphere(double epsilon);

    double epsilon() const { return epsilon_; }
    BergerGeometry geometry() const;

    double injectivity_radius() const;
    double total_volume() const;
    double fiber_diameter() const;
    /// Diameter of the comparison metric: max(pi/2, pi*eps). Exact at eps = 1,
    /// within pi*eps of the Riemannian diameter below.
    double diameter() const;

    /// Comparison-metric distance between unit quaternions. Throws InvalidInput
    /// if a point is not a 4-vector of unit norm (tolerance 1e-12).
    double distance(const Point& x, const Point& y) const;

    /// Tube ball volume, r = 0 giving 0 and r >= pi/2 giving the total volume.
    double ball_volume_exact(double r) const;

    /// Uniform sample (round measure; the fibered volume form is a constant
    /// multiple, so the normalized measures coincide).
    Point sample(const CounterRng& rng, std::uint64_t counter) const;

    /// Projection to the base: distance between fibers, in [0, pi/2].
    static double base_distance(const Point& x, const Point& y);
    /// Round unit 3-sphere distance, in [0, pi].
    static double round_distance(const Point& x, const Point& y);

private:
    double epsilon_;
};

}  // namespace collapse
