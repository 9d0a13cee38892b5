#pragma once

#include <vector>

#include "collapse/counter_rng.hpp"
#include "collapse/point.hpp"

namespace collapse {

/// Flat n-torus given as a product of circles S^1(r_1) x ... x S^1(r_n).
/// Immutable after construction; all member functions are pure.
///
/// The metric is the product metric: per factor, the wrap distance
/// min(|dx|, circumference - |dx|), combined in quadrature. Injectivity radius
/// is pi * min(radii) (half the shortest closed geodesic), total volume is the
/// product of circumferences.
class FlatTorus {
public:
    /// Throws InvalidInput unless every radius is strictly positive and finite.
    explicit FlatTorus(std::vector<double> radii);

    std::size_t dimension() const { return radii_.size(); }
    const std::vector<double>& radii() const { return radii_; }
    double circumference(std::size_t j) const { return circumferences_[j]; }

    double injectivity_radius() const;
    double total_volume() const;
    double diameter() const;

    /// Geodesic distance. Throws InvalidInput on a coordinate-count mismatch.
    double distance(const Point& x, const Point& y) const;

    /// Exact volume of a metric ball of radius r (any center, by homogeneity).
    /// Closed form exists for n <= 2: in 2D the ball is the intersection of a
    /// Euclidean disk with the centered fundamental rectangle, integrated piecewise
    /// with circular segments. Throws DomainError for n >= 3 (use the Monte Carlo
    /// backend there). r = 0 returns 0; r >= diameter returns the total volume
    /// exactly.
    double ball_volume_exact(double r) const;

    /// Uniform sample from the fundamental domain; counter/lane addressing makes
    /// the draw a pure function of (rng.seed, counter).
    Point sample(const CounterRng& rng, std::uint64_t counter) const;

    /// Canonical representative with every coordinate folded into [0, L_j).
    Point wrap(const Point& x) const;

private:
    std::vector<double> radii_;
    std::vector<double> circumferences_;
};

}  // namespace collapse
