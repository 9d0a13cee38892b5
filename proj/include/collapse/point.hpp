#pragma once

#include <initializer_list>
#include <vector>

namespace collapse {

/// A point in a model manifold's chart. Flat tori use one arc-length coordinate
/// per circle factor (values in [0, circumference_j)); the fibered 3-sphere uses
/// a unit quaternion as 4 reals.
struct Point {
    std::vector<double> coords;

    Point() = default;
    Point(std::initializer_list<double> c) : coords(c) {}
    explicit Point(std::vector<double> c) : coords(std::move(c)) {}

    std::size_t size() const { return coords.size(); }
    double operator[](std::size_t i) const { return coords[i]; }
    double& operator[](std::size_t i) { return coords[i]; }
};

}  // namespace collapse
