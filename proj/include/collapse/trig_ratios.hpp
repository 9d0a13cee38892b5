#pragma once

#include <cmath>

namespace collapse {

// sin(x)/x and sinh(x)/x, continuous at 0. Below |x| = 1e-4 the direct quotient
// loses digits to cancellation, so a 3-term series takes over there; the x^6 term
// is < 1e-28 at the switch point.

inline double sin_over_x(double x) {
    const double ax = std::fabs(x);
    if (ax < 1e-4) {
        const double x2 = x * x;
        return 1.0 - x2 / 6.0 + (x2 * x2) / 120.0;
    }
    return std::sin(x) / x;
}

inline double sinh_over_x(double x) {
    const double ax = std::fabs(x);
    if (ax < 1e-4) {
        const double x2 = x * x;
        return 1.0 + x2 / 6.0 + (x2 * x2) / 120.0;
    }
    return std::sinh(x) / x;
}

}  // namespace collapse
