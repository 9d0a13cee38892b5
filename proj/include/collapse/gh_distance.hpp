#pragma once

#include "collapse/finite_metric_space.hpp"
#include "collapse/parallel.hpp"

namespace collapse {

/// Exact enumeration is gated at 6 points per side; beyond that use gh_lower_bound.
inline constexpr std::size_t kGhExactMaxPoints = 6;

/// Exact Gromov-Hausdorff distance: half the minimal distortion over all
/// correspondences with full projections. Searches pairs (map X->Y, map Y->X)
/// composed as relations -- every optimal correspondence contains such a pair with
/// no larger distortion -- with branch-and-bound on the running distortion and
/// dedup of revisited relation bitmasks. Exec::parallel forks the first assignment
/// level across threads with a shared atomic incumbent; the result is the minimum
/// either way. Throws DomainError when a side exceeds kGhExactMaxPoints.
double gh_distance_exact(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                         Exec exec = Exec::parallel);

/// Cheap lower bound valid for any sizes:
/// max( |diam X - diam Y| / 2, Hausdorff distance between the sorted distance
/// spectra / 2 ). Never exceeds gh_distance_exact.
double gh_lower_bound(const FiniteMetricSpace& x, const FiniteMetricSpace& y);

}  // namespace collapse
