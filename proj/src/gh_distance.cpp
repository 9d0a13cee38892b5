#include "collapse/gh_distance.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <limits>
#include <unordered_set>
#include <vector>

#include "collapse/errors.hpp"

namespace collapse {

namespace {

// Slot layout for the search: slots [0, m) assign a partner in Y to each point of
// X, slots [m, m+n) assign a partner in X to each point of Y. A full assignment is
// therefore a correspondence with full projections, and its pair set is the
// relation bitmask (bit xi * n + yj).
struct Instance {
    const FiniteMetricSpace* x;
    const FiniteMetricSpace* y;
    std::size_t m, n;

    std::pair<std::size_t, std::size_t> pair_for(std::size_t slot, std::size_t choice) const {
        if (slot < m) return {slot, choice};
        return {choice, slot - m};
    }
    std::size_t choices(std::size_t slot) const { return slot < m ? n : m; }
};

struct SearchState {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::unordered_set<std::uint64_t> visited;
    static constexpr std::size_t kVisitedCap = 1u << 21;
};

void atomic_min(std::atomic<double>& target, double value) {
    double cur = target.load(std::memory_order_relaxed);
    while (value < cur &&
           !target.compare_exchange_weak(cur, value, std::memory_order_relaxed)) {
    }
}

void search(const Instance& in, SearchState& st, std::size_t slot, std::uint64_t mask,
            double running, std::atomic<double>& incumbent) {
    if (slot == in.m + in.n) {
        atomic_min(incumbent, running);
        return;
    }
    for (std::size_t c = 0; c < in.choices(slot); ++c) {
        const auto [xi, yj] = in.pair_for(slot, c);
        const std::uint64_t bit = 1ULL << (xi * in.n + yj);
        double next = running;
        if (!(mask & bit)) {
            for (const auto& [xk, yl] : st.pairs) {
                const double gap =
                    std::fabs(in.x->distance(xi, xk) - in.y->distance(yj, yl));
                if (gap > next) next = gap;
            }
        }
        if (next >= incumbent.load(std::memory_order_relaxed)) continue;

        const std::uint64_t next_mask = mask | bit;
        const std::uint64_t key = next_mask | (static_cast<std::uint64_t>(slot + 1) << 40);
        if (st.visited.size() < SearchState::kVisitedCap && !st.visited.insert(key).second)
            continue;  // same relation already explored at this depth

        const bool fresh = !(mask & bit);
        if (fresh) st.pairs.emplace_back(xi, yj);
        search(in, st, slot + 1, next_mask, next, incumbent);
        if (fresh) st.pairs.pop_back();
    }
}

double relation_distortion(const Instance& in,
                           const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
    double dis = 0.0;
    for (std::size_t a = 0; a < pairs.size(); ++a)
        for (std::size_t b = a; b < pairs.size(); ++b) {
            const double gap = std::fabs(in.x->distance(pairs[a].first, pairs[b].first) -
                                         in.y->distance(pairs[a].second, pairs[b].second));
            if (gap > dis) dis = gap;
        }
    return dis;
}

double initial_upper_bound(const Instance& in) {
    // Star correspondence x0 x Y union X x y0.
    std::vector<std::pair<std::size_t, std::size_t>> star;
    for (std::size_t j = 0; j < in.n; ++j) star.emplace_back(0, j);
    for (std::size_t i = 0; i < in.m; ++i) star.emplace_back(i, 0);
    double best = relation_distortion(in, star);

    // Index-aligned maps in both directions.
    std::vector<std::pair<std::size_t, std::size_t>> aligned;
    for (std::size_t i = 0; i < in.m; ++i) aligned.emplace_back(i, i % in.n);
    for (std::size_t j = 0; j < in.n; ++j) aligned.emplace_back(j % in.m, j);
    best = std::min(best, relation_distortion(in, aligned));
    return best;
}

}  // namespace

double gh_distance_exact(const FiniteMetricSpace& x, const FiniteMetricSpace& y, Exec exec) {
    if (x.size() > kGhExactMaxPoints || y.size() > kGhExactMaxPoints)
        throw DomainError("exact Gromov-Hausdorff distance is limited to 6 points per space");

    const Instance in{&x, &y, x.size(), y.size()};
    std::atomic<double> incumbent{initial_upper_bound(in)};

    if (exec == Exec::serial || in.n == 1) {
        SearchState st;
        search(in, st, 0, 0, 0.0, incumbent);
    } else {
        // Fork on the first slot's choices; each branch owns its state, the
        // incumbent is shared.
#pragma omp parallel for schedule(dynamic)
        for (std::int64_t c = 0; c < static_cast<std::int64_t>(in.n); ++c) {
            SearchState st;
            const auto [xi, yj] = in.pair_for(0, static_cast<std::size_t>(c));
            const std::uint64_t mask = 1ULL << (xi * in.n + yj);
            st.pairs.emplace_back(xi, yj);
            search(in, st, 1, mask, 0.0, incumbent);
        }
    }
    return 0.5 * incumbent.load();
}

double gh_lower_bound(const FiniteMetricSpace& x, const FiniteMetricSpace& y) {
    const double diam_gap = 0.5 * std::fabs(x.diameter() - y.diameter());

    // One-sided Hausdorff gap from sorted spectrum a to sorted spectrum b.
    auto one_sided = [](const std::vector<double>& a, const std::vector<double>& b) {
        double worst = 0.0;
        for (double v : a) {
            auto it = std::lower_bound(b.begin(), b.end(), v);
            double nearest = std::numeric_limits<double>::infinity();
            if (it != b.end()) nearest = *it - v;
            if (it != b.begin()) nearest = std::min(nearest, v - *(it - 1));
            worst = std::max(worst, nearest);
        }
        return worst;
    };
    const auto sa = x.distance_spectrum();
    const auto sb = y.distance_spectrum();
    const double spectrum_gap = 0.5 * std::max(one_sided(sa, sb), one_sided(sb, sa));

    return std::max(diam_gap, spectrum_gap);
}

}  // namespace collapse
