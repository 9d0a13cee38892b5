#include "collapse/finite_metric_space.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "collapse/counter_rng.hpp"
#include "collapse/errors.hpp"

namespace collapse {

namespace {

constexpr double kTriangleTolerance = 1e-9;

void check_triangle(const std::vector<double>& d, std::size_t n, std::size_t i, std::size_t j,
                    std::size_t k) {
    if (d[i * n + k] > d[i * n + j] + d[j * n + k] + kTriangleTolerance)
        throw InvalidInput("distance matrix violates the triangle inequality beyond 1e-9");
}

}  // namespace

FiniteMetricSpace::FiniteMetricSpace(std::vector<std::string> labels,
                                     std::vector<std::vector<double>> dist)
    : labels_(std::move(labels)) {
    const std::size_t n = labels_.size();
    if (n == 0) throw InvalidInput("metric space needs at least one point");
    if (dist.size() != n) throw InvalidInput("distance matrix row count does not match labels");
    dist_.resize(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        if (dist[i].size() != n) throw InvalidInput("distance matrix must be square");
        for (std::size_t j = 0; j < n; ++j) {
            const double v = dist[i][j];
            if (!std::isfinite(v) || v < 0.0)
                throw InvalidInput("distances must be finite and nonnegative");
            dist_[i * n + j] = v;
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (dist_[i * n + i] != 0.0) throw InvalidInput("distance matrix diagonal must be zero");
        for (std::size_t j = i + 1; j < n; ++j)
            if (dist_[i * n + j] != dist_[j * n + i])
                throw InvalidInput("distance matrix must be exactly symmetric");
    }
    if (n <= 256) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) check_triangle(dist_, n, i, j, k);
    } else {
        const CounterRng rng(0x7269616e676c65ULL);
        for (std::uint64_t t = 0; t < 1'000'000; ++t) {
            const auto i = static_cast<std::size_t>(rng.uniform(t, 0) * n);
            const auto j = static_cast<std::size_t>(rng.uniform(t, 1) * n);
            const auto k = static_cast<std::size_t>(rng.uniform(t, 2) * n);
            check_triangle(dist_, n, i, j, k);
        }
    }
}

double FiniteMetricSpace::diameter() const {
    return *std::max_element(dist_.begin(), dist_.end());
}

std::vector<double> FiniteMetricSpace::distance_spectrum() const {
    const std::size_t n = size();
    std::vector<double> s;
    s.reserve(n * (n - 1) / 2 + 1);
    s.push_back(0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) s.push_back(dist_[i * n + j]);
    std::sort(s.begin(), s.end());
    return s;
}

std::string FiniteMetricSpace::to_json() const {
    nlohmann::json j;
    j["labels"] = labels_;
    const std::size_t n = size();
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < n; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t k = 0; k < n; ++k) row.push_back(dist_[i * n + k]);
        rows.push_back(std::move(row));
    }
    j["dist"] = std::move(rows);
    return j.dump();
}

FiniteMetricSpace FiniteMetricSpace::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("malformed metric-space JSON: ") + e.what());
    }
    if (!j.contains("labels") || !j.contains("dist"))
        throw InvalidInput("metric-space JSON needs 'labels' and 'dist'");
    try {
        auto labels = j["labels"].get<std::vector<std::string>>();
        auto dist = j["dist"].get<std::vector<std::vector<double>>>();
        return FiniteMetricSpace(std::move(labels), std::move(dist));
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("malformed metric-space JSON: ") + e.what());
    }
}

}  // namespace collapse
