// SPDX-License-Identifier: Apache-2.0
//
// cisac: performance evaluation of cooperative ISAC networks
// Copyright (C) 2026 The cisac authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

/**
 * \file geometry.hpp
 *
 * Base-station deployments drawn from a homogeneous Poisson point process in
 * a disk window centred on the origin (where the typical user or target
 * sits), and the distance laws that go with them.
 *
 * Units: metres for coordinates, BS/m^2 for densities.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <boost/math/special_functions/gamma.hpp>

#include "cisac/errors.hpp"
#include "cisac/rng.hpp"

namespace cisac {

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    double norm() const { return std::hypot(x, y); }
    friend bool operator==(const Point2&, const Point2&) = default;
};

struct Realization {
    std::vector<Point2> points;
    double window_radius = 0.0;
    double density = 0.0;
};

/// Origin distances of the k nearest points, ascending.
struct OrderedDistances {
    std::vector<double> distances;

    std::size_t size() const { return distances.size(); }
    double operator[](std::size_t i) const { return distances[i]; }
    double nearest() const { return distances.front(); }
    double farthest() const { return distances.back(); }
};

namespace detail {

inline void require_density(double lambda) {
    if (!(lambda > 0.0) || !std::isfinite(lambda))
        throw DomainError("geometry", "density must be positive, got " + std::to_string(lambda));
}

}  // namespace detail

/// HPPP of intensity `lambda` restricted to the disk of radius `window_radius`.
/// The count is Poisson(lambda pi R^2) and positions are uniform in the disk.
inline Realization sample_hppp(double lambda, double window_radius, std::uint64_t seed) {
    detail::require_density(lambda);
    if (!(window_radius > 0.0)) throw DomainError("geometry", "window radius must be positive");

    Stream rng(seed, 0);
    const double mean = lambda * std::numbers::pi * window_radius * window_radius;
    std::poisson_distribution<long long> count_law(mean);
    const auto count = static_cast<std::size_t>(count_law(rng));

    Realization out;
    out.window_radius = window_radius;
    out.density = lambda;
    out.points.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const double r = window_radius * std::sqrt(rng.uniform());
        const double phi = 2.0 * std::numbers::pi * rng.uniform();
        out.points.push_back({r * std::cos(phi), r * std::sin(phi)});
    }
    return out;
}

/// Same law as sample_hppp(), generated nearest-first: the values
/// lambda pi r_k^2 are the arrival times of a unit-rate Poisson process.
/// Points come out already ordered by distance from the origin.
inline Realization sample_hppp_radial(double lambda, double window_radius, Stream& rng) {
    detail::require_density(lambda);
    if (!(window_radius > 0.0)) throw DomainError("geometry", "window radius must be positive");

    const double lambda_pi = lambda * std::numbers::pi;
    const double s_max = lambda_pi * window_radius * window_radius;
    Realization out;
    out.window_radius = window_radius;
    out.density = lambda;
    for (double s = rng.exponential(); s <= s_max; s += rng.exponential()) {
        const double r = std::sqrt(s / lambda_pi);
        const double phi = 2.0 * std::numbers::pi * rng.uniform();
        out.points.push_back({r * std::cos(phi), r * std::sin(phi)});
    }
    return out;
}

inline OrderedDistances nearest_k(const Realization& real, std::size_t k) {
    if (real.points.size() < k) throw InsufficientPointsError(real.points.size(), k);
    std::vector<double> d;
    d.reserve(real.points.size());
    for (const auto& p : real.points) d.push_back(p.norm());
    std::partial_sort(d.begin(), d.begin() + static_cast<std::ptrdiff_t>(k), d.end());
    d.resize(k);
    return {std::move(d)};
}

/// Density of the distance from the origin to the k-th nearest point,
/// 2 (lambda pi r^2)^k exp(-lambda pi r^2) / (Gamma(k) r).
inline double pdf_kth_distance(double r, int k, double lambda) {
    detail::require_density(lambda);
    if (k < 1) throw DomainError("geometry", "k must be >= 1");
    if (!(r > 0.0)) return 0.0;
    const double s = lambda * std::numbers::pi * r * r;
    const double log_pdf = std::log(2.0) + k * std::log(s) - s - std::lgamma(static_cast<double>(k)) - std::log(r);
    return std::exp(log_pdf);
}

/// Density of eta = r_1 / r_N, 2 (N-1) eta (1 - eta^2)^(N-2).
inline double pdf_eta(double eta, int n) {
    if (n == 1)
        throw DegenerateCaseError("geometry", "ratio r_1/r_N is degenerate for a single-BS cluster");
    if (n < 1) throw DomainError("geometry", "cluster size must be >= 1");
    if (!(eta >= 0.0 && eta <= 1.0)) throw DomainError("geometry", "eta must lie in [0, 1]");
    return 2.0 * (n - 1) * eta * std::pow(1.0 - eta * eta, n - 2);
}

/// Knobs of the finite-window policy. The window always holds at least
/// `min_mean_count` points on average and is large enough that the
/// fluctuation of the interference left outside it, relative to the mean
/// interference from inside it, stays below `fluctuation_tol`. The mean of
/// the outside part is restored by far_field_mean().
struct TruncationRule {
    double min_mean_count = 500.0;
    double path_loss_exponent = 4.0;
    double fluctuation_tol = 1e-4;
};

/// Smallest mean count lambda pi R^2 satisfying the fluctuation criterion.
/// In normalized units s = lambda pi r^2, with unit-mean exponential gains:
///   outside std   sqrt(2 M^(1-beta) / (beta - 1))
///   inside mean   (1 - M^(1-beta/2)) / (beta/2 - 1)     (annulus from s = 1)
inline double truncation_mean_count(double beta, double tol) {
    if (!(beta > 2.0)) throw DomainError("geometry", "path-loss exponent must exceed 2");
    auto ratio = [&](double m) {
        const double outside = std::sqrt(2.0 * std::pow(m, 1.0 - beta) / (beta - 1.0));
        const double inside = (1.0 - std::pow(m, 1.0 - beta / 2.0)) / (beta / 2.0 - 1.0);
        return outside / inside;
    };
    double lo = 1.5;
    double hi = 2.0;
    while (ratio(hi) > tol) hi *= 2.0;
    for (int i = 0; i < 200 && hi - lo > 1e-9 * hi; ++i) {
        const double mid = 0.5 * (lo + hi);
        (ratio(mid) > tol ? lo : hi) = mid;
    }
    return hi;
}

/// Smallest mean count m with P[Poisson(m) < min_points] <= tail_prob.
inline double poisson_tail_mean_count(std::size_t min_points, double tail_prob) {
    if (!(tail_prob > 0.0 && tail_prob < 1.0)) throw DomainError("geometry", "tail_prob must lie in (0, 1)");
    if (min_points == 0) return 0.0;
    // P[Poisson(m) < k] = Q(k, m), the regularized upper incomplete Gamma.
    return boost::math::gamma_q_inv(static_cast<double>(min_points), tail_prob);
}

/// Window radius for the Monte Carlo simulator.
inline double required_radius(double lambda, std::size_t min_points, double tail_prob,
                              const TruncationRule& rule = {}) {
    detail::require_density(lambda);
    const double m = std::max({poisson_tail_mean_count(min_points, tail_prob), rule.min_mean_count,
                               truncation_mean_count(rule.path_loss_exponent, rule.fluctuation_tol)});
    return std::sqrt(m / (lambda * std::numbers::pi));
}

/// Mean of sum_j g_j |x_j|^-beta over the HPPP outside radius R, unit-mean g.
inline double far_field_mean(double lambda, double window_radius, double beta) {
    return 2.0 * std::numbers::pi * lambda * std::pow(window_radius, 2.0 - beta) / (beta - 2.0);
}

/// Standard deviation of the same sum with exponential gains (E g^2 = 2).
inline double far_field_std(double lambda, double window_radius, double beta) {
    return std::sqrt(4.0 * std::numbers::pi * lambda * std::pow(window_radius, 2.0 - 2.0 * beta) /
                     (2.0 * beta - 2.0));
}

}  // namespace cisac
