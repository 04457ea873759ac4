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
 * \file approx.hpp
 *
 * Approximation devices behind the coverage formula:
 *
 *  - the fading-sum collapse, sum_i x_i r_i^-a ~ x sum_i r_i^-a, checked by
 *    simulation in verify_conjecture1();
 *  - the Gamma-CDF surrogate [1 - exp(-alpha g)]^N for g ~ Gamma(N, 1/N),
 *    whose alpha is chosen to minimise the Kolmogorov-Smirnov gap.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <mutex>
#include <random>
#include <string>
#include <vector>

#include <boost/math/special_functions/gamma.hpp>

#include "cisac/errors.hpp"
#include "cisac/params.hpp"
#include "cisac/rng.hpp"
#include "cisac/specfun.hpp"

namespace cisac {

struct AlphaFit {
    int shape = 1;
    double alpha_star = 1.0;
    double ks_distance = 0.0;
    double grid_resolution = 0.0;

    friend bool operator==(const AlphaFit&, const AlphaFit&) = default;
};

struct AlphaSearch {
    double lo = 0.05;
    double hi = 20.0;
    double tol = 1e-7;
};

namespace detail {

// Signed gap F - G and its derivative at gamma.
struct KsGap {
    double alpha;
    int n;

    double value(double g) const {
        const double f = std::pow(-std::expm1(-alpha * g), n);
        return f - gamma_reg_lower(n, n * g);
    }
    double slope(double g) const {
        const double e = std::exp(-alpha * g);
        const double df = n * std::pow(1.0 - e, n - 1) * alpha * e;
        const double dg = n * boost::math::gamma_p_derivative(static_cast<double>(n), n * g);
        return df - dg;
    }
};

}  // namespace detail

/// sup_g |[1 - exp(-alpha g)]^N - P(N, N g)| over g > 0.
///
/// Evaluated on 10^4 log-spaced points in [1e-4, 1e2]; the largest gap is
/// then polished with three Newton steps on the derivative, kept only when
/// they stay inside the neighbouring grid cells and increase the gap.
inline double ks_distance(double alpha, int n) {
    if (!(alpha > 0.0)) throw DomainError("approx", "alpha must be positive");
    if (n < 1) throw DomainError("approx", "shape must be >= 1");

    constexpr int kGrid = 10000;
    const double log_lo = std::log(1e-4);
    const double log_hi = std::log(1e2);
    const detail::KsGap gap{alpha, n};

    int best_i = 0;
    double best = -1.0;
    for (int i = 0; i < kGrid; ++i) {
        const double g = std::exp(log_lo + (log_hi - log_lo) * i / (kGrid - 1));
        const double d = std::abs(gap.value(g));
        if (d > best) {
            best = d;
            best_i = i;
        }
    }

    const double cell = (log_hi - log_lo) / (kGrid - 1);
    const double g_min = std::exp(log_lo + cell * std::max(best_i - 1, 0));
    const double g_max = std::exp(log_lo + cell * std::min(best_i + 1, kGrid - 1));
    double g = std::exp(log_lo + cell * best_i);
    for (int step = 0; step < 3; ++step) {
        const double h = 1e-6 * g;
        const double curvature = (gap.slope(g + h) - gap.slope(g - h)) / (2.0 * h);
        if (curvature == 0.0 || !std::isfinite(curvature)) break;
        const double next = g - gap.slope(g) / curvature;
        if (!(next > g_min && next < g_max)) break;
        g = next;
        best = std::max(best, std::abs(gap.value(g)));
    }
    return std::clamp(best, 0.0, 1.0);
}

/// Minimises ks_distance(., n) over [search.lo, search.hi]: coarse grid to
/// bracket the minimum, then golden-section search down to search.tol.
inline AlphaFit fit_alpha(int n, const AlphaSearch& search = {}) {
    if (n < 1) throw DomainError("approx", "shape must be >= 1");
    if (!(search.lo > 0.0 && search.lo < search.hi) || !(search.tol > 0.0))
        throw RangeError("approx", "alpha search needs 0 < lo < hi and tol > 0");

    constexpr int kCoarse = 100;
    const double step = (search.hi - search.lo) / kCoarse;

    // Gamma(1, 1) is the unit exponential: the surrogate is exact at alpha = 1.
    if (n == 1 && search.lo <= 1.0 && 1.0 <= search.hi) return {1, 1.0, 0.0, step};

    int best_i = 0;
    double best = 2.0;
    for (int i = 0; i <= kCoarse; ++i) {
        const double d = ks_distance(search.lo + step * i, n);
        if (d < best) {
            best = d;
            best_i = i;
        }
    }
    if (best_i == 0 || best_i == kCoarse)
        throw RangeError("approx", "K-S minimum for shape " + std::to_string(n) + " lies on the search boundary [" +
                                       std::to_string(search.lo) + ", " + std::to_string(search.hi) + "]");

    constexpr double kInvPhi = 0.6180339887498949;
    double a = search.lo + step * (best_i - 1);
    double b = search.lo + step * (best_i + 1);
    double c = b - kInvPhi * (b - a);
    double d = a + kInvPhi * (b - a);
    double fc = ks_distance(c, n);
    double fd = ks_distance(d, n);
    while (b - a > search.tol) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - kInvPhi * (b - a);
            fc = ks_distance(c, n);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + kInvPhi * (b - a);
            fd = ks_distance(d, n);
        }
    }
    double alpha = 0.5 * (a + b);
    double value = ks_distance(alpha, n);
    const double coarse_alpha = search.lo + step * best_i;
    if (best < value) {
        alpha = coarse_alpha;
        value = best;
    }
    return {n, alpha, value, step};
}

/// Fitted alpha for Gamma(Q, 1/Q), memoised per shape with the default search.
inline AlphaFit fitted_alpha_for_shape(int shape) {
    static std::mutex mutex;
    static std::map<int, AlphaFit> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(shape);
    if (it == cache.end()) it = cache.emplace(shape, fit_alpha(shape)).first;
    return it->second;
}

/// Copy of `params` with alpha_fit filled in when missing.
inline SystemParams with_fitted_alpha(SystemParams params) {
    if (!params.alpha_fit) params.alpha_fit = fitted_alpha_for_shape(params.gamma_shape()).alpha_star;
    return params;
}

/// Two-sample Kolmogorov-Smirnov statistic. Sorts its arguments.
inline double two_sample_ks(std::vector<double>& a, std::vector<double>& b) {
    if (a.empty() || b.empty()) throw DomainError("approx", "two_sample_ks needs nonempty samples");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    const double na = static_cast<double>(a.size());
    const double nb = static_cast<double>(b.size());
    std::size_t i = 0;
    std::size_t j = 0;
    double d = 0.0;
    while (i < a.size() && j < b.size()) {
        const double x = std::min(a[i], b[j]);
        while (i < a.size() && a[i] <= x) ++i;
        while (j < b.size() && b[j] <= x) ++j;
        d = std::max(d, std::abs(i / na - j / nb));
    }
    return d;
}

struct Conjecture1Check {
    int cluster = 1;
    double path_loss_exponent = 4.0;
    double lambda = 1e-4;
    int shape = 9;
    std::size_t trials = 100000;
    std::uint64_t seed = 1;
};

/// Simulates sum_i x_i r_i^-a (independent x_i ~ Gamma(shape, 1)) against
/// x sum_i r_i^-a (one shared x) on the same ordered HPPP distances and
/// returns the two-sample K-S distance between the two samples.
inline double verify_conjecture1(const Conjecture1Check& c) {
    if (c.cluster < 1) throw DomainError("approx", "cluster size must be >= 1");
    if (c.trials < 10000) throw DomainError("approx", "conjecture check needs at least 10^4 trials");
    if (!(c.path_loss_exponent > 0.0) || !(c.lambda > 0.0) || c.shape < 1)
        throw DomainError("approx", "exponent, density and shape must be positive");

    std::vector<double> separate(c.trials);
    std::vector<double> shared(c.trials);
    std::gamma_distribution<double> gain(static_cast<double>(c.shape), 1.0);
    const double lambda_pi = c.lambda * 3.141592653589793;
    for (std::size_t t = 0; t < c.trials; ++t) {
        Stream rng(c.seed, t);
        double s = 0.0;
        double sum_sep = 0.0;
        double sum_dist = 0.0;
        for (int i = 0; i < c.cluster; ++i) {
            s += rng.exponential();
            const double path = std::pow(s / lambda_pi, -c.path_loss_exponent / 2.0);
            sum_sep += gain(rng) * path;
            sum_dist += path;
        }
        separate[t] = sum_sep;
        shared[t] = gain(rng) * sum_dist;
    }
    return two_sample_ks(separate, shared);
}

}  // namespace cisac
