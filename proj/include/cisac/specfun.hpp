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
 * \file specfun.hpp
 *
 * Special functions and quadrature engines.
 *
 * The Beta and Gamma families are thin wrappers over Boost.Math that pin
 * the non-regularized convention used by the coverage and Laplace-transform
 * formulas: beta_incomplete(x, a, b) = int_0^x t^(a-1) (1-t)^(b-1) dt.
 *
 * Quadrature:
 *  - integrate_finite() uses tanh-sinh, which tolerates integrable endpoint
 *    singularities of order > -1.
 *  - integrate_semi_infinite() maps z = exp(u) so power-law ends become
 *    exponential ones, then sums adaptive Gauss-Kronrod panels outward from
 *    the peak of the mapped integrand until the geometric tail estimate is
 *    below tolerance.
 */

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <memory>
#include <mutex>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "cisac/errors.hpp"

namespace cisac {

struct QuadratureSpec {
    double rel_tol = 1e-8;
    double abs_tol = 1e-12;
    /// Refinement depth: tanh-sinh levels for finite ranges, bisection depth
    /// of each Gauss-Kronrod panel for semi-infinite ones.
    std::size_t max_subdivisions = 15;

    /// Defaults for special-function level integrals.
    static constexpr QuadratureSpec special() { return {1e-8, 1e-12, 15}; }
    /// Defaults for composed physical integrals (coverage, rates).
    static constexpr QuadratureSpec physical() { return {1e-6, 1e-12, 12}; }

    void validate() const {
        if (!(rel_tol > 0.0) || !(abs_tol >= 0.0) || max_subdivisions < 1)
            throw DomainError("specfun", "QuadratureSpec requires rel_tol > 0, abs_tol >= 0, max_subdivisions >= 1");
    }

    double target(double value) const { return std::max(abs_tol, rel_tol * std::abs(value)); }
};

struct QuadratureResult {
    double value = 0.0;
    double error_bound = 0.0;
};

namespace detail {

inline void require_positive(double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v))
        throw DomainError("specfun", std::string(name) + " must be positive and finite, got " + std::to_string(v));
}

constexpr std::size_t kMaxTanhSinhLevels = 20;

// tanh-sinh integrators cache their abscissae; one shared instance per depth.
inline boost::math::quadrature::tanh_sinh<double>& tanh_sinh_for(std::size_t levels) {
    static std::array<std::unique_ptr<boost::math::quadrature::tanh_sinh<double>>, kMaxTanhSinhLevels + 1> cache;
    static std::array<std::once_flag, kMaxTanhSinhLevels + 1> flags;
    levels = std::clamp<std::size_t>(levels, 4, kMaxTanhSinhLevels);
    std::call_once(flags[levels], [&] {
        cache[levels] = std::make_unique<boost::math::quadrature::tanh_sinh<double>>(levels);
    });
    return *cache[levels];
}

}  // namespace detail

/// B(a, b).
inline double beta_complete(double a, double b) {
    detail::require_positive(a, "a");
    detail::require_positive(b, "b");
    return boost::math::beta(a, b);
}

/// Non-regularized incomplete Beta, int_0^x t^(a-1) (1-t)^(b-1) dt.
inline double beta_incomplete(double x, double a, double b) {
    if (!(x >= 0.0 && x <= 1.0))
        throw DomainError("specfun", "beta_incomplete: x must lie in [0, 1], got " + std::to_string(x));
    detail::require_positive(a, "a");
    detail::require_positive(b, "b");
    if (x == 0.0) return 0.0;
    return boost::math::beta(a, b, x);
}

/// Regularized lower incomplete Gamma P(s, x).
inline double gamma_reg_lower(double s, double x) {
    detail::require_positive(s, "s");
    if (!(x >= 0.0))
        throw DomainError("specfun", "gamma_reg_lower: x must be nonnegative, got " + std::to_string(x));
    if (x == 0.0) return 0.0;
    if (std::isinf(x)) return 1.0;
    return boost::math::gamma_p(s, x);
}

/// Adaptive integral of f over (lo, hi). f may be singular (integrably) at
/// either endpoint but is never evaluated there.
template <class F>
QuadratureResult integrate_finite(F&& f, double lo, double hi, const QuadratureSpec& spec = QuadratureSpec::special()) {
    spec.validate();
    if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi))
        throw DomainError("specfun", "integrate_finite: need finite lo < hi");

    auto& integrator = detail::tanh_sinh_for(spec.max_subdivisions);
    auto g = [&](double x) { return static_cast<double>(f(x)); };
    double err = 0.0;
    double l1 = 0.0;
    double value = 0.0;
    // tanh-sinh may stop one level early when its error estimate stalls;
    // asking for more accuracy pushes it past the stall.
    double tol = 0.25 * spec.rel_tol;
    for (int attempt = 0; attempt < 4; ++attempt, tol *= 1.0 / 16.0) {
        try {
            value = integrator.integrate(g, lo, hi, tol, &err, &l1);
        } catch (const std::exception& e) {
            throw ConvergenceError("specfun", std::string("integrate_finite: ") + e.what(),
                                   std::numeric_limits<double>::quiet_NaN(), std::numeric_limits<double>::infinity());
        }
        if (std::isfinite(value) && err <= spec.target(value)) return {value, err};
    }
    throw ConvergenceError("specfun", "integrate_finite: refinement budget exhausted", value, err);
}

/// Integral of f over (lo, inf) through z = exp(u).
///
/// The mapped integrand g(u) = f(e^u) e^u is located by a coarse scan, then
/// integrated panel by panel outward from its peak. A side stops once the
/// geometric extrapolation of its remaining panels falls under a quarter of
/// the tolerance; that extrapolation is added to the returned error bound.
template <class F>
QuadratureResult integrate_semi_infinite(F&& f, double lo, const QuadratureSpec& spec = QuadratureSpec::physical()) {
    spec.validate();
    if (!(lo >= 0.0) || !std::isfinite(lo))
        throw DomainError("specfun", "integrate_semi_infinite: lo must be finite and nonnegative");

    constexpr double kPanel = 1.0;
    constexpr double kScanLo = -60.0;
    constexpr double kScanHi = 60.0;
    constexpr double kUMax = 700.0;  // exp(700) is still finite
    constexpr double kUMin = -700.0;

    const bool bounded_left = lo > 0.0;
    const double u_left = bounded_left ? std::log(lo) : kUMin;

    auto g = [&](double u) -> double {
        const double z = std::exp(u);
        const double v = static_cast<double>(f(z)) * z;
        return std::isfinite(v) ? v : 0.0;
    };

    // Locate the bulk of the mass.
    double u_peak = std::max(u_left, 0.0);
    double peak = -1.0;
    for (double u = std::max(kScanLo, u_left); u <= kScanHi; u += 2.0) {
        const double v = std::abs(g(u));
        if (v > peak) {
            peak = v;
            u_peak = u;
        }
    }
    if (bounded_left && std::abs(g(u_left + 1e-12)) > peak) u_peak = u_left;

    using Kronrod = boost::math::quadrature::gauss_kronrod<double, 21>;
    // Panels far from the peak only need absolute accuracy against the
    // scale set by the centre panel: try a single Kronrod rule first.
    double scale = 0.0;
    auto panel = [&](double a, double b, double& err_acc) {
        double err = 0.0;
        double l1 = 0.0;
        if (scale > 0.0) {
            const double v = Kronrod::integrate(g, a, b, 0, 0.0, &err, &l1);
            if (err <= 0.01 * spec.target(scale)) {
                err_acc += err;
                return v;
            }
        }
        const double v =
            Kronrod::integrate(g, a, b, static_cast<unsigned>(spec.max_subdivisions), spec.rel_tol * 1e-1, &err, &l1);
        err_acc += err;
        return v;
    };

    double total = 0.0;
    double err_total = 0.0;

    // Centre panel, clipped at the left boundary.
    double left_edge = std::max(u_left, u_peak - kPanel / 2);
    double right_edge = left_edge + kPanel;
    total += panel(left_edge, right_edge, err_total);
    scale = std::abs(total);

    auto march = [&](int direction) {
        double previous = std::numeric_limits<double>::quiet_NaN();
        double tail = 0.0;
        int small_streak = 0;
        while (true) {
            double a, b;
            if (direction > 0) {
                if (right_edge >= kUMax) break;
                a = right_edge;
                b = std::min(right_edge + kPanel, kUMax);
                right_edge = b;
            } else {
                if (left_edge <= u_left) {
                    if (bounded_left) return 0.0;
                    break;
                }
                a = std::max(left_edge - kPanel, u_left);
                b = left_edge;
                left_edge = a;
            }
            const double contribution = panel(a, b, err_total);
            total += contribution;
            const double mag = std::abs(contribution);
            if (std::isfinite(previous) && previous > 0.0) {
                const double ratio = mag / previous;
                tail = ratio < 0.95 ? mag * ratio / (1.0 - ratio) : std::numeric_limits<double>::infinity();
            } else if (mag == 0.0) {
                tail = 0.0;
            } else {
                tail = std::numeric_limits<double>::infinity();
            }
            previous = mag;
            if (tail <= 0.25 * spec.target(total)) {
                if (++small_streak >= 2) return tail;
            } else {
                small_streak = 0;
            }
        }
        // Ran into the representable range before the tail settled.
        if (tail > spec.target(total))
            throw ConvergenceError("specfun", "integrate_semi_infinite: tail does not decay", total, tail);
        return tail;
    };

    const double right_tail = march(+1);
    const double left_tail = march(-1);
    err_total += right_tail + left_tail;

    if (!std::isfinite(total) || err_total > spec.target(total))
        throw ConvergenceError("specfun", "integrate_semi_infinite: tolerance not reached", total, err_total);
    return {total, err_total};
}

}  // namespace cisac
