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
 * \file comm_analytic.hpp
 *
 * Analytical coverage of a user served jointly by its L nearest BSs.
 *
 * With c_n = alpha n T p_t / (Q p_c) and D = sum_i r_i^-beta,
 *
 *   P_cov(T) = sum_n (-1)^(n+1) C(Q, n) E[exp(-pi lambda H1(r, n))].
 *
 * The expectation runs over the cluster distances. Integrals are taken in
 * s_i = lambda pi r_i^2, which makes the integrand free of lambda.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include <boost/math/special_functions/binomial.hpp>

#include "cisac/approx.hpp"
#include "cisac/errors.hpp"
#include "cisac/geometry.hpp"
#include "cisac/params.hpp"
#include "cisac/rng.hpp"
#include "cisac/specfun.hpp"

namespace cisac {

enum class CoverageMethod { Theorem1, Prop1Closed, MonteCarlo };

inline std::string to_string(CoverageMethod m) {
    switch (m) {
        case CoverageMethod::Theorem1: return "theorem1";
        case CoverageMethod::Prop1Closed: return "prop1-closed";
        case CoverageMethod::MonteCarlo: return "monte-carlo";
    }
    return "unknown";
}

struct CoverageCurve {
    std::vector<double> thresholds;  ///< linear SIR
    std::vector<double> values;
    CoverageMethod method = CoverageMethod::Theorem1;
    std::vector<double> uncertainty;  ///< quadrature bound or CI half-width

    std::vector<double> thresholds_db() const {
        std::vector<double> out;
        out.reserve(thresholds.size());
        for (double t : thresholds) out.push_back(linear_to_db(t));
        return out;
    }
};

/// Joint law used for the cluster distances inside the expectation.
enum class DistanceLaw {
    /// Ordered s_1 < ... < s_L with density exp(-s_L): the exact joint law.
    JointOrdered,
    /// Product of the marginal k-th distance densities, ignoring order.
    MarginalProduct,
};

struct CoverageOptions {
    DistanceLaw law = DistanceLaw::JointOrdered;
    QuadratureSpec quadrature = QuadratureSpec::physical();
    std::size_t mc_samples = 200000;  ///< L >= 3
    std::uint64_t seed = 1;
};

struct CoverageValue {
    double value = 0.0;
    double uncertainty = 0.0;  ///< quadrature error bound or 95% CI half-width
    bool clamped = false;      ///< raw value fell outside [0, 1]
    double raw = 0.0;
};

namespace detail {

inline void require_beta_above_two(double beta, const char* origin) {
    if (!(beta > 2.0)) throw DomainError(origin, "path-loss exponent must exceed 2, got " + std::to_string(beta));
}

inline double require_alpha(const SystemParams& p) {
    if (!p.alpha_fit) throw DomainError("comm-analytic", "alpha_fit is missing; call with_fitted_alpha() first");
    return *p.alpha_fit;
}

/// H1 for a given D and r_L^-beta, any unit system. `c` is c_n.
/// Uses B(a, b) - B(x; a, b) = B(1 - x; b, a) so that small T loses nothing
/// to cancellation.
inline double h1_core(double c, double d_sum, double last_path, double beta) {
    const double a = 2.0 / beta;
    const double ratio = c * last_path / d_sum;  // 1/Q_L - 1
    const double one_minus_q = ratio / (1.0 + ratio);
    if (one_minus_q == 0.0) return 0.0;
    return a * std::pow(c / d_sum, a) * beta_incomplete(one_minus_q, 1.0 - a, a);
}

inline double cluster_coefficient(const SystemParams& p, double t, int n) {
    const double alpha = require_alpha(p);
    return alpha * n * t * p.total_power() / (p.gamma_shape() * p.comm_power);
}

/// sum_n (-1)^(n+1) C(Q, n) exp(-H1_n) with H1 evaluated in s units.
inline double alternating_sum(const SystemParams& p, double t, double d_sum, double last_path) {
    const int q = p.gamma_shape();
    double acc = 0.0;
    for (int n = 1; n <= q; ++n) {
        const double h = h1_core(cluster_coefficient(p, t, n), d_sum, last_path, p.path_loss);
        const double term = boost::math::binomial_coefficient<double>(q, n) * std::exp(-h);
        acc += (n % 2 == 1) ? term : -term;
    }
    return acc;
}

inline CoverageValue clamp_coverage(double raw, double uncertainty) {
    CoverageValue out{std::clamp(raw, 0.0, 1.0), uncertainty, raw < 0.0 || raw > 1.0, raw};
    return out;
}

inline void check_threshold(double t) {
    if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("comm-analytic", "threshold must be positive and finite");
}

}  // namespace detail

/// H1(Q, n, beta, T, p_t, p_c) for ordered cluster distances r_1 < ... < r_L.
inline double h1(const OrderedDistances& r, int n, double t, const SystemParams& p) {
    detail::require_beta_above_two(p.path_loss, "comm-analytic");
    detail::check_threshold(t);
    if (r.size() == 0) throw DomainError("comm-analytic", "h1 needs at least one distance");
    if (n < 1 || n > p.gamma_shape()) throw DomainError("comm-analytic", "n must lie in 1..M_t-1");
    double d_sum = 0.0;
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (!(r[i] > 0.0)) throw DomainError("comm-analytic", "distances must be positive");
        if (i > 0 && r[i] < r[i - 1]) throw DomainError("comm-analytic", "distances must be ascending");
        d_sum += std::pow(r[i], -p.path_loss);
    }
    return detail::h1_core(detail::cluster_coefficient(p, t, n), d_sum, std::pow(r.farthest(), -p.path_loss),
                           p.path_loss);
}

/// Closed form for L = 1 and beta = 4. Independent of lambda.
inline double coverage_prop1(const SystemParams& p, double t) {
    detail::check_threshold(t);
    if (p.comm_cluster != 1 || p.path_loss != 4.0)
        throw DomainError("comm-analytic", "closed form requires L = 1 and beta = 4");
    const int q = p.gamma_shape();
    double acc = 0.0;
    for (int n = 1; n <= q; ++n) {
        const double c = detail::cluster_coefficient(p, t, n);
        const double u = 1.0 / (1.0 + c);
        const double term = boost::math::binomial_coefficient<double>(q, n) /
                            (1.0 + std::sqrt(c) * (std::numbers::pi / 2.0 - std::asin(std::sqrt(u))));
        acc += (n % 2 == 1) ? term : -term;
    }
    return std::clamp(acc, 0.0, 1.0);
}

/// Coverage from the L-fold distance integral. L = 1 and L = 2 use nested
/// quadrature; larger clusters use Monte Carlo integration over the
/// distances and report a 95% CI as uncertainty.
inline CoverageValue coverage_theorem1_detail(const SystemParams& p, double t, const CoverageOptions& opt = {}) {
    p.validate();
    detail::check_threshold(t);
    detail::require_alpha(p);
    const double beta = p.path_loss;
    const double half = beta / 2.0;  // s^-half is r^-beta up to a lambda factor
    const int l = p.comm_cluster;

    auto sum_at = [&](double d_sum, double last_path) {
        return detail::alternating_sum(p, t, d_sum, last_path);
    };

    if (l == 1) {
        auto integrand = [&](double s) {
            const double path = std::pow(s, -half);
            return std::exp(-s) * sum_at(path, path);
        };
        const auto r = integrate_semi_infinite(integrand, 0.0, opt.quadrature);
        return detail::clamp_coverage(r.value, r.error_bound);
    }

    if (l == 2) {
        QuadratureSpec inner = opt.quadrature;
        inner.rel_tol *= 1e-1;
        inner.abs_tol = std::max(inner.abs_tol, 1e-10);
        inner.max_subdivisions = std::max<std::size_t>(inner.max_subdivisions, 15);
        double inner_err = 0.0;

        if (opt.law == DistanceLaw::JointOrdered) {
            // s_1 = v s_2 with v in (0, 1); density exp(-s_2), Jacobian s_2.
            auto outer = [&](double s2) {
                const double p2 = std::pow(s2, -half);
                auto in = [&](double v) {
                    const double p1 = std::pow(v * s2, -half);
                    return sum_at(p1 + p2, p2);
                };
                const auto r = integrate_finite(in, 0.0, 1.0, inner);
                inner_err = std::max(inner_err, r.error_bound);
                return s2 * std::exp(-s2) * r.value;
            };
            const auto r = integrate_semi_infinite(outer, 0.0, opt.quadrature);
            return detail::clamp_coverage(r.value, r.error_bound + inner_err);
        }

        // Marginal densities exp(-s_1) and s_2 exp(-s_2) on the full quadrant.
        auto outer = [&](double s2) {
            const double p2 = std::pow(s2, -half);
            auto in = [&](double s1) { return std::exp(-s1) * sum_at(std::pow(s1, -half) + p2, p2); };
            const auto r = integrate_semi_infinite(in, 0.0, inner);
            inner_err = std::max(inner_err, r.error_bound);
            return s2 * std::exp(-s2) * r.value;
        };
        const auto r = integrate_semi_infinite(outer, 0.0, opt.quadrature);
        return detail::clamp_coverage(r.value, r.error_bound + inner_err);
    }

    if (opt.mc_samples < 2) throw DomainError("comm-analytic", "mc_samples must be >= 2");
    double mean = 0.0;
    double m2 = 0.0;
    for (std::size_t k = 0; k < opt.mc_samples; ++k) {
        Stream rng(opt.seed, k);
        double d_sum = 0.0;
        double last = 0.0;
        if (opt.law == DistanceLaw::JointOrdered) {
            double s = 0.0;
            for (int i = 0; i < l; ++i) {
                s += rng.exponential();
                last = std::pow(s, -half);
                d_sum += last;
            }
        } else {
            for (int i = 1; i <= l; ++i) {
                double s = 0.0;  // Gamma(i, 1) as a sum of i exponentials
                for (int j = 0; j < i; ++j) s += rng.exponential();
                last = std::pow(s, -half);
                d_sum += last;
            }
        }
        const double x = sum_at(d_sum, last);
        const double delta = x - mean;
        mean += delta / static_cast<double>(k + 1);
        m2 += delta * (x - mean);
    }
    const double var = m2 / static_cast<double>(opt.mc_samples - 1);
    return detail::clamp_coverage(mean, 1.96 * std::sqrt(var / static_cast<double>(opt.mc_samples)));
}

inline double coverage_theorem1(const SystemParams& p, double t, const CoverageOptions& opt = {}) {
    return coverage_theorem1_detail(p, t, opt).value;
}

inline CoverageCurve coverage_curve_theorem1(const SystemParams& p, const std::vector<double>& thresholds,
                                             const CoverageOptions& opt = {}) {
    CoverageCurve out{thresholds, {}, CoverageMethod::Theorem1, {}};
    for (double t : thresholds) {
        const auto v = coverage_theorem1_detail(p, t, opt);
        out.values.push_back(v.value);
        out.uncertainty.push_back(v.uncertainty);
    }
    return out;
}

inline CoverageCurve coverage_curve_prop1(const SystemParams& p, const std::vector<double>& thresholds) {
    CoverageCurve out{thresholds, {}, CoverageMethod::Prop1Closed, {}};
    for (double t : thresholds) {
        out.values.push_back(coverage_prop1(p, t));
        out.uncertainty.push_back(0.0);
    }
    return out;
}

}  // namespace cisac
