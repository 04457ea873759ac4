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
 * \file sense_analytic.hpp
 *
 * Analytical radar information rate E[ln(1 + X / Y)] for a target at the
 * origin sensed by its N nearest BSs, BS 1 receiving the echoes.
 *
 *   X = sigma^2 M_r p_s sum_i f_i r_i^-beta    (echo power, r_1^-beta removed)
 *   Y = r_1^beta sum_q p_t f_q |d_1 - d_q|^-beta
 *
 * and E ln(1 + X/Y) = int_0^inf (1/z)(1 - E e^{-zX}) E e^{-zY} dz.
 * For N = 1 the echo carries r_1^-2beta and the rate is computed with the
 * interference hole of radius r_1 around the target taken into account.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <boost/math/special_functions/binomial.hpp>

#include "cisac/errors.hpp"
#include "cisac/params.hpp"
#include "cisac/specfun.hpp"

namespace cisac {

enum class RateMethod { Theorem2, Prop2Hole, Prop2NoHole, MonteCarlo };

inline std::string to_string(RateMethod m) {
    switch (m) {
        case RateMethod::Theorem2: return "theorem2";
        case RateMethod::Prop2Hole: return "prop2-hole";
        case RateMethod::Prop2NoHole: return "prop2-no-hole";
        case RateMethod::MonteCarlo: return "monte-carlo";
    }
    return "unknown";
}

struct RateEstimate {
    double value = 0.0;  ///< nats
    RateMethod method = RateMethod::Theorem2;
    double uncertainty = 0.0;
};

struct RateOptions {
    QuadratureSpec outer = QuadratureSpec::physical();
    QuadratureSpec inner = QuadratureSpec::special();
};

namespace detail {

inline void require_sense_beta(double beta) {
    if (!(beta > 2.0))
        throw DomainError("sense-analytic", "path-loss exponent must exceed 2, got " + std::to_string(beta));
}

inline double echo_scale(const SystemParams& p) { return p.rcs * p.receive_antennas * p.sensing_power; }

}  // namespace detail

/// H3 = (z sigma^2 M_r p_s)^(2/beta) sum_i C(Q, i) B(u_N; Q - i + 2/beta, i - 2/beta).
inline double h3(double z, double r_n, const SystemParams& p) {
    detail::require_sense_beta(p.path_loss);
    if (!(z >= 0.0)) throw DomainError("sense-analytic", "z must be nonnegative");
    if (!(r_n > 0.0)) throw DomainError("sense-analytic", "r_N must be positive");
    const double a = 2.0 / p.path_loss;
    const double scale = z * detail::echo_scale(p);
    if (scale == 0.0) return 0.0;
    const double u = 1.0 / (scale * std::pow(r_n, -p.path_loss) + 1.0);
    const int q = p.gamma_shape();
    double acc = 0.0;
    for (int i = 1; i <= q; ++i)
        acc += boost::math::binomial_coefficient<double>(q, i) * beta_incomplete(u, q - i + a, i - a);
    return std::pow(scale, a) * acc;
}

/// H4 = (z^(2/beta) / beta) [B(2/beta, 1 - 2/beta) - B(v_N; 2/beta, 1 - 2/beta)],
/// v_N = 1 / (1 + z eta^beta). Evaluated through the complementary Beta.
inline double h4(double z, double eta, const SystemParams& p) {
    detail::require_sense_beta(p.path_loss);
    if (!(z >= 0.0)) throw DomainError("sense-analytic", "z must be nonnegative");
    if (!(eta > 0.0 && eta <= 1.0)) throw DomainError("sense-analytic", "eta must lie in (0, 1]");
    if (z == 0.0) return 0.0;
    const double beta = p.path_loss;
    const double a = 2.0 / beta;
    const double x = z * std::pow(eta, beta);
    return std::pow(z, a) / beta * beta_incomplete(x / (1.0 + x), 1.0 - a, a);
}

namespace detail {

// int_0^inf g(-(2 pi lambda / beta) H3) f(s) ds over s = lambda pi r_N^2 ~ Gamma(N, 1).
template <class G>
QuadratureResult desired_transform(double z, const SystemParams& p, const QuadratureSpec& spec, G&& g) {
    require_sense_beta(p.path_loss);
    if (p.sensing_cluster < 1) throw DomainError("sense-analytic", "N must be >= 1");
    const double lambda_pi = p.lambda * std::numbers::pi;
    const int n = p.sensing_cluster;
    const double log_norm = std::lgamma(static_cast<double>(n));
    auto integrand = [&](double s) {
        const double r = std::sqrt(s / lambda_pi);
        const double e = -(2.0 * lambda_pi / p.path_loss) * h3(z, r, p);
        return g(e) * std::exp((n - 1) * std::log(s) - s - log_norm);
    };
    return integrate_semi_infinite(integrand, 0.0, spec);
}

}  // namespace detail

/// E[exp(-z X)] with the cluster echoes treated as a PPP inside r_N.
/// Tends to 2^-N, not 0, as z grows: the PPP inside r_N is empty with
/// probability exp(-lambda pi r_N^2).
inline double laplace_desired(double z, const SystemParams& p, const QuadratureSpec& spec = QuadratureSpec::special()) {
    if (z == 0.0) return 1.0;
    return detail::desired_transform(z, p, spec, [](double e) { return std::exp(e); }).value;
}

/// 1 - laplace_desired(z), without the cancellation at small z.
inline QuadratureResult laplace_desired_complement(double z, const SystemParams& p,
                                                   const QuadratureSpec& spec = QuadratureSpec::special()) {
    if (z == 0.0) return {0.0, 0.0};
    return detail::desired_transform(z, p, spec, [](double e) { return -std::expm1(e); });
}

/// int_0^1 f(eta) / (1 + 2 H4(z p_t, eta)) d eta, f(eta) = 2(N-1) eta (1 - eta^2)^(N-2).
inline double laplace_interference_factor(double z, const SystemParams& p,
                                          const QuadratureSpec& spec = QuadratureSpec::special()) {
    detail::require_sense_beta(p.path_loss);
    if (p.sensing_cluster == 1)
        throw DegenerateCaseError("sense-analytic", "N = 1 has no eta; use radar_rate_prop2");
    if (p.sensing_cluster < 1) throw DomainError("sense-analytic", "N must be >= 1");
    if (!(z >= 0.0)) throw DomainError("sense-analytic", "z must be nonnegative");
    if (z == 0.0) return 1.0;
    const int n = p.sensing_cluster;
    const double zt = z * p.total_power();
    auto integrand = [&](double eta) {
        const double density = 2.0 * (n - 1) * eta * std::pow(1.0 - eta * eta, n - 2);
        return density / (1.0 + 2.0 * h4(zt, eta, p));
    };
    return integrate_finite(integrand, 0.0, 1.0, spec).value;
}

/// Cooperative rate, N >= 2.
inline RateEstimate radar_rate_theorem2(const SystemParams& p, const RateOptions& opt = {}) {
    p.validate();
    if (p.sensing_cluster < 2)
        throw DegenerateCaseError("sense-analytic", "cooperative rate needs N >= 2; use radar_rate_prop2");
    if (p.sensing_power == 0.0) return {0.0, RateMethod::Theorem2, 0.0};
    auto integrand = [&](double z) {
        const auto d = laplace_desired_complement(z, p, opt.inner);
        return d.value * laplace_interference_factor(z, p, opt.inner) / z;
    };
    const auto r = integrate_semi_infinite(integrand, 0.0, opt.outer);
    return {r.value, RateMethod::Theorem2, r.error_bound};
}

namespace detail {

/// int_0^2 2 arccos(t/2) t / (1 + t^beta / w) dt: interferer mass inside the
/// hole seen from BS 1, weighted by its Laplace deficit. Split at the knee
/// t = w^(1/beta) when it falls inside the range.
inline double hole_integral(double w, double beta, const QuadratureSpec& spec) {
    if (!(w > 0.0)) return 0.0;
    if (std::isinf(w)) return std::numbers::pi;  // area of the unit hole
    auto f = [&](double t) { return 2.0 * std::acos(t / 2.0) * t / (1.0 + std::pow(t, beta) / w); };
    const double knee = std::pow(w, 1.0 / beta);
    if (knee > 1e-12 && knee < 2.0 - 1e-12)
        return integrate_finite(f, 0.0, knee, spec).value + integrate_finite(f, knee, 2.0, spec).value;
    return integrate_finite(f, 0.0, 2.0, spec).value;
}

}  // namespace detail

/// Single-BS rate, N = 1. With include_hole the interference Laplace
/// transform adds back the BS-free disk of radius r_1 around the target.
inline RateEstimate radar_rate_prop2(const SystemParams& p, bool include_hole, const RateOptions& opt = {}) {
    p.validate();
    if (p.sensing_cluster != 1) throw DomainError("sense-analytic", "single-BS rate requires N = 1");
    const RateMethod method = include_hole ? RateMethod::Prop2Hole : RateMethod::Prop2NoHole;
    if (p.sensing_power == 0.0) return {0.0, method, 0.0};

    const double beta = p.path_loss;
    const double a = 2.0 / beta;
    const double lambda_pi = p.lambda * std::numbers::pi;
    const double full_beta = beta_complete(a, 1.0 - a);
    const double echo = detail::echo_scale(p);
    const int q = p.gamma_shape();

    // E exp(-z r_1^(2 beta) I) over r_1, in s = lambda pi r_1^2.
    auto interference = [&](double z) {
        auto in = [&](double s) {
            const double r2 = s / lambda_pi;
            const double w = z * p.total_power() * std::pow(r2, beta / 2.0);
            double e = -s * a * std::pow(w, a) * full_beta;
            if (include_hole) e += s / std::numbers::pi * detail::hole_integral(w, beta, opt.inner);
            return std::exp(e - s);
        };
        return integrate_semi_infinite(in, 0.0, opt.inner).value;
    };
    auto integrand = [&](double z) {
        const double desired = -std::expm1(-q * std::log1p(z * echo));
        return desired * interference(z) / z;
    };
    const auto r = integrate_semi_infinite(integrand, 0.0, opt.outer);
    return {r.value, method, r.error_bound};
}

}  // namespace cisac
