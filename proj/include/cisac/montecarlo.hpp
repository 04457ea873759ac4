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
 * \file montecarlo.hpp
 *
 * Simulation of both metrics on HPPP deployments in a finite disk.
 *
 * Trials are split into fixed chunks of `batch_size`. Every trial draws from
 * its own Stream(seed, trial), chunk partial sums are merged in chunk order,
 * so results are bitwise identical for any worker count.
 *
 * Points are generated nearest-first (see sample_hppp_radial) up to the
 * window radius; the mean interference from beyond the window is added back
 * as a constant.
 */

#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>
#include <numbers>
#include <thread>
#include <vector>

#include "cisac/comm_analytic.hpp"
#include "cisac/errors.hpp"
#include "cisac/fading.hpp"
#include "cisac/geometry.hpp"
#include "cisac/params.hpp"
#include "cisac/rng.hpp"
#include "cisac/sense_analytic.hpp"

namespace cisac {

struct McConfig {
    std::size_t trials = 1000000;
    std::uint64_t seed = 1;
    std::size_t min_points = 0;  ///< floor on the BSs the window must hold; the cluster size is always enforced
    double tail_prob = 1e-9;     ///< allowed probability of a window with too few BSs
    TruncationRule rule{};
    std::size_t batch_size = 10000;
    unsigned workers = 0;  ///< 0: hardware concurrency
    int max_retries = 8;   ///< window doublings allowed per trial
    /// Pairs each trial's X = sigma^2 M_r p_s sum_i f_i r_i^-beta with the
    /// next trial's Y = r_1^beta I, which makes X and Y independent as the
    /// cooperative analytic rate assumes. Diagnostics only.
    bool decouple_sensing = false;

    void validate() const {
        if (trials < 1) throw ConfigError("montecarlo", "trials must be >= 1");
        if (batch_size < 1) throw ConfigError("montecarlo", "batch_size must be >= 1");
        if (!(tail_prob > 0.0 && tail_prob < 1.0)) throw ConfigError("montecarlo", "tail_prob must lie in (0, 1)");
        if (max_retries < 0) throw ConfigError("montecarlo", "max_retries must be >= 0");
    }
};

struct McDiagnostics {
    double window_radius = 0.0;
    std::size_t retries = 0;           ///< window doublings over all trials
    double truncation_bias_bound = 0.0;  ///< relative, see window_bias_bound()
};

struct McResult {
    double estimate = 0.0;
    double ci_half_width = 0.0;  ///< 95%, normal approximation
    std::size_t trials_used = 0;
    McDiagnostics diagnostics;
};

struct McCoverage {
    CoverageCurve curve;
    std::size_t trials_used = 0;
    McDiagnostics diagnostics;
};

namespace detail {

// Stream seeds for the two metrics differ so they never share draws.
constexpr std::uint64_t kCommDomain = 0x636f6d6d00000000ULL;
constexpr std::uint64_t kSenseDomain = 0x73656e7300000000ULL;

/// Upper bound on the relative shift of the interference caused by the
/// fluctuation left outside the window, taken as the squared ratio of the
/// outside standard deviation to the mean inside interference (the mean
/// itself is compensated, so the effect on any smooth functional is second
/// order).
inline double window_bias_bound(double lambda, double radius, double beta) {
    const double m = lambda * std::numbers::pi * radius * radius;
    const double inside = (1.0 - std::pow(m, 1.0 - beta / 2.0)) / (beta / 2.0 - 1.0);
    const double outside = std::sqrt(2.0 * std::pow(m, 1.0 - beta) / (beta - 1.0));
    const double ratio = outside / inside;
    return ratio * ratio;
}

/// r^-beta from s = lambda pi r^2, with the common beta = 4 case kept exact.
inline double path_from_s(double s, double lambda_pi, double beta) {
    const double r2 = s / lambda_pi;
    if (beta == 4.0) return 1.0 / (r2 * r2);
    return std::pow(r2, -beta / 2.0);
}

inline double path_from_r2(double r2, double beta) {
    if (beta == 4.0) return 1.0 / (r2 * r2);
    return std::pow(r2, -beta / 2.0);
}

/// Runs chunk(index, first, last) for every chunk, on `workers` threads.
template <class Chunk>
void for_each_chunk(std::size_t trials, std::size_t batch, unsigned workers, Chunk&& chunk) {
    const std::size_t chunks = (trials + batch - 1) / batch;
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, chunks));
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto run = [&] {
        try {
            for (std::size_t c = next++; c < chunks; c = next++)
                chunk(c, c * batch, std::min(trials, (c + 1) * batch));
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next = chunks;
        }
    };
    if (workers <= 1) {
        run();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);
}

/// Walks the radial arrivals up to s_max, extending the window while fewer
/// than `needed` points were found. Calls visit(k, s) for k = 0, 1, ...
/// Returns the final s_max; counts doublings in `retries`.
template <class Visit>
double walk_arrivals(Stream& rng, double s_max, std::size_t needed, int max_retries, std::size_t& retries,
                     Visit&& visit) {
    std::size_t k = 0;
    double s = rng.exponential();
    for (int attempt = 0;; ++attempt) {
        for (; s <= s_max; s += rng.exponential()) visit(k++, s);
        if (k >= needed) return s_max;
        if (attempt == max_retries)
            throw ConfigError("montecarlo", "window still holds " + std::to_string(k) + " of " +
                                                std::to_string(needed) + " required BSs after " +
                                                std::to_string(max_retries) + " enlargements");
        s_max *= 4.0;  // radius doubles
        ++retries;
    }
}

}  // namespace detail

/// Coverage P[SIR >= T] for every threshold, one SIR draw per trial.
inline McCoverage mc_coverage_detail(const SystemParams& p, const std::vector<double>& thresholds,
                                     const McConfig& cfg = {}) {
    p.validate();
    cfg.validate();
    const std::size_t l = static_cast<std::size_t>(p.comm_cluster);
    const double beta = p.path_loss;
    TruncationRule rule = cfg.rule;
    rule.path_loss_exponent = beta;
    const double radius = required_radius(p.lambda, std::max(cfg.min_points, l), cfg.tail_prob, rule);
    const double lambda_pi = p.lambda * std::numbers::pi;
    const double s_max = lambda_pi * radius * radius;

    std::vector<double> sorted = thresholds;
    std::sort(sorted.begin(), sorted.end());
    const std::size_t chunks = (cfg.trials + cfg.batch_size - 1) / cfg.batch_size;
    std::vector<std::vector<std::size_t>> counts(chunks, std::vector<std::size_t>(sorted.size(), 0));
    std::vector<std::size_t> retries(chunks, 0);

    detail::for_each_chunk(cfg.trials, cfg.batch_size, cfg.workers, [&](std::size_t c, std::size_t first,
                                                                         std::size_t last) {
        DesiredGain gain(p.transmit_antennas);
        auto& count = counts[c];
        for (std::size_t t = first; t < last; ++t) {
            Stream rng(cfg.seed ^ detail::kCommDomain, t);
            double desired = 0.0;
            double interference = 0.0;
            const double s_end = detail::walk_arrivals(rng, s_max, l, cfg.max_retries, retries[c], [&](std::size_t k,
                                                                                                      double s) {
                const double path = detail::path_from_s(s, lambda_pi, beta);
                if (k < l)
                    desired += gain(rng) * path;
                else
                    interference += rng.exponential() * path;
            });
            const double r_end = std::sqrt(s_end / lambda_pi);
            interference = p.total_power() * (interference + far_field_mean(p.lambda, r_end, beta));
            const double sir = p.comm_power * desired / interference;
            // Thresholds are sorted: covered for a prefix.
            for (std::size_t i = 0; i < sorted.size() && sir >= sorted[i]; ++i) ++count[i];
        }
    });

    std::vector<std::size_t> total(sorted.size(), 0);
    McCoverage out;
    for (std::size_t c = 0; c < chunks; ++c) {
        for (std::size_t i = 0; i < sorted.size(); ++i) total[i] += counts[c][i];
        out.diagnostics.retries += retries[c];
    }
    out.curve.method = CoverageMethod::MonteCarlo;
    const double n = static_cast<double>(cfg.trials);
    for (double t : thresholds) {
        const auto i = static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), t) - sorted.begin());
        const double pr = static_cast<double>(total[i]) / n;
        out.curve.thresholds.push_back(t);
        out.curve.values.push_back(pr);
        out.curve.uncertainty.push_back(1.96 * std::sqrt(pr * (1.0 - pr) / n));
    }
    out.trials_used = cfg.trials;
    out.diagnostics.window_radius = radius;
    out.diagnostics.truncation_bias_bound = detail::window_bias_bound(p.lambda, radius, beta);
    return out;
}

inline CoverageCurve mc_coverage(const SystemParams& p, const std::vector<double>& thresholds,
                                 const McConfig& cfg = {}) {
    return mc_coverage_detail(p, thresholds, cfg).curve;
}

/// Radar information rate E[ln(1 + SIR_s)] in nats. BS 1 sits at (r_1, 0);
/// interferer distances are true 2-D distances to it, so the BS-free disk
/// around the target is present without any correction.
inline McResult mc_radar_rate(const SystemParams& p, const McConfig& cfg = {}) {
    p.validate();
    cfg.validate();
    const std::size_t n_cluster = static_cast<std::size_t>(p.sensing_cluster);
    const double beta = p.path_loss;
    TruncationRule rule = cfg.rule;
    rule.path_loss_exponent = beta;
    const double radius = required_radius(p.lambda, std::max(cfg.min_points, n_cluster), cfg.tail_prob, rule);
    const double lambda_pi = p.lambda * std::numbers::pi;
    const double s_max = lambda_pi * radius * radius;
    const double echo = p.rcs * p.receive_antennas * p.sensing_power;

    const std::size_t chunks = (cfg.trials + cfg.batch_size - 1) / cfg.batch_size;
    std::vector<double> sums(chunks, 0.0);
    std::vector<double> squares(chunks, 0.0);
    std::vector<std::size_t> retries(chunks, 0);

    detail::for_each_chunk(cfg.trials, cfg.batch_size, cfg.workers, [&](std::size_t c, std::size_t first,
                                                                         std::size_t last) {
        DesiredGain gain(p.transmit_antennas);
        std::vector<double> xs;
        std::vector<double> ys;
        xs.reserve(last - first);
        ys.reserve(last - first);
        for (std::size_t t = first; t < last; ++t) {
            Stream rng(cfg.seed ^ detail::kSenseDomain, t);
            double r1 = 0.0;
            double path1 = 0.0;
            double desired = 0.0;
            double interference = 0.0;
            const double s_end =
                detail::walk_arrivals(rng, s_max, n_cluster, cfg.max_retries, retries[c], [&](std::size_t k, double s) {
                    const double phi = 2.0 * std::numbers::pi * rng.uniform();
                    const double r2 = s / lambda_pi;
                    if (k == 0) {
                        // Rotate so that BS 1 lies on the positive x axis.
                        r1 = std::sqrt(r2);
                        path1 = detail::path_from_r2(r2, beta);
                        desired += gain(rng) * path1;
                    } else if (k < n_cluster) {
                        desired += gain(rng) * detail::path_from_r2(r2, beta);
                    } else {
                        const double r = std::sqrt(r2);
                        const double d2 = r1 * r1 + r2 - 2.0 * r1 * r * std::cos(phi);
                        interference += rng.exponential() * detail::path_from_r2(d2, beta);
                    }
                });
            const double r_end = std::sqrt(s_end / lambda_pi);
            interference = p.total_power() * (interference + far_field_mean(p.lambda, r_end, beta));
            // SIR_s = X / Y with X free of r_1 and Y = r_1^beta I, the split
            // used by the analytic rate.
            xs.push_back(echo * desired);
            ys.push_back(interference / path1);
        }
        double sum = 0.0;
        double sq = 0.0;
        const std::size_t m = xs.size();
        for (std::size_t k = 0; k < m; ++k) {
            const double y = cfg.decouple_sensing ? ys[(k + 1) % m] : ys[k];
            const double v = std::log1p(xs[k] / y);
            sum += v;
            sq += v * v;
        }
        sums[c] = sum;
        squares[c] = sq;
    });

    double sum = 0.0;
    double sq = 0.0;
    McResult out;
    for (std::size_t c = 0; c < chunks; ++c) {
        sum += sums[c];
        sq += squares[c];
        out.diagnostics.retries += retries[c];
    }
    const double n = static_cast<double>(cfg.trials);
    const double mean = sum / n;
    const double var = cfg.trials > 1 ? std::max(0.0, (sq - n * mean * mean) / (n - 1.0)) : 0.0;
    out.estimate = mean;
    out.ci_half_width = 1.96 * std::sqrt(var / n);
    out.trials_used = cfg.trials;
    out.diagnostics.window_radius = radius;
    out.diagnostics.truncation_bias_bound = detail::window_bias_bound(p.lambda, radius, beta);
    return out;
}

inline RateEstimate to_rate_estimate(const McResult& r) { return {r.estimate, RateMethod::MonteCarlo, r.ci_half_width}; }

}  // namespace cisac
