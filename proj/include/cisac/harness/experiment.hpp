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

#pragma once

#include <chrono>
#include <ostream>
#include <string>
#include <vector>

#include "cisac/approx.hpp"
#include "cisac/comm_analytic.hpp"
#include "cisac/harness/config.hpp"
#include "cisac/harness/csv.hpp"
#include "cisac/montecarlo.hpp"
#include "cisac/sense_analytic.hpp"

namespace cisac::harness {

namespace detail {

using Clock = std::chrono::steady_clock;

inline double elapsed_ms(Clock::time_point since) {
    return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

/// Every combination of the sweep axes, outer axis slowest.
inline std::vector<std::vector<double>> sweep_points(const std::vector<SweepAxis>& axes) {
    std::vector<std::vector<double>> points{{}};
    for (const auto& axis : axes) {
        std::vector<std::vector<double>> next;
        for (const auto& p : points)
            for (double v : axis.values) {
                auto q = p;
                q.push_back(v);
                next.push_back(std::move(q));
            }
        points = std::move(next);
    }
    return points;
}

inline void coverage_rows(const ExperimentConfig& cfg, const SystemParams& p, const std::vector<double>& keys,
                          ResultTable& table, std::ostream* log) {
    std::vector<double> thresholds;
    for (double db : cfg.thresholds_db) thresholds.push_back(db_to_linear(db));
    auto push = [&](std::size_t i, std::string method, double value, double ci, double quad, double clamped,
                    double radius, double bias, double ms) {
        ResultRow r;
        r.keys = keys;
        r.keys.push_back(cfg.thresholds_db[i]);
        r.metric = "coverage";
        r.method = std::move(method);
        r.value = value;
        r.uncertainty = ci;
        r.quad_error = quad;
        r.extras = {clamped, radius, bias};
        r.wall_ms = ms;
        table.rows.push_back(std::move(r));
    };
    if (cfg.wants_analytic()) {
        const bool closed = p.comm_cluster == 1 && p.path_loss == 4.0;
        CoverageOptions opt;
        opt.law = cfg.law;
        opt.seed = cfg.mc.seed;
        for (std::size_t i = 0; i < thresholds.size(); ++i) {
            const auto start = Clock::now();
            if (closed) {
                const double v = coverage_prop1(p, thresholds[i]);
                push(i, to_string(CoverageMethod::Prop1Closed), v, 0.0, 0.0, 0.0, 0.0, 0.0, elapsed_ms(start));
                continue;
            }
            const auto v = coverage_theorem1_detail(p, thresholds[i], opt);
            if (v.clamped && log)
                *log << "coverage: analytic value " << format_number(v.raw) << " at T = "
                     << format_number(cfg.thresholds_db[i]) << " dB clamped to [0, 1]\n";
            // Integration over the distances by sampling (L >= 3) has a CI.
            const bool sampled = p.comm_cluster >= 3;
            push(i, to_string(CoverageMethod::Theorem1), v.value, sampled ? v.uncertainty : 0.0,
                 sampled ? 0.0 : v.uncertainty, v.clamped ? 1.0 : 0.0, 0.0, 0.0, elapsed_ms(start));
        }
    }
    if (cfg.wants_mc()) {
        const auto start = Clock::now();
        const auto mc = mc_coverage_detail(p, thresholds, cfg.mc);
        const double ms = elapsed_ms(start) / static_cast<double>(thresholds.size());
        for (std::size_t i = 0; i < thresholds.size(); ++i)
            push(i, to_string(CoverageMethod::MonteCarlo), mc.curve.values[i], mc.curve.uncertainty[i], 0.0, 0.0,
                 mc.diagnostics.window_radius, mc.diagnostics.truncation_bias_bound, ms);
    }
}

inline void rate_rows(const ExperimentConfig& cfg, const SystemParams& p, const std::vector<double>& keys,
                      ResultTable& table) {
    auto push = [&](const RateEstimate& e, double ci, double quad, double radius, double bias, double ms) {
        ResultRow r;
        r.keys = keys;
        r.metric = "radar-rate";
        r.method = to_string(e.method);
        r.value = e.value;
        r.uncertainty = ci;
        r.quad_error = quad;
        r.extras = {radius, bias};
        r.wall_ms = ms;
        table.rows.push_back(std::move(r));
    };
    if (cfg.wants_analytic()) {
        if (p.sensing_cluster == 1) {
            for (bool hole : {true, false}) {
                const auto start = Clock::now();
                const auto e = radar_rate_prop2(p, hole);
                push(e, 0.0, e.uncertainty, 0.0, 0.0, elapsed_ms(start));
            }
        } else {
            const auto start = Clock::now();
            const auto e = radar_rate_theorem2(p);
            push(e, 0.0, e.uncertainty, 0.0, 0.0, elapsed_ms(start));
        }
    }
    if (cfg.wants_mc()) {
        const auto start = Clock::now();
        const auto mc = mc_radar_rate(p, cfg.mc);
        push(to_rate_estimate(mc), mc.ci_half_width, 0.0, mc.diagnostics.window_radius,
             mc.diagnostics.truncation_bias_bound, elapsed_ms(start));
    }
}

}  // namespace detail

/// Runs every sweep point and method; rows come out in sweep order.
inline ResultTable run_experiment(const ExperimentConfig& cfg, std::ostream* log = nullptr) {
    cfg.validate();
    ResultTable table;
    for (const auto& axis : cfg.sweep) table.key_names.push_back(axis.name);

    switch (cfg.metric) {
        case Metric::Coverage:
            table.key_names.emplace_back("T_db");
            table.extra_names = {"clamped", "window_radius", "truncation_bias_bound"};
            break;
        case Metric::RadarRate: table.extra_names = {"window_radius", "truncation_bias_bound"}; break;
        case Metric::FitAlpha:
            table.key_names.emplace_back("shape");
            table.extra_names = {"ks_distance", "grid_resolution"};
            break;
        case Metric::VerifyConjecture1: table.key_names.emplace_back("l"); break;
    }

    for (const auto& point : detail::sweep_points(cfg.sweep)) {
        SystemParams p = cfg.params;
        for (std::size_t i = 0; i < point.size(); ++i) set_parameter(p, cfg.sweep[i].name, point[i], "sweep");
        // A fitted alpha belongs to one antenna count: refit unless given.
        if (!cfg.params.alpha_fit) p.alpha_fit.reset();
        try {
            p.validate();
        } catch (const ConfigError& e) {
            throw UsageError("config", std::string("sweep point: ") + e.what());
        }

        switch (cfg.metric) {
            case Metric::Coverage: detail::coverage_rows(cfg, with_fitted_alpha(p), point, table, log); break;
            case Metric::RadarRate: detail::rate_rows(cfg, p, point, table); break;
            case Metric::FitAlpha: {
                const auto start = detail::Clock::now();
                const auto fit = fit_alpha(p.gamma_shape());
                ResultRow r;
                r.keys = point;
                r.keys.push_back(fit.shape);
                r.metric = "alpha_star";
                r.method = "ks-fit";
                r.value = fit.alpha_star;
                r.extras = {fit.ks_distance, fit.grid_resolution};
                r.wall_ms = detail::elapsed_ms(start);
                table.rows.push_back(std::move(r));
                break;
            }
            case Metric::VerifyConjecture1: {
                const auto start = detail::Clock::now();
                Conjecture1Check check;
                check.cluster = p.comm_cluster;
                check.path_loss_exponent = p.path_loss;
                check.lambda = p.lambda;
                check.shape = p.gamma_shape();
                check.trials = cfg.mc.trials;
                check.seed = cfg.mc.seed;
                ResultRow r;
                r.keys = point;
                r.keys.push_back(p.comm_cluster);
                r.metric = "ks_two_sample";
                r.method = to_string(CoverageMethod::MonteCarlo);
                r.value = verify_conjecture1(check);
                r.wall_ms = detail::elapsed_ms(start);
                table.rows.push_back(std::move(r));
                break;
            }
        }
    }
    return table;
}

/// Fixed parameters, for the metadata file.
inline std::string describe(const SystemParams& p) {
    std::string s = "lambda=" + format_number(p.lambda) + " mt=" + std::to_string(p.transmit_antennas) +
                    " mr=" + std::to_string(p.receive_antennas) + " beta=" + format_number(p.path_loss) +
                    " ps=" + format_number(p.sensing_power) + " pc=" + format_number(p.comm_power) +
                    " rcs=" + format_number(p.rcs) + " l=" + std::to_string(p.comm_cluster) +
                    " n=" + std::to_string(p.sensing_cluster);
    if (p.alpha_fit) s += " alpha=" + format_number(*p.alpha_fit);
    return s;
}

}  // namespace cisac::harness
