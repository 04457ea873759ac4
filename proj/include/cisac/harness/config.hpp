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
 * \file config.hpp
 *
 * Experiment description and its key = value file format.
 *
 *     # comment
 *     metric  = coverage          # coverage | radar-rate | fit-alpha | verify-conjecture1
 *     method  = both              # analytic | mc | both
 *     lambda  = 1e-4
 *     mt      = 10                # also mr, beta, ps, rcs, l, n, alpha
 *     t_db    = -10:20:2          # LO:HI:STEP, dB
 *     law     = joint             # joint | marginal, distance law of the L = 2 integral
 *     sweep   = l: 1, 2, 3        # up to two sweep lines; values or LO:HI:STEP
 *     trials  = 1000000
 *     seed    = 1
 *     max_retries = 8             # also batch_size, workers, min_points, tail_prob
 *     output  = results.csv
 *
 * One key per line. Parameters are given in linear units except t_db.
 */

#pragma once

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "cisac/comm_analytic.hpp"
#include "cisac/errors.hpp"
#include "cisac/montecarlo.hpp"
#include "cisac/params.hpp"

namespace cisac::harness {

enum class Metric { Coverage, RadarRate, FitAlpha, VerifyConjecture1 };
enum class Method { Analytic, Mc, Both };

inline std::string to_string(Metric m) {
    switch (m) {
        case Metric::Coverage: return "coverage";
        case Metric::RadarRate: return "radar-rate";
        case Metric::FitAlpha: return "fit-alpha";
        case Metric::VerifyConjecture1: return "verify-conjecture1";
    }
    return "unknown";
}

inline std::string to_string(Method m) {
    switch (m) {
        case Method::Analytic: return "analytic";
        case Method::Mc: return "mc";
        case Method::Both: return "both";
    }
    return "unknown";
}

/// Swept SystemParams field. `name` is one of the parameter keys.
struct SweepAxis {
    std::string name;
    std::vector<double> values;
};

struct ExperimentConfig {
    Metric metric = Metric::Coverage;
    Method method = Method::Analytic;
    SystemParams params{};
    std::vector<SweepAxis> sweep;  ///< outer axis first; at most two
    std::vector<double> thresholds_db;
    McConfig mc{};
    bool trials_given = false;
    DistanceLaw law = DistanceLaw::JointOrdered;
    std::string output;

    ExperimentConfig() {
        mc.trials = 1000000;
        for (int db = -10; db <= 20; db += 2) thresholds_db.push_back(db);
    }

    bool wants_analytic() const { return method != Method::Mc; }
    bool wants_mc() const { return method != Method::Analytic; }

    void validate() const;
};

inline const std::vector<std::string>& parameter_keys() {
    static const std::vector<std::string> keys{"lambda", "mt", "mr", "beta", "ps", "rcs", "l", "n", "alpha"};
    return keys;
}

namespace detail {

inline std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

inline double parse_double(std::string_view text, const std::string& where) {
    const std::string t = trim(text);
    double v = 0.0;
    const auto res = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || res.ec != std::errc{} || res.ptr != t.data() + t.size())
        throw UsageError("config", where + ": expected a number, got '" + t + "'");
    return v;
}

inline long long parse_integer(std::string_view text, const std::string& where) {
    const std::string t = trim(text);
    long long v = 0;
    const auto res = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || res.ec != std::errc{} || res.ptr != t.data() + t.size())
        throw UsageError("config", where + ": expected an integer, got '" + t + "'");
    return v;
}

inline bool is_integer_key(const std::string& key) { return key == "mt" || key == "mr" || key == "l" || key == "n"; }

}  // namespace detail

/// "LO:HI:STEP", inclusive of HI up to rounding.
inline std::vector<double> parse_range(std::string_view text, const std::string& where = "range") {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : text) {
        if (c == ':') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    if (parts.size() != 3) throw UsageError("config", where + ": expected LO:HI:STEP, got '" + std::string(text) + "'");
    const double lo = detail::parse_double(parts[0], where);
    const double hi = detail::parse_double(parts[1], where);
    const double step = detail::parse_double(parts[2], where);
    if (!(step > 0.0) || hi < lo) throw UsageError("config", where + ": need STEP > 0 and HI >= LO");
    std::vector<double> out;
    const auto count = static_cast<long long>(std::floor((hi - lo) / step + 1e-9));
    for (long long i = 0; i <= count; ++i) {
        // Trim accumulated binary noise: 0.1 + 2 * 0.1 should read 0.3.
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.12g", lo + static_cast<double>(i) * step);
        out.push_back(std::strtod(buf, nullptr));
    }
    return out;
}

/// Comma-separated values or a single LO:HI:STEP range.
inline std::vector<double> parse_value_list(std::string_view text, const std::string& where) {
    if (text.find(':') != std::string_view::npos) return parse_range(text, where);
    std::vector<double> out;
    std::string cur;
    for (char c : std::string(text) + ",") {
        if (c == ',') {
            out.push_back(detail::parse_double(cur, where));
            cur.clear();
        } else {
            cur += c;
        }
    }
    return out;
}

/// Sets one SystemParams field by key.
inline void set_parameter(SystemParams& p, const std::string& key, double v, const std::string& where) {
    auto as_int = [&] {
        if (v != std::floor(v)) throw UsageError("config", where + ": '" + key + "' must be an integer");
        return static_cast<int>(v);
    };
    if (key == "lambda") p.lambda = v;
    else if (key == "mt") p.transmit_antennas = as_int();
    else if (key == "mr") p.receive_antennas = as_int();
    else if (key == "beta") p.path_loss = v;
    else if (key == "ps") p.set_sensing_power(v);
    else if (key == "rcs") p.rcs = v;
    else if (key == "l") p.comm_cluster = as_int();
    else if (key == "n") p.sensing_cluster = as_int();
    else if (key == "alpha") p.alpha_fit = v;
    else throw UsageError("config", where + ": unknown parameter '" + key + "'");
}

/// Applies `key = value`. `where` prefixes error messages (file and line).
inline void set_field(ExperimentConfig& cfg, const std::string& key, const std::string& value, const std::string& where) {
    const std::string at = where + ": key '" + key + "'";
    if (key == "metric") {
        if (value == "coverage") cfg.metric = Metric::Coverage;
        else if (value == "radar-rate") cfg.metric = Metric::RadarRate;
        else if (value == "fit-alpha") cfg.metric = Metric::FitAlpha;
        else if (value == "verify-conjecture1") cfg.metric = Metric::VerifyConjecture1;
        else throw UsageError("config", at + ": unknown metric '" + value + "'");
    } else if (key == "method") {
        if (value == "analytic") cfg.method = Method::Analytic;
        else if (value == "mc") cfg.method = Method::Mc;
        else if (value == "both") cfg.method = Method::Both;
        else throw UsageError("config", at + ": unknown method '" + value + "'");
    } else if (key == "law") {
        if (value == "joint") cfg.law = DistanceLaw::JointOrdered;
        else if (value == "marginal") cfg.law = DistanceLaw::MarginalProduct;
        else throw UsageError("config", at + ": expected joint or marginal");
    } else if (key == "t_db") {
        cfg.thresholds_db = parse_range(value, at);
    } else if (key == "sweep") {
        const auto colon = value.find(':');
        if (colon == std::string::npos) throw UsageError("config", at + ": expected 'name: values'");
        SweepAxis axis{detail::trim(value.substr(0, colon)), parse_value_list(value.substr(colon + 1), at)};
        bool known = false;
        for (const auto& k : parameter_keys()) known = known || k == axis.name;
        if (!known) throw UsageError("config", at + ": '" + axis.name + "' is not a parameter");
        if (cfg.sweep.size() == 2) throw UsageError("config", at + ": at most two sweep axes");
        cfg.sweep.push_back(std::move(axis));
    } else if (key == "trials") {
        const auto v = detail::parse_integer(value, at);
        if (v < 1) throw UsageError("config", at + ": must be >= 1");
        cfg.mc.trials = static_cast<std::size_t>(v);
        cfg.trials_given = true;
    } else if (key == "seed") {
        cfg.mc.seed = static_cast<std::uint64_t>(detail::parse_integer(value, at));
    } else if (key == "batch_size") {
        cfg.mc.batch_size = static_cast<std::size_t>(detail::parse_integer(value, at));
    } else if (key == "workers") {
        cfg.mc.workers = static_cast<unsigned>(detail::parse_integer(value, at));
    } else if (key == "min_points") {
        cfg.mc.min_points = static_cast<std::size_t>(detail::parse_integer(value, at));
    } else if (key == "max_retries") {
        cfg.mc.max_retries = static_cast<int>(detail::parse_integer(value, at));
    } else if (key == "tail_prob") {
        cfg.mc.tail_prob = detail::parse_double(value, at);
    } else if (key == "output") {
        cfg.output = value;
    } else {
        if (detail::is_integer_key(key)) detail::parse_integer(value, at);
        set_parameter(cfg.params, key, detail::parse_double(value, at), where);
    }
}

inline void ExperimentConfig::validate() const {
    if (method == Method::Analytic && trials_given)
        throw UsageError("config", "trials: not allowed with method = analytic");
    if (metric == Metric::Coverage && thresholds_db.empty()) throw UsageError("config", "t_db: empty threshold grid");
    for (const auto& axis : sweep)
        if (axis.values.empty()) throw UsageError("config", "sweep " + axis.name + ": no values");
    try {
        params.validate();
        mc.validate();
    } catch (const ConfigError& e) {
        throw UsageError("config", e.what());
    }
}

inline ExperimentConfig parse_config(std::string_view text, const std::string& source = "<config>") {
    ExperimentConfig cfg;
    std::istringstream in{std::string(text)};
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const std::string body = detail::trim(line);
        if (body.empty()) continue;
        const std::string where = source + ":" + std::to_string(number);
        const auto eq = body.find('=');
        if (eq == std::string::npos) throw UsageError("config", where + ": expected 'key = value'");
        const std::string key = detail::trim(body.substr(0, eq));
        const std::string value = detail::trim(body.substr(eq + 1));
        if (key.empty() || value.empty()) throw UsageError("config", where + ": expected 'key = value'");
        set_field(cfg, key, value, where);
    }
    return cfg;
}

inline ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("config", "cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str(), path);
}

}  // namespace cisac::harness
