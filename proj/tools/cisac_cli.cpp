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

// cisac command line: coverage, radar-rate, fit-alpha, conjecture1 and
// reproduce-fig. Exit codes: 0 ok, 2 usage, 3 convergence, 4 configuration.

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cisac/errors.hpp"
#include "cisac/harness/config.hpp"
#include "cisac/harness/csv.hpp"
#include "cisac/harness/experiment.hpp"
#include "cisac/harness/figures.hpp"
#include "cisac/harness/plotdata.hpp"

namespace {

using namespace cisac;
using namespace cisac::harness;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitConvergence = 3;
constexpr int kExitConfig = 4;

constexpr const char* kOutDirEnv = "CISAC_OUT_DIR";

// Flags shared by every subcommand. Unset flags leave the config alone.
struct Overrides {
    std::string config;
    std::optional<long long> seed;
    std::optional<long long> trials;
    std::string out;
    std::string method;
    std::string t_db;
    std::optional<double> lambda, beta, ps;
    std::optional<int> mt, mr, l, n;

    void attach(CLI::App* app) {
        app->add_option("--config", config, "key = value experiment file");
        app->add_option("--seed", seed, "RNG seed");
        app->add_option("--trials", trials, "Monte Carlo trials");
        app->add_option("--out", out, "output file (directory for reproduce-fig)");
        app->add_option("--method", method, "analytic | mc | both");
        app->add_option("--t-db", t_db, "threshold grid LO:HI:STEP in dB");
        app->add_option("--lambda", lambda, "BS density per m^2");
        app->add_option("--mt", mt, "transmit antennas");
        app->add_option("--mr", mr, "receive antennas");
        app->add_option("--beta", beta, "path-loss exponent");
        app->add_option("--ps", ps, "sensing power share");
        app->add_option("--l", l, "communication cluster size");
        app->add_option("--n", n, "sensing cluster size");
    }

    void apply(ExperimentConfig& cfg) const {
        auto set = [&](const char* key, const std::string& v) { set_field(cfg, key, v, "flag --" + std::string(key)); };
        if (seed) set("seed", std::to_string(*seed));
        if (trials) set("trials", std::to_string(*trials));
        if (!method.empty()) set("method", method);
        if (!t_db.empty()) set("t_db", t_db);
        if (lambda) set_parameter(cfg.params, "lambda", *lambda, "flag --lambda");
        if (mt) set_parameter(cfg.params, "mt", *mt, "flag --mt");
        if (mr) set_parameter(cfg.params, "mr", *mr, "flag --mr");
        if (beta) set_parameter(cfg.params, "beta", *beta, "flag --beta");
        if (ps) set_parameter(cfg.params, "ps", *ps, "flag --ps");
        if (l) set_parameter(cfg.params, "l", *l, "flag --l");
        if (n) set_parameter(cfg.params, "n", *n, "flag --n");
        if (!out.empty()) cfg.output = out;
    }
};

std::string utc_now() {
    const std::time_t t = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

std::string default_dir() {
    const char* env = std::getenv(kOutDirEnv);
    return env ? env : "";
}

void write_outputs(const ResultTable& table, const ExperimentConfig& cfg, const std::string& path,
                   const std::string& started, const std::string& command) {
    write_csv_file(table, path);
    write_metadata(table, path + ".meta",
                   {{"started_utc", started},
                    {"command", command},
                    {"metric", to_string(cfg.metric)},
                    {"method", to_string(cfg.method)},
                    {"params", describe(cfg.params)},
                    {"seed", std::to_string(cfg.mc.seed)},
                    {"trials", std::to_string(cfg.mc.trials)}});
}

int run_single(Metric metric, const Overrides& o, const std::string& command) {
    ExperimentConfig cfg = o.config.empty() ? ExperimentConfig{} : load_config(o.config);
    cfg.metric = metric;
    o.apply(cfg);
    const std::string started = utc_now();
    const auto table = run_experiment(cfg, &std::cerr);

    std::string path = cfg.output;
    if (path.empty() && !default_dir().empty())
        path = (std::filesystem::path(default_dir()) / (to_string(metric) + ".csv")).string();
    if (path.empty()) {
        write_csv(table, std::cout);
    } else {
        write_outputs(table, cfg, path, started, command);
        std::cerr << "wrote " << path << '\n';
    }
    return kExitOk;
}

int run_figure(int number, const Overrides& o, const std::string& command) {
    auto spec = figure(number);
    if (!o.config.empty()) throw UsageError("cli", "reproduce-fig does not take --config");
    Overrides local = o;
    local.out.clear();
    local.apply(spec.config);

    std::string dir = !o.out.empty() ? o.out : default_dir();
    if (dir.empty()) dir = ".";
    std::filesystem::create_directories(dir);
    const std::string started = utc_now();
    const auto table = run_experiment(spec.config, &std::cerr);
    const auto base = std::filesystem::path(dir) / ("fig" + std::to_string(number));
    write_outputs(table, spec.config, base.string() + "_results.csv", started, command);
    emit_plotdata_file(table, spec.layout, base.string() + ".csv");
    std::cerr << "wrote " << base.string() << ".csv\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cisac: coverage and radar information rate of cooperative ISAC networks"};
    app.require_subcommand(1);

    Overrides o;
    auto* coverage = app.add_subcommand("coverage", "communication coverage probability over a threshold grid");
    auto* rate = app.add_subcommand("radar-rate", "radar information rate in nats");
    auto* fit = app.add_subcommand("fit-alpha", "K-S fit of alpha for Gamma(Q, 1/Q), Q = M_t - 1");
    auto* conj = app.add_subcommand("conjecture1", "two-sample K-S check of the fading-sum collapse");
    auto* repro = app.add_subcommand("reproduce-fig", "regenerate figure data (4..9)");
    int figure_number = 0;
    repro->add_option("figure", figure_number, "figure number 4..9")->required();
    for (auto* sub : {coverage, rate, fit, conj, repro}) o.attach(sub);

    std::string command;
    for (int i = 0; i < argc; ++i) command += (i ? " " : "") + std::string(argv[i]);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (coverage->parsed()) return run_single(Metric::Coverage, o, command);
        if (rate->parsed()) return run_single(Metric::RadarRate, o, command);
        if (fit->parsed()) return run_single(Metric::FitAlpha, o, command);
        if (conj->parsed()) return run_single(Metric::VerifyConjecture1, o, command);
        if (repro->parsed()) return run_figure(figure_number, o, command);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ConvergenceError& e) {
        std::cerr << "convergence error: " << e.what() << " (estimate " << e.estimate() << ", error bound "
                  << e.error_bound() << ")\n";
        return kExitConvergence;
    } catch (const cisac::Error& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return kExitConfig;
    }
    return kExitUsage;
}
