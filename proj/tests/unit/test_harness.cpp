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


#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "cisac/harness/config.hpp"
#include "cisac/harness/csv.hpp"
#include "cisac/harness/experiment.hpp"
#include "cisac/harness/figures.hpp"
#include "cisac/harness/plotdata.hpp"

namespace {

using namespace cisac;
using namespace cisac::harness;

std::string csv_of(const ResultTable& t) {
    std::ostringstream out;
    write_csv(t, out);
    return out.str();
}

std::string usage_message(const std::string& text) {
    try {
        parse_config(text, "exp.cfg").validate();
    } catch (const UsageError& e) {
        return e.what();
    }
    return "";
}

TEST(Config, ParsesEveryField) {
    const auto cfg = parse_config(R"(
# coverage for a pair
metric = coverage
method = both     # paired rows
lambda = 2e-4
mt = 8
mr = 4
beta = 3.5
ps = 0.3
l = 2
t_db = -4:4:4
sweep = mt: 6, 8
trials = 5000
seed = 9
law = marginal
output = out.csv
)");
    EXPECT_EQ(cfg.metric, Metric::Coverage);
    EXPECT_EQ(cfg.method, Method::Both);
    EXPECT_EQ(cfg.params.lambda, 2e-4);
    EXPECT_EQ(cfg.params.transmit_antennas, 8);
    EXPECT_EQ(cfg.params.receive_antennas, 4);
    EXPECT_EQ(cfg.params.path_loss, 3.5);
    EXPECT_DOUBLE_EQ(cfg.params.sensing_power, 0.3);
    EXPECT_DOUBLE_EQ(cfg.params.comm_power, 0.7);
    EXPECT_EQ(cfg.params.comm_cluster, 2);
    EXPECT_EQ(cfg.thresholds_db, (std::vector<double>{-4, 0, 4}));
    ASSERT_EQ(cfg.sweep.size(), 1u);
    EXPECT_EQ(cfg.sweep[0].name, "mt");
    EXPECT_EQ(cfg.sweep[0].values, (std::vector<double>{6, 8}));
    EXPECT_EQ(cfg.mc.trials, 5000u);
    EXPECT_EQ(cfg.mc.seed, 9u);
    EXPECT_EQ(cfg.law, DistanceLaw::MarginalProduct);
    EXPECT_EQ(cfg.output, "out.csv");
    EXPECT_NO_THROW(cfg.validate());
}

TEST(Config, LinePreciseErrors) {
    EXPECT_NE(usage_message("metric = coverage\nmt = ten\n").find("exp.cfg:2: key 'mt'"), std::string::npos);
    EXPECT_NE(usage_message("\n\nbogus = 1\n").find("exp.cfg:3"), std::string::npos);
    EXPECT_NE(usage_message("sweep = rho: 1, 2\n").find("'rho' is not a parameter"), std::string::npos);
    EXPECT_NE(usage_message("just words\n").find("exp.cfg:1: expected 'key = value'"), std::string::npos);
    EXPECT_NE(usage_message("mt = 9.5\n").find("exp.cfg:1: key 'mt': expected an integer"), std::string::npos);
    EXPECT_NE(usage_message("method = analytic\ntrials = 10\n").find("trials"), std::string::npos);
    EXPECT_NE(usage_message("lambda = -1\n").find("lambda"), std::string::npos);
}

TEST(Config, RangeRounding) {
    const auto v = parse_range("0.1:0.9:0.1", "ps");
    ASSERT_EQ(v.size(), 9u);
    EXPECT_EQ(v[2], 0.3);
    EXPECT_EQ(v.back(), 0.9);
    EXPECT_EQ(parse_range("-10:20:2").size(), 16u);
    EXPECT_THROW(parse_range("1:0:1"), UsageError);
    EXPECT_THROW(parse_range("1:2"), UsageError);
}

TEST(Csv, NumberFormatRoundTrips) {
    for (double v : {0.1, 1e-300, 123456789.123, -2.5, 0.0})
        EXPECT_EQ(parse_number(format_number(v)), v);
    EXPECT_EQ(format_number(0.5), "0.5");
    EXPECT_TRUE(std::isnan(parse_number("nan")));
    EXPECT_THROW(parse_number("1,5"), UsageError);
}

TEST(Experiment, ConfigRunCsvRoundTrip) {
    const auto cfg = parse_config("metric = coverage\nmethod = both\nl = 2\nt_db = -5:15:10\ntrials = 4000\n"
                                  "sweep = mt: 6, 10\n");
    const auto table = run_experiment(cfg);
    EXPECT_EQ(table.rows.size(), 2u * 3u * 2u);
    std::istringstream in(csv_of(table));
    const auto back = read_csv(in);
    EXPECT_EQ(back.key_names, table.key_names);
    EXPECT_EQ(back.extra_names, table.extra_names);
    EXPECT_EQ(back.rows, table.rows);
}

TEST(Experiment, SameSeedSameBytes) {
    const auto cfg = parse_config("metric = radar-rate\nmethod = mc\nn = 2\ntrials = 3000\nseed = 4\nsweep = ps: 0.2, 0.8\n");
    const auto a = csv_of(run_experiment(cfg));
    const auto b = csv_of(run_experiment(cfg));
    EXPECT_EQ(a, b);
    auto other = cfg;
    other.mc.seed = 5;
    EXPECT_NE(a, csv_of(run_experiment(other)));
}

TEST(Experiment, CoverageGrowsWithCluster) {
    auto cfg = parse_config("metric = coverage\nmethod = analytic\nt_db = 0:10:10\nsweep = l: 1, 2\n");
    const auto t = run_experiment(cfg);
    ASSERT_EQ(t.rows.size(), 4u);
    EXPECT_EQ(t.key_names, (std::vector<std::string>{"l", "T_db"}));
    EXPECT_EQ(t.rows[0].method, "prop1-closed");
    EXPECT_EQ(t.rows[2].method, "theorem1");
    EXPECT_GT(t.rows[2].value, t.rows[0].value);
    EXPECT_GT(t.rows[3].value, t.rows[1].value);
}

TEST(Experiment, FitAlphaRow) {
    const auto t = run_experiment(parse_config("metric = fit-alpha\nmt = 10\n"));
    ASSERT_EQ(t.rows.size(), 1u);
    EXPECT_EQ(t.rows[0].keys, (std::vector<double>{9}));
    EXPECT_EQ(t.rows[0].value, fit_alpha(9).alpha_star);
    EXPECT_EQ(t.rows[0].extras[0], fit_alpha(9).ks_distance);
}

TEST(Experiment, SweepPointErrorsAreUsageErrors) {
    const auto cfg = parse_config("metric = coverage\nsweep = mt: 1, 4\n");
    EXPECT_THROW(run_experiment(cfg), UsageError);
}

TEST(PlotData, EmptyTableIsHeaderOnly) {
    ResultTable t;
    t.key_names = {"T_db", "l"};
    std::ostringstream out;
    emit_plotdata(t, {"T_db", "l", "value"}, out);
    EXPECT_EQ(out.str(), "T_db,l,method,value,ci\n");
}

TEST(PlotData, ResidualColumnForPairedRows) {
    ResultTable t;
    t.key_names = {"T_db"};
    auto row = [](double x, const char* method, double v, double ci) {
        ResultRow r;
        r.keys = {x};
        r.metric = "coverage";
        r.method = method;
        r.value = v;
        r.uncertainty = ci;
        return r;
    };
    t.rows = {row(0, "prop1-closed", 0.75, 0), row(5, "prop1-closed", 0.5, 0), row(0, "monte-carlo", 0.5, 0.01),
              row(5, "monte-carlo", 0.625, 0.02)};
    std::ostringstream out;
    emit_plotdata(t, {"T_db", "", "value"}, out);
    EXPECT_EQ(out.str(),
              "T_db,method,value,ci,residual\n"
              "0,prop1-closed,0.75,0,0.25\n"
              "5,prop1-closed,0.5,0,-0.125\n"
              "0,monte-carlo,0.5,0.01,\n"
              "5,monte-carlo,0.625,0.02,\n");
}

TEST(PlotData, UnknownColumn) {
    ResultTable t;
    t.key_names = {"T_db"};
    std::ostringstream out;
    EXPECT_THROW(emit_plotdata(t, {"rho", "", "value"}, out), UsageError);
    EXPECT_THROW(emit_plotdata(t, {"T_db", "mt", "value"}, out), UsageError);
}

TEST(Figures, KnownNumbers) {
    for (int n = 4; n <= 9; ++n) {
        const auto f = figure(n);
        EXPECT_EQ(f.config.method, Method::Both);
        EXPECT_NO_THROW(f.config.validate());
    }
    EXPECT_EQ(figure(8).layout.x, "n");
    EXPECT_THROW(figure(3), UsageError);
    EXPECT_THROW(figure(10), UsageError);
}

}  // namespace
