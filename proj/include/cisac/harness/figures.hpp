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

// Canned experiments behind `reproduce-fig <4..9>`:
//
//   fig4  coverage vs T_db, one series per L = 1..5
//   fig5  coverage vs T_db, L = 1, one series per M_t in {4, 6, 8, 10}
//   fig6  same as fig5 with L = 2
//   fig7  coverage vs T_db, L = 1, one series per lambda in {1e-5, 1e-4, 1e-3}
//   fig8  radar rate vs N = 1..6, one series per M_t in {6, 8, 10}
//   fig9  radar rate vs p_s = 0.1..0.9, N = 1, with and without the hole
//
// All use lambda = 1e-4 unless swept and method = both.

#pragma once

#include <string>

#include "cisac/errors.hpp"
#include "cisac/harness/config.hpp"
#include "cisac/harness/plotdata.hpp"

namespace cisac::harness {

struct FigureSpec {
    ExperimentConfig config;
    PlotLayout layout;
};

inline FigureSpec figure(int number) {
    FigureSpec f;
    auto& c = f.config;
    c.method = Method::Both;
    c.params.lambda = 1e-4;
    switch (number) {
        case 4:
            c.metric = Metric::Coverage;
            c.sweep = {{"l", {1, 2, 3, 4, 5}}};
            f.layout = {"T_db", "l", "value"};
            break;
        case 5:
        case 6:
            c.metric = Metric::Coverage;
            c.params.comm_cluster = number == 5 ? 1 : 2;
            c.sweep = {{"mt", {4, 6, 8, 10}}};
            f.layout = {"T_db", "mt", "value"};
            break;
        case 7:
            c.metric = Metric::Coverage;
            c.sweep = {{"lambda", {1e-5, 1e-4, 1e-3}}};
            f.layout = {"T_db", "lambda", "value"};
            break;
        case 8:
            c.metric = Metric::RadarRate;
            c.sweep = {{"mt", {6, 8, 10}}, {"n", {1, 2, 3, 4, 5, 6}}};
            f.layout = {"n", "mt", "value"};
            break;
        case 9:
            c.metric = Metric::RadarRate;
            c.params.sensing_cluster = 1;
            c.sweep = {{"ps", parse_range("0.1:0.9:0.1", "ps")}};
            f.layout = {"ps", "", "value"};
            break;
        default: throw UsageError("figures", "no reproduction for figure " + std::to_string(number) + "; use 4..9");
    }
    return f;
}

}  // namespace cisac::harness
