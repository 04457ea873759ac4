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

#include <cmath>
#include <optional>
#include <string>

#include "cisac/errors.hpp"

namespace cisac {

/// Network parameters shared by the communication and sensing models.
/// Powers are in watts with the per-BS total normalized to one.
struct SystemParams {
    double lambda = 1e-4;        ///< BS density, BS/m^2
    int transmit_antennas = 10;  ///< M_t
    int receive_antennas = 6;    ///< M_r
    double path_loss = 4.0;      ///< beta
    double sensing_power = 0.5;  ///< p_s
    double comm_power = 0.5;     ///< p_c
    double rcs = 1.0;            ///< sigma^2, m^2
    int comm_cluster = 1;        ///< L
    int sensing_cluster = 1;     ///< N
    /// Gamma-CDF fit parameter for shape transmit_antennas - 1.
    std::optional<double> alpha_fit;

    double total_power() const { return sensing_power + comm_power; }
    int gamma_shape() const { return transmit_antennas - 1; }

    /// Splits the unit power budget, keeping p_s + p_c = 1.
    SystemParams& set_sensing_power(double ps) {
        sensing_power = ps;
        comm_power = 1.0 - ps;
        return *this;
    }

    void validate() const {
        auto fail = [](const std::string& msg) { throw ConfigError("params", msg); };
        if (!(lambda > 0.0) || !std::isfinite(lambda)) fail("lambda must be positive");
        if (transmit_antennas < 2) fail("transmit_antennas must be >= 2");
        if (receive_antennas < 1) fail("receive_antennas must be >= 1");
        if (!(path_loss > 2.0)) fail("path_loss must exceed 2");
        if (sensing_power < 0.0 || comm_power < 0.0) fail("powers must be nonnegative");
        if (std::abs(total_power() - 1.0) > 1e-9) fail("sensing_power + comm_power must equal 1");
        if (!(rcs > 0.0)) fail("rcs must be positive");
        if (comm_cluster < 1) fail("comm_cluster must be >= 1");
        if (sensing_cluster < 1) fail("sensing_cluster must be >= 1");
        if (alpha_fit && !(*alpha_fit > 0.0)) fail("alpha_fit must be positive");
    }
};

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double x) { return 10.0 * std::log10(x); }

}  // namespace cisac
