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


// Coverage of a two-BS cluster: integral against simulation.

#include <cstdio>

#include "cisac/approx.hpp"
#include "cisac/comm_analytic.hpp"
#include "cisac/montecarlo.hpp"

int main() {
    cisac::SystemParams p;
    p.comm_cluster = 2;
    p = cisac::with_fitted_alpha(p);

    cisac::McConfig mc;
    mc.trials = 100000;

    std::printf("alpha* = %.4f\n%6s %10s %10s\n", *p.alpha_fit, "T_dB", "analytic", "sim");
    for (double db = -10; db <= 20; db += 5) {
        const double t = cisac::db_to_linear(db);
        const auto sim = cisac::mc_coverage(p, {t}, mc);
        std::printf("%6.1f %10.4f %10.4f\n", db, cisac::coverage_theorem1(p, t), sim.values[0]);
    }
}
