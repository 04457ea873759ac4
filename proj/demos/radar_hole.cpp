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


// Single-BS radar information rate with and without the BS-free disk
// around the target, across densities.

#include <cstdio>

#include "cisac/montecarlo.hpp"
#include "cisac/sense_analytic.hpp"

int main() {
    cisac::McConfig mc;
    mc.trials = 100000;
    std::printf("%8s %10s %10s %10s\n", "lambda", "hole", "no-hole", "sim");
    for (double lambda : {1e-5, 1e-4, 1e-3, 1e-2}) {
        cisac::SystemParams p;
        p.lambda = lambda;
        const auto sim = cisac::mc_radar_rate(p, mc);
        std::printf("%8.0e %10.5f %10.5f %10.5f\n", lambda, cisac::radar_rate_prop2(p, true).value,
                    cisac::radar_rate_prop2(p, false).value, sim.estimate);
    }
}
