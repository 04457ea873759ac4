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

#include <random>
#include <string>

#include "cisac/errors.hpp"
#include "cisac/rng.hpp"

namespace cisac {

// Small-scale fading at distribution level. Zero-forcing with one sensing and
// one communication constraint leaves the served link a Gamma(M_t - 1, 1)
// gain; every interfering link, after moment matching of its two-stream
// power split, is a single unit-mean exponential scaled by the total power.

enum class FadingKind { DesiredGamma, InterferenceExponential };

struct FadingLaw {
    FadingKind kind = FadingKind::InterferenceExponential;
    double shape = 1.0;

    static FadingLaw desired(int transmit_antennas) {
        if (transmit_antennas < 2)
            throw DomainError("fading", "zero-forcing two streams needs M_t >= 2, got " +
                                            std::to_string(transmit_antennas));
        return {FadingKind::DesiredGamma, static_cast<double>(transmit_antennas - 1)};
    }
    static FadingLaw interference() { return {FadingKind::InterferenceExponential, 1.0}; }

    double mean() const { return shape; }
    double variance() const { return shape; }
};

/// Reusable Gamma(M_t - 1, 1) sampler.
class DesiredGain {
public:
    explicit DesiredGain(int transmit_antennas)
        : law_(FadingLaw::desired(transmit_antennas).shape, 1.0) {}

    double operator()(Stream& rng) { return law_(rng); }

private:
    std::gamma_distribution<double> law_;
};

inline double sample_desired_gain(int transmit_antennas, Stream& rng) {
    return DesiredGain(transmit_antennas)(rng);
}

inline double sample_interference_gain(Stream& rng) { return rng.exponential(); }

}  // namespace cisac
