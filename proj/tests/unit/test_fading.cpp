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


#include <algorithm>
#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "cisac/fading.hpp"
#include "cisac/specfun.hpp"

namespace {

using namespace cisac;

struct Moments {
    double mean = 0.0, variance = 0.0;
};

Moments moments(const std::vector<double>& xs) {
    double m = 0.0, m2 = 0.0;
    for (double x : xs) m += x;
    m /= xs.size();
    for (double x : xs) m2 += (x - m) * (x - m);
    return {m, m2 / (xs.size() - 1)};
}

template <class Cdf>
double ks_against(std::vector<double> xs, Cdf cdf) {
    std::sort(xs.begin(), xs.end());
    const double n = static_cast<double>(xs.size());
    double d = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double f = cdf(xs[i]);
        d = std::max({d, f - i / n, (i + 1) / n - f});
    }
    return d;
}

std::vector<double> desired_draws(int mt, std::size_t n) {
    Stream rng(11, 0);
    DesiredGain gain(mt);
    std::vector<double> xs(n);
    for (auto& x : xs) x = gain(rng);
    return xs;
}

TEST(FadingLaw, Shapes) {
    EXPECT_EQ(FadingLaw::desired(10).shape, 9.0);
    EXPECT_EQ(FadingLaw::interference().mean(), 1.0);
    EXPECT_THROW(FadingLaw::desired(1), DomainError);
    Stream rng(1, 0);
    EXPECT_THROW(sample_desired_gain(1, rng), DomainError);
}

TEST(DesiredGain, TwoAntennasIsExponential) {
    const auto m = moments(desired_draws(2, 1000000));
    EXPECT_NEAR(m.mean, 1.0, 0.01);
}

TEST(DesiredGain, TenAntennasMomentsAndCdf) {
    const auto xs = desired_draws(10, 1000000);
    const auto m = moments(xs);
    EXPECT_NEAR(m.mean, 9.0, 0.03);
    EXPECT_NEAR(m.variance, 9.0, 0.1);
    EXPECT_LT(ks_against(xs, [](double x) { return gamma_reg_lower(9, x); }), 0.005);
}

TEST(DesiredGain, StreamDeterministic) {
    Stream a(5, 17), b(5, 17);
    for (int i = 0; i < 100; ++i) EXPECT_EQ(sample_desired_gain(10, a), sample_desired_gain(10, b));
}

TEST(InterferenceGain, ExponentialLaw) {
    Stream rng(3, 0);
    std::vector<double> xs(1000000);
    for (auto& x : xs) x = sample_interference_gain(rng);
    EXPECT_NEAR(moments(xs).mean, 1.0, 0.01);
    const double above = std::count_if(xs.begin(), xs.end(), [](double x) { return x > 1; }) / 1e6;
    EXPECT_NEAR(above, std::exp(-1.0), 0.005);
    EXPECT_LT(ks_against(xs, [](double x) { return -std::expm1(-x); }), 0.005);
}

TEST(InterferenceGain, Memoryless) {
    Stream rng(4, 0);
    std::vector<double> xs(1000000);
    for (auto& x : xs) x = sample_interference_gain(rng);
    auto tail = [&](double v) { return std::count_if(xs.begin(), xs.end(), [&](double x) { return x > v; }); };
    for (double s : {0.5, 1.0})
        for (double t : {0.25, 1.0}) {
            const double conditional = static_cast<double>(tail(s + t)) / tail(s);
            EXPECT_NEAR(conditional, tail(t) / 1e6, 0.01);
        }
}

}  // namespace
