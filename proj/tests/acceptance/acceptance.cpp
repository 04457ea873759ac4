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


// Acceptance run: one PASS/FAIL line per criterion, followed by the numbers
// behind it. Exit status is nonzero only when a check could not be
// evaluated (an exception); FAIL lines are reported, not fatal.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/binomial.hpp>

#include "cisac/approx.hpp"
#include "cisac/comm_analytic.hpp"
#include "cisac/montecarlo.hpp"
#include "cisac/sense_analytic.hpp"

namespace {

using namespace cisac;

constexpr std::size_t kTrials = 1000000;
constexpr std::size_t kSuiteTrials = 200000;

struct Outcome {
    bool pass = false;
    std::vector<std::string> notes;
};

std::string fmt(const char* f, auto... args) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

McConfig mc(std::size_t trials, std::uint64_t seed = 1) {
    McConfig c;
    c.trials = trials;
    c.seed = seed;
    return c;
}

std::vector<double> grid_db() {
    std::vector<double> out;
    for (int db = -10; db <= 20; db += 2) out.push_back(db);
    return out;
}

std::vector<double> linear(const std::vector<double>& db) {
    std::vector<double> out;
    for (double d : db) out.push_back(db_to_linear(d));
    return out;
}

SystemParams comm(int l = 1) {
    SystemParams p;
    p.comm_cluster = l;
    return with_fitted_alpha(p);
}

SystemParams sense(int n) {
    SystemParams p;
    p.sensing_cluster = n;
    return p;
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

template <class F>
double gk(F f, double lo, double hi) {
    return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, lo, hi, 25, 1e-13);
}

Outcome closed_form_agreement() {
    const auto p = comm();
    const auto db = grid_db();
    const auto sim = mc_coverage_detail(p, linear(db), mc(kTrials));
    Outcome o{true, {}};
    double worst = 0.0;
    for (std::size_t i = 0; i < db.size(); ++i) {
        const double diff = std::abs(coverage_prop1(p, db_to_linear(db[i])) - sim.curve.values[i]);
        worst = std::max(worst, diff);
        o.pass = o.pass && diff <= 0.02;
    }
    o.notes.push_back(fmt("max |closed form - MC| = %.4f over %zu thresholds (limit 0.02)", worst, db.size()));
    o.notes.push_back(fmt("window radius %.1f m, truncation bias bound %.2e", sim.diagnostics.window_radius,
                          sim.diagnostics.truncation_bias_bound));
    return o;
}

Outcome theorem_agreement() {
    const auto p = comm(2);
    const auto db = grid_db();
    const auto sim = mc_coverage(p, linear(db), mc(kTrials));
    CoverageOptions marginal;
    marginal.law = DistanceLaw::MarginalProduct;
    Outcome o{true, {}};
    double worst = 0.0, worst_marginal = 0.0;
    for (std::size_t i = 0; i < db.size(); ++i) {
        const double t = db_to_linear(db[i]);
        const double diff = std::abs(coverage_theorem1(p, t) - sim.values[i]);
        worst = std::max(worst, diff);
        worst_marginal = std::max(worst_marginal, std::abs(coverage_theorem1(p, t, marginal) - sim.values[i]));
        o.pass = o.pass && diff <= 0.03;
    }
    o.notes.push_back(fmt("L=2, ordered joint distance law: max |analytic - MC| = %.4f (limit 0.03)", worst));
    o.notes.push_back(fmt("product of marginal distance laws, for reference: max gap %.4f", worst_marginal));
    return o;
}

Outcome density_invariance() {
    auto sparse = comm(), dense = comm();
    sparse.lambda = 1e-5;
    dense.lambda = 1e-3;
    const auto t = linear(grid_db());
    const auto a = mc_coverage(sparse, t, mc(kTrials, 11));
    const auto b = mc_coverage(dense, t, mc(kTrials, 12));
    Outcome o{true, {}};
    double worst = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        worst = std::max(worst, std::abs(a.values[i] - b.values[i]));
        o.pass = o.pass && std::abs(a.values[i] - b.values[i]) <= 0.02;
    }
    o.notes.push_back(fmt("max |MC(lambda=1e-5) - MC(lambda=1e-3)| = %.4f (limit 0.02)", worst));
    return o;
}

Outcome cooperative_rate() {
    Outcome o{true, {}};
    for (int n : {2, 3, 4}) {
        const auto p = sense(n);
        const double analytic = radar_rate_theorem2(p).value;
        const auto sim = mc_radar_rate(p, mc(kTrials));
        auto independent = mc(kSuiteTrials);
        independent.decouple_sensing = true;
        const auto decoupled = mc_radar_rate(p, independent);
        const double r = rel(analytic, sim.estimate);
        o.pass = o.pass && r <= 0.05;
        o.notes.push_back(fmt("N=%d analytic %.5f, MC %.5f +- %.5f, relative gap %.1f%% (limit 5%%); "
                              "MC with the echo and interference terms decoupled %.5f",
                              n, analytic, sim.estimate, sim.ci_half_width, 100 * r, decoupled.estimate));
    }
    return o;
}

Outcome interference_hole() {
    const auto p = sense(1);
    const double hole = radar_rate_prop2(p, true).value;
    const double bare = radar_rate_prop2(p, false).value;
    const auto sim = mc_radar_rate(p, mc(kTrials));
    const double gap_hole = 1 - bare / hole;
    const double gap_mc = 1 - bare / sim.estimate;
    const double r = rel(hole, sim.estimate);
    const bool gap_ok = gap_hole >= 0.06 && gap_hole <= 0.12 && gap_mc >= 0.06 && gap_mc <= 0.12;
    Outcome o{gap_ok && r <= 0.05, {}};
    o.notes.push_back(fmt("with hole %.5f, without %.5f, MC %.5f +- %.5f", hole, bare, sim.estimate, sim.ci_half_width));
    o.notes.push_back(fmt("no-hole deficit: %.2f%% vs hole-corrected, %.2f%% vs MC (required 8-10%% +- 2 points) %s",
                          100 * gap_hole, 100 * gap_mc, gap_ok ? "ok" : "NOT MET"));
    o.notes.push_back(fmt("hole-corrected vs MC: %.2f%% (limit 5%%) %s", 100 * r, r <= 0.05 ? "ok" : "NOT MET"));
    for (double lambda : {1e-3, 1e-2}) {
        auto q = p;
        q.lambda = lambda;
        const double h = radar_rate_prop2(q, true).value, b = radar_rate_prop2(q, false).value;
        o.notes.push_back(fmt("deficit at lambda=%g: %.2f%%", lambda, 100 * (1 - b / h)));
    }
    return o;
}

// Whether the endpoint 95% intervals are disjoint and the sweep never drops
// by more than its CIs allow.
bool rising(const std::vector<McResult>& r) {
    for (std::size_t i = 1; i < r.size(); ++i)
        if (r[i].estimate + r[i].ci_half_width < r[i - 1].estimate - r[i - 1].ci_half_width) return false;
    return r.back().estimate - r.back().ci_half_width > r.front().estimate + r.front().ci_half_width;
}

std::string series(const std::vector<McResult>& r) {
    std::string s;
    for (const auto& x : r) s += fmt(" %.4f", x.estimate);
    return s;
}

Outcome monotonicity() {
    Outcome o{true, {}};
    const auto db = grid_db();
    const auto t = linear(db);
    std::vector<CoverageCurve> by_l;
    for (int l = 1; l <= 5; ++l) by_l.push_back(mc_coverage(comm(l), t, mc(kSuiteTrials)));
    int violations = 0;
    for (std::size_t i = 0; i < t.size(); ++i)
        for (int l = 1; l < 5; ++l) {
            const auto &a = by_l[l - 1], &b = by_l[l];
            if (b.values[i] + b.uncertainty[i] < a.values[i] - a.uncertainty[i]) ++violations;
        }
    o.pass = violations == 0;
    o.notes.push_back(fmt("coverage vs L=1..5 at T=0 dB: %.4f %.4f %.4f %.4f %.4f; CI-level drops: %d",
                          by_l[0].values[5], by_l[1].values[5], by_l[2].values[5], by_l[3].values[5],
                          by_l[4].values[5], violations));

    std::vector<McResult> by_n, by_lambda, by_ps;
    for (int n = 1; n <= 6; ++n) by_n.push_back(mc_radar_rate(sense(n), mc(kSuiteTrials)));
    for (double lambda : {1e-5, 1e-4, 1e-3}) {
        auto p = sense(2);
        p.lambda = lambda;
        by_lambda.push_back(mc_radar_rate(p, mc(kSuiteTrials)));
    }
    for (int i = 1; i <= 9; ++i) {
        auto p = sense(2);
        p.set_sensing_power(i / 10.0);
        by_ps.push_back(mc_radar_rate(p, mc(kSuiteTrials)));
    }
    const bool n_ok = rising(by_n), lambda_ok = rising(by_lambda), ps_ok = rising(by_ps);
    o.pass = o.pass && n_ok && lambda_ok && ps_ok;
    o.notes.push_back("rate vs N=1..6:" + series(by_n) + (n_ok ? "" : "  NOT MONOTONE"));
    o.notes.push_back("rate vs lambda=1e-5,1e-4,1e-3 (N=2):" + series(by_lambda) + (lambda_ok ? "" : "  NOT MONOTONE"));
    o.notes.push_back("rate vs p_s=0.1..0.9 (N=2):" + series(by_ps) + (ps_ok ? "" : "  NOT MONOTONE"));
    return o;
}

Outcome antenna_returns() {
    auto at = [](int mt) {
        SystemParams p;
        p.transmit_antennas = mt;
        return with_fitted_alpha(p);
    };
    const double c4 = coverage_prop1(at(4), 1.0), c6 = coverage_prop1(at(6), 1.0);
    const double c8 = coverage_prop1(at(8), 1.0), c10 = coverage_prop1(at(10), 1.0);
    Outcome o{c10 - c8 < c6 - c4, {}};
    o.notes.push_back(fmt("T=0 dB, L=1: gain 4->6 = %.4f, gain 8->10 = %.4f", c6 - c4, c10 - c8));
    std::vector<double> sim;
    for (int mt : {4, 6, 8, 10}) sim.push_back(mc_coverage(at(mt), {1.0}, mc(kSuiteTrials)).values[0]);
    o.notes.push_back(fmt("MC cross-check: gain 4->6 = %.4f, gain 8->10 = %.4f", sim[1] - sim[0], sim[3] - sim[2]));
    return o;
}

Outcome approximation_fits() {
    const auto one = fit_alpha(1);
    const auto nine = fit_alpha(9);
    const double baseline = ks_distance(1.0, 9);
    const bool exact = one.alpha_star == 1.0 && one.ks_distance == 0.0;
    const bool improves = nine.ks_distance <= baseline;
    const bool small = nine.ks_distance <= 0.05;
    Outcome o{exact && improves && small, {}};
    o.notes.push_back(fmt("N=1: alpha=%g, D=%g", one.alpha_star, one.ks_distance));
    o.notes.push_back(fmt("N=9: alpha*=%.5f, D*=%.5f, D(alpha=1)=%.5f; D* <= 0.05 %s", nine.alpha_star,
                          nine.ks_distance, baseline, small ? "ok" : "NOT MET"));
    return o;
}

Outcome special_functions() {
    std::mt19937_64 gen(2024);
    std::uniform_real_distribution<double> u(0.05, 20.0);
    double worst_full = 0.0, worst_arcsine = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double a = u(gen), b = u(gen);
        worst_full = std::max(worst_full, rel(beta_incomplete(1.0, a, b), beta_complete(a, b)));
    }
    for (int i = 0; i < 1000; ++i) {
        const double x = i / 999.0;
        worst_arcsine = std::max(worst_arcsine, std::abs(beta_incomplete(x, 0.5, 0.5) - 2 * std::asin(std::sqrt(x))));
    }
    Outcome o{worst_full <= 1e-9 && worst_arcsine <= 1e-9, {}};
    o.notes.push_back(fmt("B(1;a,b) vs B(a,b): worst relative %.2e; B(x;1/2,1/2) vs 2 asin(sqrt x): worst %.2e",
                          worst_full, worst_arcsine));
    return o;
}

Outcome oracle_equivalence() {
    std::mt19937_64 gen(77);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double w1 = 0.0, w3 = 0.0, w4 = 0.0;
    for (int k = 0; k < 50; ++k) {
        SystemParams p;
        p.path_loss = 3.0 + 2.0 * u(gen);
        p.transmit_antennas = 2 + static_cast<int>(9 * u(gen));
        p.receive_antennas = 1 + static_cast<int>(8 * u(gen));
        p.set_sensing_power(0.05 + 0.9 * u(gen));
        p.alpha_fit = 0.5 + 3 * u(gen);
        const double beta = p.path_loss;
        const int q = p.gamma_shape();

        // Coverage exponent: 2 int_{r_L}^inf (1 - 1/(1 + c x^-beta / D)) x dx.
        const int l = 1 + static_cast<int>(4 * u(gen));
        std::vector<double> d;
        double r = 0.0, dsum = 0.0;
        for (int i = 0; i < l; ++i) {
            d.push_back(r += 1.0 + 100 * u(gen));
            dsum += std::pow(r, -beta);
        }
        const int n = 1 + static_cast<int>(q * u(gen));
        const double t = std::pow(10.0, -1.0 + 3.0 * u(gen));
        const double c = *p.alpha_fit * n * t * p.total_power() / (q * p.comm_power);
        auto f1 = [&](double v) {
            if (v == 0.0) return 0.0;
            const double x = r / v;
            const double kk = c * std::pow(x, -beta) / dsum;
            return 2 * kk / (1 + kk) * x * r / (v * v);
        };
        w1 = std::max(w1, rel(h1(OrderedDistances{d}, n, t, p), gk(f1, 0.0, 1.0)));

        // Desired transform: beta int_0^{r_N} (1 - (A z x^-beta + 1)^-Q) x dx.
        const double z = std::pow(10.0, 8 * u(gen) - 2);
        const double rn = 1.0 + 200 * u(gen);
        const double a = p.rcs * p.receive_antennas * p.sensing_power * z;
        auto f3 = [&](double x) {
            if (x == 0.0) return 0.0;
            return beta * -std::expm1(-q * std::log1p(a * std::pow(x, -beta))) * x;
        };
        w3 = std::max(w3, rel(h3(z, rn, p), gk(f3, 0.0, rn)));

        // Interference transform: int_0^eta z t^(beta-3) / (1 + z t^beta) dt, t = eta y^2.
        const double eta = 0.01 + 0.99 * u(gen);
        const double z4 = std::pow(10.0, 6 * u(gen) - 3);
        auto f4 = [&](double y) {
            const double s = eta * y * y;
            return z4 * std::pow(s, beta - 3) / (1 + z4 * std::pow(s, beta)) * 2 * eta * y;
        };
        w4 = std::max(w4, rel(h4(z4, eta, p), gk(f4, 0.0, 1.0)));
    }
    Outcome o{w1 <= 1e-6 && w3 <= 1e-6 && w4 <= 1e-6, {}};
    o.notes.push_back(fmt("worst relative gap over 50 draws: h1 %.2e, h3 %.2e, h4 %.2e (limit 1e-6)", w1, w3, w4));
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"closed-form coverage vs simulation", closed_form_agreement},
        {"general coverage integral vs simulation", theorem_agreement},
        {"coverage density invariance", density_invariance},
        {"cooperative radar rate vs simulation", cooperative_rate},
        {"interference hole", interference_hole},
        {"monotonicity suite", monotonicity},
        {"diminishing antenna returns", antenna_returns},
        {"approximation fits", approximation_fits},
        {"special-function identities", special_functions},
        {"oracle equivalence of h1, h3, h4", oracle_equivalence},
    };
    int passed = 0, errors = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        try {
            const auto o = criteria[i].second();
            std::printf("criterion %2zu %s  %s\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first);
            for (const auto& n : o.notes) std::printf("             %s\n", n.c_str());
            passed += o.pass;
        } catch (const std::exception& e) {
            std::printf("criterion %2zu FAIL  %s\n             error: %s\n", i + 1, criteria[i].first, e.what());
            ++errors;
        }
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", passed, criteria.size());
    return errors == 0 ? 0 : 1;
}
