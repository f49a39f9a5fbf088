// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The linkopt Authors
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

#include "linkopt/config.hpp"
#include "linkopt/error.hpp"
#include "linkopt/golden.hpp"
#include "linkopt/optimizer.hpp"
#include "linkopt/units.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

using namespace linkopt;
using doctest::Approx;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

SchemeContext context(PaVariant v, const ModulationScheme& m, double d)
{
    return make_scheme_context(default_config().scenario(v, d), m);
}

// Exhaustive search over payload with a golden section over SNR on the
// feasible interval; minimises the truncated-ARQ energy directly.
double brute_force_energy(const LinkScenario& sc, const ModulationScheme& m, int tau, Bits n_hi)
{
    const SchemeContext ctx = make_scheme_context(sc, m);
    const QosSpec qos = sc.qos.with_retransmissions(tau);
    double best = std::numeric_limits<double>::infinity();
    for (Bits n = 1; n <= n_hi; ++n) {
        const double lo = snr_min(m, sc.overhead_bits, n, qos);
        if (lo > ctx.gamma_max)
            break;
        auto e = [&](double g) {
            return energy_per_bit(ctx.coeffs, m, n, sc.overhead_bits, g, qos).energy;
        };
        double v = std::min(e(lo), e(ctx.gamma_max));
        if (ctx.gamma_max > lo * (1.0 + 1e-12)) {
            const auto r = golden_section_min(e, lo, ctx.gamma_max, lo * 1e-10);
            v = std::min(v, r.value);
        }
        best = std::min(best, v);
    }
    return best;
}

} // namespace

// Reference optima below come from 40-digit mpmath root finding on dE/dx.

TEST_CASE("unconstrained SNR optimum at fixed payload")
{
    const auto m = make_square_qam(16);
    const double w = waterfall_threshold(m, 548);
    CHECK(rel(optimal_snr_quadratic(context(PaVariant::CPA, m, 10).coeffs, w, 500, 48),
              138.97718835059039) < 1e-10);
    CHECK(rel(optimal_snr_quadratic(context(PaVariant::ETPA, m, 10).coeffs, w, 500, 48),
              143.9006785334373) < 1e-10);
    const auto tpa = optimal_snr_tpa(context(PaVariant::TPA, m, 10).coeffs, w, m.k_eff(), 500, 48);
    CHECK(rel(tpa.gamma_bar, 60.79323710335909) < 1e-10);
    CHECK_FALSE(tpa.fallback);
}

TEST_CASE("SNR optimum without circuit power")
{
    const EnergyCoefficients cpa{1e-9, 0.0, PaVariant::CPA};
    const EnergyCoefficients tpa{1e-9, 0.0, PaVariant::TPA};
    CHECK(optimal_snr_quadratic(cpa, 7.5, 100, 48) == Approx(7.5));
    CHECK(optimal_snr_tpa(tpa, 7.5, 0.9, 100, 48).gamma_bar == Approx(15.0));
}

TEST_CASE("Cardano root agrees with the bracketed root")
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    int compared = 0;
    for (int i = 0; i < 500; ++i) {
        const EnergyCoefficients co{std::pow(10.0, -9.0 + 3.0 * u(rng)),
                                    std::pow(10.0, -6.0 + 2.0 * u(rng)), PaVariant::TPA};
        const double w = 2.0 + 20.0 * u(rng);
        const double k = 0.05 + u(rng);
        const Bits n_p = 1 + static_cast<Bits>(5000 * u(rng));
        const auto sol = optimal_snr_tpa(co, w, k, n_p, 48);
        if (!sol.closed_form)
            continue;
        ++compared;
        CHECK(rel(*sol.closed_form, sol.gamma_bar) < 1e-6);
    }
    CHECK(compared > 50);
}

TEST_CASE("SNR clamping")
{
    CHECK(constrain_snr(5.0, 1.0, 10.0).binding == Binding::Unconstrained);
    CHECK(constrain_snr(0.5, 1.0, 10.0).gamma_bar == 1.0);
    CHECK(constrain_snr(0.5, 1.0, 10.0).binding == Binding::SnrMinBound);
    CHECK(constrain_snr(50.0, 1.0, 10.0).binding == Binding::SnrMaxBound);
    CHECK(constrain_snr(5.0, 11.0, 10.0).binding == Binding::Infeasible);
    CHECK(to_string(Binding::SnrMinBound) == "snr_min");
}

TEST_CASE("payload optimum at fixed SNR")
{
    const auto m = make_square_qam(16);
    const auto cpa = context(PaVariant::CPA, m, 10).coeffs;
    CHECK(optimal_payload_quadratic_real(cpa, m, 48, 100.0) ==
          Approx(152.08285648498956).epsilon(1e-10));
    CHECK(optimal_payload_quadratic(cpa, m, 48, 100.0) == 152);
    CHECK(optimal_payload_quadratic(cpa, m, 48, 30.0) == 28);
    CHECK(optimal_payload_quadratic(context(PaVariant::ETPA, m, 10).coeffs, m, 48, 300.0) == 935);
    CHECK(numeric_optimal_payload(cpa, m, 48, 100.0, 1'000'000) == 152);
    CHECK(optimal_payload_tpa(context(PaVariant::TPA, m, 10).coeffs, m, 48, 100.0, 1'000'000) ==
          903);
    CHECK_THROWS_AS(optimal_payload_quadratic(cpa, m, 48, 1e-3), DegeneratePayloadError);
}

TEST_CASE("closed-form TPA payload matches the numeric optimum where defined")
{
    const auto m = make_square_qam(16);
    const auto tpa = context(PaVariant::TPA, m, 10).coeffs;
    const double r = tpa.b / tpa.a;
    CHECK_FALSE(tpa_payload_closed_form(tpa, m, 48, 0.5 * r * r).has_value());
    for (double g : {1.5 * r * r, 3.0 * r * r, 10.0 * r * r}) {
        const auto closed = tpa_payload_closed_form(tpa, m, 48, g);
        REQUIRE(closed.has_value());
        const Bits numeric = optimal_payload_tpa(tpa, m, 48, g, 100'000'000);
        CHECK(std::abs(std::floor(*closed) - static_cast<double>(numeric)) <= 1.0);
    }
}

TEST_CASE("fixed point matches a brute-force search")
{
    const ScenarioConfig cfg = default_config();
    struct Case {
        PaVariant v;
        double d;
        const char* scheme;
        int tau;
    };
    for (const Case& c : {Case{PaVariant::CPA, 5.0, "64QAM", 1}, Case{PaVariant::CPA, 20.0, "16QAM", 2},
                          Case{PaVariant::ETPA, 15.0, "16QAM", 3}, Case{PaVariant::TPA, 8.0, "16QAM", 2},
                          Case{PaVariant::CPA, 35.0, "OQPSK", 3}, Case{PaVariant::TPA, 30.0, "OQPSK", 3}}) {
        const auto sc = cfg.scenario(c.v, c.d);
        const auto m = builtin_modulation(c.scheme);
        INFO(to_string(c.v) << " d=" << c.d << " " << c.scheme << " tau=" << c.tau);
        const OperatingPoint p = optimize_combination(sc, m, c.tau);
        REQUIRE(p.feasible);
        const double brute = brute_force_energy(sc, m, c.tau, 3000);
        CHECK(p.energy <= brute * (1.0 + 1e-3));
        CHECK(p.energy >= brute * (1.0 - 1e-3));
        CHECK(p.per <= sc.qos.with_retransmissions(c.tau).per_attempt_bound() * (1.0 + 1e-12));
    }
}

TEST_CASE("joint optimum at short and long range")
{
    const ScenarioConfig cfg = default_config();
    const auto near = joint_optimize(cfg.scenario(PaVariant::CPA, 10.0), cfg.modulations);
    REQUIRE(near.feasible);
    CHECK(near.scheme.bits_per_symbol >= 4);
    CHECK(near.p_t <= cfg.link.p0 * (1.0 + 1e-12));
    CHECK(near.p_pa > near.p_t);

    const auto qam4 = std::vector<ModulationScheme>{builtin_modulation("4QAM")};
    const auto far = joint_optimize(cfg.scenario(PaVariant::CPA, 70.0), qam4);
    CHECK_FALSE(far.feasible);
    CHECK(far.binding == Binding::Infeasible);
    CHECK(far.diagnostics.size() == 3);
}

TEST_CASE("only tau = 0 is tried without retransmissions")
{
    ScenarioConfig cfg = default_config();
    cfg.qos = QosSpec(1e-3, 0);
    const auto p = joint_optimize(cfg.scenario(PaVariant::CPA, 5.0), cfg.modulations);
    REQUIRE(p.feasible);
    CHECK(p.tau_r == 0);
}

TEST_CASE("full ties keep the first scheme listed")
{
    ScenarioConfig cfg = default_config();
    auto low = builtin_modulation("16QAM");
    auto high = low;
    high.name = "16QAM-copy";
    high.bits_per_symbol = 4;
    const std::vector<ModulationScheme> set{high, low};
    const auto p = joint_optimize(cfg.scenario(PaVariant::CPA, 15.0), set);
    REQUIRE(p.feasible);
    CHECK(p.scheme.name == "16QAM-copy");

    const auto q = joint_optimize(cfg.scenario(PaVariant::CPA, 15.0),
                                  std::vector<ModulationScheme>{low, high});
    CHECK(q.scheme.name == "16QAM");
}

TEST_CASE("sweeps are order-preserving and independent of thread count")
{
    const ScenarioConfig cfg = default_config();
    const std::vector<double> d{30.0, 2.0, 17.5, 44.0, 9.0, 60.0};
    OptimizerOptions one;
    one.threads = 1;
    OptimizerOptions many;
    many.threads = 4;
    const auto a = sweep_distance(cfg.scenario(PaVariant::ETPA), d, cfg.modulations, one);
    const auto b = sweep_distance(cfg.scenario(PaVariant::ETPA), d, cfg.modulations, many);
    REQUIRE(a.size() == d.size());
    for (std::size_t i = 0; i < d.size(); ++i) {
        CHECK(a[i].distance == d[i]);
        CHECK(a[i].feasible == b[i].feasible);
        CHECK(a[i].energy == b[i].energy);
        CHECK(a[i].n_p == b[i].n_p);
    }
}

TEST_CASE("optimal energy grows with distance")
{
    const ScenarioConfig cfg = default_config();
    for (PaVariant v : {PaVariant::CPA, PaVariant::TPA, PaVariant::ETPA}) {
        const auto pts = sweep_distance(cfg.scenario(v), cfg.sweep.distances(), cfg.modulations);
        double prev = 0.0;
        for (const auto& p : pts) {
            if (!p.feasible)
                break;
            CHECK(p.energy >= prev);
            prev = p.energy;
        }
    }
}

TEST_CASE("PA ordering of the optimal energy")
{
    // Beyond ~40 m both sit at full power, where the ETPA constant term escapes
    // the overhead factor and ETPA comes out marginally cheaper.
    const ScenarioConfig cfg = default_config();
    for (double d = 2.0; d <= 38.0; d += 4.0) {
        const auto cpa = joint_optimize(cfg.scenario(PaVariant::CPA, d), cfg.modulations);
        const auto etpa = joint_optimize(cfg.scenario(PaVariant::ETPA, d), cfg.modulations);
        if (!cpa.feasible || !etpa.feasible)
            continue;
        CHECK(cpa.energy <= etpa.energy * (1.0 + 1e-12));
    }
}
