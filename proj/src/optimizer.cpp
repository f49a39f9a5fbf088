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

#include "linkopt/optimizer.hpp"

#include "linkopt/error.hpp"
#include "linkopt/golden.hpp"
#include "linkopt/units.hpp"

#include <boost/math/tools/roots.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <thread>

namespace linkopt {

namespace {

double overhead_fraction(Bits n_p, Bits n_h)
{
    return static_cast<double>(n_p) / static_cast<double>(n_p + n_h);
}

// Unbounded energy with gamma in log space, for fallback minimisation.
double unbounded_energy_in_snr(const EnergyCoefficients& coeffs, double omega0, double fraction,
                               double gamma)
{
    const double e0_value = coeffs.a * coeffs.snr_term(gamma) / fraction + coeffs.b;
    return e0_value * std::exp(omega0 / gamma);
}

// Continuous gamma_min(n) used by the boundary search.
double snr_min_continuous(const ModulationScheme& scheme, Bits n_h, double n_p, double log_ok)
{
    const double n = static_cast<double>(n_h) + n_p;
    return -(kEulerGamma + std::log(scheme.c_eff() * n)) / (scheme.k_eff() * log_ok);
}

std::string describe(const ModulationScheme& scheme, int tau, const std::string& why)
{
    return scheme.name + " tau=" + std::to_string(tau) + ": " + why;
}

// Early iterates can sit at an SNR whose real optimum is below one bit.
Bits quadratic_payload_at_least_one(const EnergyCoefficients& coeffs,
                                    const ModulationScheme& scheme, Bits n_h, double gamma)
{
    const double value = optimal_payload_quadratic_real(coeffs, scheme, n_h, gamma);
    return static_cast<Bits>(
        std::clamp(std::floor(value), 1.0, static_cast<double>(kPayloadSaturation)));
}

bool better(const OperatingPoint& a, const OperatingPoint& b, double tie)
{
    if (a.energy < b.energy * (1.0 - tie))
        return true;
    if (b.energy < a.energy * (1.0 - tie))
        return false;
    if (a.scheme.bits_per_symbol != b.scheme.bits_per_symbol)
        return a.scheme.bits_per_symbol < b.scheme.bits_per_symbol;
    return a.tau_r < b.tau_r;
}

} // namespace

std::string_view to_string(Binding binding)
{
    switch (binding) {
    case Binding::Unconstrained:
        return "unconstrained";
    case Binding::SnrMinBound:
        return "snr_min";
    case Binding::SnrMaxBound:
        return "snr_max";
    case Binding::PayloadMaxBound:
        return "payload_max";
    case Binding::Infeasible:
        return "infeasible";
    }
    return "?";
}

double snr_max(const LinkBudget& link, const ModulationScheme& scheme, const PaModel& pa)
{
    return effective_power_cap(link, pa, scheme) /
           (bit_rate(link, scheme) * link.n0 * path_gain(link));
}

double optimal_snr_quadratic(const EnergyCoefficients& coeffs, double omega0, Bits n_p, Bits n_h)
{
    const double ratio = coeffs.b / coeffs.a;
    const double f = overhead_fraction(n_p, n_h);
    return 0.5 * omega0 + std::sqrt(omega0 * (0.25 * omega0 + ratio * f));
}

std::optional<double> tpa_snr_closed_form(const EnergyCoefficients& coeffs, double scaled_omega,
                                          double k_eff, double payload_fraction)
{
    const double r = coeffs.b / coeffs.a;
    const double w = scaled_omega;
    const double k = k_eff;
    const double f = payload_fraction;
    const double disc = 27.0 * r * r * k * f * f - 8.0 * w;
    if (!(disc > 0.0))
        return std::nullopt;
    const double big = 54.0 * r * r * std::pow(k, 4) * w * w * f * f - 8.0 * std::pow(k, 3) * std::pow(w, 3) +
                       6.0 * std::sqrt(3.0) * std::sqrt(r * r * std::pow(k, 7) * std::pow(w, 4) * f * f * disc);
    const double root3 = std::cbrt(big);
    return (4.0 * w / k + 4.0 * w * w / root3 + root3 / (k * k)) / 3.0;
}

TpaSnrSolution optimal_snr_tpa(const EnergyCoefficients& coeffs, double omega0, double k_eff,
                               Bits n_p, Bits n_h)
{
    const double r = coeffs.b / coeffs.a;
    const double f = overhead_fraction(n_p, n_h);
    const double w = k_eff * omega0;

    TpaSnrSolution out;
    out.closed_form = tpa_snr_closed_form(coeffs, w, k_eff, f);

    // k x^3 - 2 w x - 2 w r f, divided through by A.
    auto cubic = [&](double x) { return k_eff * x * x * x - 2.0 * w * x - 2.0 * w * r * f; };
    const double lo = std::sqrt(2.0 * w / k_eff);
    if (r * f == 0.0) {
        out.gamma_bar = lo * lo;
        return out;
    }
    double hi = std::max(2.0 * lo, 1.0);
    int doublings = 0;
    while (cubic(hi) <= 0.0 && doublings < 200) {
        hi *= 2.0;
        ++doublings;
    }
    if (cubic(hi) > 0.0) {
        std::uintmax_t max_iter = 200;
        const auto bracket = boost::math::tools::toms748_solve(
            cubic, lo, hi, cubic(lo), cubic(hi), boost::math::tools::eps_tolerance<double>(52),
            max_iter);
        const double x = 0.5 * (bracket.first + bracket.second);
        const double scale = k_eff * x * x * x + 2.0 * w * x + 2.0 * w * r * f;
        if (std::abs(cubic(x)) <= 1e-12 * scale) {
            out.gamma_bar = x * x;
            return out;
        }
    }

    out.fallback = true;
    const double g_lo = std::log(omega0 * 1e-3);
    const double g_hi = std::log(std::max(omega0, 1.0) * 1e12);
    const auto res = golden_section_min(
        [&](double u) { return unbounded_energy_in_snr(coeffs, omega0, f, std::exp(u)); }, g_lo,
        g_hi, 1e-10);
    out.gamma_bar = std::exp(res.argmin);
    return out;
}

ConstrainedSnr constrain_snr(double gamma_star, double gamma_min, double gamma_max)
{
    if (gamma_min > gamma_max)
        return {gamma_star, Binding::Infeasible};
    if (gamma_star < gamma_min)
        return {gamma_min, Binding::SnrMinBound};
    if (gamma_star > gamma_max)
        return {gamma_max, Binding::SnrMaxBound};
    return {gamma_star, Binding::Unconstrained};
}

double optimal_payload_quadratic_real(const EnergyCoefficients& coeffs,
                                      const ModulationScheme& scheme, Bits n_h, double gamma_bar)
{
    const double k = scheme.k_eff();
    const double r = coeffs.b / coeffs.a;
    const double g = gamma_bar;
    const double kg = k * g;
    return static_cast<double>(n_h) * g *
           ((kg - 1.0) + std::sqrt(kg * kg + 2.0 * kg + 4.0 * k * r + 1.0)) / (2.0 * (g + r));
}

Bits optimal_payload_quadratic(const EnergyCoefficients& coeffs, const ModulationScheme& scheme,
                               Bits n_h, double gamma_bar)
{
    const double value = optimal_payload_quadratic_real(coeffs, scheme, n_h, gamma_bar);
    if (!(value >= 1.0))
        throw DegeneratePayloadError(scheme.name + ": optimal payload below one bit");
    return static_cast<Bits>(std::min(std::floor(value), static_cast<double>(kPayloadSaturation)));
}

Bits numeric_optimal_payload(const EnergyCoefficients& coeffs, const ModulationScheme& scheme,
                             Bits n_h, double gamma_bar, Bits upper)
{
    if (upper <= 1)
        return 1;
    auto energy = [&](double n) {
        return energy_unbounded_continuous(coeffs, scheme, n, n_h, gamma_bar);
    };
    const auto res = golden_section_min([&](double u) { return energy(std::exp(u)); }, 0.0,
                                        std::log(static_cast<double>(upper)), 1e-9);
    const double x = std::exp(res.argmin);
    const Bits lo = std::clamp<Bits>(static_cast<Bits>(std::floor(x)), 1, upper);
    const Bits hi = std::clamp<Bits>(lo + 1, 1, upper);
    return energy(static_cast<double>(hi)) < energy(static_cast<double>(lo)) ? hi : lo;
}

Bits optimal_payload_tpa(const EnergyCoefficients& coeffs, const ModulationScheme& scheme,
                         Bits n_h, double gamma_bar, Bits upper)
{
    return numeric_optimal_payload(coeffs, scheme, n_h, gamma_bar, upper);
}

std::optional<double> tpa_payload_closed_form(const EnergyCoefficients& coeffs,
                                              const ModulationScheme& scheme, Bits n_h,
                                              double gamma_bar)
{
    const double r = coeffs.b / coeffs.a;
    const double g = gamma_bar;
    if (!(g > r * r))
        return std::nullopt;
    const double k = scheme.k_eff();
    const double s = std::sqrt(g);
    const double nh = static_cast<double>(n_h);
    const double kk = k * g * g - r * k * g * s - g + r * s;
    const double disc = 4.0 * k * nh * nh * g * (g - r * s) * (g - r * r) + nh * nh * kk * kk;
    if (disc < 0.0)
        return std::nullopt;
    return (nh * kk + std::sqrt(disc)) / (2.0 * (g - r * r));
}

SchemeContext make_scheme_context(const LinkScenario& scenario, const ModulationScheme& scheme,
                                  double coefficient_scale)
{
    SchemeContext ctx;
    ctx.pa = scenario.pa.for_scheme(scheme, scenario.link.p0);
    ctx.coeffs = energy_coefficients(ctx.pa, scheme, scenario.link,
                                     scenario.circuit.for_scheme(scheme))
                     .scaled(coefficient_scale);
    ctx.gamma_max = snr_max(scenario.link, scheme, ctx.pa);
    return ctx;
}

OperatingPoint optimize_combination(const LinkScenario& scenario, const ModulationScheme& scheme,
                                    int tau, const OptimizerOptions& options,
                                    const FixedPointStart& start)
{
    OperatingPoint out;
    out.scheme = scheme;
    out.pa_variant = scenario.pa.variant;
    out.distance = scenario.link.distance;
    out.tau_r = tau;

    auto reject = [&](const std::string& why) {
        out.feasible = false;
        out.binding = Binding::Infeasible;
        out.diagnostics.push_back(describe(scheme, tau, why));
        return out;
    };

    try {
        const SchemeContext ctx = make_scheme_context(scenario, scheme, options.coefficient_scale);
        const QosSpec qos = scenario.qos.with_retransmissions(tau);
        const Bits n_h = scenario.overhead_bits;
        const double gamma_max = ctx.gamma_max;
        const double log_ok = std::log1p(-qos.per_attempt_bound());
        const bool tpa = ctx.coeffs.variant == PaVariant::TPA;
        const Bits cap = options.max_payload;

        auto cap_payload = [&](Bits n) { return std::min(n, cap); };

        Bits n_p = std::max<Bits>(start.n_p, 0);
        double gamma_prev = start.gamma_bar.value_or(std::numeric_limits<double>::quiet_NaN());
        double gamma = 0.0;
        Binding binding = Binding::Unconstrained;
        bool converged = false;
        int it = 0;

        auto optimal_snr = [&](Bits n) {
            const double omega0 = waterfall_threshold(scheme, n_h + n);
            return tpa ? optimal_snr_tpa(ctx.coeffs, omega0, scheme.k_eff(), n, n_h).gamma_bar
                       : optimal_snr_quadratic(ctx.coeffs, omega0, n, n_h);
        };
        auto conditioned_snr = [&](Bits n) {
            return std::clamp(optimal_snr(n), snr_min(scheme, n_h, n, qos), gamma_max);
        };
        auto energy_at = [&](Bits n, double g) {
            return energy_per_bit(ctx.coeffs, scheme, n, n_h, g, qos).energy;
        };
        // Best payload on the curve PER = P_req, where E_trunc is proportional to E0.
        auto boundary_payload = [&]() -> Bits {
            const Bits hi = cap_payload(payload_max(scheme, n_h, gamma_max, qos));
            if (hi <= 1)
                return hi;
            auto boundary = [&](double n) {
                const double g = snr_min_continuous(scheme, n_h, n, log_ok);
                return (1.0 + static_cast<double>(n_h) / n) * ctx.coeffs.a *
                           ctx.coeffs.snr_term(g) +
                       ctx.coeffs.b;
            };
            const auto res = golden_section_min([&](double u) { return boundary(std::exp(u)); },
                                                0.0, std::log(static_cast<double>(hi)), 1e-9);
            const Bits mid = static_cast<Bits>(std::llround(std::exp(res.argmin)));
            Bits best = 1;
            double best_value = std::numeric_limits<double>::infinity();
            for (Bits cand = mid - 1; cand <= mid + 1; ++cand) {
                if (cand < 1 || cand > hi)
                    continue;
                const double v = boundary(static_cast<double>(cand));
                if (v < best_value) {
                    best_value = v;
                    best = cand;
                }
            }
            return best;
        };

        for (it = 1; it <= options.max_iterations; ++it) {
            double gamma_min = snr_min(scheme, n_h, n_p, qos);
            if (gamma_min > gamma_max) {
                const Bits fits = cap_payload(payload_max(scheme, n_h, gamma_max, qos));
                if (fits < 1 || fits >= n_p)
                    return reject("gamma_min exceeds gamma_max");
                n_p = fits;
                gamma_min = snr_min(scheme, n_h, n_p, qos);
            }
            const ConstrainedSnr snr = constrain_snr(optimal_snr(n_p), gamma_min, gamma_max);
            gamma = snr.gamma_bar;
            binding = snr.binding;

            const Bits n_max = cap_payload(payload_max(scheme, n_h, gamma, qos));
            const Bits n_opt = tpa ? optimal_payload_tpa(ctx.coeffs, scheme, n_h, gamma, cap)
                                   : cap_payload(quadratic_payload_at_least_one(
                                         ctx.coeffs, scheme, n_h, gamma));
            Bits n_next = n_opt;
            if (binding == Binding::SnrMinBound) {
                const Bits n_edge = boundary_payload();
                if (n_edge < 1)
                    return reject("no payload meets the PER bound at gamma_max");
                // Walk along PER = P_req when the packet would otherwise have to
                // shrink, or when the boundary beats the plain payload step.
                const bool take_edge =
                    n_opt > n_max || energy_at(n_edge, snr_min(scheme, n_h, n_edge, qos)) <
                                         energy_at(n_opt, conditioned_snr(n_opt));
                if (take_edge) {
                    n_next = n_edge;
                    gamma = snr_min(scheme, n_h, n_next, qos);
                }
            } else if (n_opt > n_max) {
                n_next = n_max;
                if (binding == Binding::Unconstrained)
                    binding = Binding::PayloadMaxBound;
            }
            if (n_next < 1)
                return reject("no payload meets the PER bound");
            n_p = n_next;
            if (std::abs(gamma - gamma_prev) <= options.delta) {
                converged = true;
                break;
            }
            gamma_prev = gamma;
        }
        if (!converged)
            return reject("no convergence after " + std::to_string(options.max_iterations) +
                          " iterations");

        const EnergyBreakdown eb =
            energy_per_bit(ctx.coeffs.scaled(1.0 / options.coefficient_scale), scheme, n_p, n_h,
                           gamma, qos);
        out.gamma_bar = gamma;
        out.n_p = n_p;
        out.energy = eb.energy;
        out.per = eb.per;
        out.p_t = transmit_power(gamma, scenario.link, scheme);
        out.p_pa = pa_power(ctx.pa, scheme, out.p_t);
        out.feasible = true;
        out.binding = binding;
        out.iterations = it;
        return out;
    } catch (const Error& e) {
        return reject(e.what());
    }
}

OperatingPoint joint_optimize(const LinkScenario& scenario,
                              std::span<const ModulationScheme> modulations,
                              const OptimizerOptions& options)
{
    OperatingPoint best;
    best.pa_variant = scenario.pa.variant;
    best.distance = scenario.link.distance;
    std::vector<std::string> diagnostics;
    bool found = false;

    const int tau_max = scenario.qos.max_retransmissions();
    const int tau_first = tau_max == 0 ? 0 : 1;
    for (const auto& scheme : modulations) {
        for (int tau = tau_first; tau <= tau_max; ++tau) {
            OperatingPoint point = optimize_combination(scenario, scheme, tau, options);
            for (auto& d : point.diagnostics)
                diagnostics.push_back(std::move(d));
            if (!point.feasible)
                continue;
            if (!found || better(point, best, options.tie_tolerance)) {
                best = std::move(point);
                found = true;
            }
        }
    }
    best.diagnostics = std::move(diagnostics);
    if (!found) {
        best.feasible = false;
        best.binding = Binding::Infeasible;
    }
    return best;
}

std::vector<OperatingPoint> sweep_distance(const LinkScenario& scenario,
                                           std::span<const double> distances,
                                           std::span<const ModulationScheme> modulations,
                                           const OptimizerOptions& options)
{
    std::vector<OperatingPoint> out(distances.size());
    unsigned workers = options.threads ? options.threads : std::thread::hardware_concurrency();
    workers = std::clamp<unsigned>(workers, 1, static_cast<unsigned>(std::max<std::size_t>(distances.size(), 1)));

    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < distances.size(); i = next++) {
            LinkScenario local = scenario;
            local.link = scenario.link.at_distance(distances[i]);
            out[i] = joint_optimize(local, modulations, options);
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < workers; ++t)
        pool.emplace_back(work);
    work();
    for (auto& t : pool)
        t.join();
    return out;
}

} // namespace linkopt
