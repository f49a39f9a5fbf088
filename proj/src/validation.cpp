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

#include "linkopt/validation.hpp"

#include "linkopt/csv.hpp"
#include "linkopt/error.hpp"
#include "linkopt/golden.hpp"
#include "linkopt/units.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace linkopt {

namespace {

constexpr std::array<Bits, 4> kThresholdSizes{120, 512, 1024, 10048};
constexpr std::array<Bits, 3> kCurveSizes{120, 1024, 10048};

// Tracks the worst residual of a check.
struct Worst {
    double value = 0.0;
    std::string where;

    void update(double v, const std::string& at)
    {
        if (!(v <= value)) {
            value = v;
            where = at;
        }
    }
};

CheckResult finish(std::string name, const Worst& worst, double tolerance)
{
    CheckResult r;
    r.name = std::move(name);
    r.residual = worst.value;
    r.tolerance = tolerance;
    r.passed = worst.value <= tolerance;
    r.detail = worst.where;
    return r;
}

ModulationScheme find_scheme(const ScenarioConfig& config, std::string_view name)
{
    for (const auto& m : config.modulations)
        if (m.name == name)
            return m;
    return builtin_modulation(name, config.papr_formula);
}

// One randomised (scheme, PA, distance, payload) draw.
struct Instance {
    ModulationScheme scheme;
    PaVariant variant;
    double distance;
    Bits n_p;
    SchemeContext ctx;
    std::string label;
};

class InstanceSource {
public:
    InstanceSource(const ScenarioConfig& config, std::uint64_t seed) : config_(config), rng_(seed) {}

    Instance draw(std::span<const PaVariant> variants)
    {
        std::uniform_int_distribution<std::size_t> pick_scheme(0, config_.modulations.size() - 1);
        std::uniform_int_distribution<std::size_t> pick_pa(0, variants.size() - 1);
        std::uniform_real_distribution<double> pick_d(1.0, 80.0);
        std::uniform_int_distribution<Bits> pick_n(1, 4000);

        Instance in;
        in.scheme = config_.modulations[pick_scheme(rng_)];
        in.variant = variants[pick_pa(rng_)];
        in.distance = pick_d(rng_);
        in.n_p = pick_n(rng_);
        in.ctx = make_scheme_context(config_.scenario(in.variant, in.distance), in.scheme);
        std::ostringstream label;
        label << in.scheme.name << "/" << to_string(in.variant) << " d=" << in.distance
              << " n_p=" << in.n_p;
        in.label = label.str();
        return in;
    }

    double uniform(double lo, double hi)
    {
        return std::uniform_real_distribution<double>(lo, hi)(rng_);
    }

private:
    const ScenarioConfig& config_;
    std::mt19937_64 rng_;
};

// Golden-section argmin of E0/(1-p) in gamma at fixed payload. The second
// pass minimises ln E(g0 e^u) - ln E(g0), written with expm1/log1p so that
// rounding does not flatten the valley.
double golden_snr(const EnergyCoefficients& coeffs, double omega0, Bits n_p, Bits n_h)
{
    const double f = static_cast<double>(n_p) / static_cast<double>(n_p + n_h);
    const bool tpa = coeffs.variant == PaVariant::TPA;
    auto energy = [&](double g) {
        return (coeffs.a * coeffs.snr_term(g) / f + coeffs.b) * std::exp(omega0 / g);
    };
    const auto coarse = golden_section_min([&](double u) { return energy(std::exp(u)); },
                                           std::log(omega0 * 1e-2), std::log(omega0 * 1e10), 1e-9);
    const double g0 = std::exp(coarse.argmin);
    const double e0_ref = coeffs.a * coeffs.snr_term(g0) / f + coeffs.b;
    auto log_ratio = [&](double u) {
        const double d_term = tpa ? std::sqrt(g0) * std::expm1(0.5 * u) : g0 * std::expm1(u);
        return std::log1p(coeffs.a * d_term / f / e0_ref) + omega0 / g0 * std::expm1(-u);
    };
    const auto fine = golden_section_min(log_ratio, -1e-3, 1e-3, 1e-11);
    return g0 * std::exp(fine.argmin);
}

} // namespace

bool ValidationReport::passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::vector<RelativeErrorPoint> relative_error_curve(const ModulationScheme& scheme,
                                                     std::span<const Bits> sizes,
                                                     double snr_db_lo, double snr_db_hi,
                                                     const QuadratureTolerance& tol)
{
    std::vector<RelativeErrorPoint> out;
    for (Bits n : sizes) {
        const double omega_numeric = waterfall_threshold_numeric(scheme, n, tol);
        for (double db = snr_db_lo; db <= snr_db_hi + 1e-9; db += 1.0) {
            const double g = db_to_linear(db);
            RelativeErrorPoint p;
            p.n_bits = n;
            p.snr_db = db;
            p.per_exact = per_rayleigh_exact(scheme, n, g, tol);
            p.per_approx = per_rayleigh(scheme, n, g);
            p.per_bound = per_from_threshold(omega_numeric, g);
            p.re_approx_percent = std::abs(p.per_approx - p.per_exact) / p.per_exact * 100.0;
            p.re_bound_percent = std::abs(p.per_bound - p.per_exact) / p.per_exact * 100.0;
            out.push_back(p);
        }
    }
    return out;
}

void write_relative_error_csv(std::ostream& out, const std::vector<RelativeErrorPoint>& points)
{
    CsvWriter csv(out);
    csv.row({"n_bits", "snr_db", "per_exact", "per_approx", "per_bound", "re_approx_percent",
             "re_bound_percent"});
    for (const auto& p : points)
        csv.row({std::to_string(p.n_bits), CsvWriter::number(p.snr_db),
                 CsvWriter::number(p.per_exact), CsvWriter::number(p.per_approx),
                 CsvWriter::number(p.per_bound), CsvWriter::number(p.re_approx_percent),
                 CsvWriter::number(p.re_bound_percent)});
}

CheckResult check_waterfall_threshold(const ScenarioConfig& config)
{
    Worst worst;
    for (const auto& m : config.modulations) {
        for (Bits n : kThresholdSizes) {
            const double closed = waterfall_threshold(m, n);
            const double numeric = waterfall_threshold_numeric(m, n, config.tolerance.quadrature);
            worst.update(std::abs(closed - numeric) / numeric,
                         m.name + " N=" + std::to_string(n));
        }
    }
    return finish("waterfall_threshold_vs_quadrature", worst, 0.03);
}

CheckResult check_relative_error_gap(const ScenarioConfig& config)
{
    const ModulationScheme qam16 = find_scheme(config, "16QAM");
    Worst worst;
    for (const auto& p :
         relative_error_curve(qam16, kCurveSizes, 10.0, 40.0, config.tolerance.quadrature)) {
        std::ostringstream at;
        at << "N=" << p.n_bits << " snr=" << p.snr_db << "dB";
        worst.update(std::abs(p.re_approx_percent - p.re_bound_percent), at.str());
    }
    return finish("per_relative_error_gap_percent", worst, 2.0);
}

CheckResult check_snr_optimum_quadratic(const ScenarioConfig& config,
                                        const ValidationOptions& options)
{
    InstanceSource source(config, options.seed);
    const std::array<PaVariant, 2> variants{PaVariant::CPA, PaVariant::ETPA};
    Worst worst;
    for (int i = 0; i < options.instances; ++i) {
        const Instance in = source.draw(variants);
        const double omega0 = waterfall_threshold(in.scheme, in.n_p + config.overhead_bits);
        const double closed =
            optimal_snr_quadratic(in.ctx.coeffs, omega0, in.n_p, config.overhead_bits) *
            (1.0 + options.snr_perturbation);
        const double oracle = golden_snr(in.ctx.coeffs, omega0, in.n_p, config.overhead_bits);
        worst.update(std::abs(closed - oracle) / oracle, in.label);
    }
    return finish("snr_optimum_cpa_etpa_vs_golden", worst, 1e-6);
}

CheckResult check_snr_optimum_tpa(const ScenarioConfig& config, const ValidationOptions& options)
{
    InstanceSource source(config, options.seed + 1);
    const std::array<PaVariant, 1> variants{PaVariant::TPA};
    Worst worst;
    for (int i = 0; i < options.instances; ++i) {
        const Instance in = source.draw(variants);
        const double omega0 = waterfall_threshold(in.scheme, in.n_p + config.overhead_bits);
        const double root = optimal_snr_tpa(in.ctx.coeffs, omega0, in.scheme.k_eff(), in.n_p,
                                            config.overhead_bits)
                                .gamma_bar;
        const double oracle = golden_snr(in.ctx.coeffs, omega0, in.n_p, config.overhead_bits);
        worst.update(std::abs(root - oracle) / oracle, in.label);
    }
    return finish("snr_optimum_tpa_vs_golden", worst, 1e-6);
}

CheckResult check_tpa_closed_form(const ScenarioConfig& config, const ValidationOptions& options)
{
    InstanceSource source(config, options.seed + 2);
    const std::array<PaVariant, 1> variants{PaVariant::TPA};
    Worst worst;
    int compared = 0;
    for (int i = 0; i < options.instances; ++i) {
        const Instance in = source.draw(variants);
        const double omega0 = waterfall_threshold(in.scheme, in.n_p + config.overhead_bits);
        const auto sol = optimal_snr_tpa(in.ctx.coeffs, omega0, in.scheme.k_eff(), in.n_p,
                                         config.overhead_bits);
        if (!sol.closed_form)
            continue;
        ++compared;
        worst.update(std::abs(*sol.closed_form - sol.gamma_bar) / sol.gamma_bar, in.label);
    }
    CheckResult r = finish("tpa_cardano_vs_root", worst, 1e-6);
    r.detail += " (" + std::to_string(compared) + " instances with a real radical)";
    return r;
}

CheckResult check_payload_optimum(const ScenarioConfig& config, const ValidationOptions& options)
{
    InstanceSource source(config, options.seed + 3);
    const std::array<PaVariant, 3> variants{PaVariant::CPA, PaVariant::ETPA, PaVariant::TPA};
    const Bits n_h = config.overhead_bits;
    constexpr Bits kUpper = 10'000'000;
    Worst worst;
    for (int i = 0; i < options.instances; ++i) {
        const Instance in = source.draw(variants);
        const double g = db_to_linear(source.uniform(10.0, 40.0));
        const Bits numeric = numeric_optimal_payload(in.ctx.coeffs, in.scheme, n_h, g, kUpper);
        if (in.variant == PaVariant::TPA) {
            const auto closed = tpa_payload_closed_form(in.ctx.coeffs, in.scheme, n_h, g);
            if (!closed || *closed > static_cast<double>(kUpper))
                continue;
            worst.update(std::abs(std::floor(*closed) - static_cast<double>(numeric)), in.label);
        } else {
            const double closed = optimal_payload_quadratic_real(in.ctx.coeffs, in.scheme, n_h, g);
            if (closed > static_cast<double>(kUpper))
                continue;
            worst.update(std::abs(std::floor(closed) - static_cast<double>(numeric)), in.label);
        }
    }
    return finish("payload_optimum_vs_golden_bits", worst, 1.0);
}

CheckResult check_per_monotonicity(const ScenarioConfig& config)
{
    Worst worst;
    const std::array<Bits, 6> sizes{50, 120, 512, 1024, 4096, 10048};
    for (const auto& m : config.modulations) {
        for (std::size_t j = 0; j < sizes.size(); ++j) {
            double prev = 2.0;
            for (double db = 0.0; db <= 40.0; db += 0.5) {
                const double g = db_to_linear(db);
                const double p = per_rayleigh(m, sizes[j], g);
                worst.update(std::max(0.0, p - prev), m.name + " snr increase");
                if (j > 0)
                    worst.update(std::max(0.0, per_rayleigh(m, sizes[j - 1], g) - p),
                                 m.name + " size increase");
                const double a = awgn_per(m, sizes[j], g);
                if (j > 0)
                    worst.update(std::max(0.0, awgn_per(m, sizes[j - 1], g) - a),
                                 m.name + " awgn size increase");
                prev = p;
            }
        }
    }
    return finish("per_monotonicity", worst, 0.0);
}

CheckResult check_round_trips(const ScenarioConfig& config)
{
    Worst worst;
    const Bits n_h = config.overhead_bits;
    for (const auto& m : config.modulations) {
        for (int tau = 0; tau <= 3; ++tau) {
            const QosSpec qos = config.qos.with_retransmissions(tau);
            for (Bits n : {1, 10, 100, 976, 10000}) {
                const double g = snr_min(m, n_h, n, qos);
                const std::string at = m.name + " tau=" + std::to_string(tau) + " n=" +
                                       std::to_string(n);
                // PER at gamma_min sits on the bound.
                worst.update(std::abs(per_rayleigh(m, n_h + n, g) / qos.per_attempt_bound() - 1.0),
                             at + " per(gamma_min)");
                // payload_max undoes snr_min up to the floor.
                const Bits back = payload_max(m, n_h, g * (1.0 + 1e-12), qos);
                worst.update(back == n ? 0.0 : 1.0, at + " payload_max");
                const Bits fit = payload_max(m, n_h, g * 1.5, qos);
                if (fit > 0 && fit < kPayloadSaturation)
                    worst.update(std::max(0.0, snr_min(m, n_h, fit, qos) / (g * 1.5) - 1.0),
                                 at + " snr_min(payload_max)");
            }
        }
    }
    return finish("snr_min_payload_max_round_trip", worst, 1e-9);
}

CheckResult check_pa_saturation(const ScenarioConfig& config)
{
    Worst worst;
    for (PaVariant v : {PaVariant::CPA, PaVariant::TPA, PaVariant::ETPA}) {
        for (const auto& m : config.modulations) {
            const PaModel pa = config.pa_config(v).for_scheme(m, config.link.p0);
            const std::string at = std::string(to_string(v)) + " " + m.name;
            worst.update(std::abs(pa_efficiency(pa, pa.p_t_max) - pa.eta_max) / pa.eta_max,
                         at + " eta(P_t,max)");
            double prev = 0.0;
            for (int i = 1; i <= 100; ++i) {
                const double eta = pa_efficiency(pa, pa.p_t_max * i / 100.0);
                worst.update(std::max(0.0, eta / pa.eta_max - 1.0), at + " eta <= eta_max");
                worst.update(std::max(0.0, prev - eta), at + " eta non-decreasing");
                prev = eta;
            }
        }
    }
    return finish("pa_efficiency_saturation", worst, 1e-12);
}

CheckResult check_transmission_limits()
{
    Worst worst;
    for (int tau = 0; tau <= 10; ++tau)
        worst.update(std::abs(avg_transmissions(0.0, tau) - 1.0), "p=0");
    for (double p : {0.0, 0.01, 0.3, 0.5, 0.9}) {
        worst.update(std::abs(avg_transmissions(p, 0) - 1.0), "tau=0");
        worst.update(std::abs(avg_transmissions(p, 5000) * (1.0 - p) - 1.0), "tau large");
        double prev = 0.0;
        for (int tau = 0; tau <= 20; ++tau) {
            const double t = avg_transmissions(p, tau);
            worst.update(std::max(0.0, prev - t), "non-decreasing in tau");
            worst.update(std::max(0.0, t * (1.0 - p) - 1.0 - 1e-15), "bounded by 1/(1-p)");
            prev = t;
        }
    }
    return finish("avg_transmissions_limits", worst, 1e-12);
}

CheckResult check_scale_invariance(const ScenarioConfig& config)
{
    Worst worst;
    const OptimizerOptions base = config.optimizer_options();
    for (PaVariant v : {PaVariant::CPA, PaVariant::TPA, PaVariant::ETPA}) {
        for (double d : {3.0, 15.0, 30.0, 45.0}) {
            const LinkScenario sc = config.scenario(v, d);
            const OperatingPoint ref = joint_optimize(sc, config.modulations, base);
            for (double scale : {1e-3, 1e3}) {
                OptimizerOptions o = base;
                o.coefficient_scale = scale;
                const OperatingPoint p = joint_optimize(sc, config.modulations, o);
                std::ostringstream at;
                at << to_string(v) << " d=" << d << " scale=" << scale;
                if (p.feasible != ref.feasible || p.scheme.name != ref.scheme.name ||
                    p.tau_r != ref.tau_r) {
                    worst.update(1.0, at.str() + " selection changed");
                    continue;
                }
                if (!ref.feasible)
                    continue;
                worst.update(static_cast<double>(std::abs(p.n_p - ref.n_p)) /
                                 static_cast<double>(ref.n_p),
                             at.str() + " payload");
                worst.update(std::abs(p.gamma_bar / ref.gamma_bar - 1.0), at.str() + " snr");
            }
        }
    }
    return finish("argmin_scale_invariance", worst, 1e-6);
}

CheckResult check_multi_start(const ScenarioConfig& config, const ValidationOptions& options)
{
    std::mt19937_64 rng(options.seed + 4);
    std::uniform_int_distribution<Bits> pick_n(0, 5000);
    std::uniform_real_distribution<double> pick_db(0.0, 40.0);
    const OptimizerOptions o = config.optimizer_options();
    Worst worst;
    for (PaVariant v : {PaVariant::CPA, PaVariant::TPA, PaVariant::ETPA}) {
        for (double d : {2.0, 12.0, 25.0, 40.0}) {
            const LinkScenario sc = config.scenario(v, d);
            for (const auto& m : config.modulations) {
                const OperatingPoint ref = optimize_combination(sc, m, 2, o);
                for (int k = 0; k < 5; ++k) {
                    FixedPointStart start{pick_n(rng), db_to_linear(pick_db(rng))};
                    const OperatingPoint p = optimize_combination(sc, m, 2, o, start);
                    std::ostringstream at;
                    at << to_string(v) << " d=" << d << " " << m.name << " start n_p="
                       << start.n_p;
                    if (p.feasible != ref.feasible) {
                        worst.update(1.0, at.str() + " feasibility differs");
                        continue;
                    }
                    if (ref.feasible)
                        worst.update(std::abs(p.energy / ref.energy - 1.0), at.str());
                }
            }
        }
    }
    return finish("fixed_point_multi_start", worst, 1e-6);
}

ValidationReport run_validation(const ScenarioConfig& config, const ValidationOptions& options)
{
    ValidationReport report;
    auto run = [&](auto&& fn, const char* name) {
        try {
            report.checks.push_back(fn());
        } catch (const Error& e) {
            report.checks.push_back({name, false, 0.0, 0.0, std::string("error: ") + e.what()});
        }
    };
    run([&] { return check_waterfall_threshold(config); }, "waterfall_threshold_vs_quadrature");
    run([&] { return check_relative_error_gap(config); }, "per_relative_error_gap_percent");
    run([&] { return check_snr_optimum_quadratic(config, options); },
        "snr_optimum_cpa_etpa_vs_golden");
    run([&] { return check_snr_optimum_tpa(config, options); }, "snr_optimum_tpa_vs_golden");
    run([&] { return check_tpa_closed_form(config, options); }, "tpa_cardano_vs_root");
    run([&] { return check_payload_optimum(config, options); }, "payload_optimum_vs_golden_bits");
    run([&] { return check_per_monotonicity(config); }, "per_monotonicity");
    run([&] { return check_round_trips(config); }, "snr_min_payload_max_round_trip");
    run([&] { return check_pa_saturation(config); }, "pa_efficiency_saturation");
    run([] { return check_transmission_limits(); }, "avg_transmissions_limits");
    run([&] { return check_scale_invariance(config); }, "argmin_scale_invariance");
    run([&] { return check_multi_start(config, options); }, "fixed_point_multi_start");
    return report;
}

void write_report(std::ostream& out, const ValidationReport& report)
{
    CsvWriter csv(out);
    csv.row({"check", "status", "residual", "tolerance", "detail"});
    for (const auto& c : report.checks)
        csv.row({c.name, c.passed ? "PASS" : "FAIL", CsvWriter::number(c.residual, 6),
                 CsvWriter::number(c.tolerance, 6), c.detail});
}

} // namespace linkopt
