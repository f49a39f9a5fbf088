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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include "linkopt/config.hpp"
#include "linkopt/lifetime.hpp"
#include "linkopt/optimizer.hpp"
#include "linkopt/units.hpp"
#include "linkopt/validation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

using namespace linkopt;

namespace {

int failures = 0;

void report(int id, bool ok, const std::string& what, const std::string& measured)
{
    std::printf("%s  criterion %d: %s | %s\n", ok ? "PASS" : "FAIL", id, what.c_str(),
                measured.c_str());
    if (!ok)
        ++failures;
}

std::string fmt(const char* spec, double a)
{
    char buf[128];
    std::snprintf(buf, sizeof buf, spec, a);
    return buf;
}

std::string best_scheme(const ScenarioConfig& cfg, PaVariant v, double d)
{
    const auto p = joint_optimize(cfg.scenario(v, d), cfg.modulations, cfg.optimizer_options());
    return p.feasible ? p.scheme.name : std::string();
}

// Largest distance at which `pred` still holds, assuming it holds at lo and
// switches off once along the scan.
double last_true(const std::function<bool(double)>& pred, double lo, double hi, double step)
{
    double a = lo;
    double b = lo;
    while (b <= hi && pred(b)) {
        a = b;
        b += step;
    }
    if (b > hi)
        return hi;
    while (b - a > 1e-3) {
        const double m = 0.5 * (a + b);
        (pred(m) ? a : b) = m;
    }
    return a;
}

double horizon(const ScenarioConfig& cfg, PaVariant v, const std::string& scheme)
{
    auto optimal = [&](double d) { return best_scheme(cfg, v, d) == scheme; };
    double start = 1.0;
    while (start <= 80.0 && !optimal(start))
        start += 0.5;
    if (start > 80.0)
        return 0.0;
    return last_true(optimal, start, 80.0, 0.5);
}

void criterion_1(const ScenarioConfig& cfg)
{
    const auto r = check_waterfall_threshold(cfg);
    report(1, r.passed, "waterfall threshold within 3% of quadrature, all schemes, N in {120,512,1024,10048}",
           "worst " + fmt("%.3f%%", 100.0 * r.residual) + " at " + r.detail);
}

void criterion_2(const ScenarioConfig& cfg)
{
    const auto r = check_relative_error_gap(cfg);
    report(2, r.passed, "16QAM PER relative error within 2 points of the numeric bound, 10..40 dB",
           "worst gap " + fmt("%.3f points", r.residual) + " at " + r.detail);
}

void criterion_3(const ScenarioConfig& cfg)
{
    ValidationOptions opt;
    opt.instances = 200;
    const auto a = check_snr_optimum_quadratic(cfg, opt);
    const auto b = check_snr_optimum_tpa(cfg, opt);
    const auto c = check_payload_optimum(cfg, opt);
    std::ostringstream m;
    m << "CPA/ETPA SNR " << fmt("%.2e", a.residual) << ", TPA SNR " << fmt("%.2e", b.residual)
      << ", payload " << fmt("%.0f bit", c.residual);
    report(3, a.passed && b.passed && c.passed,
           "closed-form optima match golden section on 200 random instances", m.str());
}

void criterion_4(const ScenarioConfig& base)
{
    ScenarioConfig cfg = base;
    cfg.modulations = {builtin_modulation("4QAM", cfg.papr_formula)};
    const ModulationScheme& m = cfg.modulations[0];
    const Bits n_p = 976;
    const QosSpec qos(1e-3, 3);

    struct Snr {
        double star, lo, hi;
    };
    auto at = [&](double d) {
        const SchemeContext ctx = make_scheme_context(cfg.scenario(PaVariant::CPA, d), m);
        const double w = waterfall_threshold(m, n_p + cfg.overhead_bits);
        return Snr{optimal_snr_quadratic(ctx.coeffs, w, n_p, cfg.overhead_bits),
                   snr_min(m, cfg.overhead_bits, n_p, qos), ctx.gamma_max};
    };
    const Snr s10 = at(10.0);
    const Snr s70 = at(70.0);
    const bool near_ok = s10.lo < s10.star && s10.star < s10.hi;
    const bool far_ok = constrain_snr(s70.star, s70.lo, s70.hi).binding == Binding::Infeasible;
    // Distance from which gamma_min binds (gamma* drops below it).
    const double onset = last_true([&](double d) { return at(d).star >= at(d).lo; }, 10.0, 70.0, 0.5);
    const double infeasible_from =
        last_true([&](double d) { return at(d).lo <= at(d).hi; }, 10.0, 70.0, 0.5);
    const bool mid_ok = onset >= 24.0 && onset <= 36.0 && onset < infeasible_from;
    std::ostringstream msg;
    msg << "10 m: min " << fmt("%.2f", linear_to_db(s10.lo)) << " < opt "
        << fmt("%.2f", linear_to_db(s10.star)) << " < max " << fmt("%.2f dB", linear_to_db(s10.hi))
        << "; gamma_min binds from " << fmt("%.1f m", onset) << "; infeasible beyond "
        << fmt("%.1f m", infeasible_from) << "; 70 m: max " << fmt("%.2f dB", linear_to_db(s70.hi))
        << " < min " << fmt("%.2f dB", linear_to_db(s70.lo));
    report(4, near_ok && mid_ok && far_ok,
           "4QAM n_p=976: unconstrained at 10 m, gamma_min binding near 30 m (+-20%), infeasible at 70 m",
           msg.str());
}

void criterion_5(const ScenarioConfig& cfg)
{
    std::vector<double> d;
    for (double x = 1.0; x <= 80.0; x += 0.5)
        d.push_back(x);
    const auto pts = sweep_distance(cfg.scenario(PaVariant::CPA), d, cfg.modulations,
                                    cfg.optimizer_options());
    bool monotone = true;
    bool contiguous = true;
    std::vector<std::string> seen;
    int prev_order = 1 << 30;
    std::string bands;
    for (const auto& p : pts) {
        if (!p.feasible)
            continue;
        if (p.scheme.bits_per_symbol > prev_order)
            monotone = false;
        prev_order = p.scheme.bits_per_symbol;
        if (seen.empty() || seen.back() != p.scheme.name) {
            if (std::find(seen.begin(), seen.end(), p.scheme.name) != seen.end())
                contiguous = false;
            seen.push_back(p.scheme.name);
            bands += (bands.empty() ? "" : " > ") + p.scheme.name + "@" + fmt("%g", p.distance);
        }
    }
    const double tpa = horizon(cfg, PaVariant::TPA, "64QAM");
    const double etpa = horizon(cfg, PaVariant::ETPA, "64QAM");
    const double ratio = tpa / etpa;
    std::ostringstream msg;
    msg << "CPA bands " << bands << "; 64QAM horizon TPA " << fmt("%.2f m", tpa) << ", ETPA "
        << fmt("%.2f m", etpa) << ", ratio " << fmt("%.3f", ratio);
    report(5, monotone && contiguous && tpa < etpa && ratio >= 0.3 && ratio <= 0.7,
           "CPA order non-increasing in contiguous bands; TPA/ETPA 64QAM horizon ratio in [0.3, 0.7]",
           msg.str());
}

void criterion_6(const ScenarioConfig& cfg)
{
    const double h64 = horizon(cfg, PaVariant::ETPA, "64QAM");
    const double h16 = horizon(cfg, PaVariant::ETPA, "16QAM");
    const bool ok = std::abs(h64 / 11.0 - 1.0) <= 0.3 && std::abs(h16 / 24.0 - 1.0) <= 0.3;
    report(6, ok, "ETPA 64QAM optimal to ~11 m and 16QAM to ~24 m (+-30%)",
           "64QAM to " + fmt("%.2f m", h64) + ", 16QAM to " + fmt("%.2f m", h16));
}

void criterion_7(const ScenarioConfig& cfg)
{
    const auto distances = cfg.sweep.distances();
    auto gains = [&](PaVariant v) {
        return lifetime_sweep(cfg.scenario(v), distances, cfg.modulations, cfg.baseline(), cfg.duty,
                              cfg.optimizer_options());
    };
    const auto cpa = gains(PaVariant::CPA);
    const auto tpa = gains(PaVariant::TPA);
    const auto etpa = gains(PaVariant::ETPA);
    auto short_range_max = [&](const std::vector<LifetimeRow>& rows) {
        double best = -1e300;
        for (const auto& r : rows)
            if (r.distance <= 5.0 && r.gain_percent)
                best = std::max(best, *r.gain_percent);
        return best;
    };
    const double g_cpa = short_range_max(cpa);
    const double g_etpa = short_range_max(etpa);
    std::string violations;
    for (std::size_t i = 0; i < distances.size(); ++i) {
        if (!tpa[i].gain_percent || !etpa[i].gain_percent)
            continue;
        const double t = *tpa[i].gain_percent;
        const double e = *etpa[i].gain_percent;
        const bool ok = e > 0.0 ? t < e : t <= e;
        if (!ok)
            violations += (violations.empty() ? "" : ", ") + fmt("%g m", distances[i]) + " (TPA " +
                          fmt("%.1f", t) + " vs ETPA " + fmt("%.1f", e) + ")";
    }
    const bool ok = std::abs(g_cpa - 180.0) <= 25.0 && std::abs(g_etpa - 125.0) <= 25.0 &&
                    violations.empty();
    std::ostringstream msg;
    msg << "max gain d<=5 m: CPA " << fmt("%.1f%%", g_cpa) << ", ETPA " << fmt("%.1f%%", g_etpa)
        << "; TPA not below ETPA at: " << (violations.empty() ? "none" : violations);
    report(7, ok, "lifetime gain vs OQPSK: CPA 180+-25%, ETPA 125+-25%, TPA below ETPA", msg.str());
}

void criterion_8(const ScenarioConfig& cfg)
{
    const auto r = run_validation(cfg);
    std::string failed;
    for (const auto& c : r.checks)
        if (!c.passed)
            failed += (failed.empty() ? "" : ", ") + c.name;
    report(8, r.passed(), "invariant and oracle suites under validate",
           std::to_string(r.checks.size()) + " checks, failing: " + (failed.empty() ? "none" : failed));
}

} // namespace

int main()
{
    const ScenarioConfig cfg = default_config();
    criterion_1(cfg);
    criterion_2(cfg);
    criterion_3(cfg);
    criterion_4(cfg);
    criterion_5(cfg);
    criterion_6(cfg);
    criterion_7(cfg);
    criterion_8(cfg);
    std::printf("%d of 8 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
