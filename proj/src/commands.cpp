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

#include "linkopt/commands.hpp"

#include "linkopt/csv.hpp"
#include "linkopt/units.hpp"

#include <cstdio>

namespace linkopt {

namespace {

std::string fmt(const char* spec, double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

} // namespace

void write_operating_point(std::ostream& out, const OperatingPoint& p)
{
    out << "distance_m: " << fmt("%g", p.distance) << "\n";
    out << "pa_model: " << to_string(p.pa_variant) << "\n";
    out << "feasible: " << (p.feasible ? "true" : "false") << "\n";
    out << "binding: " << to_string(p.binding) << "\n";
    if (p.feasible) {
        out << "modulation: " << p.scheme.name << "\n";
        out << "snr_db: " << fmt("%.4f", linear_to_db(p.gamma_bar)) << "\n";
        out << "p_t_dbm: " << fmt("%.4f", watts_to_dbm(p.p_t)) << "\n";
        out << "p_pa_mw: " << fmt("%.6g", p.p_pa * 1e3) << "\n";
        out << "payload_bits: " << p.n_p << "\n";
        out << "retransmissions: " << p.tau_r << "\n";
        out << "energy_j_per_bit: " << fmt("%.6e", p.energy) << "\n";
    } else {
        for (const auto& d : p.diagnostics)
            out << "rejected: " << d << "\n";
    }
}

int cmd_optimize(const ScenarioConfig& config, std::optional<double> distance,
                 std::optional<PaVariant> pa, std::ostream& out)
{
    const LinkScenario sc =
        config.scenario(pa.value_or(PaVariant::CPA), distance.value_or(config.link.distance));
    const OperatingPoint p = joint_optimize(sc, config.modulations, config.optimizer_options());
    write_operating_point(out, p);
    return p.feasible ? kExitOk : kExitInfeasible;
}

int cmd_sweep(const ScenarioConfig& config, const std::vector<PaVariant>& pa_models,
              std::ostream& out)
{
    const std::vector<double> distances = config.sweep.distances();
    std::vector<std::vector<OperatingPoint>> by_pa;
    for (PaVariant v : pa_models)
        by_pa.push_back(sweep_distance(config.scenario(v), distances, config.modulations,
                                       config.optimizer_options()));

    CsvWriter csv(out);
    write_sweep_header(csv);
    bool any = false;
    for (std::size_t i = 0; i < distances.size(); ++i) {
        for (const auto& rows : by_pa) {
            write_sweep_row(csv, rows[i]);
            any = any || rows[i].feasible;
        }
    }
    return any ? kExitOk : kExitInfeasible;
}

int cmd_lifetime(const ScenarioConfig& config, const std::vector<PaVariant>& pa_models,
                 std::ostream& out)
{
    const std::vector<double> distances = config.sweep.distances();
    const ModulationScheme baseline = config.baseline();
    std::vector<std::vector<LifetimeRow>> by_pa;
    for (PaVariant v : pa_models)
        by_pa.push_back(lifetime_sweep(config.scenario(v), distances, config.modulations,
                                       baseline, config.duty, config.optimizer_options()));

    CsvWriter csv(out);
    write_lifetime_header(csv);
    bool any = false;
    for (std::size_t i = 0; i < distances.size(); ++i) {
        for (const auto& rows : by_pa) {
            write_lifetime_row(csv, rows[i]);
            any = any || rows[i].lifetime.has_value();
        }
    }
    return any ? kExitOk : kExitInfeasible;
}

int cmd_validate(const ScenarioConfig& config, const ValidationOptions& options,
                 std::ostream& out, std::ostream* curves)
{
    const ValidationReport report = run_validation(config, options);
    write_report(out, report);
    if (curves) {
        const std::array<Bits, 3> sizes{120, 1024, 10048};
        ModulationScheme qam16 = builtin_modulation("16QAM", config.papr_formula);
        for (const auto& m : config.modulations)
            if (m.name == "16QAM")
                qam16 = m;
        write_relative_error_csv(
            *curves, relative_error_curve(qam16, sizes, 10.0, 40.0, config.tolerance.quadrature));
    }
    return report.passed() ? kExitOk : kExitValidation;
}

} // namespace linkopt
