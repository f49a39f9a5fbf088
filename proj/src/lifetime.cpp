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

#include "linkopt/lifetime.hpp"

#include "linkopt/error.hpp"

namespace linkopt {

void DutyProfile::validate() const
{
    if (!(charge_ah > 0.0))
        throw DomainError("battery charge must be positive");
    if (!(voltage > 0.0))
        throw DomainError("battery voltage must be positive");
    if (!(payload_per_period > 0.0))
        throw DomainError("payload per period must be positive");
    if (!(period > 0.0))
        throw DomainError("period must be positive");
}

double lifetime_seconds(double energy_per_bit, const DutyProfile& profile)
{
    profile.validate();
    if (!(energy_per_bit > 0.0))
        throw DomainError("energy per bit must be positive");
    return profile.battery_energy() / (energy_per_bit * profile.payload_per_period) *
           profile.period;
}

double lifetime_gain_percent(double optimized, double baseline)
{
    if (!(baseline > 0.0))
        throw DomainError("baseline lifetime must be positive");
    return (optimized - baseline) / baseline * 100.0;
}

std::vector<LifetimeRow> lifetime_sweep(const LinkScenario& scenario,
                                        std::span<const double> distances,
                                        std::span<const ModulationScheme> modulations,
                                        const ModulationScheme& baseline,
                                        const DutyProfile& profile,
                                        const OptimizerOptions& options)
{
    profile.validate();
    const auto best = sweep_distance(scenario, distances, modulations, options);
    const std::vector<ModulationScheme> only{baseline};
    const auto base = sweep_distance(scenario, distances, only, options);

    std::vector<LifetimeRow> rows;
    rows.reserve(distances.size());
    for (std::size_t i = 0; i < distances.size(); ++i) {
        LifetimeRow row;
        row.distance = distances[i];
        row.pa_variant = scenario.pa.variant;
        if (best[i].feasible) {
            row.lifetime = lifetime_seconds(best[i].energy, profile);
            row.modulation = best[i].scheme.name;
        }
        if (base[i].feasible)
            row.baseline_lifetime = lifetime_seconds(base[i].energy, profile);
        if (row.lifetime && row.baseline_lifetime)
            row.gain_percent = lifetime_gain_percent(*row.lifetime, *row.baseline_lifetime);
        rows.push_back(row);
    }
    return rows;
}

} // namespace linkopt
