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

#pragma once

#include "linkopt/optimizer.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace linkopt {

/// Battery and traffic profile of a sensor node.
struct DutyProfile {
    double charge_ah = 2.0;
    double voltage = 3.0;            ///< V
    double payload_per_period = 5000; ///< bits delivered each period
    double period = 300.0;           ///< s

    void validate() const;
    double battery_energy() const { return charge_ah * 3600.0 * voltage; }
};

/// Lifetime in seconds for a given energy per delivered bit.
double lifetime_seconds(double energy_per_bit, const DutyProfile& profile);

/// Percentage gain of `optimized` over `baseline` lifetime.
double lifetime_gain_percent(double optimized, double baseline);

struct LifetimeRow {
    double distance = 0.0;
    PaVariant pa_variant = PaVariant::CPA;
    std::optional<double> lifetime;          ///< empty when no scheme is feasible
    std::optional<double> baseline_lifetime; ///< empty when the baseline is infeasible
    std::optional<double> gain_percent;
    std::string modulation;
};

/// Lifetime of the optimised link against a single-scheme baseline, each
/// optimised over payload, SNR and retransmissions.
std::vector<LifetimeRow> lifetime_sweep(const LinkScenario& scenario,
                                        std::span<const double> distances,
                                        std::span<const ModulationScheme> modulations,
                                        const ModulationScheme& baseline,
                                        const DutyProfile& profile,
                                        const OptimizerOptions& options = {});

} // namespace linkopt
