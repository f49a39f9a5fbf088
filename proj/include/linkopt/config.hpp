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

#include "linkopt/energy.hpp"
#include "linkopt/lifetime.hpp"
#include "linkopt/modulation.hpp"
#include "linkopt/optimizer.hpp"
#include "linkopt/quadrature.hpp"

#include <array>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace linkopt {

struct SweepSpec {
    double distance_min = 1.0;
    double distance_max = 80.0;
    double distance_step = 1.0;
    std::vector<PaVariant> pa_models{PaVariant::CPA, PaVariant::TPA, PaVariant::ETPA};

    std::vector<double> distances() const;
};

struct ToleranceSpec {
    double delta = 1e-6;
    int max_iterations = 100;
    QuadratureTolerance quadrature;
};

struct ScenarioConfig {
    LinkBudget link;
    QosSpec qos{1e-3, 3};
    std::array<PaConfig, 3> pa; ///< indexed by PaVariant
    CircuitPower circuit;
    Bits overhead_bits = 48;
    Bits max_payload_bits = 1'000'000;
    PaprFormula papr_formula = PaprFormula::Typeset;
    std::vector<ModulationScheme> modulations;
    SweepSpec sweep;
    DutyProfile duty;
    std::string baseline_modulation = "OQPSK";
    ToleranceSpec tolerance;

    const PaConfig& pa_config(PaVariant variant) const
    {
        return pa[static_cast<std::size_t>(variant)];
    }
    LinkScenario scenario(PaVariant variant) const;
    LinkScenario scenario(PaVariant variant, double distance) const;
    OptimizerOptions optimizer_options() const;
    ModulationScheme baseline() const;
};

/// The built-in defaults, shipped as configs/default.json.
ScenarioConfig default_config();

/// Parses JSON text. Missing keys keep their defaults; unknown keys and bad
/// values raise ConfigError naming the offending field.
ScenarioConfig parse_config(std::string_view text);

ScenarioConfig load_config(const std::filesystem::path& path);

/// Serialises a configuration; parse_config(to_json(c)) reproduces c.
std::string to_json(const ScenarioConfig& config);

} // namespace linkopt
