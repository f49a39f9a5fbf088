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

#include "linkopt/config.hpp"
#include "linkopt/validation.hpp"

#include <optional>
#include <ostream>
#include <vector>

namespace linkopt {

enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,
    kExitInfeasible = 2,
    kExitValidation = 3,
};

/// Human-readable report of one optimised operating point.
void write_operating_point(std::ostream& out, const OperatingPoint& point);

int cmd_optimize(const ScenarioConfig& config, std::optional<double> distance,
                 std::optional<PaVariant> pa, std::ostream& out);

/// Rows ordered by distance, then by PA model in `pa_models` order.
int cmd_sweep(const ScenarioConfig& config, const std::vector<PaVariant>& pa_models,
              std::ostream& out);

int cmd_lifetime(const ScenarioConfig& config, const std::vector<PaVariant>& pa_models,
                 std::ostream& out);

/// Writes the check report to `out`; the relative-error curves go to `curves`
/// when given.
int cmd_validate(const ScenarioConfig& config, const ValidationOptions& options,
                 std::ostream& out, std::ostream* curves = nullptr);

} // namespace linkopt
