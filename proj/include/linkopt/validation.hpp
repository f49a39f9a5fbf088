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

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace linkopt {

struct CheckResult {
    std::string name;
    bool passed = false;
    double residual = 0.0;  ///< worst measured value
    double tolerance = 0.0; ///< limit it was compared against
    std::string detail;
};

struct ValidationOptions {
    int instances = 200;
    std::uint64_t seed = 20260101;
    /// Relative error injected into the CPA/ETPA SNR closed form (mutation sanity).
    double snr_perturbation = 0.0;
};

struct ValidationReport {
    std::vector<CheckResult> checks;
    bool passed() const;
};

struct RelativeErrorPoint {
    Bits n_bits = 0;
    double snr_db = 0.0;
    double per_exact = 0.0;
    double per_approx = 0.0;
    double per_bound = 0.0;
    double re_approx_percent = 0.0;
    double re_bound_percent = 0.0;
};

/// Relative error of the closed-form PER and of the numeric upper bound against
/// the exact fading average, over snr_db_lo..snr_db_hi in 1 dB steps.
std::vector<RelativeErrorPoint> relative_error_curve(const ModulationScheme& scheme,
                                                     std::span<const Bits> sizes,
                                                     double snr_db_lo, double snr_db_hi,
                                                     const QuadratureTolerance& tol = {});

void write_relative_error_csv(std::ostream& out, const std::vector<RelativeErrorPoint>& points);

CheckResult check_waterfall_threshold(const ScenarioConfig& config);
CheckResult check_relative_error_gap(const ScenarioConfig& config);
CheckResult check_snr_optimum_quadratic(const ScenarioConfig& config,
                                        const ValidationOptions& options);
CheckResult check_snr_optimum_tpa(const ScenarioConfig& config, const ValidationOptions& options);
CheckResult check_tpa_closed_form(const ScenarioConfig& config, const ValidationOptions& options);
CheckResult check_payload_optimum(const ScenarioConfig& config, const ValidationOptions& options);
CheckResult check_per_monotonicity(const ScenarioConfig& config);
CheckResult check_round_trips(const ScenarioConfig& config);
CheckResult check_pa_saturation(const ScenarioConfig& config);
CheckResult check_transmission_limits();
CheckResult check_scale_invariance(const ScenarioConfig& config);
CheckResult check_multi_start(const ScenarioConfig& config, const ValidationOptions& options);

ValidationReport run_validation(const ScenarioConfig& config, const ValidationOptions& options = {});

/// One line per check: name,status,residual,tolerance,detail.
void write_report(std::ostream& out, const ValidationReport& report);

} // namespace linkopt
