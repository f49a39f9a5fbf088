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

#include <functional>
#include <span>

namespace linkopt {

struct QuadratureTolerance {
    double relative = 1e-8;
    double absolute = 1e-14;
    /// The upper cutoff doubles until the integrand falls below this value.
    double cutoff_integrand = 1e-12;
    unsigned max_depth = 30;
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    double upper_cutoff = 0.0;
};

/// Integrates a non-negative, eventually non-increasing f over [0, inf).
///
/// The domain is truncated at the first cutoff (initial_cutoff * 2^k) where
/// f(cutoff) < tol.cutoff_integrand, then split at the optional breakpoints and
/// integrated with adaptive 15-point Gauss-Kronrod panels. Throws NumericError,
/// carrying the cutoff and error estimate, if the requested accuracy
/// max(relative*|I|, absolute) is not met.
QuadratureResult integrate_to_infinity(const std::function<double(double)>& f,
                                       double initial_cutoff,
                                       const QuadratureTolerance& tol = {},
                                       std::span<const double> breakpoints = {});

} // namespace linkopt
