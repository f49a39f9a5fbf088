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

namespace linkopt {

struct GoldenResult {
    double argmin = 0.0;
    double value = 0.0;         ///< f(argmin)
    double bracket_width = 0.0; ///< width of the final bracket, <= 2*tol
    int evaluations = 0;        ///< evaluations of f during the search
};

/// Golden-section search for the minimum of a unimodal f on [lo, hi].
///
/// Returns the midpoint of the final bracket, so |argmin - x*| <= tol. Uses at
/// most ceil(log((hi-lo)/tol) / log(1/rho)) evaluations during the search plus
/// one at the returned point. Afterwards the sampled values are checked for a
/// single valley; a NumericError reports the first interior bump if f is
/// evidently not unimodal.
GoldenResult golden_section_min(const std::function<double(double)>& f, double lo, double hi,
                                double tol);

/// Upper bound on search evaluations for a bracket of width `width`.
int golden_evaluation_bound(double width, double tol);

} // namespace linkopt
