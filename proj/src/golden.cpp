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

#include "linkopt/golden.hpp"

#include "linkopt/error.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>
#include <vector>

namespace linkopt {

namespace {

const double kInvPhi = (std::sqrt(5.0) - 1.0) / 2.0; // rho

// Samples must fall then rise; a fall after a rise means a second valley.
void check_single_valley(std::vector<std::pair<double, double>> samples)
{
    std::sort(samples.begin(), samples.end());
    bool rising = false;
    for (std::size_t i = 1; i < samples.size(); ++i) {
        const double prev = samples[i - 1].second;
        const double cur = samples[i].second;
        const double eps = 1e-12 * std::max({std::abs(prev), std::abs(cur), 1e-300});
        if (cur > prev + eps) {
            rising = true;
        } else if (rising && cur < prev - eps) {
            std::ostringstream msg;
            msg << "golden section: function is not unimodal (value rises to " << prev
                << " at x=" << samples[i - 1].first << " then falls to " << cur
                << " at x=" << samples[i].first << ")";
            throw NumericError(msg.str());
        }
    }
}

} // namespace

int golden_evaluation_bound(double width, double tol)
{
    return static_cast<int>(std::ceil(std::log(width / tol) / std::log(1.0 / kInvPhi)));
}

GoldenResult golden_section_min(const std::function<double(double)>& f, double lo, double hi,
                                double tol)
{
    if (!(lo < hi))
        throw DomainError("golden section: need lo < hi");
    if (!(tol > 0.0))
        throw DomainError("golden section: tolerance must be positive");

    std::vector<std::pair<double, double>> samples;
    auto eval = [&](double x) {
        const double y = f(x);
        if (std::isnan(y)) {
            std::ostringstream msg;
            msg << "golden section: f(" << x << ") is NaN";
            throw NumericError(msg.str());
        }
        samples.emplace_back(x, y);
        return y;
    };

    double a = lo;
    double b = hi;
    double c = b - kInvPhi * (b - a);
    double d = a + kInvPhi * (b - a);
    double fc = eval(c);
    double fd = eval(d);
    while (b - a > 2.0 * tol) {
        if (fc <= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - kInvPhi * (b - a);
            if (b - a <= 2.0 * tol)
                break;
            fc = eval(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + kInvPhi * (b - a);
            if (b - a <= 2.0 * tol)
                break;
            fd = eval(d);
        }
    }
    check_single_valley(samples);

    GoldenResult out;
    out.evaluations = static_cast<int>(samples.size());
    out.argmin = 0.5 * (a + b);
    out.bracket_width = b - a;
    out.value = f(out.argmin);
    return out;
}

} // namespace linkopt
