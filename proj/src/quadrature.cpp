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

#include "linkopt/quadrature.hpp"

#include "linkopt/error.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

namespace linkopt {

namespace {

constexpr int kMaxDoublings = 200;

} // namespace

QuadratureResult integrate_to_infinity(const std::function<double(double)>& f,
                                       double initial_cutoff,
                                       const QuadratureTolerance& tol,
                                       std::span<const double> breakpoints)
{
    using boost::math::quadrature::gauss_kronrod;

    if (!(initial_cutoff > 0.0))
        throw DomainError("quadrature: initial cutoff must be positive");

    double cutoff = initial_cutoff;
    int doublings = 0;
    while (!(f(cutoff) < tol.cutoff_integrand)) {
        if (++doublings > kMaxDoublings) {
            std::ostringstream msg;
            msg << "quadrature: integrand still " << f(cutoff) << " at cutoff " << cutoff;
            throw NumericError(msg.str());
        }
        cutoff *= 2.0;
    }

    std::vector<double> edges{0.0};
    for (double b : breakpoints)
        if (b > 0.0 && b < cutoff)
            edges.push_back(b);
    edges.push_back(cutoff);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    QuadratureResult out;
    out.upper_cutoff = cutoff;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        double err = 0.0;
        double l1 = 0.0;
        out.value += gauss_kronrod<double, 15>::integrate(
            f, edges[i], edges[i + 1], tol.max_depth, tol.relative, &err, &l1);
        out.error_estimate += err;
    }

    const double allowed = std::max(tol.relative * std::abs(out.value), tol.absolute);
    if (!std::isfinite(out.value) || out.error_estimate > allowed) {
        std::ostringstream msg;
        msg << "quadrature did not converge: value " << out.value << ", error estimate "
            << out.error_estimate << " > " << allowed << ", cutoff " << cutoff;
        throw NumericError(msg.str());
    }
    return out;
}

} // namespace linkopt
