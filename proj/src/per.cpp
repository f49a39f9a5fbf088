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

#include "linkopt/per.hpp"

#include "linkopt/error.hpp"
#include "linkopt/units.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace linkopt {

namespace {

double gaussian_q(double x) { return 0.5 * std::erfc(x / std::sqrt(2.0)); }

void require_bits(Bits n_bits)
{
    if (n_bits < 1)
        throw DomainError("packet length must be at least one bit, got " + std::to_string(n_bits));
}

void require_positive_snr(double gamma_bar)
{
    if (!(gamma_bar > 0.0))
        throw DomainError("average SNR must be positive");
}

} // namespace

QosSpec::QosSpec(double target_per, int max_retransmissions)
    : target_per_(target_per), max_retransmissions_(max_retransmissions)
{
    if (!(target_per > 0.0 && target_per < 1.0))
        throw DomainError("target PER must lie in (0, 1)");
    if (max_retransmissions < 0)
        throw DomainError("max retransmissions must be non-negative");
    per_attempt_bound_ = std::pow(target_per, 1.0 / (max_retransmissions + 1.0));
}

double ber(const ModulationScheme& scheme, double gamma)
{
    if (!(gamma >= 0.0))
        throw DomainError("SNR must be non-negative");
    const double b = scheme.ber_form == BerForm::Exponential
                         ? scheme.c_m * std::exp(-scheme.k_m * gamma)
                         : scheme.c_m * gaussian_q(std::sqrt(scheme.k_m * gamma));
    return std::clamp(b, 0.0, 1.0);
}

double awgn_per(const ModulationScheme& scheme, Bits n_bits, double gamma)
{
    require_bits(n_bits);
    const double b = ber(scheme, gamma);
    if (b >= 1.0)
        return 1.0;
    // 1 - (1-b)^N without cancellation for small b.
    return std::clamp(-std::expm1(static_cast<double>(n_bits) * std::log1p(-b)), 0.0, 1.0);
}

double waterfall_threshold(const ModulationScheme& scheme, Bits n_bits)
{
    require_bits(n_bits);
    const double x = static_cast<double>(n_bits) * scheme.c_eff();
    if (!(x > 1.0))
        throw RegimeError(scheme.name + ": N*c_eff = " + std::to_string(x) +
                          " <= 1, packet too short for the Gumbel approximation");
    return (std::log(x) + kEulerGamma) / scheme.k_eff();
}

double waterfall_threshold_numeric(const ModulationScheme& scheme, Bits n_bits,
                                   const QuadratureTolerance& tol)
{
    require_bits(n_bits);
    // Split near the waterfall location where the integrand drops from ~1 to ~0.
    const double scale = 1.0 / scheme.k_eff();
    const double x = static_cast<double>(n_bits) * scheme.c_eff();
    const double location = x > 1.0 ? std::log(x) * scale : 0.0;
    const std::vector<double> breaks{location - 2.0 * scale, location, location + 4.0 * scale};
    return integrate_to_infinity([&](double g) { return awgn_per(scheme, n_bits, g); }, 1.0, tol,
                                 breaks)
        .value;
}

double per_from_threshold(double omega0, double gamma_bar)
{
    require_positive_snr(gamma_bar);
    return -std::expm1(-omega0 / gamma_bar);
}

double per_rayleigh(const ModulationScheme& scheme, Bits n_bits, double gamma_bar)
{
    require_positive_snr(gamma_bar);
    return per_from_threshold(waterfall_threshold(scheme, n_bits), gamma_bar);
}

double per_rayleigh_exact(const ModulationScheme& scheme, Bits n_bits, double gamma_bar,
                          const QuadratureTolerance& tol)
{
    require_bits(n_bits);
    require_positive_snr(gamma_bar);
    const auto integrand = [&](double g) {
        const double density = std::exp(-g / gamma_bar) / gamma_bar;
        return density == 0.0 ? 0.0 : awgn_per(scheme, n_bits, g) * density;
    };
    const double scale = 1.0 / scheme.k_eff();
    const double x = static_cast<double>(n_bits) * scheme.c_eff();
    const double location = x > 1.0 ? std::log(x) * scale : 0.0;
    const std::vector<double> breaks{gamma_bar, location, location + 4.0 * scale};
    return integrate_to_infinity(integrand, std::min(1.0, gamma_bar), tol, breaks).value;
}

double required_per(const QosSpec& qos) { return qos.per_attempt_bound(); }

double snr_min(const ModulationScheme& scheme, Bits n_h, Bits n_p, const QosSpec& qos)
{
    const Bits n = n_h + n_p;
    // waterfall_threshold() carries the regime check.
    const double omega0 = waterfall_threshold(scheme, n);
    return -omega0 / std::log1p(-qos.per_attempt_bound());
}

Bits payload_max(const ModulationScheme& scheme, Bits n_h, double gamma_bar, const QosSpec& qos)
{
    require_positive_snr(gamma_bar);
    const double k = scheme.k_eff();
    const double c = scheme.c_eff();
    const double exponent = -(kEulerGamma + gamma_bar * k * std::log1p(-qos.per_attempt_bound()));
    const double saturation = static_cast<double>(kPayloadSaturation);
    if (exponent > std::log(c * (saturation + static_cast<double>(n_h))))
        return kPayloadSaturation;

    const double value = std::exp(exponent) / c - static_cast<double>(n_h);
    if (!(value >= 1.0))
        return 0;
    Bits n_p = static_cast<Bits>(std::floor(value));
    // Guard the floor against rounding in exp/log.
    while (n_p > 0 && per_rayleigh(scheme, n_h + n_p, gamma_bar) > qos.per_attempt_bound())
        --n_p;
    return n_p;
}

CodedConstants coded_constants(const ModulationScheme& scheme)
{
    const double k = scheme.k_eff();
    return {1.0 / k, (std::log(scheme.c_eff()) + kEulerGamma) / k};
}

double waterfall_from_coded_constants(double slope, double offset, Bits n_bits)
{
    require_bits(n_bits);
    if (!(slope > 0.0))
        throw DomainError("coded-scheme slope k_M must be positive");
    const double omega0 = slope * std::log(static_cast<double>(n_bits)) + offset;
    if (!(omega0 > 0.0))
        throw RegimeError("coded-scheme threshold is not positive for N = " +
                          std::to_string(n_bits));
    return omega0;
}

} // namespace linkopt
