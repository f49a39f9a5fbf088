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

#include "linkopt/energy.hpp"

#include "linkopt/error.hpp"
#include "linkopt/units.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

namespace linkopt {

namespace {

// Relative slack when comparing a power against P_t,max computed elsewhere.
constexpr double kPowerSlack = 1e-12;

} // namespace

std::string_view to_string(PaVariant variant)
{
    switch (variant) {
    case PaVariant::CPA:
        return "cpa";
    case PaVariant::TPA:
        return "tpa";
    case PaVariant::ETPA:
        return "etpa";
    }
    return "?";
}

PaVariant parse_pa_variant(std::string_view text)
{
    std::string lower(text);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    if (lower == "cpa")
        return PaVariant::CPA;
    if (lower == "tpa")
        return PaVariant::TPA;
    if (lower == "etpa")
        return PaVariant::ETPA;
    throw DomainError("unknown PA model '" + std::string(text) + "' (expected cpa, tpa or etpa)");
}

void PaModel::validate() const
{
    if (!(eta_max > 0.0 && eta_max <= 1.0))
        throw DomainError("PA efficiency must lie in (0, 1]");
    if (!(p_t_max > 0.0))
        throw DomainError("PA maximum output power must be positive");
    if (!(etpa_c > 0.0))
        throw DomainError("ETPA constant must be positive");
}

PaModel PaConfig::for_scheme(const ModulationScheme& scheme, double p0) const
{
    PaModel pa{variant, eta_max, p_t_max.value_or(scheme.papr * p0), etpa_c};
    pa.validate();
    return pa;
}

void LinkBudget::validate() const
{
    if (!(distance > 0.0))
        throw DomainError("distance must be positive");
    if (!(kappa > 0.0))
        throw DomainError("path-loss exponent must be positive");
    if (!(bandwidth > 0.0))
        throw DomainError("bandwidth must be positive");
    if (!(p0 > 0.0))
        throw DomainError("maximum transmit power must be positive");
    if (!(n0 > 0.0))
        throw DomainError("noise density must be positive");
}

double one_sided_n0(double n0_half_dbm_per_hz) { return 2.0 * dbm_to_watts(n0_half_dbm_per_hz); }

double path_gain(const LinkBudget& link)
{
    return db_to_linear(link.g1_db) * std::pow(link.distance, link.kappa) *
           db_to_linear(link.link_margin_db);
}

double bit_rate(const LinkBudget& link, const ModulationScheme& scheme)
{
    return link.bandwidth * scheme.bits_per_symbol;
}

double pa_efficiency(const PaModel& pa, double p_t)
{
    if (!(p_t > 0.0) || p_t > pa.p_t_max * (1.0 + kPowerSlack))
        throw DomainError("PA output power must lie in (0, P_t,max]");
    const double ratio = std::min(p_t / pa.p_t_max, 1.0);
    switch (pa.variant) {
    case PaVariant::CPA:
        return pa.eta_max;
    case PaVariant::TPA:
        return pa.eta_max * std::sqrt(ratio);
    case PaVariant::ETPA:
        return pa.eta_max * ratio * (1.0 + pa.etpa_c) / (ratio + pa.etpa_c);
    }
    return pa.eta_max;
}

double transmit_power(double gamma_bar, const LinkBudget& link, const ModulationScheme& scheme)
{
    return gamma_bar * link.n0 * path_gain(link) * bit_rate(link, scheme);
}

double effective_power_cap(const LinkBudget& link, const PaModel& pa,
                           const ModulationScheme& scheme)
{
    return std::min(link.p0, pa.p_t_max / scheme.papr);
}

double EnergyCoefficients::snr_term(double gamma_bar) const
{
    return variant == PaVariant::TPA ? std::sqrt(gamma_bar) : gamma_bar;
}

EnergyCoefficients energy_coefficients(const PaModel& pa, const ModulationScheme& scheme,
                                       const LinkBudget& link, double p_c)
{
    const double xi = scheme.papr;
    const double noise_gain = link.n0 * path_gain(link);
    const double rb = bit_rate(link, scheme);

    EnergyCoefficients out;
    out.variant = pa.variant;
    switch (pa.variant) {
    case PaVariant::CPA:
        out.a = xi * noise_gain / pa.eta_max;
        out.b = p_c / rb;
        break;
    case PaVariant::TPA:
        out.a = xi * noise_gain * std::sqrt(pa.p_t_max) / (pa.eta_max * std::sqrt(noise_gain * rb));
        out.b = p_c / rb;
        break;
    case PaVariant::ETPA: {
        const double scale = pa.eta_max * (pa.etpa_c + 1.0);
        out.a = xi * noise_gain / scale;
        out.b = (xi * pa.etpa_c * pa.p_t_max / scale + p_c) / rb;
        break;
    }
    }
    return out;
}

double e0(const EnergyCoefficients& coeffs, Bits n_p, Bits n_h, double gamma_bar)
{
    if (n_p < 1)
        throw DomainError("payload must be at least one bit");
    if (!(gamma_bar > 0.0))
        throw DomainError("average SNR must be positive");
    const double overhead = static_cast<double>(n_p + n_h) / static_cast<double>(n_p);
    return overhead * coeffs.a * coeffs.snr_term(gamma_bar) + coeffs.b;
}

double avg_transmissions(double per, int tau_max)
{
    if (!(per >= 0.0 && per < 1.0))
        throw DomainError("PER must lie in [0, 1)");
    if (tau_max < 0)
        throw DomainError("retransmission limit must be non-negative");
    // (1 - p^(tau+1)) / (1 - p), written as a finite geometric sum for accuracy.
    double sum = 0.0;
    double term = 1.0;
    for (int i = 0; i <= tau_max; ++i) {
        sum += term;
        term *= per;
    }
    return sum;
}

double avg_transmissions_unbounded(double per)
{
    if (!(per >= 0.0 && per < 1.0))
        throw DomainError("PER must lie in [0, 1)");
    return 1.0 / (1.0 - per);
}

EnergyBreakdown energy_per_bit(const EnergyCoefficients& coeffs, const ModulationScheme& scheme,
                               Bits n_p, Bits n_h, double gamma_bar, const QosSpec& qos)
{
    EnergyBreakdown out;
    out.per = per_rayleigh(scheme, n_h + n_p, gamma_bar);
    out.transmissions = avg_transmissions(out.per, qos.max_retransmissions());
    out.e0 = e0(coeffs, n_p, n_h, gamma_bar);
    out.energy = out.transmissions * out.e0;
    return out;
}

EnergyBreakdown energy_per_bit_unbounded(const EnergyCoefficients& coeffs,
                                         const ModulationScheme& scheme, Bits n_p, Bits n_h,
                                         double gamma_bar)
{
    EnergyBreakdown out;
    out.per = per_rayleigh(scheme, n_h + n_p, gamma_bar);
    out.transmissions = avg_transmissions_unbounded(out.per);
    out.e0 = e0(coeffs, n_p, n_h, gamma_bar);
    out.energy = out.transmissions * out.e0;
    return out;
}

double energy_unbounded_continuous(const EnergyCoefficients& coeffs,
                                   const ModulationScheme& scheme, double n_p, Bits n_h,
                                   double gamma_bar)
{
    const double n = n_p + static_cast<double>(n_h);
    const double x = n * scheme.c_eff();
    if (!(x > 1.0))
        throw RegimeError(scheme.name + ": packet too short for the Gumbel approximation");
    const double omega0 = (std::log(x) + kEulerGamma) / scheme.k_eff();
    const double e0_value = (n / n_p) * coeffs.a * coeffs.snr_term(gamma_bar) + coeffs.b;
    return e0_value * std::exp(omega0 / gamma_bar);
}

double pa_power(const PaModel& pa, const ModulationScheme& scheme, double p_t)
{
    if (!(p_t > 0.0))
        throw DomainError("transmit power must be positive");
    if (scheme.papr * p_t > pa.p_t_max * (1.0 + kPowerSlack))
        throw PeakPowerError(scheme.name + ": peak power xi*P_t exceeds P_t,max");
    return scheme.papr * p_t / pa_efficiency(pa, p_t);
}

} // namespace linkopt
