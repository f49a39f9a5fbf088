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

#include "linkopt/modulation.hpp"
#include "linkopt/per.hpp"

#include <optional>
#include <string_view>

namespace linkopt {

enum class PaVariant { CPA, TPA, ETPA };

std::string_view to_string(PaVariant variant);
/// Parses "cpa", "tpa" or "etpa" (case-insensitive). Throws DomainError otherwise.
PaVariant parse_pa_variant(std::string_view text);

inline constexpr double kDefaultEtpaConstant = 0.0082;

/// A power amplifier with a concrete maximum designed output power.
struct PaModel {
    PaVariant variant = PaVariant::CPA;
    double eta_max = 0.8;  ///< eta_0 for CPA
    double p_t_max = 0.01; ///< watts
    double etpa_c = kDefaultEtpaConstant;

    void validate() const;
};

/// PA settings before they are bound to a modulation.
///
/// Without an explicit p_t_max the PA is headroom-matched to each scheme:
/// P_t,max = xi * P0, so the peak of a signal at P0 just fits.
struct PaConfig {
    PaVariant variant = PaVariant::CPA;
    double eta_max = 0.8;
    std::optional<double> p_t_max; ///< watts
    double etpa_c = kDefaultEtpaConstant;

    PaModel for_scheme(const ModulationScheme& scheme, double p0) const;
};

/// Link budget. n0 is the one-sided noise density in W/Hz, i.e. twice the
/// per-dimension value N0/2 that link tables usually quote.
struct LinkBudget {
    double distance = 1.0;      ///< m
    double kappa = 3.5;
    double g1_db = 30.0;
    double link_margin_db = 40.0;
    double n0 = 0.0;            ///< W/Hz
    double bandwidth = 1e4;     ///< Hz
    double p0 = 0.01;           ///< W

    void validate() const;
    LinkBudget at_distance(double d) const
    {
        LinkBudget copy = *this;
        copy.distance = d;
        return copy;
    }
};

/// One-sided N0 in W/Hz from the per-dimension density N0/2 in dBm/Hz.
double one_sided_n0(double n0_half_dbm_per_hz);

/// Path-loss gain G_d = G_1 d^kappa M_l (linear).
double path_gain(const LinkBudget& link);

/// Bit rate R_b = W log2 M.
double bit_rate(const LinkBudget& link, const ModulationScheme& scheme);

/// Drain efficiency at output power p_t. Throws DomainError unless 0 < p_t <= p_t_max.
double pa_efficiency(const PaModel& pa, double p_t);

/// Average transmit power needed for per-bit SNR gamma_bar: gamma_bar N0 G_d R_b.
double transmit_power(double gamma_bar, const LinkBudget& link, const ModulationScheme& scheme);

/// Largest average transmit power: min(P0, P_t,max / xi).
double effective_power_cap(const LinkBudget& link, const PaModel& pa,
                           const ModulationScheme& scheme);

/// Energy per bit decomposed as E0 = ((n_p+n_h)/n_p) A g(gamma) + B, with
/// g(gamma) = gamma for CPA/ETPA and sqrt(gamma) for TPA.
struct EnergyCoefficients {
    double a = 0.0; ///< J/bit per unit SNR (CPA/ETPA) or per unit sqrt(SNR) (TPA)
    double b = 0.0; ///< J/bit
    PaVariant variant = PaVariant::CPA;

    /// g(gamma) for this variant.
    double snr_term(double gamma_bar) const;
    EnergyCoefficients scaled(double factor) const { return {a * factor, b * factor, variant}; }
};

EnergyCoefficients energy_coefficients(const PaModel& pa, const ModulationScheme& scheme,
                                       const LinkBudget& link, double p_c);

/// Energy per information bit for one attempt.
double e0(const EnergyCoefficients& coeffs, Bits n_p, Bits n_h, double gamma_bar);

/// Mean number of transmissions with at most tau_max retransmissions.
double avg_transmissions(double per, int tau_max);
/// Mean number of transmissions without a retransmission limit, 1/(1-p).
double avg_transmissions_unbounded(double per);

struct EnergyBreakdown {
    double per = 0.0;           ///< per-attempt PER
    double transmissions = 0.0; ///< mean attempts
    double e0 = 0.0;            ///< J/bit per attempt
    double energy = 0.0;        ///< J per reliably delivered bit
};

/// Truncated-ARQ energy per delivered bit, tau_max taken from qos.
EnergyBreakdown energy_per_bit(const EnergyCoefficients& coeffs, const ModulationScheme& scheme,
                               Bits n_p, Bits n_h, double gamma_bar, const QosSpec& qos);

/// Unlimited-retransmission energy per delivered bit, E0/(1-p).
EnergyBreakdown energy_per_bit_unbounded(const EnergyCoefficients& coeffs,
                                         const ModulationScheme& scheme, Bits n_p, Bits n_h,
                                         double gamma_bar);

/// Same as energy_per_bit_unbounded for a real-valued payload, with PER
/// 1 - exp(-omega0/gamma) evaluated from the closed-form threshold.
double energy_unbounded_continuous(const EnergyCoefficients& coeffs,
                                   const ModulationScheme& scheme, double n_p, Bits n_h,
                                   double gamma_bar);

/// PA supply power xi p_t / eta(p_t). Throws PeakPowerError if xi p_t > P_t,max.
double pa_power(const PaModel& pa, const ModulationScheme& scheme, double p_t);

} // namespace linkopt
