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
#include "linkopt/modulation.hpp"
#include "linkopt/per.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace linkopt {

/// Which condition determined an operating point.
enum class Binding { Unconstrained, SnrMinBound, SnrMaxBound, PayloadMaxBound, Infeasible };

std::string_view to_string(Binding binding);

/// Circuit power P_c (TX + RX) per circuit class, watts.
struct CircuitPower {
    double mqam = 0.310;
    double mfsk = 0.265;

    double for_scheme(const ModulationScheme& scheme) const
    {
        return scheme.circuit_class == CircuitClass::MFSK ? mfsk : mqam;
    }
};

/// Everything fixed about a link except the modulation and retransmission choice.
struct LinkScenario {
    LinkBudget link;
    QosSpec qos{1e-3, 3};
    PaConfig pa;
    CircuitPower circuit;
    Bits overhead_bits = 48;
};

struct OptimizerOptions {
    double delta = 1e-6;        ///< SNR residual at which the fixed point stops
    int max_iterations = 100;
    Bits max_payload = 1'000'000;
    /// Multiplies A and B of every scheme; the argmin must not depend on it.
    double coefficient_scale = 1.0;
    double tie_tolerance = 1e-9;
    /// Worker threads for sweeps; 0 picks the hardware concurrency.
    unsigned threads = 0;
};

struct OperatingPoint {
    ModulationScheme scheme;
    PaVariant pa_variant = PaVariant::CPA;
    double distance = 0.0;
    double gamma_bar = 0.0;
    Bits n_p = 0;
    int tau_r = 0;
    double energy = 0.0; ///< J per reliably delivered bit, truncated ARQ
    double per = 0.0;    ///< per-attempt PER at the point
    double p_t = 0.0;    ///< W
    double p_pa = 0.0;   ///< W
    bool feasible = false;
    Binding binding = Binding::Infeasible;
    int iterations = 0;
    /// Why (scheme, tau) combinations were rejected.
    std::vector<std::string> diagnostics;
};

/// Largest SNR allowed by the power cap: min(P0, P_t,max/xi) / (R_b N0 G_d).
double snr_max(const LinkBudget& link, const ModulationScheme& scheme, const PaModel& pa);

/// Unconstrained optimal SNR for CPA/ETPA (stationary point of E0/(1-p) in gamma).
double optimal_snr_quadratic(const EnergyCoefficients& coeffs, double omega0, Bits n_p, Bits n_h);

struct TpaSnrSolution {
    double gamma_bar = 0.0;
    /// Cardano closed form, present when its real-radical condition holds.
    std::optional<double> closed_form;
    /// Set when no root could be bracketed and E(gamma) was minimised directly.
    bool fallback = false;
};

/// Unconstrained optimal SNR for TPA.
///
/// Solves A k x^3 - 2 A (k omega0) x - 2 (k omega0) B f = 0 for x = sqrt(gamma),
/// where f = n_p/(n_p+n_h). The threshold enters scaled by k, which makes the
/// root the stationary point of E0/(1-p) with 1-p = exp(-omega0/gamma).
TpaSnrSolution optimal_snr_tpa(const EnergyCoefficients& coeffs, double omega0, double k_eff,
                               Bits n_p, Bits n_h);

/// Cardano root of the TPA cubic; `scaled_omega` is k*omega0. Empty unless
/// 27 (B/A)^2 k f^2 > 8 scaled_omega.
std::optional<double> tpa_snr_closed_form(const EnergyCoefficients& coeffs, double scaled_omega,
                                          double k_eff, double payload_fraction);

struct ConstrainedSnr {
    double gamma_bar = 0.0;
    Binding binding = Binding::Unconstrained;
};

/// Clamps gamma_star to [gamma_min, gamma_max]; Infeasible if gamma_min > gamma_max.
ConstrainedSnr constrain_snr(double gamma_star, double gamma_min, double gamma_max);

/// Real-valued CPA/ETPA payload optimum at fixed SNR.
double optimal_payload_quadratic_real(const EnergyCoefficients& coeffs,
                                      const ModulationScheme& scheme, Bits n_h, double gamma_bar);

/// CPA/ETPA payload optimum, floored. Throws DegeneratePayloadError if < 1.
Bits optimal_payload_quadratic(const EnergyCoefficients& coeffs, const ModulationScheme& scheme,
                               Bits n_h, double gamma_bar);

/// Payload minimising E0/(1-p) at fixed SNR by golden section over [1, upper],
/// for any PA shape. Returns the better of the two integers around the real optimum.
Bits numeric_optimal_payload(const EnergyCoefficients& coeffs, const ModulationScheme& scheme,
                             Bits n_h, double gamma_bar, Bits upper);

/// TPA payload optimum (numeric; see numeric_optimal_payload).
Bits optimal_payload_tpa(const EnergyCoefficients& coeffs, const ModulationScheme& scheme,
                         Bits n_h, double gamma_bar, Bits upper);

/// Closed-form TPA payload optimum (real-valued), diagnostic only. Empty unless
/// gamma_bar > (B/A)^2.
std::optional<double> tpa_payload_closed_form(const EnergyCoefficients& coeffs,
                                              const ModulationScheme& scheme, Bits n_h,
                                              double gamma_bar);

/// Starting point of the SNR/payload fixed point. The default is an
/// overhead-only packet.
struct FixedPointStart {
    Bits n_p = 0;
    std::optional<double> gamma_bar;
};

/// Alternating SNR/payload optimisation for one scheme and retransmission
/// limit tau. Infeasible or non-converged results come back with
/// feasible=false and a diagnostic.
OperatingPoint optimize_combination(const LinkScenario& scenario, const ModulationScheme& scheme,
                                    int tau, const OptimizerOptions& options = {},
                                    const FixedPointStart& start = {});

/// Exhaustive search over schemes and tau in 1..tau_max. Returns the
/// minimum-energy feasible point, or an Infeasible marker whose diagnostics
/// list every rejected combination.
OperatingPoint joint_optimize(const LinkScenario& scenario,
                              std::span<const ModulationScheme> modulations,
                              const OptimizerOptions& options = {});

/// joint_optimize at each distance, evaluated in parallel; output order
/// matches `distances`.
std::vector<OperatingPoint> sweep_distance(const LinkScenario& scenario,
                                           std::span<const double> distances,
                                           std::span<const ModulationScheme> modulations,
                                           const OptimizerOptions& options = {});

/// A, B, P_t,max and gamma_max for one scheme in a scenario.
struct SchemeContext {
    PaModel pa;
    EnergyCoefficients coeffs;
    double gamma_max = 0.0;
};

SchemeContext make_scheme_context(const LinkScenario& scenario, const ModulationScheme& scheme,
                                  double coefficient_scale = 1.0);

} // namespace linkopt
