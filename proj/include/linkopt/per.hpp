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
#include "linkopt/quadrature.hpp"

#include <cstdint>

namespace linkopt {

/// Bit counts (packet, payload, overhead).
using Bits = std::int64_t;

/// Probabilistic QoS: the packet may fail after all attempts with probability at
/// most target_per, using up to max_retransmissions retransmissions.
class QosSpec {
public:
    QosSpec(double target_per, int max_retransmissions);

    double target_per() const noexcept { return target_per_; }
    int max_retransmissions() const noexcept { return max_retransmissions_; }

    /// Per-attempt PER bound P^(1/(tau_max+1)).
    double per_attempt_bound() const noexcept { return per_attempt_bound_; }

    QosSpec with_retransmissions(int max_retransmissions) const
    {
        return QosSpec(target_per_, max_retransmissions);
    }

private:
    double target_per_;
    int max_retransmissions_;
    double per_attempt_bound_;
};

/// AWGN bit error rate at per-bit SNR gamma (linear).
double ber(const ModulationScheme& scheme, double gamma);

/// AWGN packet error rate 1 - (1 - b_e)^N.
double awgn_per(const ModulationScheme& scheme, Bits n_bits, double gamma);

/// Closed-form waterfall threshold from the mean of the Gumbel law:
/// (ln(N c_eff) + gamma_e) / k_eff. Throws RegimeError when N c_eff <= 1.
double waterfall_threshold(const ModulationScheme& scheme, Bits n_bits);

/// Waterfall threshold by quadrature of the AWGN PER curve over [0, inf).
double waterfall_threshold_numeric(const ModulationScheme& scheme, Bits n_bits,
                                   const QuadratureTolerance& tol = {});

/// Rayleigh block-fading PER bound 1 - exp(-omega0 / gamma_bar).
double per_from_threshold(double omega0, double gamma_bar);

/// Closed-form Rayleigh PER using waterfall_threshold().
double per_rayleigh(const ModulationScheme& scheme, Bits n_bits, double gamma_bar);

/// Average of the AWGN PER over the exponential SNR density with mean gamma_bar.
double per_rayleigh_exact(const ModulationScheme& scheme, Bits n_bits, double gamma_bar,
                          const QuadratureTolerance& tol = {});

double required_per(const QosSpec& qos);

/// Smallest average SNR with per_rayleigh(n_h + n_p) <= per_attempt_bound.
double snr_min(const ModulationScheme& scheme, Bits n_h, Bits n_p, const QosSpec& qos);

/// Payloads above this are reported as this value (the closed form overflows).
inline constexpr Bits kPayloadSaturation = Bits{1} << 52;

/// Largest integer payload meeting the per-attempt PER bound at gamma_bar.
/// Returns 0 when no payload fits.
Bits payload_max(const ModulationScheme& scheme, Bits n_h, double gamma_bar, const QosSpec& qos);

/// Coded-scheme constants (k_M, b_M) of the log-linear threshold k_M ln N + b_M.
struct CodedConstants {
    double slope;  ///< k_M
    double offset; ///< b_M
};

/// The (k_M, b_M) pair equivalent to the closed-form threshold of an uncoded scheme.
CodedConstants coded_constants(const ModulationScheme& scheme);

/// omega0 = k_M ln N + b_M. Throws RegimeError if the result is not positive.
double waterfall_from_coded_constants(double slope, double offset, Bits n_bits);

} // namespace linkopt
