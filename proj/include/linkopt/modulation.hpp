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

#include <string>
#include <string_view>
#include <vector>

namespace linkopt {

/// Functional form of the AWGN bit-error-rate law b_e(gamma).
enum class BerForm {
    Exponential, ///< c_m * exp(-k_m * gamma)
    GaussianQ,   ///< c_m * Q(sqrt(k_m * gamma))
};

/// Selects which circuit power P_c applies to a scheme.
enum class CircuitClass { MQAM, MFSK };

/// Square-MQAM peak-to-average power ratio variants.
///
/// `Typeset` is 3(sqrt(M) - 1/sqrt(M) + 1), `Standard` is 3(sqrt(M) - 1)/(sqrt(M) + 1).
enum class PaprFormula { Typeset, Standard };

/// A modulation scheme described by its BER law, PAPR and circuit power class.
///
/// gamma is the average SNR per bit. For the GaussianQ form every Rayleigh-fading
/// formula uses the fitted exponential surrogate 0.2114*c_m*exp(-0.5598*k_m*gamma),
/// exposed through c_eff() and k_eff().
struct ModulationScheme {
    std::string name;
    int bits_per_symbol = 1;
    BerForm ber_form = BerForm::GaussianQ;
    double c_m = 1.0;
    double k_m = 2.0;
    double papr = 1.0;
    CircuitClass circuit_class = CircuitClass::MQAM;

    double c_eff() const;
    double k_eff() const;

    /// Throws DomainError if any invariant is violated.
    void validate() const;
};

inline constexpr double kGaussianQAmplitudeFit = 0.2114;
inline constexpr double kGaussianQDecayFit = 0.5598;

double square_qam_papr(int order, PaprFormula formula);

ModulationScheme make_bpsk();
ModulationScheme make_oqpsk();
ModulationScheme make_square_qam(int order, PaprFormula formula = PaprFormula::Typeset);
ModulationScheme make_ncfsk();

/// Builds a built-in scheme from its name ("BPSK", "QPSK", "OQPSK", "4QAM", "16QAM",
/// "64QAM", "256QAM", "NCFSK"). Throws DomainError for unknown names.
ModulationScheme builtin_modulation(std::string_view name,
                                    PaprFormula formula = PaprFormula::Typeset);

/// NCFSK, BPSK, OQPSK, 4QAM, 16QAM, 64QAM.
std::vector<ModulationScheme> default_modulations(PaprFormula formula = PaprFormula::Typeset);

std::string_view to_string(BerForm form);
std::string_view to_string(CircuitClass cls);

} // namespace linkopt
