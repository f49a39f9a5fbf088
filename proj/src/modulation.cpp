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

#include "linkopt/modulation.hpp"

#include "linkopt/error.hpp"

#include <cmath>
#include <string>

namespace linkopt {

double ModulationScheme::c_eff() const
{
    return ber_form == BerForm::GaussianQ ? kGaussianQAmplitudeFit * c_m : c_m;
}

double ModulationScheme::k_eff() const
{
    return ber_form == BerForm::GaussianQ ? kGaussianQDecayFit * k_m : k_m;
}

void ModulationScheme::validate() const
{
    if (!(c_m > 0.0) || !std::isfinite(c_m))
        throw DomainError(name + ": c_m must be positive");
    if (!(k_m > 0.0))
        throw DomainError(name + ": k_m must be positive");
    if (!(papr >= 1.0))
        throw DomainError(name + ": papr must be >= 1");
    if (bits_per_symbol < 1)
        throw DomainError(name + ": bits_per_symbol must be >= 1");
}

double square_qam_papr(int order, PaprFormula formula)
{
    const double s = std::sqrt(static_cast<double>(order));
    if (formula == PaprFormula::Typeset)
        return 3.0 * (s - 1.0 / s + 1.0);
    return 3.0 * (s - 1.0) / (s + 1.0);
}

ModulationScheme make_bpsk()
{
    return {"BPSK", 1, BerForm::GaussianQ, 1.0, 2.0, 1.0, CircuitClass::MQAM};
}

ModulationScheme make_oqpsk()
{
    return {"OQPSK", 2, BerForm::GaussianQ, 1.0, 2.0, 2.138, CircuitClass::MQAM};
}

ModulationScheme make_square_qam(int order, PaprFormula formula)
{
    const int bits = static_cast<int>(std::lround(std::log2(order)));
    if (order < 4 || (1 << bits) != order || bits % 2 != 0)
        throw DomainError("square MQAM needs M = 4^k, got " + std::to_string(order));
    const double s = std::sqrt(static_cast<double>(order));
    ModulationScheme m;
    m.name = std::to_string(order) + "QAM";
    m.bits_per_symbol = bits;
    m.ber_form = BerForm::GaussianQ;
    m.c_m = 4.0 * (1.0 - 1.0 / s) / bits;
    m.k_m = 3.0 * bits / (order - 1.0);
    m.papr = square_qam_papr(order, formula);
    m.circuit_class = CircuitClass::MQAM;
    return m;
}

ModulationScheme make_ncfsk()
{
    return {"NCFSK", 1, BerForm::Exponential, 0.5, 0.5, 1.0, CircuitClass::MFSK};
}

ModulationScheme builtin_modulation(std::string_view name, PaprFormula formula)
{
    if (name == "BPSK")
        return make_bpsk();
    if (name == "QPSK") {
        auto m = make_bpsk();
        m.name = "QPSK";
        m.bits_per_symbol = 2;
        return m;
    }
    if (name == "OQPSK")
        return make_oqpsk();
    if (name == "NCFSK")
        return make_ncfsk();
    if (name.size() > 3 && name.substr(name.size() - 3) == "QAM") {
        const std::string digits(name.substr(0, name.size() - 3));
        if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos)
            return make_square_qam(std::stoi(digits), formula);
    }
    throw DomainError("unknown modulation '" + std::string(name) + "'");
}

std::vector<ModulationScheme> default_modulations(PaprFormula formula)
{
    return {make_ncfsk(),
            make_bpsk(),
            make_oqpsk(),
            make_square_qam(4, formula),
            make_square_qam(16, formula),
            make_square_qam(64, formula)};
}

std::string_view to_string(BerForm form)
{
    return form == BerForm::GaussianQ ? "gaussian_q" : "exponential";
}

std::string_view to_string(CircuitClass cls)
{
    return cls == CircuitClass::MQAM ? "mqam" : "mfsk";
}

} // namespace linkopt
