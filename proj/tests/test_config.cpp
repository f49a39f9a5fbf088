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

#include "linkopt/config.hpp"
#include "linkopt/error.hpp"
#include "linkopt/units.hpp"

#include <doctest.h>

#include <string>

using namespace linkopt;
using doctest::Approx;

namespace {

std::string config_error_path(const std::string& text)
{
    try {
        parse_config(text);
    } catch (const ConfigError& e) {
        return e.path();
    }
    return "<no error>";
}

} // namespace

TEST_CASE("defaults")
{
    const ScenarioConfig c = default_config();
    CHECK(c.link.p0 == Approx(0.01));
    CHECK(c.link.kappa == 3.5);
    CHECK(c.link.g1_db == 30.0);
    CHECK(c.link.link_margin_db == 40.0);
    CHECK(c.link.bandwidth == 1e4);
    CHECK(c.link.n0 == Approx(2.0 * dbm_to_watts(-174.0)));
    CHECK(c.circuit.mqam == Approx(0.310));
    CHECK(c.circuit.mfsk == Approx(0.265));
    for (const auto& pa : c.pa)
        CHECK(pa.eta_max == 0.8);
    CHECK(c.pa_config(PaVariant::ETPA).etpa_c == 0.0082);
    CHECK(c.overhead_bits == 48);
    CHECK(c.qos.target_per() == 1e-3);
    CHECK(c.qos.max_retransmissions() == 3);
    CHECK(c.tolerance.delta == 1e-6);
    CHECK(c.modulations.size() == 6);
    CHECK(c.sweep.distances().size() == 80);
    CHECK(c.baseline().name == "OQPSK");
}

TEST_CASE("shipped config equals the built-in defaults")
{
    const ScenarioConfig file = load_config(std::string(LINKOPT_SOURCE_DIR) + "/configs/default.json");
    CHECK(to_json(file) == to_json(default_config()));
}

TEST_CASE("serialisation round-trips")
{
    ScenarioConfig c = default_config();
    c.link.kappa = 3.1;
    c.qos = QosSpec(1e-2, 1);
    c.pa[static_cast<std::size_t>(PaVariant::TPA)].p_t_max = 0.05;
    c.papr_formula = PaprFormula::Standard;
    c.modulations = default_modulations(PaprFormula::Standard);
    c.sweep.pa_models = {PaVariant::TPA};
    const std::string text = to_json(c);
    CHECK(to_json(parse_config(text)) == text);
}

TEST_CASE("partial configs keep the remaining defaults")
{
    const ScenarioConfig c = parse_config(R"({"link": {"kappa": 3.0}, "modulation": {"schemes": ["4QAM"]}})");
    CHECK(c.link.kappa == 3.0);
    CHECK(c.link.p0 == Approx(0.01));
    REQUIRE(c.modulations.size() == 1);
    CHECK(c.modulations[0].name == "4QAM");
}

TEST_CASE("custom scheme objects")
{
    const ScenarioConfig c = parse_config(R"({"modulation": {"schemes": [
        {"name": "8FSK", "bits_per_symbol": 3, "ber_form": "exponential", "c_m": 3.5, "k_m": 0.5,
         "papr": 1, "circuit_class": "mfsk"}]}})");
    REQUIRE(c.modulations.size() == 1);
    CHECK(c.modulations[0].ber_form == BerForm::Exponential);
    CHECK(c.modulations[0].circuit_class == CircuitClass::MFSK);
    CHECK(c.circuit.for_scheme(c.modulations[0]) == Approx(0.265));
}

TEST_CASE("errors name the offending field")
{
    CHECK(config_error_path(R"({"link": {"p0_watts": 0.01}})") == "link.p0_watts");
    CHECK(config_error_path(R"({"lnik": {}})") == "lnik");
    CHECK(config_error_path(R"({"qos": {"target_per": "low"}})") == "qos.target_per");
    CHECK(config_error_path(R"({"qos": {"target_per": 1.5}})") == "qos.target_per");
    CHECK(config_error_path(R"({"qos": {"max_retransmissions": 1.5}})") == "qos.max_retransmissions");
    CHECK(config_error_path(R"({"pa": {"etpa": {"c": -1}}})") == "pa.etpa.c");
    CHECK(config_error_path(R"({"pa": {"cpa": {"eta_max": 1.2}}})") == "pa.cpa.eta_max");
    CHECK(config_error_path(R"({"modulation": {"schemes": ["BPSK", "7QAM"]}})") ==
          "modulation.schemes[1]");
    CHECK(config_error_path(R"({"modulation": {"schemes": [{"name": "X", "bits_per_symbol": 2, "k_m": 1}]}})") ==
          "modulation.schemes[0].c_m");
    CHECK(config_error_path(R"({"sweep": {"pa_models": ["cpa", "gan"]}})") == "sweep.pa_models[1]");
    CHECK(config_error_path(R"({"sweep": {"distance_min_m": 10, "distance_max_m": 5}})") ==
          "sweep.distance_max_m");
    CHECK(config_error_path(R"({"lifetime": {"baseline_modulation": "GMSK"}})") ==
          "lifetime.baseline_modulation");
    CHECK(config_error_path("{\"link\": ") == "<root>");
    CHECK(config_error_path("[1, 2]") == "<root>");
}
