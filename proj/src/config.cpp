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

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

namespace linkopt {

using nlohmann::json;

namespace {

constexpr std::array<PaVariant, 3> kVariants{PaVariant::CPA, PaVariant::TPA, PaVariant::ETPA};

std::string join(const std::string& path, const std::string& key)
{
    return path.empty() ? key : path + "." + key;
}

// One JSON object; remembers which keys were read so leftovers can be rejected.
class Section {
public:
    Section(const json& node, std::string path) : node_(node), path_(std::move(path))
    {
        if (!node_.is_object())
            throw ConfigError(path_.empty() ? "<root>" : path_, "expected an object");
    }

    bool has(const std::string& key) const { return node_.contains(key); }

    const json* get(const std::string& key)
    {
        seen_.insert(key);
        auto it = node_.find(key);
        return it == node_.end() ? nullptr : &*it;
    }

    std::string path(const std::string& key) const { return join(path_, key); }

    void number(const std::string& key, double& out, bool positive = false)
    {
        const json* v = get(key);
        if (!v)
            return;
        if (!v->is_number())
            throw ConfigError(path(key), "expected a number");
        const double x = v->get<double>();
        if (!std::isfinite(x))
            throw ConfigError(path(key), "must be finite");
        if (positive && !(x > 0.0))
            throw ConfigError(path(key), "must be positive");
        out = x;
    }

    void integer(const std::string& key, long long& out, long long min_value)
    {
        const json* v = get(key);
        if (!v)
            return;
        if (!v->is_number_integer() && !(v->is_number_float() && is_whole(v->get<double>())))
            throw ConfigError(path(key), "expected an integer");
        const long long x = v->is_number_integer() ? v->get<long long>()
                                                   : static_cast<long long>(v->get<double>());
        if (x < min_value)
            throw ConfigError(path(key), "must be at least " + std::to_string(min_value));
        out = x;
    }

    void string(const std::string& key, std::string& out)
    {
        const json* v = get(key);
        if (!v)
            return;
        if (!v->is_string())
            throw ConfigError(path(key), "expected a string");
        out = v->get<std::string>();
    }

    void finish() const
    {
        for (auto it = node_.begin(); it != node_.end(); ++it)
            if (!seen_.count(it.key()))
                throw ConfigError(path(it.key()), "unknown key");
    }

private:
    static bool is_whole(double x) { return std::isfinite(x) && std::floor(x) == x; }

    const json& node_;
    std::string path_;
    std::set<std::string> seen_;
};

PaprFormula parse_papr_formula(const std::string& text, const std::string& path)
{
    if (text == "typeset")
        return PaprFormula::Typeset;
    if (text == "standard")
        return PaprFormula::Standard;
    throw ConfigError(path, "expected \"typeset\" or \"standard\"");
}

std::string_view papr_formula_name(PaprFormula f)
{
    return f == PaprFormula::Typeset ? "typeset" : "standard";
}

BerForm parse_ber_form(const std::string& text, const std::string& path)
{
    if (text == "exponential")
        return BerForm::Exponential;
    if (text == "gaussian_q")
        return BerForm::GaussianQ;
    throw ConfigError(path, "expected \"exponential\" or \"gaussian_q\"");
}

CircuitClass parse_circuit_class(const std::string& text, const std::string& path)
{
    if (text == "mqam")
        return CircuitClass::MQAM;
    if (text == "mfsk")
        return CircuitClass::MFSK;
    throw ConfigError(path, "expected \"mqam\" or \"mfsk\"");
}

ModulationScheme parse_scheme(const json& node, const std::string& path, PaprFormula formula)
{
    if (node.is_string()) {
        try {
            return builtin_modulation(node.get<std::string>(), formula);
        } catch (const DomainError& e) {
            throw ConfigError(path, e.what());
        }
    }
    Section s(node, path);
    ModulationScheme m;
    s.string("name", m.name);
    if (m.name.empty())
        throw ConfigError(s.path("name"), "required");
    long long bits = 0;
    s.integer("bits_per_symbol", bits, 1);
    if (bits == 0)
        throw ConfigError(s.path("bits_per_symbol"), "required");
    m.bits_per_symbol = static_cast<int>(bits);
    std::string form = "gaussian_q";
    s.string("ber_form", form);
    m.ber_form = parse_ber_form(form, s.path("ber_form"));
    if (!s.has("c_m") || !s.has("k_m"))
        throw ConfigError(join(path, s.has("c_m") ? "k_m" : "c_m"), "required");
    s.number("c_m", m.c_m, true);
    s.number("k_m", m.k_m, true);
    s.number("papr", m.papr, true);
    std::string cls = "mqam";
    s.string("circuit_class", cls);
    m.circuit_class = parse_circuit_class(cls, s.path("circuit_class"));
    s.finish();
    try {
        m.validate();
    } catch (const DomainError& e) {
        throw ConfigError(path, e.what());
    }
    return m;
}

void parse_link(Section& s, ScenarioConfig& c)
{
    double p0_mw = c.link.p0 * 1e3;
    double n0_half = watts_to_dbm(c.link.n0 / 2.0);
    s.number("p0_mw", p0_mw, true);
    s.number("n0_half_dbm_per_hz", n0_half);
    s.number("kappa", c.link.kappa, true);
    s.number("g1_db", c.link.g1_db);
    s.number("link_margin_db", c.link.link_margin_db);
    s.number("bandwidth_hz", c.link.bandwidth, true);
    s.number("distance_m", c.link.distance, true);
    c.link.p0 = p0_mw * 1e-3;
    c.link.n0 = one_sided_n0(n0_half);
    s.finish();
}

void parse_pa(Section& s, ScenarioConfig& c)
{
    for (PaVariant v : kVariants) {
        const std::string key(to_string(v));
        const json* node = s.get(key);
        if (!node)
            continue;
        Section p(*node, s.path(key));
        PaConfig& pa = c.pa[static_cast<std::size_t>(v)];
        p.number("eta_max", pa.eta_max, true);
        if (pa.eta_max > 1.0)
            throw ConfigError(p.path("eta_max"), "must not exceed 1");
        if (const json* t = p.get("p_t_max_mw"); t && !t->is_null()) {
            if (!t->is_number() || !(t->get<double>() > 0.0))
                throw ConfigError(p.path("p_t_max_mw"), "expected a positive number or null");
            pa.p_t_max = t->get<double>() * 1e-3;
        }
        if (v == PaVariant::ETPA)
            p.number("c", pa.etpa_c, true);
        p.finish();
    }
    s.finish();
}

} // namespace

std::vector<double> SweepSpec::distances() const
{
    std::vector<double> out;
    const double span = distance_max - distance_min;
    const auto count = static_cast<long long>(std::floor(span / distance_step + 1e-9));
    for (long long i = 0; i <= count; ++i)
        out.push_back(distance_min + static_cast<double>(i) * distance_step);
    return out;
}

LinkScenario ScenarioConfig::scenario(PaVariant variant) const
{
    return LinkScenario{link, qos, pa_config(variant), circuit, overhead_bits};
}

LinkScenario ScenarioConfig::scenario(PaVariant variant, double distance) const
{
    LinkScenario s = scenario(variant);
    s.link = link.at_distance(distance);
    s.link.validate();
    return s;
}

OptimizerOptions ScenarioConfig::optimizer_options() const
{
    OptimizerOptions o;
    o.delta = tolerance.delta;
    o.max_iterations = tolerance.max_iterations;
    o.max_payload = max_payload_bits;
    return o;
}

ModulationScheme ScenarioConfig::baseline() const
{
    for (const auto& m : modulations)
        if (m.name == baseline_modulation)
            return m;
    return builtin_modulation(baseline_modulation, papr_formula);
}

ScenarioConfig default_config()
{
    ScenarioConfig c;
    c.link.distance = 10.0;
    c.link.kappa = 3.5;
    c.link.g1_db = 30.0;
    c.link.link_margin_db = 40.0;
    c.link.n0 = one_sided_n0(-174.0);
    c.link.bandwidth = 1e4;
    c.link.p0 = 10e-3;
    for (PaVariant v : kVariants) {
        PaConfig& pa = c.pa[static_cast<std::size_t>(v)];
        pa.variant = v;
        pa.eta_max = 0.8;
        pa.etpa_c = kDefaultEtpaConstant;
    }
    c.modulations = default_modulations(c.papr_formula);
    return c;
}

ScenarioConfig parse_config(std::string_view text)
{
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError("<root>", std::string("malformed JSON: ") + e.what());
    }

    ScenarioConfig c = default_config();
    Section top(root, "");

    if (const json* n = top.get("link")) {
        Section s(*n, "link");
        parse_link(s, c);
    }
    if (const json* n = top.get("qos")) {
        Section s(*n, "qos");
        double target = c.qos.target_per();
        long long tau = c.qos.max_retransmissions();
        s.number("target_per", target);
        if (!(target > 0.0 && target < 1.0))
            throw ConfigError(s.path("target_per"), "must lie in (0, 1)");
        s.integer("max_retransmissions", tau, 0);
        if (tau > 1000)
            throw ConfigError(s.path("max_retransmissions"), "must not exceed 1000");
        c.qos = QosSpec(target, static_cast<int>(tau));
        s.finish();
    }
    if (const json* n = top.get("packet")) {
        Section s(*n, "packet");
        long long nh = c.overhead_bits;
        long long cap = c.max_payload_bits;
        s.integer("overhead_bits", nh, 1);
        s.integer("max_payload_bits", cap, 1);
        if (cap > kPayloadSaturation)
            throw ConfigError(s.path("max_payload_bits"), "too large");
        c.overhead_bits = nh;
        c.max_payload_bits = cap;
        s.finish();
    }
    if (const json* n = top.get("circuit")) {
        Section s(*n, "circuit");
        double mqam = c.circuit.mqam * 1e3;
        double mfsk = c.circuit.mfsk * 1e3;
        s.number("p_c_mqam_mw", mqam);
        s.number("p_c_mfsk_mw", mfsk);
        if (mqam < 0.0)
            throw ConfigError(s.path("p_c_mqam_mw"), "must be non-negative");
        if (mfsk < 0.0)
            throw ConfigError(s.path("p_c_mfsk_mw"), "must be non-negative");
        c.circuit = {mqam * 1e-3, mfsk * 1e-3};
        s.finish();
    }
    if (const json* n = top.get("pa")) {
        Section s(*n, "pa");
        parse_pa(s, c);
    }
    if (const json* n = top.get("modulation")) {
        Section s(*n, "modulation");
        std::string formula(papr_formula_name(c.papr_formula));
        s.string("papr_formula", formula);
        c.papr_formula = parse_papr_formula(formula, s.path("papr_formula"));
        c.modulations = default_modulations(c.papr_formula);
        if (const json* list = s.get("schemes")) {
            if (!list->is_array() || list->empty())
                throw ConfigError(s.path("schemes"), "expected a non-empty array");
            c.modulations.clear();
            for (std::size_t i = 0; i < list->size(); ++i)
                c.modulations.push_back(parse_scheme(
                    (*list)[i], s.path("schemes") + "[" + std::to_string(i) + "]",
                    c.papr_formula));
        }
        s.finish();
    }
    if (const json* n = top.get("sweep")) {
        Section s(*n, "sweep");
        s.number("distance_min_m", c.sweep.distance_min, true);
        s.number("distance_max_m", c.sweep.distance_max, true);
        s.number("distance_step_m", c.sweep.distance_step, true);
        if (c.sweep.distance_max < c.sweep.distance_min)
            throw ConfigError(s.path("distance_max_m"), "must not be below distance_min_m");
        if (const json* list = s.get("pa_models")) {
            if (!list->is_array() || list->empty())
                throw ConfigError(s.path("pa_models"), "expected a non-empty array");
            c.sweep.pa_models.clear();
            for (std::size_t i = 0; i < list->size(); ++i) {
                const std::string p = s.path("pa_models") + "[" + std::to_string(i) + "]";
                if (!(*list)[i].is_string())
                    throw ConfigError(p, "expected a string");
                try {
                    c.sweep.pa_models.push_back(parse_pa_variant((*list)[i].get<std::string>()));
                } catch (const DomainError& e) {
                    throw ConfigError(p, e.what());
                }
            }
        }
        s.finish();
    }
    if (const json* n = top.get("lifetime")) {
        Section s(*n, "lifetime");
        s.number("battery_charge_ah", c.duty.charge_ah, true);
        s.number("battery_voltage_v", c.duty.voltage, true);
        s.number("payload_bits_per_period", c.duty.payload_per_period, true);
        s.number("period_s", c.duty.period, true);
        s.string("baseline_modulation", c.baseline_modulation);
        s.finish();
    }
    if (const json* n = top.get("tolerance")) {
        Section s(*n, "tolerance");
        long long iters = c.tolerance.max_iterations;
        s.number("delta", c.tolerance.delta, true);
        s.integer("max_iterations", iters, 1);
        c.tolerance.max_iterations = static_cast<int>(iters);
        s.number("quad_relative", c.tolerance.quadrature.relative, true);
        s.number("quad_absolute", c.tolerance.quadrature.absolute, true);
        s.finish();
    }
    top.finish();

    try {
        c.baseline();
    } catch (const DomainError& e) {
        throw ConfigError("lifetime.baseline_modulation", e.what());
    }
    return c;
}

ScenarioConfig load_config(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError(path.string(), "cannot open config file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

std::string to_json(const ScenarioConfig& c)
{
    json root;
    root["link"] = {{"p0_mw", c.link.p0 * 1e3},
                    {"n0_half_dbm_per_hz", watts_to_dbm(c.link.n0 / 2.0)},
                    {"kappa", c.link.kappa},
                    {"g1_db", c.link.g1_db},
                    {"link_margin_db", c.link.link_margin_db},
                    {"bandwidth_hz", c.link.bandwidth},
                    {"distance_m", c.link.distance}};
    root["qos"] = {{"target_per", c.qos.target_per()},
                   {"max_retransmissions", c.qos.max_retransmissions()}};
    root["packet"] = {{"overhead_bits", c.overhead_bits},
                      {"max_payload_bits", c.max_payload_bits}};
    root["circuit"] = {{"p_c_mqam_mw", c.circuit.mqam * 1e3},
                       {"p_c_mfsk_mw", c.circuit.mfsk * 1e3}};
    json pa = json::object();
    for (PaVariant v : kVariants) {
        const PaConfig& p = c.pa_config(v);
        json node = {{"eta_max", p.eta_max}};
        node["p_t_max_mw"] = p.p_t_max ? json(*p.p_t_max * 1e3) : json(nullptr);
        if (v == PaVariant::ETPA)
            node["c"] = p.etpa_c;
        pa[std::string(to_string(v))] = node;
    }
    root["pa"] = pa;
    json schemes = json::array();
    for (const auto& m : c.modulations)
        schemes.push_back({{"name", m.name},
                           {"bits_per_symbol", m.bits_per_symbol},
                           {"ber_form", m.ber_form == BerForm::GaussianQ ? "gaussian_q" : "exponential"},
                           {"c_m", m.c_m},
                           {"k_m", m.k_m},
                           {"papr", m.papr},
                           {"circuit_class", m.circuit_class == CircuitClass::MFSK ? "mfsk" : "mqam"}});
    root["modulation"] = {{"papr_formula", papr_formula_name(c.papr_formula)},
                          {"schemes", schemes}};
    json models = json::array();
    for (PaVariant v : c.sweep.pa_models)
        models.push_back(std::string(to_string(v)));
    root["sweep"] = {{"distance_min_m", c.sweep.distance_min},
                     {"distance_max_m", c.sweep.distance_max},
                     {"distance_step_m", c.sweep.distance_step},
                     {"pa_models", models}};
    root["lifetime"] = {{"battery_charge_ah", c.duty.charge_ah},
                        {"battery_voltage_v", c.duty.voltage},
                        {"payload_bits_per_period", c.duty.payload_per_period},
                        {"period_s", c.duty.period},
                        {"baseline_modulation", c.baseline_modulation}};
    root["tolerance"] = {{"delta", c.tolerance.delta},
                         {"max_iterations", c.tolerance.max_iterations},
                         {"quad_relative", c.tolerance.quadrature.relative},
                         {"quad_absolute", c.tolerance.quadrature.absolute}};
    return root.dump(2) + "\n";
}

} // namespace linkopt
