#pragma once

// JSON encodings shared by the CLI and its tests.
//
//   integer     "-12"
//   polynomial  ["-1", "0", "4"]      ascending degree, [] is zero
//   window      {"lo": 0, "values": [...]}
//   report      {"identity", "params", "coefficients", "lhs", "rhs", "holds", "witnesses"}
//
// Keys are emitted sorted (nlohmann::json default), so parse -> dump is stable.

#include <string>

#include "json.hpp"

#include "recur2/catalog.hpp"
#include "recur2/error.hpp"
#include "recur2/exact_algebra.hpp"
#include "recur2/identities.hpp"
#include "recur2/recurrence.hpp"
#include "recur2/words.hpp"

namespace recur2 {

using json = nlohmann::json;

inline json to_json(const RingValue& v) {
    if (v.is_integer()) return v.as_integer().str();
    json arr = json::array();
    for (const auto& c : v.as_poly().coefficients()) arr.push_back(c.str());
    return arr;
}

inline RingValue ring_value_from_json(const json& j, const std::string& variable = "z") {
    if (j.is_string()) return parse_exact_int(j.get<std::string>());
    if (j.is_array()) {
        std::vector<ExactInt> coeffs;
        for (const auto& c : j) {
            if (!c.is_string()) throw error(errc::parse_error, "polynomial coefficients must be decimal strings");
            coeffs.push_back(parse_exact_int(c.get<std::string>()));
        }
        return IntPoly(std::move(coeffs), variable);
    }
    throw error(errc::parse_error, "ring value must be a decimal string or an array of them");
}

inline json to_json(const SequenceWindow& w) {
    json values = json::array();
    for (const auto& v : w.values) values.push_back(to_json(v));
    return {{"lo", w.lo}, {"values", values}};
}

inline SequenceWindow window_from_json(const json& j) {
    SequenceWindow w;
    w.lo = j.at("lo").get<std::size_t>();
    for (const auto& v : j.at("values")) w.values.push_back(ring_value_from_json(v));
    return w;
}

inline json to_json(const IdentityReport& r) {
    json params = json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    json coefficients = json::object();
    for (const auto& [k, v] : r.coefficients) coefficients[k] = to_json(v);
    json witnesses = json::object();
    for (const auto& [k, v] : r.witnesses) witnesses[k] = to_json(v);
    return {{"identity", std::string(to_string(r.identity))},
            {"params", params},
            {"coefficients", coefficients},
            {"lhs", to_json(r.lhs)},
            {"rhs", to_json(r.rhs)},
            {"holds", r.holds},
            {"witnesses", witnesses}};
}

inline IdentityReport report_from_json(const json& j) {
    IdentityReport r;
    const auto name = j.at("identity").get<std::string>();
    const auto id = identity_from_string(name);
    if (!id) throw error(errc::parse_error, "unknown identity '" + name + "'");
    r.identity = *id;
    for (const auto& [k, v] : j.at("params").items()) r.params[k] = v.get<std::int64_t>();
    if (j.contains("coefficients")) {
        for (const auto& [k, v] : j.at("coefficients").items()) r.coefficients[k] = ring_value_from_json(v);
    }
    r.lhs = ring_value_from_json(j.at("lhs"));
    r.rhs = ring_value_from_json(j.at("rhs"));
    r.holds = j.at("holds").get<bool>();
    for (const auto& [k, v] : j.at("witnesses").items()) r.witnesses[k] = ring_value_from_json(v);
    return r;
}

inline json to_json(const CrosscheckReport& report) {
    json rows = json::array();
    for (const auto& row : report.rows) {
        json r = {{"n", row.n}, {"recurrence", to_json(row.recurrence)}, {"explicit", to_json(row.explicit_value)},
                  {"agree", row.agree}};
        if (row.word_count) r["word_count"] = row.word_count->str();
        if (row.tiling_count) r["tiling_count"] = row.tiling_count->str();
        if (row.closed_form) r["closed_form"] = *row.closed_form;
        if (row.reference) r["reference"] = *row.reference;
        rows.push_back(std::move(r));
    }
    return {{"preset", std::string(to_string(report.preset))}, {"rows", rows}, {"agree", report.all_agree()}};
}

inline json to_json(const Preset& p) {
    json j = {{"id", std::string(p.name())},
              {"ring", std::string(to_string(p.tag()))},
              {"x", to_json(p.x)},
              {"y", to_json(p.y)},
              {"init", json::array({to_json(p.init.first), to_json(p.init.second)})},
              {"note", p.note}};
    if (p.word_model) j["word_model"] = p.word_model->to_string();
    if (p.tiling) j["tiling"] = {{"colors1", p.tiling->colors1}, {"colors2", p.tiling->colors2}};
    if (p.closed_form) j["closed_form"] = p.closed_form->description;
    return j;
}

}  // namespace recur2
