// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hecke/casimir.hpp"
#include "hecke/characters.hpp"
#include "hecke/laurent.hpp"
#include "hecke/oracle.hpp"
#include "hecke/series.hpp"

namespace hecke {

using Json = nlohmann::ordered_json;

/// {"3": "1/1", "0": "-2/1", "-1": "-1/1"}, exponents decreasing.
inline Json to_json(const LaurentPoly& p) {
    Json j = Json::object();
    for (const auto& [e, c] : p.terms()) j[std::to_string(e)] = rational_to_fraction_text(c);
    return j;
}

inline LaurentPoly laurent_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("Laurent polynomial JSON must be an object");
    std::vector<std::pair<int, Rational>> terms;
    for (const auto& [key, value] : j.items()) {
        if (!value.is_string()) throw ParseError("coefficient of q^" + key + " must be a string");
        int e = 0;
        try {
            std::size_t used = 0;
            e = std::stoi(key, &used);
            if (used != key.size()) throw ParseError("bad exponent key " + key);
        } catch (const std::logic_error&) {
            throw ParseError("bad exponent key " + key);
        }
        terms.emplace_back(e, parse_rational(value.get<std::string>()));
    }
    return LaurentPoly::from_terms(terms);
}

inline Json to_json(const RationalFunction& r) {
    RationalFunction red = r.reduced();
    return Json{{"numerator", to_json(red.numerator())}, {"denominator", to_json(red.denominator())}};
}

inline Json to_json(const DeltaSeries& s) {
    Json j = Json::array();
    for (int k = 0; k <= s.order(); ++k) j.push_back(rational_to_fraction_text(s[k]));
    return j;
}

inline Json to_json(const CharacterTable& t) {
    Json j;
    j["n"] = t.n;
    j["rows"] = Json::array();
    for (const auto& g : t.irreps) j["rows"].push_back(g.to_string());
    j["columns"] = Json::array();
    for (const auto& mu : t.classes) j["columns"].push_back(mu.to_string());
    j["entries"] = Json::array();
    for (const auto& row : t.entries) {
        Json r = Json::array();
        for (const auto& e : row) r.push_back(to_json(e));
        j["entries"].push_back(std::move(r));
    }
    return j;
}

namespace detail {

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

} // namespace detail

/// Header row of class types, then one row per irrep; entries in the
/// canonical polynomial text.
inline std::string to_csv(const CharacterTable& t) {
    std::string s = "irrep";
    for (const auto& mu : t.classes) s += "," + detail::csv_field(mu.to_string());
    s += "\n";
    for (std::size_t r = 0; r < t.irreps.size(); ++r) {
        s += detail::csv_field(t.irreps[r].to_string());
        for (const auto& e : t.entries[r]) s += "," + detail::csv_field(e.to_string());
        s += "\n";
    }
    return s;
}

inline Json to_json(const VerificationReport& r) {
    std::size_t failed = 0;
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json e{{"identity", c.identity}, {"passed", c.passed}};
        if (!c.detail.empty()) e["detail"] = c.detail;
        checks.push_back(std::move(e));
        if (!c.passed) ++failed;
    }
    return Json{{"passed", failed == 0}, {"total", r.checks.size()}, {"failed", failed}, {"checks", std::move(checks)}};
}

inline Json to_json(const CasimirRelation& r) {
    return Json{{"lhs", to_json(r.lhs)}, {"rhs", to_json(r.rhs)}, {"holds", r.holds}};
}

} // namespace hecke
