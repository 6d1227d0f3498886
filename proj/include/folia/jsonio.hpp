#pragma once

#include "folia/chern.hpp"
#include "folia/foliation.hpp"
#include "folia/laurent.hpp"

#include <json.hpp>

#include <sstream>

namespace folia {

using Json = nlohmann::json;

inline Rational rational_from_string(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw input_error("empty rational literal");
    bool neg = false;
    size_t pos = 0;
    if (s[0] == '-' || s[0] == '+') {
        neg = (s[0] == '-');
        pos = 1;
    }
    auto digits = [&](size_t& p) {
        std::string d;
        while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) d += s[p++];
        if (d.empty()) throw input_error("malformed rational literal '" + text + "'");
        return d;
    };
    Int num(digits(pos));
    Int den(1);
    if (pos < s.size()) {
        if (s[pos] != '/') throw input_error("malformed rational literal '" + text + "'");
        ++pos;
        den = Int(digits(pos));
        if (pos != s.size()) throw input_error("malformed rational literal '" + text + "'");
        if (den == 0) throw input_error("zero denominator in '" + text + "'");
    }
    Rational q(num, den);
    return neg ? Rational(-q) : q;
}

inline Rational rational_from_json(const Json& j, const std::string& where) {
    if (j.is_string()) return rational_from_string(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    throw input_error(where + ": rational expected as \"p/q\" string or integer");
}

inline std::vector<Rational> rational_vector_from_json(const Json& j, const std::string& where) {
    if (!j.is_array()) throw input_error(where + ": array expected");
    std::vector<Rational> out;
    for (auto& e : j) out.push_back(rational_from_json(e, where));
    return out;
}

// ---- exponent-keyed coefficient maps ----

inline Expo expo_from_key(const std::string& key, size_t nvars, const std::string& where) {
    Expo e;
    std::stringstream ss(key);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            e.push_back(std::stoi(part));
        } catch (...) {
            throw input_error(where + ": malformed exponent key '" + key + "'");
        }
    }
    if (e.size() != nvars)
        throw input_error(where + ": exponent key '" + key + "' has wrong arity");
    return e;
}

inline std::string expo_key(const Expo& e) {
    std::string s;
    for (size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
    return s;
}

inline TSeries series_from_json(const Json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("vars") || !j.contains("order") || !j.contains("terms"))
        throw input_error(where + ": series needs vars/order/terms");
    std::vector<std::string> vars = j.at("vars").get<std::vector<std::string>>();
    int order = j.at("order").get<int>();
    if (order < 0) throw input_error(where + ": negative order");
    TSeries s = TSeries::zero(vars, order);
    for (auto& [key, value] : j.at("terms").items()) {
        Expo e = expo_from_key(key, vars.size(), where);
        for (int k : e)
            if (k < 0) throw input_error(where + ": negative exponent in series");
        if (total_degree(e) > order)
            throw input_error(where + ": term above the declared order");
        s.set_coeff(e, rational_from_json(value, where));
    }
    return s;
}

inline Json series_to_json(const TSeries& s) {
    Json terms = Json::object();
    for (auto& [e, c] : s.terms()) terms[expo_key(e)] = rat_str(c);
    return Json{{"vars", s.vars()},
                {"order", s.exact() ? Json("exact") : Json(s.order())},
                {"terms", terms},
                {"text", s.str()}};
}

inline Laurent laurent_from_json(const Json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("var") || !j.contains("order") || !j.contains("terms"))
        throw input_error(where + ": laurent form needs var/order/terms");
    Laurent l(j.at("var").get<std::string>(), j.at("order").get<int>());
    for (auto& [key, value] : j.at("terms").items()) {
        int k;
        try {
            k = std::stoi(key);
        } catch (...) {
            throw input_error(where + ": malformed exponent '" + key + "'");
        }
        if (k > l.order()) throw input_error(where + ": term above the declared order");
        l.set_coeff(k, rational_from_json(value, where));
    }
    return l;
}

inline Json laurent_to_json(const Laurent& l) {
    Json terms = Json::object();
    for (auto& [k, c] : l.coefficients()) terms[std::to_string(k)] = rat_str(c);
    return Json{{"var", l.var()},
                {"order", l.exact() ? Json("exact") : Json(l.order())},
                {"terms", terms},
                {"text", l.str()}};
}

inline Json mpoly_to_json(const MPoly& p) {
    Json terms = Json::object();
    for (auto& [e, c] : p.terms()) terms[expo_key(e)] = rat_str(c);
    return Json{{"vars", p.vars()}, {"terms", terms}, {"text", p.str()}};
}

// ---- ring descriptors ----

// {generators:[{name,degree}], relations:["mono = expr", ...],
//  integral:{mono: value}, top_degree: optional}
inline RingPtr ring_from_json(const Json& j) {
    if (!j.contains("generators")) throw input_error("ring descriptor: generators required");
    std::vector<std::string> names;
    std::vector<int> degrees;
    for (auto& g : j.at("generators")) {
        names.push_back(g.at("name").get<std::string>());
        degrees.push_back(g.at("degree").get<int>());
    }
    auto mono_of = [&](const MPoly& p, const std::string& where) {
        if (p.terms().size() != 1 || p.terms().begin()->second != 1)
            throw input_error(where + ": left side must be a monic monomial");
        return p.terms().begin()->first;
    };
    std::vector<RingPresentation::Rule> rules;
    if (j.contains("relations"))
        for (auto& r : j.at("relations")) {
            std::string text = r.get<std::string>();
            auto eq = text.find('=');
            if (eq == std::string::npos)
                throw input_error("relation '" + text + "' needs the form mono = expr");
            RingPresentation::Rule rule;
            rule.lhs = mono_of(parse_expression(text.substr(0, eq), names), "relation");
            MPoly rhs = parse_expression(text.substr(eq + 1), names);
            for (auto& [e, c] : rhs.terms()) rule.rhs.emplace_back(e, c);
            rules.push_back(std::move(rule));
        }
    std::map<Expo, Rational, GrlexLess> integral;
    int top = 0;
    if (!j.contains("integral") || j.at("integral").empty())
        throw input_error("ring descriptor: nonempty integral map required");
    for (auto& [key, value] : j.at("integral").items()) {
        Expo m = mono_of(parse_expression(key, names), "integral");
        int deg = 0;
        for (size_t i = 0; i < m.size(); ++i) deg += m[i] * degrees[i];
        top = std::max(top, deg);
        integral[m] = rational_from_json(value, "integral");
    }
    if (j.contains("top_degree")) top = j.at("top_degree").get<int>();
    return RingPresentation::create(j.value("name", std::string("custom ring")), names, degrees,
                                    top, std::move(rules), std::move(integral));
}

}  // namespace folia
