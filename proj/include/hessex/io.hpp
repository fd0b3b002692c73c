#pragma once

#include <json.hpp>

#include "hessfn.hpp"
#include "pairing.hpp"
#include "poly.hpp"
#include "quotient.hpp"
#include "relations.hpp"

namespace hessex {

using nlohmann::json;

inline json to_json(const MultiPoly& p) {
    json terms = json::array();
    for (auto& [e, c] : p.terms()) terms.push_back({{"c", to_string(c)}, {"e", e}});
    return json{{"nvars", p.nvars()}, {"terms", terms}};
}

inline MultiPoly poly_from_json(const json& j) {
    if (!j.contains("nvars") || !j.contains("terms"))
        throw DomainError("polynomial JSON must have 'nvars' and 'terms'");
    MultiPoly p(j.at("nvars").get<int>());
    for (auto& t : j.at("terms")) {
        ExponentVec e = t.at("e").get<ExponentVec>();
        p.add_term(std::move(e), parse_rational(t.at("c").get<std::string>()));
    }
    return p;
}

inline json to_json(const HessFunc& h) { return json{{"n", h.n()}, {"h", h.values()}}; }

inline HessFunc hess_from_json(const json& j) {
    return HessFunc::validate(j.at("h").get<std::vector<int>>());
}

inline json to_json(const Series& s) {
    json a = json::array();
    for (long long v : series_trim(s)) a.push_back(v);
    return a;
}

inline json basis_to_json(const std::vector<ExponentVec>& basis) {
    json a = json::array();
    for (auto& e : basis) a.push_back(e);
    return a;
}

inline json to_json(const SchubertExpr& e) {
    json a = json::array();
    std::vector<std::pair<Permutation, Rational>> items(e.terms.begin(), e.terms.end());
    std::sort(items.begin(), items.end(),
              [](auto& x, auto& y) { return schubert_pivot_greater(x.first, y.first); });
    for (auto& [w, c] : items) a.push_back({{"w", to_string(w)}, {"c", to_string(c)}});
    return a;
}

inline json to_json(const SolvedRow& row) {
    return json{{"lead", to_string(row.lead)}, {"rhs", to_json(row.rhs)}};
}

inline json matrix_to_json(const std::vector<std::vector<Rational>>& m) {
    json rows = json::array();
    for (auto& r : m) {
        json row = json::array();
        for (auto& v : r) row.push_back(to_string(v));
        rows.push_back(row);
    }
    return rows;
}

inline json class_to_json(const ClassVector& v) {
    json a = json::array();
    for (auto& [e, c] : expand_class(v)) a.push_back({{"c", to_string(c)}, {"e", e}});
    return a;
}

} // namespace hessex
