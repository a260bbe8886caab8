#pragma once

#include <sstream>

#include "wlab/chars.hpp"
#include "wlab/recursion.hpp"
#include "wlab/report.hpp"
#include "wlab/zhu.hpp"

namespace wlab {

inline Json json_of(const Rational& r) {
    return r.str();
}

inline Json json_of(const Poly& p) {
    Json arr = Json::array();
    for (const auto& c : p.coeffs())
        arr.push_back(c.str());
    return arr;
}

inline Poly poly_from_json(const Json& j) {
    std::vector<Rational> coeffs;
    for (const auto& item : j)
        coeffs.push_back(Rational::parse(item.get<std::string>()));
    return Poly(std::move(coeffs));
}

inline Json json_of(const LaurentPoly& f) {
    Json terms = Json::array();
    for (const auto& [e, c] : f.terms()) {
        Json exps = Json::array();
        for (auto x : e)
            exps.push_back(x);
        terms.push_back(Json::array({exps, json_of(c)}));
    }
    Json out;
    out["nvars"] = f.nvars();
    out["terms"] = std::move(terms);
    return out;
}

inline Json json_of(const ResidueParams& p) {
    Json out;
    out["n"] = p.n;
    out["i"] = p.i;
    out["p"] = p.p;
    out["m"] = p.m;
    out["include_log"] = p.include_log;
    return out;
}

inline Json json_of(const ResidueResult& r) {
    Json out;
    out["params"] = json_of(r.params);
    out["poly"] = json_of(r.value);
    out["provenance"] = r.provenance == Provenance::oracle ? "oracle" : "recursion";
    out["elapsed_ms"] = static_cast<long long>(r.elapsed.count());
    return out;
}

inline Json json_of(const ClosedForm& cf) {
    Json out;
    out["params"] = Json{{"n", cf.n}, {"i_start", cf.i_start}, {"p", cf.p}};
    out["factor_product"] = json_of(cf.factor_product);
    out["base_constant"] = cf.base_constant ? Json(cf.base_constant->str()) : Json(nullptr);
    out["base_source"] = to_string(cf.base_source);
    return out;
}

inline Json json_of(const CtVerification& v) {
    Json out;
    out["params"] = Json{{"k", v.k}, {"p", v.p}};
    out["status"] = to_string(v.status);
    out["lambda"] = v.lambda ? Json(v.lambda->str()) : Json(nullptr);
    out["base_source"] = to_string(v.base_source);
    out["base_constant"] = v.base_constant ? Json(v.base_constant->str()) : Json(nullptr);
    out["factor_product"] = json_of(v.factor_product);
    out["rhs"] = json_of(v.rhs);
    out["elapsed_ms"] = static_cast<long long>(v.elapsed.count());
    return out;
}

inline Json json_of(const QSeries& s) {
    Json out;
    out["denom"] = s.denom();
    out["offset"] = s.offset();
    Json coeffs = Json::array();
    for (const auto& c : s.raw_coeffs())
        coeffs.push_back(c.str());
    out["coeffs"] = std::move(coeffs);
    out["order"] = s.valid() ? Json(s.valid()->str()) : Json(nullptr);
    return out;
}

inline std::string qseries_csv(const QSeries& s) {
    std::ostringstream os;
    os << "exponent,coefficient\n";
    for (const auto& [e, c] : s.entries())
        os << e.str() << "," << c.str() << "\n";
    return os.str();
}

inline Json json_of(const WeightSet& ws) {
    Json entries = Json::array();
    for (const auto& e : ws.entries)
        entries.push_back(Json{{"s", e.label.s}, {"index", e.label.index},
                               {"value", e.value.str()}});
    Json values = Json::array();
    for (const auto& v : ws.values)
        values.push_back(v.str());
    Json out;
    out["p"] = ws.p;
    out["entries"] = std::move(entries);
    out["distinct_values"] = std::move(values);
    return out;
}

inline Json json_of(const std::vector<JordanBlock>& blocks) {
    Json arr = Json::array();
    for (const auto& b : blocks)
        arr.push_back(Json{{"s", b.label.s}, {"index", b.label.index},
                           {"h", b.h.str()}, {"size", b.size}});
    return arr;
}

inline Json json_of(const ThetaCalibration& cal) {
    Json cases = Json::array();
    for (const auto& c : cal.cases)
        cases.push_back(Json{{"s", c.s},
                             {"r", c.r},
                             {"sign", std::string(1, c.sign)},
                             {"normalization", c.normalization.str()},
                             {"reading", c.corrected_reading ? "corrected" : "as-printed"},
                             {"match", c.match}});
    Json out;
    out["p"] = cal.p;
    out["order"] = cal.order;
    out["cases"] = std::move(cases);
    return out;
}

inline Json json_of(const ClosureRank& cr) {
    Json strata = Json::array();
    for (const auto& [tau, rank] : cr.strata)
        strata.push_back(Json{{"tau_degree", tau}, {"rank", rank}});
    Json out;
    out["cardinality"] = cr.cardinality;
    out["rank"] = cr.rank;
    out["strata"] = std::move(strata);
    return out;
}

} // namespace wlab
