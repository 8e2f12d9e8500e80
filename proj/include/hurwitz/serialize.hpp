#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "cutjoin.hpp"
#include "errors.hpp"
#include "genfun.hpp"
#include "laurent.hpp"
#include "partition.hpp"
#include "ppoly.hpp"

namespace hurwitz {

using Json = nlohmann::json;

inline constexpr const char* kFormatVersion = "1";

inline Json to_json(const Partition& p) { return Json(p.parts()); }

inline Partition partition_from_json(const Json& j) {
    if (!j.is_array()) {
        throw ParseError("partition must be a JSON array");
    }
    return Partition(j.get<std::vector<int>>());
}

/// [{"zexp": e, "value": "n/d"}, ...] in increasing exponent.
inline Json to_json(const ZLaurent& z) {
    Json out = Json::array();
    for (const auto& [e, c] : z.terms()) {
        out.push_back({{"zexp", e}, {"value", c.to_fraction_string()}});
    }
    return out;
}

inline ZLaurent laurent_from_json(const Json& j) {
    if (!j.is_array()) {
        throw ParseError("coefficient must be a JSON array");
    }
    ZLaurent out;
    for (const auto& term : j) {
        out.add(term.at("zexp").get<int>(), BigRational::parse(term.at("value").get<std::string>()));
    }
    return out;
}

inline Json to_json(const PPoly& poly) {
    Json out = Json::array();
    for (const auto& [m, c] : poly.terms()) {
        Json monomial{{"p", to_json(m.p)}, {"q", m.q ? to_json(*m.q) : Json(nullptr)}};
        out.push_back({{"monomial", monomial}, {"coeff", to_json(c)}});
    }
    return out;
}

inline PPoly ppoly_from_json(const Json& j) {
    if (!j.is_array()) {
        throw ParseError("polynomial must be a JSON array");
    }
    PPoly out;
    for (const auto& term : j) {
        const Json& m = term.at("monomial");
        Monomial key{partition_from_json(m.at("p")), std::nullopt};
        if (m.contains("q") && !m.at("q").is_null()) {
            key.q = partition_from_json(m.at("q"));
        }
        out.add(key, laurent_from_json(term.at("coeff")));
    }
    return out;
}

inline Json to_json(const GenFunSeries& series) {
    Json marks = Json::array();
    for (const auto& m : series.marks) {
        marks.push_back({{"label", m.label}, {"partition", to_json(m.profile)}});
    }
    Json terms = Json::array();
    for (const auto& l : display_order(series)) {
        terms.push_back({{"u", l}, {"poly", to_json(series.coefficients.at(l))}});
    }
    return {{"genus", series.genus},   {"degree", series.degree}, {"double", series.double_alphabet},
            {"marks", marks},          {"orders", series.orders}, {"terms", terms}};
}

inline GenFunSeries series_from_json(const Json& j) {
    try {
        GenFunSeries series;
        series.genus = j.at("genus").get<int>();
        series.degree = j.at("degree").get<int>();
        series.double_alphabet = j.at("double").get<bool>();
        for (const auto& m : j.at("marks")) {
            series.marks.push_back({m.at("label").get<std::string>(), partition_from_json(m.at("partition"))});
        }
        series.orders = j.at("orders").get<std::vector<int>>();
        for (const auto& t : j.at("terms")) {
            series.coefficients.emplace(t.at("u").get<std::vector<int>>(), ppoly_from_json(t.at("poly")));
        }
        return series;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed series JSON: ") + e.what());
    }
}

inline Json to_json(const DifferentialTerm& t) {
    return {{"coeff", t.coefficient.to_fraction_string()},
            {"zexp", t.z_exponent},
            {"multiply", to_json(t.multiply)},
            {"differentiate", to_json(t.differentiate)}};
}

inline Json to_json(const OperatorMatrix& m) {
    Json out = Json::array();
    for (const auto& [key, value] : m.entries()) {
        out.push_back({{"from", to_json(key.first)}, {"to", to_json(key.second)}, {"coeff", to_json(value)}});
    }
    return out;
}

}  // namespace hurwitz
