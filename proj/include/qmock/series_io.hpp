#pragma once

#include <json.hpp>

#include "qmock/series.hpp"

namespace qmock {

// {"val":int,"acc":int,"coeffs":{"<k>":"<poly-string>"}}
inline nlohmann::json series_to_json(const QSeries& s) {
    QSeries t = s;
    t.tighten();
    nlohmann::json j;
    j["val"] = t.val();
    j["acc"] = t.acc();
    auto& c = j["coeffs"] = nlohmann::json::object();
    for (const auto& [k, p] : t.coeffs()) c[std::to_string(k)] = p.str();
    return j;
}

inline QSeries series_from_json(const nlohmann::json& j) {
    std::map<int, LaurentPoly> coeffs;
    for (const auto& [k, v] : j.at("coeffs").items()) {
        LaurentPoly p = LaurentPoly::parse(v.get<std::string>());
        if (!p.is_zero()) coeffs[std::stoi(k)] = std::move(p);
    }
    return QSeries::from_parts(j.at("val").get<int>(), j.at("acc").get<int>(), std::move(coeffs));
}

}  // namespace qmock
