#ifndef DAKIT_SERIES_IO_HPP
#define DAKIT_SERIES_IO_HPP

#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "series.hpp"

namespace dakit {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Wire format shared by the CLI and the test fixtures:
//   {"dimension": d, "terms": [{"exponents": [a1,...,ad], "coeff": [re, im]}, ...]}
// Exponent lists must have length d; duplicate exponent tuples are summed.
// The cap defaults to the largest total degree present (0 for no terms).
inline TruncatedSeries series_from_json(const nlohmann::json& j, std::optional<int> cap = std::nullopt) {
    if (!j.is_object() || !j.contains("dimension") || !j.contains("terms"))
        throw ParseError("series JSON: expected object with \"dimension\" and \"terms\"");
    const int d = j.at("dimension").get<int>();
    if (d < 1) throw ParseError("series JSON: dimension must be >= 1");
    const auto& terms = j.at("terms");
    if (!terms.is_array()) throw ParseError("series JSON: \"terms\" must be an array");

    std::vector<std::pair<MultiIndex, Complex>> parsed;
    int max_deg = 0;
    for (const auto& t : terms) {
        const auto& e = t.at("exponents");
        if (!e.is_array() || static_cast<int>(e.size()) != d)
            throw ParseError("series JSON: exponent list length must equal dimension");
        std::vector<int> exps;
        for (const auto& x : e) {
            const int a = x.get<int>();
            if (a < 0) throw ParseError("series JSON: negative exponent");
            exps.push_back(a);
        }
        const auto& c = t.at("coeff");
        if (!c.is_array() || c.size() != 2) throw ParseError("series JSON: coeff must be [re, im]");
        MultiIndex idx(std::move(exps));
        max_deg = std::max(max_deg, idx.order());
        parsed.emplace_back(std::move(idx), Complex(c[0].get<double>(), c[1].get<double>()));
    }

    TruncatedSeries f(d, cap.value_or(max_deg));
    for (auto& [idx, v] : parsed)
        if (idx.order() <= f.degree_cap()) f.add_to_coefficient(idx, v);
    return f;
}

inline nlohmann::json series_to_json(const TruncatedSeries& f) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [a, v] : f.terms()) {
        terms.push_back({{"exponents", a.exponents()}, {"coeff", {v.real(), v.imag()}}});
    }
    return {{"dimension", f.dimension()}, {"terms", terms}};
}

inline TruncatedSeries series_from_file(const std::string& path, std::optional<int> cap = std::nullopt) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open input file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    try {
        return series_from_json(j, cap);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("series JSON: ") + e.what());
    }
}

}  // namespace dakit

#endif
