#pragma once

// OutputRecord serialization: {"op": ..., "params": {...}, "value": ...}.
// Exact integers are decimal strings, rationals "p/q", polynomials arrays of
// coefficient strings (lowest degree first), approximations {value, err}.

#include <json.hpp>

#include <string>
#include <vector>

#include "rbell/exact.hpp"
#include "rbell/polynomial.hpp"

namespace rbell {

using Json = nlohmann::ordered_json;

inline Json to_json(const ExactInt& v) { return v.get_str(); }
inline Json to_json(const ExactRational& v) { return to_string(v); }

inline Json to_json(const IntPolynomial& p) {
    Json arr = Json::array();
    for (const auto& c : p.coeffs()) arr.push_back(c.get_str());
    return arr;
}

inline Json to_json(const std::vector<ExactInt>& seq) {
    Json arr = Json::array();
    for (const auto& v : seq) arr.push_back(v.get_str());
    return arr;
}

inline Json to_json(const ApproxReal& a) { return Json{{"value", a.value}, {"err", a.err}}; }

struct OutputRecord {
    std::string op;
    Json params = Json::object();
    Json value;

    Json to_json() const { return Json{{"op", op}, {"params", params}, {"value", value}}; }

    /// Compact single-line JSON without trailing whitespace.
    std::string dump() const { return to_json().dump(); }

    static OutputRecord parse(const std::string& text) {
        const Json j = Json::parse(text);
        OutputRecord out;
        out.op = j.at("op").get<std::string>();
        out.params = j.at("params");
        out.value = j.at("value");
        return out;
    }
};

}  // namespace rbell
