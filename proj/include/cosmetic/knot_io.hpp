#pragma once

#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cosmetic/obstruction.hpp"

namespace cosmetic {

class KnotFileError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::size_t line_of_offset(const std::string& text, std::size_t offset) {
    std::size_t line = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i)
        if (text[i] == '\n') ++line;
    return line;
}

inline Rational rational_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw std::invalid_argument("expected an integer or an \"a/b\" string");
}

// hf.a is either a_{-g..g} (2g+1 entries) or a_{0..g} (g+1 entries).
inline KnotFloerData hf_from_json(const nlohmann::json& j, std::optional<int> tau) {
    const int g = j.at("g").get<int>();
    const auto a = j.at("a").get<std::vector<std::int64_t>>();
    const int nu = j.at("v_threshold").get<int>();
    if (g > 0 && a.size() == static_cast<std::size_t>(g + 1)) {
        std::vector<std::int64_t> full(a.rbegin(), a.rend());
        full.insert(full.end(), a.begin() + 1, a.end());
        return KnotFloerData(g, std::move(full), nu, tau);
    }
    return KnotFloerData(g, a, nu, tau);
}

inline KnotRecord record_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw std::invalid_argument("record must be a JSON object");
    const std::string name = j.at("name").get<std::string>();
    std::optional<SeifertMatrix> seifert;
    if (j.contains("seifert_matrix"))
        seifert = SeifertMatrix(j.at("seifert_matrix").get<std::vector<std::vector<std::int64_t>>>());
    std::optional<SymLaurentPoly> alexander;
    if (j.contains("alexander")) {
        const auto& a = j.at("alexander");
        std::vector<std::int64_t> coeffs{a.at("a0").get<std::int64_t>()};
        if (a.contains("a")) {
            const auto rest = a.at("a").get<std::vector<std::int64_t>>();
            coeffs.insert(coeffs.end(), rest.begin(), rest.end());
        }
        alexander = SymLaurentPoly(std::move(coeffs));
    }
    std::optional<int> tau;
    if (j.contains("tau")) tau = j.at("tau").get<int>();
    std::optional<KnotFloerData> hf;
    if (j.contains("hf")) hf = hf_from_json(j.at("hf"), tau);
    Rational lambda(0);
    if (j.contains("lambda_ambient")) lambda = rational_from_json(j.at("lambda_ambient"));
    std::optional<bool> nontrivial;
    if (j.contains("nontrivial")) nontrivial = j.at("nontrivial").get<bool>();
    return KnotRecord::make(name, std::move(seifert), std::move(alexander), std::move(hf), std::move(lambda), tau,
                            nontrivial);
}

}  // namespace detail

// Corpus text: a JSON array of records, or an object {"knots": [...]}. Each record:
//   {"name": str, "seifert_matrix": [[int]]} and/or {"alexander": {"a0": int, "a": [int]}},
//   optional "hf": {"g": int, "a": [int], "v_threshold": int}, "tau": int,
//   "lambda_ambient": int or "a/b", "nontrivial": bool.
inline std::vector<KnotRecord> parse_knots(const std::string& text, const std::string& source = "<input>") {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw KnotFileError(source + ":" + std::to_string(detail::line_of_offset(text, e.byte)) +
                            ": JSON parse error: " + e.what());
    }
    const nlohmann::json* list = &doc;
    if (doc.is_object() && doc.contains("knots")) list = &doc.at("knots");
    if (!list->is_array()) throw KnotFileError(source + ": expected an array of knot records");

    std::vector<KnotRecord> out;
    for (std::size_t i = 0; i < list->size(); ++i) {
        const auto& j = (*list)[i];
        std::string label = "record #" + std::to_string(i);
        if (j.is_object() && j.contains("name") && j.at("name").is_string())
            label += " ('" + j.at("name").get<std::string>() + "')";
        try {
            out.push_back(detail::record_from_json(j));
        } catch (const std::exception& e) {
            throw KnotFileError(source + ": " + label + ": " + e.what());
        }
    }
    return out;
}

inline std::vector<KnotRecord> load_knots(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw KnotFileError("cannot open knot file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_knots(buf.str(), path);
}

inline const KnotRecord& find_knot(const std::vector<KnotRecord>& knots, const std::string& name) {
    for (const auto& k : knots)
        if (k.name == name) return k;
    throw KnotFileError("no knot named '" + name + "'");
}

}  // namespace cosmetic
