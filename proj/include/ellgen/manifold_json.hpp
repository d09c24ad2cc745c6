#ifndef ELLGEN_MANIFOLD_JSON_HPP
#define ELLGEN_MANIFOLD_JSON_HPP

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cohomology.hpp"

namespace ellgen {

namespace detail {

inline Rational json_rational(const nlohmann::json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw ParseError("expected an integer or a rational string, got " + j.dump());
}

inline std::vector<Rational> json_rationals(const nlohmann::json& j) {
    if (!j.is_array()) throw ParseError("expected an array, got " + j.dump());
    std::vector<Rational> v;
    for (auto& x : j) v.push_back(json_rational(x));
    return v;
}

inline const nlohmann::json& field(const nlohmann::json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "' in " + j.dump());
    return j.at(key);
}

inline SplitBundle json_bundle(const CohomologyModel& base, const nlohmann::json& j) {
    SplitBundle b;
    if (j.is_null()) return b;
    if (j.contains("trivial")) {
        if (!j.at("trivial").is_number_integer() || j.at("trivial").get<int>() < 0) throw ParseError("'trivial' must be a nonnegative integer");
        b.trivial = j.at("trivial").get<int>();
    }
    if (j.contains("lines"))
        for (auto& l : j.at("lines")) b.lines.push_back(base.line_class(json_rationals(l)));
    return b;
}

}  // namespace detail

inline ManifoldClass manifold_from_json(const nlohmann::json& j);

namespace detail {

inline CohomologyModel require_model(const nlohmann::json& j, const char* role) {
    ManifoldClass m = manifold_from_json(j);
    if (!m.model) throw BadParams(std::string(role) + " '" + m.name + "' has no cohomology model");
    return *m.model;
}

}  // namespace detail

/**
 * \brief Builds a manifold class from its JSON description.
 *
 * Types: cp, hypersurface, twisted_bundle, product, chern_numbers, catalog.
 */
inline ManifoldClass manifold_from_json(const nlohmann::json& j) {
    const std::string type = detail::field(j, "type").get<std::string>();
    if (type == "cp") {
        const int n = detail::field(j, "n").get<int>();
        if (n < 0) throw ParseError("cp dimension must be nonnegative");
        return ManifoldClass::from_model("CP" + std::to_string(n), cp_model(n));
    }
    if (type == "catalog") return catalog::lookup(detail::field(j, "name").get<std::string>());
    if (type == "hypersurface") {
        const CohomologyModel amb = detail::require_model(detail::field(j, "ambient"), "ambient");
        const CohomologyModel::Element L = amb.line_class(detail::json_rationals(detail::field(j, "c1")));
        return ManifoldClass::from_model("hypersurface", hypersurface_model(amb, L));
    }
    if (type == "twisted_bundle") {
        const CohomologyModel base = detail::require_model(detail::field(j, "base"), "base");
        const SplitBundle E = detail::json_bundle(base, j.value("E", nlohmann::json()));
        const SplitBundle F = detail::json_bundle(base, j.value("F", nlohmann::json()));
        return ManifoldClass::from_model("twisted_bundle", twisted_proj_bundle_model(base, E, F));
    }
    if (type == "product") {
        const auto& fs = detail::field(j, "factors");
        if (!fs.is_array() || fs.empty()) throw ParseError("'factors' must be a nonempty array");
        ManifoldClass acc = manifold_from_json(fs.at(0));
        for (std::size_t i = 1; i < fs.size(); ++i) {
            ManifoldClass f = manifold_from_json(fs.at(i));
            const std::string name = acc.name + " x " + f.name;
            if (acc.model && f.model)
                acc = ManifoldClass::from_model(name, product_model(*acc.model, *f.model));
            else
                acc = ManifoldClass::from_numbers(name, product_chern_vector(acc.cv, f.cv));
        }
        return acc;
    }
    if (type == "chern_numbers") {
        const int n = detail::field(j, "dim").get<int>();
        if (n < 0) throw ParseError("dimension must be nonnegative");
        ChernVector cv(n);
        const auto& nums = detail::field(j, "numbers");
        if (!nums.is_object()) throw ParseError("'numbers' must be an object");
        for (auto it = nums.begin(); it != nums.end(); ++it) {
            std::vector<int> parts;
            std::stringstream ss(it.key());
            std::string tok;
            while (std::getline(ss, tok, ',')) {
                try {
                    parts.push_back(std::stoi(tok));
                } catch (const std::exception&) {
                    throw ParseError("bad partition key '" + it.key() + "'");
                }
            }
            const Partition p = Partition::from_parts(parts);
            if (p.size() != n) throw ParseError("partition '" + it.key() + "' does not have weight " + std::to_string(n));
            cv.set(p, detail::json_rational(it.value()));
        }
        return ManifoldClass::from_numbers("chern_numbers", cv);
    }
    throw ParseError("unknown manifold type '" + type + "'");
}

/// Accepts catalog:NAME, a path to a JSON file, or inline JSON.
inline ManifoldClass load_manifold(const std::string& arg) {
    if (arg.rfind("catalog:", 0) == 0) return catalog::lookup(arg.substr(8));
    std::string text = arg;
    std::error_code ec;
    if (std::filesystem::is_regular_file(arg, ec)) {
        std::ifstream in(arg);
        std::stringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid manifold JSON: ") + e.what());
    }
    try {
        return manifold_from_json(j);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed manifold JSON: ") + e.what());
    }
}

}  // namespace ellgen

#endif
