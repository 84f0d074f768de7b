#pragma once

// JSON wire format for algebras: products are listed sparsely against basis
// labels, zero products are omitted, exact values survive a round trip bit
// for bit

#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include <json.hpp>

#include "lsa/algebra.hpp"

namespace lsa {

using nlohmann::json;

inline json algebra_to_json(const Algebra& A) {
    json j;
    j["name"] = A.name();
    j["dim"] = A.dim();
    j["field"] = A.is_exact() ? "exact" : "numeric";
    j["basis"] = A.labels();
    json products = json::array();
    for (size_t i = 0; i < A.dim(); ++i)
        for (size_t jj = 0; jj < A.dim(); ++jj) {
            json result = json::array();
            for (size_t k = 0; k < A.dim(); ++k) {
                const Scalar& v = A.c(i, jj, k);
                if (v.is_zero()) continue;
                result.push_back({{"basis", A.labels()[k]}, {"value", v.to_string()}});
            }
            if (!result.empty())
                products.push_back(
                    {{"left", A.labels()[i]}, {"right", A.labels()[jj]}, {"result", result}});
        }
    j["products"] = products;
    return j;
}

inline Algebra algebra_from_json(const json& j) {
    if (!j.contains("dim") || !j.contains("basis"))
        throw ParseError("algebra json needs 'dim' and 'basis'");
    size_t dim = j.at("dim").get<size_t>();
    Algebra A(j.value("name", std::string("unnamed")), dim);
    auto labels = j.at("basis").get<std::vector<std::string>>();
    if (labels.size() != dim) throw ParseError("basis label count does not match dim");
    A.set_labels(labels);
    std::map<std::string, size_t> index;
    for (size_t i = 0; i < dim; ++i) {
        if (index.count(labels[i])) throw ParseError("duplicate basis label '" + labels[i] + "'");
        index[labels[i]] = i;
    }
    auto look = [&](const std::string& l) {
        auto it = index.find(l);
        if (it == index.end()) throw ParseError("unknown basis label '" + l + "'");
        return it->second;
    };
    for (const auto& p : j.value("products", json::array())) {
        size_t i = look(p.at("left").get<std::string>());
        size_t jj = look(p.at("right").get<std::string>());
        for (const auto& r : p.at("result")) {
            size_t k = look(r.at("basis").get<std::string>());
            A.set_c(i, jj, k, Scalar::parse(r.at("value").get<std::string>()));
        }
    }
    return A;
}

inline std::string algebra_to_string(const Algebra& A) { return algebra_to_json(A).dump(2); }

inline Algebra algebra_from_string(const std::string& text) {
    return algebra_from_json(json::parse(text));
}

inline void save_algebra(const Algebra& A, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write '" + path + "'");
    out << algebra_to_string(A) << "\n";
}

inline Algebra load_algebra(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot read '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return algebra_from_string(ss.str());
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid algebra file: ") + e.what());
    }
}

}  // namespace lsa
