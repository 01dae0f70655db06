#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "json.hpp"

#include "qunity/common.hpp"

// CLI run description. Serializes losslessly to JSON; complex numbers go
// on the wire as [re, im] arrays.

namespace qunity {

struct run_config {
    std::string command;                    // eval|zeros|weights|gram|verify-identity|verify-thm2|scan-positivity
    std::string family = "generic";         // generic|symmetric|cq-jacobi|big-q-jacobi|alt-q-jacobi|limit:<name>
    long m = 1;
    long n = 5;
    std::map<std::string, cplx> parameters; // a, b, c, d, z, x, t, alpha, beta (reals use re only)
    std::string identity;                   // verify-identity target
    long degree = 0;                        // eval degree
    long grid_index = -1;                   // cq-jacobi eval node
    long sum_index = -1;                    // identity index s
    std::string route = "product";          // generic weights: product|series
    std::string region = "I";               // symmetric scan box
    long grid_points = 9;
    tolerances tol{};
    std::string format = "text";            // json|csv|text
    std::uint64_t seed = 0;
};

inline nlohmann::json to_json(const cplx& z) {
    return nlohmann::json::array({z.real(), z.imag()});
}

inline nlohmann::json to_json(const run_config& cfg) {
    nlohmann::json j;
    j["command"] = cfg.command;
    j["family"] = cfg.family;
    j["M"] = cfg.m;
    j["N"] = cfg.n;
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [key, value] : cfg.parameters) params[key] = to_json(value);
    j["parameters"] = params;
    j["identity"] = cfg.identity;
    j["degree"] = cfg.degree;
    j["grid_index"] = cfg.grid_index;
    j["sum_index"] = cfg.sum_index;
    j["route"] = cfg.route;
    j["region"] = cfg.region;
    j["grid_points"] = cfg.grid_points;
    j["tolerance"] = {{"rel", cfg.tol.rel}, {"abs", cfg.tol.abs}, {"cond", cfg.tol.cond}};
    j["format"] = cfg.format;
    j["seed"] = cfg.seed;
    return j;
}

inline run_config run_config_from_json(const nlohmann::json& j) {
    run_config cfg;
    cfg.command = j.at("command").get<std::string>();
    cfg.family = j.at("family").get<std::string>();
    cfg.m = j.at("M").get<long>();
    cfg.n = j.at("N").get<long>();
    for (const auto& [key, value] : j.at("parameters").items())
        cfg.parameters[key] = cplx(value.at(0).get<double>(), value.at(1).get<double>());
    cfg.identity = j.at("identity").get<std::string>();
    cfg.degree = j.at("degree").get<long>();
    cfg.grid_index = j.at("grid_index").get<long>();
    cfg.sum_index = j.at("sum_index").get<long>();
    cfg.route = j.at("route").get<std::string>();
    cfg.region = j.at("region").get<std::string>();
    cfg.grid_points = j.at("grid_points").get<long>();
    cfg.tol.rel = j.at("tolerance").at("rel").get<double>();
    cfg.tol.abs = j.at("tolerance").at("abs").get<double>();
    cfg.tol.cond = j.at("tolerance").at("cond").get<double>();
    cfg.format = j.at("format").get<std::string>();
    cfg.seed = j.at("seed").get<std::uint64_t>();
    return cfg;
}

} // namespace qunity
