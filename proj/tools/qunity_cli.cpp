// qunity - evaluate, verify, and tabulate the finite Askey-Wilson systems
// at q a primitive root of unity.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "qunity/cli_run.hpp"

namespace {

using qunity::cplx;
using qunity::run_config;

void add_complex_option(CLI::App* app, const std::string& name, run_config& cfg,
                        const std::string& key, const std::string& desc) {
    auto setter = [&cfg, key](const std::vector<double>& v) {
        cfg.parameters[key] = cplx(v[0], v[1]);
        return true;
    };
    app->add_option_function<std::vector<double>>(name, setter, desc)
        ->expected(2)
        ->type_name("RE IM");
}

void add_real_option(CLI::App* app, const std::string& name, run_config& cfg,
                     const std::string& key, const std::string& desc) {
    auto setter = [&cfg, key](const std::vector<double>& v) {
        cfg.parameters[key] = cplx(v[0], 0.0);
        return true;
    };
    app->add_option_function<std::vector<double>>(name, setter, desc)
        ->expected(1)
        ->type_name("VALUE");
}

void add_common(CLI::App* app, run_config& cfg, bool with_family = true) {
    app->add_option("--M", cfg.m, "numerator of the root angle, q = e^{2 pi i M/N}");
    app->add_option("--N", cfg.n, "order of the root of unity");
    if (with_family)
        app->add_option("--family", cfg.family,
                        "generic|symmetric|cq-jacobi|big-q-jacobi|alt-q-jacobi|limit:<name>");
    add_complex_option(app, "--a", cfg, "a", "parameter a (two reals: re im)");
    add_complex_option(app, "--b", cfg, "b", "parameter b");
    add_complex_option(app, "--c", cfg, "c", "parameter c");
    add_complex_option(app, "--d", cfg, "d", "parameter d");
    add_complex_option(app, "--z", cfg, "z", "parameter z");
    add_complex_option(app, "--x", cfg, "x", "evaluation point x");
    add_complex_option(app, "--t", cfg, "t", "evaluation point t with x = t + 1/t");
    add_real_option(app, "--alpha", cfg, "alpha", "real parameter alpha");
    add_real_option(app, "--beta", cfg, "beta", "real parameter beta");
    app->add_option("--format", cfg.format, "json|csv|text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    app->add_option("--seed", cfg.seed, "seed for drawn parameters (default: QUNITY_SEED)");
    app->add_option("--tolerance-rel", cfg.tol.rel, "relative tolerance");
    app->add_option("--tolerance-abs", cfg.tol.abs, "absolute tolerance");
    app->add_option("--epsilon-cond", cfg.tol.cond, "constraint margin epsilon");
}

} // namespace

int main(int argc, char** argv) {
    run_config cfg;
    if (const char* env_seed = std::getenv("QUNITY_SEED"))
        cfg.seed = std::strtoull(env_seed, nullptr, 10);

    CLI::App app{"finite Askey-Wilson systems at roots of unity"};
    app.require_subcommand(0, 1);
    std::string config_path;
    app.add_option("--config", config_path, "run a JSON-serialized config instead of flags");

    CLI::App* eval = app.add_subcommand("eval", "evaluate P_n");
    add_common(eval, cfg);
    eval->add_option("--degree,--n", cfg.degree, "polynomial degree");
    eval->add_option("--s", cfg.grid_index, "grid index (cq-jacobi evaluation)");

    CLI::App* zeros = app.add_subcommand("zeros", "zero grid of the truncating polynomial");
    add_common(zeros, cfg);

    CLI::App* weights = app.add_subcommand("weights", "discrete weight table");
    add_common(weights, cfg);
    weights->add_option("--route", cfg.route, "generic weight route: product|series")
        ->check(CLI::IsMember({"product", "series"}));

    CLI::App* gram = app.add_subcommand("gram", "full orthogonality (Gram + dual) check");
    add_common(gram, cfg);

    CLI::App* vid = app.add_subcommand("verify-identity", "check a named summation identity");
    add_common(vid, cfg, false);
    vid->add_option("--id", cfg.identity,
                    "qbin|chu|spchu|saa|dixon|singh|odd1|odd2|even1|even2|"
                    "gauss|gs1|gauss3|p12p|newgauss")
        ->required();
    vid->add_option("--s", cfg.sum_index, "index s where the identity takes one");

    CLI::App* vthm = app.add_subcommand("verify-thm2", "check the weight-normalization identity");
    add_common(vthm, cfg, false);

    CLI::App* scan = app.add_subcommand("scan-positivity", "grid scan of u_n and w_s signs");
    add_common(scan, cfg);
    scan->add_option("--region", cfg.region, "symmetric-family box: I or II")
        ->check(CLI::IsMember({"I", "II"}));
    scan->add_option("--grid-points", cfg.grid_points, "points per axis (default 9)");

    CLI11_PARSE(app, argc, argv);

    if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) {
            std::cerr << "error: cannot open config '" << config_path << "'\n";
            return 2;
        }
        nlohmann::json j;
        try {
            in >> j;
            cfg = qunity::run_config_from_json(j);
        } catch (const std::exception& e) {
            std::cerr << "error: bad config: " << e.what() << "\n";
            return 2;
        }
        return qunity::cli::run(cfg, std::cout, std::cerr);
    }

    for (CLI::App* sub : {eval, zeros, weights, gram, vid, vthm, scan})
        if (sub->parsed()) {
            cfg.command = sub->get_name();
            return qunity::cli::run(cfg, std::cout, std::cerr);
        }

    std::cerr << app.help() << "\n";
    return 2;
}
