#pragma once

#include <cstdio>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "qunity/alt_q_jacobi.hpp"
#include "qunity/big_q_jacobi.hpp"
#include "qunity/cq_jacobi.hpp"
#include "qunity/identities.hpp"
#include "qunity/run_config.hpp"
#include "qunity/symmetric.hpp"

// Command implementations behind the qunity CLI. Everything writes a
// deterministic report (fixed row order, shortest round-trip numerals in
// JSON) and returns the process exit code: 0 pass, 1 verification failure,
// 2 input error.

namespace qunity::cli {

inline std::string fmt_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string fmt_cplx(const cplx& z) {
    return fmt_double(z.real()) + (z.imag() < 0 ? "" : "+") + fmt_double(z.imag()) + "i";
}

class input_error : public error {
public:
    using error::error;
};

inline cplx require_param(const run_config& cfg, const std::string& name) {
    auto it = cfg.parameters.find(name);
    if (it == cfg.parameters.end())
        throw input_error("missing parameter --" + name);
    return it->second;
}

inline bool has_param(const run_config& cfg, const std::string& name) {
    return cfg.parameters.count(name) != 0;
}

// ---- report emission ------------------------------------------------

inline void emit_json(std::ostream& out, const run_config& cfg, const nlohmann::json& result,
                      bool pass) {
    nlohmann::json j;
    j["config"] = to_json(cfg);
    j["result"] = result;
    j["pass"] = pass;
    out << j.dump(2) << "\n";
}

inline void emit_table(std::ostream& out, const run_config& cfg,
                       const std::vector<std::string>& header,
                       const std::vector<std::vector<std::string>>& rows,
                       const nlohmann::json& meta, bool pass) {
    if (cfg.format == "csv") {
        for (std::size_t i = 0; i < header.size(); ++i)
            out << header[i] << (i + 1 < header.size() ? "," : "\n");
        for (const auto& row : rows)
            for (std::size_t i = 0; i < row.size(); ++i)
                out << row[i] << (i + 1 < row.size() ? "," : "\n");
        return;
    }
    if (cfg.format == "json") {
        nlohmann::json result = meta;
        nlohmann::json jrows = nlohmann::json::array();
        for (const auto& row : rows) {
            nlohmann::json jr = nlohmann::json::object();
            for (std::size_t i = 0; i < row.size(); ++i) jr[header[i]] = row[i];
            jrows.push_back(jr);
        }
        result["rows"] = jrows;
        emit_json(out, cfg, result, pass);
        return;
    }
    for (auto it = meta.begin(); it != meta.end(); ++it)
        out << it.key() << " = " << (it->is_string() ? it->get<std::string>() : it->dump())
            << "\n";
    for (std::size_t i = 0; i < header.size(); ++i)
        out << header[i] << (i + 1 < header.size() ? "\t" : "\n");
    for (const auto& row : rows)
        for (std::size_t i = 0; i < row.size(); ++i)
            out << row[i] << (i + 1 < row.size() ? "\t" : "\n");
}

inline nlohmann::json report_json(const identity_report& rep) {
    nlohmann::json j;
    j["id"] = rep.id;
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [key, value] : rep.params) params[key] = to_json(value);
    j["parameters"] = params;
    j["lhs"] = to_json(rep.lhs);
    j["rhs"] = to_json(rep.rhs);
    j["abs_residual"] = rep.abs_residual;
    j["rel_residual"] = rep.rel_residual;
    j["pass"] = rep.pass;
    return j;
}

// ---- family assembly -------------------------------------------------

struct assembled_system {
    std::vector<cplx> x;   // grid
    std::vector<cplx> w;   // normalized weights
    std::vector<cplx> b, u, h;
    long degrees = 0;      // degrees 0..degrees-1 participate in the Gram check
    int index_origin = 0;
    nlohmann::json meta = nlohmann::json::object();
};

inline aw_params generic_params(const run_config& cfg, const root_of_unity& w) {
    return aw_params{require_param(cfg, "a"), require_param(cfg, "b"),
                     require_param(cfg, "c"), require_param(cfg, "d"), w};
}

inline cqj_params cqj_from_config(const run_config& cfg, const root_of_unity& w) {
    if (has_param(cfg, "alpha") || has_param(cfg, "beta"))
        return cqj_params::jacobi_form(require_param(cfg, "alpha").real(),
                                       require_param(cfg, "beta").real(), w);
    return cqj_params::complex_form(require_param(cfg, "a"), require_param(cfg, "c"), w);
}

inline assembled_system assemble(const run_config& cfg, const root_of_unity& w,
                                 bool need_recurrence = false) {
    assembled_system sys;
    if (cfg.family == "generic") {
        const aw_params par = generic_params(cfg, w);
        const recurrence_coeffs rc = recurrence(par, cfg.tol);
        const weight_table wt =
            cfg.route == "series" ? weight_from_series(par, cfg.tol) : weight_product(par, cfg.tol);
        const zero_set zs = zeros(par, cfg.tol);
        sys.x = wt.x;
        sys.w = wt.w;
        sys.b = rc.b;
        sys.u = rc.u;
        sys.h = rc.h;
        sys.degrees = w.n();
        sys.meta["E_N"] = to_json(zs.e_n);
        sys.meta["r"] = to_json(zs.r);
        sys.meta["identity_residual"] = zs.identity_residual;
        sys.meta["raw_sum"] = to_json(wt.raw_sum);
    } else if (cfg.family == "symmetric") {
        const symmetric_params par{require_param(cfg, "alpha").real(),
                                   require_param(cfg, "beta").real(), w};
        const symmetric_system fam = sym_recurrence(par, cfg.tol);
        const weight_table wt = sym_weight(par, cfg.tol);
        sys.x = wt.x;
        sys.w = wt.w;
        sys.b.assign(w.n(), cplx(0.0));
        sys.u.assign(fam.u.begin(), fam.u.end());
        sys.h.assign(fam.h.begin(), fam.h.end());
        sys.degrees = w.n();
        sys.meta["raw_sum"] = to_json(wt.raw_sum);
    } else if (cfg.family == "cq-jacobi") {
        const cqj_params par = cqj_from_config(cfg, w);
        const weight_table wt = cqj_weights(par, cfg.tol);
        sys.x = wt.x;
        sys.w = wt.w;
        if (need_recurrence) {
            // the generic route under b = ap, d = cp; refused by cond1 on
            // the special lines alpha + beta integer
            const recurrence_coeffs rc = recurrence(cqj_to_generic(par), cfg.tol);
            sys.b = rc.b;
            sys.u = rc.u;
            sys.h = rc.h;
            sys.degrees = w.n();
        }
        sys.meta["raw_sum"] = to_json(wt.raw_sum);
    } else if (cfg.family == "big-q-jacobi") {
        const bqj_params par{require_param(cfg, "a"), require_param(cfg, "b"), w};
        const bqj_system fam = bqj_all(par, cfg.tol);
        sys.x = fam.w.x;
        sys.w = fam.w.w;
        sys.b = fam.b;
        sys.u = fam.u;
        sys.h = fam.h;
        sys.degrees = w.n();
        sys.index_origin = 1;
        sys.meta["raw_sum"] = to_json(fam.w.raw_sum);
    } else if (cfg.family == "alt-q-jacobi") {
        const aqj_params par{require_param(cfg, "a"), require_param(cfg, "b"), w};
        const aqj_system fam = aqj_all(par, cfg.tol);
        sys.x = fam.w.x;
        sys.w = fam.w.w;
        sys.b = fam.b;
        sys.u = fam.u;
        sys.h = fam.h;
        sys.degrees = w.n() + 1;
        sys.meta["raw_sum"] = to_json(fam.w.raw_sum);
    } else if (cfg.family == "limit:wilson-legendre") {
        const wilson_legendre_system fam = wilson_q_legendre(w, cfg.tol);
        // interior support points carry the weight; degrees 0..N-2 form the
        // square orthogonal system
        for (long s = 1; s < w.n(); ++s) {
            sys.x.push_back(fam.x[s]);
            sys.w.push_back(fam.w[s]);
        }
        sys.b.assign(w.n(), cplx(0.0));
        sys.u.assign(fam.u.begin(), fam.u.end());
        sys.h.assign(fam.h.begin(), fam.h.end());
        sys.degrees = w.n() - 1;
        sys.index_origin = 1;
    } else if (cfg.family == "limit:q-laguerre") {
        const weight_table wt =
            cqj_limit_weights(cqj_limit::q_laguerre, require_param(cfg, "a"), w, cfg.tol);
        sys.x = wt.x;
        sys.w = wt.w;
        sys.meta["raw_sum"] = to_json(wt.raw_sum);
    } else if (cfg.family == "limit:q-hermite") {
        const weight_table wt = cqj_limit_weights(cqj_limit::q_hermite, 0.0, w, cfg.tol);
        sys.x = wt.x;
        sys.w = wt.w;
        sys.meta["raw_sum"] = to_json(wt.raw_sum);
    } else if (cfg.family == "limit:q-meixner") {
        const weight_table wt =
            bqj_limit_weights(bqj_limit::q_meixner, require_param(cfg, "b"), w, cfg.tol);
        sys.x = wt.x;
        sys.w = wt.w;
        sys.index_origin = 1;
        sys.meta["raw_sum"] = to_json(wt.raw_sum);
    } else if (cfg.family == "limit:big-q-laguerre") {
        const weight_table wt =
            bqj_limit_weights(bqj_limit::big_q_laguerre, require_param(cfg, "a"), w, cfg.tol);
        sys.x = wt.x;
        sys.w = wt.w;
        sys.index_origin = 1;
        sys.meta["raw_sum"] = to_json(wt.raw_sum);
    } else if (cfg.family == "limit:double-zero-limit") {
        const weight_table wt = aqj_limit_weights(aqj_limit::double_zero, w, cfg.tol);
        sys.x = wt.x;
        sys.w = wt.w;
        sys.meta["raw_sum"] = to_json(wt.raw_sum);
    } else if (cfg.family == "limit:half-gauss") {
        const weight_table wt = aqj_limit_weights(aqj_limit::half_gauss, w, cfg.tol);
        sys.x = wt.x;
        sys.w = wt.w;
        sys.meta["raw_sum"] = to_json(wt.raw_sum);
    } else {
        throw input_error("unknown family '" + cfg.family + "'");
    }
    sys.meta["index_origin"] = sys.index_origin;
    return sys;
}

// ---- commands ---------------------------------------------------------

inline int cmd_weights(const run_config& cfg, std::ostream& out) {
    const root_of_unity w(cfg.m, cfg.n);
    const assembled_system sys = assemble(cfg, w);
    std::vector<std::vector<std::string>> rows;
    for (std::size_t s = 0; s < sys.w.size(); ++s)
        rows.push_back({std::to_string(static_cast<long>(s) + sys.index_origin),
                        fmt_double(sys.x[s].real()), fmt_double(sys.x[s].imag()),
                        fmt_double(sys.w[s].real()), fmt_double(sys.w[s].imag())});
    emit_table(out, cfg, {"s", "x_re", "x_im", "w_re", "w_im"}, rows, sys.meta, true);
    return 0;
}

inline int cmd_zeros(const run_config& cfg, std::ostream& out) {
    const root_of_unity w(cfg.m, cfg.n);
    const assembled_system sys = assemble(cfg, w);
    std::vector<std::vector<std::string>> rows;
    for (std::size_t s = 0; s < sys.x.size(); ++s)
        rows.push_back({std::to_string(static_cast<long>(s) + sys.index_origin),
                        fmt_double(sys.x[s].real()), fmt_double(sys.x[s].imag())});
    emit_table(out, cfg, {"s", "x_re", "x_im"}, rows, sys.meta, true);
    return 0;
}

inline int cmd_eval(const run_config& cfg, std::ostream& out) {
    const root_of_unity w(cfg.m, cfg.n);
    nlohmann::json result;
    cplx value;
    if (cfg.family == "cq-jacobi") {
        if (cfg.grid_index < 0) throw input_error("eval --family cq-jacobi needs --s");
        const cqj_params par = cqj_from_config(cfg, w);
        value = cqj_eval(par, cfg.degree, cfg.grid_index, cfg.tol);
        result["x"] = to_json(cplx(cqj_grid(w)[cfg.grid_index]));
    } else if (cfg.family == "generic") {
        const aw_params par = generic_params(cfg, w);
        const recurrence_coeffs rc = recurrence(par, cfg.tol);
        cplx x, t;
        if (has_param(cfg, "t")) {
            t = require_param(cfg, "t");
            x = t + 1.0 / t;
        } else {
            x = require_param(cfg, "x");
            t = t_from_x(x);
        }
        value = eval_monic(rc, cfg.degree, x);
        const cplx hyper = eval_hypergeometric(par, cfg.degree, t, cfg.tol);
        result["x"] = to_json(x);
        result["t"] = to_json(t);
        result["hypergeometric"] = to_json(hyper);
        result["route_rel_diff"] = rel_diff(value, hyper);
    } else {
        const assembled_system sys = assemble(cfg, w);
        if (cfg.degree >= static_cast<long>(sys.b.size()) + 1)
            throw input_error("eval: degree out of range for this family");
        const cplx x = require_param(cfg, "x");
        cplx prev = 0.0, cur = 1.0;
        for (long k = 0; k < cfg.degree; ++k) {
            cplx next = (x - sys.b[k]) * cur - (k > 0 ? sys.u[k] : cplx(0.0)) * prev;
            prev = std::exchange(cur, next);
        }
        value = cur;
        result["x"] = to_json(x);
    }
    result["degree"] = cfg.degree;
    result["value"] = to_json(value);
    if (cfg.format == "json")
        emit_json(out, cfg, result, true);
    else
        out << "P_" << cfg.degree << " = " << fmt_cplx(value) << "\n";
    return 0;
}

inline int cmd_gram(const run_config& cfg, std::ostream& out) {
    const root_of_unity w(cfg.m, cfg.n);
    const assembled_system sys = assemble(cfg, w, true);
    if (sys.degrees == 0)
        throw input_error("gram: family '" + cfg.family + "' carries no recurrence");
    const orthogonality_report rep = gram_check(sys.x, sys.w, sys.b, sys.u, sys.h, sys.degrees);
    const bool pass = rep.pass(cfg.tol);
    nlohmann::json result;
    result["max_offdiag"] = rep.max_offdiag;
    result["max_diag_rel_err"] = rep.max_diag_rel_err;
    result["dual_max_offdiag"] = rep.dual_max_offdiag;
    result["dual_max_diag_err"] = rep.dual_max_diag_err;
    result["degrees"] = sys.degrees;
    if (cfg.format == "json") {
        emit_json(out, cfg, result, pass);
    } else {
        out << "gram " << (pass ? "PASS" : "FAIL") << " max_offdiag=" << fmt_double(rep.max_offdiag)
            << " max_diag_rel_err=" << fmt_double(rep.max_diag_rel_err)
            << " dual_max_offdiag=" << fmt_double(rep.dual_max_offdiag)
            << " dual_max_diag_err=" << fmt_double(rep.dual_max_diag_err) << "\n";
    }
    return pass ? 0 : 1;
}

inline int cmd_verify_identity(const run_config& cfg, std::ostream& out) {
    const root_of_unity w(cfg.m, cfg.n);
    std::mt19937_64 rng(cfg.seed);
    auto draw = [&rng]() {
        std::uniform_real_distribution<double> logr(std::log(0.4), std::log(1.6));
        std::uniform_real_distribution<double> ang(0.0, 2.0 * pi);
        return std::polar(std::exp(logr(rng)), ang(rng));
    };
    auto param_or_draw = [&](const std::string& name) {
        return has_param(cfg, name) ? cfg.parameters.at(name) : draw();
    };
    const long s = cfg.sum_index > 0 ? cfg.sum_index : std::max(1L, cfg.n / 2);

    identity_report rep;
    const std::string& id = cfg.identity;
    if (id == "qbin")
        rep = check_q_binomial(s, param_or_draw("z"), w, cfg.tol);
    else if (id == "chu")
        rep = check_chu_vandermonde(s, param_or_draw("a"), param_or_draw("c"), w, cfg.tol);
    else if (id == "spchu")
        rep = check_spchu(param_or_draw("a"), param_or_draw("c"), w, cfg.tol);
    else if (id == "saa")
        rep = check_pfaff_saalschutz(param_or_draw("a"), param_or_draw("b"), param_or_draw("c"),
                                     w, cfg.tol);
    else if (id == "dixon")
        rep = check_dixon(param_or_draw("a"), param_or_draw("b"), w, cfg.tol);
    else if (id == "singh")
        rep = check_singh(param_or_draw("a"), param_or_draw("b"), w, cfg.tol);
    else if (id == "odd1")
        rep = check_inversion(param_or_draw("a"), w, inversion_variant::odd1, cfg.tol);
    else if (id == "odd2")
        rep = check_inversion(param_or_draw("a"), w, inversion_variant::odd2, cfg.tol);
    else if (id == "even1")
        rep = check_inversion(param_or_draw("a"), w, inversion_variant::even1, cfg.tol);
    else if (id == "even2")
        rep = check_inversion(param_or_draw("a"), w, inversion_variant::even2, cfg.tol);
    else if (id == "gauss")
        rep = check_gauss_sum(w, gauss_variant::gauss, cfg.tol);
    else if (id == "gs1")
        rep = check_gauss_sum(w, gauss_variant::gs1, cfg.tol);
    else if (id == "gauss3")
        rep = check_gauss_sum(w, gauss_variant::gauss3, cfg.tol);
    else if (id == "p12p")
        rep = check_gauss_sum(w, gauss_variant::p12p, cfg.tol);
    else if (id == "newgauss")
        rep = check_gauss_sum(w, gauss_variant::newgauss, cfg.tol);
    else
        throw input_error("unknown identity '" + id + "'");

    if (cfg.format == "json") {
        emit_json(out, cfg, report_json(rep), rep.pass);
    } else {
        out << rep.id << " " << (rep.pass ? "PASS" : "FAIL") << " lhs=" << fmt_cplx(rep.lhs)
            << " rhs=" << fmt_cplx(rep.rhs) << " rel_residual=" << fmt_double(rep.rel_residual)
            << " abs_residual=" << fmt_double(rep.abs_residual) << "\n";
    }
    return rep.pass ? 0 : 1;
}

inline int cmd_verify_thm2(const run_config& cfg, std::ostream& out) {
    const root_of_unity w(cfg.m, cfg.n);
    const identity_report rep = verify_normalization_identity(generic_params(cfg, w), cfg.tol);
    if (cfg.format == "json") {
        emit_json(out, cfg, report_json(rep), rep.pass);
    } else {
        out << "weight-normalization " << (rep.pass ? "PASS" : "FAIL") << " lhs=" << fmt_cplx(rep.lhs)
            << " rhs=" << fmt_cplx(rep.rhs) << " rel_residual=" << fmt_double(rep.rel_residual)
            << "\n";
    }
    return rep.pass ? 0 : 1;
}

inline int cmd_scan_positivity(const run_config& cfg, std::ostream& out) {
    const root_of_unity w(cfg.m, cfg.n);
    double alo, ahi, blo, bhi;
    if (cfg.family == "symmetric") {
        if (cfg.region == "II") {
            alo = 0.25; ahi = 0.75; blo = 0.75; bhi = 1.25;
        } else {
            alo = -0.25; ahi = 0.25; blo = 0.25; bhi = 0.75;
        }
    } else if (cfg.family == "cq-jacobi") {
        alo = blo = -1.0; ahi = bhi = 1.0;
    } else if (cfg.family == "alt-q-jacobi") {
        alo = blo = 0.0; ahi = bhi = 1.0;
    } else {
        throw input_error("scan-positivity: unsupported family '" + cfg.family + "'");
    }

    const long k = cfg.grid_points;
    std::vector<std::vector<std::string>> rows;
    bool all_pass = true;
    long excluded = 0;
    for (long i = 0; i < k; ++i) {
        const double alpha = alo + (ahi - alo) * (i + 1) / static_cast<double>(k + 1);
        for (long j = 0; j < k; ++j) {
            const double beta = blo + (bhi - blo) * (j + 1) / static_cast<double>(k + 1);
            double min_u = std::numeric_limits<double>::infinity();
            double min_w = std::numeric_limits<double>::infinity();
            bool has_u = true;
            std::string status = "pass";
            try {
                if (cfg.family == "symmetric") {
                    const symmetric_params par{alpha, beta, w};
                    const symmetric_system sys = sym_recurrence(par, cfg.tol);
                    for (long kk = 1; kk < cfg.n; ++kk) min_u = std::min(min_u, sys.u[kk]);
                    const weight_table wt = sym_weight(par, cfg.tol);
                    for (const cplx& v : wt.w) min_w = std::min(min_w, v.real());
                } else if (cfg.family == "cq-jacobi") {
                    has_u = false;
                    const weight_table wt =
                        cqj_weights(cqj_params::jacobi_form(alpha, beta, w), cfg.tol);
                    for (const cplx& v : wt.w) min_w = std::min(min_w, v.real());
                } else {
                    const double step = pi * w.m() / static_cast<double>(w.n());
                    const aqj_params par{std::polar(1.0, step * alpha),
                                         -std::polar(1.0, step * beta), w};
                    const aqj_system sys = aqj_all(par, cfg.tol);
                    for (long kk = 1; kk <= cfg.n; ++kk)
                        min_u = std::min(min_u, sys.u[kk].real());
                    for (const cplx& v : sys.w.w) min_w = std::min(min_w, v.real());
                }
                const bool ok = (!has_u || min_u > 0.0) && min_w > 0.0;
                if (!ok) {
                    status = "fail";
                    all_pass = false;
                }
            } catch (const parameter_constraint_error&) {
                status = "excluded";
                ++excluded;
            }
            rows.push_back({fmt_double(alpha), fmt_double(beta),
                            has_u && status != "excluded" ? fmt_double(min_u) : "",
                            status != "excluded" ? fmt_double(min_w) : "", status});
        }
    }
    nlohmann::json meta;
    meta["family"] = cfg.family;
    meta["region"] = cfg.region;
    meta["excluded"] = excluded;
    meta["all_pass"] = all_pass;
    emit_table(out, cfg, {"alpha", "beta", "min_u", "min_w", "status"}, rows, meta, all_pass);
    return all_pass ? 0 : 1;
}

inline int run(const run_config& cfg, std::ostream& out, std::ostream& err) {
    try {
        if (cfg.command == "weights") return cmd_weights(cfg, out);
        if (cfg.command == "zeros") return cmd_zeros(cfg, out);
        if (cfg.command == "eval") return cmd_eval(cfg, out);
        if (cfg.command == "gram") return cmd_gram(cfg, out);
        if (cfg.command == "verify-identity") return cmd_verify_identity(cfg, out);
        if (cfg.command == "verify-thm2") return cmd_verify_thm2(cfg, out);
        if (cfg.command == "scan-positivity") return cmd_scan_positivity(cfg, out);
        err << "error: unknown command '" << cfg.command << "'\n";
        return 2;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace qunity::cli
