#pragma once

#include <optional>
#include <vector>

#include "qunity/askey_wilson.hpp"

// Continuous q-Jacobi polynomials at q^N = 1: the AWP subfamily b = a p,
// d = c p with M odd. E_N = 0, the zeros are the Chebyshev nodes
// x_s = 2 cos(pi M (s+1/2)/N), and the Rahman 4phi3 form in base p applies.

namespace qunity {

struct cqj_params {
    cplx a, c;
    root_of_unity root;
    std::optional<std::pair<double, double>> alpha_beta; // set by jacobi_form

    static cqj_params complex_form(cplx a, cplx c, const root_of_unity& w) {
        if (w.m() % 2 == 0)
            throw parity_error("cqj_params: M must be odd");
        return cqj_params{a, c, w, std::nullopt};
    }

    // Real Jacobi parametrization a = p^{alpha+1/2}, c = -p^{beta+1/2}; M = 1.
    static cqj_params jacobi_form(double alpha, double beta, const root_of_unity& w) {
        if (w.m() != 1)
            throw constraint_error("cqj_params: the real Jacobi form needs M = 1");
        const double step = pi / static_cast<double>(w.n());
        return cqj_params{std::polar(1.0, step * (alpha + 0.5)),
                          -std::polar(1.0, step * (beta + 0.5)), w,
                          std::make_pair(alpha, beta)};
    }
};

inline std::vector<double> cqj_grid(const root_of_unity& w) {
    std::vector<double> x(w.n());
    for (long s = 0; s < w.n(); ++s)
        x[s] = 2.0 * std::cos(pi * w.m() * (s + 0.5) / static_cast<double>(w.n()));
    return x;
}

// The generic AWP parameters (a, ap, c, cp).
inline aw_params cqj_to_generic(const cqj_params& par) {
    return aw_params{par.a, par.a * par.root.p(), par.c, par.c * par.root.p(), par.root};
}

// Rahman form at the grid point x_s, degrees 0..N-1.
inline cplx cqj_eval(const cqj_params& par, long n, long s, const tolerances& tol = {}) {
    const root_of_unity& w = par.root;
    const long nn = w.n();
    if (n < 0 || n >= nn) throw range_error("cqj_eval: degree out of range");
    if (s < 0 || s >= nn) throw range_error("cqj_eval: grid index out of range");
    const cplx hp = w.half_p_pow(1);
    const cplx a_hp = par.a * hp, c_hp = par.c * hp;
    const cplx macpn = -par.a * par.c * w.p_pow(n);

    const cplx dn = qpoch_p(-1.0 * w.p(), w, n) * qpoch_p(a_hp, w, n) * qpoch_p(c_hp, w, n) /
                    (w.half_p_pow(n) * qpoch_p(macpn, w, n));

    cplx sum = 1.0, term = 1.0;
    const long kmax = std::min(n, s);
    for (long k = 0; k < kmax; ++k) {
        const cplx den = (1.0 - w.p_pow(k + 1)) * (1.0 - a_hp * w.p_pow(k)) *
                         (1.0 - c_hp * w.p_pow(k)) * (1.0 + w.p_pow(k + 1));
        if (std::abs(den) <= tol.abs)
            throw parameter_constraint_error("cqj_eval: series denominator vanishes", "ac");
        term *= (1.0 - w.p_pow(k - n)) * (1.0 - w.p_pow(k - s)) * (1.0 - w.p_pow(s + 1 + k)) *
                (1.0 - macpn * w.p_pow(k)) / den;
        term *= w.p();
        sum += term;
    }
    return dn * sum;
}

// P_{N-1}(x_s) through the Pfaff-Saalschutz evaluation.
inline cplx cqj_pnm1_closed(const cqj_params& par, long s) {
    const root_of_unity& w = par.root;
    const long nn = w.n();
    const cplx hp = w.half_p_pow(1);
    const cplx dn1 = qpoch_p(-1.0 * w.p(), w, nn - 1) * qpoch_p(par.a * hp, w, nn - 1) *
                     qpoch_p(par.c * hp, w, nn - 1) /
                     (w.half_p_pow(nn - 1) * qpoch_p(-par.a * par.c * w.p_pow(nn - 1), w, nn - 1));
    const cplx hp3 = w.half_p_pow(3);
    cplx ratio_pow = 1.0;
    const cplx ratio = par.a * par.c / w.p();
    for (long k = 0; k < s; ++k) ratio_pow *= ratio;
    return dn1 * ratio_pow * qpoch_p(hp3 / par.a, w, s) * qpoch_p(hp3 / par.c, w, s) /
           (qpoch_p(par.a * hp, w, s) * qpoch_p(par.c * hp, w, s));
}

// Weight table: the complex closed form for general (a, c), or the real
// trigonometric product when the Jacobi parametrization is attached.
inline weight_table cqj_weights(const cqj_params& par, const tolerances& tol = {}) {
    const root_of_unity& w = par.root;
    const long nn = w.n();
    weight_table wt;
    wt.source = weight_source::family_closed_form;
    wt.index_origin = 0;
    wt.w.resize(nn);
    const std::vector<double> grid = cqj_grid(w);
    wt.x.assign(grid.begin(), grid.end());

    if (par.alpha_beta) {
        const auto [alpha, beta] = *par.alpha_beta;
        const double om = pi / (2.0 * static_cast<double>(nn));
        double rn = 1.0;
        for (long k = 1; k < nn; ++k) {
            const double den = std::cos(om * k) * std::sin(om * (k + alpha + beta + 1.0));
            if (std::abs(den) <= tol.abs)
                throw singular_denominator_error("cqj_weights: R_N denominator vanishes");
            rn *= std::sin(om * (k + beta)) * std::cos(om * (k + alpha)) / den;
        }
        double running = 1.0;
        for (long s = 0; s < nn; ++s) {
            if (s > 0) {
                const double den = std::sin(om * (s - alpha)) * std::cos(om * (s - beta));
                if (std::abs(den) <= tol.abs)
                    throw singular_denominator_error("cqj_weights: product denominator vanishes");
                running *= std::sin(om * (s + alpha)) * std::cos(om * (s + beta)) / den;
            }
            wt.w[s] = rn * std::sin(om * (2.0 * s + 1.0)) * running;
        }
    } else {
        const cplx hp = w.half_p_pow(1);
        const cplx rn = cplx(0.0, 1.0) * w.half_p_pow(-1) *
                        qpoch_p(-par.c * hp, w, nn - 1) * qpoch_p(-par.a * hp, w, nn - 1) /
                        (qpoch_p(-par.a * par.c * w.p(), w, nn - 1) *
                         qpoch_p(-1.0 * w.p(), w, nn - 1));
        const cplx hp3 = w.half_p_pow(3);
        const cplx step = -w.p() / (par.a * par.c);
        cplx step_pow = 1.0;
        for (long s = 0; s < nn; ++s) {
            const cplx den = qpoch_p(hp3 / par.a, w, s) * qpoch_p(hp3 / par.c, w, s);
            if (std::abs(den) <= tol.abs)
                throw singular_denominator_error("cqj_weights: weight denominator vanishes");
            wt.w[s] = rn * std::sin(pi * w.m() * (s + 0.5) / static_cast<double>(nn)) *
                      step_pow * qpoch_p(par.a * hp, w, s) * qpoch_p(par.c * hp, w, s) / den;
            step_pow *= step;
        }
    }

    wt.raw_sum = 0.0;
    for (const cplx& v : wt.w) wt.raw_sum += v;
    for (cplx& v : wt.w) v /= wt.raw_sum;
    return wt;
}

enum class cqj_limit { q_laguerre, q_hermite };

// Limit weights implemented straight from their closed forms (c -> 0 gives
// the continuous q-Laguerre family, then a -> 0 the q-Hermite one).
inline weight_table cqj_limit_weights(cqj_limit which, cplx a, const root_of_unity& w,
                                      const tolerances& tol = {}) {
    if (w.m() % 2 == 0)
        throw parity_error("cqj_limit_weights: M must be odd");
    const long nn = w.n();
    weight_table wt;
    wt.source = weight_source::limit_formula;
    wt.index_origin = 0;
    wt.w.resize(nn);
    const std::vector<double> grid = cqj_grid(w);
    wt.x.assign(grid.begin(), grid.end());
    const cplx i_unit(0.0, 1.0);

    if (which == cqj_limit::q_laguerre) {
        const cplx hp = w.half_p_pow(1);
        const cplx front = i_unit * w.half_p_pow(-1) * qpoch_p(-a * hp, w, nn - 1) /
                           qpoch_p(-1.0 * w.p(), w, nn - 1);
        for (long s = 0; s < nn; ++s) {
            const cplx den = qpoch_p(w.half_p_pow(3) / a, w, s);
            if (std::abs(den) <= tol.abs)
                throw singular_denominator_error("cqj_limit_weights: denominator vanishes");
            wt.w[s] = front * std::sin(pi * w.m() * (s + 0.5) / static_cast<double>(nn)) *
                      ipow(a, -s) * w.half_p_pow(-s * s) * qpoch_p(a * hp, w, s) / den;
        }
    } else {
        const cplx front = i_unit / qpoch_p(-1.0 * w.p(), w, nn - 1);
        for (long s = 0; s < nn; ++s) {
            const double sign = s % 2 == 0 ? 1.0 : -1.0;
            wt.w[s] = front * sign * w.half_p_pow(-2 * s * s - 2 * s - 1) *
                      std::sin(pi * w.m() * (s + 0.5) / static_cast<double>(nn));
        }
    }

    wt.raw_sum = 0.0;
    for (const cplx& v : wt.w) wt.raw_sum += v;
    for (cplx& v : wt.w) v /= wt.raw_sum;
    return wt;
}

} // namespace qunity
