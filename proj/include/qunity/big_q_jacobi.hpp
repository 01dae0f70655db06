#pragma once

#include <vector>

#include "qunity/askey_wilson.hpp"

// Big q-Jacobi polynomials at q^N = 1 with c = 1: zeros at the N-th roots
// of unity x_s = q^s (s = 1..N) and an explicit normalized weight.

namespace qunity {

struct bqj_params {
    cplx a, b;
    root_of_unity root; // c = 1 throughout

    void validate(const tolerances& tol = {}) const {
        const std::array<std::pair<const char*, cplx>, 3> items{{
            {"a", a}, {"b", b}, {"ab", a * b}}};
        for (const auto& [name, v] : items) {
            for (long k = 0; k < root.n(); ++k)
                if (std::abs(v - root.q_pow(k)) <= tol.cond)
                    throw parameter_constraint_error(
                        std::string("bqj_params: '") + name + "' lies on a power of q", name);
        }
    }
};

struct bqj_system {
    std::vector<cplx> u;  // u[0] unused, u[1..N] with u[N] = 0
    std::vector<cplx> b;  // b[0..N-1]
    std::vector<cplx> h;  // h[0..N-1]
    std::vector<cplx> x;  // grid q^s, s = 1..N (x[0] is s = 1)
    weight_table w;
};

inline bqj_system bqj_all(const bqj_params& par, const tolerances& tol = {}) {
    par.validate(tol);
    const root_of_unity& w = par.root;
    const long nn = w.n();
    const cplx a = par.a, b = par.b, ab = par.a * par.b;

    auto xi = [&](long k) {
        return -a * w.q_pow(k + 1) * (1.0 - w.q_pow(k)) * (1.0 - b * w.q_pow(k)) *
               (1.0 - ab * w.q_pow(k)) /
               ((1.0 - ab * w.q_pow(2 * k)) * (1.0 - ab * w.q_pow(2 * k + 1)));
    };
    auto eta = [&](long k) {
        return (1.0 - a * w.q_pow(k + 1)) * (1.0 - w.q_pow(k + 1)) * (1.0 - ab * w.q_pow(k + 1)) /
               ((1.0 - ab * w.q_pow(2 * k + 1)) * (1.0 - ab * w.q_pow(2 * k + 2)));
    };

    bqj_system sys;
    sys.u.assign(nn + 1, cplx(0.0));
    for (long k = 1; k <= nn; ++k) sys.u[k] = xi(k) * eta(k - 1);
    sys.b.resize(nn);
    for (long k = 0; k < nn; ++k) sys.b[k] = 1.0 - xi(k) - eta(k);
    sys.h.assign(nn, cplx(1.0));
    for (long k = 1; k < nn; ++k) sys.h[k] = sys.h[k - 1] * sys.u[k];

    sys.x.resize(nn);
    for (long s = 1; s <= nn; ++s) sys.x[s - 1] = w.q_pow(s);

    sys.w.source = weight_source::family_closed_form;
    sys.w.index_origin = 1;
    sys.w.x = sys.x;
    sys.w.h = sys.h;
    sys.w.w.resize(nn);
    const cplx an = ipow(a, nn), bn = ipow(b, nn);
    const cplx front = (1.0 - an) * (1.0 - ab * w.q()) /
                       (a * w.q() * (b - 1.0) * (1.0 - an * bn));
    for (long s = 1; s <= nn; ++s)
        sys.w.w[s - 1] = front * qpoch_q(b, w, s) * w.q_pow(s) / qpoch_q(1.0 / a, w, s);

    sys.w.raw_sum = 0.0;
    for (const cplx& v : sys.w.w) sys.w.raw_sum += v;
    for (cplx& v : sys.w.w) v /= sys.w.raw_sum;
    return sys;
}

// P_{N-1}(x_s) evaluated through the root-of-unity Chu-Vandermonde sum.
inline cplx bqj_pnm1_closed(const bqj_params& par, long s) {
    const root_of_unity& w = par.root;
    const long nn = w.n();
    const cplx ab = par.a * par.b;
    const cplx dn1 = static_cast<double>(nn) * (1.0 - ipow(par.a, nn)) *
                     (1.0 - ab * w.q_pow(-1)) /
                     ((1.0 - par.a) * (1.0 - ipow(ab, nn)));
    cplx ab_pow = 1.0;
    for (long k = 0; k < nn - s; ++k) ab_pow *= ab;
    return dn1 * ab_pow * qpoch_q(w.q() / par.b, w, nn - s) / qpoch_q(par.a * w.q(), w, nn - s);
}

enum class bqj_limit { q_meixner, big_q_laguerre };

inline weight_table bqj_limit_weights(bqj_limit which, cplx param, const root_of_unity& w,
                                      const tolerances& tol = {}) {
    const long nn = w.n();
    weight_table wt;
    wt.source = weight_source::limit_formula;
    wt.index_origin = 1;
    wt.w.resize(nn);
    wt.x.resize(nn);
    for (long s = 1; s <= nn; ++s) wt.x[s - 1] = w.q_pow(s);

    if (which == bqj_limit::q_meixner) {
        const cplx b = param;
        if (std::abs(1.0 - ipow(b, nn)) <= tol.cond)
            throw parameter_constraint_error("bqj_limit_weights: b^N = 1", "b");
        const cplx front = ipow(b, 1 - nn) / (1.0 - b);
        for (long s = 1; s <= nn; ++s)
            wt.w[s - 1] = front * qpoch_q(b, w, s) * w.q_pow(s);
    } else {
        const cplx a = param;
        if (std::abs(1.0 - ipow(a, nn)) <= tol.cond)
            throw parameter_constraint_error("bqj_limit_weights: a^N = 1", "a");
        const cplx front = (ipow(a, nn) - 1.0) / (w.q() * a);
        for (long s = 1; s <= nn; ++s)
            wt.w[s - 1] = front * w.q_pow(s) / qpoch_q(1.0 / a, w, s);
    }

    wt.raw_sum = 0.0;
    for (const cplx& v : wt.w) wt.raw_sum += v;
    for (cplx& v : wt.w) v /= wt.raw_sum;
    return wt;
}

} // namespace qunity
