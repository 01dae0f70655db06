#pragma once

#include <vector>

#include "qunity/askey_wilson.hpp"

// Alternative q-Jacobi polynomials: the AWP subfamily with base p (M odd),
// c = -d = 1, truncating at degree N+1. N+1 real simple zeros
// x_s = 2 cos(pi M s / N), s = 0..N, and an explicit normalized weight with
// halved endpoints.

namespace qunity {

struct aqj_params {
    cplx a, b;
    root_of_unity root; // base is p; M odd

    void validate(const tolerances& tol = {}) const {
        if (root.m() % 2 == 0)
            throw parity_error("aqj_params: M must be odd");
        const std::array<std::pair<const char*, cplx>, 3> items{{
            {"ab", a * b}, {"a", a}, {"b", b}}};
        for (const auto& [name, v] : items) {
            for (long k = 0; k < 2 * root.n(); ++k)
                if (std::abs(v - root.p_pow(k)) <= tol.cond)
                    throw parameter_constraint_error(
                        std::string("aqj_params: '") + name + "' lies on a power of p", name);
        }
    }
};

inline double aqj_endpoint_factor(long s, long nn) {
    return (s == 0 || s == nn) ? 0.5 : 1.0;
}

struct aqj_system {
    std::vector<cplx> u;  // u[0] unused, u[1..N+1] with u[N+1] = 0
    std::vector<cplx> b;  // b[0..N]
    std::vector<cplx> h;  // h[0..N]
    std::vector<double> x; // x_s = 2 cos(pi M s / N), s = 0..N
    weight_table w;
};

inline aqj_system aqj_all(const aqj_params& par, const tolerances& tol = {}) {
    par.validate(tol);
    const root_of_unity& w = par.root;
    const long nn = w.n();
    const cplx a = par.a, b = par.b, ab = par.a * par.b;

    // xi/eta of the generic AWP recurrence with (a, b, 1, -1) in base p
    auto xi = [&](long k) {
        return a * (1.0 - w.p_pow(k)) * (1.0 - b * w.p_pow(k - 1)) * (1.0 + b * w.p_pow(k - 1)) *
               (1.0 + w.p_pow(k - 1)) /
               ((1.0 + ab * w.p_pow(2 * k - 2)) * (1.0 + ab * w.p_pow(2 * k - 1)));
    };
    auto eta = [&](long k) {
        return (1.0 - ab * w.p_pow(k)) * (1.0 - a * w.p_pow(k)) * (1.0 + a * w.p_pow(k)) *
               (1.0 + ab * w.p_pow(k - 1)) /
               (a * (1.0 + ab * w.p_pow(2 * k)) * (1.0 + ab * w.p_pow(2 * k - 1)));
    };

    aqj_system sys;
    sys.u.assign(nn + 2, cplx(0.0));
    for (long k = 1; k <= nn + 1; ++k) sys.u[k] = xi(k) * eta(k - 1);
    sys.b.resize(nn + 1);
    for (long k = 0; k <= nn; ++k) sys.b[k] = -xi(k) - eta(k) + a + 1.0 / a;
    sys.h.assign(nn + 1, cplx(1.0));
    for (long k = 1; k <= nn; ++k) sys.h[k] = sys.h[k - 1] * sys.u[k];

    sys.x.resize(nn + 1);
    for (long s = 0; s <= nn; ++s)
        sys.x[s] = 2.0 * std::cos(pi * w.m() * s / static_cast<double>(nn));

    sys.w.source = weight_source::family_closed_form;
    sys.w.index_origin = 0;
    sys.w.x.assign(sys.x.begin(), sys.x.end());
    sys.w.h = sys.h;
    sys.w.w.resize(nn + 1);
    const cplx a_n = qpoch_p(w.p(), w, nn) * qpoch_p(-a, w, nn) * qpoch_p(-b, w, nn) /
                     (2.0 * static_cast<double>(nn) * qpoch_p(-ab, w, nn));
    const cplx step = -w.p() / ab;
    cplx step_pow = 1.0;
    for (long s = 0; s <= nn; ++s) {
        const cplx den = qpoch_p(w.p() / a, w, s) * qpoch_p(w.p() / b, w, s);
        if (std::abs(den) <= tol.abs)
            throw singular_denominator_error("aqj_all: weight denominator vanishes");
        sys.w.w[s] = a_n * aqj_endpoint_factor(s, nn) * qpoch_p(a, w, s) * qpoch_p(b, w, s) *
                     step_pow / den;
        step_pow *= step;
    }

    sys.w.raw_sum = 0.0;
    for (const cplx& v : sys.w.w) sys.w.raw_sum += v;
    for (cplx& v : sys.w.w) v /= sys.w.raw_sum;
    return sys;
}

// P_{N+1}(x) = z^{-N-1} (z^2 - 1)(z^{2N} - 1) with x = z + 1/z.
inline cplx aqj_pnp1_closed(const root_of_unity& w, cplx z) {
    return (z - 1.0 / z) * (ipow(z, w.n()) - ipow(z, -w.n()));
}

// P_{N+1}'(x_s) = 2N(-1)^s / chi_s.
inline cplx aqj_pnp1_derivative(const root_of_unity& w, long s) {
    const double sign = s % 2 == 0 ? 1.0 : -1.0;
    return 2.0 * static_cast<double>(w.n()) * sign / aqj_endpoint_factor(s, w.n());
}

// P_N(x_s) via the Jackson-summed 3phi2.
inline cplx aqj_pn_closed(const aqj_params& par, long s) {
    const root_of_unity& w = par.root;
    const long nn = w.n();
    const cplx ab = par.a * par.b;
    const cplx dn = qpoch_p(-1.0, w, nn) * qpoch_p(par.a, w, nn) * qpoch_p(par.b, w, nn) /
                    qpoch_p(ab * w.p_pow(-1), w, nn);
    cplx step_pow = 1.0;
    const cplx step = ab / w.p();
    for (long k = 0; k < s; ++k) step_pow *= step;
    return dn * qpoch_p(w.p() / par.a, w, s) * qpoch_p(w.p() / par.b, w, s) * step_pow /
           (qpoch_p(par.a, w, s) * qpoch_p(par.b, w, s));
}

enum class aqj_limit { double_zero, half_gauss };

// a -> 0, b -> 0 gives the pure Gauss-sum weight; a = p^{1/2}, b -> 0 the
// half-integer one.
inline weight_table aqj_limit_weights(aqj_limit which, const root_of_unity& w,
                                      const tolerances& = {}) {
    if (w.m() % 2 == 0)
        throw parity_error("aqj_limit_weights: M must be odd");
    const long nn = w.n();
    weight_table wt;
    wt.source = weight_source::limit_formula;
    wt.index_origin = 0;
    wt.w.resize(nn + 1);
    wt.x.resize(nn + 1);
    for (long s = 0; s <= nn; ++s)
        wt.x[s] = 2.0 * std::cos(pi * w.m() * s / static_cast<double>(nn));

    if (which == aqj_limit::double_zero) {
        const cplx front = qpoch_p(w.p(), w, nn) / (2.0 * static_cast<double>(nn));
        for (long s = 0; s <= nn; ++s) {
            const double sign = s % 2 == 0 ? 1.0 : -1.0;
            wt.w[s] = front * aqj_endpoint_factor(s, nn) * sign * w.p_pow(-s * s);
        }
    } else {
        // A_N = sqrt(2/N) p^{N/4} (2N/M), Jacobi symbol included
        const double jac = jacobi_symbol(2 * nn, w.m());
        const cplx front = std::sqrt(2.0 / static_cast<double>(nn)) *
                           unit_power(w.m(), 8) * jac;
        for (long s = 0; s <= nn; ++s)
            wt.w[s] = front * aqj_endpoint_factor(s, nn) * w.half_p_pow(-s * s);
    }

    wt.raw_sum = 0.0;
    for (const cplx& v : wt.w) wt.raw_sum += v;
    for (cplx& v : wt.w) v /= wt.raw_sum;
    return wt;
}

struct wilson_legendre_system {
    std::vector<double> u;  // u[0] unused, u[1..N]; u[N-1] = 0 truncates
    std::vector<double> h;  // h[0..N-1]
    std::vector<double> x;  // full grid 2 cos(pi M s / N), s = 0..N
    std::vector<double> w;  // w_0 = w_N = 0, sine weights between
};

// Wilson's discrete Legendre polynomials: the a = -b -> p limit. The
// closed-form u_n carries the same 4 sin... prefactor as the symmetric
// family; the printed form drops the 4 (a typo caught by the moment
// oracle, u_1 at N = 3 must equal 1).
inline wilson_legendre_system wilson_q_legendre(const root_of_unity& w,
                                                const tolerances& = {}) {
    if (w.m() % 2 == 0)
        throw parity_error("wilson_q_legendre: M must be odd");
    const long nn = w.n();
    const double th = pi * w.m() / (2.0 * static_cast<double>(nn));
    wilson_legendre_system sys;
    sys.u.assign(nn + 1, 0.0);
    for (long k = 1; k <= nn; ++k) {
        if (k == nn - 1) continue; // cos(th(k+1)) vanishes exactly there
        const double sk = std::sin(th * k);
        sys.u[k] = 4.0 * sk * sk * std::cos(th * (k - 1)) * std::cos(th * (k + 1)) /
                   (std::sin(th * (2 * k - 1)) * std::sin(th * (2 * k + 1)));
    }
    sys.h.assign(nn, 0.0);
    sys.h[0] = 1.0;
    for (long k = 1; k < nn; ++k) sys.h[k] = sys.h[k - 1] * sys.u[k];

    sys.x.resize(nn + 1);
    sys.w.assign(nn + 1, 0.0);
    const double front = std::tan(pi * w.m() / (2.0 * static_cast<double>(nn)));
    for (long s = 0; s <= nn; ++s) {
        sys.x[s] = 2.0 * std::cos(pi * w.m() * s / static_cast<double>(nn));
        if (s > 0 && s < nn)
            sys.w[s] = front * std::sin(pi * w.m() * s / static_cast<double>(nn));
    }
    return sys;
}

} // namespace qunity
