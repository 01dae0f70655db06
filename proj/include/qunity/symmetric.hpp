#pragma once

#include <vector>

#include "qunity/askey_wilson.hpp"

// Two-parameter symmetric subfamily a = -c = q^alpha, d = -b = q^beta.
// All quantities are real trigonometric expressions in omega = pi M / N.

namespace qunity {

struct symmetric_params {
    double alpha, beta;
    root_of_unity root;
    double omega() const {
        return pi * static_cast<double>(root.m()) / static_cast<double>(root.n());
    }
};

// Positivity boxes for M = 1, N odd.
inline bool sym_in_region_one(double alpha, double beta) {
    return -0.25 < alpha && alpha < 0.25 && 0.25 < beta && beta < 0.75;
}
inline bool sym_in_region_two(double alpha, double beta) {
    return 0.25 < alpha && alpha < 0.75 && 0.75 < beta && beta < 1.25;
}

// Recurrence coefficient u_n. The generic fraction has two removable
// factor pairs: at n = 1 the factor sin(omega(2a+2b-1)) appears in both
// numerator and denominator, and at n = N-1 the numerator factor equals
// (-1)^M times the second denominator factor. Both cancellations are done
// exactly so the formula stays finite across alpha + beta = half-integers.
inline double sym_u(const symmetric_params& par, long n, const tolerances& tol = {}) {
    const long nn = par.root.n();
    if (n < 1 || n > nn) throw range_error("sym_u: index out of range");
    if (n == nn) return 0.0;
    const double w = par.omega();
    const double s2 = par.alpha + par.beta;
    const double sign_m = par.root.m() % 2 == 0 ? 1.0 : -1.0;

    double num = 4.0 * std::sin(w * n) * std::cos(w * (n + 2.0 * par.alpha - 1.0)) *
                 std::cos(w * (n + 2.0 * par.beta - 1.0));
    double den;
    if (n == 1) {
        // sin(w(n + 2a + 2b - 2)) == sin(2w(n + a + b - 3/2)); both drop
        den = std::sin(2.0 * w * (n + s2 - 0.5));
    } else if (n == nn - 1) {
        // sin(w(n + 2a + 2b - 2)) = (-1)^M sin(2w(n + a + b - 1/2))
        num *= sign_m;
        den = std::sin(2.0 * w * (n + s2 - 1.5));
    } else {
        num *= std::sin(w * (n + 2.0 * s2 - 2.0));
        den = std::sin(2.0 * w * (n + s2 - 1.5)) * std::sin(2.0 * w * (n + s2 - 0.5));
    }
    if (std::abs(den) <= tol.abs)
        throw singular_denominator_error("sym_u: denominator vanishes");
    return num / den;
}

// u_1..u_{N-1} plus the truncating u_N = 0; h_n alongside.
struct symmetric_system {
    std::vector<double> u; // u[0] unused, u[1..N]
    std::vector<double> h; // h[0..N-1]
    std::vector<double> x; // grid x_s = 2 cos 2w(s + 1/4)
};

inline std::vector<double> sym_grid(const symmetric_params& par) {
    const long nn = par.root.n();
    std::vector<double> x(nn);
    for (long s = 0; s < nn; ++s)
        x[s] = 2.0 * std::cos(2.0 * par.omega() * (s + 0.25));
    return x;
}

inline symmetric_system sym_recurrence(const symmetric_params& par, const tolerances& tol = {}) {
    const long nn = par.root.n();
    symmetric_system sys;
    sys.u.assign(nn + 1, 0.0);
    for (long k = 1; k < nn; ++k) sys.u[k] = sym_u(par, k, tol);
    sys.h.assign(nn, 1.0);
    for (long k = 1; k < nn; ++k) sys.h[k] = sys.h[k - 1] * sys.u[k];
    sys.x = sym_grid(par);
    return sys;
}

// Weight w_s = R sin 2w(s+1/4) prod_{k=1}^s ..., normalized to sum 1.
inline weight_table sym_weight(const symmetric_params& par, const tolerances& tol = {}) {
    const long nn = par.root.n();
    const double w = par.omega();
    weight_table wt;
    wt.source = weight_source::family_closed_form;
    wt.index_origin = 0;
    wt.w.resize(nn);
    const symmetric_system sys = sym_recurrence(par, tol);
    wt.h.assign(sys.h.begin(), sys.h.end());
    wt.x.assign(sys.x.begin(), sys.x.end());

    double running = 1.0;
    for (long s = 0; s < nn; ++s) {
        if (s > 0) {
            const double den = std::sin(2.0 * w * (s - par.alpha + 0.25)) *
                               std::sin(2.0 * w * (s - par.beta + 0.25));
            if (std::abs(den) <= tol.abs)
                throw singular_denominator_error("sym_weight: denominator vanishes");
            running *= std::sin(2.0 * w * (s + par.alpha - 0.75)) *
                       std::sin(2.0 * w * (s + par.beta - 0.75)) / den;
        }
        wt.w[s] = std::sin(2.0 * w * (s + 0.25)) * running;
    }
    cplx total = 0.0;
    for (const cplx& v : wt.w) total += v;
    wt.raw_sum = total; // accumulated with R = 1; normalization fixes the constant
    for (cplx& v : wt.w) v /= total;
    return wt;
}

struct symmetric_difference {
    std::vector<double> a_coef, c_coef; // A_s, C_s on the family grid
    std::vector<double> lambda;         // -4 sin wn sin w(n + 2a + 2b - 1)
    std::vector<double> u_herm;         // U_s from the gauge, U_s^2 = A_s C_{s-1}
    std::vector<double> chi;            // gauge chi(s), chi(0) = 1
};

inline symmetric_difference sym_difference_operator(const symmetric_params& par,
                                                    const tolerances& tol = {}) {
    const long nn = par.root.n();
    const double w = par.omega();
    symmetric_difference op;
    op.a_coef.resize(nn);
    op.c_coef.resize(nn);
    op.lambda.resize(nn);
    for (long s = 0; s < nn; ++s) {
        const double d0 = std::sin(2.0 * w * (s + 0.25));
        const double dm = std::sin(2.0 * w * (s - 0.25));
        const double dp = std::sin(2.0 * w * (s + 0.75));
        if (std::abs(d0 * dm) <= tol.abs || std::abs(d0 * dp) <= tol.abs)
            throw singular_denominator_error("sym_difference_operator: grid denominator vanishes");
        op.a_coef[s] = std::sin(2.0 * w * (s - par.alpha + 0.25)) *
                       std::sin(2.0 * w * (s - par.beta + 0.25)) / (d0 * dm);
        op.c_coef[s] = std::sin(2.0 * w * (s + par.alpha + 0.25)) *
                       std::sin(2.0 * w * (s + par.beta + 0.25)) / (d0 * dp);
    }
    for (long k = 0; k < nn; ++k)
        op.lambda[k] = -4.0 * std::sin(w * k) * std::sin(w * (k + 2.0 * par.alpha + 2.0 * par.beta - 1.0));

    op.u_herm.resize(nn);
    op.chi.resize(nn);
    op.chi[0] = 1.0;
    for (long s = 0; s < nn; ++s) {
        const double prod = op.a_coef[s] * op.c_coef[(s + nn - 1) % nn];
        if (prod <= 0.0)
            throw non_hermitian_error("sym_difference_operator: A_s C_{s-1} <= 0");
        if (s > 0) op.chi[s] = op.chi[s - 1] * std::sqrt(op.a_coef[s] / op.c_coef[s - 1]);
        // U_s = A_s chi(s-1)/chi(s) = sign(A_s) sqrt(A_s C_{s-1})
        op.u_herm[s] = (op.a_coef[s] >= 0.0 ? 1.0 : -1.0) * std::sqrt(prod);
    }
    return op;
}

// The generic AWP parameters behind this family.
inline aw_params sym_to_generic(const symmetric_params& par) {
    const double step = 2.0 * pi * static_cast<double>(par.root.m()) /
                        static_cast<double>(par.root.n());
    const cplx a = std::polar(1.0, step * par.alpha);
    const cplx b = -std::polar(1.0, step * par.beta);
    return aw_params{a, b, -a, -b, par.root};
}

} // namespace qunity
