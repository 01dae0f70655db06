#pragma once

#include <array>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "qunity/common.hpp"
#include "qunity/errors.hpp"
#include "qunity/root_of_unity.hpp"

// Generic four-parameter Askey-Wilson machinery at q^N = 1: three-term
// recurrence, hypergeometric evaluation, zeros of P_N, both weight formulas,
// the difference operator on the zero grid, and the trigonometric identity
// behind the weight normalization.

namespace qunity {

// t with x = t + 1/t, principal square-root branch, |t| >= 1.
inline cplx t_from_x(cplx x) {
    cplx s = std::sqrt(x * x - 4.0);
    cplx t = 0.5 * (x + s);
    if (std::abs(t) < 1.0) t = 0.5 * (x - s);
    return t;
}

struct aw_params {
    cplx a, b, c, d;
    root_of_unity root;

    cplx g() const { return a * b * c * d; }

    // Distance of the closest of {g, ab, ac, ad, bc, bd, cd} to any power
    // q^k. The product name of the minimizer goes to *worst if requested.
    double constraint_margin(std::string* worst = nullptr) const {
        const std::array<std::pair<const char*, cplx>, 7> products{{
            {"g", g()}, {"ab", a * b}, {"ac", a * c}, {"ad", a * d},
            {"bc", b * c}, {"bd", b * d}, {"cd", c * d}}};
        double margin = std::numeric_limits<double>::infinity();
        for (const auto& [name, v] : products) {
            for (long k = 0; k < root.n(); ++k) {
                double dist = std::abs(v - root.q_pow(k));
                if (dist < margin) {
                    margin = dist;
                    if (worst) *worst = name;
                }
            }
        }
        return margin;
    }

    // Enforce the well-definedness constraints: no product on a power of q,
    // and a != 0 (the recurrence needs a^{-1}).
    void validate(const tolerances& tol = {}) const {
        if (a == cplx(0.0))
            throw singular_param_error("aw_params: a = 0 is singular");
        std::string worst;
        double margin = constraint_margin(&worst);
        if (margin <= tol.cond)
            throw parameter_constraint_error(
                "aw_params: product '" + worst + "' lies within epsilon_cond of a power of q",
                worst);
    }
};

struct recurrence_coeffs {
    // xi[0..N], eta[0..N-1], u[0..N] (u[0] unused, u[N] = 0 truncates),
    // b[0..N-1], norms h[0..N-1] with h[0] = 1.
    std::vector<cplx> xi, eta, u, b, h;
};

inline recurrence_coeffs recurrence(const aw_params& par, const tolerances& tol = {}) {
    par.validate(tol);
    const long n = par.root.n();
    const root_of_unity& w = par.root;
    const cplx a = par.a, b = par.b, c = par.c, d = par.d, g = par.g();

    recurrence_coeffs rc;
    rc.xi.resize(n + 1);
    rc.eta.resize(n);
    for (long k = 0; k <= n; ++k) {
        rc.xi[k] = a * (1.0 - w.q_pow(k)) * (1.0 - b * c * w.q_pow(k - 1)) *
                   (1.0 - b * d * w.q_pow(k - 1)) * (1.0 - c * d * w.q_pow(k - 1)) /
                   ((1.0 - g * w.q_pow(2 * k - 2)) * (1.0 - g * w.q_pow(2 * k - 1)));
    }
    for (long k = 0; k < n; ++k) {
        rc.eta[k] = (1.0 - a * b * w.q_pow(k)) * (1.0 - a * c * w.q_pow(k)) *
                    (1.0 - a * d * w.q_pow(k)) * (1.0 - g * w.q_pow(k - 1)) /
                    (a * (1.0 - g * w.q_pow(2 * k)) * (1.0 - g * w.q_pow(2 * k - 1)));
    }
    rc.u.assign(n + 1, cplx(0.0));
    for (long k = 1; k <= n; ++k) rc.u[k] = rc.xi[k] * rc.eta[k - 1];
    rc.b.resize(n);
    for (long k = 0; k < n; ++k) rc.b[k] = -rc.xi[k] - rc.eta[k] + a + 1.0 / a;
    rc.h.resize(n);
    rc.h[0] = 1.0;
    for (long k = 1; k < n; ++k) rc.h[k] = rc.h[k - 1] * rc.u[k];
    return rc;
}

// Monic P_n(x) by forward recursion, n <= N.
inline cplx eval_monic(const recurrence_coeffs& rc, long n, cplx x) {
    if (n < 0 || n > static_cast<long>(rc.u.size()) - 1)
        throw range_error("eval_monic: degree out of range");
    cplx prev = 0.0, cur = 1.0;
    for (long k = 0; k < n; ++k) {
        cplx next = (x - rc.b[k]) * cur - rc.u[k] * prev;
        prev = std::exchange(cur, next);
    }
    return cur;
}

// The combinatorial invariant E_N.
inline cplx invariant_en(const aw_params& par, const tolerances& tol = {}) {
    const long n = par.root.n();
    const cplx an = ipow(par.a, n), bn = ipow(par.b, n), cn = ipow(par.c, n),
               dn = ipow(par.d, n);
    const cplx gn = an * bn * cn * dn;
    if (std::abs(1.0 - gn) <= tol.cond)
        throw parameter_constraint_error("invariant_en: (abcd)^N = 1", "g");
    return (an + bn + cn + dn - an * bn * cn - bn * cn * dn - an * bn * dn - an * cn * dn) /
           (1.0 - gn);
}

// D_n of the hypergeometric representation.
inline cplx aw_prefactor(const aw_params& par, long n) {
    const root_of_unity& w = par.root;
    return ipow(par.a, -n) * qpoch_q(par.a * par.b, w, n) * qpoch_q(par.a * par.c, w, n) *
           qpoch_q(par.a * par.d, w, n) / qpoch_q(par.g() * w.q_pow(n - 1), w, n);
}

// P_n at x = t + 1/t through the terminating 4phi3 series. For n = N the
// indeterminate (q^{-N};q)_N / (q;q)_N factor is the analytic limit -1 and
// the series collapses to its k = 0 and k = N terms.
inline cplx eval_hypergeometric(const aw_params& par, long n, cplx t,
                                const tolerances& tol = {}) {
    par.validate(tol);
    const root_of_unity& w = par.root;
    const long nn = w.n();
    if (n < 0 || n > nn) throw range_error("eval_hypergeometric: degree out of range");
    if (t == cplx(0.0)) throw domain_error("eval_hypergeometric: t = 0");
    const cplx a = par.a, g = par.g();

    if (n == nn) {
        const cplx gn = ipow(g, nn);
        const cplx tail = (1.0 - gn) * (1.0 - ipow(a * t, nn)) * (1.0 - ipow(a / t, nn)) /
                          ((1.0 - ipow(a * par.b, nn)) * (1.0 - ipow(a * par.c, nn)) *
                           (1.0 - ipow(a * par.d, nn)));
        return aw_prefactor(par, nn) * (1.0 - tail);
    }

    const cplx gq = g * w.q_pow(n - 1);
    cplx sum = 1.0, term = 1.0;
    for (long k = 0; k < n; ++k) {
        term *= (1.0 - w.q_pow(k - n)) * (1.0 - gq * w.q_pow(k)) * (1.0 - a * t * w.q_pow(k)) *
                (1.0 - a / t * w.q_pow(k)) /
                ((1.0 - w.q_pow(k + 1)) * (1.0 - a * par.b * w.q_pow(k)) *
                 (1.0 - a * par.c * w.q_pow(k)) * (1.0 - a * par.d * w.q_pow(k)));
        term *= w.q();
        sum += term;
    }
    return aw_prefactor(par, n) * sum;
}

struct zero_set {
    cplx e_n;                 // combinatorial invariant
    cplx r;                   // chosen branch, minimal principal argument
    cplx r_pow_n;             // E_N/2 + sqrt(E_N^2/4 - 1), principal root
    std::vector<cplx> x;      // x_s = r q^s + r^{-1} q^{-s}, s = 0..N-1
    double identity_residual; // |four-factor ratio - 1|

    // convention: the node x_s corresponds to t = r q^s under x = t + 1/t;
    // the inverse map t_from_x picks the |t| >= 1 principal branch instead
    static constexpr const char* t_convention = "t(x_s) = r q^s";
};

inline zero_set zeros(const aw_params& par, const tolerances& tol = {}) {
    par.validate(tol);
    const root_of_unity& w = par.root;
    const long n = w.n();

    zero_set zs;
    zs.e_n = invariant_en(par, tol);
    if (std::abs(zs.e_n - 2.0) <= tol.cond || std::abs(zs.e_n + 2.0) <= tol.cond)
        throw degenerate_zero_error("zeros: E_N within margin of +-2, zeros collide");

    zs.r_pow_n = 0.5 * zs.e_n + std::sqrt(0.25 * zs.e_n * zs.e_n - 1.0);

    // N-th root of minimal principal argument, ties toward positive
    // imaginary part.
    const double mag = std::pow(std::abs(zs.r_pow_n), 1.0 / static_cast<double>(n));
    const double base_arg = std::arg(zs.r_pow_n);
    double best_arg = 0.0;
    bool have = false;
    for (long j = 0; j < n; ++j) {
        double arg = (base_arg + 2.0 * pi * static_cast<double>(j)) / static_cast<double>(n);
        arg = std::remainder(arg, 2.0 * pi);
        const bool better =
            !have || std::abs(arg) < std::abs(best_arg) - 1e-15 ||
            (std::abs(std::abs(arg) - std::abs(best_arg)) <= 1e-15 && arg > best_arg);
        if (better) {
            best_arg = arg;
            have = true;
        }
    }
    zs.r = std::polar(mag, best_arg);

    zs.x.resize(n);
    for (long s = 0; s < n; ++s) zs.x[s] = zs.r * w.q_pow(s) + w.q_pow(-s) / zs.r;

    cplx ratio = 1.0;
    for (const cplx& v : {par.a, par.b, par.c, par.d}) {
        const cplx vn = ipow(v, n);
        ratio *= (1.0 - vn * zs.r_pow_n) / (vn - zs.r_pow_n);
    }
    zs.identity_residual = std::abs(ratio - 1.0);
    return zs;
}

// P_N'(x_s) in closed form.
inline cplx pn_derivative(const aw_params& par, const zero_set& zs, long s,
                          const tolerances& tol = {}) {
    const root_of_unity& w = par.root;
    const cplx denom = zs.r * w.q_pow(s) - w.q_pow(-s) / zs.r;
    if (std::abs(denom) <= tol.cond)
        throw degenerate_zero_error("pn_derivative: r q^s - r^{-1} q^{-s} vanishes");
    return static_cast<double>(w.n()) * (zs.r_pow_n - 1.0 / zs.r_pow_n) / denom;
}

// The truncated series F(s) entering the series-route weight. The optional
// scale output reports the sum of term magnitudes (cancellation indicator).
inline cplx f_series(const aw_params& par, const zero_set& zs, long s,
                     double* scale_out = nullptr) {
    const root_of_unity& w = par.root;
    const cplx gq2 = par.g() * w.q_pow(-2);
    const cplx y1 = par.a * zs.r * w.q_pow(s);
    const cplx y2 = par.a / zs.r * w.q_pow(-s);
    cplx sum = 1.0, term = 1.0;
    double scale = 1.0;
    for (long k = 0; k + 1 < w.n(); ++k) {
        term *= (1.0 - gq2 * w.q_pow(k)) * (1.0 - y1 * w.q_pow(k)) * (1.0 - y2 * w.q_pow(k)) /
                ((1.0 - par.a * par.b * w.q_pow(k)) * (1.0 - par.a * par.c * w.q_pow(k)) *
                 (1.0 - par.a * par.d * w.q_pow(k)));
        term *= w.q();
        sum += term;
        scale += std::abs(term);
    }
    if (scale_out) *scale_out = scale;
    return sum;
}

inline cplx f_series(const aw_params& par, long s, const tolerances& tol = {}) {
    return f_series(par, zeros(par, tol), s);
}

enum class weight_source { series, product, family_closed_form, limit_formula };

struct weight_table {
    std::vector<cplx> w;         // normalized so sum = 1
    std::vector<cplx> x;         // grid points the weights live on
    std::vector<cplx> h;         // norms h_n of the associated polynomials
    cplx raw_sum = 1.0;          // sum before normalization
    double periodicity_residual = 0.0; // |w_{s+N}/w_s - 1| consistency (product route)
    bool normalized = true;
    weight_source source = weight_source::series;
    int index_origin = 0;
};

// Series route: w_s = h_{N-1} (r q^s - r^{-1} q^{-s}) / (N D_{N-1} (r^N - r^{-N}) F(s)).
inline weight_table weight_from_series(const aw_params& par, const tolerances& tol = {}) {
    const root_of_unity& w = par.root;
    const long n = w.n();
    const recurrence_coeffs rc = recurrence(par, tol);
    const zero_set zs = zeros(par, tol);
    const cplx dn1 = aw_prefactor(par, n - 1);
    const cplx rn_gap = zs.r_pow_n - 1.0 / zs.r_pow_n;

    weight_table wt;
    wt.source = weight_source::series;
    wt.x = zs.x;
    wt.h = rc.h;
    wt.w.resize(n);
    for (long s = 0; s < n; ++s) {
        const cplx node_gap = zs.r * w.q_pow(s) - w.q_pow(-s) / zs.r;
        wt.w[s] = rc.h[n - 1] * node_gap /
                  (static_cast<double>(n) * dn1 * rn_gap * f_series(par, zs, s));
    }
    wt.raw_sum = 0.0;
    for (const cplx& v : wt.w) wt.raw_sum += v;
    for (cplx& v : wt.w) v /= wt.raw_sum;
    return wt;
}

namespace detail {

// w_s / w_0 of the product form, valid for any integer s >= 0.
inline cplx product_weight_ratio(const aw_params& par, const zero_set& zs, long s) {
    const root_of_unity& w = par.root;
    const cplx r = zs.r;
    cplx num = 1.0, den = 1.0;
    for (const cplx& v : {par.a, par.b, par.c, par.d}) {
        num *= qpoch_q(v * r, w, s);
        den *= qpoch_q(w.q() * r / v, w, s);
    }
    cplx q_over_g_pow = 1.0;
    const cplx q_over_g = w.q() / par.g();
    for (long k = 0; k < s; ++k) q_over_g_pow *= q_over_g;
    return q_over_g_pow * (1.0 - r * r * w.q_pow(2 * s)) * num /
           ((1.0 - r * r) * den);
}

} // namespace detail

// Product route: the sigma recursion solved in closed form, with w_0 from
// the series-route value at s = 0.
inline weight_table weight_product(const aw_params& par, const tolerances& tol = {}) {
    const root_of_unity& w = par.root;
    const long n = w.n();
    const recurrence_coeffs rc = recurrence(par, tol);
    const zero_set zs = zeros(par, tol);
    const cplx a = par.a, b = par.b, c = par.c, d = par.d, g = par.g();

    const cplx f0 = f_series(par, zs, 0);
    const cplx w0 =
        ipow(a, n - 1) * (1.0 - ipow(b * c, n)) * (1.0 - ipow(c * d, n)) *
        (1.0 - ipow(b * d, n)) * (1.0 - g / w.q()) * (1.0 - g * w.q_pow(-2)) *
        (zs.r - 1.0 / zs.r) /
        (f0 * ipow(1.0 - ipow(g, n), 2) * (1.0 - b * c / w.q()) * (1.0 - c * d / w.q()) *
         (1.0 - b * d / w.q()) * (zs.r_pow_n - 1.0 / zs.r_pow_n));

    weight_table wt;
    wt.source = weight_source::product;
    wt.x = zs.x;
    wt.h = rc.h;
    wt.w.resize(n);
    for (long s = 0; s < n; ++s) wt.w[s] = w0 * detail::product_weight_ratio(par, zs, s);

    // sigma(N) = sigma(0) holds through the four-factor identity; record how
    // well it closes numerically.
    wt.periodicity_residual = std::abs(detail::product_weight_ratio(par, zs, n) - 1.0);

    wt.raw_sum = 0.0;
    for (const cplx& v : wt.w) wt.raw_sum += v;
    for (cplx& v : wt.w) v /= wt.raw_sum;
    return wt;
}

struct difference_operator {
    std::vector<cplx> a_coef;  // A_s, s = 0..N-1
    std::vector<cplx> c_coef;  // C_s
    std::vector<cplx> lambda;  // lambda_n = (q^{-n} - 1)(1 - g q^{n-1})
};

inline difference_operator make_difference_operator(const aw_params& par, const zero_set& zs) {
    const root_of_unity& w = par.root;
    const long n = w.n();
    const cplx r = zs.r, g = par.g();

    difference_operator op;
    op.a_coef.resize(n);
    op.c_coef.resize(n);
    op.lambda.resize(n);
    for (long s = 0; s < n; ++s) {
        cplx num_a = 1.0, num_c = 1.0;
        for (const cplx& v : {par.a, par.b, par.c, par.d}) {
            num_a *= (1.0 - r / v * w.q_pow(s));
            num_c *= (1.0 - v * r * w.q_pow(s));
        }
        op.a_coef[s] = g / w.q() * num_a /
                       ((1.0 - r * r * w.q_pow(2 * s - 1)) * (1.0 - r * r * w.q_pow(2 * s)));
        op.c_coef[s] = num_c /
                       ((1.0 - r * r * w.q_pow(2 * s)) * (1.0 - r * r * w.q_pow(2 * s + 1)));
    }
    for (long k = 0; k < n; ++k)
        op.lambda[k] = (w.q_pow(-k) - 1.0) * (1.0 - g * w.q_pow(k - 1));
    return op;
}

inline difference_operator make_difference_operator(const aw_params& par,
                                                    const tolerances& tol = {}) {
    return make_difference_operator(par, zeros(par, tol));
}

struct identity_report {
    std::string id;
    std::vector<std::pair<std::string, cplx>> params; // symbol -> value, echoed in reports
    cplx lhs = 0.0, rhs = 0.0;
    double abs_residual = 0.0;
    double rel_residual = 0.0;
    double lhs_scale = 0.0; // sum of term magnitudes (conditioning indicator)
    bool pass = false;
};

// Residual bookkeeping shared by every identity checker. When
// the reference side is ~0 the relative residual is meaningless and the
// absolute one is compared against tol.abs scaled by the summation size.
inline identity_report make_identity_report(std::string id, cplx lhs, cplx rhs,
                                            double zero_scale, const tolerances& tol) {
    identity_report rep;
    rep.id = std::move(id);
    rep.lhs = lhs;
    rep.rhs = rhs;
    rep.lhs_scale = zero_scale;
    rep.abs_residual = std::abs(lhs - rhs);
    const double denom = std::max(std::abs(lhs), std::abs(rhs));
    rep.rel_residual = denom > 0.0 ? rep.abs_residual / denom : 0.0;
    if (std::abs(rhs) < tol.abs)
        rep.pass = rep.abs_residual <= tol.abs * std::max(1.0, zero_scale);
    else
        rep.pass = rep.rel_residual <= tol.rel;
    return rep;
}

// The weight-normalization sum against its closed form.
inline identity_report verify_normalization_identity(const aw_params& par, const tolerances& tol = {}) {
    const root_of_unity& w = par.root;
    const long n = w.n();
    const zero_set zs = zeros(par, tol);
    const cplx g = par.g();

    cplx lhs = 0.0;
    double lhs_scale = 0.0;
    for (long s = 0; s < n; ++s) {
        const cplx term = (1.0 - zs.r * zs.r) * detail::product_weight_ratio(par, zs, s);
        lhs += term;
        lhs_scale += std::abs(term);
    }

    const cplx f0 = f_series(par, zs, 0);
    const cplx f = qpoch_q(par.a * par.b, w, n - 1) * qpoch_q(par.a * par.c, w, n - 1) *
                   qpoch_q(par.a * par.d, w, n - 1) * ipow(par.a, 1 - n) * f0;
    cplx pair_prod = 1.0;
    for (const cplx& v : {par.a * par.b, par.a * par.c, par.a * par.d, par.b * par.c,
                          par.c * par.d, par.b * par.d})
        pair_prod *= qpoch_q(v, w, n - 1);
    const cplx rhs = ipow(zs.r, 1 - n) * (1.0 - zs.r_pow_n * zs.r_pow_n) *
                     ipow(1.0 - ipow(g, n), 2) * f /
                     (pair_prod * (1.0 - g / w.q()) * (1.0 - g * w.q_pow(-2)));

    identity_report rep = make_identity_report("weight-normalization", lhs, rhs, lhs_scale, tol);
    rep.params = {{"a", par.a}, {"b", par.b}, {"c", par.c}, {"d", par.d},
                  {"M", cplx(double(w.m()))}, {"N", cplx(double(n))}};
    return rep;
}

struct orthogonality_report {
    double max_offdiag = 0.0;          // |G_nm| / sqrt(|h_n h_m|), n != m
    double max_diag_rel_err = 0.0;     // max |G_nn - h_n| / |h_n|
    std::vector<double> diag_rel_err;
    double dual_max_offdiag = 0.0;     // dual relation, s != s'
    double dual_max_diag_err = 0.0;
    // residuals scaled by the summed term magnitudes instead of |h|; for
    // positive measures they coincide with the above, for complex ones
    // they measure how sharply the signed sum cancels
    double max_offdiag_mass = 0.0;
    double max_diag_err_mass = 0.0;
    double dual_max_offdiag_mass = 0.0;
    double dual_max_diag_err_mass = 0.0;
    double max_row_condition = 1.0;    // max_n sum_s |w_s||P_n|^2 / |h_n|
    bool pass(const tolerances& tol = {}) const {
        return max_offdiag <= tol.rel && max_diag_rel_err <= tol.rel &&
               dual_max_offdiag <= tol.rel && dual_max_diag_err <= tol.rel;
    }
    bool pass_mass_scaled(const tolerances& tol = {}) const {
        return max_offdiag_mass <= tol.rel && max_diag_err_mass <= tol.rel &&
               dual_max_offdiag_mass <= tol.rel && dual_max_diag_err_mass <= tol.rel;
    }
};

// Gram-matrix check for an arbitrary discrete system: nodes x, weights w,
// monic recurrence (b, u), norms h, degrees 0..num_degrees-1. The dual
// relation is checked when the system is square (num_degrees == #nodes).
// Internals run in extended precision so the verdict reflects the data,
// not the checker's own roundoff.
inline orthogonality_report gram_check(const std::vector<cplx>& x, const std::vector<cplx>& wts,
                                       const std::vector<cplx>& b, const std::vector<cplx>& u,
                                       const std::vector<cplx>& h, long num_degrees) {
    using cplxl = std::complex<long double>;
    const long npts = static_cast<long>(x.size());
    std::vector<std::vector<cplxl>> pv(num_degrees, std::vector<cplxl>(npts));
    for (long s = 0; s < npts; ++s) {
        cplxl prev = 0.0L, cur = 1.0L;
        const cplxl xs(x[s]);
        for (long k = 0; k < num_degrees; ++k) {
            pv[k][s] = cur;
            if (k + 1 < num_degrees) {
                cplxl next = (xs - cplxl(b[k])) * cur - (k > 0 ? cplxl(u[k]) : cplxl(0.0L)) * prev;
                prev = std::exchange(cur, next);
            }
        }
    }

    // Row scales: |h_n| (falling back to the row mass for degenerate
    // truncation rows with h_n = 0), and the row mass itself.
    std::vector<long double> scale(num_degrees), mass(num_degrees);
    orthogonality_report rep;
    for (long k = 0; k < num_degrees; ++k) {
        long double row = 0.0L;
        for (long s = 0; s < npts; ++s) row += std::abs(cplxl(wts[s])) * std::norm(pv[k][s]);
        mass[k] = std::max(row, 1e-300L);
        scale[k] = std::abs(h[k]) > 1e-250 ? static_cast<long double>(std::abs(h[k])) : mass[k];
        rep.max_row_condition =
            std::max(rep.max_row_condition, static_cast<double>(mass[k] / scale[k]));
    }

    rep.diag_rel_err.resize(num_degrees);
    for (long nn = 0; nn < num_degrees; ++nn) {
        for (long mm = nn; mm < num_degrees; ++mm) {
            cplxl gram = 0.0L;
            for (long s = 0; s < npts; ++s) gram += cplxl(wts[s]) * pv[nn][s] * pv[mm][s];
            if (nn == mm) {
                const long double err = std::abs(gram - cplxl(h[nn]));
                rep.diag_rel_err[nn] = static_cast<double>(err / scale[nn]);
                rep.max_diag_rel_err = std::max(rep.max_diag_rel_err, rep.diag_rel_err[nn]);
                rep.max_diag_err_mass =
                    std::max(rep.max_diag_err_mass, static_cast<double>(err / mass[nn]));
            } else {
                const long double g = std::abs(gram);
                rep.max_offdiag = std::max(
                    rep.max_offdiag, static_cast<double>(g / std::sqrt(scale[nn] * scale[mm])));
                rep.max_offdiag_mass = std::max(
                    rep.max_offdiag_mass, static_cast<double>(g / std::sqrt(mass[nn] * mass[mm])));
            }
        }
    }

    if (num_degrees == npts) {
        std::vector<long double> dual_mass(npts, 0.0L);
        for (long s = 0; s < npts; ++s)
            for (long k = 0; k < num_degrees; ++k)
                dual_mass[s] += std::norm(pv[k][s]) / std::abs(cplxl(h[k]));
        for (long s = 0; s < npts; ++s) {
            for (long t = s; t < npts; ++t) {
                cplxl dual = 0.0L;
                for (long k = 0; k < num_degrees; ++k)
                    dual += pv[k][s] * pv[k][t] / cplxl(h[k]);
                if (s == t) {
                    const long double err = std::abs(dual - 1.0L / cplxl(wts[s]));
                    rep.dual_max_diag_err = std::max(
                        rep.dual_max_diag_err, static_cast<double>(err * std::abs(wts[s])));
                    rep.dual_max_diag_err_mass = std::max(
                        rep.dual_max_diag_err_mass, static_cast<double>(err / dual_mass[s]));
                } else {
                    const long double g = std::abs(dual);
                    rep.dual_max_offdiag = std::max(
                        rep.dual_max_offdiag,
                        static_cast<double>(
                            g * std::sqrt(std::abs(cplxl(wts[s])) * std::abs(cplxl(wts[t])))));
                    rep.dual_max_offdiag_mass =
                        std::max(rep.dual_max_offdiag_mass,
                                 static_cast<double>(g / std::sqrt(dual_mass[s] * dual_mass[t])));
                }
            }
        }
    }
    return rep;
}

// Full pipeline: recurrence + zeros + product-route weights + N x N Gram
// and dual checks.
inline orthogonality_report verify_orthogonality(const aw_params& par,
                                                 const tolerances& tol = {}) {
    const recurrence_coeffs rc = recurrence(par, tol);
    const weight_table wt = weight_product(par, tol);
    return gram_check(wt.x, wt.w, rc.b, rc.u, rc.h, par.root.n());
}

struct hermitian_check_report {
    bool pass = false;
    double min_product_real = 0.0;  // min over s of Re(A_s C_{s-1} / kappa^2)
    double max_imag_ratio = 0.0;    // worst relative imaginary part over all checks
};

// Hermitizability probe for the associated-AWP parameter region: N even,
// a = q^alpha, b = -q^beta, c = -q^gamma, d = q^delta with the open-box
// restrictions. The difference equation carries a constant gauge factor
// kappa = e^{i pi (alpha+beta+gamma+delta-1)/N} (the phase of lambda_n);
// after dividing it out, Hermiticity means A_s C_{s-1} / kappa^2 > 0 and
// (A_s + C_s) / kappa, lambda_n / kappa real, over a full period.
inline hermitian_check_report hermitian_region_check(double alpha, double beta, double gamma,
                                                     double delta, long n_even,
                                                     const tolerances& tol = {}) {
    if (n_even < 4 || n_even % 2 != 0)
        throw constraint_error("hermitian_region_check: N must be even, N >= 4");
    for (double v : {alpha, beta, gamma, delta})
        if (v == 0.0 || std::abs(v) >= 0.5)
            throw constraint_error("hermitian_region_check: parameters must be nonzero and small");
    if (!(alpha < 0.0))
        throw constraint_error("hermitian_region_check: need alpha < 0");
    if (!(alpha < beta && beta < -alpha))
        throw constraint_error("hermitian_region_check: need alpha < beta < -alpha");
    if (!(gamma > -alpha))
        throw constraint_error("hermitian_region_check: need gamma > -alpha");
    if (!(delta > -alpha))
        throw constraint_error("hermitian_region_check: need delta > -alpha");

    const root_of_unity w(1, n_even);
    const double step = 2.0 * pi / static_cast<double>(n_even);
    aw_params par{std::polar(1.0, step * alpha), -std::polar(1.0, step * beta),
                  -std::polar(1.0, step * gamma), std::polar(1.0, step * delta), w};
    const difference_operator op = make_difference_operator(par, tol);
    const double sigma = alpha + beta + gamma + delta;
    const cplx kappa = std::polar(1.0, pi * (sigma - 1.0) / static_cast<double>(n_even));

    hermitian_check_report rep;
    rep.min_product_real = std::numeric_limits<double>::infinity();
    auto note_imag = [&rep](cplx z) {
        rep.max_imag_ratio = std::max(rep.max_imag_ratio, std::abs(z.imag()) / std::abs(z));
    };
    for (long s = 0; s < n_even; ++s) {
        const cplx prod =
            op.a_coef[s] * op.c_coef[(s + n_even - 1) % n_even] / (kappa * kappa);
        rep.min_product_real = std::min(rep.min_product_real, prod.real());
        note_imag(prod);
        note_imag((op.a_coef[s] + op.c_coef[s]) / kappa);
    }
    for (long k = 1; k < n_even; ++k) note_imag(op.lambda[k] / kappa);
    rep.pass = rep.min_product_real > 0.0 && rep.max_imag_ratio <= 1e-8;
    return rep;
}

} // namespace qunity
