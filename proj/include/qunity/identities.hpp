#pragma once

#include <string>

#include "qunity/askey_wilson.hpp"

// Checkers for the root-of-unity summation and inversion formulas: every
// function evaluates both sides independently (direct sums and products on
// the left, closed forms on the right) and returns an identity_report.

namespace qunity {

enum class inversion_variant { odd1, odd2, even1, even2 };

inline identity_report check_inversion(cplx a, const root_of_unity& w, inversion_variant v,
                                       const tolerances& tol = {}) {
    const bool m_odd = w.m() % 2 != 0;
    const bool needs_odd = v == inversion_variant::odd1 || v == inversion_variant::odd2;
    if (needs_odd != m_odd)
        throw parity_error("check_inversion: variant parity does not match M");
    const long n = w.n();

    cplx lhs, rhs;
    const char* id;
    switch (v) {
    case inversion_variant::odd1:
        id = "odd1";
        lhs = qpoch_p(a, w, n);
        rhs = ipow(a, n) * w.p_pow(-n * (n + 1) / 2) * qpoch_p(-w.p() / a, w, n);
        break;
    case inversion_variant::odd2:
        id = "odd2";
        lhs = qpoch_p(a, w, n - 1);
        rhs = ipow(a, n - 1) * w.p_pow(1 - n * (n + 1) / 2) * qpoch_p(-w.p_pow(2) / a, w, n - 1);
        break;
    case inversion_variant::even1:
        id = "even1";
        lhs = qpoch_p(a, w, n);
        rhs = -ipow(a, n) * qpoch_p(w.p() / a, w, n);
        break;
    default:
        id = "even2";
        lhs = qpoch_p(a, w, n - 1);
        rhs = w.p() * ipow(a, n - 1) * qpoch_p(w.p_pow(2) / a, w, n - 1);
        break;
    }
    const double scale = std::pow(1.0 + std::abs(a), static_cast<double>(n));
    identity_report rep = make_identity_report(id, lhs, rhs, scale, tol);
    rep.params = {{"a", a}, {"M", cplx(double(w.m()))}, {"N", cplx(double(n))}};
    return rep;
}

// 1phi0(q^s; q, z) summed to N - s against (1 - z^N) / (z; q)_s.
inline identity_report check_q_binomial(long s, cplx z, const root_of_unity& w,
                                        const tolerances& tol = {}) {
    const long n = w.n();
    if (s < 1 || s > n - 1) throw range_error("check_q_binomial: need 1 <= s <= N-1");
    const cplx den = qpoch_q(z, w, s);
    if (std::abs(den) <= tol.abs)
        throw singular_denominator_error("check_q_binomial: (z;q)_s = 0");

    cplx lhs = 0.0, term = 1.0;
    double scale = 0.0;
    for (long k = 0; k <= n - s; ++k) {
        if (k > 0)
            term *= (1.0 - w.q_pow(s + k - 1)) / (1.0 - w.q_pow(k)) * z;
        lhs += term;
        scale += std::abs(term);
    }
    const cplx rhs = (1.0 - ipow(z, n)) / den;
    identity_report rep = make_identity_report("qbin", lhs, rhs, scale, tol);
    rep.params = {{"s", cplx(double(s))}, {"z", z}, {"M", cplx(double(w.m()))},
                  {"N", cplx(double(n))}};
    return rep;
}

// 2phi1(q^s, a; c; q, q) against the root-of-unity Chu-Vandermonde form.
inline identity_report check_chu_vandermonde(long s, cplx a, cplx c, const root_of_unity& w,
                                             const tolerances& tol = {}) {
    const long n = w.n();
    if (s < 1 || s > n - 1) throw range_error("check_chu_vandermonde: need 1 <= s <= N-1");
    const cplx cn = ipow(c, n);
    if (std::abs(1.0 - cn) <= tol.cond)
        throw parameter_constraint_error("check_chu_vandermonde: c^N = 1", "c");

    cplx lhs = 0.0, term = 1.0;
    double scale = 0.0;
    for (long k = 0; k < n; ++k) {
        if (k > 0)
            term *= (1.0 - w.q_pow(s + k - 1)) * (1.0 - a * w.q_pow(k - 1)) /
                    ((1.0 - w.q_pow(k)) * (1.0 - c * w.q_pow(k - 1))) * w.q();
        lhs += term;
        scale += std::abs(term);
    }
    const cplx num_s = qpoch_q(w.q() / c, w, s);
    const cplx den_s = qpoch_q(w.q() * a / c, w, s);
    if (std::abs(den_s) <= tol.abs)
        throw singular_denominator_error("check_chu_vandermonde: (qa/c;q)_s = 0");
    const cplx rhs = (ipow(a, n) - cn) / (1.0 - cn) * num_s / den_s;
    identity_report rep = make_identity_report("chu", lhs, rhs, scale, tol);
    rep.params = {{"s", cplx(double(s))}, {"a", a}, {"c", c}, {"M", cplx(double(w.m()))},
                  {"N", cplx(double(n))}};
    return rep;
}

// The s = 1 special case in its own printed form.
inline identity_report check_spchu(cplx a, cplx c, const root_of_unity& w,
                                   const tolerances& tol = {}) {
    const long n = w.n();
    const cplx cn = ipow(c, n);
    if (std::abs(1.0 - cn) <= tol.cond)
        throw parameter_constraint_error("check_spchu: c^N = 1", "c");
    cplx lhs = 0.0, term = 1.0;
    double scale = 0.0;
    for (long k = 0; k < n; ++k) {
        if (k > 0)
            term *= (1.0 - a * w.q_pow(k - 1)) / (1.0 - c * w.q_pow(k - 1)) * w.q();
        lhs += term;
        scale += std::abs(term);
    }
    const cplx cq = c * w.q_pow(-1);
    if (std::abs(a - cq) <= tol.abs)
        throw singular_denominator_error("check_spchu: a = c/q");
    const cplx rhs = (ipow(a, n) - cn) * (1.0 - cq) / ((1.0 - cn) * (a - cq));
    identity_report rep = make_identity_report("spchu", lhs, rhs, scale, tol);
    rep.params = {{"a", a}, {"c", c}, {"M", cplx(double(w.m()))}, {"N", cplx(double(n))}};
    return rep;
}

// Jackson's Pfaff-Saalschutz sum at q^N = 1.
inline identity_report check_pfaff_saalschutz(cplx a, cplx b, cplx c, const root_of_unity& w,
                                              const tolerances& tol = {}) {
    const long n = w.n();
    const cplx abc2 = a * b / c * w.q_pow(2);
    cplx lhs = 0.0, term = 1.0;
    double scale = 0.0;
    for (long k = 0; k < n; ++k) {
        if (k > 0) {
            const cplx den = (1.0 - c * w.q_pow(k - 1)) * (1.0 - abc2 * w.q_pow(k - 1));
            if (std::abs(den) <= tol.abs)
                throw singular_denominator_error("check_pfaff_saalschutz: series pole");
            term *= (1.0 - a * w.q_pow(k - 1)) * (1.0 - b * w.q_pow(k - 1)) / den * w.q();
        }
        lhs += term;
        scale += std::abs(term);
    }
    const cplx an = ipow(a, n), bn = ipow(b, n), cn = ipow(c, n);
    if (std::abs(1.0 - cn) <= tol.cond || std::abs(an * bn - cn) <= tol.cond)
        throw parameter_constraint_error("check_pfaff_saalschutz: c^N = 1 or (ab)^N = c^N", "c");
    const cplx rhs = (an - cn) * (bn - cn) * (w.q() - c) * (a * b * w.q() - c) /
                     ((1.0 - cn) * (an * bn - cn) * (w.q() * a - c) * (w.q() * b - c));
    identity_report rep = make_identity_report("saa", lhs, rhs, scale, tol);
    rep.params = {{"a", a}, {"b", b}, {"c", c}, {"M", cplx(double(w.m()))},
                  {"N", cplx(double(n))}};
    return rep;
}

// Dixon's q-summation at q^N = 1.
inline identity_report check_dixon(cplx a, cplx b, const root_of_unity& w,
                                   const tolerances& tol = {}) {
    const long n = w.n();
    const cplx a2qb = a * a * w.q() / b;
    cplx lhs = 0.0, term = 1.0;
    double scale = 0.0;
    for (long k = 0; k < n; ++k) {
        if (k > 0) {
            const cplx den = (1.0 + a * w.q_pow(k - 1)) * (1.0 - a2qb * w.q_pow(k - 1));
            if (std::abs(den) <= tol.abs)
                throw singular_denominator_error("check_dixon: series pole");
            term *= (1.0 + a * w.q_pow(k)) * (1.0 - b * w.q_pow(k - 1)) / den * (a / b);
        }
        lhs += term;
        scale += std::abs(term);
    }
    const cplx an = ipow(a, n), bn = ipow(b, n);
    if (std::abs(bn - an * an) <= tol.cond || std::abs(1.0 + a) <= tol.abs ||
        std::abs(b - a) <= tol.abs)
        throw singular_denominator_error("check_dixon: closed-form pole");
    const cplx rhs = (b - a * a) * (1.0 + an) * (bn - an) /
                     ((b - a) * (1.0 + a) * (bn - an * an));
    identity_report rep = make_identity_report("dixon", lhs, rhs, scale, tol);
    rep.params = {{"a", a}, {"b", b}, {"M", cplx(double(w.m()))}, {"N", cplx(double(n))}};
    return rep;
}

// The Singh quadratic-transformation special case (M odd).
inline identity_report check_singh(cplx a, cplx b, const root_of_unity& w,
                                   const tolerances& tol = {}) {
    if (w.m() % 2 == 0)
        throw parity_error("check_singh: M must be odd");
    const long n = w.n();
    const cplx ap = a / w.p();
    const cplx a2qb2 = a * a * w.q() / (b * b);
    const cplx maqb = -a * w.q() / b;
    const cplx map3b = -a * w.p_pow(3) / b;
    cplx lhs = 0.0, term = 1.0;
    double scale = 0.0;
    for (long k = 0; k < n; ++k) {
        if (k > 0) {
            const cplx den = (1.0 - a * a * w.q_pow(k - 1)) * (1.0 - maqb * w.q_pow(k - 1)) *
                             (1.0 - map3b * w.q_pow(k - 1));
            if (std::abs(den) <= tol.abs)
                throw singular_denominator_error("check_singh: series pole");
            term *= (1.0 - a * w.q_pow(k - 1)) * (1.0 - ap * w.q_pow(k - 1)) *
                    (1.0 - a2qb2 * w.q_pow(k - 1)) / den * w.q();
        }
        lhs += term;
        scale += std::abs(term);
    }
    const cplx den = qpoch_p(-a, w, n - 1) * qpoch_p(b / a, w, n - 1);
    if (std::abs(den) <= tol.abs)
        throw singular_denominator_error("check_singh: closed-form pole");
    const cplx rhs = qpoch_p(-w.p(), w, n - 1) * qpoch_p(b / w.p(), w, n - 1) / den;
    identity_report rep = make_identity_report("singh", lhs, rhs, scale, tol);
    rep.params = {{"a", a}, {"b", b}, {"M", cplx(double(w.m()))}, {"N", cplx(double(n))}};
    return rep;
}

enum class gauss_variant { gauss, gauss3, p12p, gs1, newgauss };

// Gauss sums against their closed forms: direct summation on the left,
// Jacobi-symbol expressions (or the equivalent q-shifted products) on the
// right. All variants live in base p and need M odd.
inline identity_report check_gauss_sum(const root_of_unity& w, gauss_variant v,
                                       const tolerances& tol = {}) {
    if (w.m() % 2 == 0)
        throw parity_error("check_gauss_sum: M must be odd");
    const long n = w.n(), m = w.m();

    cplx lhs = 0.0, rhs = 0.0;
    const char* id;
    double scale = static_cast<double>(2 * n);
    switch (v) {
    case gauss_variant::gauss:
        id = "gauss";
        for (long k = 0; k < n; ++k)
            lhs += (k % 2 == 0 ? 1.0 : -1.0) * w.p_pow(-k * k);
        rhs = qpoch_p(-w.p(), w, n - 1);
        break;
    case gauss_variant::gs1:
        id = "gs1";
        for (long k = 0; k < n; ++k)
            lhs += (k % 2 == 0 ? 1.0 : -1.0) * w.p_pow(-k * k);
        rhs = std::sqrt(static_cast<double>(n)) * unit_power(m * (n - 1), 8) *
              static_cast<double>(jacobi_symbol(n, m));
        break;
    case gauss_variant::gauss3:
        id = "gauss3";
        for (long k = 0; k < 2 * n; ++k)
            lhs += (k % 2 == 0 ? 1.0 : -1.0) * w.half_p_pow(-k * k);
        rhs = std::sqrt(static_cast<double>(2 * n)) * unit_power(m * (2 * n - 1), 8) *
              static_cast<double>(jacobi_symbol(2 * n, m));
        break;
    case gauss_variant::p12p:
        id = "p12p";
        lhs = qpoch_p(-w.half_p_pow(1), w, n);
        rhs = ((m * m - 1) / 8 % 2 == 0 ? 1.0 : -1.0) * std::sqrt(2.0) *
              unit_power(m * n, 8);
        break;
    default:
        id = "newgauss";
        for (long s = 0; s < n; ++s) lhs += w.half_p_pow(-s * s);
        rhs = 0.5 * (1.0 - unit_power(-m * n, 4)) +
              std::sqrt(static_cast<double>(n) / 2.0) * unit_power(-m, 8) *
                  static_cast<double>(jacobi_symbol(2 * n, m));
        break;
    }
    identity_report rep = make_identity_report(id, lhs, rhs, scale, tol);
    rep.params = {{"M", cplx(double(m))}, {"N", cplx(double(n))}};
    return rep;
}

} // namespace qunity
