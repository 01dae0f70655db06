#include "doctest.h"

#include "qunity/alt_q_jacobi.hpp"
#include "qunity/identities.hpp"
#include "test_util.hpp"

using namespace qunity;
using test_util::stieltjes_recurrence;

namespace {

cplx aqj_eval(const aqj_system& sys, long n, cplx x) {
    cplx prev = 0.0, cur = 1.0;
    for (long k = 0; k < n; ++k) {
        cplx next = (x - sys.b[k]) * cur - (k > 0 ? sys.u[k] : cplx(0.0)) * prev;
        prev = std::exchange(cur, next);
    }
    return cur;
}

} // namespace

TEST_CASE("alt q-jacobi: truncation at N+1 and the closed form of P_{N+1}") {
    root_of_unity w(1, 8);
    aqj_params par{cplx(0.6, 0.2), cplx(-0.5, 0.3), w};
    auto sys = aqj_all(par);
    CHECK(std::abs(sys.u[9]) == 0.0);

    // P_{N+1}(x) = z^{-N-1}(z^2 - 1)(z^{2N} - 1), vanishing on the grid
    for (const cplx& x : {cplx(0.7, -0.4), cplx(-1.6, 0.3), cplx(2.4, 0.1)}) {
        cplx z = t_from_x(x);
        CHECK(rel_diff(aqj_eval(sys, 9, x), aqj_pnp1_closed(w, z)) < 1e-11);
    }
    for (long s = 0; s <= 8; ++s) {
        CHECK(std::abs(aqj_eval(sys, 9, sys.x[s])) < 1e-11);
        // derivative closed form against finite differences
        const double h = 1e-6;
        cplx fd = (aqj_eval(sys, 9, sys.x[s] + h) - aqj_eval(sys, 9, sys.x[s] - h)) / (2.0 * h);
        CHECK(rel_diff(fd, aqj_pnp1_derivative(w, s)) < 1e-5);
    }
}

TEST_CASE("alt q-jacobi: Jackson-summed P_N and the closed-form weight identity") {
    root_of_unity w(3, 8);
    aqj_params par{cplx(0.6, 0.2), cplx(-0.5, 0.3), w};
    auto sys = aqj_all(par);
    for (long s = 0; s <= 8; ++s) {
        CHECK(rel_diff(aqj_eval(sys, 8, sys.x[s]), aqj_pn_closed(par, s)) < 1e-9);
        // w_s = h_N / (P_N(x_s) P_{N+1}'(x_s)), normalized
        cplx ws = sys.h[8] / (aqj_pn_closed(par, s) * aqj_pnp1_derivative(w, s));
        CHECK(rel_diff(ws / sys.w.raw_sum, sys.w.w[s]) < 1e-9);
    }
}

TEST_CASE("alt q-jacobi: normalization, a<->b symmetry, Gram including degree N") {
    for (auto [m, n] : std::vector<std::pair<long, long>>{{1, 8}, {3, 7}}) {
        root_of_unity w(m, n);
        aqj_params par{cplx(0.6, 0.2), cplx(-0.5, 0.3), w};
        auto sys = aqj_all(par);
        CHECK(std::abs(sys.w.raw_sum - 1.0) <= 1e-10);
        CHECK(sys.w.w.size() == static_cast<std::size_t>(n + 1));

        auto swapped = aqj_all(aqj_params{par.b, par.a, w});
        for (long s = 0; s <= n; ++s) CHECK(rel_diff(sys.w.w[s], swapped.w.w[s]) < 1e-10);

        std::vector<cplx> xs(sys.x.begin(), sys.x.end());
        auto rep = gram_check(xs, sys.w.w, sys.b, sys.u, sys.h, n + 1);
        CHECK(rep.max_offdiag <= 1e-9);
        CHECK(rep.max_diag_rel_err <= 1e-9);
        CHECK(rep.dual_max_offdiag <= 1e-9);
        CHECK(rep.dual_max_diag_err <= 1e-9);
    }
}

TEST_CASE("alt q-jacobi: positivity for a = p^alpha, b = -p^beta in (0,1)^2") {
    root_of_unity w(1, 9);
    for (double alpha : {0.15, 0.5, 0.85})
        for (double beta : {0.2, 0.55, 0.9}) {
            const double step = pi / 9.0;
            aqj_params par{std::polar(1.0, step * alpha), -std::polar(1.0, step * beta), w};
            auto sys = aqj_all(par);
            for (long k = 1; k <= 9; ++k) {
                CHECK(sys.u[k].real() > 0.0);
                CHECK(std::abs(sys.u[k].imag()) < 1e-12);
            }
            for (const cplx& v : sys.w.w) CHECK(v.real() > 0.0);
        }

    // the ab = -p line (alpha + beta = 1) is excluded by the restriction
    const double step = pi / 9.0;
    try {
        aqj_all(aqj_params{std::polar(1.0, step * 0.4), -std::polar(1.0, step * 0.6), w});
        FAIL("expected parameter_constraint_error");
    } catch (const parameter_constraint_error& e) {
        CHECK(e.product() == "ab");
    }
    CHECK_THROWS_AS(aqj_all(aqj_params{cplx(0.5), cplx(0.4), root_of_unity(2, 5)}), parity_error);
}

TEST_CASE("alt q-jacobi limits: Gauss-sum weights") {
    // a, b -> 0: w_s = chi_s (p;p)_N / (2N) (-1)^s p^{-s^2}, normalized by gs1
    for (auto [m, n] : std::vector<std::pair<long, long>>{{1, 3}, {1, 8}, {3, 7}, {5, 12}}) {
        root_of_unity w(m, n);
        auto wt = aqj_limit_weights(aqj_limit::double_zero, w);
        CHECK(std::abs(wt.raw_sum - 1.0) <= 1e-10);
        auto hg = aqj_limit_weights(aqj_limit::half_gauss, w);
        CHECK(std::abs(hg.raw_sum - 1.0) <= 1e-10);
    }

    // gs1 spot value at (1, 3): both sides i sqrt(3)
    root_of_unity w3(1, 3);
    auto rep = check_gauss_sum(w3, gauss_variant::gs1);
    CHECK(std::abs(rep.lhs - cplx(0.0, std::sqrt(3.0))) < 1e-14);
    CHECK(std::abs(rep.rhs - cplx(0.0, std::sqrt(3.0))) < 1e-14);

    // continuity: tiny a, b reproduce the double-zero table
    root_of_unity w8(1, 8);
    auto limit_wt = aqj_limit_weights(aqj_limit::double_zero, w8);
    auto tiny = aqj_all(aqj_params{cplx(1e-6, 1e-7), cplx(-1e-6, 2e-7), w8});
    for (long s = 0; s <= 8; ++s) CHECK(std::abs(tiny.w.w[s] - limit_wt.w[s]) < 1e-4);

    // the half-gauss prefactor: (p;p)_N (-p^{1/2};p)_N / (2N) equals
    // (-p^{1/2};p)_N / (-p;p)_{N-1} and the Jacobi-symbol closed form
    for (auto [m, n] : std::vector<std::pair<long, long>>{{1, 5}, {3, 8}}) {
        root_of_unity w(m, n);
        cplx f1 = qpoch_p(w.p(), w, n) * qpoch_p(-w.half_p_pow(1), w, n) /
                  (2.0 * static_cast<double>(n));
        cplx f2 = qpoch_p(-w.half_p_pow(1), w, n) / qpoch_p(-w.p(), w, n - 1);
        cplx f3 = std::sqrt(2.0 / static_cast<double>(n)) * unit_power(w.m(), 8) *
                  static_cast<double>(jacobi_symbol(2 * n, w.m()));
        CHECK(rel_diff(f1, f2) < 1e-12);
        CHECK(rel_diff(f1, f3) < 1e-12);
    }
}

TEST_CASE("wilson q-legendre: weights, recurrence, and the moment oracle") {
    for (long n : {4L, 6L, 8L}) {
        root_of_unity w(1, n);
        auto sys = wilson_q_legendre(w);
        CHECK(sys.w[0] == 0.0);
        CHECK(sys.w[n] == 0.0);
        double total = 0.0;
        for (double v : sys.w) total += v;
        CHECK(std::abs(total - 1.0) < 1e-12);
        CHECK(sys.u[n - 1] == 0.0);

        // Stieltjes over the interior support reproduces u_1..u_{N-2}
        std::vector<cplx> x(sys.x.begin() + 1, sys.x.end() - 1);
        std::vector<cplx> wt(sys.w.begin() + 1, sys.w.end() - 1);
        auto oracle = stieltjes_recurrence(x, wt, static_cast<int>(n) - 1);
        for (long k = 1; k <= n - 2; ++k)
            CHECK(std::abs(oracle.u[k] - sys.u[k]) <= 1e-12 * std::abs(oracle.u[k]));
        for (long k = 0; k <= n - 2; ++k) CHECK(std::abs(oracle.b[k]) < 1e-13);
    }

    // odd M variant stays orthogonal too
    root_of_unity w83(3, 8);
    auto sys = wilson_q_legendre(w83);
    std::vector<cplx> x(sys.x.begin() + 1, sys.x.end() - 1);
    std::vector<cplx> wt(sys.w.begin() + 1, sys.w.end() - 1);
    std::vector<cplx> b(8, 0.0), u(sys.u.begin(), sys.u.end()), h(sys.h.begin(), sys.h.end());
    auto rep = gram_check(x, wt, b, u, h, 7);
    CHECK(rep.max_offdiag <= 1e-9);
    CHECK(rep.max_diag_rel_err <= 1e-9);
}
