#include "doctest.h"

#include "qunity/big_q_jacobi.hpp"
#include "test_util.hpp"

using namespace qunity;

namespace {

cplx bqj_eval(const bqj_system& sys, long n, cplx x) {
    cplx prev = 0.0, cur = 1.0;
    for (long k = 0; k < n; ++k) {
        cplx next = (x - sys.b[k]) * cur - (k > 0 ? sys.u[k] : cplx(0.0)) * prev;
        prev = std::exchange(cur, next);
    }
    return cur;
}

} // namespace

TEST_CASE("big q-jacobi: truncation, zeros at the roots of unity, P_N = x^N - 1") {
    root_of_unity w(1, 6);
    bqj_params par{cplx(0.4, 0.2), cplx(0.3, 0.0), w};
    auto sys = bqj_all(par);
    CHECK(std::abs(sys.u[6]) == 0.0);
    for (long s = 1; s <= 6; ++s) {
        CHECK(std::abs(sys.x[s - 1] - w.q_pow(s)) == 0.0);
        CHECK(std::abs(bqj_eval(sys, 6, sys.x[s - 1])) < 1e-12);
    }
    for (const cplx& x : {cplx(0.3, -0.8), cplx(-1.2, 0.4), cplx(0.05, 0.0)})
        CHECK(rel_diff(bqj_eval(sys, 6, x), ipow(x, 6) - 1.0) < 1e-12);
}

TEST_CASE("big q-jacobi: normalized weights and the Gram check") {
    root_of_unity w(1, 6);
    bqj_params par{cplx(0.4, 0.2), cplx(0.3, 0.0), w};
    auto sys = bqj_all(par);
    CHECK(std::abs(sys.w.raw_sum - 1.0) <= 1e-10);
    CHECK(sys.w.index_origin == 1);

    auto rep = gram_check(sys.w.x, sys.w.w, sys.b, sys.u, sys.h, 6);
    CHECK(rep.max_offdiag <= 1e-9);
    CHECK(rep.max_diag_rel_err <= 1e-9);
    CHECK(rep.dual_max_offdiag <= 1e-9);
    CHECK(rep.dual_max_diag_err <= 1e-9);

    // another root with M > 1
    root_of_unity w2(5, 12);
    bqj_params par2{cplx(0.5, -0.3), cplx(-0.6, 0.25), w2};
    auto sys2 = bqj_all(par2);
    CHECK(std::abs(sys2.w.raw_sum - 1.0) <= 1e-10);
    auto rep2 = gram_check(sys2.w.x, sys2.w.w, sys2.b, sys2.u, sys2.h, 12);
    CHECK(rep2.max_offdiag <= 1e-9);
    CHECK(rep2.max_diag_rel_err <= 1e-9);
}

TEST_CASE("big q-jacobi: explicit 3phi2 series matches the recurrence") {
    // independent evaluation of P_n through the terminating series with
    // c = 1: D_n sum_k (q^{-n};q)_k (ab q^{n+1};q)_k (x;q)_k /
    // [(q;q)_k^2 (aq;q)_k] q^k
    root_of_unity w(3, 8);
    bqj_params par{cplx(0.55, 0.35), cplx(-0.45, 0.2), w};
    auto sys = bqj_all(par);
    auto series = [&](long n, cplx x) {
        const cplx abq = par.a * par.b * w.q_pow(n + 1);
        const cplx dn = qpoch_q(par.a * w.q(), w, n) * qpoch_q(w.q(), w, n) /
                        qpoch_q(abq, w, n);
        cplx sum = 1.0, term = 1.0;
        for (long k = 0; k < n; ++k) {
            term *= (1.0 - w.q_pow(k - n)) * (1.0 - abq * w.q_pow(k)) * (1.0 - x * w.q_pow(k)) /
                    ((1.0 - w.q_pow(k + 1)) * (1.0 - w.q_pow(k + 1)) *
                     (1.0 - par.a * w.q() * w.q_pow(k)));
            term *= w.q();
            sum += term;
        }
        return dn * sum;
    };
    std::mt19937_64 r2(17);
    std::uniform_real_distribution<double> ur(-1.1, 1.1);
    for (int t = 0; t < 6; ++t) {
        cplx x(ur(r2), ur(r2));
        for (long n = 0; n < 8; ++n)
            CHECK(rel_diff(series(n, x), bqj_eval(sys, n, x)) < 1e-10);
    }
}

TEST_CASE("big q-jacobi: Chu-Vandermonde closed form for P_{N-1}") {
    root_of_unity w(1, 8);
    bqj_params par{cplx(0.55, 0.35), cplx(-0.45, 0.2), w};
    auto sys = bqj_all(par);
    for (long s = 1; s <= 8; ++s)
        CHECK(rel_diff(bqj_eval(sys, 7, w.q_pow(s)), bqj_pnm1_closed(par, s)) < 1e-10);
}

TEST_CASE("big q-jacobi: constraint validation names the product") {
    root_of_unity w(1, 5);
    try {
        bqj_all(bqj_params{w.q_pow(2), cplx(0.3), w});
        FAIL("expected parameter_constraint_error");
    } catch (const parameter_constraint_error& e) {
        CHECK(e.product() == "a");
    }
    try {
        bqj_all(bqj_params{cplx(0.4), w.q_pow(1), w});
        FAIL("expected parameter_constraint_error");
    } catch (const parameter_constraint_error& e) {
        CHECK(e.product() == "b");
    }
    try {
        bqj_all(bqj_params{cplx(2.0), w.q_pow(3) / 2.0, w});
        FAIL("expected parameter_constraint_error");
    } catch (const parameter_constraint_error& e) {
        CHECK(e.product() == "ab");
    }
}

TEST_CASE("big q-jacobi limits: q-Meixner and big q-Laguerre") {
    root_of_unity w(1, 5);
    auto meixner = bqj_limit_weights(bqj_limit::q_meixner, cplx(0.5), w);
    CHECK(std::abs(meixner.raw_sum - 1.0) <= 1e-10);
    auto laguerre = bqj_limit_weights(bqj_limit::big_q_laguerre, cplx(2.0), w);
    CHECK(std::abs(laguerre.raw_sum - 1.0) <= 1e-10);

    // bigw approaches the q-Meixner weight as a grows, and the big
    // q-Laguerre one as b -> 0
    auto big_a = bqj_all(bqj_params{cplx(1e8, 0.0), cplx(0.5), w});
    for (long s = 0; s < 5; ++s) CHECK(std::abs(big_a.w.w[s] - meixner.w[s]) < 1e-4);
    auto small_b = bqj_all(bqj_params{cplx(2.0), cplx(1e-8, 0.0), w});
    for (long s = 0; s < 5; ++s) CHECK(std::abs(small_b.w.w[s] - laguerre.w[s]) < 1e-4);
}
