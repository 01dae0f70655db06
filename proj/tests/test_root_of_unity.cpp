#include "doctest.h"

#include <numeric>
#include <random>
#include <vector>

#include "qunity/root_of_unity.hpp"

using namespace qunity;

namespace {

// Independent Jacobi-symbol oracle: factor m, multiply Legendre symbols
// computed by brute-force residue enumeration.
int jacobi_brute(long long n, long long m) {
    int result = 1;
    for (long long f = 3; m > 1; f += 2) {
        while (m % f == 0) {
            m /= f;
            long long r = ((n % f) + f) % f;
            if (r == 0) return 0;
            bool residue = false;
            for (long long x = 1; x < f; ++x)
                if (x * x % f == r) { residue = true; break; }
            result *= residue ? 1 : -1;
        }
    }
    return result;
}

std::mt19937_64 rng(20240517);

cplx random_cplx(double lo = 0.1, double hi = 3.0) {
    std::uniform_real_distribution<double> logr(std::log(lo), std::log(hi));
    std::uniform_real_distribution<double> ang(0.0, 2.0 * pi);
    return std::polar(std::exp(logr(rng)), ang(rng));
}

} // namespace

TEST_CASE("primitive root construction") {
    root_of_unity w12 = make_root(1, 2);
    CHECK(std::abs(w12.q() - cplx(-1.0)) < 1e-15);

    root_of_unity w14 = make_root(1, 4);
    CHECK(std::abs(w14.q() - cplx(0.0, 1.0)) < 1e-15);

    CHECK_THROWS_AS(make_root(2, 4), coprimality_error);
    CHECK_THROWS_AS(make_root(5, 5), range_error);
    CHECK_THROWS_AS(make_root(7, 5), range_error);
    CHECK_THROWS_AS(make_root(0, 5), range_error);
    CHECK_THROWS_AS(make_root(1, 1), range_error);
}

TEST_CASE("root invariants: q^N = 1, p^2 = q, p^N = (-1)^M") {
    for (auto [m, n] : std::vector<std::pair<long, long>>{
             {1, 2}, {1, 3}, {2, 3}, {1, 5}, {2, 5}, {3, 8}, {5, 12}, {7, 30}, {13, 50}}) {
        root_of_unity w(m, n);
        CHECK(std::abs(ipow(w.q(), n) - 1.0) <= 1e-15 * n);
        CHECK(std::abs(w.p() * w.p() - w.q()) < 1e-15);
        CHECK(std::abs(w.q_pow(n) - 1.0) == 0.0); // exact periodicity by construction
        CHECK(std::abs(w.p_pow(n) - cplx(m % 2 == 0 ? 1.0 : -1.0)) <= 1e-15 * n);
        CHECK(std::abs(w.half_p_pow(2) - w.p()) == 0.0);
    }
}

TEST_CASE("q-Pochhammer basics") {
    root_of_unity w(2, 7);
    cplx a = random_cplx();
    CHECK(qpoch(a, w.q(), 0) == cplx(1.0));

    // (q;q)_{N-1} = N
    for (auto [m, n] : std::vector<std::pair<long, long>>{{1, 3}, {1, 5}, {3, 7}, {5, 8}}) {
        root_of_unity ww(m, n);
        CHECK(std::abs(qpoch_q(ww.q(), ww, n - 1) - cplx(double(n))) < 1e-12 * n);
    }

    // (a;q)_N = 1 - a^N
    for (int trial = 0; trial < 20; ++trial) {
        root_of_unity ww(3, 11);
        cplx aa = random_cplx();
        cplx lhs = qpoch_q(aa, ww, 11);
        cplx rhs = 1.0 - ipow(aa, 11);
        CHECK(rel_diff(lhs, rhs) < 1e-12);
    }
}

TEST_CASE("q-Pochhammer periodicity and length N-1 formula") {
    root_of_unity w(2, 9);
    for (int trial = 0; trial < 10; ++trial) {
        cplx a = random_cplx();
        // (a;q)_{n+N} = (a;q)_n (a;q)_N for all n <= N
        for (long nn = 0; nn <= 9; ++nn) {
            cplx lhs = qpoch_q(a, w, nn + 9);
            cplx rhs = qpoch_q(a, w, nn) * qpoch_q(a, w, 9);
            CHECK(rel_diff(lhs, rhs) < 1e-12);
        }
        // (a;q)_{N-1} = (1 - a^N) / (1 - a q^{-1})
        cplx lhs = qpoch_q(a, w, 8);
        cplx rhs = (1.0 - ipow(a, 9)) / (1.0 - a * w.q_pow(-1));
        CHECK(rel_diff(lhs, rhs) < 1e-12);
    }
}

TEST_CASE("jacobi symbol examples and oracle sweep") {
    CHECK(jacobi_symbol(5, 1) == 1);
    CHECK(jacobi_symbol(123456, 1) == 1);
    CHECK(jacobi_symbol(2, 3) == -1);
    CHECK(jacobi_symbol(3, 9) == 0);
    CHECK_THROWS_AS(jacobi_symbol(3, 8), domain_error);
    CHECK_THROWS_AS(jacobi_symbol(3, 0), domain_error);

    for (long long m = 1; m <= 199; m += 2)
        for (long long n = 1; n <= 200; ++n)
            CHECK(jacobi_symbol(n, m) == jacobi_brute(n, m));
}

TEST_CASE("jacobi symbol is completely multiplicative") {
    for (long long m = 1; m <= 99; m += 2) {
        for (long long x = 1; x <= 50; ++x)
            for (long long y = 1; y <= 50; ++y)
                CHECK(jacobi_symbol(x, m) * jacobi_symbol(y, m) == jacobi_symbol(x * y, m));
        for (long long x = 1; x <= 50; x += 2)
            for (long long y = 1; y <= 49; y += 2)
                if (std::gcd(x * y, 2LL) == 1)
                    CHECK(jacobi_symbol(5, x) * jacobi_symbol(5, y) == jacobi_symbol(5, x * y));
    }
}
