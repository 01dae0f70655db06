#pragma once

#include <numeric>
#include <string>

#include "qunity/common.hpp"
#include "qunity/errors.hpp"

namespace qunity {

// A primitive N-th root of unity q = e^{2*pi*i*M/N} together with its
// half-base p = e^{pi*i*M/N}, so p^2 = q and p^N = (-1)^M.
//
// Powers are always produced from the exact reduced angle, never by repeated
// multiplication, so q_pow(k) is exactly periodic in k.
class root_of_unity {
public:
    root_of_unity(long m, long n) : m_(m), n_(n) {
        if (n < 2 || m < 1)
            throw range_error("root_of_unity: need M >= 1 and N >= 2");
        if (m >= n)
            throw range_error("root_of_unity: need M < N");
        if (std::gcd(m, n) != 1)
            throw coprimality_error("root_of_unity: M and N must be co-prime");
    }

    long m() const noexcept { return m_; }
    long n() const noexcept { return n_; }

    cplx q() const { return q_pow(1); }
    cplx p() const { return p_pow(1); }

    // q^k = e^{2 pi i M k / N}
    cplx q_pow(long long k) const { return unit_power(m_ * k, n_); }
    // p^k = e^{pi i M k / N}
    cplx p_pow(long long k) const { return unit_power(m_ * k, 2LL * n_); }
    // (p^{1/2})^k = e^{pi i M k / (2N)}, principal quarter-angle convention
    cplx half_p_pow(long long k) const { return unit_power(m_ * k, 4LL * n_); }

private:
    long m_, n_;
};

inline root_of_unity make_root(long m, long n) { return root_of_unity(m, n); }

// Jacobi symbol (n / m) for odd positive m, via quadratic reciprocity.
// (n / 1) = 1 by convention.
inline int jacobi_symbol(long long n, long long m) {
    if (m <= 0 || m % 2 == 0)
        throw domain_error("jacobi_symbol: modulus must be odd and positive");
    n %= m;
    if (n < 0) n += m;
    int result = 1;
    while (n != 0) {
        while (n % 2 == 0) {
            n /= 2;
            long long r = m % 8;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(n, m);
        if (n % 4 == 3 && m % 4 == 3) result = -result;
        n %= m;
    }
    return m == 1 ? result : 0;
}

// q-shifted factorial (a; base)_n = prod_{k=0}^{n-1} (1 - a * base^k) for an
// arbitrary complex base. Left-to-right accumulation, no re-association.
inline cplx qpoch(cplx a, cplx base, long long n) {
    cplx value = 1.0;
    cplx bk = 1.0;
    for (long long k = 0; k < n; ++k) {
        value *= (1.0 - a * bk);
        bk *= base;
    }
    return value;
}

// (a; q)_n with exact powers of q.
inline cplx qpoch_q(cplx a, const root_of_unity& w, long long n) {
    cplx value = 1.0;
    for (long long k = 0; k < n; ++k) value *= (1.0 - a * w.q_pow(k));
    return value;
}

// (a; p)_n with exact powers of p.
inline cplx qpoch_p(cplx a, const root_of_unity& w, long long n) {
    cplx value = 1.0;
    for (long long k = 0; k < n; ++k) value *= (1.0 - a * w.p_pow(k));
    return value;
}

// (a; p^{1/2})_n with exact powers of p^{1/2}.
inline cplx qpoch_half_p(cplx a, const root_of_unity& w, long long n) {
    cplx value = 1.0;
    for (long long k = 0; k < n; ++k) value *= (1.0 - a * w.half_p_pow(k));
    return value;
}

} // namespace qunity
