#pragma once

#include <complex>
#include <cmath>
#include <cstdint>

namespace qunity {

using cplx = std::complex<double>;

inline constexpr double pi = 3.141592653589793238462643383279502884;

// Numerical tolerances used across the library.
//   rel  - relative tolerance for identity / orthogonality residuals
//   abs  - absolute tolerance used when the reference value is ~0
//   cond - margin for the parameter constraints (distance to forbidden q^k)
struct tolerances {
    double rel = 1e-9;
    double abs = 1e-12;
    double cond = 1e-8;
};

// e^{2*pi*i*k/order} from the exact reduced angle. Reducing k first keeps
// powers of roots of unity exactly periodic instead of drifting; quarter
// turns come out exactly +-1, +-i so cancellations like 1 + p^N = 0 close
// to zero rather than to O(eps).
inline cplx unit_power(long long k, long long order) {
    long long r = k % order;
    if (r < 0) r += order;
    if (r == 0) return {1.0, 0.0};
    if (2 * r == order) return {-1.0, 0.0};
    if (4 * r == order) return {0.0, 1.0};
    if (4 * r == 3 * order) return {0.0, -1.0};
    return std::polar(1.0, 2.0 * pi * static_cast<double>(r) / static_cast<double>(order));
}

inline double abs2(const cplx& z) {
    return z.real() * z.real() + z.imag() * z.imag();
}

// z^e by binary exponentiation, e may be negative.
inline cplx ipow(cplx z, long long e) {
    if (e < 0) return 1.0 / ipow(z, -e);
    cplx result = 1.0;
    while (e > 0) {
        if (e & 1) result *= z;
        z *= z;
        e >>= 1;
    }
    return result;
}

// Relative difference |x - y| / max(|x|, |y|, floor).
inline double rel_diff(const cplx& x, const cplx& y, double floor = 1e-300) {
    double scale = std::max({std::abs(x), std::abs(y), floor});
    return std::abs(x - y) / scale;
}

} // namespace qunity
