#pragma once

#include <stdexcept>
#include <string>

namespace qunity {

// Base class for everything this library throws on invalid input or on
// parameter configurations the theory excludes.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// gcd(M, N) != 1 in a root-of-unity request.
class coprimality_error : public error {
public:
    using error::error;
};

// Integer argument outside its allowed range (e.g. M >= N).
class range_error : public error {
public:
    using error::error;
};

// Argument outside the mathematical domain (e.g. even modulus for the
// Jacobi symbol).
class domain_error : public error {
public:
    using error::error;
};

// One of the products g, ab, ac, ad, bc, bd, cd landed on (or within the
// conditioning margin of) a power of q. Carries the offending product name.
class parameter_constraint_error : public error {
public:
    parameter_constraint_error(const std::string& what, std::string product)
        : error(what), product_(std::move(product)) {}
    const std::string& product() const noexcept { return product_; }

private:
    std::string product_;
};

// a = 0: the recurrence needs a^{-1}.
class singular_param_error : public error {
public:
    using error::error;
};

// E_N within the margin of +-2: zeros of P_N collide.
class degenerate_zero_error : public error {
public:
    using error::error;
};

// A denominator of a closed-form expression vanished.
class singular_denominator_error : public error {
public:
    using error::error;
};

// A_s C_{s-1} <= 0 where a Hermitian form was requested.
class non_hermitian_error : public error {
public:
    using error::error;
};

// Violation of an explicit real-parameter restriction.
class constraint_error : public error {
public:
    using error::error;
};

// Identity variant requires a particular parity of M (or N).
class parity_error : public error {
public:
    using error::error;
};

} // namespace qunity
