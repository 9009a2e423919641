#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace freealg {

/// Thrown when scalars (or polynomials) over different fields meet in one
/// expression.
struct FieldMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Thrown when a characteristic-zero-only operation (anything Lie) is fed
/// coefficients over GF(p).
struct CharacteristicError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

bool is_prime(unsigned long n);

/// Exact element of Q or GF(p).  Every scalar carries its characteristic;
/// arithmetic between scalars of different characteristic throws.
///
/// Rationals are GMP mpq_class (always canonicalized, denominators in lowest
/// terms); residues mod p are kept reduced to [0, p).
class Scalar {
public:
    Scalar() : char_(0), q_(0) {}

    static Scalar rational(long num, long den = 1);
    static Scalar rational(const mpq_class& v);
    static Scalar mod_p(long v, unsigned long p);
    static Scalar zero(unsigned long characteristic);
    static Scalar one(unsigned long characteristic);
    /// The integer n in the given field (n mod p, or n/1).
    static Scalar integer(long n, unsigned long characteristic);

    unsigned long characteristic() const { return char_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar inverse() const;  // throws std::domain_error on zero

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// "3/4", "-2", or the residue "3" over GF(p).
    std::string str() const;

    const mpq_class& rat() const;      // characteristic 0 only
    unsigned long residue() const;     // characteristic p only

private:
    unsigned long char_;  // 0 or a prime p
    mpq_class q_;         // payload when char_ == 0
    unsigned long r_ = 0; // payload when char_ > 0

    void check_same_field(const Scalar& o) const;
};

}  // namespace freealg
