#include "freealg/scalar.hpp"

namespace freealg {

bool is_prime(unsigned long n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (unsigned long d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

namespace {

unsigned long mod_reduce(long v, unsigned long p) {
    long m = v % static_cast<long>(p);
    if (m < 0) m += static_cast<long>(p);
    return static_cast<unsigned long>(m);
}

// Residues live below 2^31 so products fit in 64 bits.
unsigned long mod_mul(unsigned long a, unsigned long b, unsigned long p) {
    return static_cast<unsigned long>(
        (static_cast<unsigned long long>(a) * b) % p);
}

unsigned long mod_pow(unsigned long base, unsigned long exp, unsigned long p) {
    unsigned long acc = 1 % p;
    while (exp) {
        if (exp & 1) acc = mod_mul(acc, base, p);
        base = mod_mul(base, base, p);
        exp >>= 1;
    }
    return acc;
}

}  // namespace

Scalar Scalar::rational(long num, long den) {
    if (den == 0) throw std::domain_error("zero denominator");
    Scalar s;
    s.char_ = 0;
    s.q_ = mpq_class(num, den);
    s.q_.canonicalize();
    return s;
}

Scalar Scalar::rational(const mpq_class& v) {
    Scalar s;
    s.char_ = 0;
    s.q_ = v;
    s.q_.canonicalize();
    return s;
}

Scalar Scalar::mod_p(long v, unsigned long p) {
    if (!is_prime(p)) throw std::domain_error("modulus must be prime");
    if (p >= (1ul << 31)) throw std::domain_error("modulus too large");
    Scalar s;
    s.char_ = p;
    s.r_ = mod_reduce(v, p);
    return s;
}

Scalar Scalar::zero(unsigned long characteristic) {
    return integer(0, characteristic);
}

Scalar Scalar::one(unsigned long characteristic) {
    return integer(1, characteristic);
}

Scalar Scalar::integer(long n, unsigned long characteristic) {
    if (characteristic == 0) return rational(n);
    return mod_p(n, characteristic);
}

bool Scalar::is_zero() const {
    return char_ == 0 ? q_ == 0 : r_ == 0;
}

bool Scalar::is_one() const {
    return char_ == 0 ? q_ == 1 : r_ == 1 % char_;
}

void Scalar::check_same_field(const Scalar& o) const {
    if (char_ != o.char_)
        throw FieldMismatchError("scalars over different fields");
}

Scalar Scalar::operator-() const {
    Scalar s = *this;
    if (char_ == 0)
        s.q_ = -q_;
    else
        s.r_ = r_ == 0 ? 0 : char_ - r_;
    return s;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    Scalar s = *this;
    if (char_ == 0)
        s.q_ = 1 / q_;
    else
        s.r_ = mod_pow(r_, char_ - 2, char_);
    return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    check_same_field(o);
    if (char_ == 0)
        q_ += o.q_;
    else {
        r_ += o.r_;
        if (r_ >= char_) r_ -= char_;
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    check_same_field(o);
    if (char_ == 0)
        q_ -= o.q_;
    else {
        r_ += char_ - o.r_;
        if (r_ >= char_) r_ -= char_;
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    check_same_field(o);
    if (char_ == 0)
        q_ *= o.q_;
    else
        r_ = mod_mul(r_, o.r_, char_);
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    check_same_field(o);
    return *this *= o.inverse();
}

bool Scalar::operator==(const Scalar& o) const {
    if (char_ != o.char_) return false;
    return char_ == 0 ? q_ == o.q_ : r_ == o.r_;
}

std::string Scalar::str() const {
    if (char_ == 0) return q_.get_str();
    return std::to_string(r_);
}

const mpq_class& Scalar::rat() const {
    if (char_ != 0) throw CharacteristicError("rational payload requested over GF(p)");
    return q_;
}

unsigned long Scalar::residue() const {
    if (char_ == 0) throw FieldMismatchError("residue requested over Q");
    return r_;
}

}  // namespace freealg
