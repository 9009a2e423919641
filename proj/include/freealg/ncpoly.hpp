#pragma once

#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "freealg/scalar.hpp"
#include "freealg/word.hpp"

namespace freealg {

constexpr long kNegInfinity = std::numeric_limits<long>::min();
constexpr long kPosInfinity = std::numeric_limits<long>::max();

/// Noncommutative polynomial over Q or GF(p): a finite scalar combination of
/// words.  Terms are kept in deglex order with no zero coefficients.
class NcPoly {
public:
    explicit NcPoly(unsigned long characteristic = 0) : char_(characteristic) {}

    static NcPoly zero(unsigned long characteristic = 0) {
        return NcPoly(characteristic);
    }
    static NcPoly constant(const Scalar& c);
    static NcPoly monomial(const Scalar& c, const Word& w);
    static NcPoly generator(unsigned g, unsigned long characteristic = 0);

    unsigned long characteristic() const { return char_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Word, Scalar, DegLexLess>& terms() const { return terms_; }

    /// Coefficient of w (zero scalar if absent).
    Scalar coeff(const Word& w) const;
    void set_coeff(const Word& w, const Scalar& c);
    void add_term(const Word& w, const Scalar& c);

    NcPoly operator-() const;
    NcPoly& operator+=(const NcPoly& o);
    NcPoly& operator-=(const NcPoly& o);
    NcPoly& operator*=(const NcPoly& o);
    NcPoly& operator*=(const Scalar& c);

    friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
    friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
    friend NcPoly operator*(NcPoly a, const NcPoly& b) { return a *= b; }
    friend NcPoly operator*(const Scalar& c, NcPoly a) { return a *= c; }
    friend NcPoly operator*(NcPoly a, const Scalar& c) { return a *= c; }

    bool operator==(const NcPoly& o) const;
    bool operator!=(const NcPoly& o) const { return !(*this == o); }

    /// Homogeneous part of the given degree.
    NcPoly component(std::size_t degree) const;

    /// Degree of the highest (resp. lowest) nonzero homogeneous component.
    /// nu_top(0) = kNegInfinity, nu_low(0) = kPosInfinity, matching the
    /// filtration conventions deg(0) = -inf and ord(0) = +inf.
    long nu_top() const;
    long nu_low() const;

    bool is_homogeneous() const;
    /// All degrees carrying a nonzero component, ascending.
    std::vector<std::size_t> support_degrees() const;

    /// Largest generator index + 1 over all terms.
    unsigned max_letter_bound() const;

    /// Leading term under deglex: highest degree, then lex-largest word.
    std::optional<std::pair<Word, Scalar>> leading_term() const;

    std::string str() const;

private:
    unsigned long char_;
    std::map<Word, Scalar, DegLexLess> terms_;

    void check_same_field(const NcPoly& o) const;
};

/// Commutator ab - ba.
NcPoly bracket(const NcPoly& a, const NcPoly& b);

}  // namespace freealg
