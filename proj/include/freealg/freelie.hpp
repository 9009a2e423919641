#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "freealg/ncpoly.hpp"

namespace freealg {

/// Left-nested bracketing extended linearly: a word x_{i1}...x_{in} maps to
/// [...[[x_{i1},x_{i2}],x_{i3}],...,x_{in}], letters map to themselves, the
/// empty word to zero.
NcPoly dynkin_theta(const NcPoly& p);

/// A polynomial is a Lie element iff its degree-0 part vanishes and every
/// homogeneous component p_n of degree n >= 1 satisfies theta(p_n) = n p_n.
bool is_lie_element(const NcPoly& p);

enum class LieCert { from_brackets, criterion };

/// Lie element of the free associative algebra, characteristic 0 only.
/// Every instance passes is_lie_element; the certificate records whether it
/// was built from brackets of generators or recognized by the criterion.
class LiePoly {
public:
    static LiePoly zero();
    static LiePoly generator(unsigned g);
    /// Recognizes an arbitrary polynomial; throws if the criterion fails.
    static LiePoly check(const NcPoly& p);

    const NcPoly& carrier() const { return carrier_; }
    LieCert certificate() const { return cert_; }
    bool is_zero() const { return carrier_.is_zero(); }
    long degree() const { return carrier_.nu_top(); }

    LiePoly operator+(const LiePoly& o) const;
    LiePoly operator-(const LiePoly& o) const;
    LiePoly operator-() const;
    friend LiePoly operator*(const Scalar& c, const LiePoly& p);
    friend LiePoly bracket(const LiePoly& a, const LiePoly& b);
    bool operator==(const LiePoly& o) const { return carrier_ == o.carrier_; }

private:
    LiePoly(NcPoly carrier, LieCert cert)
        : carrier_(std::move(carrier)), cert_(cert) {}
    NcPoly carrier_;
    LieCert cert_;
};

/// True iff the word is strictly smaller than all of its proper suffixes.
bool is_lyndon(const std::vector<unsigned>& w);

/// All Lyndon words of the given length over the listed letters, in
/// lexicographic order.
std::vector<std::vector<unsigned>> lyndon_words(
    const std::vector<unsigned>& alphabet, std::size_t length);

/// Standard bracketing: split at the lexicographically smallest proper
/// suffix and recurse.  Letters are generator indices.
NcPoly lyndon_bracketing(const std::vector<unsigned>& w);

/// Standard-bracketing images of the Lyndon words of length d over the
/// window's generators: a basis of the degree-d piece of the free Lie
/// algebra on them.
std::vector<LiePoly> lyndon_basis(const std::vector<unsigned>& window,
                                  std::size_t d);

/// Bracket monomial over abstract slots b1..bn: a leaf names a slot, an
/// inner node brackets its children.
class LieMonomial {
public:
    static LieMonomial leaf(unsigned slot);
    static LieMonomial node(const LieMonomial& l, const LieMonomial& r);

    bool is_leaf() const { return !left_; }
    unsigned slot() const { return slot_; }
    const LieMonomial& left() const { return *left_; }
    const LieMonomial& right() const { return *right_; }

    std::size_t length() const;                           // slot occurrences
    std::vector<unsigned> multidegree(std::size_t arity) const;
    NcPoly eval(const std::vector<NcPoly>& args) const;
    std::string str() const;  // e.g. [b1,[b1,b2]]

private:
    LieMonomial() = default;
    unsigned slot_ = 0;
    std::shared_ptr<const LieMonomial> left_, right_;
};

/// Scalar-linear combination of bracket monomials in n slots.
class LieTemplate {
public:
    explicit LieTemplate(std::size_t arity = 0) : arity_(arity) {}
    void add(const Scalar& c, const LieMonomial& m);

    std::size_t arity() const { return arity_; }
    const std::vector<std::pair<Scalar, LieMonomial>>& monomials() const {
        return monomials_;
    }
    bool empty() const { return monomials_.empty(); }
    std::string str() const;

private:
    std::size_t arity_;
    std::vector<std::pair<Scalar, LieMonomial>> monomials_;
};

/// Substitute the arguments into the slots and expand all brackets.
NcPoly eval_template(const LieTemplate& f, const std::vector<NcPoly>& args);

}  // namespace freealg
