#pragma once

#include <utility>
#include <vector>

#include "freealg/freelie.hpp"
#include "freealg/ncpoly.hpp"
#include "freealg/series.hpp"

namespace freealg {

/// Keep exactly the terms whose letters all lie in the target window.
NcPoly project(const NcPoly& p, const std::vector<unsigned>& target);
WindowSeries project(const WindowSeries& s, const std::vector<unsigned>& target);

/// A family of window/element pairs is compatible when projecting any
/// member onto a smaller member's window reproduces that member, and each
/// element only uses letters of its own window.
bool check_compatible(
    const std::vector<std::pair<std::vector<unsigned>, NcPoly>>& family);

/// A finite-window graded model: elements of the algebra under study, each
/// tagged by the degree of the layer it speaks for.  The tag is the order
/// (lowest nonzero degree); inhomogeneous elements represent their class
/// modulo higher layers.
struct GradedPresentation {
    std::vector<unsigned> window;  // sorted distinct generator indices
    long cap = 0;

    std::vector<std::pair<NcPoly, long>> elements;

    void add(const NcPoly& p) { elements.emplace_back(p, p.nu_low()); }
    void add(const NcPoly& p, long tag) { elements.emplace_back(p, tag); }
};

/// Every word of degree 1..cap over the window, as a presentation.
GradedPresentation full_assoc_presentation(const std::vector<unsigned>& window,
                                           long cap);
/// The standard bracketing basis in each degree 1..cap, as a presentation.
GradedPresentation full_lie_presentation(const std::vector<unsigned>& window,
                                         long cap);

/// Do products of the given elements span every degree 1..cap over the
/// window?  Elements must have positive order.
bool monomial_span_check(const std::vector<NcPoly>& gens,
                         const std::vector<unsigned>& window, long cap);

/// Free generating set of the window algebra through degree cap: per degree,
/// a basis of the complement of the span of all products of two or more
/// presentation elements.  Requires the presentation to span (checked).
std::vector<NcPoly> assoc_free_generators(const GradedPresentation& pres);

/// Classes of the elements modulo products of positive-order elements are
/// nonzero and linearly independent.
bool no_right_dependence_check(const std::vector<NcPoly>& gens);

/// Free generating set of the presented Lie algebra through degree cap: per
/// degree n, a basis of the new layer modulo the subalgebra generated below
/// n.  Requires characteristic zero, homogeneous Lie elements, and bracket
/// closure within the cap (checked).
std::vector<LiePoly> lie_free_generators(const GradedPresentation& pres);

struct RelFreeResult {
    bool ok = false;
    bool all_homogeneous = true;
};

/// Do the classes of the given elements form a basis of the presented Lie
/// algebra modulo its derived subalgebra, through the cap?
RelFreeResult relatively_free_check(const std::vector<LiePoly>& gens,
                                    const GradedPresentation& ambient);

/// Endomorphism of the Lie algebra freely generated by `source`, determined
/// by source[i] |-> image[i].  Applying it to an element first writes the
/// element as a bracket polynomial in the source, then evaluates at the
/// images; degrees are preserved per generator.
class GradedMorphism {
public:
    GradedMorphism(std::vector<LiePoly> source, std::vector<LiePoly> images,
                   long cap);

    const std::vector<LiePoly>& source() const { return source_; }
    const std::vector<LiePoly>& images() const { return images_; }
    long cap() const { return cap_; }

    LiePoly apply(const LiePoly& u) const;

private:
    std::vector<LiePoly> source_;
    std::vector<LiePoly> images_;
    long cap_ = 0;
};

struct AutomorphismResult {
    GradedMorphism forward;
    GradedMorphism inverse;
    bool verified = false;
};

/// Degree-preserving automorphism sending from[i] to to[i], with its inverse
/// solved degree-by-degree and verified two-sided on the generators.  The
/// images must be relatively free in the algebra generated by `from`
/// (checked through the cap).
AutomorphismResult build_graded_automorphism(const std::vector<LiePoly>& from,
                                             const std::vector<LiePoly>& to,
                                             long cap);

struct MembershipResult {
    bool member = false;
    LieTemplate expression;
    long length_cap = 0;
};

/// Is the target a bracket polynomial in the generators using at most
/// length_cap generator occurrences per monomial?  Exact within that bound;
/// a negative answer only refutes up to the recorded cap.
MembershipResult bounded_membership(const LiePoly& target,
                                    const std::vector<LiePoly>& gens,
                                    long length_cap);

/// Smallest top degree over all nonzero values of bracket polynomials in
/// the generators with monomial length <= length_cap.  kPosInfinity when
/// every such value is zero.
long min_topdegree_of_nonzero_images(const std::vector<LiePoly>& gens,
                                     long length_cap);

}  // namespace freealg
