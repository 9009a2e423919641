#pragma once

#include <optional>
#include <vector>

#include "freealg/freelie.hpp"

namespace freealg {

/// All slot-Lyndon bracket monomials whose multidegree (e_1,...,e_n) over
/// slot degrees d_i satisfies sum d_i e_i = target and sum e_i <= length_cap.
/// The evaluations at free arguments of these monomials are linearly
/// independent, so the template solve below has at most one solution per
/// layer.
std::vector<LieMonomial> enumerate_templates(const std::vector<long>& degrees,
                                             long target, long length_cap);

/// All slot-Lyndon bracket monomials with between 1 and length_cap slot
/// occurrences, regardless of degree.
std::vector<LieMonomial> enumerate_templates_by_length(std::size_t arity,
                                                       long length_cap);

/// Certificate for Lie dependence: p differs from f evaluated at the family
/// by something of strictly smaller degree, and every monomial of f
/// evaluates to degree at most deg p.
struct LieDependenceWitness {
    bool dependent = false;
    LieTemplate f;
    std::optional<std::size_t> pivot;
    long deg_before = kNegInfinity;
    long deg_after = kNegInfinity;
    NcPoly remainder;
    bool zero_case = false;
};

/// Exact expression of a homogeneous Lie element as a Lie polynomial in the
/// homogeneous family, found by solving over all templates of matching
/// degree.  The length cap deg(p)/min deg(family) makes the search complete.
LieDependenceWitness express_as_lie(const LiePoly& p,
                                    const std::vector<LiePoly>& family);

/// Decide Lie dependence of p on the family: the top component of p must be
/// a template expression in the top components of the members of no larger
/// degree.  The returned template accumulates every layer that keeps
/// reducing, so the remainder is as small as the family allows.
LieDependenceWitness lie_dependence(const LiePoly& p,
                                    const std::vector<LiePoly>& family);

/// Find a member that is Lie-dependent on the members of no larger degree.
/// An associative dependence check runs first; when it reports dependence a
/// Lie pivot always exists, and the smallest one in the degree-ascending
/// order is returned.  Slots of the witness template refer to the family
/// with the pivot removed, order preserved.
LieDependenceWitness lie_family_dependent(const std::vector<LiePoly>& family);

/// Re-verify both dependence conditions by direct evaluation.
bool verify_lie_witness(const LiePoly& p, const std::vector<LiePoly>& family,
                        const LieDependenceWitness& w);
bool verify_lie_family_witness(const std::vector<LiePoly>& family,
                               const LieDependenceWitness& w);

}  // namespace freealg
