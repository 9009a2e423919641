#pragma once

#include <optional>
#include <vector>

#include "freealg/ncpoly.hpp"
#include "freealg/series.hpp"

namespace freealg {

enum class DepKind { independent, family_dependent, element_dependent };

/// Self-checking certificate for right dependence with respect to the top
/// filtration (graded engine) or the inverse filtration (series engine,
/// marked by cap >= 0: every statement is then relative to that cap).
///
/// family_dependent: nu(sum a_i b_i) drops strictly below max_i(nu(a_i) +
/// nu(b_i)) with not all b_i zero, the inequality reversed and max replaced
/// by min for the series engine; or zero_member names a vanishing family
/// element.  element_dependent: nu(a - sum a_i b_i) drops below nu(a) while
/// max_i(nu(a_i) + nu(b_i)) <= nu(a) (again reversed for series); or
/// zero_case records a = 0.
struct DependenceWitness {
    DepKind kind = DepKind::independent;
    std::vector<NcPoly> cofactors;
    std::optional<std::size_t> pivot;
    NcPoly remainder;
    std::optional<std::size_t> zero_member;
    bool zero_case = false;
    std::vector<long> strip_trace;
    long cap = -1;
};

/// Degree sum respecting the conventions nu_top(0) = -inf, nu_low(0) = +inf.
long deg_sum(long a, long b);

/// Decide right dependence of a family for the top filtration.  Decision is
/// by per-degree linear algebra over the word basis: the family is dependent
/// iff some top component lies in the span of the others' top components
/// times words of the complementary degree.  Among valid pivots the one with
/// the largest position after a stable sort by nu_top ascending wins.
/// n_gens 0 means infer the alphabet from the inputs.
DependenceWitness family_dependent(const std::vector<NcPoly>& family,
                                   unsigned n_gens = 0);

/// Reduce a against the family: repeatedly cancel the top component of the
/// remainder by right multiples of family members of no larger degree.  The
/// accumulated witness satisfies both element-dependence inequalities; the
/// final remainder's top component lies outside the reachable span.  Zero
/// family members are ignored.
DependenceWitness right_reduce(const NcPoly& a,
                               const std::vector<NcPoly>& family,
                               unsigned n_gens = 0);

struct StripResult {
    std::size_t pivot;               // index into the original family
    std::vector<NcPoly> expression;  // family[pivot] = sum of family[j] * expression[j]
    std::vector<long> trace;         // degree of the tracked cofactor per strip
};

/// Turn an exact relation sum family[i] * cofactors[i] = 0 on a homogeneous
/// family into an expression of one member as a right combination of the
/// others, by stripping rightmost generators from the cofactors until the
/// tracked cofactor becomes a nonzero scalar.  Only members of no larger
/// degree appear in the expression.  Throws on a non-relation, all-zero
/// cofactors, or non-homogeneous family members.
StripResult weak_reduction_step(const std::vector<NcPoly>& family,
                                const std::vector<NcPoly>& cofactors);

/// Inverse-filtration analogue of family_dependent, exact up to the common
/// cap: dependent iff some bottom component lies in the span of the others'
/// bottom components times words.  A dependent verdict carries the pivot's
/// full reduction cofactors (computed as in series_reduce).
DependenceWitness series_family_dependent(const std::vector<WindowSeries>& family,
                                          unsigned n_gens = 0);

/// Reduce a series against a family on the inverse filtration: repeatedly
/// cancel the lowest component of the remainder by right multiples of family
/// members of no larger order, until the remainder vanishes below the cap or
/// no further cancellation exists.  Dependence requires the very first
/// cancellation (at order nu_low(a)) to succeed.
DependenceWitness series_reduce(const WindowSeries& a,
                                const std::vector<WindowSeries>& family,
                                unsigned n_gens = 0);

struct SeriesStripResult {
    std::size_t pivot;
    std::vector<NcPoly> cofactors;  // family[pivot] = sum family[j]*cofactors[j] + remainder
    NcPoly remainder;               // nu_low strictly above nu_low(family[pivot])
    std::vector<long> trace;        // nu_low of the tracked cofactor per strip
    long cap = 0;
};

/// The reduction loop on a given inverse-filtration dependence relation
/// nu_low(sum family[i] * cofactors[i]) > min_i(nu_low(family[i]) +
/// nu_low(cofactors[i])): strip the rightmost generator of a lowest-order
/// monomial of the tracked cofactor until that cofactor has order 0, then
/// divide by it.  The tracked cofactor's order decreases strictly at every
/// strip (recorded in trace).  Throws if the inputs do not form such a
/// relation.
SeriesStripResult series_strip_relation(const std::vector<WindowSeries>& family,
                                        const std::vector<WindowSeries>& cofactors);

/// Re-verify certificates by direct arithmetic.
bool verify_family_witness(const std::vector<NcPoly>& family,
                           const DependenceWitness& w);
bool verify_element_witness(const NcPoly& a, const std::vector<NcPoly>& family,
                            const DependenceWitness& w);
bool verify_series_family_witness(const std::vector<WindowSeries>& family,
                                  const DependenceWitness& w);
bool verify_series_element_witness(const WindowSeries& a,
                                   const std::vector<WindowSeries>& family,
                                   const DependenceWitness& w);

}  // namespace freealg
