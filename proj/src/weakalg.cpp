#include "freealg/weakalg.hpp"

#include <algorithm>
#include <numeric>

#include "freealg/linalg.hpp"

namespace freealg {

long deg_sum(long a, long b) {
    if (a == kNegInfinity || b == kNegInfinity) return kNegInfinity;
    if (a == kPosInfinity || b == kPosInfinity) return kPosInfinity;
    return a + b;
}

namespace {

unsigned infer_gens(unsigned n_gens, const std::vector<NcPoly>& polys) {
    unsigned bound = n_gens;
    for (auto& p : polys) bound = std::max(bound, p.max_letter_bound());
    return bound;
}

unsigned long family_char(const std::vector<NcPoly>& family) {
    if (family.empty()) throw std::invalid_argument("empty family");
    unsigned long ch = family.front().characteristic();
    for (auto& p : family)
        if (p.characteristic() != ch)
            throw FieldMismatchError("family members over different fields");
    return ch;
}

/// Indices sorted stably by the given degree, ascending.
std::vector<std::size_t> sorted_by(const std::vector<long>& degs) {
    std::vector<std::size_t> idx(degs.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return degs[a] < degs[b]; });
    return idx;
}

/// Try to write target (homogeneous of degree d) as sum of tops[j] * w over
/// the listed indices, with |w| = d - deg(tops[j]).  On success cofactors[j]
/// accumulates the found right factors.
bool solve_top_layer(const NcPoly& target, long d,
                     const std::vector<NcPoly>& tops,
                     const std::vector<long>& degs,
                     const std::vector<std::size_t>& usable, unsigned n_gens,
                     std::vector<NcPoly>& cofactors) {
    unsigned long ch = target.characteristic();
    PolySolver solver(ch);
    std::vector<std::pair<std::size_t, Word>> meta;
    for (std::size_t j : usable) {
        long wdeg = d - degs[j];
        if (wdeg < 0) continue;
        for (auto& w : words_of_degree(n_gens, static_cast<std::size_t>(wdeg))) {
            solver.add_row(tops[j] * NcPoly::monomial(Scalar::one(ch), w));
            meta.emplace_back(j, w);
        }
    }
    auto coeffs = solver.express(target);
    if (!coeffs) return false;
    for (std::size_t r = 0; r < meta.size(); ++r) {
        if ((*coeffs)[r].is_zero()) continue;
        cofactors[meta[r].first].add_term(meta[r].second, (*coeffs)[r]);
    }
    return true;
}

}  // namespace

DependenceWitness family_dependent(const std::vector<NcPoly>& family,
                                   unsigned n_gens) {
    unsigned long ch = family_char(family);
    DependenceWitness w;
    w.remainder = NcPoly::zero(ch);

    for (std::size_t i = 0; i < family.size(); ++i) {
        if (family[i].is_zero()) {
            w.kind = DepKind::family_dependent;
            w.zero_member = i;
            w.cofactors.assign(family.size(), NcPoly::zero(ch));
            return w;
        }
    }

    n_gens = infer_gens(n_gens, family);
    std::vector<NcPoly> tops;
    std::vector<long> degs;
    for (auto& p : family) {
        degs.push_back(p.nu_top());
        tops.push_back(p.component(static_cast<std::size_t>(p.nu_top())));
    }

    auto order = sorted_by(degs);
    for (std::size_t k = order.size(); k-- > 0;) {
        std::size_t piv = order[k];
        std::vector<std::size_t> usable;
        for (std::size_t j = 0; j < family.size(); ++j)
            if (j != piv && degs[j] <= degs[piv]) usable.push_back(j);
        std::vector<NcPoly> cof(family.size(), NcPoly(ch));
        if (!solve_top_layer(tops[piv], degs[piv], tops, degs, usable, n_gens,
                             cof))
            continue;
        cof[piv] = NcPoly::constant(-Scalar::one(ch));
        w.kind = DepKind::family_dependent;
        w.pivot = piv;
        w.cofactors = std::move(cof);
        NcPoly sum(ch);
        for (std::size_t j = 0; j < family.size(); ++j)
            sum += family[j] * w.cofactors[j];
        w.remainder = std::move(sum);
        return w;
    }
    return w;
}

DependenceWitness right_reduce(const NcPoly& a,
                               const std::vector<NcPoly>& family,
                               unsigned n_gens) {
    unsigned long ch = a.characteristic();
    for (auto& p : family)
        if (p.characteristic() != ch)
            throw FieldMismatchError("inputs over different fields");
    DependenceWitness w;
    w.cofactors.assign(family.size(), NcPoly(ch));
    w.remainder = a;
    if (a.is_zero()) {
        w.kind = DepKind::element_dependent;
        w.zero_case = true;
        return w;
    }

    std::vector<NcPoly> inputs = family;
    inputs.push_back(a);
    n_gens = infer_gens(n_gens, inputs);

    std::vector<NcPoly> tops;
    std::vector<long> degs;
    std::vector<std::size_t> all;
    for (std::size_t j = 0; j < family.size(); ++j) {
        degs.push_back(family[j].nu_top());
        tops.push_back(family[j].is_zero()
                           ? NcPoly(ch)
                           : family[j].component(
                                 static_cast<std::size_t>(family[j].nu_top())));
        if (!family[j].is_zero()) all.push_back(j);
    }

    NcPoly r = a;
    bool reduced = false;
    while (!r.is_zero()) {
        long d = r.nu_top();
        std::vector<std::size_t> usable;
        for (std::size_t j : all)
            if (degs[j] <= d) usable.push_back(j);
        std::vector<NcPoly> step(family.size(), NcPoly(ch));
        if (!solve_top_layer(r.component(static_cast<std::size_t>(d)), d, tops,
                             degs, usable, n_gens, step))
            break;
        for (std::size_t j = 0; j < family.size(); ++j) {
            if (step[j].is_zero()) continue;
            r -= family[j] * step[j];
            w.cofactors[j] += step[j];
        }
        reduced = true;
    }
    w.remainder = std::move(r);
    if (reduced) w.kind = DepKind::element_dependent;
    return w;
}

StripResult weak_reduction_step(const std::vector<NcPoly>& family,
                                const std::vector<NcPoly>& cofactors) {
    unsigned long ch = family_char(family);
    if (cofactors.size() != family.size())
        throw std::invalid_argument("cofactor count mismatch");

    NcPoly sum(ch);
    for (std::size_t i = 0; i < family.size(); ++i)
        sum += family[i] * cofactors[i];
    if (!sum.is_zero())
        throw std::invalid_argument("inputs do not form a relation");

    std::vector<std::size_t> live;
    for (std::size_t i = 0; i < family.size(); ++i) {
        if (family[i].is_zero()) continue;
        if (!family[i].is_homogeneous())
            throw std::invalid_argument("family member not homogeneous");
        live.push_back(i);
    }

    // Lowest total degree carrying a nonzero relation layer.  The layer
    // itself is an exact homogeneous relation.
    long layer = kPosInfinity;
    for (std::size_t i : live) {
        if (cofactors[i].is_zero()) continue;
        layer = std::min(layer,
                         deg_sum(family[i].nu_top(), cofactors[i].nu_low()));
    }
    if (layer == kPosInfinity)
        throw std::invalid_argument("all cofactors are zero");

    std::vector<long> degs;
    for (std::size_t i : live) degs.push_back(family[i].nu_top());
    auto order = sorted_by(degs);  // positions into live

    std::vector<NcPoly> b;
    for (std::size_t i : live) {
        long ldeg = layer - family[i].nu_top();
        b.push_back(ldeg < 0 ? NcPoly(ch)
                             : cofactors[i].component(
                                   static_cast<std::size_t>(ldeg)));
    }

    std::size_t m = order.size();
    for (std::size_t k = order.size(); k-- > 0;) {
        if (!b[order[k]].is_zero()) {
            m = k;
            break;
        }
    }
    if (m == order.size())
        throw std::invalid_argument("all cofactors are zero");
    std::size_t mpos = order[m];

    StripResult res;
    res.pivot = live[mpos];
    while (b[mpos].nu_top() > 0) {
        res.trace.push_back(b[mpos].nu_top());
        unsigned s = std::numeric_limits<unsigned>::max();
        for (auto& [word, c] : b[mpos].terms())
            s = std::min(s, word.letters().back());
        for (auto& bi : b) {
            NcPoly stripped(ch);
            for (auto& [word, c] : bi.terms())
                if (!word.empty() && word.letters().back() == s)
                    stripped.add_term(word.prefix(word.degree() - 1), c);
            bi = std::move(stripped);
        }
    }

    Scalar beta = b[mpos].coeff(Word());
    res.expression.assign(family.size(), NcPoly(ch));
    Scalar scale = -beta.inverse();
    for (std::size_t k = 0; k < live.size(); ++k) {
        if (k == mpos) continue;
        res.expression[live[k]] = scale * b[k];
    }
    return res;
}

namespace {

unsigned infer_gens_series(unsigned n_gens,
                           const std::vector<WindowSeries>& xs) {
    unsigned bound = n_gens;
    for (auto& s : xs) bound = std::max(bound, s.poly().max_letter_bound());
    return bound;
}

long common_cap(const std::vector<WindowSeries>& xs) {
    if (xs.empty()) throw std::invalid_argument("empty family");
    long cap = xs.front().cap();
    for (auto& s : xs) cap = std::min(cap, s.cap());
    return cap;
}

/// Try to cancel the order-delta bottom component of target by right
/// multiples of the listed family members' bottom components.
bool solve_bottom_layer(const NcPoly& target, long delta,
                        const std::vector<NcPoly>& bots,
                        const std::vector<long>& ords,
                        const std::vector<std::size_t>& usable,
                        unsigned n_gens, std::vector<NcPoly>& cofactors) {
    unsigned long ch = target.characteristic();
    PolySolver solver(ch);
    std::vector<std::pair<std::size_t, Word>> meta;
    for (std::size_t j : usable) {
        long wdeg = delta - ords[j];
        if (wdeg < 0) continue;
        for (auto& w : words_of_degree(n_gens, static_cast<std::size_t>(wdeg))) {
            solver.add_row(bots[j] * NcPoly::monomial(Scalar::one(ch), w));
            meta.emplace_back(j, w);
        }
    }
    auto coeffs = solver.express(target);
    if (!coeffs) return false;
    for (std::size_t r = 0; r < meta.size(); ++r) {
        if ((*coeffs)[r].is_zero()) continue;
        cofactors[meta[r].first].add_term(meta[r].second, (*coeffs)[r]);
    }
    return true;
}

}  // namespace

DependenceWitness series_reduce(const WindowSeries& a,
                                const std::vector<WindowSeries>& family,
                                unsigned n_gens) {
    unsigned long ch = a.characteristic();
    long cap = a.cap();
    for (auto& s : family) cap = std::min(cap, s.cap());
    DependenceWitness w;
    w.cap = cap;
    w.cofactors.assign(family.size(), NcPoly(ch));
    w.remainder = a.poly();
    if (a.is_zero()) {
        w.kind = DepKind::element_dependent;
        w.zero_case = true;
        return w;
    }

    std::vector<WindowSeries> inputs = family;
    inputs.push_back(a);
    n_gens = infer_gens_series(n_gens, inputs);

    std::vector<NcPoly> bots;
    std::vector<long> ords;
    std::vector<std::size_t> usable_all;
    for (std::size_t j = 0; j < family.size(); ++j) {
        if (family[j].characteristic() != ch)
            throw FieldMismatchError("series over different fields");
        ords.push_back(family[j].nu_low());
        bots.push_back(family[j].is_zero()
                           ? NcPoly(ch)
                           : family[j].poly().component(
                                 static_cast<std::size_t>(family[j].nu_low())));
        if (!family[j].is_zero()) usable_all.push_back(j);
    }

    NcPoly r = truncate_poly(a.poly(), cap);
    bool first = true;
    while (!r.is_zero()) {
        long delta = r.nu_low();
        if (delta > cap) break;
        std::vector<std::size_t> usable;
        for (std::size_t j : usable_all)
            if (ords[j] <= delta) usable.push_back(j);
        std::vector<NcPoly> step(family.size(), NcPoly(ch));
        if (!solve_bottom_layer(r.component(static_cast<std::size_t>(delta)),
                                delta, bots, ords, usable, n_gens, step)) {
            if (first) {
                w.remainder = std::move(r);
                return w;  // independent: the defining order never drops
            }
            break;
        }
        for (std::size_t j = 0; j < family.size(); ++j) {
            if (step[j].is_zero()) continue;
            r = truncate_poly(r - family[j].poly() * step[j], cap);
            w.cofactors[j] += step[j];
        }
        first = false;
    }
    w.kind = DepKind::element_dependent;
    w.remainder = std::move(r);
    return w;
}

SeriesStripResult series_strip_relation(const std::vector<WindowSeries>& family,
                                        const std::vector<WindowSeries>& cofactors) {
    if (family.empty()) throw std::invalid_argument("empty family");
    if (cofactors.size() != family.size())
        throw std::invalid_argument("cofactor count mismatch");
    unsigned long ch = family.front().characteristic();
    std::vector<WindowSeries> all = family;
    all.insert(all.end(), cofactors.begin(), cofactors.end());
    long cap = common_cap(all);

    // Validate the relation: nu(sum a_i b_i) > min_i(nu(a_i) + nu(b_i)).
    NcPoly sum(ch);
    long minord = kPosInfinity;
    for (std::size_t i = 0; i < family.size(); ++i) {
        sum += truncate_poly(family[i].poly() * cofactors[i].poly(), cap);
        if (family[i].is_zero() || cofactors[i].is_zero()) continue;
        minord = std::min(minord,
                          deg_sum(family[i].nu_low(), cofactors[i].nu_low()));
    }
    if (minord == kPosInfinity)
        throw std::invalid_argument("all cofactors are zero");
    if (minord >= cap)
        throw std::invalid_argument("relation order reaches the cap");
    if (sum.nu_low() <= minord)
        throw std::invalid_argument("inputs do not form a dependence relation");

    // Keep only the members attaining the minimum order; recompute after
    // every strip.  Track the largest-order member among them.
    std::vector<NcPoly> b;
    for (auto& c : cofactors) b.push_back(truncate_poly(c.poly(), cap));

    std::vector<long> ords;
    for (auto& a : family) ords.push_back(a.nu_low());
    auto order = sorted_by(ords);

    SeriesStripResult res;
    res.cap = cap;

    while (true) {
        long m = kPosInfinity;
        for (std::size_t i = 0; i < family.size(); ++i) {
            if (family[i].is_zero() || b[i].is_zero()) continue;
            m = std::min(m, deg_sum(ords[i], b[i].nu_low()));
        }
        if (m == kPosInfinity)
            throw std::logic_error("stripping lost every cofactor");

        std::size_t track = family.size();
        for (std::size_t k = order.size(); k-- > 0;) {
            std::size_t i = order[k];
            if (family[i].is_zero() || b[i].is_zero()) continue;
            if (deg_sum(ords[i], b[i].nu_low()) == m) {
                track = i;
                break;
            }
        }

        if (b[track].nu_low() == 0) {
            // Invertible cofactor: divide the relation by it.
            WindowSeries inv =
                series_invert(WindowSeries(b[track], cap));
            res.pivot = track;
            res.cofactors.assign(family.size(), NcPoly(ch));
            NcPoly rem = truncate_poly(family[track].poly(), cap);
            for (std::size_t j = 0; j < family.size(); ++j) {
                if (j == track || b[j].is_zero()) continue;
                NcPoly cj = truncate_poly(-(b[j] * inv.poly()), cap);
                res.cofactors[j] = cj;
                rem -= truncate_poly(family[j].poly() * cj, cap);
            }
            res.remainder = truncate_poly(rem, cap);
            return res;
        }

        res.trace.push_back(b[track].nu_low());

        // Stripping is only sound for cofactors free of constant terms, so
        // drop the members sitting above the minimum; their products only
        // contribute above it.
        for (std::size_t i = 0; i < family.size(); ++i) {
            if (b[i].is_zero()) continue;
            if (family[i].is_zero() || deg_sum(ords[i], b[i].nu_low()) != m)
                b[i] = NcPoly(ch);
        }

        // Rightmost generator of a lowest-order monomial of the tracked
        // cofactor; smallest index among candidates.
        unsigned s = std::numeric_limits<unsigned>::max();
        NcPoly low = b[track].component(
            static_cast<std::size_t>(b[track].nu_low()));
        for (auto& [word, c] : low.terms())
            s = std::min(s, word.letters().back());

        for (auto& bi : b) {
            NcPoly stripped(ch);
            for (auto& [word, c] : bi.terms())
                if (!word.empty() && word.letters().back() == s)
                    stripped.add_term(word.prefix(word.degree() - 1), c);
            bi = std::move(stripped);
        }
    }
}

DependenceWitness series_family_dependent(const std::vector<WindowSeries>& family,
                                          unsigned n_gens) {
    long cap = common_cap(family);
    unsigned long ch = family.front().characteristic();
    DependenceWitness w;
    w.cap = cap;
    w.remainder = NcPoly(ch);

    for (std::size_t i = 0; i < family.size(); ++i) {
        if (family[i].is_zero()) {
            w.kind = DepKind::family_dependent;
            w.zero_member = i;
            w.cofactors.assign(family.size(), NcPoly(ch));
            return w;
        }
    }

    n_gens = infer_gens_series(n_gens, family);
    std::vector<NcPoly> bots;
    std::vector<long> ords;
    for (auto& s : family) {
        ords.push_back(s.nu_low());
        bots.push_back(
            s.poly().component(static_cast<std::size_t>(s.nu_low())));
    }

    auto order = sorted_by(ords);
    for (std::size_t k = order.size(); k-- > 0;) {
        std::size_t piv = order[k];
        std::vector<std::size_t> usable;
        for (std::size_t j = 0; j < family.size(); ++j)
            if (j != piv && ords[j] <= ords[piv]) usable.push_back(j);
        std::vector<NcPoly> cof(family.size(), NcPoly(ch));
        if (!solve_bottom_layer(bots[piv], ords[piv], bots, ords, usable,
                                n_gens, cof))
            continue;

        // Full reduction of the pivot against the rest gives readable
        // cofactors (geometric series and the like, exact up to the cap).
        std::vector<WindowSeries> rest;
        std::vector<std::size_t> restidx;
        for (std::size_t j = 0; j < family.size(); ++j)
            if (j != piv && ords[j] <= ords[piv]) {
                rest.push_back(family[j]);
                restidx.push_back(j);
            }
        DependenceWitness red = series_reduce(family[piv], rest, n_gens);
        w.kind = DepKind::family_dependent;
        w.pivot = piv;
        w.cap = cap;
        w.cofactors.assign(family.size(), NcPoly(ch));
        for (std::size_t t = 0; t < restidx.size(); ++t)
            w.cofactors[restidx[t]] = red.cofactors[t];
        w.cofactors[piv] = NcPoly::constant(-Scalar::one(ch));
        w.remainder = red.remainder;
        w.strip_trace = red.strip_trace;
        return w;
    }
    return w;
}

bool verify_family_witness(const std::vector<NcPoly>& family,
                           const DependenceWitness& w) {
    if (w.kind != DepKind::family_dependent) return false;
    if (w.zero_member)
        return *w.zero_member < family.size() &&
               family[*w.zero_member].is_zero();
    if (w.cofactors.size() != family.size()) return false;
    unsigned long ch = family_char(family);
    NcPoly sum(ch);
    long mx = kNegInfinity;
    bool any = false;
    for (std::size_t i = 0; i < family.size(); ++i) {
        if (w.cofactors[i].is_zero()) continue;
        any = true;
        sum += family[i] * w.cofactors[i];
        mx = std::max(mx, deg_sum(family[i].nu_top(), w.cofactors[i].nu_top()));
    }
    return any && sum.nu_top() < mx;
}

bool verify_element_witness(const NcPoly& a, const std::vector<NcPoly>& family,
                            const DependenceWitness& w) {
    if (w.kind != DepKind::element_dependent) return false;
    if (w.zero_case) return a.is_zero();
    if (w.cofactors.size() != family.size()) return false;
    NcPoly sum(a.characteristic());
    long mx = kNegInfinity;
    for (std::size_t i = 0; i < family.size(); ++i) {
        if (w.cofactors[i].is_zero()) continue;
        sum += family[i] * w.cofactors[i];
        mx = std::max(mx, deg_sum(family[i].nu_top(), w.cofactors[i].nu_top()));
    }
    return (a - sum).nu_top() < a.nu_top() && mx <= a.nu_top();
}

bool verify_series_family_witness(const std::vector<WindowSeries>& family,
                                  const DependenceWitness& w) {
    if (w.kind != DepKind::family_dependent) return false;
    if (w.zero_member)
        return *w.zero_member < family.size() &&
               family[*w.zero_member].is_zero();
    if (w.cofactors.size() != family.size()) return false;
    long cap = std::min(w.cap, common_cap(family));
    unsigned long ch = family.front().characteristic();
    NcPoly sum(ch);
    long mn = kPosInfinity;
    bool any = false;
    for (std::size_t i = 0; i < family.size(); ++i) {
        if (w.cofactors[i].is_zero()) continue;
        any = true;
        sum += truncate_poly(family[i].poly() * w.cofactors[i], cap);
        mn = std::min(mn, deg_sum(family[i].nu_low(), w.cofactors[i].nu_low()));
    }
    sum = truncate_poly(sum, cap);
    return any && sum.nu_low() > mn;
}

bool verify_series_element_witness(const WindowSeries& a,
                                   const std::vector<WindowSeries>& family,
                                   const DependenceWitness& w) {
    if (w.kind != DepKind::element_dependent) return false;
    if (w.zero_case) return a.is_zero();
    if (w.cofactors.size() != family.size()) return false;
    long cap = std::min(w.cap, std::min(a.cap(), common_cap(family)));
    NcPoly sum(a.characteristic());
    long mn = kPosInfinity;
    for (std::size_t i = 0; i < family.size(); ++i) {
        if (w.cofactors[i].is_zero()) continue;
        sum += truncate_poly(family[i].poly() * w.cofactors[i], cap);
        mn = std::min(mn, deg_sum(family[i].nu_low(), w.cofactors[i].nu_low()));
    }
    NcPoly diff = truncate_poly(truncate_poly(a.poly(), cap) - sum, cap);
    return diff.nu_low() > a.nu_low() && mn >= a.nu_low();
}

}  // namespace freealg
