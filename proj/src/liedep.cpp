#include "freealg/liedep.hpp"

#include <algorithm>
#include <numeric>

#include "freealg/linalg.hpp"
#include "freealg/weakalg.hpp"

namespace freealg {

namespace {

/// Standard bracketing over the slot alphabet: split at the smallest proper
/// suffix, as for generator words.
LieMonomial slot_bracketing(const std::vector<unsigned>& w) {
    if (w.size() == 1) return LieMonomial::leaf(w[0]);
    std::size_t best = 1;
    for (std::size_t i = 2; i < w.size(); ++i)
        if (std::lexicographical_compare(w.begin() + static_cast<long>(i),
                                         w.end(),
                                         w.begin() + static_cast<long>(best),
                                         w.end()))
            best = i;
    std::vector<unsigned> u(w.begin(), w.begin() + static_cast<long>(best));
    std::vector<unsigned> v(w.begin() + static_cast<long>(best), w.end());
    return LieMonomial::node(slot_bracketing(u), slot_bracketing(v));
}

void emit_content(const std::vector<unsigned>& e,
                  std::vector<LieMonomial>& out) {
    std::vector<unsigned> word;
    for (unsigned s = 0; s < e.size(); ++s)
        word.insert(word.end(), e[s], s);
    if (word.empty()) return;
    do {
        if (is_lyndon(word)) out.push_back(slot_bracketing(word));
    } while (std::next_permutation(word.begin(), word.end()));
}

void enum_multidegrees(const std::vector<long>& degrees, std::size_t i,
                       long target, long length_left, std::vector<unsigned>& e,
                       std::vector<LieMonomial>& out) {
    if (i == degrees.size()) {
        if (target == 0) emit_content(e, out);
        return;
    }
    for (long k = 0; k * degrees[i] <= target && k <= length_left; ++k) {
        e[i] = static_cast<unsigned>(k);
        enum_multidegrees(degrees, i + 1, target - k * degrees[i],
                          length_left - k, e, out);
    }
    e[i] = 0;
}

std::vector<std::size_t> ascending_by(const std::vector<long>& degs) {
    std::vector<std::size_t> idx(degs.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return degs[a] < degs[b]; });
    return idx;
}

}  // namespace

std::vector<LieMonomial> enumerate_templates(const std::vector<long>& degrees,
                                             long target, long length_cap) {
    for (long d : degrees)
        if (d < 1) throw std::invalid_argument("slot degrees must be positive");
    if (target < 1)
        throw std::invalid_argument("target degree must be positive");
    std::vector<LieMonomial> out;
    std::vector<unsigned> e(degrees.size(), 0);
    enum_multidegrees(degrees, 0, target, length_cap, e, out);
    return out;
}

std::vector<LieMonomial> enumerate_templates_by_length(std::size_t arity,
                                                       long length_cap) {
    if (length_cap < 1)
        throw std::invalid_argument("length cap must be positive");
    std::vector<LieMonomial> out;
    std::vector<unsigned> e(arity, 0);
    // Every content vector with between 1 and length_cap slot occurrences.
    auto rec = [&](auto&& self, std::size_t i, long left) -> void {
        if (i == arity) {
            emit_content(e, out);
            return;
        }
        for (long k = 0; k <= left; ++k) {
            e[i] = static_cast<unsigned>(k);
            self(self, i + 1, left - k);
        }
        e[i] = 0;
    };
    rec(rec, 0, length_cap);
    return out;
}

LieDependenceWitness express_as_lie(const LiePoly& p,
                                    const std::vector<LiePoly>& family) {
    if (!p.carrier().is_homogeneous())
        throw std::invalid_argument("element not homogeneous");
    for (auto& q : family)
        if (!q.carrier().is_homogeneous())
            throw std::invalid_argument("family member not homogeneous");

    LieDependenceWitness w;
    w.f = LieTemplate(family.size());
    w.remainder = NcPoly(0ul);
    w.deg_before = p.degree();
    if (p.is_zero()) {
        w.dependent = true;
        w.zero_case = true;
        return w;
    }

    long d = p.degree();
    std::vector<long> degs;
    std::vector<NcPoly> args;
    for (auto& q : family) {
        degs.push_back(q.is_zero() ? d + 1 : q.degree());  // blocks zero slots
        args.push_back(q.carrier());
    }
    auto monos = enumerate_templates(degs, d, d);
    PolySolver solver(0);
    for (auto& m : monos) solver.add_row(m.eval(args));
    auto coeffs = solver.express(p.carrier());
    if (!coeffs) {
        w.remainder = p.carrier();
        w.deg_after = d;
        return w;
    }
    w.dependent = true;
    for (std::size_t i = 0; i < monos.size(); ++i)
        w.f.add((*coeffs)[i], monos[i]);
    return w;
}

LieDependenceWitness lie_dependence(const LiePoly& p,
                                    const std::vector<LiePoly>& family) {
    LieDependenceWitness w;
    w.f = LieTemplate(family.size());
    w.remainder = NcPoly(0ul);
    w.deg_before = p.degree();
    if (p.is_zero()) {
        w.dependent = true;
        w.zero_case = true;
        return w;
    }

    std::vector<NcPoly> args, tops;
    for (auto& q : family) {
        args.push_back(q.carrier());
        tops.push_back(q.is_zero()
                           ? NcPoly(0ul)
                           : q.carrier().component(
                                 static_cast<std::size_t>(q.degree())));
    }

    NcPoly r = p.carrier();
    while (!r.is_zero() && r.nu_top() >= 1) {
        long ell = r.nu_top();
        std::vector<long> degs;
        for (auto& q : family)
            degs.push_back(q.is_zero() || q.degree() > ell ? ell + 1
                                                           : q.degree());
        auto monos = enumerate_templates(degs, ell, ell);
        PolySolver solver(0);
        for (auto& m : monos) solver.add_row(m.eval(tops));
        auto coeffs = solver.express(r.component(static_cast<std::size_t>(ell)));
        if (!coeffs) break;
        for (std::size_t i = 0; i < monos.size(); ++i) {
            if ((*coeffs)[i].is_zero()) continue;
            w.f.add((*coeffs)[i], monos[i]);
            r -= (*coeffs)[i] * monos[i].eval(args);
        }
    }
    w.remainder = r;
    w.deg_after = r.nu_top();
    w.dependent = w.deg_after < w.deg_before;
    if (!w.dependent) w.f = LieTemplate(family.size());
    return w;
}

LieDependenceWitness lie_family_dependent(const std::vector<LiePoly>& family) {
    LieDependenceWitness w;
    w.remainder = NcPoly(0ul);
    if (family.empty()) return w;

    std::vector<NcPoly> carriers;
    for (auto& q : family) carriers.push_back(q.carrier());
    auto aw = family_dependent(carriers);
    if (aw.kind != DepKind::family_dependent) return w;

    if (aw.zero_member) {
        w.dependent = true;
        w.zero_case = true;
        w.pivot = *aw.zero_member;
        w.f = LieTemplate(family.size() - 1);
        return w;
    }

    std::vector<long> degs;
    for (auto& q : family) degs.push_back(q.degree());
    for (std::size_t i : ascending_by(degs)) {
        std::vector<LiePoly> rest;
        for (std::size_t j = 0; j < family.size(); ++j)
            if (j != i) rest.push_back(family[j]);
        auto cand = lie_dependence(family[i], rest);
        if (!cand.dependent) continue;
        cand.pivot = i;
        return cand;
    }
    return w;
}

bool verify_lie_witness(const LiePoly& p, const std::vector<LiePoly>& family,
                        const LieDependenceWitness& w) {
    if (!w.dependent) return false;
    if (w.zero_case) return p.is_zero();
    if (w.f.arity() != family.size()) return false;
    std::vector<NcPoly> args;
    for (auto& q : family) args.push_back(q.carrier());
    long d = p.degree();
    if ((p.carrier() - eval_template(w.f, args)).nu_top() >= d) return false;
    for (auto& [c, m] : w.f.monomials()) {
        if (m.eval(args).nu_top() > d) return false;
        auto e = m.multidegree(family.size());
        for (std::size_t j = 0; j < family.size(); ++j)
            if (e[j] > 0 && family[j].degree() > d) return false;
    }
    return true;
}

bool verify_lie_family_witness(const std::vector<LiePoly>& family,
                               const LieDependenceWitness& w) {
    if (!w.pivot || *w.pivot >= family.size()) return false;
    std::vector<LiePoly> rest;
    for (std::size_t j = 0; j < family.size(); ++j)
        if (j != *w.pivot) rest.push_back(family[j]);
    return verify_lie_witness(family[*w.pivot], rest, w);
}

}  // namespace freealg
