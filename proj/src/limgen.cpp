#include "freealg/limgen.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "freealg/liedep.hpp"
#include "freealg/linalg.hpp"

namespace freealg {

namespace {

bool sorted_subset(std::vector<unsigned> small, std::vector<unsigned> big) {
    std::sort(small.begin(), small.end());
    std::sort(big.begin(), big.end());
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

bool word_in_window(const Word& w, const std::vector<unsigned>& sorted_window) {
    for (std::size_t i = 0; i < w.degree(); ++i)
        if (!std::binary_search(sorted_window.begin(), sorted_window.end(),
                                w[i]))
            return false;
    return true;
}

/// Words of the given degree over the window letters, deglex order.
std::vector<Word> window_words(const std::vector<unsigned>& window, long d) {
    std::vector<Word> out;
    for (const Word& w : words_of_degree(window.size(), static_cast<std::size_t>(d))) {
        std::vector<unsigned> letters;
        letters.reserve(w.degree());
        for (std::size_t i = 0; i < w.degree(); ++i)
            letters.push_back(window[w[i]]);
        out.emplace_back(std::move(letters));
    }
    return out;
}

/// Terms of degree strictly above d.
NcPoly tail_above(const NcPoly& p, long d) {
    return p - truncate_poly(p, d);
}

unsigned long presentation_char(const GradedPresentation& pres) {
    unsigned long ch = pres.elements.empty()
                           ? 0ul
                           : pres.elements.front().first.characteristic();
    for (auto& [p, tag] : pres.elements)
        if (p.characteristic() != ch)
            throw FieldMismatchError("presentation elements over different fields");
    return ch;
}

void validate_window(const std::vector<unsigned>& window) {
    if (!std::is_sorted(window.begin(), window.end()))
        throw std::invalid_argument("window must be sorted");
    if (std::adjacent_find(window.begin(), window.end()) != window.end())
        throw std::invalid_argument("window must not repeat letters");
}

void validate_assoc(const GradedPresentation& pres) {
    validate_window(pres.window);
    for (auto& [p, tag] : pres.elements) {
        if (p.is_zero() || p.nu_low() != tag)
            throw std::invalid_argument("element order must match its degree tag");
        if (tag < 1 || p.nu_top() > pres.cap)
            throw std::invalid_argument("element degrees must lie in 1..cap");
        for (auto& [w, c] : p.terms())
            if (!word_in_window(w, pres.window))
                throw std::invalid_argument("element uses letters outside the window");
    }
}

/// Lie presentations additionally need homogeneous Lie elements over a
/// characteristic-zero field.
void validate_lie(const GradedPresentation& pres) {
    if (presentation_char(pres) != 0)
        throw CharacteristicError("Lie operations need characteristic zero");
    validate_assoc(pres);
    for (auto& [p, tag] : pres.elements) {
        if (!p.is_homogeneous())
            throw std::invalid_argument("Lie presentation elements must be homogeneous");
        if (!is_lie_element(p))
            throw std::invalid_argument("presentation element is not a Lie element");
    }
}

/// Span of each degree layer: layer[d] holds the tag-d elements.
std::vector<std::vector<NcPoly>> degree_layers(const GradedPresentation& pres) {
    std::vector<std::vector<NcPoly>> layers(
        static_cast<std::size_t>(pres.cap) + 1);
    for (auto& [p, tag] : pres.elements)
        layers[static_cast<std::size_t>(tag)].push_back(p);
    return layers;
}

}  // namespace

NcPoly project(const NcPoly& p, const std::vector<unsigned>& target) {
    std::vector<unsigned> sorted = target;
    std::sort(sorted.begin(), sorted.end());
    NcPoly out(p.characteristic());
    for (auto& [w, c] : p.terms())
        if (word_in_window(w, sorted)) out.set_coeff(w, c);
    return out;
}

WindowSeries project(const WindowSeries& s, const std::vector<unsigned>& target) {
    return WindowSeries(project(s.poly(), target), s.cap());
}

bool check_compatible(
    const std::vector<std::pair<std::vector<unsigned>, NcPoly>>& family) {
    for (auto& [win, p] : family) {
        // An element must live over its own window.
        if (project(p, win) != p) return false;
    }
    for (auto& [small_win, small_p] : family)
        for (auto& [big_win, big_p] : family)
            if (sorted_subset(small_win, big_win) &&
                project(big_p, small_win) != small_p)
                return false;
    return true;
}

GradedPresentation full_assoc_presentation(const std::vector<unsigned>& window,
                                           long cap) {
    validate_window(window);
    GradedPresentation pres;
    pres.window = window;
    pres.cap = cap;
    for (long d = 1; d <= cap; ++d)
        for (const Word& w : window_words(window, d)) {
            NcPoly m(0ul);
            m.set_coeff(w, Scalar::integer(1, 0));
            pres.add(m, d);
        }
    return pres;
}

GradedPresentation full_lie_presentation(const std::vector<unsigned>& window,
                                         long cap) {
    validate_window(window);
    GradedPresentation pres;
    pres.window = window;
    pres.cap = cap;
    for (long d = 1; d <= cap; ++d)
        for (const LiePoly& b : lyndon_basis(window, d))
            pres.add(b.carrier(), d);
    return pres;
}

bool monomial_span_check(const std::vector<NcPoly>& gens,
                         const std::vector<unsigned>& window, long cap) {
    validate_window(window);
    if (cap <= 0) return true;
    unsigned long ch = gens.empty() ? 0ul : gens.front().characteristic();
    for (auto& g : gens) {
        if (g.characteristic() != ch)
            throw FieldMismatchError("inputs over different fields");
        if (g.is_zero() || g.nu_low() < 1)
            throw std::invalid_argument("spanning elements must have positive order");
    }

    // Span of all products of one or more generators, truncated at the cap.
    // Truncation commutes with right multiplication by positive-order
    // factors, so the low-degree part of the span is computed exactly.
    PolySolver solver(ch);
    auto extend = [&](auto&& self, const NcPoly& prod, long low) -> void {
        for (auto& g : gens) {
            long next = low + g.nu_low();
            if (next > cap) continue;
            NcPoly np = truncate_poly(prod * g, cap);
            if (np.is_zero()) continue;
            solver.add_row(np);
            self(self, np, next);
        }
    };
    NcPoly unit(ch);
    unit.set_coeff(Word(), Scalar::one(ch));
    extend(extend, unit, 0);

    for (long d = 1; d <= cap; ++d)
        for (const Word& w : window_words(window, d)) {
            NcPoly m(ch);
            m.set_coeff(w, Scalar::integer(1, ch));
            if (!solver.contains(m)) return false;
        }
    return true;
}

std::vector<NcPoly> assoc_free_generators(const GradedPresentation& pres) {
    validate_assoc(pres);
    std::vector<NcPoly> out;
    if (pres.elements.empty() || pres.cap <= 0) return out;
    unsigned long ch = presentation_char(pres);

    std::vector<NcPoly> elems;
    for (auto& [p, tag] : pres.elements) elems.push_back(p);
    if (!monomial_span_check(elems, pres.window, pres.cap))
        throw std::invalid_argument(
            "presentation does not span the window algebra up to the cap");

    // Span of all products of two or more elements, truncated at the cap.
    PolySolver squares(ch);
    auto extend = [&](auto&& self, const NcPoly& prod, long low,
                      std::size_t factors) -> void {
        for (auto& [g, tag] : pres.elements) {
            long next = low + tag;
            if (next > pres.cap) continue;
            NcPoly np = truncate_poly(prod * g, pres.cap);
            if (np.is_zero()) continue;
            if (factors + 1 >= 2) squares.add_row(np);
            self(self, np, next, factors + 1);
        }
    };
    NcPoly unit(ch);
    unit.set_coeff(Word(), Scalar::one(ch));
    extend(extend, unit, 0, 0);

    // Scan tags ascending; keep the elements whose classes extend the span.
    std::vector<std::size_t> idx(pres.elements.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return pres.elements[a].second < pres.elements[b].second;
    });
    for (std::size_t i : idx)
        if (squares.add_row(pres.elements[i].first))
            out.push_back(pres.elements[i].first);
    return out;
}

bool no_right_dependence_check(const std::vector<NcPoly>& gens) {
    if (gens.empty()) return true;
    unsigned long ch = gens.front().characteristic();
    // Products of positive-order elements never reach degree one, so the
    // class of a generator is its degree-one component.
    PolySolver solver(ch);
    for (auto& g : gens) {
        if (g.characteristic() != ch)
            throw FieldMismatchError("inputs over different fields");
        if (!solver.add_row(g.component(1))) return false;
    }
    return true;
}

std::vector<LiePoly> lie_free_generators(const GradedPresentation& pres) {
    std::vector<LiePoly> out;
    if (pres.elements.empty() || pres.cap <= 0) return out;
    validate_lie(pres);
    auto layers = degree_layers(pres);

    // Bracket closure within the cap.
    std::vector<PolySolver> spans;
    spans.reserve(layers.size());
    for (auto& layer : layers) {
        spans.emplace_back(0ul);
        for (auto& p : layer) spans.back().add_row(p);
    }
    for (long a = 1; a < pres.cap; ++a)
        for (long b = a; a + b <= pres.cap; ++b)
            for (auto& e : layers[static_cast<std::size_t>(a)])
                for (auto& f : layers[static_cast<std::size_t>(b)]) {
                    NcPoly br = e * f - f * e;
                    if (!br.is_zero() &&
                        !spans[static_cast<std::size_t>(a + b)].contains(br))
                        throw std::invalid_argument(
                            "presentation is not closed under bracket within the cap");
                }

    // New layer at degree n modulo brackets of lower layers.
    for (long n = 1; n <= pres.cap; ++n) {
        PolySolver generated(0ul);
        for (long a = 1; a < n; ++a)
            for (auto& e : layers[static_cast<std::size_t>(a)])
                for (auto& f : layers[static_cast<std::size_t>(n - a)])
                    generated.add_row(e * f - f * e);
        for (auto& e : layers[static_cast<std::size_t>(n)])
            if (generated.add_row(e)) out.push_back(LiePoly::check(e));
    }
    return out;
}

RelFreeResult relatively_free_check(const std::vector<LiePoly>& gens,
                                    const GradedPresentation& ambient) {
    validate_lie(ambient);
    RelFreeResult res;
    for (auto& g : gens)
        if (!g.carrier().is_homogeneous()) res.all_homogeneous = false;
    auto layers = degree_layers(ambient);

    // Ambient membership, componentwise.
    PolySolver whole(0ul);
    for (auto& layer : layers)
        for (auto& p : layer) whole.add_row(p);
    for (auto& g : gens)
        if (!whole.contains(truncate_poly(g.carrier(), ambient.cap)))
            return res;

    // Derived subalgebra within the cap.
    PolySolver solver(0ul);
    for (long a = 1; a < ambient.cap; ++a)
        for (long b = a; a + b <= ambient.cap; ++b)
            for (auto& e : layers[static_cast<std::size_t>(a)])
                for (auto& f : layers[static_cast<std::size_t>(b)])
                    solver.add_row(e * f - f * e);

    // The classes of the generators must be independent and span.
    for (auto& g : gens)
        if (!solver.add_row(truncate_poly(g.carrier(), ambient.cap)))
            return res;
    for (auto& layer : layers)
        for (auto& p : layer)
            if (!solver.contains(p)) return res;
    res.ok = true;
    return res;
}

GradedMorphism::GradedMorphism(std::vector<LiePoly> source,
                               std::vector<LiePoly> images, long cap)
    : source_(std::move(source)), images_(std::move(images)), cap_(cap) {
    if (source_.size() != images_.size())
        throw std::invalid_argument("generator counts differ");
    for (std::size_t i = 0; i < source_.size(); ++i) {
        if (source_[i].is_zero() || images_[i].is_zero())
            throw std::invalid_argument("morphism generators must be nonzero");
        if (!source_[i].carrier().is_homogeneous() ||
            !images_[i].carrier().is_homogeneous())
            throw std::invalid_argument("morphism generators must be homogeneous");
        if (source_[i].degree() != images_[i].degree())
            throw std::invalid_argument("images must preserve degree");
    }
}

LiePoly GradedMorphism::apply(const LiePoly& u) const {
    if (u.is_zero()) return LiePoly::zero();
    std::vector<long> degs;
    std::vector<NcPoly> args, vals;
    for (std::size_t i = 0; i < source_.size(); ++i) {
        degs.push_back(source_[i].degree());
        args.push_back(source_[i].carrier());
        vals.push_back(images_[i].carrier());
    }
    NcPoly out(0ul);
    for (std::size_t d : u.carrier().support_degrees()) {
        NcPoly comp = u.carrier().component(d);
        auto monos = enumerate_templates(degs, static_cast<long>(d),
                                         static_cast<long>(d));
        PolySolver solver(0ul);
        for (auto& m : monos) solver.add_row(m.eval(args));
        auto coeffs = solver.express(comp);
        if (!coeffs)
            throw std::invalid_argument(
                "element is not generated by the morphism source");
        for (std::size_t i = 0; i < monos.size(); ++i)
            out += (*coeffs)[i] * monos[i].eval(vals);
    }
    return LiePoly::check(out);
}

AutomorphismResult build_graded_automorphism(const std::vector<LiePoly>& from,
                                             const std::vector<LiePoly>& to,
                                             long cap) {
    GradedMorphism forward(from, to, cap);
    if (from.empty())
        return AutomorphismResult{forward, forward, true};

    // Ambient algebra generated by the source, layer by layer up to the cap.
    std::vector<long> degs;
    std::vector<NcPoly> args, vals;
    for (std::size_t i = 0; i < from.size(); ++i) {
        degs.push_back(from[i].degree());
        args.push_back(from[i].carrier());
        vals.push_back(to[i].carrier());
    }
    GradedPresentation ambient;
    ambient.cap = cap;
    for (auto& g : from)
        for (auto& [w, c] : g.carrier().terms())
            for (std::size_t i = 0; i < w.degree(); ++i)
                ambient.window.push_back(w[i]);
    std::sort(ambient.window.begin(), ambient.window.end());
    ambient.window.erase(
        std::unique(ambient.window.begin(), ambient.window.end()),
        ambient.window.end());
    for (long d = 1; d <= cap; ++d) {
        PolySolver layer(0ul);
        for (auto& m : enumerate_templates(degs, d, d)) {
            NcPoly v = m.eval(args);
            if (layer.add_row(v)) ambient.add(v, d);
        }
    }
    if (!relatively_free_check(to, ambient).ok)
        throw std::invalid_argument("images are not relatively free");

    // Inverse images: write each source generator as a bracket polynomial in
    // the images, then evaluate that expression back at the source.
    std::vector<LiePoly> inv_images;
    std::vector<long> img_degs;
    std::vector<NcPoly> img_args;
    for (auto& g : to) {
        img_degs.push_back(g.degree());
        img_args.push_back(g.carrier());
    }
    for (auto& g : from) {
        long d = g.degree();
        auto monos = enumerate_templates(img_degs, d, d);
        PolySolver solver(0ul);
        for (auto& m : monos) solver.add_row(m.eval(img_args));
        auto coeffs = solver.express(g.carrier());
        if (!coeffs)
            throw std::invalid_argument("generator has no preimage within the cap");
        NcPoly y(0ul);
        for (std::size_t i = 0; i < monos.size(); ++i)
            y += (*coeffs)[i] * monos[i].eval(args);
        inv_images.push_back(LiePoly::check(y));
    }
    GradedMorphism inverse(from, inv_images, cap);

    bool verified = true;
    for (std::size_t i = 0; i < from.size(); ++i) {
        if (!(forward.apply(inv_images[i]) == from[i])) verified = false;
        if (!(inverse.apply(to[i]) == from[i])) verified = false;
    }
    return AutomorphismResult{forward, inverse, verified};
}

MembershipResult bounded_membership(const LiePoly& target,
                                    const std::vector<LiePoly>& gens,
                                    long length_cap) {
    if (length_cap < 1)
        throw std::invalid_argument("length cap must be positive");
    MembershipResult res;
    res.expression = LieTemplate(gens.size());
    res.length_cap = length_cap;
    if (target.is_zero()) {
        res.member = true;
        return res;
    }
    if (gens.empty()) return res;

    std::vector<NcPoly> args;
    for (auto& g : gens) args.push_back(g.carrier());
    auto monos = enumerate_templates_by_length(gens.size(), length_cap);
    PolySolver solver(0ul);
    for (auto& m : monos) solver.add_row(m.eval(args));
    auto coeffs = solver.express(target.carrier());
    if (!coeffs) return res;
    res.member = true;
    for (std::size_t i = 0; i < monos.size(); ++i)
        res.expression.add((*coeffs)[i], monos[i]);
    return res;
}

long min_topdegree_of_nonzero_images(const std::vector<LiePoly>& gens,
                                     long length_cap) {
    if (length_cap < 1)
        throw std::invalid_argument("length cap must be positive");
    if (gens.empty()) return kPosInfinity;

    std::vector<NcPoly> args;
    for (auto& g : gens) args.push_back(g.carrier());
    std::vector<NcPoly> values;
    long top = 0;
    for (auto& m : enumerate_templates_by_length(gens.size(), length_cap)) {
        NcPoly v = m.eval(args);
        if (v.is_zero()) continue;
        values.push_back(v);
        top = std::max(top, v.nu_top());
    }
    if (values.empty()) return kPosInfinity;

    PolySolver full(0ul);
    for (auto& v : values) full.add_row(v);
    std::size_t dim = full.rank();

    // The image space meets degrees <= d exactly when killing those degrees
    // drops the rank.
    for (long d = 1; d <= top; ++d) {
        PolySolver high(0ul);
        for (auto& v : values) high.add_row(tail_above(v, d));
        if (high.rank() < dim) return d;
    }
    return top;
}

}  // namespace freealg
