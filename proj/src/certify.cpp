#include "freealg/certify.hpp"

#include <algorithm>

namespace freealg {

namespace {

Json polys_json(const std::vector<NcPoly>& v, const GenTable& gens) {
    Json a = Json::array();
    for (auto& p : v) a.push_back(to_string(p, gens));
    return a;
}

Json series_json(const std::vector<WindowSeries>& v, const GenTable& gens) {
    Json a = Json::array();
    for (auto& s : v) a.push_back(to_string(s.poly(), gens));
    return a;
}

Json lie_json(const std::vector<LiePoly>& v, const GenTable& gens) {
    Json a = Json::array();
    for (auto& p : v) a.push_back(to_string(p.carrier(), gens));
    return a;
}

GenTable table_from(const Json& cert) {
    GenTable t(cert.at("parameters")
                   .at("gens")
                   .get<std::vector<std::string>>());
    t.freeze();
    return t;
}

unsigned long char_from(const Json& cert) {
    return field_characteristic(
        cert.at("parameters").at("field").get<std::string>());
}

std::vector<NcPoly> polys_from(const Json& arr, GenTable& t, unsigned long ch) {
    std::vector<NcPoly> v;
    for (auto& s : arr) v.push_back(parse_poly(s.get<std::string>(), t, ch));
    return v;
}

std::vector<LiePoly> lies_from(const Json& arr, GenTable& t) {
    std::vector<LiePoly> v;
    for (auto& s : arr)
        v.push_back(LiePoly::check(parse_poly(s.get<std::string>(), t, 0)));
    return v;
}

Scalar scalar_from(const std::string& s, unsigned long ch) {
    GenTable none;
    none.freeze();
    NcPoly c = parse_poly(s, none, ch);
    if (!c.is_zero() && c.nu_top() != 0)
        throw CertificateError("coefficient is not a constant: " + s);
    return c.coeff(Word());
}

const char* kind_name(DepKind k) {
    switch (k) {
        case DepKind::independent: return "independent";
        case DepKind::family_dependent: return "family";
        default: return "element";
    }
}

DepKind kind_from(const std::string& s) {
    if (s == "independent") return DepKind::independent;
    if (s == "family") return DepKind::family_dependent;
    if (s == "element") return DepKind::element_dependent;
    throw CertificateError("unknown dependence kind: " + s);
}

Json dep_witness_json(const DependenceWitness& w, const GenTable& gens) {
    Json j;
    j["kind"] = kind_name(w.kind);
    j["cofactors"] = polys_json(w.cofactors, gens);
    j["remainder"] = to_string(w.remainder, gens);
    j["pivot"] = w.pivot ? Json(*w.pivot) : Json();
    j["zero_member"] = w.zero_member ? Json(*w.zero_member) : Json();
    j["zero_case"] = w.zero_case;
    j["strip_trace"] = w.strip_trace;
    j["cap"] = w.cap;
    return j;
}

DependenceWitness dep_witness_from(const Json& j, GenTable& t,
                                   unsigned long ch) {
    DependenceWitness w;
    w.kind = kind_from(j.at("kind").get<std::string>());
    w.cofactors = polys_from(j.at("cofactors"), t, ch);
    w.remainder = parse_poly(j.at("remainder").get<std::string>(), t, ch);
    if (!j.at("pivot").is_null())
        w.pivot = j.at("pivot").get<std::size_t>();
    if (!j.at("zero_member").is_null())
        w.zero_member = j.at("zero_member").get<std::size_t>();
    w.zero_case = j.at("zero_case").get<bool>();
    w.strip_trace = j.at("strip_trace").get<std::vector<long>>();
    w.cap = j.at("cap").get<long>();
    return w;
}

Json base_cert(const std::string& kind, const GenTable& gens,
               unsigned long ch) {
    Json cert;
    cert["kind"] = kind;
    cert["inputs"] = Json::object();
    cert["witness"] = Json::object();
    cert["parameters"] = {{"field", field_name(ch)}, {"gens", gens.names()}};
    return cert;
}

Json finish(Json cert) {
    cert["verified"] = verify_certificate(cert);
    return cert;
}

/// Sum of family[i] * cofactors[i], with the degree bookkeeping shared by
/// the reduction checks.
NcPoly combination(const std::vector<NcPoly>& family,
                   const std::vector<NcPoly>& cofactors, unsigned long ch) {
    NcPoly sum(ch);
    for (std::size_t i = 0; i < family.size(); ++i)
        sum += family[i] * cofactors[i];
    return sum;
}

}  // namespace

std::string field_name(unsigned long ch) {
    return ch == 0 ? "q" : "gf:" + std::to_string(ch);
}

unsigned long field_characteristic(const std::string& name) {
    if (name == "q") return 0;
    if (name.rfind("gf:", 0) == 0) {
        unsigned long p = 0;
        for (char c : name.substr(3)) {
            if (c < '0' || c > '9')
                throw CertificateError("bad field name: " + name);
            p = p * 10 + static_cast<unsigned long>(c - '0');
            if (p > (1ul << 31)) throw CertificateError("modulus too large");
        }
        if (!is_prime(p)) throw CertificateError("bad field name: " + name);
        return p;
    }
    throw CertificateError("bad field name: " + name);
}

LieMonomial monomial_from_string(const std::string& text) {
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(
                                        static_cast<unsigned char>(text[pos])))
            ++pos;
    };
    auto rec = [&](auto&& self) -> LieMonomial {
        skip();
        if (pos < text.size() && text[pos] == '[') {
            ++pos;
            LieMonomial l = self(self);
            skip();
            if (pos >= text.size() || text[pos] != ',')
                throw CertificateError("expected ',' in monomial: " + text);
            ++pos;
            LieMonomial r = self(self);
            skip();
            if (pos >= text.size() || text[pos] != ']')
                throw CertificateError("expected ']' in monomial: " + text);
            ++pos;
            return LieMonomial::node(l, r);
        }
        if (pos < text.size() && text[pos] == 'b') {
            ++pos;
            std::size_t n = 0, digits = 0;
            while (pos < text.size() && std::isdigit(
                                            static_cast<unsigned char>(text[pos]))) {
                n = n * 10 + static_cast<std::size_t>(text[pos] - '0');
                ++pos;
                ++digits;
            }
            if (digits == 0 || n == 0)
                throw CertificateError("bad slot in monomial: " + text);
            return LieMonomial::leaf(static_cast<unsigned>(n - 1));
        }
        throw CertificateError("bad bracket monomial: " + text);
    };
    LieMonomial m = rec(rec);
    skip();
    if (pos != text.size())
        throw CertificateError("trailing input in monomial: " + text);
    return m;
}

Json template_json(const LieTemplate& f) {
    Json a = Json::array();
    for (auto& [c, m] : f.monomials())
        a.push_back({{"coeff", c.str()}, {"monomial", m.str()}});
    return a;
}

LieTemplate template_from_json(const Json& j, std::size_t arity,
                               unsigned long ch) {
    LieTemplate f(arity);
    for (auto& entry : j) {
        Scalar c = scalar_from(entry.at("coeff").get<std::string>(), ch);
        LieMonomial m =
            monomial_from_string(entry.at("monomial").get<std::string>());
        f.add(c, m);
    }
    return f;
}

Json make_dependence_cert(const std::vector<NcPoly>& family,
                          const DependenceWitness& w, const GenTable& gens) {
    unsigned long ch =
        family.empty() ? 0ul : family.front().characteristic();
    Json cert = base_cert("dependence", gens, ch);
    cert["inputs"]["family"] = polys_json(family, gens);
    cert["witness"] = dep_witness_json(w, gens);
    return finish(std::move(cert));
}

Json make_series_dependence_cert(const std::vector<WindowSeries>& family,
                                 const DependenceWitness& w,
                                 const GenTable& gens) {
    unsigned long ch =
        family.empty() ? 0ul : family.front().characteristic();
    Json cert = base_cert("series-dependence", gens, ch);
    cert["inputs"]["family"] = series_json(family, gens);
    cert["parameters"]["cap"] = w.cap;
    cert["witness"] = dep_witness_json(w, gens);
    return finish(std::move(cert));
}

Json make_reduction_cert(const NcPoly& a, const std::vector<NcPoly>& family,
                         const DependenceWitness& w, const GenTable& gens) {
    Json cert = base_cert("reduction", gens, a.characteristic());
    cert["inputs"]["element"] = to_string(a, gens);
    cert["inputs"]["family"] = polys_json(family, gens);
    cert["witness"] = dep_witness_json(w, gens);
    return finish(std::move(cert));
}

Json make_series_inverse_cert(const WindowSeries& s, const WindowSeries& inv,
                              const GenTable& gens) {
    Json cert = base_cert("series-inverse", gens, s.characteristic());
    cert["inputs"]["series"] = to_string(s.poly(), gens);
    cert["parameters"]["cap"] = s.cap();
    cert["witness"]["inverse"] = to_string(inv.poly(), gens);
    return finish(std::move(cert));
}

Json make_series_reduction_cert(const WindowSeries& a,
                                const std::vector<WindowSeries>& family,
                                const DependenceWitness& w,
                                const GenTable& gens) {
    Json cert = base_cert("series-reduction", gens, a.characteristic());
    cert["inputs"]["element"] = to_string(a.poly(), gens);
    cert["inputs"]["family"] = series_json(family, gens);
    cert["parameters"]["cap"] = w.cap;
    cert["witness"] = dep_witness_json(w, gens);
    return finish(std::move(cert));
}

Json make_lie_check_cert(const NcPoly& p, bool lie, const GenTable& gens) {
    Json cert = base_cert("lie-check", gens, p.characteristic());
    cert["inputs"]["element"] = to_string(p, gens);
    cert["witness"]["lie"] = lie;
    return finish(std::move(cert));
}

Json make_lie_express_cert(const LiePoly& target,
                           const std::vector<LiePoly>& family,
                           const LieDependenceWitness& w,
                           const GenTable& gens) {
    Json cert = base_cert("lie-express", gens, 0);
    cert["inputs"]["target"] = to_string(target.carrier(), gens);
    cert["inputs"]["family"] = lie_json(family, gens);
    cert["witness"]["expressible"] = w.dependent;
    cert["witness"]["zero_case"] = w.zero_case;
    cert["witness"]["template"] = template_json(w.f);
    return finish(std::move(cert));
}

Json make_lie_dependence_cert(const std::vector<LiePoly>& family,
                              const LieDependenceWitness& w,
                              const GenTable& gens) {
    Json cert = base_cert("lie-dependence", gens, 0);
    cert["inputs"]["family"] = lie_json(family, gens);
    cert["witness"]["dependent"] = w.dependent;
    cert["witness"]["zero_case"] = w.zero_case;
    cert["witness"]["pivot"] = w.pivot ? Json(*w.pivot) : Json();
    cert["witness"]["template"] = template_json(w.f);
    return finish(std::move(cert));
}

Json make_free_generators_cert(const GradedPresentation& pres, bool lie_mode,
                               const std::vector<NcPoly>& output,
                               const GenTable& gens) {
    unsigned long ch = pres.elements.empty()
                           ? 0ul
                           : pres.elements.front().first.characteristic();
    Json cert = base_cert("free-generators", gens, ch);
    Json elems = Json::array();
    for (auto& [p, tag] : pres.elements) elems.push_back(to_string(p, gens));
    cert["inputs"]["elements"] = elems;
    cert["parameters"]["mode"] = lie_mode ? "lie" : "assoc";
    cert["parameters"]["max_degree"] = pres.cap;
    cert["parameters"]["window"] = pres.window;
    cert["witness"]["generators"] = polys_json(output, gens);
    return finish(std::move(cert));
}

Json make_span_check_cert(const std::vector<NcPoly>& elements,
                          const std::vector<unsigned>& window, long cap,
                          bool spans, const GenTable& gens) {
    unsigned long ch =
        elements.empty() ? 0ul : elements.front().characteristic();
    Json cert = base_cert("span-check", gens, ch);
    cert["inputs"]["elements"] = polys_json(elements, gens);
    cert["parameters"]["max_degree"] = cap;
    cert["parameters"]["window"] = window;
    cert["witness"]["spans"] = spans;
    return finish(std::move(cert));
}

Json make_relfree_cert(const std::vector<LiePoly>& elements,
                       const std::vector<unsigned>& window, long cap,
                       const RelFreeResult& r, const GenTable& gens) {
    Json cert = base_cert("relfree-check", gens, 0);
    cert["inputs"]["elements"] = lie_json(elements, gens);
    cert["parameters"]["max_degree"] = cap;
    cert["parameters"]["window"] = window;
    cert["witness"]["ok"] = r.ok;
    cert["witness"]["all_homogeneous"] = r.all_homogeneous;
    return finish(std::move(cert));
}

Json make_automorphism_cert(const AutomorphismResult& a, const GenTable& gens) {
    Json cert = base_cert("automorphism", gens, 0);
    cert["inputs"]["from"] = lie_json(a.forward.source(), gens);
    cert["inputs"]["to"] = lie_json(a.forward.images(), gens);
    cert["parameters"]["max_degree"] = a.forward.cap();
    cert["witness"]["inverse_images"] = lie_json(a.inverse.images(), gens);
    cert["witness"]["two_sided"] = a.verified;
    return finish(std::move(cert));
}

Json make_membership_cert(const LiePoly& target,
                          const std::vector<LiePoly>& generators,
                          const MembershipResult& r, const GenTable& gens) {
    Json cert = base_cert("membership", gens, 0);
    cert["inputs"]["target"] = to_string(target.carrier(), gens);
    cert["inputs"]["generators"] = lie_json(generators, gens);
    cert["parameters"]["length_cap"] = r.length_cap;
    cert["witness"]["member"] = r.member;
    cert["witness"]["template"] = template_json(r.expression);
    return finish(std::move(cert));
}

Json make_min_degree_cert(const std::vector<LiePoly>& generators,
                          long length_cap, long value, const GenTable& gens) {
    Json cert = base_cert("min-degree", gens, 0);
    cert["inputs"]["generators"] = lie_json(generators, gens);
    cert["parameters"]["length_cap"] = length_cap;
    cert["witness"]["value"] =
        value == kPosInfinity ? Json() : Json(value);
    return finish(std::move(cert));
}

bool verify_certificate(const Json& cert) {
    std::string kind;
    try {
        kind = cert.at("kind").get<std::string>();
        GenTable t = table_from(cert);
        unsigned long ch = char_from(cert);
        const Json& in = cert.at("inputs");
        const Json& wit = cert.at("witness");

        if (kind == "dependence") {
            auto family = polys_from(in.at("family"), t, ch);
            auto w = dep_witness_from(wit, t, ch);
            if (w.kind == DepKind::independent)
                return family_dependent(family).kind == DepKind::independent;
            return verify_family_witness(family, w);
        }
        if (kind == "series-dependence") {
            long cap = cert.at("parameters").at("cap").get<long>();
            std::vector<WindowSeries> family;
            for (auto& s : in.at("family"))
                family.emplace_back(parse_poly(s.get<std::string>(), t, ch),
                                    cap);
            auto w = dep_witness_from(wit, t, ch);
            if (w.kind == DepKind::independent)
                return series_family_dependent(family).kind ==
                       DepKind::independent;
            return verify_series_family_witness(family, w);
        }
        if (kind == "reduction") {
            NcPoly a = parse_poly(in.at("element").get<std::string>(), t, ch);
            auto family = polys_from(in.at("family"), t, ch);
            auto w = dep_witness_from(wit, t, ch);
            if (w.kind == DepKind::independent)
                return right_reduce(a, family).kind == DepKind::independent;
            if (!verify_element_witness(a, family, w)) return false;
            if (w.cofactors.size() != family.size()) return false;
            return a - combination(family, w.cofactors, ch) == w.remainder;
        }
        if (kind == "series-inverse") {
            long cap = cert.at("parameters").at("cap").get<long>();
            WindowSeries s(parse_poly(in.at("series").get<std::string>(), t,
                                      ch),
                           cap);
            WindowSeries v(
                parse_poly(wit.at("inverse").get<std::string>(), t, ch), cap);
            WindowSeries one(NcPoly::constant(Scalar::one(ch)), cap);
            return s * v == one && v * s == one;
        }
        if (kind == "series-reduction") {
            long cap = cert.at("parameters").at("cap").get<long>();
            WindowSeries a(parse_poly(in.at("element").get<std::string>(), t,
                                      ch),
                           cap);
            std::vector<WindowSeries> family;
            for (auto& s : in.at("family"))
                family.emplace_back(parse_poly(s.get<std::string>(), t, ch),
                                    cap);
            auto w = dep_witness_from(wit, t, ch);
            if (w.kind == DepKind::independent)
                return series_reduce(a, family).kind == DepKind::independent;
            if (!verify_series_element_witness(a, family, w)) return false;
            if (w.cofactors.size() != family.size()) return false;
            NcPoly sum(ch);
            for (std::size_t i = 0; i < family.size(); ++i)
                sum += family[i].poly() * w.cofactors[i];
            return truncate_poly(a.poly() - sum, w.cap) == w.remainder;
        }
        if (kind == "lie-check") {
            NcPoly p = parse_poly(in.at("element").get<std::string>(), t, ch);
            return is_lie_element(p) == wit.at("lie").get<bool>();
        }
        if (kind == "lie-express") {
            LiePoly target = LiePoly::check(
                parse_poly(in.at("target").get<std::string>(), t, 0));
            auto family = lies_from(in.at("family"), t);
            if (!wit.at("expressible").get<bool>())
                return !express_as_lie(target, family).dependent;
            if (wit.at("zero_case").get<bool>()) return target.is_zero();
            LieTemplate f =
                template_from_json(wit.at("template"), family.size(), 0);
            std::vector<NcPoly> args;
            for (auto& q : family) args.push_back(q.carrier());
            return eval_template(f, args) == target.carrier();
        }
        if (kind == "lie-dependence") {
            auto family = lies_from(in.at("family"), t);
            LieDependenceWitness w;
            w.dependent = wit.at("dependent").get<bool>();
            w.zero_case = wit.at("zero_case").get<bool>();
            if (!wit.at("pivot").is_null())
                w.pivot = wit.at("pivot").get<std::size_t>();
            if (!w.dependent)
                return !lie_family_dependent(family).dependent;
            std::size_t arity = family.empty() ? 0 : family.size() - 1;
            w.f = template_from_json(wit.at("template"), arity, 0);
            return verify_lie_family_witness(family, w);
        }
        if (kind == "free-generators") {
            long cap = cert.at("parameters").at("max_degree").get<long>();
            bool lie_mode =
                cert.at("parameters").at("mode").get<std::string>() == "lie";
            GradedPresentation pres;
            pres.cap = cap;
            pres.window = cert.at("parameters")
                              .at("window")
                              .get<std::vector<unsigned>>();
            for (auto& s : in.at("elements"))
                pres.add(parse_poly(s.get<std::string>(), t, ch));
            auto expect = polys_from(wit.at("generators"), t, ch);
            std::vector<NcPoly> got;
            if (lie_mode) {
                for (auto& p : lie_free_generators(pres))
                    got.push_back(p.carrier());
            } else {
                got = assoc_free_generators(pres);
            }
            return got == expect;
        }
        if (kind == "span-check") {
            long cap = cert.at("parameters").at("max_degree").get<long>();
            auto elements = polys_from(in.at("elements"), t, ch);
            auto window = cert.at("parameters")
                              .at("window")
                              .get<std::vector<unsigned>>();
            return monomial_span_check(elements, window, cap) ==
                   wit.at("spans").get<bool>();
        }
        if (kind == "relfree-check") {
            long cap = cert.at("parameters").at("max_degree").get<long>();
            auto elements = lies_from(in.at("elements"), t);
            auto window = cert.at("parameters")
                              .at("window")
                              .get<std::vector<unsigned>>();
            RelFreeResult r =
                relatively_free_check(elements,
                                      full_lie_presentation(window, cap));
            return r.ok == wit.at("ok").get<bool>() &&
                   r.all_homogeneous == wit.at("all_homogeneous").get<bool>();
        }
        if (kind == "automorphism") {
            long cap = cert.at("parameters").at("max_degree").get<long>();
            auto from = lies_from(in.at("from"), t);
            auto to = lies_from(in.at("to"), t);
            auto inv = lies_from(wit.at("inverse_images"), t);
            if (!wit.at("two_sided").get<bool>()) return false;
            GradedMorphism forward(from, to, cap);
            GradedMorphism backward(from, inv, cap);
            for (std::size_t i = 0; i < from.size(); ++i) {
                if (!(forward.apply(inv[i]) == from[i])) return false;
                if (!(backward.apply(to[i]) == from[i])) return false;
            }
            return true;
        }
        if (kind == "membership") {
            long cap = cert.at("parameters").at("length_cap").get<long>();
            LiePoly target = LiePoly::check(
                parse_poly(in.at("target").get<std::string>(), t, 0));
            auto generators = lies_from(in.at("generators"), t);
            if (!wit.at("member").get<bool>())
                return !bounded_membership(target, generators, cap).member;
            LieTemplate f = template_from_json(wit.at("template"),
                                               generators.size(), 0);
            std::vector<NcPoly> args;
            for (auto& q : generators) args.push_back(q.carrier());
            return eval_template(f, args) == target.carrier();
        }
        if (kind == "min-degree") {
            long cap = cert.at("parameters").at("length_cap").get<long>();
            auto generators = lies_from(in.at("generators"), t);
            long got = min_topdegree_of_nonzero_images(generators, cap);
            if (wit.at("value").is_null()) return got == kPosInfinity;
            return got == wit.at("value").get<long>();
        }
    } catch (const CertificateError&) {
        throw;
    } catch (const Json::exception& e) {
        throw CertificateError(std::string("malformed certificate: ") +
                               e.what());
    } catch (const std::exception& e) {
        throw CertificateError(std::string("certificate rejected: ") +
                               e.what());
    }
    throw CertificateError("unknown certificate kind: " + kind);
}

}  // namespace freealg
