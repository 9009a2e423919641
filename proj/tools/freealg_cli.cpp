#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "freealg/certify.hpp"
#include "freealg/liedep.hpp"
#include "freealg/limgen.hpp"
#include "freealg/parse.hpp"
#include "freealg/weakalg.hpp"

using namespace freealg;

namespace {

struct Options {
    std::string field = "q";
    std::string gens;
    std::string format = "text";
    bool keep_lie = false;
};

struct Store {
    std::string target, from, to;
    long cap = 0, max_degree = 0, length_cap = 0;
    bool assoc_mode = false, lie_mode = false;
    CLI::App *depend = nullptr, *reduce = nullptr, *sinv = nullptr,
             *sred = nullptr, *lcheck = nullptr, *lexpr = nullptr,
             *ldep = nullptr, *fgen = nullptr, *span = nullptr,
             *relfree = nullptr, *morph = nullptr, *member = nullptr,
             *mindeg = nullptr, *verify = nullptr;
    CLI::Option* depend_cap = nullptr;
};

std::vector<std::string> stdin_lines() {
    std::vector<std::string> out;
    std::string line;
    while (std::getline(std::cin, line)) {
        std::size_t a = line.find_first_not_of(" \t\r\n");
        if (a == std::string::npos) continue;
        std::size_t b = line.find_last_not_of(" \t\r\n");
        out.push_back(line.substr(a, b - a + 1));
    }
    return out;
}

struct Session {
    GenTable table;
    unsigned long ch = 0;
    std::string format;
    bool keep_lie = false;
    std::vector<std::string> gens_entries;

    explicit Session(const Options& opt) {
        ch = field_characteristic(opt.field);
        format = opt.format;
        keep_lie = opt.keep_lie;
        gens_entries = split_top_level(opt.gens, ',');
        // bare names declare alphabet letters up front; expressions may
        // intern further letters, then the alphabet is fixed
        for (auto& e : gens_entries)
            if (is_bare_name(e)) parse_poly(e, table, ch);
        for (auto& e : gens_entries)
            if (!is_bare_name(e)) parse_poly(e, table, ch);
        if (!gens_entries.empty()) table.freeze();
    }

    NcPoly parse(const std::string& s) { return parse_poly(s, table, ch); }

    std::vector<NcPoly> parse_all(const std::vector<std::string>& v) {
        std::vector<NcPoly> out;
        for (auto& s : v) out.push_back(parse(s));
        return out;
    }

    std::vector<LiePoly> parse_lie(const std::vector<std::string>& v) {
        std::vector<LiePoly> out;
        for (auto& s : v) out.push_back(LiePoly::check(parse(s)));
        return out;
    }

    /// Element list for a subcommand: positionals, else stdin, else the
    /// --gens entries themselves.
    std::vector<std::string> elements(const std::vector<std::string>& pos) {
        if (!pos.empty()) return pos;
        auto lines = stdin_lines();
        if (!lines.empty()) return lines;
        return gens_entries;
    }

    std::vector<unsigned> window() const {
        std::vector<unsigned> w;
        for (unsigned g = 0; g < table.size(); ++g) w.push_back(g);
        return w;
    }

    std::string show(const NcPoly& p) const { return to_string(p, table); }

    void emit(const Json& cert, const std::string& text) const {
        if (format == "json")
            std::cout << cert.dump(2) << "\n";
        else
            std::cout << text;
    }
};

void add_shared(CLI::App* sub, Options& opt) {
    sub->add_option("--field", opt.field, "coefficient field: q or gf:p");
    sub->add_option("--gens", opt.gens,
                    "comma-separated generators or generator expressions");
    sub->add_option("--format", opt.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_flag("--keep-lie", opt.keep_lie,
                  "echo bracket inputs unexpanded in text output");
}

void setup(CLI::App& app, Store& st, Options& opt) {
    st.depend = app.add_subcommand(
        "depend", "decide right dependence of a family of elements");
    st.depend_cap = st.depend->add_option(
        "--cap", st.cap, "series cap: use the inverse filtration");

    st.reduce =
        app.add_subcommand("reduce", "reduce an element against a family");
    st.reduce->add_option("--target", st.target, "element to reduce")
        ->required();

    st.sinv = app.add_subcommand("series-invert",
                                 "invert a series below a cap");
    st.sinv->add_option("--cap", st.cap, "truncation cap")->required();

    st.sred = app.add_subcommand(
        "series-reduce", "reduce a series against a family below a cap");
    st.sred->add_option("--target", st.target, "series to reduce")
        ->required();
    st.sred->add_option("--cap", st.cap, "truncation cap")->required();

    st.lcheck =
        app.add_subcommand("lie-check", "is the element a Lie element?");

    st.lexpr = app.add_subcommand(
        "lie-express",
        "express a homogeneous element as a bracket polynomial");
    st.lexpr->add_option("--target", st.target, "element to express")
        ->required();

    st.ldep =
        app.add_subcommand("lie-depend", "decide Lie dependence of a family");

    st.fgen = app.add_subcommand(
        "free-gens", "extract a free generating set from a presentation");
    st.fgen->add_flag("--assoc", st.assoc_mode, "associative algebra mode");
    st.fgen->add_flag("--lie", st.lie_mode, "Lie algebra mode");
    st.fgen->add_option("--max-degree", st.max_degree, "degree cap")
        ->required();

    st.span = app.add_subcommand(
        "span-check", "do products of the elements span every degree?");
    st.span->add_option("--max-degree", st.max_degree, "degree cap")
        ->required();

    st.relfree = app.add_subcommand(
        "relfree-check", "are the classes a basis modulo brackets?");
    st.relfree->add_option("--max-degree", st.max_degree, "degree cap")
        ->required();

    st.morph = app.add_subcommand(
        "automorphism", "build a graded automorphism with verified inverse");
    st.morph->add_option("--from", st.from, "source generators")->required();
    st.morph->add_option("--to", st.to, "their images")->required();
    st.morph->add_option("--max-degree", st.max_degree, "degree cap")
        ->required();

    st.member = app.add_subcommand("membership",
                                   "bounded bracket-polynomial membership");
    st.member->add_option("--target", st.target, "element to test")
        ->required();
    st.member->add_option("--length-cap", st.length_cap,
                          "monomial length cap")
        ->required();

    st.mindeg = app.add_subcommand(
        "min-degree", "minimal top degree over nonzero bracket images");
    st.mindeg->add_option("--length-cap", st.length_cap,
                          "monomial length cap")
        ->required();

    st.verify =
        app.add_subcommand("verify", "re-check certificate files or stdin");

    // extra positionals are collected raw: expressions keep their brackets
    for (auto* sub :
         {st.depend, st.reduce, st.sinv, st.sred, st.lcheck, st.lexpr,
          st.ldep, st.fgen, st.span, st.relfree, st.morph, st.member,
          st.mindeg, st.verify}) {
        sub->allow_extras(true);
        add_shared(sub, opt);
    }
}

std::string describe_dependence(const Session& s, const DependenceWitness& w,
                                const std::vector<std::string>& raw) {
    std::string out;
    if (w.kind == DepKind::independent) return "independent\n";
    out += w.kind == DepKind::family_dependent ? "dependent" : "reducible";
    if (w.zero_member)
        return out + ": member " + std::to_string(*w.zero_member) +
               " is zero\n";
    if (w.zero_case) return out + ": the element is zero\n";
    if (w.pivot) out += " (pivot " + std::to_string(*w.pivot) + ")";
    out += "\n";
    if (s.keep_lie)
        for (std::size_t i = 0; i < raw.size(); ++i)
            out += "  input " + std::to_string(i) + ": " + raw[i] + "\n";
    for (std::size_t i = 0; i < w.cofactors.size(); ++i)
        if (!w.cofactors[i].is_zero())
            out += "  cofactor " + std::to_string(i) + ": " +
                   s.show(w.cofactors[i]) + "\n";
    if (!w.remainder.is_zero())
        out += "  remainder: " + s.show(w.remainder) + "\n";
    return out;
}

std::string describe_template(const LieTemplate& f) {
    return f.empty() ? "0" : f.str();
}

int dispatch(Session& s, const Store& st) {
    if (st.depend->parsed()) {
        auto raw = s.elements(st.depend->remaining());
        auto family = s.parse_all(raw);
        if (st.depend_cap->count() > 0) {
            std::vector<WindowSeries> sf;
            for (auto& p : family) sf.emplace_back(p, st.cap);
            auto w = series_family_dependent(sf);
            s.emit(make_series_dependence_cert(sf, w, s.table),
                   describe_dependence(s, w, raw));
            return w.kind == DepKind::independent ? 1 : 0;
        }
        auto w = family_dependent(family);
        s.emit(make_dependence_cert(family, w, s.table),
               describe_dependence(s, w, raw));
        return w.kind == DepKind::independent ? 1 : 0;
    }

    if (st.reduce->parsed()) {
        NcPoly a = s.parse(st.target);
        auto raw = s.elements(st.reduce->remaining());
        auto family = s.parse_all(raw);
        auto w = right_reduce(a, family);
        s.emit(make_reduction_cert(a, family, w, s.table),
               describe_dependence(s, w, raw));
        return w.kind == DepKind::independent ? 1 : 0;
    }

    if (st.sinv->parsed()) {
        auto raw = s.elements(st.sinv->remaining());
        if (raw.size() != 1)
            throw ParseError("series-invert needs exactly one series");
        WindowSeries in(s.parse(raw[0]), st.cap);
        WindowSeries inv = series_invert(in);
        s.emit(make_series_inverse_cert(in, inv, s.table),
               "inverse below cap " + std::to_string(st.cap) + ": " +
                   s.show(inv.poly()) + "\n");
        return 0;
    }

    if (st.sred->parsed()) {
        WindowSeries a(s.parse(st.target), st.cap);
        auto raw = s.elements(st.sred->remaining());
        std::vector<WindowSeries> family;
        for (auto& p : s.parse_all(raw)) family.emplace_back(p, st.cap);
        auto w = series_reduce(a, family);
        s.emit(make_series_reduction_cert(a, family, w, s.table),
               describe_dependence(s, w, raw));
        return w.kind == DepKind::independent ? 1 : 0;
    }

    if (st.lcheck->parsed()) {
        auto raw = s.elements(st.lcheck->remaining());
        if (raw.size() != 1)
            throw ParseError("lie-check needs exactly one element");
        NcPoly p = s.parse(raw[0]);
        bool lie = is_lie_element(p);
        s.emit(make_lie_check_cert(p, lie, s.table),
               lie ? "Lie element\n" : "not a Lie element\n");
        return lie ? 0 : 1;
    }

    if (st.lexpr->parsed()) {
        LiePoly target = LiePoly::check(s.parse(st.target));
        auto family = s.parse_lie(s.elements(st.lexpr->remaining()));
        auto w = express_as_lie(target, family);
        std::string text =
            w.dependent
                ? "expressible: " + describe_template(w.f) + "\n"
                : "not expressible in the given degrees\n";
        s.emit(make_lie_express_cert(target, family, w, s.table), text);
        return w.dependent ? 0 : 1;
    }

    if (st.ldep->parsed()) {
        auto family = s.parse_lie(s.elements(st.ldep->remaining()));
        auto w = lie_family_dependent(family);
        std::string text = "independent\n";
        if (w.dependent) {
            text = "dependent (pivot " + std::to_string(*w.pivot) + ")";
            text += w.zero_case ? ": member is zero\n"
                                : ": " + describe_template(w.f) + "\n";
        }
        s.emit(make_lie_dependence_cert(family, w, s.table), text);
        return w.dependent ? 0 : 1;
    }

    if (st.fgen->parsed()) {
        if (st.assoc_mode == st.lie_mode)
            throw ParseError("pick exactly one of --assoc/--lie");
        auto raw = s.elements(st.fgen->remaining());
        GradedPresentation pres;
        pres.cap = st.max_degree;
        for (auto& p : s.parse_all(raw)) pres.add(p);
        pres.window = s.window();
        std::vector<NcPoly> out;
        if (st.lie_mode)
            for (auto& p : lie_free_generators(pres))
                out.push_back(p.carrier());
        else
            out = assoc_free_generators(pres);
        std::string text =
            "free generators (" + std::to_string(out.size()) + "):\n";
        for (auto& p : out) text += "  " + s.show(p) + "\n";
        s.emit(make_free_generators_cert(pres, st.lie_mode, out, s.table),
               text);
        return 0;
    }

    if (st.span->parsed()) {
        auto elements = s.parse_all(s.elements(st.span->remaining()));
        bool spans = monomial_span_check(elements, s.window(), st.max_degree);
        s.emit(make_span_check_cert(elements, s.window(), st.max_degree,
                                    spans, s.table),
               spans ? "spans every degree\n" : "fails to span\n");
        return spans ? 0 : 1;
    }

    if (st.relfree->parsed()) {
        auto elements = s.parse_lie(s.elements(st.relfree->remaining()));
        auto ambient = full_lie_presentation(s.window(), st.max_degree);
        auto r = relatively_free_check(elements, ambient);
        std::string text = r.ok ? "relatively free" : "not relatively free";
        if (r.ok && !r.all_homogeneous) text += " (not homogeneous)";
        s.emit(make_relfree_cert(elements, s.window(), st.max_degree, r,
                                 s.table),
               text + "\n");
        return r.ok ? 0 : 1;
    }

    if (st.morph->parsed()) {
        auto from = s.parse_lie(split_top_level(st.from, ','));
        auto to = s.parse_lie(split_top_level(st.to, ','));
        auto a = build_graded_automorphism(from, to, st.max_degree);
        std::string text = "automorphism with two-sided inverse:\n";
        for (std::size_t i = 0; i < from.size(); ++i)
            text += "  " + s.show(from[i].carrier()) + " <- " +
                    s.show(a.inverse.images()[i].carrier()) + "\n";
        s.emit(make_automorphism_cert(a, s.table), text);
        return a.verified ? 0 : 1;
    }

    if (st.member->parsed()) {
        auto generators = s.parse_lie(s.gens_entries);
        LiePoly target = LiePoly::check(s.parse(st.target));
        auto r = bounded_membership(target, generators, st.length_cap);
        std::string text =
            r.member
                ? "member: " + describe_template(r.expression) + "\n"
                : "refuted up to length " + std::to_string(r.length_cap) +
                      "\n";
        s.emit(make_membership_cert(target, generators, r, s.table), text);
        return r.member ? 0 : 1;
    }

    if (st.mindeg->parsed()) {
        auto generators = s.parse_lie(s.gens_entries);
        long v = min_topdegree_of_nonzero_images(generators, st.length_cap);
        std::string text =
            v == kPosInfinity
                ? "all bracket images vanish\n"
                : "minimal top degree: " + std::to_string(v) + "\n";
        s.emit(make_min_degree_cert(generators, st.length_cap, v, s.table),
               text);
        return 0;
    }

    if (st.verify->parsed()) {
        auto files = st.verify->remaining();
        if (files.empty()) {
            bool ok = verify_certificate(Json::parse(std::cin));
            std::cout << (ok ? "accepted" : "rejected") << "\n";
            return ok ? 0 : 1;
        }
        bool all_ok = true;
        for (auto& f : files) {
            std::ifstream in(f);
            if (!in) throw CertificateError("cannot open " + f);
            bool ok = verify_certificate(Json::parse(in));
            std::cout << f << ": " << (ok ? "accepted" : "rejected") << "\n";
            all_ok = all_ok && ok;
        }
        return all_ok ? 0 : 1;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"exact dependence, reduction and freeness engines for free "
                 "associative and free Lie algebras"};
    app.require_subcommand(1);
    app.add_option("--field", opt.field, "coefficient field: q or gf:p")
        ->capture_default_str();
    app.add_option("--gens", opt.gens,
                   "comma-separated generators or generator expressions");
    app.add_option("--format", opt.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_flag("--keep-lie", opt.keep_lie,
                 "echo bracket inputs unexpanded in text output");

    Store st;
    setup(app, st, opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        Session session(opt);
        return dispatch(session, st);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const CertificateError& e) {
        std::cerr << "certificate error: " << e.what() << "\n";
        return 2;
    } catch (const Json::exception& e) {
        std::cerr << "certificate error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
