// End-to-end acceptance run: eight independent criteria, one line each.
// Exits nonzero when any criterion fails.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "freealg/freelie.hpp"
#include "freealg/liedep.hpp"
#include "freealg/limgen.hpp"
#include "freealg/linalg.hpp"
#include "freealg/parse.hpp"
#include "freealg/weakalg.hpp"

using namespace freealg;

namespace {

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw Failure(what);
}

NcPoly word_poly(const Word& w, unsigned long ch) {
    NcPoly p(ch);
    p.set_coeff(w, Scalar::one(ch));
    return p;
}

NcPoly random_poly(std::mt19937& rng, unsigned long ch, int max_deg) {
    std::uniform_int_distribution<int> deg(0, max_deg), terms(1, 5),
        c(-3, 3), gen(0, 1);
    NcPoly p(ch);
    int n = terms(rng);
    for (int t = 0; t < n; ++t) {
        std::vector<unsigned> letters;
        int d = deg(rng);
        for (int i = 0; i < d; ++i)
            letters.push_back(static_cast<unsigned>(gen(rng)));
        long k = c(rng);
        if (k == 0) k = 1;
        Word w(letters);
        p.set_coeff(w, p.coeff(w) + Scalar::integer(k, ch));
    }
    return p;
}

LiePoly random_homog_lie(std::mt19937& rng, std::size_t d) {
    auto basis = lyndon_basis({0, 1}, d);
    std::uniform_int_distribution<int> c(-2, 2);
    LiePoly p = LiePoly::zero();
    for (auto& b : basis) p = p + Scalar::integer(c(rng), 0) * b;
    if (p.is_zero()) p = basis.front();
    return p;
}

int run_cli(const std::string& args) {
    std::string cmd =
        std::string(FREEALG_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

// 1: the deformed pair x + [x,[x,y]], y + [x,[x,[x,y]]] admits no bracket
// expression of [x,y] through length 4, and its shortest nonzero bracket
// images concentrate in degree 3.
void criterion_1() {
    LiePoly x = LiePoly::generator(0), y = LiePoly::generator(1);
    LiePoly xp = x + bracket(x, bracket(x, y));
    LiePoly yp = y + bracket(x, bracket(x, bracket(x, y)));
    std::vector<LiePoly> gens{xp, yp};

    auto r = bounded_membership(bracket(x, y), gens, 4);
    require(!r.member, "membership should be refuted at length cap 4");
    require(r.length_cap == 4, "refutation must record the length cap");

    require(min_topdegree_of_nonzero_images(gens, 3) == 3,
            "minimal top degree over nonzero images must be 3");

    std::string g = "--gens \"x + [x,[x,y]], y + [x,[x,[x,y]]]\"";
    require(run_cli("membership " + g +
                    " --target \"[x,y]\" --length-cap 4") == 1,
            "CLI membership must exit 1");
    require(run_cli("min-degree " + g + " --length-cap 3") == 0,
            "CLI min-degree must exit 0");
}

// Brute-force oracle: a family is right dependent exactly when its top
// homogeneous parts admit a nontrivial right relation at some single degree,
// or a member vanishes.  Scans a little past the largest member degree.
bool oracle_dependent(const std::vector<NcPoly>& fam, unsigned long ch) {
    long maxd = 0;
    for (auto& a : fam) {
        if (a.is_zero()) return true;
        maxd = std::max(maxd, a.nu_top());
    }
    for (long n = 0; n <= maxd + 2; ++n) {
        PolySolver solver(ch);
        std::size_t rows = 0;
        for (auto& a : fam) {
            long d = a.nu_top();
            if (n < d) continue;
            for (auto& w : words_of_degree(2, static_cast<std::size_t>(n - d))) {
                solver.add_row(a.component(d) * word_poly(w, ch));
                ++rows;
            }
        }
        if (solver.rank() < rows) return true;
    }
    return false;
}

// 2: engine verdicts match the oracle on random families over both fields,
// and every dependent verdict ships a witness that re-verifies.
void criterion_2() {
    std::mt19937 rng(2026);
    std::uniform_int_distribution<int> members(1, 4), coin(0, 9);
    int dependent_seen = 0, independent_seen = 0;
    for (unsigned long ch : {0ul, 5ul}) {
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<NcPoly> fam;
            int q = members(rng);
            for (int i = 0; i < q; ++i)
                fam.push_back(random_poly(rng, ch, 4));
            if (coin(rng) < 4 && q >= 2) {
                // plant a right multiple to keep both verdicts populated
                NcPoly planted =
                    fam[0] * random_poly(rng, ch, 2);
                if (q >= 3) planted += fam[1] * random_poly(rng, ch, 1);
                fam.back() = truncate_poly(planted, 4);
            }
            auto w = family_dependent(fam);
            bool dep = w.kind != DepKind::independent;
            require(dep == oracle_dependent(fam, ch),
                    "verdict disagrees with the brute-force oracle");
            if (dep) {
                require(verify_family_witness(fam, w),
                        "dependent verdict must carry a valid witness");
                ++dependent_seen;
            } else {
                ++independent_seen;
            }
        }
    }
    require(dependent_seen >= 30 && independent_seen >= 30,
            "sample must exercise both verdicts");
}

// 3: extraction on the whole two-letter algebra returns the letters; the
// triangular pair {x, y + x^2} spans every degree and has independent
// degree-one classes.
void criterion_3() {
    GenTable t({"x", "y"});
    auto pres = full_assoc_presentation({0, 1}, 5);
    auto out = assoc_free_generators(pres);
    std::vector<NcPoly> letters{parse_poly("x", t, 0), parse_poly("y", t, 0)};
    require(out == letters, "full-algebra extraction must return the letters");

    std::vector<NcPoly> tri{parse_poly("x", t, 0),
                            parse_poly("y + x^2", t, 0)};
    for (long d = 0; d <= 5; ++d) {
        require(monomial_span_check(tri, {0, 1}, d),
                "triangular pair must span through degree " + std::to_string(d));
        require(words_of_degree(2, static_cast<std::size_t>(d)).size() ==
                    (1ull << d),
                "degree " + std::to_string(d) + " must have 2^d words");
    }
    require(no_right_dependence_check(tri),
            "triangular pair classes must be independent");
}

// 4: geometric inversion is exact below every cap, and relation stripping
// walks the tracked cofactor's order down strictly.
void criterion_4() {
    GenTable t({"x", "y"});
    NcPoly one_plus_x = parse_poly("1 + x", t, 0);
    for (long cap = 3; cap <= 10; ++cap) {
        WindowSeries s(one_plus_x, cap);
        WindowSeries v = series_invert(s);
        NcPoly unit = parse_poly("1", t, 0);
        require(truncate_poly(s.poly() * v.poly(), cap) == unit &&
                    truncate_poly(v.poly() * s.poly(), cap) == unit,
                "two-sided inverse must hold below cap " + std::to_string(cap));
    }

    std::mt19937 rng(11);
    std::uniform_int_distribution<int> members(2, 3);
    long cap = 6;
    for (long k = 2; k <= 4; ++k) {
        // x*y^k against -y^k: the tracked cofactor walks k strips down
        std::vector<WindowSeries> fam{WindowSeries(one_plus_x, cap),
                                      WindowSeries(parse_poly("x + x^2", t, 0),
                                                   cap)};
        std::string yk = "y^" + std::to_string(k);
        std::vector<WindowSeries> cof{
            WindowSeries(parse_poly("x*" + yk, t, 0), cap),
            WindowSeries(parse_poly("0 - " + yk, t, 0), cap)};
        auto res = series_strip_relation(fam, cof);
        require(res.trace.size() == static_cast<std::size_t>(k),
                "tail of order k must strip k times");
        for (std::size_t i = 0; i < res.trace.size(); ++i)
            require(res.trace[i] == k - static_cast<long>(i),
                    "strip trace must walk down one order per step");
    }
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<WindowSeries> fam;
        std::vector<WindowSeries> cof;
        int q = members(rng);
        NcPoly planted(0ul);
        for (int i = 0; i < q - 1; ++i) {
            NcPoly f = random_poly(rng, 0, 2);
            if (f.is_zero()) f = parse_poly("x", t, 0);
            NcPoly c = random_poly(rng, 0, 2);
            fam.emplace_back(f, cap);
            cof.emplace_back(c, cap);
            planted += f * c;
        }
        planted = truncate_poly(planted, cap);
        if (planted.is_zero()) {
            planted = fam[0].poly();
            cof[0] = WindowSeries(parse_poly("1", t, 0), cap);
            for (int i = 1; i < q - 1; ++i)
                cof[i] = WindowSeries(NcPoly(0ul), cap);
        }
        fam.emplace_back(planted, cap);
        cof.emplace_back(parse_poly("0 - 1", t, 0), cap);

        auto w = series_family_dependent(fam);
        require(w.kind != DepKind::independent,
                "planted series family must be dependent");
        require(verify_series_family_witness(fam, w),
                "series witness must re-verify");

        auto res = series_strip_relation(fam, cof);
        for (std::size_t i = 1; i < res.trace.size(); ++i)
            require(res.trace[i] < res.trace[i - 1],
                    "strip trace must decrease strictly");
        NcPoly sum(0ul);
        for (std::size_t i = 0; i < fam.size(); ++i)
            sum += truncate_poly(fam[i].poly() * res.cofactors[i], cap);
        sum += res.remainder;
        require(truncate_poly(sum, cap) == fam[res.pivot].poly(),
                "strip result must reassemble the pivot");
        require(res.remainder.is_zero() ||
                    res.remainder.nu_low() > fam[res.pivot].nu_low(),
                "strip remainder must sit strictly above the pivot order");
    }
}

// Left-normed bracketing of a word, built from plain products only.
NcPoly left_normed(const Word& w) {
    NcPoly acc = word_poly(Word::letter(w[0]), 0);
    for (std::size_t i = 1; i < w.degree(); ++i) {
        NcPoly g = word_poly(Word::letter(w[i]), 0);
        acc = acc * g - g * acc;
    }
    return acc;
}

// 5: the recognizer agrees with Lyndon-span membership on a spanning sample,
// and the graded dimensions match an independent bracketing-rank oracle.
void criterion_5() {
    const std::size_t dims[5] = {2, 1, 2, 3, 6};
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> c(-2, 2);
    for (std::size_t d = 1; d <= 5; ++d) {
        auto basis = lyndon_basis({0, 1}, d);
        require(basis.size() == dims[d - 1],
                "Lyndon basis size must match at degree " + std::to_string(d));

        PolySolver rank_oracle(0);
        PolySolver lyndon_span(0);
        for (auto& b : basis) lyndon_span.add_row(b.carrier());
        auto words = words_of_degree(2, d);
        for (auto& w : words) rank_oracle.add_row(left_normed(w));
        require(rank_oracle.rank() == dims[d - 1],
                "bracketing rank must match at degree " + std::to_string(d));

        std::vector<NcPoly> sample;
        for (auto& w : words) sample.push_back(word_poly(w, 0));
        for (auto& b : basis) sample.push_back(b.carrier());
        for (int trial = 0; trial < 10; ++trial) {
            NcPoly lie(0ul);
            for (auto& b : basis)
                lie += Scalar::integer(c(rng), 0) * b.carrier();
            sample.push_back(lie);
            sample.push_back(lie + word_poly(words[static_cast<std::size_t>(
                                                 trial) % words.size()],
                                             0));
        }
        for (auto& p : sample)
            require(is_lie_element(p) == lyndon_span.contains(p),
                    "recognizer must agree with Lyndon-span membership");
    }
}

// 6: planted homogeneous Lie relations always localize to a pivot whose
// template uses only members of no larger degree and re-evaluates exactly.
void criterion_6() {
    std::mt19937 rng(3);
    std::uniform_int_distribution<std::size_t> deg(1, 2);
    std::uniform_int_distribution<int> c(1, 2), mode(0, 2);
    for (int trial = 0; trial < 100; ++trial) {
        LiePoly p1 = random_homog_lie(rng, deg(rng));
        LiePoly p2 = random_homog_lie(rng, deg(rng));
        LiePoly p3 = random_homog_lie(rng, 2 * deg(rng));
        LiePoly planted = LiePoly::zero();
        int m = mode(rng);
        if (m == 0) planted = bracket(p1, p2);
        if (m == 1) planted = Scalar::integer(c(rng), 0) * p3;
        if (m == 2) {
            planted = bracket(p1, p2);
            if (p3.degree() == planted.degree())
                planted = planted + Scalar::integer(c(rng), 0) * p3;
        }
        std::vector<LiePoly> fam{p1, p2, p3, planted};
        auto w = lie_family_dependent(fam);
        require(w.dependent, "planted family must be dependent");
        require(w.pivot.has_value(), "dependence must localize to a pivot");
        require(verify_lie_family_witness(fam, w),
                "family witness must re-verify");

        std::size_t piv = *w.pivot;
        std::vector<LiePoly> rest;
        for (std::size_t i = 0; i < fam.size(); ++i)
            if (i != piv) rest.push_back(fam[i]);
        if (!w.zero_case) {
            for (auto& [coeff, mono] : w.f.monomials()) {
                auto md = mono.multidegree(rest.size());
                for (std::size_t j = 0; j < rest.size(); ++j)
                    require(md[j] == 0 ||
                                rest[j].degree() <= fam[piv].degree(),
                            "comparands must have no larger degree");
                (void)coeff;
            }
        }

        if (!planted.is_zero()) {
            std::vector<LiePoly> base{p1, p2, p3};
            auto e = express_as_lie(planted, base);
            require(e.dependent, "planted expression must be recovered");
            std::vector<NcPoly> args{p1.carrier(), p2.carrier(),
                                     p3.carrier()};
            require(eval_template(e.f, args) == planted.carrier(),
                    "recovered template must re-evaluate exactly");
        }
    }
}

// 7: the shear x -> x + y, y -> y extends to a graded automorphism whose
// inverse is exact on every Lyndon basis element through degree 4, preserving
// brackets and degrees.
void criterion_7() {
    LiePoly x = LiePoly::generator(0), y = LiePoly::generator(1);
    auto a = build_graded_automorphism({x, y}, {x + y, y}, 4);
    require(a.verified, "construction must verify the inverse on generators");

    std::vector<LiePoly> basis;
    for (std::size_t d = 1; d <= 4; ++d)
        for (auto& b : lyndon_basis({0, 1}, d)) basis.push_back(b);

    for (auto& b : basis) {
        LiePoly fwd = a.forward.apply(b);
        require(!fwd.is_zero() && fwd.carrier().nu_top() == b.degree() &&
                    fwd.carrier().nu_low() == b.degree(),
                "images must stay homogeneous of the same degree");
        require(a.inverse.apply(fwd) == b,
                "inverse of image must restore the basis element");
        LiePoly back = a.inverse.apply(b);
        require(a.forward.apply(back) == b,
                "image of inverse must restore the basis element");
    }
    for (auto& u : basis)
        for (auto& v : basis) {
            if (u.degree() + v.degree() > 4) continue;
            require(a.forward.apply(bracket(u, v)) ==
                        bracket(a.forward.apply(u), a.forward.apply(v)),
                    "images must preserve brackets");
        }
}

// 8: projections to smaller windows accept coherent families, reject any
// single-window corruption, and compose functorially.
void criterion_8() {
    std::vector<std::vector<unsigned>> windows{
        {}, {0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}, {0, 1, 2}};
    std::mt19937 rng(13);
    std::uniform_int_distribution<int> pick(0, 6), gen3(0, 2), dd(1, 3),
        cc(1, 4);

    for (int trial = 0; trial < 100; ++trial) {
        unsigned long ch = trial % 2 == 0 ? 0 : 5;
        std::uniform_int_distribution<int> deg(0, 3), terms(1, 6), k(-3, 3);
        NcPoly global(ch);
        int n = terms(rng);
        for (int t = 0; t < n; ++t) {
            std::vector<unsigned> letters;
            int d = deg(rng);
            for (int i = 0; i < d; ++i)
                letters.push_back(static_cast<unsigned>(gen3(rng)));
            long kk = k(rng);
            if (kk == 0) kk = 1;
            Word w(letters);
            global.set_coeff(w, global.coeff(w) + Scalar::integer(kk, ch));
        }

        std::vector<std::pair<std::vector<unsigned>, NcPoly>> fam;
        for (auto& w : windows) fam.emplace_back(w, project(global, w));
        require(check_compatible(fam), "coherent family must be accepted");

        for (auto& wa : windows)
            for (auto& wb : windows) {
                bool contained = std::includes(wa.begin(), wa.end(),
                                               wb.begin(), wb.end());
                if (!contained) continue;
                require(project(project(global, wa), wb) ==
                            project(global, wb),
                        "projections must compose");
            }

        std::size_t target = static_cast<std::size_t>(pick(rng)) % 7;
        auto& [win, member] = fam[target];
        NcPoly delta(ch);
        std::vector<unsigned> letters;
        int d = dd(rng);
        for (int i = 0; i < d; ++i) {
            if (win.empty()) break;
            letters.push_back(
                win[static_cast<std::size_t>(cc(rng)) % win.size()]);
        }
        delta.set_coeff(Word(letters), Scalar::integer(cc(rng), ch));
        NcPoly corrupted = member + delta;
        require(corrupted != member, "corruption must change the member");
        fam[target].second = corrupted;
        require(!check_compatible(fam), "corrupted family must be rejected");
    }
}

struct Criterion {
    int number;
    std::string label;
    std::function<void()> body;
    double limit_s;
};

}  // namespace

int main() {
    std::vector<Criterion> criteria{
        {1, "deformed pair excludes [x,y] through length 4, first images in degree 3",
         criterion_1, 10.0},
        {2, "dependence verdicts match the brute-force oracle with verified witnesses",
         criterion_2, 120.0},
        {3, "letters extracted from the full algebra; triangular pair spans with free classes",
         criterion_3, 120.0},
        {4, "series inversion exact below every cap; relation stripping strictly monotone",
         criterion_4, 120.0},
        {5, "Lie recognizer matches Lyndon-span membership; graded dimensions 2,1,2,3,6",
         criterion_5, 120.0},
        {6, "planted Lie relations localize with no-larger-degree comparands, exact templates",
         criterion_6, 120.0},
        {7, "shear automorphism inverts exactly on the Lyndon basis through degree 4",
         criterion_7, 120.0},
        {8, "window projections: coherent accepted, corrupted rejected, composition holds",
         criterion_8, 120.0},
    };

    int failures = 0;
    for (auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::string verdict = "PASS";
        std::string reason;
        try {
            c.body();
        } catch (const std::exception& e) {
            verdict = "FAIL";
            reason = e.what();
        }
        double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                          start)
                .count();
        if (verdict == "PASS" && elapsed >= c.limit_s) {
            verdict = "FAIL";
            reason = "exceeded " + std::to_string(c.limit_s) + " s budget";
        }
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(2);
        line << "criterion " << c.number << " [" << verdict << "] ("
             << elapsed << " s): " << c.label;
        if (!reason.empty()) line << " -- " << reason;
        std::cout << line.str() << "\n";
        if (verdict == "FAIL") ++failures;
    }
    return failures == 0 ? 0 : 1;
}
