#include <random>
#include <vector>

#include "doctest.h"

#include "freealg/certify.hpp"
#include "freealg/liedep.hpp"
#include "freealg/limgen.hpp"
#include "freealg/parse.hpp"
#include "freealg/weakalg.hpp"

using namespace freealg;

namespace {

GenTable table3() { return GenTable({"x", "y", "z"}); }

NcPoly P(const std::string& s, unsigned long ch = 0) {
    GenTable t = table3();
    return parse_poly(s, t, ch);
}

NcPoly random_poly(std::mt19937& rng, unsigned long ch) {
    std::uniform_int_distribution<int> deg(0, 3), terms(1, 6), c(-4, 4),
        gen(0, 2);
    NcPoly p(ch);
    int n = terms(rng);
    for (int t = 0; t < n; ++t) {
        std::vector<unsigned> letters;
        int d = deg(rng);
        for (int i = 0; i < d; ++i)
            letters.push_back(static_cast<unsigned>(gen(rng)));
        Word w(letters);
        long k = c(rng);
        if (k == 0) k = 1;
        Scalar s = ch == 0 && c(rng) > 2 ? Scalar::rational(k, 3)
                                         : Scalar::integer(k, ch);
        p.set_coeff(w, p.coeff(w) + s);
    }
    return p;
}

}  // namespace

TEST_CASE("printed elements parse back unchanged") {
    GenTable t = table3();
    std::mt19937 rng(5);
    for (unsigned long ch : {0ul, 5ul, 13ul}) {
        for (int trial = 0; trial < 100; ++trial) {
            NcPoly p = random_poly(rng, ch);
            CHECK(parse_poly(to_string(p, t), t, ch) == p);
        }
    }
    CHECK(to_string(NcPoly(0), t) == "0");
    CHECK(to_string(P("x^2*y - 3/2*x + 1"), t) == "1 - 3/2*x + x^2*y");
    CHECK(parse_poly("0", t, 0).is_zero());
}

TEST_CASE("bracket template strings parse back unchanged") {
    LiePoly x = LiePoly::generator(0), y = LiePoly::generator(1);
    auto fam = std::vector<LiePoly>{x, y};
    auto w = express_as_lie(LiePoly::check(P("x*y - y*x")), fam);
    REQUIRE(w.dependent);
    for (auto& [c, m] : w.f.monomials()) {
        CHECK(monomial_from_string(m.str()).str() == m.str());
        (void)c;
    }
    LieMonomial m = monomial_from_string("[b1,[b1,b2]]");
    CHECK(m.str() == "[b1,[b1,b2]]");
    CHECK_THROWS_AS(monomial_from_string("[b1"), CertificateError);
    CHECK_THROWS_AS(monomial_from_string("c1"), CertificateError);
}

TEST_CASE("every builder produces a self-verifying certificate") {
    GenTable t = table3();
    LiePoly x = LiePoly::generator(0), y = LiePoly::generator(1);

    SUBCASE("dependence, both verdicts") {
        std::vector<NcPoly> dep{P("x"), P("x*y")};
        auto cert = make_dependence_cert(dep, family_dependent(dep), t);
        CHECK(cert["verified"] == true);
        CHECK(verify_certificate(cert));
        std::vector<NcPoly> ind{P("x"), P("y")};
        cert = make_dependence_cert(ind, family_dependent(ind), t);
        CHECK(cert["verified"] == true);
        CHECK(verify_certificate(cert));
    }
    SUBCASE("series dependence") {
        std::vector<WindowSeries> fam{WindowSeries(P("1 + x"), 5),
                                      WindowSeries(P("x + x^2"), 5)};
        auto cert =
            make_series_dependence_cert(fam, series_family_dependent(fam), t);
        CHECK(cert["verified"] == true);
        CHECK(verify_certificate(cert));
    }
    SUBCASE("reduction") {
        NcPoly a = P("x*y + y + 1");
        std::vector<NcPoly> fam{P("x"), P("y")};
        auto cert = make_reduction_cert(a, fam, right_reduce(a, fam), t);
        CHECK(cert["verified"] == true);
        CHECK(verify_certificate(cert));
    }
    SUBCASE("series inverse") {
        WindowSeries s(P("1 + x + y"), 4);
        auto cert = make_series_inverse_cert(s, series_invert(s), t);
        CHECK(cert["verified"] == true);
        CHECK(verify_certificate(cert));
    }
    SUBCASE("series reduction") {
        WindowSeries a(P("y*x + x^3"), 4);
        std::vector<WindowSeries> fam{WindowSeries(P("x"), 4),
                                      WindowSeries(P("y"), 4)};
        auto cert = make_series_reduction_cert(a, fam, series_reduce(a, fam), t);
        CHECK(cert["verified"] == true);
        CHECK(verify_certificate(cert));
    }
    SUBCASE("lie check") {
        for (auto s : {"x*y - y*x", "x*y"}) {
            NcPoly p = P(s);
            auto cert = make_lie_check_cert(p, is_lie_element(p), t);
            CHECK(cert["verified"] == true);
            CHECK(verify_certificate(cert));
        }
    }
    SUBCASE("lie expression") {
        LiePoly target = bracket(x, bracket(x, y));
        std::vector<LiePoly> fam{x, y};
        auto cert =
            make_lie_express_cert(target, fam, express_as_lie(target, fam), t);
        CHECK(cert["verified"] == true);
        CHECK(verify_certificate(cert));
    }
    SUBCASE("lie dependence") {
        std::vector<LiePoly> fam{x, y, bracket(x, y)};
        auto cert =
            make_lie_dependence_cert(fam, lie_family_dependent(fam), t);
        CHECK(cert["verified"] == true);
        CHECK(verify_certificate(cert));
    }
    SUBCASE("free generators, both modes") {
        GradedPresentation pres;
        pres.window = {0, 1};
        pres.cap = 3;
        pres.add(P("x"));
        pres.add(P("y + x^2"));
        auto out = assoc_free_generators(pres);
        auto cert = make_free_generators_cert(pres, false, out, t);
        CHECK(cert["verified"] == true);
        CHECK(verify_certificate(cert));

        GradedPresentation lp;
        lp.window = {0, 1};
        lp.cap = 2;
        lp.add(P("x"));
        lp.add(P("y"));
        lp.add(P("x*y - y*x"));
        std::vector<NcPoly> lout;
        for (auto& g : lie_free_generators(lp)) lout.push_back(g.carrier());
        cert = make_free_generators_cert(lp, true, lout, t);
        CHECK(cert["verified"] == true);
        CHECK(verify_certificate(cert));
    }
    SUBCASE("span check") {
        std::vector<NcPoly> els{P("x"), P("y + x^2")};
        bool spans = monomial_span_check(els, {0, 1}, 4);
        auto cert = make_span_check_cert(els, {0, 1}, 4, spans, t);
        CHECK(cert["verified"] == true);
        CHECK(verify_certificate(cert));
    }
    SUBCASE("relatively free check") {
        std::vector<LiePoly> els{x + bracket(x, bracket(x, y)), y};
        auto ambient = full_lie_presentation({0, 1}, 3);
        auto cert =
            make_relfree_cert(els, {0, 1}, 3,
                              relatively_free_check(els, ambient), t);
        CHECK(cert["verified"] == true);
        CHECK(verify_certificate(cert));
    }
    SUBCASE("automorphism") {
        auto a = build_graded_automorphism({x, y}, {x + y, y}, 3);
        auto cert = make_automorphism_cert(a, t);
        CHECK(cert["verified"] == true);
        CHECK(verify_certificate(cert));
    }
    SUBCASE("membership, both verdicts") {
        std::vector<LiePoly> gens{x, y};
        LiePoly target = bracket(x, y);
        auto cert = make_membership_cert(
            target, gens, bounded_membership(target, gens, 2), t);
        CHECK(cert["verified"] == true);
        CHECK(verify_certificate(cert));

        std::vector<LiePoly> prim{x + bracket(x, bracket(x, y)),
                                  y + bracket(x, bracket(x, bracket(x, y)))};
        cert = make_membership_cert(target, prim,
                                    bounded_membership(target, prim, 4), t);
        CHECK(cert["verified"] == true);
        CHECK(verify_certificate(cert));
    }
    SUBCASE("minimal top degree") {
        std::vector<LiePoly> gens{bracket(x, y)};
        long v = min_topdegree_of_nonzero_images(gens, 2);
        auto cert = make_min_degree_cert(gens, 2, v, t);
        CHECK(cert["verified"] == true);
        CHECK(verify_certificate(cert));

        v = min_topdegree_of_nonzero_images({}, 2);
        cert = make_min_degree_cert({}, 2, v, t);
        CHECK(cert["verified"] == true);
        CHECK(verify_certificate(cert));
    }
}

TEST_CASE("doctored certificates are rejected") {
    GenTable t = table3();
    std::vector<NcPoly> dep{P("x"), P("x*y")};
    Json cert = make_dependence_cert(dep, family_dependent(dep), t);

    SUBCASE("wrong cofactor") {
        cert["witness"]["cofactors"][0] = "x + y";
        CHECK_FALSE(verify_certificate(cert));
    }
    SUBCASE("verdict flip") {
        cert["witness"]["kind"] = "independent";
        CHECK_FALSE(verify_certificate(cert));
    }
    SUBCASE("inputs swapped for an independent family") {
        cert["inputs"]["family"] = Json::array({"x", "y"});
        CHECK_FALSE(verify_certificate(cert));
    }
    SUBCASE("missing witness") {
        cert.erase("witness");
        CHECK_THROWS_AS(verify_certificate(cert), CertificateError);
    }
    SUBCASE("unknown kind") {
        cert["kind"] = "mystery";
        CHECK_THROWS_AS(verify_certificate(cert), CertificateError);
    }
    SUBCASE("field mismatch breaks parsing") {
        cert["parameters"]["field"] = "gf:bogus";
        CHECK_THROWS_AS(verify_certificate(cert), CertificateError);
    }
    SUBCASE("membership template must evaluate exactly") {
        LiePoly x = LiePoly::generator(0), y = LiePoly::generator(1);
        std::vector<LiePoly> gens{x, y};
        LiePoly target = bracket(x, y);
        Json m = make_membership_cert(
            target, gens, bounded_membership(target, gens, 2), t);
        m["witness"]["template"][0]["coeff"] = "7";
        CHECK_FALSE(verify_certificate(m));
    }
    SUBCASE("automorphism inverse images are checked") {
        LiePoly x = LiePoly::generator(0), y = LiePoly::generator(1);
        auto a = build_graded_automorphism({x, y}, {x + y, y}, 3);
        Json m = make_automorphism_cert(a, t);
        m["witness"]["inverse_images"][0] = "x + y";
        CHECK_FALSE(verify_certificate(m));
    }
    SUBCASE("free generator lists are re-derived") {
        GradedPresentation pres;
        pres.window = {0, 1};
        pres.cap = 3;
        pres.add(P("x"));
        pres.add(P("y + x^2"));
        auto out = assoc_free_generators(pres);
        Json m = make_free_generators_cert(pres, false, out, t);
        m["witness"]["generators"][0] = "y";
        CHECK_FALSE(verify_certificate(m));
    }
}
