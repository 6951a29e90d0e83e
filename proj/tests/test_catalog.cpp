#include <doctest.h>

#include <cmath>
#include <set>

#include "checks.hpp"
#include "kazhdan/catalog.hpp"
#include "kazhdan/reference.hpp"
#include "kazhdan/triangle.hpp"

using namespace kazhdan;

namespace {

std::string data(const std::string& file) { return std::string(KAZHDAN_TEST_DATA) + "/" + file; }

}  // namespace

TEST_CASE("presets")
{
    SUBCASE("ronan:G1")
    {
        const auto p = make_preset("ronan:G1");
        REQUIRE(p.presentation);
        CHECK(p.presentation->relators.size() == 6);
        CHECK(p.generating_set_size == 6);
        CHECK(p.suggested_radius == 1);
        CHECK(p.default_radius == 2);
    }
    SUBCASE("coxeter:A3")
    {
        const auto p = make_preset("coxeter:A3");
        REQUIRE(p.presentation);
        const auto& S = p.presentation->symbols;
        CHECK(p.generating_set_size == 3);
        const std::vector<Word> expect{parse_word(S, "(s1*s2)^3"), parse_word(S, "(s1*s3)^2"),
                                       parse_word(S, "(s2*s3)^3")};
        CHECK(p.presentation->relators == expect);
    }
    SUBCASE("sl:3:Z")
    {
        CHECK(make_preset("sl:3:Z").generating_set_size == 12);
    }
    SUBCASE("steinberg:3")
    {
        const auto p = make_preset("steinberg:3");
        REQUIRE(p.presentation);
        CHECK(p.generating_set_size == 12);
        const auto& S = p.presentation->symbols;
        const auto& rels = p.presentation->relators;
        CHECK(std::find(rels.begin(), rels.end(), parse_relation(S, "[x12,x23] = x13")) != rels.end());
        CHECK(std::find(rels.begin(), rels.end(), parse_relation(S, "[x12,x13]")) != rels.end());
        // 6 commutator-equals relations and 6 commuting pairs (i != l, j != k).
        CHECK(rels.size() == 12);
    }
    SUBCASE("unknown names")
    {
        CHECK_THROWS_AS(make_preset("nosuch:1"), InputError);
        CHECK_THROWS_AS(make_preset("coxeter:Z3"), InputError);
        CHECK_THROWS_AS(make_preset("ronan:G5"), InputError);
        CHECK_THROWS_AS(make_preset("sl:2:F4"), InputError);
    }
    SUBCASE("default radius is known without building")
    {
        for (const char* name : {"coxeter:A3", "coxeter:B3", "gmpn:3:1:2", "ronan:G2", "cyclic:5", "sl:3:Z"}) {
            CHECK(preset_default_radius(name) == make_preset(name).default_radius);
        }
    }
}

TEST_CASE("triangle presentations")
{
    SUBCASE("Fano plane")
    {
        const auto plane = projective_plane(2);
        CHECK(plane.size() == 7);
        for (std::size_t l = 0; l < 7; ++l) {
            int count = 0;
            for (std::size_t x = 0; x < 7; ++x) {
                count += plane.incidence[x][l];
            }
            CHECK(count == 3);
        }
    }
    SUBCASE("generated q=2 presentations are valid and distinct")
    {
        const auto all = generate_triangle_presentations(2);
        REQUIRE_FALSE(all.empty());
        for (const auto& t : all) {
            CHECK_NOTHROW(validate_triangle(t));
            // (B) closure: every cyclic image is present.
            std::set<std::array<int, 3>> set(t.triples.begin(), t.triples.end());
            for (const auto& [x, y, z] : t.triples) {
                CHECK(set.count({y, z, x}) == 1);
            }
            CHECK(t.triples.size() == 21);
            CHECK(triangle_group(t).symbols.size() == 14);
        }
        std::set<std::string> texts;
        for (const auto& t : all) {
            texts.insert(format_triangle(t));
        }
        CHECK(texts.size() == all.size());
    }
    SUBCASE("file round trip")
    {
        const auto t = load_triangle(data("q2_sample.tri"));
        CHECK(parse_triangle(format_triangle(t)).triples == t.triples);
        CHECK(make_preset("a2tilde:" + data("q2_sample.tri")).generating_set_size == 14);
    }
    SUBCASE("q=3 input gives 26 generators")
    {
        const auto t = load_triangle(data("q3_sample.tri"));
        CHECK_NOTHROW(validate_triangle(t));
        CHECK(make_preset("a2tilde:" + data("q3_sample.tri")).generating_set_size == 26);
    }
    SUBCASE("missing cyclic image names the triple")
    {
        CHECK_THROWS_WITH_AS(validate_triangle(load_triangle(data("bad_cyclic.tri"))),
                             doctest::Contains("(2,6,5)"), InputError);
    }
    SUBCASE("two triples on one pair violate (C)")
    {
        CHECK_THROWS_WITH_AS(validate_triangle(load_triangle(data("bad_unique.tri"))),
                             doctest::Contains("(C)"), InputError);
    }
    SUBCASE("syntax errors carry line numbers")
    {
        CHECK_THROWS_WITH_AS(parse_triangle("q: 2\nlambda: x0 => l1\n"), doctest::Contains("line 2"),
                             InputError);
    }
}

TEST_CASE("reference values")
{
    CHECK(eps_q(2).value == doctest::Approx(0.108194).epsilon(1e-5));
    CHECK(a2tilde_kappa(2).value == doctest::Approx(0.465175).epsilon(1e-5));
    CHECK(coxeter_kappa('A', 3).value == doctest::Approx(std::sqrt(24.0 / 60.0)).epsilon(1e-12));
    CHECK(zuk_upper(3).value == doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-12));
    CHECK(gmmn_upper(3, 2).value == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(kassabov_lower_finite(2).value == doctest::Approx(1.0 / (31 * std::sqrt(2.0) + 700)).epsilon(1e-12));
    CHECK(kassabov_lower_finite(2).value == doctest::Approx(0.001344).epsilon(1e-3));
    CHECK(ronan_gap().value == doctest::Approx(0.171573).epsilon(1e-5));
    CHECK(ronan_kappa().value == doctest::Approx(0.239146).epsilon(1e-5));

    SUBCASE("2 - 1/lambda = eps_q")
    {
        const auto r = checks::a2tilde_cross_check();
        CHECK_MESSAGE(r.ok, r.detail);
    }
    SUBCASE("eta witness")
    {
        const auto r = checks::eta_witness();
        CHECK_MESSAGE(r.ok, r.detail);
    }
    SUBCASE("Coxeter normalization fixed by the regular representation")
    {
        // The Cayley graph of A2 is a 6-cycle with gap 2 - 2cos(pi/3) = 1.
        const double gap = checks::regular_representation_gap(*make_preset("coxeter:A2").backend);
        CHECK(coxeter_gap('A', 2).value == doctest::Approx(gap).epsilon(1e-12));
        CHECK(coxeter_gap_alternative('A', 2).value == doctest::Approx(2 * gap).epsilon(1e-12));
        for (const auto& [type, rank] : std::vector<std::pair<char, int>>{{'A', 3}, {'B', 3}, {'D', 4}}) {
            const std::string name = std::string("coxeter:") + type + std::to_string(rank);
            const double g = checks::regular_representation_gap(*make_preset(name).backend);
            CHECK(coxeter_gap(type, rank).value == doctest::Approx(g).epsilon(1e-9));
        }
    }
    SUBCASE("Coxeter numbers")
    {
        CHECK(coxeter_number('A', 4) == 5);
        CHECK(coxeter_number('B', 3) == 6);
        CHECK(coxeter_number('D', 4) == 6);
        CHECK(coxeter_number('E', 8) == 30);
        CHECK(coxeter_number('I', 5) == 5);
    }
}
