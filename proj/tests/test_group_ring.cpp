#include <doctest.h>

#include "checks.hpp"
#include "kazhdan/catalog.hpp"
#include "kazhdan/group_ring.hpp"

using namespace kazhdan;

namespace {

GroupElementId id(const GroupBackend& B, const std::string& word)
{
    return B.canonicalize(parse_word(B.generators(), word));
}

}  // namespace

TEST_CASE("star on the free group")
{
    const auto p = make_preset("free:2");
    const auto& B = *p.backend;
    RingElem<Rational> x;
    x.add_term(B.identity(), 2);
    x.add_term(id(B, "a"), 3);
    RingElem<Rational> expect;
    expect.add_term(B.identity(), 2);
    expect.add_term(id(B, "A"), 3);
    CHECK(star(x, B) == expect);
}

TEST_CASE("(1 - s)(1 - s^-1) = 2e - s - s^-1 for s of infinite order")
{
    const auto p = make_preset("free:1");
    const auto& B = *p.backend;
    RingElem<Rational> x;
    x.add_term(B.identity(), 1);
    x.add_term(id(B, "a"), -1);
    RingElem<Rational> expect;
    expect.add_term(B.identity(), 2);
    expect.add_term(id(B, "a"), -1);
    expect.add_term(id(B, "A"), -1);
    CHECK(multiply(x, star(x, B), B) == expect);
}

TEST_CASE("Laplacian")
{
    SUBCASE("Ronan G1")
    {
        const auto p = make_preset("ronan:G1");
        const auto& B = *p.backend;
        const auto bundle = laplacian(B);
        CHECK(bundle.size == 6);
        RingElem<Rational> expect;
        expect.add_term(B.identity(), 6);
        for (const char* s : {"a", "A", "b", "B", "c", "C"}) {
            expect.add_term(id(B, s), -1);
        }
        CHECK(bundle.delta == expect);
    }
    SUBCASE("Coxeter A3 counts involutions once")
    {
        CHECK(laplacian(*make_preset("coxeter:A3").backend).size == 3);
    }
    SUBCASE("A~2 natural generators")
    {
        CHECK(make_preset("a2tilde:q2").generating_set_size == 14);
    }
    SUBCASE("free group: coefficient of e in Delta^2 is |S|^2 + |S|")
    {
        for (int k = 1; k <= 4; ++k) {
            const auto p = make_preset("free:" + std::to_string(k));
            const auto& B = *p.backend;
            const auto bundle = laplacian(B);
            const auto sq = multiply(bundle.delta, bundle.delta, B);
            const int s = 2 * k;
            CHECK(sq.coefficient(B.identity()) == s * s + s);
            CHECK(augmentation(sq) == 0);
        }
    }
    SUBCASE("a non-symmetric generator list is rejected")
    {
        const auto p = make_preset("free:1");
        CHECK_THROWS_AS(laplacian(*p.backend, {id(*p.backend, "a")}), InputError);
    }
}

TEST_CASE("ring laws over S3 and Z/5")
{
    const auto r = checks::ring_laws(1);
    CHECK_MESSAGE(r.ok, r.detail);
}

TEST_CASE("star is an involutive anti-automorphism")
{
    const auto r = checks::star_laws(2);
    CHECK_MESSAGE(r.ok, r.detail);
}

TEST_CASE("float and exact products agree")
{
    const auto r = checks::float_matches_rational(3);
    CHECK_MESSAGE(r.ok, r.detail);
}
