#include <doctest.h>

#include <complex>
#include <random>
#include <set>

#include "checks.hpp"
#include "kazhdan/ball.hpp"
#include "kazhdan/catalog.hpp"
#include "kazhdan/fp_backend.hpp"
#include "kazhdan/matrix_backend.hpp"
#include "kazhdan/presentation.hpp"
#include "kazhdan/rewriting.hpp"

using namespace kazhdan;

namespace {

FpGroupBackend fp(const std::string& text, std::size_t closure = 4)
{
    return FpGroupBackend(parse_presentation(text), CompletionBudget{}, closure);
}

Word w(const GeneratorSet& s, const std::string& text) { return parse_word(s, text); }

}  // namespace

TEST_CASE("presentation parsing")
{
    SUBCASE("Ronan G1 has three generator pairs and six relators")
    {
        const auto spec = ronan_presentation(1);
        CHECK(spec.symbols.size() == 6);
        REQUIRE(spec.relators.size() == 6);
        const auto& S = spec.symbols;
        CHECK(spec.relators[0] == w(S, "a^3"));
        CHECK(spec.relators[3] == w(S, "a*b*a*b*A*B"));
        CHECK(spec.relators[5] == w(S, "c*a*c*a*C*A"));
    }
    SUBCASE("generators without relators give a free group")
    {
        const auto spec = parse_presentation("gens: a b\n");
        CHECK(spec.symbols.size() == 4);
        CHECK(spec.relators.empty());
        CHECK_FALSE(spec.symbols.has_involutions());
    }
    SUBCASE("undeclared symbol is rejected with its line")
    {
        CHECK_THROWS_WITH_AS(parse_presentation("gens: a b\nrel: a*d\n"), doctest::Contains("line 2"),
                             InputError);
    }
    SUBCASE("involutions are single symbols")
    {
        const auto spec = coxeter_presentation('A', 3);
        CHECK(spec.symbols.size() == 3);
        CHECK(spec.symbols.inverse(0) == 0);
    }
    SUBCASE("format round trip")
    {
        const auto spec = ronan_presentation(3);
        const auto again = parse_presentation(format_presentation(spec));
        CHECK(again.relators == spec.relators);
    }
}

TEST_CASE("Knuth-Bendix normal forms")
{
    SUBCASE("Z/3 completes with normal forms e, a, a^2")
    {
        const auto B = fp("gens: a\nrel: a^3\n");
        CHECK(B.identification_complete());
        const Ball ball = enumerate_ball(B, 5);
        CHECK(ball.size() == 3);
        CHECK(B.canonicalize(w(B.generators(), "a^3")) == B.identity());
        CHECK(B.canonicalize(w(B.generators(), "A")) == B.canonicalize(w(B.generators(), "a^2")));
    }
    SUBCASE("A2 completes with six normal forms matching S3")
    {
        const auto B = fp(format_presentation(coxeter_presentation('A', 2)));
        CHECK(B.identification_complete());
        const Ball ball = enumerate_ball(B, 10);
        REQUIRE(ball.size() == 6);
        const auto S3 = checks::symmetric_group_image(2);
        std::set<int> images;
        for (const auto& word : ball.words) {
            images.insert(S3.evaluate(word));
        }
        CHECK(images.size() == 6);
    }
    SUBCASE("free group completes with free reduction only")
    {
        const auto spec = parse_presentation("gens: a b\n");
        const RewriteSystem rs = bounded_completion(spec, {});
        CHECK(rs.complete());
        for (const auto& rule : rs.rules()) {
            CHECK(rule.lhs.size() == 2);
            CHECK(rule.rhs.empty());
        }
    }
    SUBCASE("Ronan G1 kills a^3")
    {
        PresetOptions o;
        const auto p = make_preset("ronan:G1", o);
        CHECK(p.backend->canonicalize(w(p.backend->generators(), "a*a*a")) == p.backend->identity());
    }
}

TEST_CASE("x x^-1 is the identity in every backend")
{
    for (const char* name : {"cyclic:4", "free:2", "ronan:G2", "coxeter:B3", "sl:3:Z", "sl:2:F5", "gmpn:4:2:3"}) {
        const auto p = make_preset(name);
        const auto& B = *p.backend;
        for (std::size_t a = 0; a < B.generators().size(); ++a) {
            const Word ww{static_cast<Letter>(a), B.generators().inverse(static_cast<Letter>(a))};
            CHECK_MESSAGE(B.canonicalize(ww) == B.identity(), name);
        }
    }
}

TEST_CASE("matrix backends")
{
    SUBCASE("SL(3,Z): e12 e12^-1 is the identity matrix")
    {
        const auto p = make_preset("sl:3:Z");
        CHECK(p.generating_set_size == 12);
        const auto& B = *p.backend;
        const auto x = B.multiply(B.generator(0), B.generator(1));
        CHECK(x == B.identity());
        const auto m = decode_integer_matrix(x.key);
        CHECK(m == std::vector<mpz_class>{1, 0, 0, 0, 1, 0, 0, 0, 1});
    }
    SUBCASE("SL(2,F3): e12 has order 3")
    {
        const auto p = make_preset("sl:2:F3");
        const auto& B = *p.backend;
        const auto e = B.generator(0);
        CHECK_FALSE(B.multiply(e, e) == B.identity());
        CHECK(B.multiply(B.multiply(e, e), e) == B.identity());
    }
    SUBCASE("integer words match the literal product")
    {
        const auto spec = elementary_matrix_spec(3, std::nullopt);
        const auto B = make_matrix_backend(spec);
        std::mt19937 rng(3);
        for (int trial = 0; trial < 50; ++trial) {
            Word word;
            std::vector<mpz_class> acc{1, 0, 0, 0, 1, 0, 0, 0, 1};
            for (int k = 0; k < 12; ++k) {
                const auto a = static_cast<Letter>(rng() % spec.generators.size());
                word.push_back(a);
                std::vector<mpz_class> next(9, 0);
                for (int i = 0; i < 3; ++i) {
                    for (int j = 0; j < 3; ++j) {
                        for (int l = 0; l < 3; ++l) {
                            next[i * 3 + j] += acc[i * 3 + l] * spec.generators[a].entries[l * 3 + j];
                        }
                    }
                }
                acc = next;
            }
            CHECK(decode_integer_matrix(B->canonicalize(word).key) == acc);
        }
    }
    SUBCASE("non-invertible generator is rejected")
    {
        MatrixGroupSpec spec;
        spec.dimension = 2;
        spec.generators = {{"m", {2, 0, 0, 1}}};
        CHECK_THROWS_AS(make_matrix_backend(spec), InputError);
    }
}

TEST_CASE("monomial backend")
{
    SUBCASE("G(2,1,2): the transposition squares to the identity")
    {
        const auto spec = gmpn_spec(2, 1, 2);
        const auto B = make_monomial_backend(spec);
        bool found = false;
        for (std::size_t a = 0; a < spec.generators.size(); ++a) {
            const auto& g = spec.generators[a].element;
            if (g.perm == std::vector<int>{1, 0} && g.exps == std::vector<int>{0, 0}) {
                found = true;
                const auto x = B->generator(static_cast<Letter>(a));
                CHECK(B->multiply(x, x) == B->identity());
            }
        }
        CHECK(found);
        CHECK(decode_monomial(B->identity().key) == monomial_identity(2));
    }
    SUBCASE("product matches the complex matrix product on random pairs in G(4,2,3)")
    {
        const int m = 4;
        const int n = 3;
        std::mt19937 rng(42);
        auto random_element = [&] {
            MonomialElement e;
            e.perm = {0, 1, 2};
            std::shuffle(e.perm.begin(), e.perm.end(), rng);
            int sum = 0;
            e.exps.resize(n);
            for (int i = 0; i < n; ++i) {
                e.exps[i] = static_cast<int>(rng() % m);
                sum += e.exps[i];
            }
            // G(4,2,3): the exponent sum is divisible by m/p = 2.
            e.exps[0] = (e.exps[0] + sum % 2) % m;
            return e;
        };
        for (int trial = 0; trial < 100; ++trial) {
            const auto x = random_element();
            const auto y = random_element();
            const auto X = realize_monomial(x, m);
            const auto Y = realize_monomial(y, m);
            const auto Z = realize_monomial(monomial_multiply(x, y, m), m);
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < n; ++j) {
                    std::complex<double> v = 0.0;
                    for (int k = 0; k < n; ++k) {
                        v += X[i * n + k] * Y[k * n + j];
                    }
                    CHECK(std::abs(v - Z[i * n + j]) < 1e-12);
                }
            }
            const auto inv = monomial_inverse(x, m);
            CHECK(monomial_multiply(x, inv, m) == monomial_identity(n));
        }
    }
}

TEST_CASE("identification soundness")
{
    const auto r = checks::identification_soundness(7);
    CHECK_MESSAGE(r.ok, r.detail);
}

TEST_CASE("a weaker rewriting budget only loses precision")
{
    for (const auto& [name, d] : std::vector<std::pair<std::string, int>>{{"cyclic:3", 1}, {"coxeter:A2", 2}}) {
        CompletionBudget weak;
        weak.max_rules = 1;
        weak.max_rule_length = 2;
        const auto coarse = checks::solve_preset(name, d, {}, 32, weak);
        const auto fine = checks::solve_preset(name, d);
        CHECK(coarse.problem.n >= fine.problem.n);
        CHECK(coarse.solution.eps <= fine.solution.eps + 1e-6);
        REQUIRE(coarse.certificate);
        CHECK(verify_certificate(*coarse.certificate).ok);
        CHECK(coarse.certificate->eps_certified <= Rational(fine.solution.eps + 1e-6));
    }
}
