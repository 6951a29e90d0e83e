#include <doctest.h>

#include "checks.hpp"
#include "kazhdan/ball.hpp"
#include "kazhdan/catalog.hpp"
#include "kazhdan/certify.hpp"

using namespace kazhdan;

namespace {

Rational pow2(int e)
{
    Rational r(1);
    if (e >= 0) {
        mpz_mul_2exp(r.get_num_mpz_t(), r.get_num_mpz_t(), e);
    } else {
        mpz_mul_2exp(r.get_den_mpz_t(), r.get_den_mpz_t(), -e);
    }
    return r;
}

RationalMatrix centering(std::size_t n)
{
    RationalMatrix P(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            P(i, j) = Rational(i == j ? 1 : 0) - Rational(1, static_cast<unsigned long>(n));
        }
    }
    return P;
}

}  // namespace

TEST_CASE("rounding and projection")
{
    SUBCASE("all-ones projects to zero")
    {
        const auto Qp = round_and_project(Eigen::MatrixXd::Ones(4, 4), 32);
        for (const auto& v : Qp.a) {
            CHECK(sgn(v) == 0);
        }
    }
    SUBCASE("a centered dyadic matrix is unchanged")
    {
        Eigen::MatrixXd Q(3, 3);
        Q << 2, -1, -1, -1, 2, -1, -1, -1, 2;
        Q *= 0.25;
        const auto Qp = round_and_project(Q, 32);
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                CHECK(Qp(i, j) == Rational(Q(i, j)));
            }
        }
    }
    SUBCASE("P round(Q) P identity on random matrices")
    {
        const auto r = checks::projection_identity(5);
        CHECK_MESSAGE(r.ok, r.detail);
    }
    SUBCASE("bad rounding bits")
    {
        CHECK_THROWS_AS(round_and_project(Eigen::MatrixXd::Ones(2, 2), 0), InputError);
    }
}

TEST_CASE("exact LDL with shift")
{
    SUBCASE("Q' = P factors without a shift")
    {
        const auto s = exact_ldl_with_shift(centering(5));
        REQUIRE(s.ok);
        CHECK(sgn(s.tau) == 0);
        const auto G = reconstruct_gram(s.factor);
        const auto P = centering(5);
        CHECK(G.a == P.a);
        for (const auto& r : s.factor.r) {
            CHECK(sgn(r) > 0);
        }
    }
    SUBCASE("a deficit of 2^-50 is repaired by tau = 2^-40")
    {
        // P - (1 + 2^-50) v v^T / 2 with v = e0 - e1: eigenvalue -2^-50 along v.
        const std::size_t n = 4;
        RationalMatrix Q = centering(n);
        const Rational c = (1 + pow2(-50)) / 2;
        Q(0, 0) -= c;
        Q(1, 1) -= c;
        Q(0, 1) += c;
        Q(1, 0) += c;
        const auto s = exact_ldl_with_shift(Q);
        REQUIRE(s.ok);
        CHECK(s.tau == pow2(-40));
        const auto G = reconstruct_gram(s.factor);
        const auto P = centering(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                CHECK(G(i, j) == Q(i, j) + s.tau * P(i, j));
            }
        }
    }
    SUBCASE("an indefinite matrix beyond the largest shift fails")
    {
        RationalMatrix Q = centering(3);
        for (auto& v : Q.a) {
            v = -v;
        }
        CHECK_FALSE(exact_ldl_with_shift(Q).ok);
    }
    SUBCASE("zero pivots with vanishing columns are accepted")
    {
        RationalMatrix A(3);
        A(0, 0) = 1;
        A(2, 2) = 2;
        const auto f = exact_ldl(A);
        CHECK(f.ok);
        CHECK(sgn(f.r[1]) == 0);
        RationalMatrix B(2);
        B(0, 1) = B(1, 0) = 1;
        CHECK_FALSE(exact_ldl(B).ok);
    }
}

TEST_CASE("penalty exponent and kappa formatting")
{
    CHECK(penalty_exponent(1) == 1);
    CHECK(penalty_exponent(2) == 2);
    CHECK(penalty_exponent(3) == 3);
    CHECK(penalty_exponent(4) == 3);
    CHECK(penalty_exponent(5) == 4);
    CHECK(kappa_floor_decimal(Rational(278648, 1000000), 12).substr(0, 7) == "0.21550");
    CHECK(kappa_floor_decimal(Rational(129562, 100000), 24).substr(0, 6) == "0.3285");
    CHECK(kappa_floor_decimal(Rational(0), 12) == "0");
    CHECK(kappa_floor_decimal(Rational(2), 4) == "1.0000000000");
}

TEST_CASE("certification of an exact rational solution")
{
    PresetOptions o;
    o.closure_radius = 2;
    const auto p = make_preset("cyclic:3", o);
    const auto problem = assemble(*p.backend, laplacian(*p.backend), enumerate_ball(*p.backend, 1));
    GramSolution sol;
    sol.Q = Eigen::MatrixXd::Zero(3, 3);
    sol.eps = 3.0;
    const auto cert = certify(problem, sol, *p.backend, "cyclic:3", {});
    REQUIRE(cert);
    CHECK(cert->residual.empty());
    CHECK(sgn(cert->tau) == 0);
    CHECK(cert->eps_certified == 3);
    CHECK(cert->D == 1);
    CHECK(verify_certificate(*cert).ok);
}

TEST_CASE("end-to-end on Z/3")
{
    const auto s = checks::solve_preset("cyclic:3", 1);
    REQUIRE(s.certificate);
    CHECK(sgn(s.certificate->tau) == 0);
    CHECK(s.certificate->residual_l1 < Rational(1, 1000000000));
    CHECK(std::fabs(s.certificate->eps_certified_value() - 3.0) < 1e-3);
}

TEST_CASE("penalty with involutions at d=1")
{
    const auto s = checks::solve_preset("coxeter:A2", 1);
    REQUIRE(s.certificate);
    const auto& c = *s.certificate;
    CHECK(c.D == 1);
    CHECK_FALSE(c.involution_free);
    CHECK(c.eps_certified == c.eps_rational - 2 * c.residual_l1);
}

TEST_CASE("involution-free groups use the smaller penalty")
{
    const auto s = checks::solve_preset("ronan:G1", 2);
    REQUIRE(s.certificate);
    const auto& c = *s.certificate;
    CHECK(c.involution_free);
    CHECK(c.D == 2);
    CHECK(c.eps_certified == c.eps_rational - 4 * c.residual_l1);
}

TEST_CASE("certified bound never exceeds the numeric bound")
{
    const auto s = checks::solve_preset("coxeter:A2", 2);
    std::vector<double> certified;
    for (int bits : {20, 30, 40}) {
        CertifyOptions o;
        o.rounding_bits = bits;
        const auto cert = certify(s.problem, s.solution, *s.preset.backend, "coxeter:A2", o);
        REQUIRE(cert);
        CHECK(cert->eps_certified <= Rational(s.solution.eps));
        certified.push_back(cert->eps_certified_value());
    }
    CHECK(certified[0] <= certified[1]);
    CHECK(certified[1] <= certified[2]);
}

TEST_CASE("D is not larger than needed by the residual support")
{
    for (const auto& [name, d] : std::vector<std::pair<std::string, int>>{{"coxeter:A3", 2}, {"coxeter:B2", 3}}) {
        const auto s = checks::solve_preset(name, d);
        REQUIRE(s.certificate);
        int longest = 1;
        for (const auto& [g, c] : s.certificate->residual) {
            longest = std::max(longest, s.certificate->universe_lengths[g]);
        }
        int need = 0;
        while ((1 << need) < longest) {
            ++need;
        }
        CHECK(need <= s.certificate->D);
    }
}

TEST_CASE("soundness with an incomplete rewriting system")
{
    CompletionBudget weak;
    weak.max_rules = 1;
    weak.max_rule_length = 2;
    const auto s = checks::solve_preset("cyclic:3", 1, {}, 32, weak);
    REQUIRE(s.certificate);
    CHECK(verify_certificate(*s.certificate).ok);
    CHECK(s.certificate->eps_certified <= 3);
}

TEST_CASE("certificate reconstruction identity")
{
    const auto r = checks::reconstruction_identity();
    CHECK_MESSAGE(r.ok, r.detail);
}

TEST_CASE("verify rejects tampered certificates")
{
    const auto r = checks::verify_rejects_tampering();
    CHECK_MESSAGE(r.ok, r.detail);
}

TEST_CASE("certificate text round trip")
{
    const auto s = checks::solve_preset("sl:2:F3", 2);
    REQUIRE(s.certificate);
    const std::string text = write_certificate(*s.certificate);
    const Certificate again = read_certificate(text);
    CHECK(write_certificate(again) == text);
    CHECK(verify_certificate(again).ok);
    CHECK_THROWS_AS(read_certificate(text.substr(0, text.size() / 2)), InputError);
}
