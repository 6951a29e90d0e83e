#include <doctest.h>

#include <map>

#include "checks.hpp"
#include "kazhdan/ball.hpp"
#include "kazhdan/catalog.hpp"
#include "kazhdan/sdp.hpp"

using namespace kazhdan;

namespace {

SdpProblem problem_for(const std::string& name, int d)
{
    PresetOptions o;
    o.closure_radius = 2 * static_cast<std::size_t>(d);
    const auto p = make_preset(name, o);
    return assemble(*p.backend, laplacian(*p.backend), enumerate_ball(*p.backend, d));
}

}  // namespace

TEST_CASE("assembly sizes")
{
    const auto z3 = problem_for("cyclic:3", 1);
    CHECK(z3.n == 3);
    CHECK(z3.constraint_count() == 3);
    CHECK(z3.orbits.size() == 2);  // {e} and {a, a^2}
    CHECK(problem_for("a2tilde:q2", 1).n == 15);
    const auto p = make_preset("cyclic:3");
    CHECK_THROWS_AS(assemble(*p.backend, laplacian(*p.backend), enumerate_ball(*p.backend, 0)), InputError);
}

TEST_CASE("exact spectral gap on groups covered by the ball")
{
    SUBCASE("Z/3 with d=1")
    {
        const double gap = checks::regular_representation_gap(*make_preset("cyclic:3").backend);
        CHECK(gap == doctest::Approx(3.0).epsilon(1e-12));
        const auto s = checks::solve_preset("cyclic:3", 1);
        CHECK(s.solution.converged);
        CHECK(std::fabs(s.solution.eps - gap) < 1e-6);
    }
    SUBCASE("Coxeter A2 with d=3")
    {
        const double gap = checks::regular_representation_gap(*make_preset("coxeter:A2").backend);
        CHECK(gap == doctest::Approx(1.0).epsilon(1e-12));
        const auto s = checks::solve_preset("coxeter:A2", 3);
        CHECK(std::fabs(s.solution.eps - gap) < 1e-4);
    }
    SUBCASE("G(3,3,2) with d=3")
    {
        const auto p = make_preset("gmpn:3:3:2");
        const double gap = checks::regular_representation_gap(*p.backend);
        const auto s = checks::solve_preset("gmpn:3:3:2", 3);
        CHECK(std::fabs(s.solution.eps - gap) < 1e-4);
    }
}

TEST_CASE("the bound does not decrease with the radius")
{
    const auto d2 = checks::solve_preset("sl:2:F5", 2);
    const auto d3 = checks::solve_preset("sl:2:F5", 3);
    CHECK(d2.solution.eps <= d3.solution.eps + 1e-6);
    CHECK(std::sqrt(2 * d2.solution.eps / 4) == doctest::Approx(0.2580).epsilon(1e-3));
    CHECK(std::sqrt(2 * d3.solution.eps / 4) == doctest::Approx(0.6180).epsilon(1e-3));
}

TEST_CASE("SL(2,F7) at d=2 has almost no gap")
{
    const auto s = checks::solve_preset("sl:2:F7", 2);
    CHECK(s.solution.eps < 0.01);
}

TEST_CASE("constraint residuals of the solution are small")
{
    const auto s = checks::solve_preset("coxeter:A3", 2);
    CHECK(s.solution.converged);
    CHECK(max_abs(constraint_residuals(s.problem, s.solution.Q, s.solution.eps)) < 1e-7);
    CHECK(s.solution.min_eigenvalue > -1e-6);
}

TEST_CASE("solver parameters are validated")
{
    const auto z3 = problem_for("cyclic:3", 1);
    SolverParams bad;
    bad.over_relaxation = 2.5;
    CHECK_THROWS_AS(solve_internal(z3, bad), InputError);
    bad = {};
    bad.tolerance = 0;
    CHECK_THROWS_AS(solve_internal(z3, bad), InputError);
}

TEST_CASE("SDPA export")
{
    const auto prob = problem_for("coxeter:A3", 2);
    const SdpaData data = parse_sdpa(export_sdpa(prob));
    CHECK(data.constraints == prob.orbits.size());
    CHECK(data.block_sizes == std::vector<long>{static_cast<long>(prob.n), 1});

    // Expected constraint tuples straight from the fibers.
    std::vector<SdpaData::Entry> expect{{0, 2, 1, 1, 1.0}};
    for (std::size_t k = 0; k < prob.orbits.size(); ++k) {
        const auto& o = prob.orbits[k];
        std::map<std::pair<std::size_t, std::size_t>, double> cells;
        for (auto [i, j] : prob.table->fiber(o.g)) {
            if (i <= j) {
                cells[{i + 1, j + 1}] = o.g == o.inverse ? 1.0 : 0.5;
            }
        }
        if (o.g != o.inverse) {
            for (auto [i, j] : prob.table->fiber(o.inverse)) {
                if (i <= j) {
                    cells[{i + 1, j + 1}] = 0.5;
                }
            }
        }
        for (const auto& [ij, v] : cells) {
            expect.push_back({k + 1, 1, ij.first, ij.second, v});
        }
        if (o.laplacian != 0) {
            expect.push_back({k + 1, 2, 1, 1, o.laplacian});
        }
        CHECK(data.rhs[k] == o.target);
    }
    auto sorted = [](std::vector<SdpaData::Entry> v) {
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
            return std::tie(a.matrix, a.block, a.i, a.j) < std::tie(b.matrix, b.block, b.i, b.j);
        });
        return v;
    };
    CHECK(sorted(data.entries) == sorted(expect));
    CHECK(parse_sdpa(export_sdpa(prob)).entries == data.entries);
}

TEST_CASE("solution import")
{
    const auto z3 = problem_for("cyclic:3", 1);
    SUBCASE("hand-written exact solution for Z/3")
    {
        // Delta^2 = 3 Delta on Z/3, so Q = 0 with eps = 3 is optimal.
        const auto sol = import_solution(z3, "2 1 1 3\n");
        CHECK(sol.eps == 3.0);
        CHECK(sol.Q.norm() == 0.0);
        CHECK(sol.converged);
    }
    SUBCASE("CSDP-style solution file")
    {
        const auto sol = import_solution(z3, "0.1 0.2\n1 2 1 1 0.5\n2 2 1 1 3\n");
        CHECK(sol.eps == 3.0);
    }
    SUBCASE("a violated constraint is rejected")
    {
        CHECK_THROWS_AS(import_solution(z3, "2 1 1 3.01\n"), InputError);
    }
    SUBCASE("internal solution written out and read back")
    {
        const auto s = checks::solve_preset("coxeter:A2", 2);
        std::ostringstream text;
        text.precision(17);
        const auto n = s.problem.n;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i; j < n; ++j) {
                text << "1 " << i + 1 << ' ' << j + 1 << ' ' << s.solution.Q(i, j) << '\n';
            }
        }
        text << "2 1 1 " << s.solution.eps << '\n';
        const auto sol = import_solution(s.problem, text.str());
        CHECK(sol.eps == doctest::Approx(s.solution.eps));
        CHECK((sol.Q - s.solution.Q).norm() < 1e-12);
    }
}
