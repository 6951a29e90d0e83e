#pragma once

// Independent oracles and property checks shared by the unit tests and the
// acceptance runner.

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "kazhdan/catalog.hpp"
#include "kazhdan/certify.hpp"
#include "kazhdan/sdp.hpp"

namespace kazhdan::checks {

struct Outcome {
    bool ok = true;
    std::string detail;

    void fail(const std::string& what)
    {
        if (ok) {
            detail = what;
        }
        ok = false;
    }
};

/// A finite group given by its multiplication table, used as a concrete
/// image of a presented group.
struct FiniteGroup {
    std::vector<std::vector<int>> elements;  // permutations of {0..k-1}
    std::vector<int> generator_images;       // index per symbol of S
    int identity = 0;

    int index_of(const std::vector<int>& perm) const;
    int multiply(int a, int b) const;  // a then b, as right actions
    int evaluate(const Word& w) const;
    std::size_t order() const { return elements.size(); }
};

/// Closes the given permutations (one per symbol of S) under composition.
FiniteGroup permutation_group(const std::vector<std::vector<int>>& generators);

/// Images of the Coxeter generators of A_n in S_{n+1} and of B_n as signed
/// permutations acting on {0..2n-1}.
FiniteGroup symmetric_group_image(int rank);
FiniteGroup hyperoctahedral_image(int rank);

/// Smallest nonzero eigenvalue of |S| - sum_s s in the right regular
/// representation of a finite group, by enumerating it through the backend.
double regular_representation_gap(const GroupBackend& backend, std::size_t max_order = 2000);

/// Full pipeline on one preset in-process.
struct Solved {
    GroupPreset preset;
    SdpProblem problem;
    GramSolution solution;
    std::optional<Certificate> certificate;
};
Solved solve_preset(const std::string& name, int radius, const SolverParams& params = {},
                    int rounding_bits = 32, const CompletionBudget& budget = {});

Outcome ring_laws(unsigned seed);
Outcome star_laws(unsigned seed);
Outcome float_matches_rational(unsigned seed);
Outcome identification_soundness(unsigned seed);
Outcome projection_identity(unsigned seed);
Outcome reconstruction_identity();
Outcome verify_rejects_tampering();
Outcome a2tilde_cross_check();
Outcome eta_witness();

/// Every property suite above with a label.
std::vector<std::pair<std::string, std::function<Outcome()>>> property_suites();

}  // namespace kazhdan::checks
