#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "kazhdan/backend.hpp"

namespace kazhdan {

/// Matrix group over the integers (arbitrary precision) or a prime field.
struct MatrixGroupSpec {
    struct NamedMatrix {
        std::string name;
        std::vector<long> entries;  // row-major, dimension x dimension
    };

    std::size_t dimension = 0;
    std::optional<long> modulus;  // prime p for F_p; empty for Z
    std::vector<NamedMatrix> generators;
};

/// The elementary matrices I + e_ij and I - e_ij, i != j, in the order
/// e12, e12', e13, e13', ... (primes mark the -1 entry).
MatrixGroupSpec elementary_matrix_spec(std::size_t n, std::optional<long> modulus);

/// Validates the spec (invertibility, closure under inverse) and builds
/// the backend. Throws InputError on violation.
BackendPtr make_matrix_backend(const MatrixGroupSpec& spec);

/// Exact integer matrix used by the Z backend; exposed for tests.
std::vector<mpz_class> decode_integer_matrix(const std::string& key);

/// Element of G(m,p,n): the monomial matrix whose row i has the entry
/// zeta_m^{exps[i]} in column perm[i].
struct MonomialElement {
    std::vector<int> perm;
    std::vector<int> exps;

    friend bool operator==(const MonomialElement&, const MonomialElement&) = default;
};

struct MonomialGroupSpec {
    struct NamedElement {
        std::string name;
        MonomialElement element;
    };

    int m = 1;
    int p = 1;
    int n = 1;
    std::vector<NamedElement> generators;
};

/// Standard generating set of G(m,p,n) plus inverses of the non-involutions.
MonomialGroupSpec gmpn_spec(int m, int p, int n);

MonomialElement monomial_multiply(const MonomialElement& x, const MonomialElement& y, int m);
MonomialElement monomial_inverse(const MonomialElement& x, int m);
MonomialElement monomial_identity(int n);

/// Complex matrix realization, row-major n x n.
std::vector<std::complex<double>> realize_monomial(const MonomialElement& x, int m);

BackendPtr make_monomial_backend(const MonomialGroupSpec& spec);

MonomialElement decode_monomial(const std::string& key);

}  // namespace kazhdan
