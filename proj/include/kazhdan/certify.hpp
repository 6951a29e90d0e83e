#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "kazhdan/group_ring.hpp"
#include "kazhdan/sdp.hpp"

namespace kazhdan {

/// Dense square matrix of exact rationals, row-major.
struct RationalMatrix {
    std::size_t n = 0;
    std::vector<Rational> a;

    RationalMatrix() = default;
    explicit RationalMatrix(std::size_t size) : n(size), a(size * size, Rational(0)) {}
    Rational& operator()(std::size_t i, std::size_t j) { return a[i * n + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }
};

/// Q' = P round(Q) P with P = I - J/n and entries of round(Q) in 2^-bits Z.
/// Every row and column of Q' sums to zero exactly.
RationalMatrix round_and_project(const Eigen::MatrixXd& Q, int bits);

/// Exact factorization A = L diag(r) L^T of a symmetric matrix, L unit
/// lower triangular. `ok` is false when A is not PSD (negative pivot, or a
/// zero pivot with a nonzero column below it).
struct LdlFactor {
    std::size_t m = 0;
    std::vector<Rational> lower;  // strictly lower part, row-major packed
    std::vector<Rational> r;
    bool ok = false;
    double min_pivot = 0.0;

    const Rational& L(std::size_t i, std::size_t j) const { return lower[i * (i - 1) / 2 + j]; }
};

/// Fraction-free (Bareiss) LDL; zero pivots are accepted when the rest of
/// their column vanishes.
LdlFactor exact_ldl(const RationalMatrix& A);

/// Factorization of Q' + tau P through the deflation Q' = W^T K W with
/// W = [I_{n-1} | -1] and K the leading (n-1) block. tau is the first value
/// of {0, 2^-40, 2^-36, ..., 2^-8} giving a PSD factorization.
struct ShiftedLdl {
    LdlFactor factor;
    Rational tau;
    bool ok = false;
    double min_pivot = 0.0;  // of the last failed attempt
};
ShiftedLdl exact_ldl_with_shift(const RationalMatrix& Qp);

/// The Gram matrix W^T L diag(r) L^T W (size m + 1) rebuilt from factors.
RationalMatrix reconstruct_gram(const LdlFactor& f);

/// c_g = t_g - eps u_g - sum_{(i,j) in F_g} G_ij for every universe g.
std::vector<Rational> residual(const SdpProblem& problem, const Rational& eps, const RationalMatrix& G);

/// Least D with 2d <= 2^D.
int penalty_exponent(int radius);

/// floor(10^10 sqrt(2 eps / |S|)) / 10^10 as a decimal string; "0" for
/// eps <= 0.
std::string kappa_floor_decimal(const Rational& eps, std::size_t generating_set_size);

struct Certificate {
    std::string group;
    std::size_t generating_set_size = 0;
    int radius = 0;
    bool involution_free = false;
    bool identification_complete = false;
    int rounding_bits = 32;
    double eps_numeric = 0.0;
    Rational eps_rational;
    Rational tau;

    std::size_t n = 0;
    std::vector<std::string> universe_words;  // display form
    std::vector<int> universe_lengths;
    std::vector<std::uint32_t> generators;    // ball index of each s in S
    std::vector<std::uint32_t> pairing;       // n x n universe indices
    LdlFactor factor;

    std::vector<std::pair<std::uint32_t, Rational>> residual;  // nonzero c_g
    Rational residual_l1;
    int D = 0;
    Rational eps_certified;
    std::string kappa_certified;  // truncated decimal

    double kappa_certified_value() const;
    double eps_certified_value() const { return eps_certified.get_d(); }
};

struct CertifyOptions {
    int rounding_bits = 32;
};

/// Full certification of a numeric solution. Never throws for a bad
/// solution: a failed factorization yields `nullopt` with the reason in
/// `failure`.
std::optional<Certificate> certify(const SdpProblem& problem, const GramSolution& solution,
                                   const GroupBackend& backend, const std::string& group,
                                   const CertifyOptions& options, std::string* failure = nullptr);

std::string write_certificate(const Certificate& cert);
Certificate read_certificate(const std::string& text);

struct VerifyResult {
    bool ok = false;
    std::string message;
};

/// Re-derives Delta, Delta^2, the Gram element, the residual, its norm and
/// the penalized bound from the certificate data alone.
VerifyResult verify_certificate(const Certificate& cert);

}  // namespace kazhdan
