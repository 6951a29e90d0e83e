#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kazhdan {

/// A closed-form value with its exact expression and where it comes from.
struct ReferenceValue {
    std::string name;
    std::string expression;
    double value = 0.0;
    std::string source;
};

/// Spectral gap parameter of the A~2 groups of order q:
/// 1 - q (sqrt q + 1/sqrt q + 1) / (q^2 + q + 1).
ReferenceValue eps_q(int q);
/// Kazhdan constant sqrt(2 eps_q) of an A~2 group with its natural generators.
ReferenceValue a2tilde_kappa(int q);
/// lambda = 1 - sqrt(q) / (q + 1).
ReferenceValue a2tilde_lambda(int q);

/// Coxeter number of a finite irreducible Coxeter group; family 'I' takes m.
int coxeter_number(char family, int rank);
/// Kazhdan constant of (W, S) from the closed formulas (A,B,D,E,F,H,I).
ReferenceValue coxeter_kappa(char family, int rank);
/// Spectral gap 2(1 - cos(pi/h)), the value consistent with the tabulated
/// sqrt(2 eps/|S|) column.
ReferenceValue coxeter_gap(char family, int rank);
/// The same quantity with the 4(1 - cos(pi/h)) normalization.
ReferenceValue coxeter_gap_alternative(char family, int rank);
/// sqrt(2 * coxeter_gap / rank).
ReferenceValue coxeter_gap_kappa(char family, int rank);

/// Bagno's irreducible-representation constant for G(m,1,n).
ReferenceValue bagno_kappa_hat(int m, int n);
/// Upper bound for kappa(G(m,m,n)) from the eta witness vector.
ReferenceValue gmmn_upper(int m, int n);

ReferenceValue kassabov_lower_finite(int n);  // SL(n, F_p)
ReferenceValue kassabov_lower(int n);         // SL(n, Z)
ReferenceValue zuk_upper(int n);              // SL(n, Z)

/// Ronan group values: conjectured gap (sqrt2 - 1)^2 and kappa (sqrt2 - 1)/sqrt3.
ReferenceValue ronan_gap();
ReferenceValue ronan_kappa();

/// Published bound for a preset at a radius, if one is tabulated:
/// certified and numerical kappa bounds.
struct PublishedBound {
    std::optional<double> certified;
    std::optional<double> numerical;
    std::string source;
};
std::optional<PublishedBound> published_bound(std::string_view preset, int radius);

/// Closed-form comparison values relevant to a preset (may be empty).
std::vector<ReferenceValue> references_for(std::string_view preset);

}  // namespace kazhdan
