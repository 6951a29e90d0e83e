#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "kazhdan/presentation.hpp"

namespace kazhdan {

/// Points and lines of PG(2,q) for prime q. Points are the normalized
/// nonzero vectors of F_q^3 (first nonzero coordinate 1) in lexicographic
/// order; line j is the orthogonal complement of the j-th such vector.
struct ProjectivePlane {
    int q = 0;
    std::vector<std::array<int, 3>> points;
    std::vector<std::vector<bool>> incidence;  // [point][line]

    std::size_t size() const { return points.size(); }
};

ProjectivePlane projective_plane(int q);

struct TrianglePresentation {
    int q = 0;
    std::vector<int> lambda;  // point -> line
    std::vector<std::array<int, 3>> triples;
};

/// Checks the range of indices, that lambda is a bijection and axioms
/// (A), (B), (C). Throws InputError naming the offending pair or triple.
void validate_triangle(const TrianglePresentation& t);

/// G_T = < a_x | a_x a_y a_z = 1 for (x,y,z) in T >, one relator per
/// cyclic orbit of triples. Validates first.
PresentationSpec triangle_group(const TrianglePresentation& t);

/// Exhaustive search over bijections lambda and triple sets for q = 2,
/// one representative per orbit of the collineation group GL(3,2).
std::vector<TrianglePresentation> generate_triangle_presentations(int q);

/// File format (one directive per line, `#` comments, 0-based indices):
///     q: 2
///     lambda: x0 -> l3
///     triple: 0 1 2
/// Errors carry line numbers.
TrianglePresentation parse_triangle(std::string_view text);
TrianglePresentation load_triangle(const std::string& path);
std::string format_triangle(const TrianglePresentation& t);

}  // namespace kazhdan
