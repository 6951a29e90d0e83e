#pragma once

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include <gmpxx.h>

#include "kazhdan/backend.hpp"

namespace kazhdan {

using Rational = mpq_class;

inline Rational abs_value(const Rational& x) { return abs(x); }
inline double abs_value(double x) { return std::fabs(x); }

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero(double x) { return x == 0.0; }

/// Sparse element of the group ring with float64 or exact rational
/// coefficients. Zero coefficients are never stored.
template <class Scalar>
class RingElem {
public:
    using Terms = std::unordered_map<GroupElementId, Scalar, GroupElementIdHash>;

    RingElem() = default;

    static RingElem term(const GroupElementId& g, const Scalar& c)
    {
        RingElem x;
        x.add_term(g, c);
        return x;
    }

    void add_term(const GroupElementId& g, const Scalar& c)
    {
        if (is_zero(c)) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(g, c);
        if (!inserted) {
            it->second += c;
            if (g.length < it->first.length) {
                // Keep the shortest known expressing word length.
                auto node = terms_.extract(it);
                node.key().length = g.length;
                it = terms_.insert(std::move(node)).position;
            }
            if (is_zero(it->second)) {
                terms_.erase(it);
            }
        }
    }

    Scalar coefficient(const GroupElementId& g) const
    {
        auto it = terms_.find(g);
        return it == terms_.end() ? Scalar(0) : it->second;
    }

    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }

    /// Terms ordered by (recorded length, canonical key); for presentation
    /// backends this is shortlex order of the normal forms.
    std::vector<std::pair<GroupElementId, Scalar>> sorted_terms() const
    {
        std::vector<std::pair<GroupElementId, Scalar>> out(terms_.begin(), terms_.end());
        std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
            if (a.first.length != b.first.length) {
                return a.first.length < b.first.length;
            }
            return a.first.key < b.first.key;
        });
        return out;
    }

    friend bool operator==(const RingElem& a, const RingElem& b)
    {
        if (a.size() != b.size()) {
            return false;
        }
        for (const auto& [g, c] : a.terms_) {
            auto it = b.terms_.find(g);
            if (it == b.terms_.end() || !(it->second == c)) {
                return false;
            }
        }
        return true;
    }

private:
    Terms terms_;
};

template <class Scalar>
RingElem<Scalar> add(const RingElem<Scalar>& x, const RingElem<Scalar>& y)
{
    RingElem<Scalar> z = x;
    for (const auto& [g, c] : y.terms()) {
        z.add_term(g, c);
    }
    return z;
}

template <class Scalar>
RingElem<Scalar> scale(const RingElem<Scalar>& x, const Scalar& s)
{
    RingElem<Scalar> z;
    for (const auto& [g, c] : x.terms()) {
        z.add_term(g, c * s);
    }
    return z;
}

template <class Scalar>
RingElem<Scalar> subtract(const RingElem<Scalar>& x, const RingElem<Scalar>& y)
{
    return add(x, scale(y, Scalar(-1)));
}

/// Linear extension of g -> g^-1.
template <class Scalar>
RingElem<Scalar> star(const RingElem<Scalar>& x, const GroupBackend& backend)
{
    RingElem<Scalar> z;
    for (const auto& [g, c] : x.terms()) {
        z.add_term(backend.invert(g), c);
    }
    return z;
}

/// Convolution product; every resulting id is canonicalized by the backend.
/// Left terms are visited in sorted order so the float path is reproducible.
template <class Scalar>
RingElem<Scalar> multiply(const RingElem<Scalar>& x, const RingElem<Scalar>& y,
                          const GroupBackend& backend)
{
    RingElem<Scalar> z;
    const auto left = x.sorted_terms();
    const auto right = y.sorted_terms();
    for (const auto& [g, a] : left) {
        for (const auto& [h, b] : right) {
            z.add_term(backend.multiply(g, h), a * b);
        }
    }
    return z;
}

/// Coefficient sum; a ring homomorphism to the scalars.
template <class Scalar>
Scalar augmentation(const RingElem<Scalar>& x)
{
    Scalar s(0);
    for (const auto& [g, c] : x.sorted_terms()) {
        s += c;
    }
    return s;
}

template <class Scalar>
Scalar l1_norm(const RingElem<Scalar>& x)
{
    Scalar s(0);
    for (const auto& [g, c] : x.sorted_terms()) {
        s += abs_value(c);
    }
    return s;
}

inline RingElem<double> to_double(const RingElem<Rational>& x)
{
    RingElem<double> z;
    for (const auto& [g, c] : x.terms()) {
        z.add_term(g, c.get_d());
    }
    return z;
}

/// One `coefficient<TAB>word` line per term, in sorted order.
template <class Scalar>
std::string dump(const RingElem<Scalar>& x, const GroupBackend& backend)
{
    std::ostringstream out;
    out.precision(17);
    for (const auto& [g, c] : x.sorted_terms()) {
        out << c << '\t' << backend.format(g) << '\n';
    }
    return out.str();
}

/// The unnormalized Laplacian |S| e - sum_{s in S} s together with S.
struct LaplacianBundle {
    RingElem<Rational> delta;
    std::vector<GroupElementId> generators;
    std::size_t size = 0;
};

/// Builds the Laplacian for the backend's symmetric generating set.
/// Throws InputError if the canonical ids of S are not closed under inverse.
LaplacianBundle laplacian(const GroupBackend& backend);

/// Same for an explicit list of generator ids.
LaplacianBundle laplacian(const GroupBackend& backend, const std::vector<GroupElementId>& generators);

}  // namespace kazhdan
