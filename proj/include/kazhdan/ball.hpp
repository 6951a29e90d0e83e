#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "kazhdan/backend.hpp"

namespace kazhdan {

/// Elements of word length <= radius: identity first, then by length, then
/// shortlex by their first-found (shortlex-minimal) word.
struct Ball {
    int radius = 0;
    std::vector<GroupElementId> elements;
    std::vector<Word> words;

    std::size_t size() const { return elements.size(); }
};

/// Breadth-first enumeration over S with canonicalization-based dedup.
Ball enumerate_ball(const GroupBackend& backend, int radius);

/// The map (u, v) -> u^-1 v over a ball, indexed into the support universe
/// {u^-1 v}. Universe indices 0..n-1 coincide with the ball order. The
/// ordered pairs are also stored grouped by product (fibers).
class PairingTable {
public:
    PairingTable() = default;
    PairingTable(const GroupBackend& backend, const Ball& ball);

    std::size_t ball_size() const { return n_; }
    std::size_t universe_size() const { return universe_.size(); }

    std::uint32_t product(std::size_t i, std::size_t j) const { return product_[i * n_ + j]; }
    std::uint32_t inverse(std::uint32_t g) const { return inverse_[g]; }
    const GroupElementId& element(std::uint32_t g) const { return universe_[g]; }
    const std::vector<GroupElementId>& universe() const { return universe_; }

    /// Universe index of an id, or -1 when it is not a pairing product.
    long find(const GroupElementId& g) const;

    /// Ordered pairs (i, j) with u_i^-1 u_j = g.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> fiber(std::uint32_t g) const;
    std::size_t fiber_size(std::uint32_t g) const { return offsets_[g + 1] - offsets_[g]; }
    const std::uint32_t* fiber_begin(std::uint32_t g) const { return cells_.data() + offsets_[g]; }
    const std::uint32_t* fiber_end(std::uint32_t g) const { return cells_.data() + offsets_[g + 1]; }

    /// Maximum recorded word length over the universe.
    int max_length() const;

    /// Builds a table directly from serialized data (certificate files).
    static PairingTable from_parts(std::size_t n, std::vector<GroupElementId> universe,
                                   std::vector<std::uint32_t> products);

private:
    void build_fibers();

    std::size_t n_ = 0;
    std::vector<GroupElementId> universe_;
    std::unordered_map<std::string, std::uint32_t> index_;
    std::vector<std::uint32_t> product_;
    std::vector<std::uint32_t> inverse_;
    // cells_[offsets_[g] .. offsets_[g+1]) hold i * n + j for the fiber of g.
    std::vector<std::size_t> offsets_;
    std::vector<std::uint32_t> cells_;
};

}  // namespace kazhdan
