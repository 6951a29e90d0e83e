#include "kazhdan/ball.hpp"

#include <algorithm>
#include <stdexcept>

namespace kazhdan {

Ball enumerate_ball(const GroupBackend& backend, int radius)
{
    if (radius < 0) {
        throw InputError("radius must be non-negative");
    }
    Ball ball;
    ball.radius = radius;
    std::unordered_map<std::string, std::size_t> seen;

    GroupElementId e = backend.identity();
    e.length = 0;
    seen.emplace(e.key, 0);
    ball.elements.push_back(e);
    ball.words.emplace_back();

    const auto& symbols = backend.generators();
    std::vector<GroupElementId> gens;
    for (std::size_t a = 0; a < symbols.size(); ++a) {
        gens.push_back(backend.generator(static_cast<Letter>(a)));
    }

    std::size_t level_begin = 0;
    for (int len = 1; len <= radius; ++len) {
        const std::size_t level_end = ball.size();
        for (std::size_t i = level_begin; i < level_end; ++i) {
            for (std::size_t a = 0; a < symbols.size(); ++a) {
                GroupElementId g = backend.multiply(ball.elements[i], gens[a]);
                if (seen.count(g.key)) {
                    continue;
                }
                g.length = len;
                seen.emplace(g.key, ball.size());
                ball.words.push_back(ball.words[i] + Word(1, static_cast<Letter>(a)));
                ball.elements.push_back(std::move(g));
            }
        }
        if (ball.size() == level_end) {
            break;  // the whole (finite) group has been enumerated
        }
        level_begin = level_end;
    }
    return ball;
}

PairingTable::PairingTable(const GroupBackend& backend, const Ball& ball) : n_(ball.size())
{
    universe_ = ball.elements;
    for (std::uint32_t i = 0; i < n_; ++i) {
        index_.emplace(universe_[i].key, i);
    }
    product_.resize(n_ * n_);
    for (std::size_t i = 0; i < n_; ++i) {
        const GroupElementId inv = backend.invert(ball.elements[i]);
        for (std::size_t j = 0; j < n_; ++j) {
            GroupElementId g = backend.multiply(inv, ball.elements[j]);
            const int len = std::min(g.length, ball.elements[i].length + ball.elements[j].length);
            auto [it, inserted] = index_.try_emplace(g.key, static_cast<std::uint32_t>(universe_.size()));
            if (inserted) {
                g.length = len;
                universe_.push_back(std::move(g));
            } else if (len < universe_[it->second].length) {
                universe_[it->second].length = len;
            }
            product_[i * n_ + j] = it->second;
        }
    }
    build_fibers();
}

PairingTable PairingTable::from_parts(std::size_t n, std::vector<GroupElementId> universe,
                                      std::vector<std::uint32_t> products)
{
    if (products.size() != n * n || universe.size() < n) {
        throw InputError("pairing table dimensions are inconsistent");
    }
    PairingTable t;
    t.n_ = n;
    t.universe_ = std::move(universe);
    for (std::uint32_t g = 0; g < t.universe_.size(); ++g) {
        t.index_.emplace(t.universe_[g].key, g);
    }
    for (auto p : products) {
        if (p >= t.universe_.size()) {
            throw InputError("pairing table entry outside the universe");
        }
    }
    t.product_ = std::move(products);
    t.build_fibers();
    return t;
}

void PairingTable::build_fibers()
{
    const std::size_t m = universe_.size();
    offsets_.assign(m + 1, 0);
    for (auto g : product_) {
        ++offsets_[g + 1];
    }
    for (std::size_t g = 0; g < m; ++g) {
        offsets_[g + 1] += offsets_[g];
    }
    cells_.resize(product_.size());
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (std::size_t c = 0; c < product_.size(); ++c) {
        cells_[fill[product_[c]]++] = static_cast<std::uint32_t>(c);
    }
    // g^-1 = u_j^-1 u_i whenever g = u_i^-1 u_j.
    inverse_.assign(m, 0);
    std::vector<bool> set(m, false);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            const auto g = product_[i * n_ + j];
            const auto h = product_[j * n_ + i];
            if (set[g] && inverse_[g] != h) {
                throw std::logic_error("pairing table inverse map is inconsistent");
            }
            inverse_[g] = h;
            set[g] = true;
        }
    }
    if (!std::all_of(set.begin(), set.end(), [](bool b) { return b; })) {
        throw InputError("universe contains elements that are not pairing products");
    }
}

long PairingTable::find(const GroupElementId& g) const
{
    auto it = index_.find(g.key);
    return it == index_.end() ? -1 : static_cast<long>(it->second);
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> PairingTable::fiber(std::uint32_t g) const
{
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    for (auto p = fiber_begin(g); p != fiber_end(g); ++p) {
        out.emplace_back(static_cast<std::uint32_t>(*p / n_), static_cast<std::uint32_t>(*p % n_));
    }
    return out;
}

int PairingTable::max_length() const
{
    int m = 0;
    for (const auto& g : universe_) {
        m = std::max(m, g.length);
    }
    return m;
}

}  // namespace kazhdan
