#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace kazhdan {

/// Index of a symbol in a symmetric generating set S.
using Letter = std::uint8_t;

/// A word over S. Stored as a byte string so that rewriting can use
/// substring search and hashing directly.
using Word = std::basic_string<Letter>;

inline constexpr std::size_t kMaxAlphabet = 250;

/// Shortlex order: shorter words first, then lexicographic by letter index.
inline std::strong_ordering shortlex_compare(const Word& a, const Word& b)
{
    if (a.size() != b.size()) {
        return a.size() <=> b.size();
    }
    const int c = a.compare(b);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

inline bool shortlex_less(const Word& a, const Word& b)
{
    return shortlex_compare(a, b) == std::strong_ordering::less;
}

/// One symbol of S together with its formal inverse.
struct Generator {
    std::string name;
    Letter inverse = 0;
    bool involution = false;
};

/// The symmetric generating set S, closed under the inverse pairing.
class GeneratorSet {
public:
    GeneratorSet() = default;
    explicit GeneratorSet(std::vector<Generator> symbols);

    std::size_t size() const { return symbols_.size(); }
    const Generator& operator[](std::size_t i) const { return symbols_[i]; }
    const std::vector<Generator>& symbols() const { return symbols_; }

    Letter inverse(Letter a) const { return symbols_[a].inverse; }
    Word inverse(const Word& w) const;
    bool has_involutions() const;

    /// Index of a symbol by name, or -1.
    int find(const std::string& name) const;
    std::string format(const Word& w) const;

private:
    std::vector<Generator> symbols_;
};

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace kazhdan
