#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "kazhdan/word.hpp"

namespace kazhdan {

/// Backend-scoped canonical representative of a group element. `key` is an
/// opaque canonical encoding (normal-form word, exact matrix or monomial
/// pair); `length` is the length of a known word over S expressing the
/// element, an upper bound on its true word length. Equality and hashing
/// use the key only.
struct GroupElementId {
    std::string key;
    int length = 0;

    friend bool operator==(const GroupElementId& a, const GroupElementId& b)
    {
        return a.key == b.key;
    }
};

struct GroupElementIdHash {
    std::size_t operator()(const GroupElementId& x) const noexcept
    {
        return std::hash<std::string>{}(x.key);
    }
};

/// Decides (soundly, possibly incompletely) equality of words over S.
/// Implementations are immutable after construction; all methods are const
/// and safe to call concurrently.
class GroupBackend {
public:
    virtual ~GroupBackend() = default;

    virtual std::string_view kind() const = 0;
    virtual const GeneratorSet& generators() const = 0;

    virtual GroupElementId identity() const = 0;
    virtual GroupElementId canonicalize(const Word& word) const = 0;
    virtual GroupElementId multiply(const GroupElementId& x, const GroupElementId& y) const = 0;
    virtual GroupElementId invert(const GroupElementId& x) const = 0;

    /// Human-readable rendering of a canonical element.
    virtual std::string format(const GroupElementId& x) const = 0;

    /// True when equal group elements always receive equal ids.
    virtual bool identification_complete() const = 0;

    GroupElementId generator(Letter a) const { return canonicalize(Word(1, a)); }
};

using BackendPtr = std::shared_ptr<const GroupBackend>;

}  // namespace kazhdan
