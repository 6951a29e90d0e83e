#include "kazhdan/fp_backend.hpp"

#include <numeric>
#include <set>

namespace kazhdan {
namespace {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t find(std::size_t x)
    {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    // Keeps the smaller index as root; indices are assigned in shortlex order.
    void unite(std::size_t a, std::size_t b)
    {
        a = find(a);
        b = find(b);
        if (a == b) {
            return;
        }
        if (b < a) {
            std::swap(a, b);
        }
        parent_[b] = a;
    }

private:
    std::vector<std::size_t> parent_;
};

}  // namespace

FpGroupBackend::FpGroupBackend(PresentationSpec spec, const CompletionBudget& budget,
                               std::size_t closure_radius)
    : spec_(std::move(spec)), rewriting_(bounded_completion(spec_, budget))
{
    if (!rewriting_.complete() && closure_radius > 0) {
        build_closure(closure_radius);
    }
}

void FpGroupBackend::build_closure(std::size_t radius)
{
    closure_radius_ = radius;
    const auto& symbols = spec_.symbols;

    // Irreducible words of length <= radius, level by level in shortlex order.
    std::vector<Word> words{Word{}};
    std::unordered_map<Word, std::size_t, WordHash> index{{Word{}, 0}};
    std::size_t level_begin = 0;
    for (std::size_t len = 1; len <= radius; ++len) {
        const std::size_t level_end = words.size();
        for (std::size_t i = level_begin; i < level_end; ++i) {
            for (std::size_t a = 0; a < symbols.size(); ++a) {
                Word w = words[i];
                w.push_back(static_cast<Letter>(a));
                if (rewriting_.reduce(w) == w) {
                    index.emplace(w, words.size());
                    words.push_back(std::move(w));
                }
            }
        }
        level_begin = level_end;
    }

    std::set<Word> conjugates;
    for (const auto& r : spec_.relators) {
        for (const Word& base : {r, symbols.inverse(r)}) {
            for (std::size_t k = 0; k < base.size(); ++k) {
                conjugates.insert(base.substr(k) + base.substr(0, k));
            }
        }
    }

    UnionFind uf(words.size());
    for (std::size_t i = 0; i < words.size(); ++i) {
        const Word& w = words[i];
        for (std::size_t p = 0; p <= w.size(); ++p) {
            for (const auto& c : conjugates) {
                Word v = rewriting_.reduce(w.substr(0, p) + c + w.substr(p));
                if (v.size() > radius) {
                    continue;
                }
                auto it = index.find(v);
                if (it != index.end()) {
                    uf.unite(i, it->second);
                }
            }
        }
    }

    for (std::size_t i = 0; i < words.size(); ++i) {
        const std::size_t root = uf.find(i);
        if (root != i) {
            closure_.emplace(words[i], words[root]);
            ++closure_merges_;
        }
    }
}

Word FpGroupBackend::normal_form(const Word& w) const
{
    Word v = rewriting_.reduce(w);
    if (v.size() <= closure_radius_) {
        if (auto it = closure_.find(v); it != closure_.end()) {
            return it->second;
        }
    }
    return v;
}

Word FpGroupBackend::key_to_word(const std::string& key)
{
    return Word(key.begin(), key.end());
}

std::string FpGroupBackend::word_to_key(const Word& w)
{
    return std::string(w.begin(), w.end());
}

GroupElementId FpGroupBackend::canonicalize(const Word& word) const
{
    for (Letter a : word) {
        if (a >= spec_.symbols.size()) {
            throw InputError("letter outside the generating set");
        }
    }
    Word nf = normal_form(word);
    return {word_to_key(nf), static_cast<int>(nf.size())};
}

GroupElementId FpGroupBackend::multiply(const GroupElementId& x, const GroupElementId& y) const
{
    Word nf = normal_form(key_to_word(x.key) + key_to_word(y.key));
    return {word_to_key(nf), static_cast<int>(nf.size())};
}

GroupElementId FpGroupBackend::invert(const GroupElementId& x) const
{
    Word nf = normal_form(spec_.symbols.inverse(key_to_word(x.key)));
    return {word_to_key(nf), static_cast<int>(nf.size())};
}

std::string FpGroupBackend::format(const GroupElementId& x) const
{
    return spec_.symbols.format(key_to_word(x.key));
}

}  // namespace kazhdan
