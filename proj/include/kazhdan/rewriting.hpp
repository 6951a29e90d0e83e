#pragma once

#include <cstddef>
#include <unordered_map>
#include <vector>

#include "kazhdan/presentation.hpp"
#include "kazhdan/word.hpp"

namespace kazhdan {

/// Caps for Knuth-Bendix completion. Exhausting any cap yields a partial
/// (still sound) system flagged incomplete.
struct CompletionBudget {
    std::size_t max_rules = 20000;
    std::size_t max_rule_length = 40;
    /// Critical pairs whose overlap word is longer than this are skipped.
    /// Zero means 2 * max_rule_length.
    std::size_t max_overlap_length = 0;
};

struct Rule {
    Word lhs;
    Word rhs;
};

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept
    {
        return std::hash<std::string_view>{}(
            std::string_view(reinterpret_cast<const char*>(w.data()), w.size()));
    }
};

/// Shortlex rewriting system. Every rule is a consequence of the relators
/// and the free-reduction rules, so reduction never identifies words that
/// differ in the group.
class RewriteSystem {
public:
    RewriteSystem() = default;
    explicit RewriteSystem(GeneratorSet symbols);

    /// Adds lhs -> rhs verbatim; the caller guarantees lhs > rhs in shortlex.
    void add_rule(Word lhs, Word rhs);
    void remove_rule(const Word& lhs);
    void set_complete(bool complete) { complete_ = complete; }

    Word reduce(const Word& w) const;
    bool is_reducible(const Word& w) const;

    bool complete() const { return complete_; }
    const GeneratorSet& symbols() const { return symbols_; }
    std::vector<Rule> rules() const;
    std::size_t size() const { return index_.size(); }

private:
    GeneratorSet symbols_;
    std::unordered_map<Word, Word, WordHash> index_;
    std::vector<std::size_t> length_count_;
    bool complete_ = false;
};

/// Shortlex Knuth-Bendix completion with caps. Critical pairs are processed
/// shortest overlap first, so short rules are found before long ones.
RewriteSystem bounded_completion(const PresentationSpec& spec, const CompletionBudget& budget);

}  // namespace kazhdan
