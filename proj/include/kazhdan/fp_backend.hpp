#pragma once

#include <unordered_map>

#include "kazhdan/backend.hpp"
#include "kazhdan/presentation.hpp"
#include "kazhdan/rewriting.hpp"

namespace kazhdan {

/// Finitely presented group: shortlex Knuth-Bendix normal forms, refined by
/// a relator-insertion closure over irreducible words of length at most
/// `closure_radius` when completion did not finish.
class FpGroupBackend final : public GroupBackend {
public:
    FpGroupBackend(PresentationSpec spec, const CompletionBudget& budget,
                   std::size_t closure_radius);

    std::string_view kind() const override { return "presentation"; }
    const GeneratorSet& generators() const override { return spec_.symbols; }

    GroupElementId identity() const override { return {}; }
    GroupElementId canonicalize(const Word& word) const override;
    GroupElementId multiply(const GroupElementId& x, const GroupElementId& y) const override;
    GroupElementId invert(const GroupElementId& x) const override;
    std::string format(const GroupElementId& x) const override;
    bool identification_complete() const override { return rewriting_.complete(); }

    const PresentationSpec& presentation() const { return spec_; }
    const RewriteSystem& rewriting() const { return rewriting_; }

    /// Number of normal forms merged by the closure step.
    std::size_t closure_merges() const { return closure_merges_; }

    static Word key_to_word(const std::string& key);
    static std::string word_to_key(const Word& w);

private:
    void build_closure(std::size_t radius);
    Word normal_form(const Word& w) const;

    PresentationSpec spec_;
    RewriteSystem rewriting_;
    std::size_t closure_radius_ = 0;
    std::unordered_map<Word, Word, WordHash> closure_;
    std::size_t closure_merges_ = 0;
};

}  // namespace kazhdan
