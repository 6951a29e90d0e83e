#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "kazhdan/word.hpp"

namespace kazhdan {

/// A finite presentation over a symmetric alphabet. Each declared generator
/// contributes one symbol if it is an involution, otherwise two (itself and
/// its formal inverse, adjacent in the alphabet order).
struct PresentationSpec {
    GeneratorSet symbols;
    std::vector<std::string> generator_names;
    std::vector<Word> relators;

    std::size_t max_relator_length() const;
};

/// Builds the symbol table for named generators; `involutions` must be a
/// subset of `names`.
GeneratorSet make_symbols(const std::vector<std::string>& names,
                          const std::vector<std::string>& involutions);

/// Free reduction (cancels adjacent x x^-1 pairs).
Word free_reduce(const GeneratorSet& symbols, const Word& w);

/// Parses one word expression, e.g. `(a*b)^2`, `[x12, x23]`, `a'*B`, `1`.
Word parse_word(const GeneratorSet& symbols, std::string_view text);

/// Parses a relation `u` or `u = v` into the relator u v^-1.
Word parse_relation(const GeneratorSet& symbols, std::string_view text);

/// Parses the text presentation format:
///
///     gens: a b c
///     involutions: s
///     rel: a^3, (a*b)^2 = b*a
///
/// `#` starts a comment. Throws InputError with a line number on failure.
PresentationSpec parse_presentation(std::string_view text);

PresentationSpec load_presentation(const std::string& path);

std::string format_presentation(const PresentationSpec& spec);

}  // namespace kazhdan
