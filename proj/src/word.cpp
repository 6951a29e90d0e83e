#include "kazhdan/word.hpp"

#include <algorithm>

namespace kazhdan {

GeneratorSet::GeneratorSet(std::vector<Generator> symbols) : symbols_(std::move(symbols))
{
    if (symbols_.size() > kMaxAlphabet) {
        throw InputError("generating set too large");
    }
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        const auto& g = symbols_[i];
        if (g.inverse >= symbols_.size() || symbols_[g.inverse].inverse != i) {
            throw InputError("inverse pairing is not an involution at symbol " + g.name);
        }
        if (g.involution != (g.inverse == i)) {
            throw InputError("involution flag inconsistent at symbol " + g.name);
        }
    }
}

Word GeneratorSet::inverse(const Word& w) const
{
    Word out(w.rbegin(), w.rend());
    for (auto& a : out) {
        a = symbols_[a].inverse;
    }
    return out;
}

bool GeneratorSet::has_involutions() const
{
    return std::any_of(symbols_.begin(), symbols_.end(),
                       [](const Generator& g) { return g.involution; });
}

int GeneratorSet::find(const std::string& name) const
{
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        if (symbols_[i].name == name) {
            return static_cast<int>(i);
        }
    }
    return -1;
}

std::string GeneratorSet::format(const Word& w) const
{
    if (w.empty()) {
        return "1";
    }
    bool single = std::all_of(symbols_.begin(), symbols_.end(),
                              [](const Generator& g) { return g.name.size() == 1; });
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i > 0 && !single) {
            out += '*';
        }
        out += symbols_[w[i]].name;
    }
    return out;
}

}  // namespace kazhdan
