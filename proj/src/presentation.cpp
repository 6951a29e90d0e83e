#include "kazhdan/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace kazhdan {
namespace {

std::string trim(std::string_view s)
{
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) {
        return {};
    }
    auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

std::string swap_case(const std::string& s)
{
    std::string out = s;
    for (auto& c : out) {
        if (std::islower(static_cast<unsigned char>(c))) {
            c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        } else if (std::isupper(static_cast<unsigned char>(c))) {
            c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        }
    }
    return out;
}

std::vector<std::string> split_ws(std::string_view s)
{
    std::vector<std::string> out;
    std::istringstream in{std::string(s)};
    std::string tok;
    while (in >> tok) {
        out.push_back(tok);
    }
    return out;
}

/// Splits at commas that are not nested inside brackets or parentheses.
std::vector<std::string> split_top_level(std::string_view s)
{
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(' || c == '[') {
            ++depth;
        } else if (c == ')' || c == ']') {
            --depth;
        }
        if (c == ',' && depth == 0) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!trim(cur).empty() || !out.empty()) {
        out.push_back(trim(cur));
    }
    return out;
}

Word power(const GeneratorSet& symbols, const Word& w, long k)
{
    Word base = k < 0 ? symbols.inverse(w) : w;
    Word out;
    for (long i = 0; i < std::labs(k); ++i) {
        out += base;
    }
    return out;
}

class WordParser {
public:
    WordParser(const GeneratorSet& symbols, std::string_view text)
        : symbols_(symbols), text_(text)
    {}

    Word parse()
    {
        Word w = sequence();
        skip_ws();
        if (pos_ != text_.size()) {
            fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
        }
        return w;
    }

private:
    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool at_factor_start()
    {
        skip_ws();
        if (pos_ >= text_.size()) {
            return false;
        }
        char c = text_[pos_];
        return c == '(' || c == '[' || c == '1' || std::isalpha(static_cast<unsigned char>(c)) ||
               c == '_';
    }

    Word sequence()
    {
        Word w;
        if (!at_factor_start()) {
            fail("expected a word");
        }
        w += factor();
        while (true) {
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '*') {
                ++pos_;
                w += factor();
            } else if (at_factor_start()) {
                w += factor();
            } else {
                break;
            }
        }
        return w;
    }

    Word factor()
    {
        Word w = atom();
        skip_ws();
        while (pos_ < text_.size() && text_[pos_] == '^') {
            ++pos_;
            skip_ws();
            std::size_t start = pos_;
            if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
                ++pos_;
            }
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
            }
            std::string num(text_.substr(start, pos_ - start));
            if (num.empty() || num == "-" || num == "+") {
                fail("expected an integer exponent");
            }
            w = power(symbols_, w, std::stol(num));
            skip_ws();
        }
        return w;
    }

    Word atom()
    {
        skip_ws();
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Word w = sequence();
            expect(')');
            return w;
        }
        if (c == '[') {
            ++pos_;
            Word x = sequence();
            expect(',');
            Word y = sequence();
            expect(']');
            return x + y + symbols_.inverse(x) + symbols_.inverse(y);
        }
        if (c == '1') {
            ++pos_;
            return {};
        }
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
            ++pos_;
        }
        std::string name(text_.substr(start, pos_ - start));
        int primes = 0;
        while (pos_ < text_.size() && text_[pos_] == '\'') {
            ++primes;
            ++pos_;
        }
        Word w = resolve(name);
        return primes % 2 == 1 ? symbols_.inverse(w) : w;
    }

    Word resolve(const std::string& name)
    {
        int idx = symbols_.find(name);
        if (idx >= 0) {
            return Word(1, static_cast<Letter>(idx));
        }
        // Uppercase spelling of a generator denotes its inverse.
        idx = symbols_.find(swap_case(name));
        if (idx >= 0 && swap_case(name) != name) {
            return Word(1, symbols_.inverse(static_cast<Letter>(idx)));
        }
        fail("unknown symbol '" + name + "'");
        return {};
    }

    void expect(char c)
    {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c) {
            fail(std::string("expected '") + c + "'");
        }
        ++pos_;
    }

    [[noreturn]] void fail(const std::string& msg) const
    {
        throw InputError(msg + " in '" + std::string(text_) + "'");
    }

    const GeneratorSet& symbols_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

std::size_t PresentationSpec::max_relator_length() const
{
    std::size_t m = 0;
    for (const auto& r : relators) {
        m = std::max(m, r.size());
    }
    return m;
}

GeneratorSet make_symbols(const std::vector<std::string>& names,
                          const std::vector<std::string>& involutions)
{
    if (names.empty()) {
        throw InputError("empty generator list");
    }
    std::set<std::string> declared(names.begin(), names.end());
    if (declared.size() != names.size()) {
        throw InputError("duplicate generator name");
    }
    std::set<std::string> inv(involutions.begin(), involutions.end());
    for (const auto& s : inv) {
        if (!declared.count(s)) {
            throw InputError("unbalanced inverse pairing: involution '" + s +
                             "' is not a declared generator");
        }
    }
    std::vector<Generator> symbols;
    for (const auto& name : names) {
        const std::string swapped = swap_case(name);
        if (swapped != name && declared.count(swapped)) {
            throw InputError("unbalanced inverse pairing: '" + name + "' and '" + swapped +
                             "' are both declared, so the inverse spelling is ambiguous");
        }
        const auto idx = static_cast<Letter>(symbols.size());
        if (inv.count(name)) {
            symbols.push_back({name, idx, true});
        } else {
            std::string inv_name = swapped != name ? swapped : name + "'";
            symbols.push_back({name, static_cast<Letter>(idx + 1), false});
            symbols.push_back({inv_name, idx, false});
        }
    }
    return GeneratorSet(std::move(symbols));
}

Word free_reduce(const GeneratorSet& symbols, const Word& w)
{
    Word out;
    for (Letter a : w) {
        if (!out.empty() && out.back() == symbols.inverse(a)) {
            out.pop_back();
        } else {
            out.push_back(a);
        }
    }
    return out;
}

Word parse_word(const GeneratorSet& symbols, std::string_view text)
{
    return WordParser(symbols, text).parse();
}

Word parse_relation(const GeneratorSet& symbols, std::string_view text)
{
    auto eq = text.find('=');
    if (eq == std::string_view::npos) {
        return free_reduce(symbols, parse_word(symbols, text));
    }
    if (text.find('=', eq + 1) != std::string_view::npos) {
        throw InputError("more than one '=' in relation '" + std::string(text) + "'");
    }
    Word lhs = parse_word(symbols, text.substr(0, eq));
    Word rhs = parse_word(symbols, text.substr(eq + 1));
    return free_reduce(symbols, lhs + symbols.inverse(rhs));
}

PresentationSpec parse_presentation(std::string_view text)
{
    std::vector<std::string> gens;
    std::vector<std::string> involutions;
    std::vector<std::pair<int, std::string>> relations;

    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::string body = trim(line);
        if (body.empty()) {
            continue;
        }
        auto colon = body.find(':');
        if (colon == std::string::npos) {
            throw InputError("line " + std::to_string(lineno) + ": expected 'key: value'");
        }
        std::string key = trim(body.substr(0, colon));
        std::string value = trim(body.substr(colon + 1));
        if (key == "gens" || key == "generators") {
            auto toks = split_ws(value);
            gens.insert(gens.end(), toks.begin(), toks.end());
        } else if (key == "involutions") {
            auto toks = split_ws(value);
            involutions.insert(involutions.end(), toks.begin(), toks.end());
        } else if (key == "rel" || key == "rels" || key == "relators") {
            for (auto& r : split_top_level(value)) {
                if (r.empty()) {
                    throw InputError("line " + std::to_string(lineno) + ": empty relation");
                }
                relations.emplace_back(lineno, r);
            }
        } else {
            throw InputError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        }
    }

    PresentationSpec spec;
    spec.generator_names = gens;
    spec.symbols = make_symbols(gens, involutions);
    for (const auto& [ln, r] : relations) {
        try {
            Word w = parse_relation(spec.symbols, r);
            if (!w.empty()) {
                spec.relators.push_back(std::move(w));
            }
        } catch (const InputError& e) {
            throw InputError("line " + std::to_string(ln) + ": " + e.what());
        }
    }
    return spec;
}

PresentationSpec load_presentation(const std::string& path)
{
    std::ifstream f(path);
    if (!f) {
        throw InputError("cannot open presentation file " + path);
    }
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_presentation(ss.str());
}

std::string format_presentation(const PresentationSpec& spec)
{
    std::ostringstream out;
    out << "gens:";
    for (const auto& g : spec.generator_names) {
        out << ' ' << g;
    }
    out << '\n';
    std::vector<std::string> inv;
    for (const auto& s : spec.symbols.symbols()) {
        if (s.involution) {
            inv.push_back(s.name);
        }
    }
    if (!inv.empty()) {
        out << "involutions:";
        for (const auto& s : inv) {
            out << ' ' << s;
        }
        out << '\n';
    }
    for (const auto& r : spec.relators) {
        Word w = r;
        std::string s;
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i) {
                s += '*';
            }
            s += spec.symbols[w[i]].name;
        }
        out << "rel: " << s << '\n';
    }
    return out.str();
}

}  // namespace kazhdan
