#include "kazhdan/catalog.hpp"

#include <charconv>
#include <memory>
#include <sstream>

#include "kazhdan/fp_backend.hpp"
#include "kazhdan/matrix_backend.hpp"
#include "kazhdan/triangle.hpp"

namespace kazhdan {

namespace {

std::vector<std::string> split(std::string_view s, char sep)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        auto pos = s.find(sep, start);
        out.emplace_back(s.substr(start, pos - start));
        if (pos == std::string_view::npos) {
            break;
        }
        start = pos + 1;
    }
    return out;
}

int parse_int(const std::string& s, const std::string& what)
{
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) {
        throw InputError("invalid " + what + " '" + s + "'");
    }
    return v;
}

GroupPreset from_presentation(std::string name, PresentationSpec spec, int default_radius,
                              const PresetOptions& options)
{
    GroupPreset p;
    p.name = std::move(name);
    p.suggested_radius = suggested_radius(spec);
    p.default_radius = default_radius;
    p.generating_set_size = spec.symbols.size();
    p.backend = std::make_shared<FpGroupBackend>(spec, options.budget, options.closure_radius);
    p.presentation = std::move(spec);
    return p;
}

GroupPreset from_backend(std::string name, BackendPtr backend, int default_radius)
{
    GroupPreset p;
    p.name = std::move(name);
    p.generating_set_size = backend->generators().size();
    p.backend = std::move(backend);
    p.suggested_radius = default_radius;
    p.default_radius = default_radius;
    return p;
}

}  // namespace

int suggested_radius(const PresentationSpec& spec)
{
    // A relator r is read as the relation u = v with |u|, |v| <= ceil(|r|/2).
    const auto len = (spec.max_relator_length() + 1) / 2;
    int l = 1;
    while (len >= static_cast<std::size_t>(4 * l)) {
        ++l;
    }
    return l;
}

std::vector<std::vector<int>> coxeter_matrix(char family, int rank)
{
    const int n = rank;
    auto need = [&](bool ok) {
        if (!ok) {
            throw InputError(std::string("unsupported Coxeter type ") + family + std::to_string(rank));
        }
    };
    std::vector<std::vector<int>> m;
    auto init = [&](int size) {
        m.assign(size, std::vector<int>(size, 2));
        for (int i = 0; i < size; ++i) {
            m[i][i] = 1;
        }
    };
    auto edge = [&](int i, int j, int order) { m[i][j] = m[j][i] = order; };
    switch (family) {
    case 'A':
        need(n >= 1);
        init(n);
        for (int i = 0; i + 1 < n; ++i) {
            edge(i, i + 1, 3);
        }
        break;
    case 'B':
        need(n >= 2);
        init(n);
        for (int i = 0; i + 1 < n; ++i) {
            edge(i, i + 1, i + 2 == n ? 4 : 3);
        }
        break;
    case 'D':
        need(n >= 4);
        init(n);
        for (int i = 0; i + 2 < n; ++i) {
            edge(i, i + 1, 3);
        }
        edge(n - 3, n - 1, 3);
        break;
    case 'E':
        need(n >= 6 && n <= 8);
        init(n);
        for (int i = 0; i + 2 < n; ++i) {
            edge(i, i + 1, 3);
        }
        edge(2, n - 1, 3);
        break;
    case 'F':
        need(n == 4);
        init(4);
        edge(0, 1, 3);
        edge(1, 2, 4);
        edge(2, 3, 3);
        break;
    case 'H':
        need(n == 3 || n == 4);
        init(n);
        edge(0, 1, 5);
        for (int i = 1; i + 1 < n; ++i) {
            edge(i, i + 1, 3);
        }
        break;
    default:
        need(false);
    }
    return m;
}

namespace {

PresentationSpec coxeter_from_matrix(const std::vector<std::vector<int>>& m)
{
    std::ostringstream text;
    text << "gens:";
    for (std::size_t i = 0; i < m.size(); ++i) {
        text << " s" << i + 1;
    }
    text << "\ninvolutions:";
    for (std::size_t i = 0; i < m.size(); ++i) {
        text << " s" << i + 1;
    }
    text << '\n';
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = i + 1; j < m.size(); ++j) {
            text << "rel: (s" << i + 1 << "*s" << j + 1 << ")^" << m[i][j] << '\n';
        }
    }
    return parse_presentation(text.str());
}

}  // namespace

PresentationSpec coxeter_presentation(char family, int rank)
{
    if (family == 'I') {
        if (rank < 3) {
            throw InputError("I2(m) requires m >= 3");
        }
        return coxeter_from_matrix({{1, rank}, {rank, 1}});
    }
    return coxeter_from_matrix(coxeter_matrix(family, rank));
}

PresentationSpec ronan_presentation(int index)
{
    static const char* const relations[4][3] = {
        {"(a*b)^2 = b*a", "(b*c)^2 = c*b", "(c*a)^2 = a*c"},
        {"(a*b)^2 = b*a", "(b*c)^2 = c*b", "(a*c)^2 = c*a"},
        {"(a*b)^2 = b*a", "(a*c)^2 = c*a", "(C*b)^2 = b*C"},
        {"(a*b)^2 = b*a", "(a*c)^2 = c*a", "(b*C)^2 = C*b"},
    };
    if (index < 1 || index > 4) {
        throw InputError("Ronan groups are G1..G4");
    }
    std::string text = "gens: a b c\nrel: a^3, b^3, c^3\n";
    for (const char* r : relations[index - 1]) {
        text += std::string("rel: ") + r + "\n";
    }
    return parse_presentation(text);
}

PresentationSpec steinberg_presentation(int n)
{
    if (n < 3 || n > 9) {
        throw InputError("Steinberg presets need 3 <= n <= 9");
    }
    auto x = [](int i, int j) { return "x" + std::to_string(i) + std::to_string(j); };
    std::ostringstream text;
    text << "gens:";
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (i != j) {
                text << ' ' << x(i, j);
            }
        }
    }
    text << '\n';
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (i == j) {
                continue;
            }
            for (int k = 1; k <= n; ++k) {
                for (int l = 1; l <= n; ++l) {
                    if (k == l || (i == k && j == l)) {
                        continue;
                    }
                    if (j == k && i != l) {
                        text << "rel: [" << x(i, j) << ',' << x(j, l) << "] = " << x(i, l) << '\n';
                    } else if (i != l && j != k && std::pair(i, j) < std::pair(k, l)) {
                        text << "rel: [" << x(i, j) << ',' << x(k, l) << "]\n";
                    }
                }
            }
        }
    }
    return parse_presentation(text.str());
}

PresentationSpec cyclic_presentation(int m)
{
    if (m < 2) {
        throw InputError("cyclic group order must be at least 2");
    }
    return parse_presentation("gens: a\nrel: a^" + std::to_string(m) + "\n");
}

PresentationSpec free_presentation(int k)
{
    if (k < 1 || k > 26) {
        throw InputError("free group rank must be in 1..26");
    }
    std::string text = "gens:";
    for (int i = 0; i < k; ++i) {
        text += ' ';
        text += static_cast<char>('a' + i);
    }
    return parse_presentation(text + "\n");
}

GroupPreset make_preset(std::string_view name, const PresetOptions& options)
{
    const std::string full(name);
    const auto colon = full.find(':');
    const std::string family = full.substr(0, colon);
    const std::string rest = colon == std::string::npos ? "" : full.substr(colon + 1);
    const auto parts = split(rest, ':');

    if (family == "ronan") {
        if (rest.size() != 2 || rest[0] != 'G') {
            throw InputError("expected ronan:G1..ronan:G4");
        }
        return from_presentation(full, ronan_presentation(rest[1] - '0'), 2, options);
    }
    if (family == "steinberg") {
        return from_presentation(full, steinberg_presentation(parse_int(rest, "Steinberg rank")), 2,
                                 options);
    }
    if (family == "sl") {
        if (parts.size() != 2) {
            throw InputError("expected sl:N:Z or sl:N:Fp");
        }
        const int n = parse_int(parts[0], "matrix size");
        if (n < 2 || n > 8) {
            throw InputError("sl presets need 2 <= n <= 8");
        }
        std::optional<long> modulus;
        if (parts[1] == "Z") {
        } else if (parts[1].size() > 1 && parts[1][0] == 'F') {
            modulus = parse_int(parts[1].substr(1), "modulus");
        } else {
            throw InputError("unknown ring '" + parts[1] + "'");
        }
        return from_backend(full, make_matrix_backend(elementary_matrix_spec(n, modulus)), 2);
    }
    if (family == "coxeter") {
        if (rest.empty()) {
            throw InputError("expected coxeter:<type><rank>");
        }
        const char type = rest[0];
        int rank = 0;
        if (type == 'I') {
            if (rest.rfind("I2:", 0) != 0) {
                throw InputError("dihedral groups are written coxeter:I2:m");
            }
            rank = parse_int(rest.substr(3), "dihedral order");
        } else {
            rank = parse_int(rest.substr(1), "Coxeter rank");
        }
        const bool simply_laced = type == 'A' || type == 'D' || type == 'E';
        return from_presentation(full, coxeter_presentation(type, rank), simply_laced ? 2 : 3,
                                 options);
    }
    if (family == "gmpn") {
        if (parts.size() != 3) {
            throw InputError("expected gmpn:m:p:n");
        }
        const int m = parse_int(parts[0], "m");
        const int p = parse_int(parts[1], "p");
        const int n = parse_int(parts[2], "n");
        return from_backend(full, make_monomial_backend(gmpn_spec(m, p, n)), 3);
    }
    if (family == "cyclic") {
        return from_presentation(full, cyclic_presentation(parse_int(rest, "order")), 1, options);
    }
    if (family == "free") {
        return from_presentation(full, free_presentation(parse_int(rest, "rank")), 1, options);
    }
    if (family == "a2tilde") {
        TrianglePresentation t;
        if (rest == "q2" || rest.rfind("q2:", 0) == 0) {
            const auto all = generate_triangle_presentations(2);
            const int index = rest == "q2" ? 0 : parse_int(rest.substr(3), "presentation index");
            if (index < 0 || static_cast<std::size_t>(index) >= all.size()) {
                throw InputError("triangle presentation index out of range (0.." +
                                 std::to_string(all.size() - 1) + ")");
            }
            t = all[index];
        } else {
            t = load_triangle(rest);
        }
        return from_presentation(full, triangle_group(t), 1, options);
    }
    if (family == "file") {
        auto spec = load_presentation(rest);
        const int d = suggested_radius(spec);
        return from_presentation(full, std::move(spec), d, options);
    }
    throw InputError("unknown preset '" + full + "'");
}

int preset_default_radius(std::string_view name)
{
    const std::string full(name);
    const std::string family = full.substr(0, full.find(':'));
    if (family == "coxeter") {
        const char type = full.size() > 8 ? full[8] : 'A';
        return (type == 'A' || type == 'D' || type == 'E') ? 2 : 3;
    }
    if (family == "gmpn") {
        return 3;
    }
    if (family == "a2tilde" || family == "cyclic" || family == "free") {
        return 1;
    }
    if (family == "file") {
        return suggested_radius(load_presentation(full.substr(5)));
    }
    return 2;
}

std::vector<std::string> preset_families()
{
    return {
        "ronan:G1 .. ronan:G4     Ronan's triangle-of-groups lattices, |S|=6",
        "steinberg:N              Steinberg group St_N(Z) on x_ij, |S|=2N(N-1)",
        "sl:N:Z, sl:N:Fp          SL(N) over Z or F_p with elementary generators",
        "coxeter:An Bn Dn E6-8 F4 H3 H4, coxeter:I2:m   finite Coxeter groups",
        "gmpn:m:p:n               complex reflection group G(m,p,n)",
        "cyclic:m, free:k         cyclic group <a|a^m>, free group of rank k",
        "a2tilde:FILE             triangle-presentation group from a file",
        "a2tilde:q2[:i]           i-th generated q=2 triangle presentation",
        "file:FILE                group from a presentation file",
    };
}

std::vector<std::string> table_presets()
{
    return {"cyclic:3",    "coxeter:A2", "coxeter:A3", "coxeter:A4", "coxeter:B2",
            "coxeter:B3",  "coxeter:D4", "sl:2:F3",    "sl:2:F5",    "gmpn:3:1:2",
            "gmpn:3:3:2",  "a2tilde:q2", "ronan:G1",   "ronan:G2",   "ronan:G3",
            "ronan:G4"};
}

}  // namespace kazhdan
