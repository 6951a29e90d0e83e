#include "kazhdan/triangle.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace kazhdan {

namespace {

bool is_prime(int q)
{
    if (q < 2) {
        return false;
    }
    for (int d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            return false;
        }
    }
    return true;
}

std::string triple_text(const std::array<int, 3>& t)
{
    return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + ")";
}

std::string at_line(const std::vector<int>* lines, std::size_t i)
{
    if (lines == nullptr || i >= lines->size()) {
        return "";
    }
    return "line " + std::to_string((*lines)[i]) + ": ";
}

void validate_impl(const TrianglePresentation& t, const std::vector<int>* lambda_lines,
                   const std::vector<int>* triple_lines)
{
    if (!is_prime(t.q)) {
        throw InputError("only prime q is supported, got q=" + std::to_string(t.q));
    }
    const ProjectivePlane plane = projective_plane(t.q);
    const int n = static_cast<int>(plane.size());
    if (static_cast<int>(t.lambda.size()) != n) {
        throw InputError("lambda must be defined on all " + std::to_string(n) + " points, got " +
                         std::to_string(t.lambda.size()));
    }
    std::vector<int> preimage(n, -1);
    for (int x = 0; x < n; ++x) {
        const int l = t.lambda[x];
        if (l < 0 || l >= n) {
            throw InputError(at_line(lambda_lines, x) + "lambda(" + std::to_string(x) +
                             ") is not a line index");
        }
        if (preimage[l] >= 0) {
            throw InputError(at_line(lambda_lines, x) + "lambda is not a bijection: points " +
                             std::to_string(preimage[l]) + " and " + std::to_string(x) +
                             " both map to line " + std::to_string(l));
        }
        preimage[l] = x;
    }

    std::map<std::pair<int, int>, int> third;
    std::set<std::array<int, 3>> members;
    for (std::size_t i = 0; i < t.triples.size(); ++i) {
        const auto& tr = t.triples[i];
        for (int v : tr) {
            if (v < 0 || v >= n) {
                throw InputError(at_line(triple_lines, i) + "triple " + triple_text(tr) +
                                 " has a point outside 0.." + std::to_string(n - 1));
            }
        }
        auto [it, inserted] = third.try_emplace({tr[0], tr[1]}, tr[2]);
        if (!inserted && it->second != tr[2]) {
            throw InputError(at_line(triple_lines, i) + "axiom (C) violated: " +
                             triple_text({tr[0], tr[1], it->second}) + " and " + triple_text(tr) +
                             " share the pair (" + std::to_string(tr[0]) + "," +
                             std::to_string(tr[1]) + ")");
        }
        members.insert(tr);
    }
    for (std::size_t i = 0; i < t.triples.size(); ++i) {
        const auto& tr = t.triples[i];
        if (!plane.incidence[tr[1]][t.lambda[tr[0]]]) {
            throw InputError(at_line(triple_lines, i) + "axiom (A) violated: " + triple_text(tr) +
                             " is in T but point " + std::to_string(tr[1]) +
                             " is not on lambda(" + std::to_string(tr[0]) + ")");
        }
        const std::array<int, 3> rotated{tr[1], tr[2], tr[0]};
        if (!members.count(rotated)) {
            throw InputError(at_line(triple_lines, i) + "axiom (B) violated: " + triple_text(tr) +
                             " is in T but " + triple_text(rotated) + " is not");
        }
    }
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            if (plane.incidence[y][t.lambda[x]] && !third.count({x, y})) {
                throw InputError("axiom (A) violated: no triple (" + std::to_string(x) + "," +
                                 std::to_string(y) + ",z) although " + std::to_string(y) +
                                 " is on lambda(" + std::to_string(x) + ")");
            }
        }
    }
}

int parse_index(std::string tok, const std::string& prefix, int lineno)
{
    if (!prefix.empty() && tok.rfind(prefix, 0) == 0) {
        tok.erase(0, prefix.size());
        if (!tok.empty() && tok[0] == '_') {
            tok.erase(0, 1);
        }
    }
    int v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || p != tok.data() + tok.size()) {
        throw InputError("line " + std::to_string(lineno) + ": bad index '" + tok + "'");
    }
    return v;
}

// All 3x3 invertible matrices over F_q acting on point and line indices.
struct Collineation {
    std::vector<int> point;
    std::vector<int> line;
};

std::vector<Collineation> collineations(const ProjectivePlane& plane)
{
    const int q = plane.q;
    const int n = static_cast<int>(plane.size());
    auto normalize = [&](std::array<int, 3> v) {
        int lead = 0;
        for (int c : v) {
            if (c != 0) {
                lead = c;
                break;
            }
        }
        int inv = 1;
        while (lead * inv % q != 1) {
            ++inv;
        }
        for (int& c : v) {
            c = c * inv % q;
        }
        return v;
    };
    std::map<std::array<int, 3>, int> index;
    for (int i = 0; i < n; ++i) {
        index[plane.points[i]] = i;
    }
    std::map<std::vector<int>, int> line_index;
    for (int l = 0; l < n; ++l) {
        std::vector<int> pts;
        for (int x = 0; x < n; ++x) {
            if (plane.incidence[x][l]) {
                pts.push_back(x);
            }
        }
        line_index[pts] = l;
    }

    std::vector<Collineation> out;
    std::set<std::vector<int>> seen;
    int total = 1;
    for (int i = 0; i < 9; ++i) {
        total *= q;
    }
    for (int code = 0; code < total; ++code) {
        int m[3][3];
        int c = code;
        for (auto& row : m) {
            for (int& e : row) {
                e = c % q;
                c /= q;
            }
        }
        const int det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                        m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                        m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
        if (((det % q) + q) % q == 0) {
            continue;
        }
        Collineation g;
        for (const auto& p : plane.points) {
            std::array<int, 3> v{};
            for (int r = 0; r < 3; ++r) {
                v[r] = (m[r][0] * p[0] + m[r][1] * p[1] + m[r][2] * p[2]) % q;
            }
            g.point.push_back(index.at(normalize(v)));
        }
        if (!seen.insert(g.point).second) {
            continue;  // scalar multiples act identically
        }
        for (int l = 0; l < n; ++l) {
            std::vector<int> pts;
            for (int x = 0; x < n; ++x) {
                if (plane.incidence[x][l]) {
                    pts.push_back(g.point[x]);
                }
            }
            std::sort(pts.begin(), pts.end());
            g.line.push_back(line_index.at(pts));
        }
        out.push_back(std::move(g));
    }
    return out;
}

std::vector<int> encode(const TrianglePresentation& t)
{
    std::vector<int> code = t.lambda;
    auto triples = t.triples;
    std::sort(triples.begin(), triples.end());
    for (const auto& tr : triples) {
        code.insert(code.end(), tr.begin(), tr.end());
    }
    return code;
}

TrianglePresentation apply(const Collineation& g, const TrianglePresentation& t)
{
    TrianglePresentation out;
    out.q = t.q;
    out.lambda.assign(t.lambda.size(), 0);
    for (std::size_t x = 0; x < t.lambda.size(); ++x) {
        out.lambda[g.point[x]] = g.line[t.lambda[x]];
    }
    for (const auto& tr : t.triples) {
        out.triples.push_back({g.point[tr[0]], g.point[tr[1]], g.point[tr[2]]});
    }
    std::sort(out.triples.begin(), out.triples.end());
    return out;
}

class CoverSearch {
public:
    CoverSearch(const ProjectivePlane& plane, const std::vector<int>& lambda)
        : plane_(plane), lambda_(lambda), n_(static_cast<int>(plane.size())),
          covered_(n_ * n_, false)
    {
    }

    void run(std::vector<std::vector<std::array<int, 3>>>& out)
    {
        out_ = &out;
        search();
    }

private:
    bool allowed(int x, int y) const
    {
        return plane_.incidence[y][lambda_[x]] && !covered_[x * n_ + y];
    }

    void search()
    {
        int x = -1;
        int y = -1;
        for (int i = 0; i < n_ && x < 0; ++i) {
            for (int j = 0; j < n_; ++j) {
                if (allowed(i, j)) {
                    x = i;
                    y = j;
                    break;
                }
            }
        }
        if (x < 0) {
            out_->push_back(triples_);
            return;
        }
        for (int z = 0; z < n_; ++z) {
            std::vector<std::pair<int, int>> pairs{{x, y}};
            if (!(x == y && y == z)) {
                pairs.push_back({y, z});
                pairs.push_back({z, x});
            }
            bool ok = true;
            for (auto [a, b] : pairs) {
                ok = ok && allowed(a, b);
            }
            // (y,z) and (z,x) must also be distinct from each other and (x,y).
            if (!ok || (pairs.size() == 3 && (pairs[1] == pairs[0] || pairs[2] == pairs[0] ||
                                              pairs[2] == pairs[1]))) {
                continue;
            }
            for (auto [a, b] : pairs) {
                covered_[a * n_ + b] = true;
            }
            const std::size_t mark = triples_.size();
            triples_.push_back({x, y, z});
            if (pairs.size() == 3) {
                triples_.push_back({y, z, x});
                triples_.push_back({z, x, y});
            }
            search();
            triples_.resize(mark);
            for (auto [a, b] : pairs) {
                covered_[a * n_ + b] = false;
            }
        }
    }

    const ProjectivePlane& plane_;
    const std::vector<int>& lambda_;
    int n_;
    std::vector<bool> covered_;
    std::vector<std::array<int, 3>> triples_;
    std::vector<std::vector<std::array<int, 3>>>* out_ = nullptr;
};

}  // namespace

ProjectivePlane projective_plane(int q)
{
    if (!is_prime(q)) {
        throw InputError("only prime q is supported, got q=" + std::to_string(q));
    }
    ProjectivePlane plane;
    plane.q = q;
    for (int a = 0; a < q; ++a) {
        for (int b = 0; b < q; ++b) {
            for (int c = 0; c < q; ++c) {
                const int lead = a != 0 ? a : (b != 0 ? b : c);
                if (lead == 1) {
                    plane.points.push_back({a, b, c});
                }
            }
        }
    }
    const std::size_t n = plane.points.size();
    plane.incidence.assign(n, std::vector<bool>(n, false));
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t l = 0; l < n; ++l) {
            const auto& p = plane.points[x];
            const auto& w = plane.points[l];
            plane.incidence[x][l] = (p[0] * w[0] + p[1] * w[1] + p[2] * w[2]) % q == 0;
        }
    }
    return plane;
}

void validate_triangle(const TrianglePresentation& t)
{
    validate_impl(t, nullptr, nullptr);
}

PresentationSpec triangle_group(const TrianglePresentation& t)
{
    validate_triangle(t);
    const int n = static_cast<int>(t.lambda.size());
    std::ostringstream text;
    text << "gens:";
    for (int x = 0; x < n; ++x) {
        text << " a" << x;
    }
    text << '\n';
    std::set<std::array<int, 3>> done;
    for (const auto& tr : t.triples) {
        const std::array<int, 3> r1{tr[1], tr[2], tr[0]};
        const std::array<int, 3> r2{tr[2], tr[0], tr[1]};
        if (done.count(tr) || done.count(r1) || done.count(r2)) {
            continue;
        }
        done.insert(tr);
        text << "rel: a" << tr[0] << "*a" << tr[1] << "*a" << tr[2] << '\n';
    }
    return parse_presentation(text.str());
}

std::vector<TrianglePresentation> generate_triangle_presentations(int q)
{
    if (q != 2) {
        throw InputError("triangle presentations can only be generated for q = 2");
    }
    const ProjectivePlane plane = projective_plane(q);
    const auto group = collineations(plane);
    const int n = static_cast<int>(plane.size());

    std::set<std::vector<int>> canonical;
    std::vector<TrianglePresentation> out;
    std::vector<int> lambda(n);
    for (int i = 0; i < n; ++i) {
        lambda[i] = i;
    }
    do {
        std::vector<std::vector<std::array<int, 3>>> covers;
        CoverSearch(plane, lambda).run(covers);
        for (auto& triples : covers) {
            TrianglePresentation t{q, lambda, std::move(triples)};
            std::sort(t.triples.begin(), t.triples.end());
            TrianglePresentation best = t;
            std::vector<int> best_code = encode(t);
            for (const auto& g : group) {
                TrianglePresentation image = apply(g, t);
                auto code = encode(image);
                if (code < best_code) {
                    best_code = std::move(code);
                    best = std::move(image);
                }
            }
            if (canonical.insert(best_code).second) {
                out.push_back(std::move(best));
            }
        }
    } while (std::next_permutation(lambda.begin(), lambda.end()));

    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return encode(a) < encode(b); });
    return out;
}

TrianglePresentation parse_triangle(std::string_view text)
{
    TrianglePresentation t;
    std::vector<std::pair<int, int>> lambda_entries;  // (point, line)
    std::vector<int> lambda_line_of_point;
    std::vector<int> triple_lines;
    std::map<int, int> lambda_source;

    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    bool have_q = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key)) {
            continue;
        }
        if (key == "q:") {
            std::string v;
            ls >> v;
            t.q = parse_index(v, "", lineno);
            have_q = true;
        } else if (key == "lambda:") {
            std::string x;
            std::string arrow;
            std::string l;
            if (!(ls >> x >> arrow >> l) || arrow != "->") {
                throw InputError("line " + std::to_string(lineno) + ": expected 'lambda: xI -> lJ'");
            }
            const int xi = parse_index(x, "x", lineno);
            const int lj = parse_index(l, "l", lineno);
            if (lambda_source.count(xi)) {
                throw InputError("line " + std::to_string(lineno) + ": lambda(" +
                                 std::to_string(xi) + ") already given on line " +
                                 std::to_string(lambda_source[xi]));
            }
            lambda_source[xi] = lineno;
            lambda_entries.emplace_back(xi, lj);
        } else if (key == "triple:") {
            std::array<int, 3> tr{};
            for (int& v : tr) {
                std::string tok;
                if (!(ls >> tok)) {
                    throw InputError("line " + std::to_string(lineno) + ": expected three points");
                }
                v = parse_index(tok, "x", lineno);
            }
            t.triples.push_back(tr);
            triple_lines.push_back(lineno);
        } else {
            throw InputError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        }
        std::string extra;
        if (ls >> extra) {
            throw InputError("line " + std::to_string(lineno) + ": trailing text '" + extra + "'");
        }
    }
    if (!have_q) {
        throw InputError("missing 'q:' line");
    }
    if (!is_prime(t.q)) {
        throw InputError("only prime q is supported, got q=" + std::to_string(t.q));
    }
    const int n = t.q * t.q + t.q + 1;
    t.lambda.assign(n, -1);
    lambda_line_of_point.assign(n, 0);
    for (auto [x, l] : lambda_entries) {
        if (x < 0 || x >= n) {
            throw InputError("line " + std::to_string(lambda_source[x]) + ": point " +
                             std::to_string(x) + " outside 0.." + std::to_string(n - 1));
        }
        t.lambda[x] = l;
        lambda_line_of_point[x] = lambda_source[x];
    }
    for (int x = 0; x < n; ++x) {
        if (t.lambda[x] < 0 && !lambda_source.count(x)) {
            throw InputError("lambda(" + std::to_string(x) + ") is not given");
        }
    }
    validate_impl(t, &lambda_line_of_point, &triple_lines);
    return t;
}

TrianglePresentation load_triangle(const std::string& path)
{
    std::ifstream f(path);
    if (!f) {
        throw InputError("cannot open triangle presentation file " + path);
    }
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_triangle(ss.str());
}

std::string format_triangle(const TrianglePresentation& t)
{
    std::ostringstream out;
    out << "q: " << t.q << '\n';
    for (std::size_t x = 0; x < t.lambda.size(); ++x) {
        out << "lambda: x" << x << " -> l" << t.lambda[x] << '\n';
    }
    for (const auto& tr : t.triples) {
        out << "triple: " << tr[0] << ' ' << tr[1] << ' ' << tr[2] << '\n';
    }
    return out.str();
}

}  // namespace kazhdan
