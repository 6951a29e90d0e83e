#include "kazhdan/certify.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace kazhdan {

namespace {

Rational pow2(int e)
{
    Rational x(1);
    if (e >= 0) {
        mpz_mul_2exp(x.get_num_mpz_t(), x.get_num_mpz_t(), static_cast<mp_bitcnt_t>(e));
    } else {
        mpz_mul_2exp(x.get_den_mpz_t(), x.get_den_mpz_t(), static_cast<mp_bitcnt_t>(-e));
    }
    return x;
}

mpz_class lcm_of_denominators(const std::vector<Rational>& values)
{
    mpz_class l = 1;
    for (const auto& v : values) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    }
    return l;
}

}  // namespace

RationalMatrix round_and_project(const Eigen::MatrixXd& Q, int bits)
{
    if (Q.rows() != Q.cols()) {
        throw InputError("Gram matrix is not square");
    }
    if (bits < 1 || bits > 200) {
        throw InputError("rounding bits must be in 1..200");
    }
    const std::size_t n = static_cast<std::size_t>(Q.rows());
    std::vector<mpz_class> R(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            const double v = 0.5 * (Q(i, j) + Q(j, i));
            mpz_class z(std::nearbyint(std::ldexp(v, bits)));
            R[i * n + j] = z;
            R[j * n + i] = z;
        }
    }
    std::vector<mpz_class> row(n, 0);
    mpz_class total = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            row[i] += R[i * n + j];
        }
        total += row[i];
    }
    // (P R P)_ij = R_ij - row_i/n - row_j/n + total/n^2  (R symmetric)
    const mpz_class nn = static_cast<unsigned long>(n);
    mpz_class den = nn * nn;
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(bits));
    RationalMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            mpz_class num = nn * nn * R[i * n + j] - nn * (row[i] + row[j]) + total;
            Rational q(num, den);
            q.canonicalize();
            out(i, j) = std::move(q);
        }
    }
    return out;
}

LdlFactor exact_ldl(const RationalMatrix& A)
{
    const std::size_t m = A.n;
    LdlFactor f;
    f.m = m;
    f.lower.assign(m * (m - (m ? 1 : 0)) / 2, Rational(0));
    f.r.assign(m, Rational(0));
    if (m == 0) {
        f.ok = true;
        return f;
    }
    const mpz_class scale = lcm_of_denominators(A.a);
    // Lower triangle of scale * A as integers.
    std::vector<mpz_class> M(m * (m + 1) / 2);
    auto at = [](std::size_t i, std::size_t j) { return i * (i + 1) / 2 + j; };
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            const Rational& v = A(i, j);
            M[at(i, j)] = v.get_num() * (scale / v.get_den());
        }
    }
    mpz_class prev = 1;
    mpz_class t;
    double min_pivot = INFINITY;
    for (std::size_t k = 0; k < m; ++k) {
        const mpz_class pivot = M[at(k, k)];
        const int s = sgn(pivot);
        if (s < 0) {
            f.min_pivot = Rational(pivot, prev * scale).get_d();
            return f;
        }
        if (s == 0) {
            for (std::size_t i = k + 1; i < m; ++i) {
                if (sgn(M[at(i, k)]) != 0) {
                    f.min_pivot = 0.0;
                    return f;
                }
            }
            min_pivot = std::min(min_pivot, 0.0);
            continue;  // L column is e_k, r_k = 0, previous pivot kept
        }
        Rational rk(pivot, prev * scale);
        rk.canonicalize();
        min_pivot = std::min(min_pivot, rk.get_d());
        f.r[k] = std::move(rk);
        for (std::size_t i = k + 1; i < m; ++i) {
            Rational l(M[at(i, k)], pivot);
            l.canonicalize();
            f.lower[i * (i - 1) / 2 + k] = std::move(l);
        }
        for (std::size_t i = k + 1; i < m; ++i) {
            const mpz_class& mik = M[at(i, k)];
            for (std::size_t j = k + 1; j <= i; ++j) {
                mpz_class& e = M[at(i, j)];
                e *= pivot;
                t = mik * M[at(j, k)];
                e -= t;
                mpz_divexact(e.get_mpz_t(), e.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = pivot;
    }
    f.ok = true;
    f.min_pivot = min_pivot;
    return f;
}

ShiftedLdl exact_ldl_with_shift(const RationalMatrix& Qp)
{
    const std::size_t n = Qp.n;
    if (n == 0) {
        throw InputError("empty Gram matrix");
    }
    const std::size_t m = n - 1;
    ShiftedLdl out;
    std::vector<int> schedule{0};
    for (int e = 40; e >= 8; e -= 4) {
        schedule.push_back(e);
    }
    const Rational inv_n(1, static_cast<unsigned long>(n));
    for (int e : schedule) {
        const Rational tau = e == 0 ? Rational(0) : pow2(-e);
        RationalMatrix A(m);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < m; ++j) {
                A(i, j) = Qp(i, j);
                if (e != 0) {
                    A(i, j) += tau * ((i == j ? Rational(1) : Rational(0)) - inv_n);
                }
            }
        }
        LdlFactor f = exact_ldl(A);
        if (f.ok) {
            out.factor = std::move(f);
            out.tau = tau;
            out.ok = true;
            return out;
        }
        out.min_pivot = f.min_pivot;
    }
    return out;
}

RationalMatrix reconstruct_gram(const LdlFactor& f)
{
    const std::size_t m = f.m;
    RationalMatrix G(m + 1);
    // M = L diag(r) L^T on the leading block.
    std::vector<Rational> lr(m * m, Rational(0));  // lr[i*m+k] = L_ik r_k
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t k = 0; k <= i; ++k) {
            if (sgn(f.r[k]) == 0) {
                continue;
            }
            lr[i * m + k] = k == i ? f.r[k] : Rational(f.L(i, k) * f.r[k]);
        }
    }
    Rational acc;
    Rational term;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            acc = 0;
            for (std::size_t k = 0; k <= j; ++k) {
                const Rational& a = lr[i * m + k];
                if (sgn(a) == 0) {
                    continue;
                }
                if (k == j) {
                    acc += a;
                } else {
                    const Rational& l = f.L(j, k);
                    if (sgn(l) != 0) {
                        mpq_mul(term.get_mpq_t(), a.get_mpq_t(), l.get_mpq_t());
                        acc += term;
                    }
                }
            }
            G(i, j) = acc;
            G(j, i) = acc;
        }
    }
    // G = W^T M W with W = [I | -1].
    Rational total(0);
    for (std::size_t i = 0; i < m; ++i) {
        Rational row(0);
        for (std::size_t j = 0; j < m; ++j) {
            row += G(i, j);
        }
        G(i, m) = -row;
        G(m, i) = -row;
        total += row;
    }
    G(m, m) = total;
    return G;
}

std::vector<Rational> residual(const SdpProblem& problem, const Rational& eps, const RationalMatrix& G)
{
    const auto& table = *problem.table;
    std::vector<Rational> c(table.universe_size(), Rational(0));
    for (std::size_t g = 0; g < c.size(); ++g) {
        c[g] = problem.target_exact[g] - eps * problem.laplacian_exact[g];
    }
    for (std::size_t i = 0; i < problem.n; ++i) {
        for (std::size_t j = 0; j < problem.n; ++j) {
            c[table.product(i, j)] -= G(i, j);
        }
    }
    Rational aug(0);
    for (const auto& x : c) {
        aug += x;
    }
    if (sgn(aug) != 0) {
        throw std::logic_error("residual is not in the augmentation ideal");
    }
    return c;
}

int penalty_exponent(int radius)
{
    int D = 0;
    while ((1L << D) < 2L * radius) {
        ++D;
    }
    return D;
}

std::string kappa_floor_decimal(const Rational& eps, std::size_t generating_set_size)
{
    if (sgn(eps) <= 0) {
        return "0";
    }
    // floor(10^10 sqrt(x)) = isqrt(floor(10^20 x))
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, 20);
    Rational y = eps * 2 * scale / static_cast<unsigned long>(generating_set_size);
    mpz_class fl = y.get_num() / y.get_den();
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), fl.get_mpz_t());
    std::string digits = root.get_str();
    if (digits.size() <= 10) {
        digits.insert(0, 11 - digits.size(), '0');
    }
    digits.insert(digits.size() - 10, ".");
    return digits;
}

double Certificate::kappa_certified_value() const
{
    return std::stod(kappa_certified);
}

namespace {

Rational penalty_factor(int D, bool involution_free)
{
    return pow2(involution_free ? 2 * D - 2 : 2 * D - 1);
}

}  // namespace

std::optional<Certificate> certify(const SdpProblem& problem, const GramSolution& solution,
                                   const GroupBackend& backend, const std::string& group,
                                   const CertifyOptions& options, std::string* failure)
{
    if (static_cast<std::size_t>(solution.Q.rows()) != problem.n) {
        throw InputError("Gram matrix size does not match the ball");
    }
    const auto& table = *problem.table;
    Certificate cert;
    cert.group = group;
    cert.generating_set_size = problem.generating_set_size;
    cert.radius = problem.radius;
    cert.identification_complete = backend.identification_complete();
    cert.rounding_bits = options.rounding_bits;
    cert.eps_numeric = solution.eps;
    cert.n = problem.n;

    // Involution-free only when decidable: complete identification and no
    // generator equal to its own inverse.
    bool involution_free = cert.identification_complete;
    for (std::size_t a = 0; a < backend.generators().size(); ++a) {
        const auto s = backend.generator(static_cast<Letter>(a));
        const long idx = table.find(s);
        if (idx < 0 || static_cast<std::size_t>(idx) >= problem.n) {
            throw std::logic_error("generator missing from the ball");
        }
        cert.generators.push_back(static_cast<std::uint32_t>(idx));
        if (table.inverse(static_cast<std::uint32_t>(idx)) == static_cast<std::uint32_t>(idx)) {
            involution_free = false;
        }
    }
    cert.involution_free = involution_free;

    for (const auto& g : table.universe()) {
        cert.universe_words.push_back(backend.format(g));
        cert.universe_lengths.push_back(g.length);
    }
    cert.pairing.resize(problem.n * problem.n);
    for (std::size_t i = 0; i < problem.n; ++i) {
        for (std::size_t j = 0; j < problem.n; ++j) {
            cert.pairing[i * problem.n + j] = table.product(i, j);
        }
    }

    const RationalMatrix Qp = round_and_project(solution.Q, options.rounding_bits);
    ShiftedLdl ldl = exact_ldl_with_shift(Qp);
    if (!ldl.ok) {
        if (failure) {
            *failure = "Gram matrix is not PSD after the largest shift (min pivot " +
                       std::to_string(ldl.min_pivot) + ")";
        }
        return std::nullopt;
    }
    cert.tau = ldl.tau;
    cert.factor = std::move(ldl.factor);

    // Q' + tau P equals the factored Gram matrix exactly.
    RationalMatrix G = Qp;
    if (sgn(cert.tau) != 0) {
        const Rational off = -cert.tau / static_cast<unsigned long>(problem.n);
        const Rational diag = cert.tau + off;
        for (std::size_t i = 0; i < problem.n; ++i) {
            for (std::size_t j = 0; j < problem.n; ++j) {
                G(i, j) += i == j ? diag : off;
            }
        }
    }

    mpz_class scaled(std::floor(std::ldexp(solution.eps, options.rounding_bits)));
    cert.eps_rational = Rational(scaled) * pow2(-options.rounding_bits);
    cert.eps_rational.canonicalize();

    const auto c = residual(problem, cert.eps_rational, G);
    cert.residual_l1 = 0;
    for (std::size_t g = 0; g < c.size(); ++g) {
        if (sgn(c[g]) != 0) {
            cert.residual.emplace_back(static_cast<std::uint32_t>(g), c[g]);
            cert.residual_l1 += abs(c[g]);
        }
    }
    cert.D = penalty_exponent(problem.radius);
    cert.eps_certified = cert.eps_rational - penalty_factor(cert.D, cert.involution_free) * cert.residual_l1;
    cert.kappa_certified = kappa_floor_decimal(cert.eps_certified, cert.generating_set_size);
    return cert;
}

std::string write_certificate(const Certificate& cert)
{
    std::ostringstream out;
    out.precision(17);
    out << "kazhdan-certificate 1\n";
    out << "group: " << cert.group << '\n';
    out << "generating_set_size: " << cert.generating_set_size << '\n';
    out << "radius: " << cert.radius << '\n';
    out << "involution_free: " << cert.involution_free << '\n';
    out << "identification_complete: " << cert.identification_complete << '\n';
    out << "rounding_bits: " << cert.rounding_bits << '\n';
    out << "eps_numeric: " << cert.eps_numeric << '\n';
    out << "eps_rational: " << cert.eps_rational.get_str() << '\n';
    out << "tau: " << cert.tau.get_str() << '\n';
    out << "D: " << cert.D << '\n';
    out << "residual_l1: " << cert.residual_l1.get_str() << '\n';
    out << "eps_certified: " << cert.eps_certified.get_str() << '\n';
    out << "kappa_certified: " << cert.kappa_certified << '\n';
    out << "ball_size: " << cert.n << '\n';
    out << "universe: " << cert.universe_words.size() << '\n';
    for (std::size_t g = 0; g < cert.universe_words.size(); ++g) {
        out << g << ' ' << cert.universe_lengths[g] << ' ' << cert.universe_words[g] << '\n';
    }
    out << "generators:";
    for (auto s : cert.generators) {
        out << ' ' << s;
    }
    out << '\n';
    out << "pairing:\n";
    for (std::size_t i = 0; i < cert.n; ++i) {
        for (std::size_t j = 0; j < cert.n; ++j) {
            out << (j ? " " : "") << cert.pairing[i * cert.n + j];
        }
        out << '\n';
    }
    const std::size_t m = cert.factor.m;
    out << "ldl: " << m << '\n';
    for (std::size_t k = 0; k < m; ++k) {
        out << "r " << k << ' ' << cert.factor.r[k].get_str() << '\n';
    }
    for (std::size_t i = 1; i < m; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            const Rational& l = cert.factor.L(i, j);
            if (sgn(l) != 0) {
                out << "L " << i << ' ' << j << ' ' << l.get_str() << '\n';
            }
        }
    }
    out << "residual: " << cert.residual.size() << '\n';
    for (const auto& [g, v] : cert.residual) {
        out << g << ' ' << v.get_str() << '\n';
    }
    out << "end\n";
    return out.str();
}

namespace {

class Reader {
public:
    explicit Reader(const std::string& text) : in_(text) {}

    std::string line()
    {
        std::string s;
        if (!std::getline(in_, s)) {
            throw InputError("certificate truncated after line " + std::to_string(lineno_));
        }
        ++lineno_;
        return s;
    }

    std::string value(const std::string& key)
    {
        const std::string s = line();
        const std::string prefix = key + ":";
        if (s.rfind(prefix, 0) != 0) {
            fail("expected '" + key + ":'");
        }
        std::string v = s.substr(prefix.size());
        const auto start = v.find_first_not_of(' ');
        return start == std::string::npos ? "" : v.substr(start);
    }

    Rational rational(const std::string& text)
    {
        try {
            Rational q(text);
            if (sgn(q.get_den()) == 0) {
                fail("zero denominator");
            }
            q.canonicalize();
            return q;
        } catch (const std::invalid_argument&) {
            fail("bad rational '" + text + "'");
        }
        return {};
    }

    long integer(const std::string& text)
    {
        try {
            std::size_t pos = 0;
            const long v = std::stol(text, &pos);
            if (pos != text.size()) {
                fail("bad integer '" + text + "'");
            }
            return v;
        } catch (const std::logic_error&) {
            fail("bad integer '" + text + "'");
        }
        return 0;
    }

    [[noreturn]] void fail(const std::string& msg) const
    {
        throw InputError("certificate line " + std::to_string(lineno_) + ": " + msg);
    }

private:
    std::istringstream in_;
    int lineno_ = 0;
};

}  // namespace

Certificate read_certificate(const std::string& text)
{
    Reader rd(text);
    if (rd.line() != "kazhdan-certificate 1") {
        rd.fail("not a certificate (bad header)");
    }
    Certificate c;
    c.group = rd.value("group");
    c.generating_set_size = static_cast<std::size_t>(rd.integer(rd.value("generating_set_size")));
    c.radius = static_cast<int>(rd.integer(rd.value("radius")));
    c.involution_free = rd.integer(rd.value("involution_free")) != 0;
    c.identification_complete = rd.integer(rd.value("identification_complete")) != 0;
    c.rounding_bits = static_cast<int>(rd.integer(rd.value("rounding_bits")));
    c.eps_numeric = std::stod(rd.value("eps_numeric"));
    c.eps_rational = rd.rational(rd.value("eps_rational"));
    c.tau = rd.rational(rd.value("tau"));
    c.D = static_cast<int>(rd.integer(rd.value("D")));
    c.residual_l1 = rd.rational(rd.value("residual_l1"));
    c.eps_certified = rd.rational(rd.value("eps_certified"));
    c.kappa_certified = rd.value("kappa_certified");
    c.n = static_cast<std::size_t>(rd.integer(rd.value("ball_size")));
    const auto universe = static_cast<std::size_t>(rd.integer(rd.value("universe")));
    if (c.n == 0 || universe < c.n || c.n > 100000) {
        rd.fail("inconsistent ball/universe sizes");
    }
    for (std::size_t g = 0; g < universe; ++g) {
        std::istringstream ls(rd.line());
        std::size_t idx = 0;
        int len = 0;
        std::string word;
        if (!(ls >> idx >> len >> word) || idx != g) {
            rd.fail("bad universe entry");
        }
        c.universe_words.push_back(word);
        c.universe_lengths.push_back(len);
    }
    {
        std::istringstream ls(rd.value("generators"));
        long s = 0;
        while (ls >> s) {
            if (s < 0 || static_cast<std::size_t>(s) >= c.n) {
                rd.fail("generator index outside the ball");
            }
            c.generators.push_back(static_cast<std::uint32_t>(s));
        }
    }
    if (rd.line() != "pairing:") {
        rd.fail("expected 'pairing:'");
    }
    c.pairing.reserve(c.n * c.n);
    for (std::size_t i = 0; i < c.n; ++i) {
        std::istringstream ls(rd.line());
        for (std::size_t j = 0; j < c.n; ++j) {
            long v = -1;
            if (!(ls >> v) || v < 0 || static_cast<std::size_t>(v) >= universe) {
                rd.fail("bad pairing entry");
            }
            c.pairing.push_back(static_cast<std::uint32_t>(v));
        }
    }
    const auto m = static_cast<std::size_t>(rd.integer(rd.value("ldl")));
    if (m + 1 != c.n) {
        rd.fail("factor size must be ball size - 1");
    }
    c.factor.m = m;
    c.factor.r.assign(m, Rational(0));
    c.factor.lower.assign(m * (m ? m - 1 : 0) / 2, Rational(0));
    std::string s = rd.line();
    while (s.rfind("residual:", 0) != 0) {
        std::istringstream ls(s);
        std::string tag;
        ls >> tag;
        if (tag == "r") {
            long k = -1;
            std::string v;
            if (!(ls >> k >> v) || k < 0 || static_cast<std::size_t>(k) >= m) {
                rd.fail("bad r entry");
            }
            c.factor.r[k] = rd.rational(v);
        } else if (tag == "L") {
            long i = -1;
            long j = -1;
            std::string v;
            if (!(ls >> i >> j >> v) || i < 1 || static_cast<std::size_t>(i) >= m || j < 0 || j >= i) {
                rd.fail("bad L entry");
            }
            c.factor.lower[i * (i - 1) / 2 + j] = rd.rational(v);
        } else {
            rd.fail("unexpected line in factor section");
        }
        s = rd.line();
    }
    c.factor.ok = true;
    const auto count = static_cast<std::size_t>(rd.integer(s.substr(9 + s.substr(9).find_first_not_of(' '))));
    for (std::size_t k = 0; k < count; ++k) {
        std::istringstream ls(rd.line());
        long g = -1;
        std::string v;
        if (!(ls >> g >> v) || g < 0 || static_cast<std::size_t>(g) >= universe) {
            rd.fail("bad residual entry");
        }
        c.residual.emplace_back(static_cast<std::uint32_t>(g), rd.rational(v));
    }
    if (rd.line() != "end") {
        rd.fail("expected 'end'");
    }
    return c;
}

VerifyResult verify_certificate(const Certificate& cert)
{
    auto fail = [](std::string msg) { return VerifyResult{false, std::move(msg)}; };
    const std::size_t n = cert.n;
    const std::size_t universe = cert.universe_words.size();
    if (cert.pairing.size() != n * n || cert.factor.m + 1 != n || cert.factor.r.size() != cert.factor.m) {
        return fail("structure: inconsistent dimensions");
    }
    if (cert.generators.size() != cert.generating_set_size) {
        return fail("structure: generator count differs from |S|");
    }
    std::vector<GroupElementId> ids(universe);
    for (std::size_t g = 0; g < universe; ++g) {
        ids[g].key = std::to_string(g);
        ids[g].length = cert.universe_lengths[g];
    }
    PairingTable table;
    try {
        table = PairingTable::from_parts(n, ids, cert.pairing);
    } catch (const std::exception& e) {
        return fail(std::string("structure: ") + e.what());
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (cert.pairing[i * n + i] != 0) {
            return fail("structure: u^-1 u is not the identity for ball element " + std::to_string(i));
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const auto g = cert.pairing[i * n + j];
            if (cert.universe_lengths[g] > 2 * cert.radius) {
                return fail("structure: pairing product longer than 2d");
            }
        }
    }

    // Delta and Delta^2 from the generator list and the pairing table.
    const auto S = static_cast<long>(cert.generating_set_size);
    std::vector<std::pair<std::uint32_t, Rational>> delta{{0, Rational(S)}};
    for (auto s : cert.generators) {
        delta.emplace_back(s, Rational(-1));
    }
    std::vector<Rational> u(universe, Rational(0));
    for (const auto& [g, v] : delta) {
        u[g] += v;
    }
    std::vector<Rational> t(universe, Rational(0));
    for (const auto& [x, a] : delta) {
        const auto xinv = table.inverse(x);
        if (xinv >= n) {
            return fail("structure: inverse of a generator is outside the ball");
        }
        for (const auto& [y, b] : delta) {
            t[table.product(xinv, y)] += a * b;
        }
    }

    for (std::size_t k = 0; k < cert.factor.m; ++k) {
        if (sgn(cert.factor.r[k]) < 0) {
            return fail("factorization: diagonal entry r_" + std::to_string(k) + " is negative");
        }
    }
    if (sgn(cert.tau) < 0) {
        return fail("factorization: negative shift");
    }

    const RationalMatrix G = reconstruct_gram(cert.factor);
    std::vector<Rational> c(universe, Rational(0));
    for (const auto& [g, v] : cert.residual) {
        c[g] += v;
    }
    // Delta^2 - eps Delta - c must equal the Gram-accounted element.
    std::vector<Rational> lhs(universe, Rational(0));
    for (std::size_t g = 0; g < universe; ++g) {
        lhs[g] = t[g] - cert.eps_rational * u[g] - c[g];
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            lhs[cert.pairing[i * n + j]] -= G(i, j);
        }
    }
    for (std::size_t g = 0; g < universe; ++g) {
        if (sgn(lhs[g]) != 0) {
            return fail("reconstruction: Delta^2 - eps Delta - c differs from the Gram element at " +
                        cert.universe_words[g] + " by " + lhs[g].get_str());
        }
    }

    Rational aug(0);
    Rational l1(0);
    for (std::size_t g = 0; g < universe; ++g) {
        aug += c[g];
        l1 += abs(c[g]);
    }
    if (sgn(aug) != 0) {
        return fail("residual: c is not in the augmentation ideal");
    }
    if (l1 != cert.residual_l1) {
        return fail("penalty: stated ||c||_1 = " + cert.residual_l1.get_str() + " but recomputed " +
                    l1.get_str());
    }
    const int D = penalty_exponent(cert.radius);
    if (D != cert.D) {
        return fail("penalty: D should be " + std::to_string(D));
    }
    if (cert.involution_free) {
        if (!cert.identification_complete) {
            return fail("penalty: involution-free claimed without complete identification");
        }
        for (auto s : cert.generators) {
            if (table.inverse(s) == s) {
                return fail("penalty: involution-free claimed but a generator is its own inverse");
            }
        }
    }
    const Rational eps = cert.eps_rational - penalty_factor(D, cert.involution_free) * l1;
    if (eps != cert.eps_certified) {
        return fail("penalty: certified eps should be " + eps.get_str());
    }
    if (kappa_floor_decimal(eps, cert.generating_set_size) != cert.kappa_certified) {
        return fail("bound: kappa should be " + kappa_floor_decimal(eps, cert.generating_set_size));
    }
    return {true, "certificate verified: eps >= " + std::to_string(eps.get_d()) + ", kappa >= " +
                      cert.kappa_certified};
}

}  // namespace kazhdan
