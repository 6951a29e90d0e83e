#include "kazhdan/matrix_backend.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace kazhdan {
namespace {

// Entry arithmetic for the two matrix rings.
struct IntegerRing {
    using Entry = mpz_class;

    Entry from_long(long v) const { return Entry(v); }
    Entry add(const Entry& a, const Entry& b) const { return a + b; }
    Entry mul(const Entry& a, const Entry& b) const { return a * b; }
    std::string encode(const Entry& a) const { return a.get_str(36); }
    Entry decode(const std::string& s) const { return Entry(s, 36); }
    std::string name() const { return "Z"; }
};

struct PrimeField {
    using Entry = long;
    long p;

    Entry from_long(long v) const { return ((v % p) + p) % p; }
    Entry add(Entry a, Entry b) const { return (a + b) % p; }
    Entry mul(Entry a, Entry b) const { return (a * b) % p; }
    std::string encode(Entry a) const { return std::to_string(a); }
    Entry decode(const std::string& s) const { return std::stol(s); }
    std::string name() const { return "F" + std::to_string(p); }
};

template <class Ring>
class MatrixBackend final : public GroupBackend {
public:
    using Entry = typename Ring::Entry;
    using Matrix = std::vector<Entry>;

    MatrixBackend(const MatrixGroupSpec& spec, Ring ring) : n_(spec.dimension), ring_(ring)
    {
        if (n_ == 0) {
            throw InputError("matrix dimension must be positive");
        }
        for (const auto& g : spec.generators) {
            if (g.entries.size() != n_ * n_) {
                throw InputError("generator " + g.name + " has wrong size");
            }
            Matrix m(n_ * n_);
            for (std::size_t i = 0; i < n_ * n_; ++i) {
                m[i] = ring_.from_long(g.entries[i]);
            }
            mats_.push_back(std::move(m));
        }
        std::vector<Generator> symbols;
        const Matrix id = identity_matrix();
        for (std::size_t a = 0; a < mats_.size(); ++a) {
            int inv = -1;
            for (std::size_t b = 0; b < mats_.size(); ++b) {
                if (mul(mats_[a], mats_[b]) == id) {
                    inv = static_cast<int>(b);
                    break;
                }
            }
            if (inv < 0) {
                throw InputError("generator " + spec.generators[a].name +
                                 " is not invertible within the generating set");
            }
            symbols.push_back({spec.generators[a].name, static_cast<Letter>(inv),
                               static_cast<std::size_t>(inv) == a});
        }
        symbols_ = GeneratorSet(std::move(symbols));
    }

    std::string_view kind() const override { return "matrix"; }
    const GeneratorSet& generators() const override { return symbols_; }

    GroupElementId identity() const override { return {encode(identity_matrix()), 0}; }

    GroupElementId canonicalize(const Word& word) const override
    {
        Matrix m = identity_matrix();
        for (Letter a : word) {
            if (a >= mats_.size()) {
                throw InputError("letter outside the generating set");
            }
            m = mul(m, mats_[a]);
        }
        return {encode(m), static_cast<int>(word.size())};
    }

    GroupElementId multiply(const GroupElementId& x, const GroupElementId& y) const override
    {
        return {encode(mul(decode(x.key), decode(y.key))), x.length + y.length};
    }

    GroupElementId invert(const GroupElementId& x) const override
    {
        return {encode(inverse(decode(x.key))), x.length};
    }

    std::string format(const GroupElementId& x) const override
    {
        const Matrix m = decode(x.key);
        std::ostringstream out;
        out << '[';
        for (std::size_t i = 0; i < n_; ++i) {
            out << (i ? ",[" : "[");
            for (std::size_t j = 0; j < n_; ++j) {
                out << (j ? "," : "") << m[i * n_ + j];
            }
            out << ']';
        }
        out << ']';
        return out.str();
    }

    bool identification_complete() const override { return true; }

private:
    Matrix identity_matrix() const
    {
        Matrix m(n_ * n_, ring_.from_long(0));
        for (std::size_t i = 0; i < n_; ++i) {
            m[i * n_ + i] = ring_.from_long(1);
        }
        return m;
    }

    Matrix mul(const Matrix& a, const Matrix& b) const
    {
        Matrix c(n_ * n_, ring_.from_long(0));
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t k = 0; k < n_; ++k) {
                if (a[i * n_ + k] == 0) {
                    continue;
                }
                for (std::size_t j = 0; j < n_; ++j) {
                    c[i * n_ + j] = ring_.add(c[i * n_ + j], ring_.mul(a[i * n_ + k], b[k * n_ + j]));
                }
            }
        }
        return c;
    }

    // Exact Gauss-Jordan, over Q for the integer ring (the result is
    // integral since the determinant is a unit) and over F_p otherwise.
    Matrix inverse(const Matrix& a) const;

    std::string encode(const Matrix& m) const
    {
        std::string s;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i) {
                s += ',';
            }
            s += ring_.encode(m[i]);
        }
        return s;
    }

    Matrix decode(const std::string& key) const
    {
        Matrix m;
        m.reserve(n_ * n_);
        std::size_t start = 0;
        while (true) {
            auto comma = key.find(',', start);
            m.push_back(ring_.decode(key.substr(start, comma - start)));
            if (comma == std::string::npos) {
                break;
            }
            start = comma + 1;
        }
        return m;
    }

    std::size_t n_;
    Ring ring_;
    std::vector<Matrix> mats_;
    GeneratorSet symbols_;
};

template <>
MatrixBackend<IntegerRing>::Matrix MatrixBackend<IntegerRing>::inverse(const Matrix& a) const
{
    std::vector<mpq_class> aug(n_ * 2 * n_);
    const std::size_t w = 2 * n_;
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            aug[i * w + j] = a[i * n_ + j];
        }
        aug[i * w + n_ + i] = 1;
    }
    for (std::size_t c = 0; c < n_; ++c) {
        std::size_t piv = c;
        while (piv < n_ && aug[piv * w + c] == 0) {
            ++piv;
        }
        if (piv == n_) {
            throw InputError("singular matrix");
        }
        if (piv != c) {
            for (std::size_t j = 0; j < w; ++j) {
                std::swap(aug[piv * w + j], aug[c * w + j]);
            }
        }
        const mpq_class inv = 1 / aug[c * w + c];
        for (std::size_t j = 0; j < w; ++j) {
            aug[c * w + j] *= inv;
        }
        for (std::size_t i = 0; i < n_; ++i) {
            if (i == c || aug[i * w + c] == 0) {
                continue;
            }
            const mpq_class f = aug[i * w + c];
            for (std::size_t j = 0; j < w; ++j) {
                aug[i * w + j] -= f * aug[c * w + j];
            }
        }
    }
    Matrix out(n_ * n_);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            const mpq_class& q = aug[i * w + n_ + j];
            if (q.get_den() != 1) {
                throw InputError("matrix is not invertible over Z");
            }
            out[i * n_ + j] = q.get_num();
        }
    }
    return out;
}

long mod_inverse(long a, long p)
{
    long t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
        long q = r / nr;
        t = std::exchange(nt, t - q * nt);
        r = std::exchange(nr, r - q * nr);
    }
    if (r != 1) {
        throw InputError("element not invertible modulo p");
    }
    return ((t % p) + p) % p;
}

template <>
MatrixBackend<PrimeField>::Matrix MatrixBackend<PrimeField>::inverse(const Matrix& a) const
{
    const long p = ring_.p;
    const std::size_t w = 2 * n_;
    std::vector<long> aug(n_ * w, 0);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            aug[i * w + j] = a[i * n_ + j];
        }
        aug[i * w + n_ + i] = 1;
    }
    for (std::size_t c = 0; c < n_; ++c) {
        std::size_t piv = c;
        while (piv < n_ && aug[piv * w + c] == 0) {
            ++piv;
        }
        if (piv == n_) {
            throw InputError("singular matrix over F_p");
        }
        if (piv != c) {
            for (std::size_t j = 0; j < w; ++j) {
                std::swap(aug[piv * w + j], aug[c * w + j]);
            }
        }
        const long inv = mod_inverse(aug[c * w + c], p);
        for (std::size_t j = 0; j < w; ++j) {
            aug[c * w + j] = aug[c * w + j] * inv % p;
        }
        for (std::size_t i = 0; i < n_; ++i) {
            if (i == c || aug[i * w + c] == 0) {
                continue;
            }
            const long f = aug[i * w + c];
            for (std::size_t j = 0; j < w; ++j) {
                aug[i * w + j] = ((aug[i * w + j] - f * aug[c * w + j]) % p + p) % p;
            }
        }
    }
    Matrix out(n_ * n_);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            out[i * n_ + j] = aug[i * w + n_ + j];
        }
    }
    return out;
}

bool is_prime(long p)
{
    if (p < 2) {
        return false;
    }
    for (long d = 2; d * d <= p; ++d) {
        if (p % d == 0) {
            return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------

std::string encode_monomial(const MonomialElement& x)
{
    std::string s;
    s.reserve(2 * x.perm.size());
    for (int v : x.perm) {
        s.push_back(static_cast<char>(v));
    }
    for (int v : x.exps) {
        s.push_back(static_cast<char>(v));
    }
    return s;
}

class MonomialBackend final : public GroupBackend {
public:
    explicit MonomialBackend(const MonomialGroupSpec& spec) : m_(spec.m), n_(spec.n)
    {
        if (spec.m < 1 || spec.n < 1 || spec.p < 1 || spec.m % spec.p != 0) {
            throw InputError("G(m,p,n) requires p | m and positive parameters");
        }
        if (spec.m > 120 || spec.n > 120) {
            throw InputError("G(m,p,n) parameters too large");
        }
        for (const auto& g : spec.generators) {
            const auto& x = g.element;
            if (x.perm.size() != static_cast<std::size_t>(n_) ||
                x.exps.size() != static_cast<std::size_t>(n_)) {
                throw InputError("monomial generator " + g.name + " has wrong size");
            }
            int sum = 0;
            for (int e : x.exps) {
                sum += e;
            }
            if (sum % spec.p != 0) {
                throw InputError("monomial generator " + g.name + " violates sum k = 0 mod p");
            }
            elems_.push_back(x);
        }
        std::vector<Generator> symbols;
        for (std::size_t a = 0; a < elems_.size(); ++a) {
            const MonomialElement inv = monomial_inverse(elems_[a], m_);
            int found = -1;
            for (std::size_t b = 0; b < elems_.size(); ++b) {
                if (elems_[b] == inv) {
                    found = static_cast<int>(b);
                    break;
                }
            }
            if (found < 0) {
                throw InputError("generating set not closed under inverse at " +
                                 spec.generators[a].name);
            }
            symbols.push_back({spec.generators[a].name, static_cast<Letter>(found),
                               static_cast<std::size_t>(found) == a});
        }
        symbols_ = GeneratorSet(std::move(symbols));
    }

    std::string_view kind() const override { return "monomial"; }
    const GeneratorSet& generators() const override { return symbols_; }

    GroupElementId identity() const override { return {encode_monomial(monomial_identity(n_)), 0}; }

    GroupElementId canonicalize(const Word& word) const override
    {
        MonomialElement x = monomial_identity(n_);
        for (Letter a : word) {
            if (a >= elems_.size()) {
                throw InputError("letter outside the generating set");
            }
            x = monomial_multiply(x, elems_[a], m_);
        }
        return {encode_monomial(x), static_cast<int>(word.size())};
    }

    GroupElementId multiply(const GroupElementId& x, const GroupElementId& y) const override
    {
        return {encode_monomial(monomial_multiply(decode_monomial(x.key), decode_monomial(y.key), m_)),
                x.length + y.length};
    }

    GroupElementId invert(const GroupElementId& x) const override
    {
        return {encode_monomial(monomial_inverse(decode_monomial(x.key), m_)), x.length};
    }

    std::string format(const GroupElementId& x) const override
    {
        const MonomialElement e = decode_monomial(x.key);
        std::ostringstream out;
        out << "[(";
        for (int i = 0; i < n_; ++i) {
            out << (i ? "," : "") << e.exps[i];
        }
        out << "),(";
        for (int i = 0; i < n_; ++i) {
            out << (i ? "," : "") << e.perm[i] + 1;
        }
        out << ")]";
        return out.str();
    }

    bool identification_complete() const override { return true; }

private:
    int m_;
    int n_;
    std::vector<MonomialElement> elems_;
    GeneratorSet symbols_;
};

}  // namespace

MatrixGroupSpec elementary_matrix_spec(std::size_t n, std::optional<long> modulus)
{
    if (n < 2) {
        throw InputError("elementary matrices need dimension >= 2");
    }
    MatrixGroupSpec spec;
    spec.dimension = n;
    spec.modulus = modulus;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) {
                continue;
            }
            for (long sign : {1L, -1L}) {
                std::vector<long> e(n * n, 0);
                for (std::size_t k = 0; k < n; ++k) {
                    e[k * n + k] = 1;
                }
                e[i * n + j] = sign;
                std::string name = "e" + std::to_string(i + 1) + std::to_string(j + 1);
                if (sign < 0) {
                    name += "'";
                }
                spec.generators.push_back({name, e});
            }
        }
    }
    return spec;
}

BackendPtr make_matrix_backend(const MatrixGroupSpec& spec)
{
    if (spec.modulus) {
        if (!is_prime(*spec.modulus) || *spec.modulus > 3037000499L) {
            throw InputError("modulus must be a prime of moderate size");
        }
        return std::make_shared<MatrixBackend<PrimeField>>(spec, PrimeField{*spec.modulus});
    }
    return std::make_shared<MatrixBackend<IntegerRing>>(spec, IntegerRing{});
}

std::vector<mpz_class> decode_integer_matrix(const std::string& key)
{
    std::vector<mpz_class> out;
    std::size_t start = 0;
    while (true) {
        auto comma = key.find(',', start);
        out.emplace_back(key.substr(start, comma - start), 36);
        if (comma == std::string::npos) {
            break;
        }
        start = comma + 1;
    }
    return out;
}

MonomialElement monomial_identity(int n)
{
    MonomialElement x;
    x.perm.resize(n);
    x.exps.assign(n, 0);
    for (int i = 0; i < n; ++i) {
        x.perm[i] = i;
    }
    return x;
}

// [(a),s] * [(b),t] = [(a_i b_{s(i)}), i -> t(s(i))], the matrix product.
MonomialElement monomial_multiply(const MonomialElement& x, const MonomialElement& y, int m)
{
    const std::size_t n = x.perm.size();
    MonomialElement z;
    z.perm.resize(n);
    z.exps.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const int si = x.perm[i];
        z.perm[i] = y.perm[si];
        z.exps[i] = (x.exps[i] + y.exps[si]) % m;
    }
    return z;
}

MonomialElement monomial_inverse(const MonomialElement& x, int m)
{
    // Row i of x maps to column s(i); the inverse has row s(i) mapping to
    // column i with the conjugate coefficient.
    const std::size_t n = x.perm.size();
    MonomialElement z;
    z.perm.resize(n);
    z.exps.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const int si = x.perm[i];
        z.perm[si] = static_cast<int>(i);
        z.exps[si] = (m - x.exps[i]) % m;
    }
    return z;
}

std::vector<std::complex<double>> realize_monomial(const MonomialElement& x, int m)
{
    const std::size_t n = x.perm.size();
    std::vector<std::complex<double>> out(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const double angle = 2.0 * std::numbers::pi * x.exps[i] / m;
        out[i * n + x.perm[i]] = std::polar(1.0, angle);
    }
    return out;
}

MonomialElement decode_monomial(const std::string& key)
{
    const std::size_t n = key.size() / 2;
    MonomialElement x;
    x.perm.resize(n);
    x.exps.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        x.perm[i] = static_cast<unsigned char>(key[i]);
        x.exps[i] = static_cast<unsigned char>(key[n + i]);
    }
    return x;
}

MonomialGroupSpec gmpn_spec(int m, int p, int n)
{
    if (m < 1 || p < 1 || n < 1 || m % p != 0) {
        throw InputError("G(m,p,n) requires positive parameters with p | m");
    }
    MonomialGroupSpec spec{m, p, n, {}};
    auto diag = [&](int k0) {
        MonomialElement x = monomial_identity(n);
        x.exps[0] = ((k0 % m) + m) % m;
        return x;
    };
    auto add_with_inverse = [&](const std::string& name, const MonomialElement& x) {
        spec.generators.push_back({name, x});
        MonomialElement inv = monomial_inverse(x, m);
        if (!(inv == x)) {
            spec.generators.push_back({name + "'", inv});
        }
    };
    if (p == 1 && m > 1) {
        add_with_inverse("t", diag(1));
    } else if (p > 1 && p < m) {
        add_with_inverse("t", diag(p));
    }
    if (p > 1 && n >= 2) {
        MonomialElement s0 = monomial_identity(n);
        std::swap(s0.perm[0], s0.perm[1]);
        s0.exps[0] = m - 1;
        s0.exps[1] = 1 % m;
        add_with_inverse("s0", s0);
    }
    for (int i = 0; i + 1 < n; ++i) {
        MonomialElement s = monomial_identity(n);
        std::swap(s.perm[i], s.perm[i + 1]);
        add_with_inverse("s" + std::to_string(i + 1), s);
    }
    return spec;
}

BackendPtr make_monomial_backend(const MonomialGroupSpec& spec)
{
    return std::make_shared<MonomialBackend>(spec);
}

}  // namespace kazhdan
