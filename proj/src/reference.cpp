#include "kazhdan/reference.hpp"

#include <cmath>
#include <complex>
#include <map>
#include <numbers>

#include "kazhdan/word.hpp"

namespace kazhdan {

namespace {

using real = long double;
constexpr real kPi = std::numbers::pi_v<long double>;

ReferenceValue make(std::string name, std::string expression, real value, std::string source)
{
    return {std::move(name), std::move(expression), static_cast<double>(value), std::move(source)};
}

std::string family_name(char family, int rank)
{
    if (family == 'I') {
        return "I2(" + std::to_string(rank) + ")";
    }
    return std::string(1, family) + std::to_string(rank);
}

// |1 - zeta_k| = 2 sin(pi / k)
real chord(int k)
{
    return 2 * std::sin(kPi / k);
}

void require(bool ok, const std::string& message)
{
    if (!ok) {
        throw InputError(message);
    }
}

}  // namespace

ReferenceValue eps_q(int q)
{
    require(q >= 2, "eps_q needs q >= 2");
    const real rq = std::sqrt(static_cast<real>(q));
    const real v = 1 - q * (rq + 1 / rq + 1) / (static_cast<real>(q) * q + q + 1);
    return make("eps_q(" + std::to_string(q) + ")", "1 - q(sqrt q + 1/sqrt q + 1)/(q^2+q+1)", v,
                "spectral gap of A~2 groups, normalized Laplacian");
}

ReferenceValue a2tilde_kappa(int q)
{
    const auto e = eps_q(q);
    return make("kappa_A2tilde(" + std::to_string(q) + ")", "sqrt(2 eps_q)",
                std::sqrt(2 * static_cast<real>(e.value)), "Kazhdan constant of A~2 groups");
}

ReferenceValue a2tilde_lambda(int q)
{
    require(q >= 2, "lambda needs q >= 2");
    const real v = 1 - std::sqrt(static_cast<real>(q)) / (q + 1);
    return make("lambda(" + std::to_string(q) + ")", "1 - sqrt(q)/(q+1)", v,
                "smallest nonzero eigenvalue on the building link");
}

int coxeter_number(char family, int rank)
{
    const int n = rank;
    switch (family) {
    case 'A':
        require(n >= 1, "A_n needs n >= 1");
        return n + 1;
    case 'B':
        require(n >= 2, "B_n needs n >= 2");
        return 2 * n;
    case 'D':
        require(n >= 4, "D_n needs n >= 4");
        return 2 * (n - 1);
    case 'E':
        require(n >= 6 && n <= 8, "E_n needs 6 <= n <= 8");
        return n == 6 ? 12 : (n == 7 ? 18 : 30);
    case 'F':
        require(n == 4, "only F4 exists");
        return 12;
    case 'H':
        require(n == 3 || n == 4, "only H3 and H4 exist");
        return n == 3 ? 10 : 30;
    case 'I':
        require(n >= 3, "I2(m) needs m >= 3");
        return n;
    default:
        throw InputError(std::string("unknown Coxeter family ") + family);
    }
}

ReferenceValue coxeter_kappa(char family, int rank)
{
    coxeter_number(family, rank);  // domain check
    const real n = rank;
    const real r2 = std::sqrt(2.0L);
    const real r5 = std::sqrt(5.0L);
    real v = 0;
    std::string expr;
    switch (family) {
    case 'A':
        v = std::sqrt(24 / ((n + 1) * (n + 1) * (n + 1) - (n + 1)));
        expr = "sqrt(24/((n+1)^3-(n+1)))";
        break;
    case 'B':
        v = std::sqrt(12 / (n * (4 - 3 * r2 + 3 * (r2 - 1) * n + 2 * n * n)));
        expr = "sqrt(12/(n(4-3sqrt2+3(sqrt2-1)n+2n^2)))";
        break;
    case 'D':
        v = std::sqrt(12 / (n * (n - 1) * (2 * n - 1)));
        expr = "sqrt(12/(n(n-1)(2n-1)))";
        break;
    case 'E':
        v = rank == 6 ? std::sqrt(1 / 39.0L) : (rank == 7 ? std::sqrt(4 / 399.0L) : std::sqrt(1 / 310.0L));
        expr = rank == 6 ? "sqrt(1/39)" : (rank == 7 ? "sqrt(4/399)" : "sqrt(1/310)");
        break;
    case 'F':
        v = std::sqrt((14 - 9 * r2) / 34);
        expr = "sqrt((14-9sqrt2)/34)";
        break;
    case 'H':
        v = rank == 3 ? std::sqrt((124 - 48 * r5) / 241) : std::sqrt((83 - 36 * r5) / 409);
        expr = rank == 3 ? "sqrt((124-48sqrt5)/241)" : "sqrt((83-36sqrt5)/409)";
        break;
    case 'I':
        v = 2 * std::sin(kPi / (2 * n));
        expr = "2 sin(pi/(2m))";
        break;
    }
    return make("kappa(" + family_name(family, rank) + ")", expr, v,
                "Kazhdan constant of finite Coxeter groups");
}

ReferenceValue coxeter_gap(char family, int rank)
{
    const int h = coxeter_number(family, rank);
    return make("gap(" + family_name(family, rank) + ")", "2(1-cos(pi/h)), h=" + std::to_string(h),
                2 * (1 - std::cos(kPi / h)), "spectral gap of finite Coxeter groups");
}

ReferenceValue coxeter_gap_alternative(char family, int rank)
{
    const int h = coxeter_number(family, rank);
    return make("gap4(" + family_name(family, rank) + ")", "4(1-cos(pi/h)), h=" + std::to_string(h),
                4 * (1 - std::cos(kPi / h)), "spectral gap, doubled normalization");
}

ReferenceValue coxeter_gap_kappa(char family, int rank)
{
    const auto gap = coxeter_gap(family, rank);
    const int size = family == 'I' ? 2 : rank;
    return make("sqrt(2gap/|S|)(" + family_name(family, rank) + ")", "sqrt(2 gap/|S|)",
                std::sqrt(2 * static_cast<real>(gap.value) / size),
                "lower bound implied by the spectral gap");
}

ReferenceValue bagno_kappa_hat(int m, int n)
{
    require(m >= 2 && n >= 1, "G(m,1,n) needs m >= 2, n >= 1");
    const real c = chord(m);
    real sum = 0;
    for (int j = 1; j <= n; ++j) {
        const real t = 1 + c / std::sqrt(2.0L) * (j - 1);
        sum += t * t;
    }
    return make("kappa_hat(G(" + std::to_string(m) + ",1," + std::to_string(n) + "))",
                "sqrt(|1-z_m|^2 / sum_j (1+|1-z_m|(j-1)/sqrt2)^2)", std::sqrt(c * c / sum),
                "Bagno's irreducible-representation constant");
}

ReferenceValue gmmn_upper(int m, int n)
{
    require(m >= 2 && n >= 2, "G(m,m,n) upper bound needs m >= 2, n >= 2");
    const real c = chord(2 * m);
    real denom = 2;
    for (int j = 1; j <= n - 2; ++j) {
        const real t = 1 + c * j;
        denom += t * t;
    }
    return make("upper(G(" + std::to_string(m) + "," + std::to_string(m) + "," + std::to_string(n) + "))",
                "sqrt(2|1-z_2m|^2/(2+sum_{j<=n-2}|1+|1-z_2m|j|^2))", std::sqrt(2 * c * c / denom),
                "eta witness vector upper bound");
}

ReferenceValue kassabov_lower_finite(int n)
{
    require(n >= 2, "SL(n) needs n >= 2");
    return make("kassabov_finite(" + std::to_string(n) + ")", "1/(31 sqrt n + 700)",
                1 / (31 * std::sqrt(static_cast<real>(n)) + 700), "Kassabov bound for SL(n,F_p)");
}

ReferenceValue kassabov_lower(int n)
{
    require(n >= 3, "SL(n,Z) bound needs n >= 3");
    return make("kassabov(" + std::to_string(n) + ")", "1/(42 sqrt n + 860)",
                1 / (42 * std::sqrt(static_cast<real>(n)) + 860), "Kassabov bound for SL(n,Z)");
}

ReferenceValue zuk_upper(int n)
{
    require(n >= 2, "SL(n) needs n >= 2");
    return make("zuk(" + std::to_string(n) + ")", "sqrt(2/n)", std::sqrt(2.0L / n),
                "Zuk upper bound for SL(n,Z)");
}

ReferenceValue ronan_gap()
{
    const real v = (std::sqrt(2.0L) - 1) * (std::sqrt(2.0L) - 1);
    return make("ronan_gap", "(sqrt2-1)^2", v, "conjectured spectral gap of Ronan's lattices");
}

ReferenceValue ronan_kappa()
{
    return make("ronan_kappa", "(sqrt2-1)/sqrt3", (std::sqrt(2.0L) - 1) / std::sqrt(3.0L),
                "conjectured Kazhdan constant of Ronan's lattices");
}

std::optional<PublishedBound> published_bound(std::string_view preset, int radius)
{
    // certified, numerical kappa bounds; {preset, radius}
    static const std::map<std::pair<std::string, int>, PublishedBound> table = {
        {{"a2tilde:q2", 1}, {0.465164, 0.465175, "published A~2 q=2 run"}},
        {{"ronan:G1", 2}, {0.239014, 0.239146, "published Ronan run"}},
        {{"ronan:G2", 2}, {0.239014, 0.239146, "published Ronan run"}},
        {{"ronan:G3", 2}, {0.239014, 0.239146, "published Ronan run"}},
        {{"ronan:G4", 2}, {0.239014, 0.239146, "published Ronan run"}},
        {{"sl:3:Z", 2}, {0.2155, std::nullopt, "published SL(3,Z) run"}},
        {{"sl:4:Z", 2}, {0.3285, std::nullopt, "published SL(4,Z) run"}},
        {{"steinberg:3", 2}, {0.171028, std::nullopt, "published St_3(Z) run"}},
        {{"coxeter:A2", 2}, {0.99985, 1.00000, "published Coxeter run"}},
        {{"coxeter:A3", 2}, {0.62341, 0.62491, "published Coxeter run"}},
        {{"coxeter:A4", 2}, {0.43661, 0.43701, "published Coxeter run"}},
        {{"coxeter:A5", 2}, {0.32625, 0.32738, "published Coxeter run"}},
        {{"coxeter:A6", 2}, {0.25601, 0.25694, "published Coxeter run"}},
        {{"coxeter:B2", 3}, {0.76482, 0.76536, "published Coxeter run"}},
        {{"coxeter:B3", 3}, {0.42163, 0.42264, "published Coxeter run"}},
        {{"coxeter:B4", 3}, {0.27464, 0.27589, "published Coxeter run"}},
        {{"coxeter:D4", 2}, {0.36556, 0.36602, "published Coxeter run"}},
        {{"coxeter:D5", 2}, {0.24553, 0.24677, "published Coxeter run"}},
        {{"coxeter:H3", 3}, {0.25520, 0.25545, "published Coxeter run"}},
        {{"coxeter:F4", 3}, {0.18334, 0.18459, "published Coxeter run"}},
        {{"gmpn:3:1:2", 3}, {0.68040, 0.68177, "published G(m,p,n) run"}},
        {{"gmpn:3:1:3", 3}, {0.38644, 0.38753, "published G(m,p,n) run"}},
        {{"gmpn:4:1:2", 3}, {0.62387, 0.62491, "published G(m,p,n) run"}},
        {{"gmpn:3:3:2", 3}, {0.99999, 1.00000, "published G(m,p,n) run"}},
        {{"gmpn:4:4:2", 3}, {0.76482, 0.76536, "published G(m,p,n) run"}},
        {{"gmpn:4:2:2", 3}, {0.91909, 0.91940, "published G(m,p,n) run"}},
        {{"gmpn:4:2:3", 3}, {0.49128, 0.49288, "published G(m,p,n) run"}},
        {{"sl:2:F3", 2}, {0.7961, std::nullopt, "published SL(n,F_p) run"}},
        {{"sl:2:F5", 2}, {0.2580, std::nullopt, "published SL(n,F_p) run"}},
        {{"sl:3:F3", 2}, {0.6716, std::nullopt, "published SL(n,F_p) run"}},
        {{"sl:2:F3", 3}, {0.7958, std::nullopt, "published SL(n,F_p) run"}},
        {{"sl:2:F5", 3}, {0.6145, std::nullopt, "published SL(n,F_p) run"}},
        {{"sl:2:F7", 3}, {0.5387, std::nullopt, "published SL(n,F_p) run"}},
    };
    auto it = table.find({std::string(preset), radius});
    if (it == table.end()) {
        return std::nullopt;
    }
    return it->second;
}

namespace {

std::vector<int> numbers_after(std::string_view s)
{
    std::vector<int> out;
    int cur = -1;
    for (char c : s) {
        if (c >= '0' && c <= '9') {
            cur = (cur < 0 ? 0 : cur * 10) + (c - '0');
        } else if (cur >= 0) {
            out.push_back(cur);
            cur = -1;
        }
    }
    if (cur >= 0) {
        out.push_back(cur);
    }
    return out;
}

}  // namespace

std::vector<ReferenceValue> references_for(std::string_view preset)
{
    std::vector<ReferenceValue> out;
    const auto nums = numbers_after(preset);
    try {
        if (preset.rfind("a2tilde:", 0) == 0) {
            out.push_back(a2tilde_kappa(2));
        } else if (preset.rfind("ronan:", 0) == 0) {
            out.push_back(ronan_kappa());
        } else if (preset.rfind("coxeter:I2:", 0) == 0 && nums.size() == 2) {
            out.push_back(coxeter_gap_kappa('I', nums[1]));
            out.push_back(coxeter_kappa('I', nums[1]));
        } else if (preset.rfind("coxeter:", 0) == 0 && preset.size() > 8 && nums.size() == 1) {
            out.push_back(coxeter_gap_kappa(preset[8], nums[0]));
            out.push_back(coxeter_kappa(preset[8], nums[0]));
        } else if (preset.rfind("gmpn:", 0) == 0 && nums.size() == 3) {
            if (nums[1] == 1) {
                out.push_back(bagno_kappa_hat(nums[0], nums[2]));
            } else if (nums[1] == nums[0]) {
                out.push_back(gmmn_upper(nums[0], nums[2]));
            }
        } else if (preset.rfind("sl:", 0) == 0 && nums.size() >= 1) {
            if (preset.find(":F") != std::string_view::npos) {
                out.push_back(kassabov_lower_finite(nums[0]));
            } else if (nums[0] >= 3) {
                out.push_back(kassabov_lower(nums[0]));
                out.push_back(zuk_upper(nums[0]));
            }
        }
    } catch (const InputError&) {
        // parameters outside a formula's domain simply have no reference
    }
    return out;
}

}  // namespace kazhdan
