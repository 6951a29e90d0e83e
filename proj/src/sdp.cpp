#include "kazhdan/sdp.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>

#include <Eigen/Eigenvalues>

namespace kazhdan {

SdpProblem assemble(const GroupBackend& backend, const LaplacianBundle& bundle, const Ball& ball)
{
    if (ball.radius < 1) {
        throw InputError("support radius must be at least 1");
    }
    SdpProblem p;
    p.radius = ball.radius;
    p.n = ball.size();
    p.generating_set_size = bundle.size;
    p.involution_free = !backend.generators().has_involutions();
    auto table = std::make_shared<PairingTable>(backend, ball);
    const std::size_t m = table->universe_size();

    p.target_exact.assign(m, Rational(0));
    p.laplacian_exact.assign(m, Rational(0));
    const auto delta2 = multiply(bundle.delta, bundle.delta, backend);
    for (const auto& [g, c] : delta2.terms()) {
        const long idx = table->find(g);
        if (idx < 0) {
            throw InputError("Delta^2 has support outside the pairing universe at " + backend.format(g) +
                             " (inconsistent identification)");
        }
        p.target_exact[idx] = c;
    }
    for (const auto& [g, c] : bundle.delta.terms()) {
        const long idx = table->find(g);
        if (idx < 0) {
            throw InputError("Delta has support outside the pairing universe at " + backend.format(g));
        }
        p.laplacian_exact[idx] = c;
    }
    for (std::uint32_t g = 0; g < m; ++g) {
        const auto inv = table->inverse(g);
        if (inv < g) {
            continue;
        }
        if (p.target_exact[g] != p.target_exact[inv] || p.laplacian_exact[g] != p.laplacian_exact[inv]) {
            throw std::logic_error("Delta^2 or Delta is not star-invariant on the universe");
        }
        p.orbits.push_back({g, inv, p.target_exact[g].get_d(), p.laplacian_exact[g].get_d()});
    }
    p.table = std::move(table);
    return p;
}

std::vector<double> constraint_residuals(const SdpProblem& problem, const Eigen::MatrixXd& Q, double eps)
{
    const auto& table = *problem.table;
    const std::size_t n = problem.n;
    std::vector<double> out(table.universe_size(), 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            out[table.product(i, j)] += Q(i, j);
        }
    }
    for (std::size_t g = 0; g < out.size(); ++g) {
        out[g] += eps * problem.laplacian_exact[g].get_d() - problem.target_exact[g].get_d();
    }
    return out;
}

double max_abs(const std::vector<double>& v)
{
    double m = 0.0;
    for (double x : v) {
        m = std::max(m, std::fabs(x));
    }
    return m;
}

namespace {

// Orthogonal projection onto {(X, e) : <B_k, X> + u_k e = t_k} in the inner
// product <X, X'> + w e e'. The B_k have disjoint supports, so the normal
// matrix is diagonal plus the rank one term u u^T / w.
class AffineProjector {
public:
    AffineProjector(const SdpProblem& problem, double weight) : w_(weight)
    {
        const auto& table = *problem.table;
        const std::size_t n = problem.n;
        const std::size_t k = problem.orbits.size();
        std::vector<long> orbit_of(table.universe_size(), -1);
        for (std::size_t o = 0; o < k; ++o) {
            orbit_of[problem.orbits[o].g] = static_cast<long>(o);
            orbit_of[problem.orbits[o].inverse] = static_cast<long>(o);
        }
        cell_orbit_.resize(n * n);
        cell_coef_.resize(n * n);
        norm2_.assign(k, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                const auto g = table.product(i, j);
                const auto o = static_cast<std::size_t>(orbit_of[g]);
                const double coef = table.inverse(g) == g ? 1.0 : 0.5;
                cell_orbit_[j * n + i] = static_cast<std::uint32_t>(o);
                cell_coef_[j * n + i] = coef;
                norm2_[o] += coef * coef;
            }
        }
        u_.resize(k);
        t_.resize(k);
        for (std::size_t o = 0; o < k; ++o) {
            u_[o] = problem.orbits[o].laplacian;
            t_[o] = problem.orbits[o].target;
        }
        double s = 0.0;
        for (std::size_t o = 0; o < k; ++o) {
            s += u_[o] * u_[o] / norm2_[o];
        }
        denom_ = w_ + s;
        r_.resize(k);
    }

    /// A(X, e) - t into r_.
    const std::vector<double>& residual(const Eigen::MatrixXd& X, double e)
    {
        std::fill(r_.begin(), r_.end(), 0.0);
        const double* x = X.data();
        for (std::size_t c = 0; c < cell_orbit_.size(); ++c) {
            r_[cell_orbit_[c]] += cell_coef_[c] * x[c];
        }
        for (std::size_t o = 0; o < r_.size(); ++o) {
            r_[o] += u_[o] * e - t_[o];
        }
        return r_;
    }

    void project(Eigen::MatrixXd& X, double& e)
    {
        residual(X, e);
        double dot = 0.0;
        for (std::size_t o = 0; o < r_.size(); ++o) {
            dot += u_[o] * r_[o] / norm2_[o];
        }
        const double shift = dot / denom_;
        double uy = 0.0;
        for (std::size_t o = 0; o < r_.size(); ++o) {
            r_[o] = (r_[o] - u_[o] * shift) / norm2_[o];  // y
            uy += u_[o] * r_[o];
        }
        double* x = X.data();
        for (std::size_t c = 0; c < cell_orbit_.size(); ++c) {
            x[c] -= cell_coef_[c] * r_[cell_orbit_[c]];
        }
        e -= uy / w_;
    }

private:
    double w_;
    std::vector<std::uint32_t> cell_orbit_;
    std::vector<double> cell_coef_;
    std::vector<double> norm2_;
    std::vector<double> u_;
    std::vector<double> t_;
    std::vector<double> r_;
    double denom_ = 1.0;
};

// Projection onto {X PSD, X 1 = 0}: PSD projection of P X P.
class ConeProjector {
public:
    explicit ConeProjector(std::size_t n) : n_(n), solver_(static_cast<Eigen::Index>(n)) {}

    void project(const Eigen::MatrixXd& M, Eigen::MatrixXd& out)
    {
        centered_ = 0.5 * (M + M.transpose());
        const Eigen::VectorXd mean = centered_.rowwise().mean();
        const double total = mean.mean();
        centered_.colwise() -= mean;
        centered_.rowwise() -= mean.transpose();
        centered_.array() += total;
        solver_.compute(centered_, Eigen::ComputeEigenvectors);
        const auto& values = solver_.eigenvalues();
        Eigen::Index first = 0;
        while (first < values.size() && values[first] <= 0.0) {
            ++first;
        }
        min_eigenvalue_ = values.size() ? values[0] : 0.0;
        const Eigen::Index k = values.size() - first;
        if (k == 0) {
            out.setZero(n_, n_);
            return;
        }
        const auto vecs = solver_.eigenvectors().rightCols(k);
        scaled_ = vecs * values.tail(k).cwiseSqrt().asDiagonal();
        out.noalias() = scaled_ * scaled_.transpose();
    }

    double min_eigenvalue() const { return min_eigenvalue_; }

private:
    std::size_t n_;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver_;
    Eigen::MatrixXd centered_;
    Eigen::MatrixXd scaled_;
    double min_eigenvalue_ = 0.0;
};

void configure_threads()
{
    static const bool done = [] {
        if (const char* env = std::getenv("KAZHDAN_THREADS")) {
            const int t = std::atoi(env);
            if (t > 0) {
                Eigen::setNbThreads(t);
            }
        }
        return true;
    }();
    (void)done;
}

}  // namespace

GramSolution solve_internal(const SdpProblem& problem, const SolverParams& params)
{
    if (params.tolerance <= 0 || params.max_iterations <= 0 || params.over_relaxation <= 0 ||
        params.over_relaxation >= 2 || params.initial_rho <= 0 || params.eps_weight <= 0) {
        throw InputError("solver parameters must be positive (over-relaxation in (0,2))");
    }
    configure_threads();
    const auto n = static_cast<Eigen::Index>(problem.n);
    const double alpha = params.over_relaxation;
    const double w = params.eps_weight;
    double rho = params.initial_rho;

    AffineProjector affine(problem, w);
    ConeProjector cone(problem.n);

    Eigen::MatrixXd Z = Eigen::MatrixXd::Zero(n, n);
    Eigen::MatrixXd Lam = Eigen::MatrixXd::Zero(n, n);
    Eigen::MatrixXd X(n, n);
    Eigen::MatrixXd Zold(n, n);
    Eigen::MatrixXd LamOld(n, n);
    double ze = 0.0;
    double le = 0.0;

    GramSolution best;
    double best_score = INFINITY;
    GramSolution result;

    for (long it = 1; it <= params.max_iterations; ++it) {
        X = Z - Lam;
        double xe = ze - le + 1.0 / (w * rho);
        affine.project(X, xe);

        X *= alpha;
        X += (1.0 - alpha) * Z;
        xe = alpha * xe + (1.0 - alpha) * ze;
        X += Lam;  // X now holds relaxed x + lambda
        xe += le;

        Zold.swap(Z);
        const double ze_old = ze;
        cone.project(X, Z);
        ze = xe;  // eps is unconstrained in the cone
        if (it % 100 == 0) {
            LamOld = Lam;
        }
        Lam = X - Z;
        le = 0.0;

        const bool check = it % 10 == 0 || it == params.max_iterations;
        if (!check) {
            continue;
        }
        const double primal = max_abs(affine.residual(Z, ze));
        const double dual = rho * std::sqrt((Z - Zold).squaredNorm() + w * (ze - ze_old) * (ze - ze_old));
        const double score = std::max(primal, dual);
        if (params.report_every > 0 && it % params.report_every == 0) {
            std::fprintf(stderr, "iter %ld  eps %.10f  primal %.3e  dual %.3e  rho %.3g\n", it, ze,
                         primal, dual, rho);
        }
        if (score < best_score) {
            best_score = score;
            best.Q = Z;
            best.eps = ze;
            best.iterations = it;
            best.primal_residual = primal;
            best.dual_residual = dual;
        }
        if (primal <= params.tolerance && dual <= params.tolerance) {
            result.Q = Z;
            result.eps = ze;
            result.converged = true;
            result.iterations = it;
            result.primal_residual = primal;
            result.dual_residual = dual;
            break;
        }
        if (it % 100 == 0) {
            // Residual balancing: consensus ||x - z|| against rho ||z - z_old||.
            const double consensus = std::sqrt((Lam - LamOld).squaredNorm()) /
                                     std::max(1e-12, std::sqrt(Z.squaredNorm()));
            const double step = dual / std::max(1e-12, rho * std::sqrt(Lam.squaredNorm()));
            if (consensus > 10 * step && rho < 1e6) {
                rho *= 2;
                Lam *= 0.5;
            } else if (step > 10 * consensus && rho > 1e-6) {
                rho *= 0.5;
                Lam *= 2.0;
            }
        }
    }
    if (!result.converged) {
        result = best;
        result.iterations = params.max_iterations;
    }
    result.Q = 0.5 * (result.Q + result.Q.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(result.Q, Eigen::EigenvaluesOnly);
    result.min_eigenvalue = es.eigenvalues().size() ? es.eigenvalues()[0] : 0.0;
    return result;
}

std::string export_sdpa(const SdpProblem& problem)
{
    const auto& table = *problem.table;
    const std::size_t n = problem.n;
    std::ostringstream out;
    out << "\"maximize eps: sum_{F_g} Q_ij + eps u_g = t_g, one constraint per orbit {g, g^-1}\n";
    out << problem.orbits.size() << '\n';
    out << "2\n";
    out << n << " 1\n";
    for (std::size_t k = 0; k < problem.orbits.size(); ++k) {
        out << (k ? " " : "") << problem.target_exact[problem.orbits[k].g].get_str();
    }
    out << '\n';
    out << "0 2 1 1 1\n";
    std::vector<long> orbit_of(table.universe_size(), -1);
    for (std::size_t k = 0; k < problem.orbits.size(); ++k) {
        orbit_of[problem.orbits[k].g] = static_cast<long>(k);
        orbit_of[problem.orbits[k].inverse] = static_cast<long>(k);
    }
    // Entries grouped by constraint, upper triangle, value B_k(i, j).
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> cells(problem.orbits.size());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            cells[orbit_of[table.product(i, j)]].emplace_back(i, j);
        }
    }
    for (std::size_t k = 0; k < problem.orbits.size(); ++k) {
        const auto& o = problem.orbits[k];
        const bool self = o.g == o.inverse;
        for (auto [i, j] : cells[k]) {
            out << k + 1 << " 1 " << i + 1 << ' ' << j + 1 << ' ' << (self ? "1" : "0.5") << '\n';
        }
        const auto& u = problem.laplacian_exact[o.g];
        if (sgn(u) != 0) {
            out << k + 1 << " 2 1 1 " << u.get_str() << '\n';
        }
    }
    return out.str();
}

namespace {

double parse_number(const std::string& tok, int lineno)
{
    char* end = nullptr;
    std::string t = tok;
    for (char& c : t) {
        if (c == 'D' || c == 'd') {
            c = 'e';  // Fortran exponents
        }
    }
    const double v = std::strtod(t.c_str(), &end);
    if (end == t.c_str() || *end != '\0') {
        throw InputError("line " + std::to_string(lineno) + ": bad number '" + tok + "'");
    }
    return v;
}

std::vector<std::string> tokens(const std::string& line)
{
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ' ' || c == '\t' || c == ',' || c == '{' || c == '}' || c == '(' || c == ')' ||
            c == '\r') {
            if (!cur.empty()) {
                out.push_back(cur);
                cur.clear();
            }
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) {
        out.push_back(cur);
    }
    return out;
}

}  // namespace

SdpaData parse_sdpa(const std::string& text)
{
    SdpaData data;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int stage = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '"' || line[0] == '*') {
            continue;
        }
        auto toks = tokens(line);
        if (toks.empty()) {
            continue;
        }
        switch (stage) {
        case 0:
            data.constraints = static_cast<std::size_t>(parse_number(toks[0], lineno));
            ++stage;
            break;
        case 1: {
            const auto nblocks = static_cast<std::size_t>(parse_number(toks[0], lineno));
            data.block_sizes.resize(nblocks);
            ++stage;
            break;
        }
        case 2:
            if (toks.size() < data.block_sizes.size()) {
                throw InputError("line " + std::to_string(lineno) + ": missing block sizes");
            }
            for (std::size_t b = 0; b < data.block_sizes.size(); ++b) {
                data.block_sizes[b] = static_cast<long>(parse_number(toks[b], lineno));
            }
            ++stage;
            break;
        case 3:
            for (const auto& t : toks) {
                data.rhs.push_back(parse_number(t, lineno));
            }
            if (data.rhs.size() >= data.constraints) {
                if (data.rhs.size() != data.constraints) {
                    throw InputError("line " + std::to_string(lineno) + ": too many right-hand sides");
                }
                ++stage;
            }
            break;
        default: {
            if (toks.size() != 5) {
                throw InputError("line " + std::to_string(lineno) + ": expected 'k b i j v'");
            }
            SdpaData::Entry e;
            e.matrix = static_cast<std::size_t>(parse_number(toks[0], lineno));
            e.block = static_cast<std::size_t>(parse_number(toks[1], lineno));
            e.i = static_cast<std::size_t>(parse_number(toks[2], lineno));
            e.j = static_cast<std::size_t>(parse_number(toks[3], lineno));
            e.value = parse_number(toks[4], lineno);
            if (e.matrix > data.constraints || e.block < 1 || e.block > data.block_sizes.size()) {
                throw InputError("line " + std::to_string(lineno) + ": index out of range");
            }
            const auto size = static_cast<std::size_t>(std::labs(data.block_sizes[e.block - 1]));
            if (e.i < 1 || e.j < 1 || e.i > size || e.j > size) {
                throw InputError("line " + std::to_string(lineno) + ": entry outside its block");
            }
            data.entries.push_back(e);
        }
        }
    }
    if (stage < 4) {
        throw InputError("truncated SDPA file");
    }
    return data;
}

GramSolution import_solution(const SdpProblem& problem, const std::string& text)
{
    const auto n = static_cast<Eigen::Index>(problem.n);
    GramSolution sol;
    sol.Q = Eigen::MatrixXd::Zero(n, n);
    std::vector<std::pair<int, std::vector<std::string>>> rows;
    {
        std::istringstream in(text);
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (auto hash = line.find('#'); hash != std::string::npos) {
                line.erase(hash);
            }
            auto toks = tokens(line);
            if (!toks.empty()) {
                rows.emplace_back(lineno, std::move(toks));
            }
        }
    }
    // CSDP writes the dual vector first and then five-field matrix lines.
    bool csdp = false;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        csdp = csdp || rows[r].second.size() == 5;
    }
    for (std::size_t r = csdp ? 1 : 0; r < rows.size(); ++r) {
        const auto& [lineno, toks] = rows[r];
        const std::size_t off = csdp ? 1 : 0;
        if (toks.size() != 4 + off) {
            throw InputError("line " + std::to_string(lineno) + ": expected '" +
                             (csdp ? "matno " : "") + "block i j value'");
        }
        if (csdp && static_cast<long>(parse_number(toks[0], lineno)) != 2) {
            continue;  // dual slack matrix
        }
        const long block = static_cast<long>(parse_number(toks[off], lineno));
        const long i = static_cast<long>(parse_number(toks[off + 1], lineno));
        const long j = static_cast<long>(parse_number(toks[off + 2], lineno));
        const double v = parse_number(toks[off + 3], lineno);
        if (block == 1) {
            if (i < 1 || j < 1 || i > n || j > n) {
                throw InputError("line " + std::to_string(lineno) + ": entry (" + std::to_string(i) +
                                 "," + std::to_string(j) + ") outside the " + std::to_string(n) +
                                 "x" + std::to_string(n) + " Gram block");
            }
            sol.Q(i - 1, j - 1) = v;
            sol.Q(j - 1, i - 1) = v;
        } else if (block == 2) {
            if (i != 1 || j != 1) {
                throw InputError("line " + std::to_string(lineno) + ": eps block is 1x1");
            }
            sol.eps = v;
        } else {
            throw InputError("line " + std::to_string(lineno) + ": unknown block " + std::to_string(block));
        }
    }
    const double res = max_abs(constraint_residuals(problem, sol.Q, sol.eps));
    if (res > 1e-6) {
        throw InputError("imported solution violates the constraints by " + std::to_string(res));
    }
    sol.converged = true;
    sol.primal_residual = res;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sol.Q, Eigen::EigenvaluesOnly);
    sol.min_eigenvalue = es.eigenvalues().size() ? es.eigenvalues()[0] : 0.0;
    return sol;
}

}  // namespace kazhdan
