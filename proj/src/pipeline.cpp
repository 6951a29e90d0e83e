#include "kazhdan/pipeline.hpp"

#include <cctype>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "kazhdan/fp_backend.hpp"

namespace kazhdan {

namespace {

std::string file_stem(const std::string& group, int radius)
{
    std::string s;
    for (char c : group) {
        s += (std::isalnum(static_cast<unsigned char>(c)) || c == '-') ? c : '_';
    }
    return s + "_d" + std::to_string(radius);
}

std::string read_file(const std::string& path)
{
    std::ifstream f(path);
    if (!f) {
        throw InputError("cannot open " + path);
    }
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream f(path);
    if (!f) {
        throw InputError("cannot write " + path);
    }
    f << text;
}

}  // namespace

RunReport run_bound(const RunOptions& options, Certificate* certificate)
{
    const auto start = std::chrono::steady_clock::now();
    RunReport rep;
    rep.options = options;
    rep.group = options.group;
    rep.solver = options.solver;
    if (options.solver != "internal" && options.solver != "export") {
        throw InputError("solver must be 'internal' or 'export'");
    }

    // The preset decides its default radius; the closure radius follows it.
    PresetOptions popts;
    popts.budget = options.budget;
    const int radius = options.radius.value_or(preset_default_radius(options.group));
    if (radius < 1) {
        throw InputError("radius must be at least 1");
    }
    popts.closure_radius = 2 * static_cast<std::size_t>(radius);
    const GroupPreset preset = make_preset(options.group, popts);
    const GroupBackend& backend = *preset.backend;

    rep.radius = radius;
    rep.generating_set_size = preset.generating_set_size;
    rep.identification_complete = backend.identification_complete();
    if (const auto* fp = dynamic_cast<const FpGroupBackend*>(&backend)) {
        rep.rewrite_rules = fp->rewriting().size();
    }
    rep.references = references_for(options.group);
    rep.published = published_bound(options.group, radius);

    const LaplacianBundle bundle = laplacian(backend);
    const Ball ball = enumerate_ball(backend, radius);
    const SdpProblem problem = assemble(backend, bundle, ball);
    rep.ball_size = problem.n;
    rep.universe_size = problem.constraint_count();
    rep.orbit_constraints = problem.orbits.size();

    if (!options.out_dir.empty()) {
        std::filesystem::create_directories(options.out_dir);
    }

    GramSolution sol;
    if (options.solver == "internal") {
        sol = solve_internal(problem, options.solver_params);
        rep.solved = true;
    } else {
        if (!options.out_dir.empty()) {
            rep.exported_problem_path =
                (std::filesystem::path(options.out_dir) / (file_stem(options.group, radius) + ".dat-s"))
                    .string();
            write_file(rep.exported_problem_path, export_sdpa(problem));
        }
        if (options.solution_file.empty()) {
            rep.message = "problem exported; solve it externally and certify the solution";
            rep.exit_code = kSolverNotConverged;
            rep.wall_seconds =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            return rep;
        }
        sol = import_solution(problem, read_file(options.solution_file));
        rep.solved = true;
    }
    rep.converged = sol.converged;
    rep.iterations = sol.iterations;
    rep.primal_residual = sol.primal_residual;
    rep.dual_residual = sol.dual_residual;
    rep.min_eigenvalue = sol.min_eigenvalue;
    rep.eps_numeric = sol.eps;
    rep.kappa_numeric = sol.eps > 0 ? std::sqrt(2 * sol.eps / rep.generating_set_size) : 0.0;

    CertifyOptions copts;
    copts.rounding_bits = options.rounding_bits;
    std::string failure;
    auto cert = certify(problem, sol, backend, options.group, copts, &failure);
    if (cert) {
        rep.D = cert->D;
        rep.involution_free = cert->involution_free;
        rep.tau = cert->tau.get_str();
        rep.residual_l1 = cert->residual_l1.get_d();
        rep.eps_certified_exact = cert->eps_certified.get_str();
        rep.eps_certified = cert->eps_certified.get_d();
        rep.kappa_certified = cert->kappa_certified;
        rep.certified = sgn(cert->eps_certified) > 0;
        if (!options.out_dir.empty()) {
            rep.certificate_path =
                (std::filesystem::path(options.out_dir) / (file_stem(options.group, radius) + ".cert"))
                    .string();
            write_file(rep.certificate_path, write_certificate(*cert));
        }
        if (certificate) {
            *certificate = std::move(*cert);
        }
    } else {
        rep.message = failure;
    }

    if (rep.certified) {
        rep.exit_code = kCertifiedPositive;
        if (!rep.converged) {
            rep.message = "solver did not reach the tolerance; the certified bound still holds";
        }
    } else if (!rep.converged) {
        rep.exit_code = kSolverNotConverged;
        if (rep.message.empty()) {
            rep.message = "solver did not converge and certification gave no positive bound";
        }
    } else {
        rep.exit_code = kCertificationNonPositive;
        if (rep.message.empty()) {
            std::ostringstream m;
            m << "certified eps is not positive: numeric " << rep.eps_numeric << ", ||c||_1 = "
              << rep.residual_l1 << ", penalty factor 2^" << (rep.involution_free ? 2 * rep.D - 2 : 2 * rep.D - 1);
            rep.message = m.str();
        }
    }
    rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

std::string report_json(const RunReport& r)
{
    using nlohmann::ordered_json;
    ordered_json j;
    j["group"] = r.group;
    j["generating_set_size"] = r.generating_set_size;
    j["radius"] = r.radius;
    j["ball_size"] = r.ball_size;
    j["ball_2d_size"] = r.universe_size;
    j["orbit_constraints"] = r.orbit_constraints;
    j["identification_complete"] = r.identification_complete;
    j["rewrite_rules"] = r.rewrite_rules;
    j["solver"] = {{"kind", r.solver},
                   {"converged", r.converged},
                   {"iterations", r.iterations},
                   {"primal_residual", r.primal_residual},
                   {"dual_residual", r.dual_residual},
                   {"min_eigenvalue", r.min_eigenvalue}};
    j["eps_numeric"] = r.eps_numeric;
    j["kappa_numeric"] = r.kappa_numeric;
    j["certified"] = r.certified;
    j["eps_certified"] = r.eps_certified;
    j["eps_certified_exact"] = r.eps_certified_exact;
    j["kappa_certified"] = r.kappa_certified;
    j["residual_l1"] = r.residual_l1;
    j["tau"] = r.tau;
    j["D"] = r.D;
    j["involution_free"] = r.involution_free;
    ordered_json refs = ordered_json::array();
    for (const auto& ref : r.references) {
        refs.push_back({{"name", ref.name},
                        {"expression", ref.expression},
                        {"value", ref.value},
                        {"source", ref.source},
                        {"delta_kappa_numeric", r.kappa_numeric - ref.value}});
    }
    j["references"] = refs;
    if (r.published) {
        ordered_json p;
        p["source"] = r.published->source;
        if (r.published->certified) {
            p["kappa_certified"] = *r.published->certified;
            if (r.certified) {
                p["delta_kappa_certified"] = std::stod(r.kappa_certified) - *r.published->certified;
            }
        }
        if (r.published->numerical) {
            p["kappa_numeric"] = *r.published->numerical;
            p["delta_kappa_numeric"] = r.kappa_numeric - *r.published->numerical;
        }
        j["published"] = p;
    }
    const auto& o = r.options;
    j["config"] = {{"radius", r.radius},
                   {"solver", o.solver},
                   {"tolerance", o.solver_params.tolerance},
                   {"max_iterations", o.solver_params.max_iterations},
                   {"over_relaxation", o.solver_params.over_relaxation},
                   {"round_denom_bits", o.rounding_bits},
                   {"rewrite_max_rules", o.budget.max_rules},
                   {"rewrite_max_rule_length", o.budget.max_rule_length},
                   {"out_dir", o.out_dir},
                   {"solution_file", o.solution_file}};
    j["certificate"] = r.certificate_path;
    if (!r.exported_problem_path.empty()) {
        j["exported_problem"] = r.exported_problem_path;
    }
    j["message"] = r.message;
    j["exit_code"] = r.exit_code;
    j["wall_seconds"] = r.wall_seconds;
    return j.dump(2);
}

std::string report_csv_header()
{
    return "group,S,d,ball_d,ball_2d,converged,iterations,eps_numeric,eps_certified,kappa_numeric,"
           "kappa_certified,wall_seconds";
}

std::string report_csv_row(const RunReport& r)
{
    std::ostringstream out;
    out << std::setprecision(10);
    out << r.group << ',' << r.generating_set_size << ',' << r.radius << ',' << r.ball_size << ','
        << r.universe_size << ',' << (r.converged ? 1 : 0) << ',' << r.iterations << ',' << r.eps_numeric
        << ',' << r.eps_certified << ',' << r.kappa_numeric << ',' << r.kappa_certified << ','
        << std::setprecision(4) << r.wall_seconds;
    return out.str();
}

std::string report_table(const std::vector<RunReport>& reports)
{
    std::ostringstream out;
    out << "| group | d | |S| | |Ball(d)| | certified bound | numerical bound | reference |\n";
    out << "|---|---|---|---|---|---|---|\n";
    for (const auto& r : reports) {
        out << "| " << r.group << " | " << r.radius << " | " << r.generating_set_size << " | "
            << r.ball_size << " | " << (r.certified ? r.kappa_certified.substr(0, 7) : "-") << " | "
            << std::fixed << std::setprecision(5) << r.kappa_numeric << " | ";
        if (!r.references.empty()) {
            out << r.references.front().name << " = " << r.references.front().value;
        } else if (r.published && r.published->certified) {
            out << "published " << *r.published->certified;
        }
        out << std::defaultfloat << " |\n";
    }
    return out.str();
}

}  // namespace kazhdan
