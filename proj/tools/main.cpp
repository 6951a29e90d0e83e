#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "kazhdan/ball.hpp"
#include "kazhdan/catalog.hpp"
#include "kazhdan/certify.hpp"
#include "kazhdan/pipeline.hpp"
#include "kazhdan/triangle.hpp"

using namespace kazhdan;

namespace {

std::string slurp(const std::string& path)
{
    std::ifstream f(path);
    if (!f) {
        throw InputError("cannot open " + path);
    }
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void spit(const std::string& path, const std::string& text)
{
    const auto parent = std::filesystem::path(path).parent_path();
    if (!parent.empty()) {
        std::filesystem::create_directories(parent);
    }
    std::ofstream f(path);
    if (!f) {
        throw InputError("cannot write " + path);
    }
    f << text;
}

struct PipelineFlags {
    std::optional<int> radius;
    std::string solver = "internal";
    double tol = 1e-8;
    long max_iters = 200000;
    int bits = 32;
    std::size_t budget = CompletionBudget{}.max_rules;
    std::string out;
    bool verbose = false;
    double rho = SolverParams{}.initial_rho;
    double eps_weight = SolverParams{}.eps_weight;

    void add_to(CLI::App* cmd, bool with_solver)
    {
        cmd->add_option("-d,--radius", radius, "ball radius d (default: per preset)");
        if (with_solver) {
            cmd->add_option("--solver", solver, "internal | export")
                ->check(CLI::IsMember({"internal", "export"}));
            cmd->add_option("--tol", tol, "solver residual tolerance")->capture_default_str();
            cmd->add_option("--max-iters", max_iters, "solver iteration cap")->capture_default_str();
            cmd->add_flag("-v,--verbose", verbose, "print solver progress to stderr");
            cmd->add_option("--rho", rho, "initial ADMM penalty")->capture_default_str();
            cmd->add_option("--eps-weight", eps_weight, "weight of eps in the splitting metric")
                ->capture_default_str();
        }
        cmd->add_option("--round-denom-bits", bits, "rounding denominator 2^bits")->capture_default_str();
        cmd->add_option("--rewrite-budget", budget, "maximum number of rewriting rules")
            ->capture_default_str();
        cmd->add_option("--out", out, "directory for certificates and exported problems");
    }

    RunOptions options(const std::string& group) const
    {
        RunOptions o;
        o.group = group;
        o.radius = radius;
        o.solver = solver;
        o.solver_params.tolerance = tol;
        o.solver_params.max_iterations = max_iters;
        o.solver_params.initial_rho = rho;
        o.solver_params.eps_weight = eps_weight;
        o.solver_params.report_every = verbose ? 1000 : 0;
        o.rounding_bits = bits;
        o.budget.max_rules = budget;
        o.out_dir = out;
        return o;
    }
};

int cmd_bound(const std::vector<std::string>& groups, const PipelineFlags& flags, bool table,
              const std::string& solution, const std::string& csv_path)
{
    std::vector<RunReport> reports;
    int code = kCertifiedPositive;
    for (const auto& g : groups) {
        RunOptions o = flags.options(g);
        o.solution_file = solution;
        RunReport r = run_bound(o);
        if (code == kCertifiedPositive) {
            code = r.exit_code;
        }
        if (!table) {
            std::cout << report_json(r) << '\n';
        } else {
            std::cerr << g << ": kappa_certified " << r.kappa_certified << " (" << r.wall_seconds
                      << " s)\n";
        }
        reports.push_back(std::move(r));
    }
    if (table) {
        std::cout << report_table(reports);
    }
    if (!csv_path.empty()) {
        std::ostringstream csv;
        csv << report_csv_header() << '\n';
        for (const auto& r : reports) {
            csv << report_csv_row(r) << '\n';
        }
        spit(csv_path, csv.str());
    }
    return code;
}

int cmd_verify(const std::string& path)
{
    const Certificate cert = read_certificate(slurp(path));
    const VerifyResult v = verify_certificate(cert);
    if (v.ok) {
        std::cout << "PASS " << cert.group << " d=" << cert.radius << " eps_certified "
                  << cert.eps_certified.get_str() << " kappa >= " << cert.kappa_certified << '\n';
        return 0;
    }
    std::cout << "FAIL " << v.message << '\n';
    return 1;
}

int cmd_list()
{
    for (const auto& line : preset_families()) {
        std::cout << line << '\n';
    }
    return 0;
}

int cmd_describe(const std::string& group, std::size_t budget)
{
    PresetOptions popts;
    popts.budget.max_rules = budget;
    popts.closure_radius = 0;
    const GroupPreset p = make_preset(group, popts);
    nlohmann::ordered_json j;
    j["group"] = group;
    j["generating_set_size"] = p.generating_set_size;
    std::vector<std::string> gens;
    for (std::size_t i = 0; i < p.backend->generators().size(); ++i) {
        gens.push_back(p.backend->generators().format(Word(1, static_cast<unsigned char>(i))));
    }
    j["generators"] = gens;
    if (p.presentation) {
        std::vector<std::string> rels;
        std::vector<std::size_t> lengths;
        for (const auto& r : p.presentation->relators) {
            rels.push_back(p.presentation->symbols.format(r));
            lengths.push_back(r.size());
        }
        j["relators"] = rels;
        j["relator_lengths"] = lengths;
    }
    j["suggested_radius"] = p.suggested_radius;
    j["default_radius"] = p.default_radius;
    j["identification_complete"] = p.backend->identification_complete();
    std::cout << j.dump(2) << '\n';
    return 0;
}

int cmd_validate_triangle(const std::string& path)
{
    const TrianglePresentation t = load_triangle(path);
    validate_triangle(t);
    std::cout << "valid: q=" << t.q << ", " << t.triples.size() << " triples\n";
    return 0;
}

int cmd_gen_triangle(int q, const std::string& out)
{
    const auto all = generate_triangle_presentations(q);
    std::filesystem::create_directories(out);
    for (std::size_t i = 0; i < all.size(); ++i) {
        const auto path = std::filesystem::path(out) / ("q" + std::to_string(q) + "_" + std::to_string(i) + ".tri");
        spit(path.string(), format_triangle(all[i]));
        std::cout << path.string() << '\n';
    }
    std::cerr << all.size() << " presentations up to collineation\n";
    return all.empty() ? 1 : 0;
}

int cmd_export(const std::string& group, const PipelineFlags& flags, const std::string& file)
{
    PresetOptions popts;
    popts.budget.max_rules = flags.budget;
    const int radius = flags.radius.value_or(preset_default_radius(group));
    popts.closure_radius = 2 * static_cast<std::size_t>(std::max(radius, 0));
    const GroupPreset p = make_preset(group, popts);
    const SdpProblem problem = assemble(*p.backend, laplacian(*p.backend), enumerate_ball(*p.backend, radius));
    spit(file, export_sdpa(problem));
    std::cout << file << ": " << problem.orbits.size() << " constraints, block " << problem.n << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Certified spectral gap and Kazhdan constant bounds"};
    app.require_subcommand(1);

    PipelineFlags bound_flags;
    std::vector<std::string> bound_groups;
    bool table = false;
    std::string bound_solution;
    std::string csv_path;
    auto* bound = app.add_subcommand("bound", "solve and certify one or more groups");
    bound->add_option("groups", bound_groups, "preset names or file:/a2tilde: paths")->required();
    bound_flags.add_to(bound, true);
    bound->add_flag("--table", table, "print a Markdown table instead of JSON reports");
    bound->add_option("--solution", bound_solution, "certify this external solution (with --solver export)");
    bound->add_option("--csv", csv_path, "also write CSV rows to this file");

    std::string cert_path;
    auto* verify = app.add_subcommand("verify", "re-check a certificate from its data alone");
    verify->add_option("certificate", cert_path)->required();

    auto* list = app.add_subcommand("list", "list preset families");

    std::string describe_group;
    std::size_t describe_budget = CompletionBudget{}.max_rules;
    auto* describe = app.add_subcommand("describe", "generators, relators and suggested radius");
    describe->add_option("group", describe_group)->required();
    describe->add_option("--rewrite-budget", describe_budget)->capture_default_str();

    std::string tri_path;
    auto* validate = app.add_subcommand("validate-triangle", "check a triangle presentation file");
    validate->add_option("file", tri_path)->required();

    int q = 2;
    std::string gen_out = "triangles";
    auto* gen = app.add_subcommand("gen-triangle", "enumerate triangle presentations");
    gen->add_option("--q", q)->capture_default_str();
    gen->add_option("--out", gen_out, "output directory")->capture_default_str();

    PipelineFlags export_flags;
    std::string export_group;
    std::string export_file;
    auto* exp = app.add_subcommand("export-sdp", "write the SDP in sparse SDPA format");
    exp->add_option("group", export_group)->required();
    exp->add_option("-d,--radius", export_flags.radius);
    exp->add_option("--rewrite-budget", export_flags.budget)->capture_default_str();
    exp->add_option("-o,--output", export_file, "output .dat-s file")->required();

    PipelineFlags cfs_flags;
    std::string cfs_group;
    std::string cfs_solution;
    auto* cfs = app.add_subcommand("certify-from-solution", "certify an externally computed solution");
    cfs->add_option("group", cfs_group)->required();
    cfs->add_option("--solution", cfs_solution)->required();
    cfs_flags.add_to(cfs, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kInputError;
    }

    try {
        if (*bound) {
            if (!bound_solution.empty()) {
                bound_flags.solver = "export";
            }
            return cmd_bound(bound_groups, bound_flags, table, bound_solution, csv_path);
        }
        if (*verify) {
            return cmd_verify(cert_path);
        }
        if (*list) {
            return cmd_list();
        }
        if (*describe) {
            return cmd_describe(describe_group, describe_budget);
        }
        if (*validate) {
            return cmd_validate_triangle(tri_path);
        }
        if (*gen) {
            return cmd_gen_triangle(q, gen_out);
        }
        if (*exp) {
            return cmd_export(export_group, export_flags, export_file);
        }
        if (*cfs) {
            cfs_flags.solver = "export";
            return cmd_bound({cfs_group}, cfs_flags, false, cfs_solution, "");
        }
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}
