#include <cstdint>
#include <filesystem>
#include <iostream>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kcenter/adversary.hpp"
#include "kcenter/bench.hpp"
#include "kcenter/core.hpp"
#include "kcenter/io.hpp"
#include "kcenter/rng.hpp"
#include "kcenter/solvers.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace kcenter;

namespace {

constexpr const char* kVersion = "kcenter 1.0.0";
// Fixed default so bare invocations reproduce; --entropy-seed opts out.
constexpr std::uint64_t kDefaultSeed = 20160409;

constexpr int kExitValidation = 2;
constexpr int kExitInfeasible = 3;

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

SolverKind parse_kind_or_throw(const std::string& name) {
    SolverKind kind;
    if (!parse_solver_kind(name, kind))
        throw ValidationError("unknown solver kind: " + name +
                              " (expected dragoon, two-approx, macqueen, greedy, backtrack)");
    return kind;
}

SetupSpec resolve_setup(const std::string& label, int customers, int centers) {
    if (!label.empty()) {
        if (auto s = find_setup(label)) return *s;
        throw ValidationError("unknown setup label: " + label +
                              " (catalog: 10/2, 25/4, 36/4, 49/9, 49/4, 64/16)");
    }
    if (customers < 1 || centers < 1 || centers > customers)
        throw ValidationError("custom setup needs --customers and --centers with 1 <= centers <= customers");
    return SetupSpec{customers, centers,
                     std::to_string(customers) + "/" + std::to_string(centers)};
}

json manifest_base(const std::string& command, std::uint64_t seed, int jobs) {
    json m;
    m["tool_version"] = kVersion;
    m["command"] = command;
    m["master_seed"] = seed;
    m["jobs"] = jobs;
    return m;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        write_file(out_path, text);
    }
}

std::vector<std::uint64_t> run_seeds(std::uint64_t master, int runs) {
    std::vector<std::uint64_t> seeds;
    seeds.reserve(static_cast<size_t>(runs));
    for (int i = 0; i < runs; ++i)
        seeds.push_back(mix64(master, 0x5eedULL, static_cast<std::uint64_t>(i)));
    return seeds;
}

std::string sanitize(std::string name) {
    for (char& c : name)
        if (c == '/' || c == ' ') c = '_';
    return name;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"k-center heuristics, exact oracle, and adversarial instance search"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand name

    std::uint64_t seed = kDefaultSeed;
    bool entropy_seed = false;
    int jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (jobs < 1) jobs = 1;
    app.add_option("--seed", seed, "Master seed (default: fixed constant)");
    app.add_flag("--entropy-seed", entropy_seed, "Draw the master seed from system entropy");
    app.add_option("--jobs", jobs, "Worker threads for campaigns")->check(CLI::PositiveNumber);

    // solve
    auto* solve_cmd = app.add_subcommand("solve", "Run one heuristic on an instance file");
    std::string solve_instance, solve_solver = "dragoon", solve_out;
    int backtrack_max_steps = 1000, macqueen_max_iters = 500;
    bool two_approx_random_start = false;
    solve_cmd->add_option("instance", solve_instance, "Instance JSON file")->required();
    solve_cmd->add_option("--solver", solve_solver, "dragoon|two-approx|macqueen|greedy|backtrack");
    solve_cmd->add_option("--backtrack-max-steps", backtrack_max_steps)->check(CLI::PositiveNumber);
    solve_cmd->add_option("--macqueen-max-iters", macqueen_max_iters)->check(CLI::PositiveNumber);
    solve_cmd->add_flag("--two-approx-random-start", two_approx_random_start,
                        "Seeded random first center for 2-Approx");
    solve_cmd->add_option("--out", solve_out, "Write solution JSON here instead of stdout");

    // exact
    auto* exact_cmd = app.add_subcommand("exact", "Brute-force optimum for a small instance");
    std::string exact_instance, exact_out;
    std::uint64_t exact_cap = kDefaultExactCap;
    exact_cmd->add_option("instance", exact_instance, "Instance JSON file")->required();
    exact_cmd->add_option("--cap", exact_cap, "Max k-subsets to enumerate");
    exact_cmd->add_option("--out", exact_out, "Write solution JSON here instead of stdout");

    // average
    auto* avg_cmd = app.add_subcommand("average", "Random-instance comparison campaign");
    std::string avg_setup, avg_challenged = "dragoon", avg_out = "average-out";
    std::vector<std::string> avg_challengers = {"macqueen", "two-approx", "greedy", "backtrack"};
    int avg_customers = 0, avg_centers = 0, avg_instances = 1000;
    avg_cmd->add_option("--setup", avg_setup, "Catalog setup label, e.g. 25/4");
    avg_cmd->add_option("--customers", avg_customers, "Custom setup: customer count");
    avg_cmd->add_option("--centers", avg_centers, "Custom setup: center count");
    avg_cmd->add_option("--challenged", avg_challenged);
    avg_cmd->add_option("--challengers", avg_challengers)->delimiter(',');
    avg_cmd->add_option("--instances", avg_instances)->check(CLI::PositiveNumber);
    avg_cmd->add_option("--out", avg_out, "Output directory");

    // adversary
    auto* adv_cmd = app.add_subcommand("adversary", "Evolve instances favoring the challenger");
    std::string adv_setup, adv_challenger, adv_challenged = "dragoon", adv_out = "adversary-out";
    int adv_customers = 0, adv_centers = 0, adv_runs = 1;
    EAConfig ea;
    adv_cmd->add_option("--setup", adv_setup, "Catalog setup label, e.g. 10/2");
    adv_cmd->add_option("--customers", adv_customers);
    adv_cmd->add_option("--centers", adv_centers);
    adv_cmd->add_option("--challenger", adv_challenger)->required();
    adv_cmd->add_option("--challenged", adv_challenged);
    adv_cmd->add_option("--population", ea.population)->check(CLI::PositiveNumber);
    adv_cmd->add_option("--generations", ea.generations)->check(CLI::NonNegativeNumber);
    adv_cmd->add_option("--mutation-sigma", ea.mutation_sigma);
    adv_cmd->add_option("--recombination-prob", ea.recombination_prob)->check(CLI::Range(0.0, 1.0));
    adv_cmd->add_option("--tournament-size", ea.tournament_size)->check(CLI::PositiveNumber);
    adv_cmd->add_option("--runs", adv_runs, "Independent EA runs (seeds derived from master seed)")
        ->check(CLI::PositiveNumber);
    adv_cmd->add_option("--out", adv_out, "Output directory");

    // matrix
    auto* mat_cmd = app.add_subcommand("matrix", "Adversarial search over all ordered solver pairs");
    std::string mat_setup, mat_out = "matrix-out";
    int mat_customers = 0, mat_centers = 0, mat_runs = 1;
    std::vector<std::string> mat_kinds = {"macqueen", "backtrack", "two-approx", "greedy", "dragoon"};
    EAConfig mat_ea;
    mat_cmd->add_option("--setup", mat_setup, "Catalog setup label, e.g. 49/4");
    mat_cmd->add_option("--customers", mat_customers);
    mat_cmd->add_option("--centers", mat_centers);
    mat_cmd->add_option("--kinds", mat_kinds)->delimiter(',');
    mat_cmd->add_option("--population", mat_ea.population)->check(CLI::PositiveNumber);
    mat_cmd->add_option("--generations", mat_ea.generations)->check(CLI::NonNegativeNumber);
    mat_cmd->add_option("--runs", mat_runs)->check(CLI::PositiveNumber);
    mat_cmd->add_option("--out", mat_out, "Output directory");

    // dump-geometry
    auto* geo_cmd = app.add_subcommand("dump-geometry", "Plot-ready CSV for an instance/solution pair");
    std::string geo_instance, geo_solution, geo_out;
    geo_cmd->add_option("instance", geo_instance, "Instance JSON file")->required();
    geo_cmd->add_option("solution", geo_solution, "Solution JSON file")->required();
    geo_cmd->add_option("--out", geo_out, "Write CSV here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitValidation;
    }

    try {
        if (entropy_seed) seed = std::random_device{}();

        if (*solve_cmd) {
            const Instance inst = load_instance(solve_instance);
            SolverConfig cfg;
            cfg.kind = parse_kind_or_throw(solve_solver);
            cfg.seed = seed;
            cfg.backtrack_max_steps = backtrack_max_steps;
            cfg.macqueen_max_iters = macqueen_max_iters;
            cfg.two_approx_random_start = two_approx_random_start;
            const SolveResult res = solve(inst, cfg);
            emit(solution_to_json(inst, res.solution, res.trace) + "\n", solve_out);
        } else if (*exact_cmd) {
            const Instance inst = load_instance(exact_instance);
            try {
                const Solution sol = solve_exact(inst, exact_cap);
                emit(solution_to_json(inst, sol, SolveTrace{}) + "\n", exact_out);
            } catch (const ExactCapExceeded& e) {
                std::cerr << "error: " << e.what()
                          << " (raise --cap to enumerate more subsets)\n";
                return kExitInfeasible;
            }
        } else if (*avg_cmd) {
            const SetupSpec setup = resolve_setup(avg_setup, avg_customers, avg_centers);
            SolverConfig challenged;
            challenged.kind = parse_kind_or_throw(avg_challenged);
            std::vector<SolverConfig> challengers;
            for (const std::string& name : avg_challengers) {
                SolverConfig c;
                c.kind = parse_kind_or_throw(name);
                challengers.push_back(c);
            }

            json manifest = manifest_base("average", seed, jobs);
            manifest["setup"] = setup.label;
            manifest["challenged"] = avg_challenged;
            manifest["challengers"] = avg_challengers;
            manifest["instances"] = avg_instances;
            manifest["artifacts"] = {"records.csv", "summary.csv"};
            write_file(fs::path(avg_out) / "manifest.json", manifest.dump(2) + "\n");

            const CampaignSummary summary = run_average_campaign(
                setup, challenged, challengers, avg_instances, seed, jobs);
            write_file(fs::path(avg_out) / "records.csv",
                       records_csv(summary.records, setup.label));
            write_file(fs::path(avg_out) / "summary.csv", summary_csv(summary));
            std::cout << summary_csv(summary);
        } else if (*adv_cmd) {
            const SetupSpec setup = resolve_setup(adv_setup, adv_customers, adv_centers);
            SolverConfig challenger, challenged;
            challenger.kind = parse_kind_or_throw(adv_challenger);
            challenged.kind = parse_kind_or_throw(adv_challenged);
            if (setup.centers > setup.customers)
                throw ValidationError("setup centers exceed customers");

            json manifest = manifest_base("adversary", seed, jobs);
            manifest["setup"] = setup.label;
            manifest["challenger"] = adv_challenger;
            manifest["challenged"] = adv_challenged;
            manifest["population"] = ea.population;
            manifest["generations"] = ea.generations;
            manifest["mutation_sigma"] = ea.mutation_sigma;
            manifest["recombination_prob"] = ea.recombination_prob;
            manifest["tournament_size"] = ea.tournament_size;
            manifest["runs"] = adv_runs;
            write_file(fs::path(adv_out) / "manifest.json", manifest.dump(2) + "\n");

            ea.jobs = jobs;
            const auto outcomes = run_adversarial_campaign(
                setup, {{challenger, challenged}}, ea, run_seeds(seed, adv_runs));
            std::string report = "challenger,challenged,run_seed,best_delta_d,instance_file\n";
            for (const AdversarialOutcome& o : outcomes) {
                const std::string file = sanitize(std::string(solver_name(o.challenger)) + "_vs_" +
                                                  solver_name(o.challenged)) +
                                         "_" + std::to_string(o.run_seed) + ".json";
                save_instance(o.best_instance, fs::path(adv_out) / file);
                report += std::string(solver_name(o.challenger)) + ',' +
                          solver_name(o.challenged) + ',' + std::to_string(o.run_seed) +
                          ',' + format_double(o.best_delta) + ',' + file + '\n';
            }
            write_file(fs::path(adv_out) / "report.csv", report);
            std::cout << report;
        } else if (*mat_cmd) {
            const SetupSpec setup = resolve_setup(mat_setup, mat_customers, mat_centers);
            std::vector<SolverKind> kinds;
            for (const std::string& name : mat_kinds)
                kinds.push_back(parse_kind_or_throw(name));
            for (size_t i = 0; i < kinds.size(); ++i)
                for (size_t j = i + 1; j < kinds.size(); ++j)
                    if (kinds[i] == kinds[j])
                        throw ValidationError("duplicate solver kind in --kinds: " +
                                              std::string(solver_name(kinds[i])));

            json manifest = manifest_base("matrix", seed, jobs);
            manifest["setup"] = setup.label;
            manifest["kinds"] = mat_kinds;
            manifest["population"] = mat_ea.population;
            manifest["generations"] = mat_ea.generations;
            manifest["runs"] = mat_runs;
            write_file(fs::path(mat_out) / "manifest.json", manifest.dump(2) + "\n");

            mat_ea.jobs = jobs;
            const auto cells =
                run_matrix_campaign(setup, kinds, mat_ea, run_seeds(seed, mat_runs));
            std::string csv = "challenger";
            for (SolverKind k : kinds) csv += std::string(",") + solver_name(k);
            csv += '\n';
            for (SolverKind row : kinds) {
                csv += solver_name(row);
                for (SolverKind col : kinds) {
                    csv += ',';
                    if (row == col) continue;
                    for (const MatrixCell& cell : cells) {
                        if (cell.challenger == row && cell.challenged == col) {
                            csv += format_double(cell.best_delta);
                            const std::string file =
                                sanitize(std::string(solver_name(row)) + "_vs_" +
                                         solver_name(col)) + ".json";
                            save_instance(cell.best_instance, fs::path(mat_out) / file);
                            break;
                        }
                    }
                }
                csv += '\n';
            }
            write_file(fs::path(mat_out) / "matrix.csv", csv);
            std::cout << csv;
        } else if (*geo_cmd) {
            const Instance inst = load_instance(geo_instance);
            const Solution sol = load_solution(geo_solution);
            if (static_cast<int>(sol.centers.size()) != inst.k)
                throw ValidationError("solution center count does not match instance k");
            emit(geometry_csv(inst, sol), geo_out);
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
