#include "kcenter/bench.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <thread>

#include "kcenter/io.hpp"

namespace kcenter {

namespace {

void run_parallel(int count, int jobs, const auto& body) {
    jobs = std::max(1, std::min(jobs, count));
    if (jobs == 1) {
        for (int i = 0; i < count; ++i) body(i);
        return;
    }
    std::vector<std::thread> workers;
    workers.reserve(static_cast<size_t>(jobs));
    for (int w = 0; w < jobs; ++w) {
        workers.emplace_back([&, w] {
            for (int i = w; i < count; i += jobs) body(i);
        });
    }
    for (auto& t : workers) t.join();
}

} // namespace

const std::vector<SetupSpec>& setup_catalog() {
    static const std::vector<SetupSpec> catalog = {
        {10, 2, "10/2"},  {25, 4, "25/4"}, {36, 4, "36/4"},
        {49, 9, "49/9"},  {49, 4, "49/4"}, {64, 16, "64/16"},
    };
    return catalog;
}

std::optional<SetupSpec> find_setup(const std::string& label) {
    for (const SetupSpec& s : setup_catalog())
        if (s.label == label) return s;
    return std::nullopt;
}

Instance random_instance(const SetupSpec& setup, Rng& rng) {
    std::vector<Point> customers(static_cast<size_t>(setup.customers));
    for (Point& p : customers) {
        p.x = 100.0 * rng.uniform_open();
        p.y = 100.0 * rng.uniform_open();
    }
    return Instance(std::move(customers), setup.centers);
}

std::string instance_id(const Instance& inst) {
    // FNV-1a over the canonical JSON encoding.
    const std::string text = instance_to_json(inst);
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    static const char* hex = "0123456789abcdef";
    for (int i = 15; i >= 0; --i) {
        buf[i] = hex[h & 0xf];
        h >>= 4;
    }
    buf[16] = '\0';
    return std::string(buf);
}

std::uint64_t derive_solver_seed(std::uint64_t master, int instance_index, SolverKind kind) {
    return mix64(master, static_cast<std::uint64_t>(instance_index),
                 static_cast<std::uint64_t>(kind) + 1);
}

CampaignSummary run_average_campaign(const SetupSpec& setup,
                                     const SolverConfig& challenged,
                                     const std::vector<SolverConfig>& challengers,
                                     int n_instances, std::uint64_t seed,
                                     int jobs) {
    if (n_instances < 1) throw std::invalid_argument("n_instances must be >= 1");

    CampaignSummary summary;
    summary.setup = setup;
    summary.instances.reserve(static_cast<size_t>(n_instances));
    {
        Rng rng(mix64(seed, 0x1057ULL));
        for (int i = 0; i < n_instances; ++i)
            summary.instances.push_back(random_instance(setup, rng));
    }

    const size_t n_challengers = challengers.size();
    summary.records.resize(static_cast<size_t>(n_instances) * n_challengers);
    run_parallel(n_instances, jobs, [&](int i) {
        const Instance& inst = summary.instances[static_cast<size_t>(i)];
        const std::string id = instance_id(inst);

        SolverConfig challenged_cfg = challenged;
        challenged_cfg.seed = derive_solver_seed(seed, i, challenged.kind);
        const double d_challenged = solve(inst, challenged_cfg).solution.objective;

        for (size_t c = 0; c < n_challengers; ++c) {
            SolverConfig cfg = challengers[c];
            cfg.seed = derive_solver_seed(seed, i, cfg.kind);
            const double d_challenger = solve(inst, cfg).solution.objective;
            ComparisonRecord& rec =
                summary.records[static_cast<size_t>(i) * n_challengers + c];
            rec.challenger = cfg.kind;
            rec.challenged = challenged.kind;
            rec.instance_id = id;
            rec.d_challenger = d_challenger;
            rec.d_challenged = d_challenged;
            rec.delta_d = d_challenger - d_challenged;
        }
    });

    for (size_t c = 0; c < n_challengers; ++c) {
        ChallengerSummary agg;
        agg.challenger = challengers[c].kind;
        agg.min_delta = std::numeric_limits<double>::infinity();
        agg.max_delta = -std::numeric_limits<double>::infinity();
        double sum = 0.0;
        for (int i = 0; i < n_instances; ++i) {
            const double d =
                summary.records[static_cast<size_t>(i) * n_challengers + c].delta_d;
            sum += d;
            agg.min_delta = std::min(agg.min_delta, d);
            agg.max_delta = std::max(agg.max_delta, d);
        }
        agg.count = n_instances;
        agg.mean_delta = sum / n_instances;
        summary.per_challenger.push_back(agg);
    }
    return summary;
}

std::vector<AdversarialOutcome> run_adversarial_campaign(
    const SetupSpec& setup,
    const std::vector<std::pair<SolverConfig, SolverConfig>>& pairs,
    const EAConfig& ea_template, const std::vector<std::uint64_t>& seeds) {
    if (pairs.empty() || seeds.empty())
        throw std::invalid_argument("adversarial campaign needs pairs and seeds");

    std::vector<AdversarialOutcome> outcomes;
    for (const auto& [challenger, challenged] : pairs) {
        for (std::uint64_t run_seed : seeds) {
            EAConfig ea = ea_template;
            ea.n_customers = setup.customers;
            ea.k = setup.centers;
            ea.challenger = challenger;
            ea.challenged = challenged;
            // Per-run solver seeds so Greedy tie-breaks and MacQueen starts
            // vary across runs while each run stays reproducible.
            ea.challenger.seed = mix64(run_seed, 0xc4a1ULL);
            ea.challenged.seed = mix64(run_seed, 0xc4a2ULL);
            ea.seed = run_seed;
            const EvolutionResult res = evolve(ea);
            outcomes.push_back(AdversarialOutcome{
                challenger.kind, challenged.kind, run_seed, res.best_fitness,
                res.best_instance, res.fitness_history});
        }
    }
    return outcomes;
}

std::vector<MatrixCell> run_matrix_campaign(const SetupSpec& setup,
                                            const std::vector<SolverKind>& kinds,
                                            const EAConfig& ea_template,
                                            const std::vector<std::uint64_t>& seeds) {
    if (kinds.size() < 2) throw std::invalid_argument("matrix campaign needs >= 2 kinds");
    for (size_t i = 0; i < kinds.size(); ++i)
        for (size_t j = i + 1; j < kinds.size(); ++j)
            if (kinds[i] == kinds[j])
                throw std::invalid_argument("matrix campaign kinds must be distinct");

    std::vector<MatrixCell> cells;
    for (SolverKind challenger : kinds) {
        for (SolverKind challenged : kinds) {
            if (challenger == challenged) continue;
            SolverConfig a = ea_template.challenger;
            a.kind = challenger;
            SolverConfig b = ea_template.challenged;
            b.kind = challenged;
            const auto outcomes =
                run_adversarial_campaign(setup, {{a, b}}, ea_template, seeds);
            const auto best = std::min_element(
                outcomes.begin(), outcomes.end(),
                [](const auto& x, const auto& y) { return x.best_delta < y.best_delta; });
            cells.push_back(MatrixCell{challenger, challenged, best->best_delta,
                                       best->best_instance});
        }
    }
    return cells;
}

} // namespace kcenter
