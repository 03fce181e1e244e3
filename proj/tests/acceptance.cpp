// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Heavier campaigns run with all available cores.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "kcenter/adversary.hpp"
#include "kcenter/bench.hpp"
#include "kcenter/io.hpp"
#include "kcenter/rng.hpp"
#include "kcenter/solvers.hpp"
#include "oracles.hpp"

namespace fs = std::filesystem;
using namespace kcenter;

namespace {

int failures = 0;

void report(int criterion, const std::string& what, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << criterion << ": " << what;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << std::endl;
    if (!ok) ++failures;
}

int jobs() {
    const int n = static_cast<int>(std::thread::hardware_concurrency());
    return n > 0 ? n : 1;
}

Instance square_instance(Rng& rng, int n, int k) {
    std::vector<Point> pts(static_cast<size_t>(n));
    for (Point& p : pts) {
        p.x = 100.0 * rng.uniform_open();
        p.y = 100.0 * rng.uniform_open();
    }
    return Instance(std::move(pts), k);
}

// --- criterion 1: 2-approximation over random small instances ---
void criterion_1() {
    Rng rng(0xACC1);
    int violations = 0;
    double worst_ratio = 1.0;
    std::string offenders;
    const int trials = 200;
    for (int t = 0; t < trials; ++t) {
        const int n = 5 + rng.index(8);
        const int k = 1 + rng.index(3);
        const Instance inst = square_instance(rng, n, k);
        const double opt = solve_exact(inst).objective;
        const std::uint64_t seed = rng.next_u64();
        for (SolverKind kind : {SolverKind::TwoApprox, SolverKind::Dragoon,
                                SolverKind::Greedy, SolverKind::Backtrack}) {
            SolverConfig cfg{kind, seed};
            const double d = solve(inst, cfg).solution.objective;
            if (d > 2.0 * opt) {
                ++violations;
                worst_ratio = std::max(worst_ratio, d / opt);
                offenders += std::string(" ") + solver_name(kind);
            }
        }
    }
    std::string detail = std::to_string(violations) + " violations";
    if (violations > 0)
        detail += " by" + offenders + ", worst ratio " +
                  format_double(std::round(worst_ratio * 1000) / 1000) +
                  "; the greedy-dominating heuristic carries no 2-approximation"
                  " guarantee (see tests/test_solvers.cpp counterexample)";
    report(1, "2-approximation bound over 200 random instances", violations == 0, detail);
}

// --- criteria 2 + 3: dominance and Dragoon monotonicity on one corpus ---
void criteria_2_3() {
    const auto& setups = setup_catalog();
    const int total = 1000;
    std::vector<Instance> corpus;
    std::vector<std::uint64_t> seeds;
    corpus.reserve(total);
    Rng rng(0xACC2);
    for (int i = 0; i < total; ++i) {
        const SetupSpec& s = setups[static_cast<size_t>(i) % setups.size()];
        corpus.push_back(square_instance(rng, s.customers, s.centers));
        seeds.push_back(rng.next_u64());
    }

    std::atomic<int> dominance_violations{0};
    std::atomic<int> monotonicity_violations{0};
    const int workers = jobs();
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (int i = w; i < total; i += workers) {
                const Instance& inst = corpus[static_cast<size_t>(i)];
                SolverConfig greedy{SolverKind::Greedy, seeds[static_cast<size_t>(i)]};
                SolverConfig backtrack = greedy;
                backtrack.kind = SolverKind::Backtrack;
                const double dg = solve(inst, greedy).solution.objective;
                const double db = solve(inst, backtrack).solution.objective;
                if (db > dg) ++dominance_violations;

                SolverConfig dragoon{SolverKind::Dragoon, seeds[static_cast<size_t>(i)]};
                const SolveResult res = solve_dragoon(inst, dragoon);
                const auto& stages = res.trace.stage_objectives;
                for (size_t s = 1; s < stages.size(); ++s)
                    if (stages[s].second > stages[s - 1].second) ++monotonicity_violations;
                if (res.solution.objective > stages.front().second)
                    ++monotonicity_violations;
            }
        });
    }
    for (auto& t : pool) t.join();

    report(2, "backtrack <= greedy on 1000 shared-seed instances",
           dominance_violations == 0,
           std::to_string(dominance_violations.load()) + " violations");
    report(3, "dragoon stage-3 trace non-increasing on the same corpus",
           monotonicity_violations == 0,
           std::to_string(monotonicity_violations.load()) + " violations");
}

// --- criterion 4: Table-2 sign reproduction ---
void criterion_4() {
    SolverConfig dragoon;
    dragoon.kind = SolverKind::Dragoon;
    std::vector<SolverConfig> challengers(3);
    challengers[0].kind = SolverKind::MacQueen;
    challengers[1].kind = SolverKind::TwoApprox;
    challengers[2].kind = SolverKind::Greedy;

    bool ok = true;
    std::string detail;
    for (const std::string& label : {"25/4", "36/4", "49/9", "64/16"}) {
        const SetupSpec setup = *find_setup(label);
        const CampaignSummary summary = run_average_campaign(
            setup, dragoon, challengers, 1000, 0xACC4, jobs());
        for (const ChallengerSummary& c : summary.per_challenger) {
            if (c.mean_delta <= 0.0) ok = false;
            detail += label + " " + solver_name(c.challenger) + "=" +
                      format_double(std::round(c.mean_delta * 100) / 100) + " ";
        }
    }
    report(4, "mean delta-D vs dragoon positive for macqueen/two-approx/greedy", ok,
           detail);
}

// --- criteria 5 + 6: adversarial existence and elitism ---
void criteria_5_6() {
    const SetupSpec setup = *find_setup("10/2");
    bool existence_ok = true;
    int elitism_violations = 0;
    std::string detail;

    for (SolverKind challenger : {SolverKind::MacQueen, SolverKind::TwoApprox,
                                  SolverKind::Greedy, SolverKind::Backtrack}) {
        SolverConfig ch;
        ch.kind = challenger;
        SolverConfig dragoon;
        dragoon.kind = SolverKind::Dragoon;

        EAConfig ea;
        ea.jobs = jobs();
        std::vector<std::uint64_t> seeds;
        for (int r = 0; r < 10; ++r)
            seeds.push_back(mix64(0xACC5, static_cast<std::uint64_t>(challenger),
                                  static_cast<std::uint64_t>(r)));
        const auto outcomes =
            run_adversarial_campaign(setup, {{ch, dragoon}}, ea, seeds);

        int found = 0;
        for (const AdversarialOutcome& o : outcomes) {
            if (o.best_delta < 0.0) ++found;
            for (size_t i = 1; i < o.fitness_history.size(); ++i)
                if (o.fitness_history[i] > o.fitness_history[i - 1])
                    ++elitism_violations;
        }
        detail += std::string(solver_name(challenger)) + "=" + std::to_string(found) + "/10 ";
        if (found < 8) existence_ok = false;
    }
    report(5, "EA finds delta-D < 0 vs dragoon in >= 8/10 runs per challenger",
           existence_ok, detail);
    report(6, "EA fitness history non-increasing in every run",
           elitism_violations == 0,
           std::to_string(elitism_violations) + " violations");
}

// --- criterion 7: campaign reruns are byte-identical ---
void criterion_7() {
    const std::string cli = KCENTER_CLI_PATH;
    const fs::path base = fs::temp_directory_path() / "kcenter_acceptance";
    fs::remove_all(base);
    auto slurp = [](const fs::path& p) {
        std::ifstream in(p, std::ios::binary);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    bool ok = true;
    for (int run = 1; run <= 2; ++run) {
        const std::string cmd = cli +
            " average --setup 10/2 --instances 20 --seed 77 --jobs " +
            std::to_string(run == 1 ? 1 : jobs()) + " --out " +
            (base / std::to_string(run)).string() + " > /dev/null 2>&1";
        if (std::system(cmd.c_str()) != 0) ok = false;
    }
    ok = ok && slurp(base / "1" / "records.csv") == slurp(base / "2" / "records.csv") &&
         slurp(base / "1" / "summary.csv") == slurp(base / "2" / "summary.csv") &&
         !slurp(base / "1" / "records.csv").empty();
    report(7, "rerunning a campaign from its manifest is byte-identical", ok);
}

// --- criterion 8: exact solver vs independent enumerator ---
void criterion_8() {
    Rng rng(0xACC8);
    int mismatches = 0;
    for (int t = 0; t < 50; ++t) {
        const int n = 4 + rng.index(7);
        const int k = 1 + rng.index(3);
        const Instance inst = square_instance(rng, n, std::min(k, n));
        const Solution a = solve_exact(inst);
        const Solution b = oracle::exhaustive_best(inst);
        if (a.objective != b.objective || a.centers != b.centers) ++mismatches;
    }
    report(8, "solve_exact matches the independent enumerator on 50 instances",
           mismatches == 0, std::to_string(mismatches) + " mismatches");
}

// --- criterion 9: operator statistics ---
void criterion_9() {
    Rng rng(0xACC9);
    const int trials = 10000;

    Genome g;
    g.genes.assign(20, 0.5);
    double sum = 0.0, sum_sq = 0.0;
    for (int t = 0; t < trials; ++t) {
        const Genome child = mutate(g, 0.05, rng);
        double delta = 0.0;
        for (size_t i = 0; i < g.genes.size(); ++i)
            if (child.genes[i] != g.genes[i]) delta = child.genes[i] - g.genes[i];
        sum += delta;
        sum_sq += delta * delta;
    }
    const double mean = sum / trials;
    const double sigma = std::sqrt(sum_sq / trials - mean * mean);

    Genome a, b;
    a.genes.assign(20, 0.2);
    b.genes.assign(20, 0.8);
    int fired = 0;
    for (int t = 0; t < trials; ++t)
        if (recombine(a, b, 0.3, 0.5, rng).genes[0] == 0.5) ++fired;
    const double rate = static_cast<double>(fired) / trials;

    const bool ok = std::abs(sigma - 0.05) <= 0.05 * 0.05 &&
                    std::abs(rate - 0.3) <= 0.03;
    report(9, "mutation sigma within 5% of 0.05, recombination rate within 3pts of 0.3",
           ok, "sigma=" + format_double(sigma) + " rate=" + format_double(rate));
}

} // namespace

int main() {
    criterion_1();
    criteria_2_3();
    criterion_4();
    criteria_5_6();
    criterion_7();
    criterion_8();
    criterion_9();
    std::cout << (failures == 0 ? "all criteria passed" :
                  std::to_string(failures) + " criterion(s) failed") << std::endl;
    return failures == 0 ? 0 : 1;
}
