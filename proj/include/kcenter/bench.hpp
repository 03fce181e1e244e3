#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kcenter/adversary.hpp"
#include "kcenter/core.hpp"
#include "kcenter/rng.hpp"
#include "kcenter/solvers.hpp"

namespace kcenter {

struct SetupSpec {
    int customers = 0;
    int centers = 0;
    std::string label;
};

/// The six built-in experiment setups.
const std::vector<SetupSpec>& setup_catalog();
std::optional<SetupSpec> find_setup(const std::string& label);

struct ComparisonRecord {
    SolverKind challenger;
    SolverKind challenged;
    std::string instance_id;
    double d_challenger = 0.0;
    double d_challenged = 0.0;
    double delta_d = 0.0;
};

struct ChallengerSummary {
    SolverKind challenger;
    double mean_delta = 0.0;
    double min_delta = 0.0;
    double max_delta = 0.0;
    int count = 0;
};

struct CampaignSummary {
    SetupSpec setup;
    std::vector<ChallengerSummary> per_challenger;
    std::vector<ComparisonRecord> records;
    std::vector<Instance> instances; // index-aligned with instance batches
};

/// Customers i.i.d. uniform in the open square (0,100)^2.
Instance random_instance(const SetupSpec& setup, Rng& rng);

/// Content hash of the canonical instance JSON; stable across runs.
std::string instance_id(const Instance& inst);

/// Seed for one solver run, derived so adding a challenger never perturbs
/// the other solvers' streams.
std::uint64_t derive_solver_seed(std::uint64_t master, int instance_index, SolverKind kind);

CampaignSummary run_average_campaign(const SetupSpec& setup,
                                     const SolverConfig& challenged,
                                     const std::vector<SolverConfig>& challengers,
                                     int n_instances, std::uint64_t seed,
                                     int jobs = 1);

struct AdversarialOutcome {
    SolverKind challenger;
    SolverKind challenged;
    std::uint64_t run_seed = 0;
    double best_delta = 0.0;
    Instance best_instance;
    std::vector<double> fitness_history;
};

std::vector<AdversarialOutcome> run_adversarial_campaign(
    const SetupSpec& setup,
    const std::vector<std::pair<SolverConfig, SolverConfig>>& pairs,
    const EAConfig& ea_template, const std::vector<std::uint64_t>& seeds);

struct MatrixCell {
    SolverKind challenger;
    SolverKind challenged;
    double best_delta = 0.0;
    Instance best_instance;
};

/// Adversarial search over every ordered pair of distinct kinds; the best
/// (most negative) delta over the given seeds is kept per cell.
std::vector<MatrixCell> run_matrix_campaign(const SetupSpec& setup,
                                            const std::vector<SolverKind>& kinds,
                                            const EAConfig& ea_template,
                                            const std::vector<std::uint64_t>& seeds);

} // namespace kcenter
