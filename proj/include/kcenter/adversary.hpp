#pragma once

#include <cstdint>
#include <vector>

#include "kcenter/core.hpp"
#include "kcenter/rng.hpp"
#include "kcenter/solvers.hpp"

namespace kcenter {

/// Real-valued encoding of an instance: 2n genes in (0,1), pairs mapping
/// to customer coordinates in the 100x100 square.
struct Genome {
    std::vector<double> genes;
};

struct EAConfig {
    int n_customers = 10;
    int k = 2;
    SolverConfig challenger;
    SolverConfig challenged;
    int population = 20;
    int generations = 100;
    double mutation_sigma = 0.05;
    double recombination_prob = 0.3;
    double recombination_alpha = 0.5;
    int tournament_size = 2;
    std::uint64_t seed = 0;
    int jobs = 1; // fitness-evaluation threads; results independent of it
};

struct EvolutionResult {
    Genome best_genome;
    double best_fitness = 0.0;
    std::vector<double> fitness_history; // best-so-far per generation, non-increasing
    Instance best_instance;
};

Instance decode(const Genome& g, const EAConfig& cfg);

/// D_challenger - D_challenged on the decoded instance; lower is better.
double fitness(const Genome& g, const EAConfig& cfg);

/// Perturbs exactly one uniformly chosen gene with a N(0, sigma) draw,
/// clamped back into the open unit interval.
Genome mutate(const Genome& g, double sigma, Rng& rng);

/// Whole arithmetic recombination: with probability prob the child is the
/// element-wise alpha-blend of a and b, otherwise a copy of a.
Genome recombine(const Genome& a, const Genome& b, double prob, double alpha, Rng& rng);

EvolutionResult evolve(const EAConfig& cfg);

} // namespace kcenter
