#include "kcenter/adversary.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace kcenter {

namespace {

constexpr double kClampMargin = 1e-9;

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

struct Individual {
    Genome genome;
    double fit = 0.0;
    std::uint64_t birth = 0; // creation order; earlier wins fitness ties
};

} // namespace

Instance decode(const Genome& g, const EAConfig& cfg) {
    if (g.genes.size() != static_cast<size_t>(2 * cfg.n_customers))
        throw std::invalid_argument("genome length does not match n_customers");
    std::vector<Point> customers(static_cast<size_t>(cfg.n_customers));
    for (int i = 0; i < cfg.n_customers; ++i) {
        customers[static_cast<size_t>(i)] = Point{100.0 * g.genes[static_cast<size_t>(2 * i)],
                                                  100.0 * g.genes[static_cast<size_t>(2 * i + 1)]};
    }
    return Instance(std::move(customers), cfg.k);
}

double fitness(const Genome& g, const EAConfig& cfg) {
    const Instance inst = decode(g, cfg);
    const double d_challenger = solve(inst, cfg.challenger).solution.objective;
    const double d_challenged = solve(inst, cfg.challenged).solution.objective;
    return d_challenger - d_challenged;
}

Genome mutate(const Genome& g, double sigma, Rng& rng) {
    Genome child = g;
    const int pos = rng.index(static_cast<int>(g.genes.size()));
    double v = child.genes[static_cast<size_t>(pos)] + sigma * rng.gaussian();
    v = std::clamp(v, kClampMargin, 1.0 - kClampMargin);
    child.genes[static_cast<size_t>(pos)] = v;
    return child;
}

Genome recombine(const Genome& a, const Genome& b, double prob, double alpha, Rng& rng) {
    if (a.genes.size() != b.genes.size())
        throw std::invalid_argument("recombine: genome length mismatch");
    if (rng.uniform() >= prob) return a;
    Genome child;
    child.genes.resize(a.genes.size());
    for (size_t i = 0; i < a.genes.size(); ++i)
        child.genes[i] = alpha * a.genes[i] + (1.0 - alpha) * b.genes[i];
    return child;
}

EvolutionResult evolve(const EAConfig& cfg) {
    if (cfg.population < 1 || cfg.generations < 0)
        throw std::invalid_argument("invalid EA config");
    const int pop = cfg.population;
    const size_t genome_len = static_cast<size_t>(2 * cfg.n_customers);

    std::vector<Individual> population(static_cast<size_t>(pop));
    {
        Rng init_rng(mix64(cfg.seed, 0x696e6974ULL)); // "init" stream
        for (int i = 0; i < pop; ++i) {
            auto& ind = population[static_cast<size_t>(i)];
            ind.genome.genes.resize(genome_len);
            for (double& gene : ind.genome.genes) gene = init_rng.uniform_open();
            ind.birth = static_cast<std::uint64_t>(i);
        }
    }
    run_parallel(pop, cfg.jobs, [&](int i) {
        population[static_cast<size_t>(i)].fit =
            fitness(population[static_cast<size_t>(i)].genome, cfg);
    });
    std::uint64_t next_birth = static_cast<std::uint64_t>(pop);

    auto better = [](const Individual& a, const Individual& b) {
        if (a.fit != b.fit) return a.fit < b.fit; // minimizing
        return a.birth < b.birth;
    };

    EvolutionResult result;
    auto record_best = [&] {
        const auto& best = *std::min_element(population.begin(), population.end(), better);
        result.fitness_history.push_back(best.fit);
        if (result.fitness_history.size() == 1 || best.fit < result.best_fitness) {
            result.best_fitness = best.fit;
            result.best_genome = best.genome;
        }
    };
    record_best();

    for (int gen = 1; gen <= cfg.generations; ++gen) {
        std::vector<Individual> offspring(static_cast<size_t>(pop));
        // Variation RNG is per-offspring, derived from (seed, generation,
        // slot), so evaluation parallelism cannot change the outcome.
        for (int i = 0; i < pop; ++i) {
            Rng rng(mix64(cfg.seed, static_cast<std::uint64_t>(gen),
                          static_cast<std::uint64_t>(i)));
            auto tournament = [&]() -> const Individual& {
                const Individual* winner = &population[static_cast<size_t>(rng.index(pop))];
                for (int t = 1; t < cfg.tournament_size; ++t) {
                    const Individual& rival = population[static_cast<size_t>(rng.index(pop))];
                    if (better(rival, *winner)) winner = &rival;
                }
                return *winner;
            };
            const Individual& pa = tournament();
            const Individual& pb = tournament();
            Genome child = recombine(pa.genome, pb.genome, cfg.recombination_prob,
                                     cfg.recombination_alpha, rng);
            child = mutate(child, cfg.mutation_sigma, rng);
            offspring[static_cast<size_t>(i)].genome = std::move(child);
            offspring[static_cast<size_t>(i)].birth = next_birth++;
        }
        run_parallel(pop, cfg.jobs, [&](int i) {
            offspring[static_cast<size_t>(i)].fit =
                fitness(offspring[static_cast<size_t>(i)].genome, cfg);
        });

        // (mu + lambda) survival: everybody competes, best `pop` stay.
        population.insert(population.end(),
                          std::make_move_iterator(offspring.begin()),
                          std::make_move_iterator(offspring.end()));
        std::sort(population.begin(), population.end(), better);
        population.resize(static_cast<size_t>(pop));
        record_best();
    }

    result.best_instance = decode(result.best_genome, cfg);
    return result;
}

} // namespace kcenter
