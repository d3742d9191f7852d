#include "evofs/optimizer.hpp"

#include <algorithm>
#include <stdexcept>

namespace evofs {

std::string optimizer_name(OptimizerId id) {
    switch (id) {
        case OptimizerId::GaSsga: return "ga-ssga";
        case OptimizerId::GaGga: return "ga-gga";
        case OptimizerId::Abc: return "abc";
        case OptimizerId::Pso: return "pso";
        case OptimizerId::Aco: return "aco";
        case OptimizerId::Gwo: return "gwo";
        case OptimizerId::Coa: return "coa";
        case OptimizerId::Cso: return "cso";
        case OptimizerId::Fsa: return "fsa";
    }
    throw std::logic_error("optimizer_name: unknown id");
}

OptimizerId optimizer_from_name(std::string_view name) {
    for (OptimizerId id : all_optimizers())
        if (optimizer_name(id) == name) return id;
    throw std::invalid_argument("unknown optimizer '" + std::string(name) + "'");
}

std::vector<OptimizerId> all_optimizers() {
    return {OptimizerId::GaSsga, OptimizerId::GaGga, OptimizerId::Abc,
            OptimizerId::Pso,    OptimizerId::Aco,   OptimizerId::Gwo,
            OptimizerId::Coa,    OptimizerId::Cso,   OptimizerId::Fsa};
}

void OptimizerConfig::set_population(std::size_t pop) {
    if (pop == 0) throw std::invalid_argument("config: population must be positive");
    population = pop;
    abc.colony_size = pop;
    pso.particles = pop;
    aco.ants = pop;
    gwo.wolves = pop;
    cso.swarm = pop;
    fsa.school = pop;
    coa.n_packs = std::max<std::size_t>(1, pop / coa.pack_size);
}

void OptimizerConfig::validate(OptimizerId id, std::size_t n_features) const {
    if (population == 0) throw std::invalid_argument("config: population must be positive");
    if (n_features == 0) throw std::invalid_argument("config: dataset has no features");
    switch (id) {
        case OptimizerId::GaSsga:
        case OptimizerId::GaGga: {
            if (ga.selection.kind == SelectionKind::Tournament &&
                (ga.selection.tournament_k == 0 || ga.selection.tournament_k > population))
                throw std::invalid_argument("config: tournament_k must be in [1, population]");
            const std::size_t len = ga.encoding == Encoding::BinaryMask
                                        ? n_features
                                        : (ga.subset_size ? ga.subset_size
                                                          : std::max<std::size_t>(1, n_features / 2));
            if (ga.variation.crossover == CrossoverKind::KPoint &&
                (ga.variation.k_points == 0 || (len > 1 && ga.variation.k_points >= len)))
                throw std::invalid_argument("config: k_points must satisfy 1 <= k < genome length");
            if (ga.variation.crossover == CrossoverKind::Arithmetic)
                throw std::invalid_argument("config: arithmetic crossover needs continuous genomes");
            if (ga.encoding == Encoding::IntegerSubset && ga.subset_size > n_features)
                throw std::invalid_argument("config: subset_size exceeds feature count");
            break;
        }
        case OptimizerId::Abc:
            if (abc.colony_size < 4) throw std::invalid_argument("config: abc colony too small");
            if (abc.limit < 1) throw std::invalid_argument("config: abc limit must be >= 1");
            if (abc.lower_bound > abc.upper_bound)
                throw std::invalid_argument("config: abc bounds are infeasible");
            break;
        case OptimizerId::Pso:
            if (pso.particles == 0) throw std::invalid_argument("config: pso needs particles");
            if (pso.max_velocity <= 0.0)
                throw std::invalid_argument("config: pso max_velocity must be positive");
            if (pso.min_weight > pso.max_weight)
                throw std::invalid_argument("config: pso inertia bounds are inverted");
            break;
        case OptimizerId::Aco:
            if (aco.ants == 0) throw std::invalid_argument("config: aco needs ants");
            if (!(aco.evaporation > 0.0 && aco.evaporation <= 1.0))
                throw std::invalid_argument("config: aco evaporation must lie in (0, 1]");
            break;
        case OptimizerId::Gwo:
            if (gwo.wolves < 3) throw std::invalid_argument("config: gwo needs three wolves");
            break;
        case OptimizerId::Coa:
            if (coa.n_packs < 1 || coa.pack_size < 3)
                throw std::invalid_argument("config: coa needs >= 1 pack of >= 3 coyotes");
            break;
        case OptimizerId::Cso:
            cso_role_counts(cso.swarm, cso.rooster_ratio, cso.hens_ratio, cso.chicks_ratio);
            if (cso.reorder_period == 0)
                throw std::invalid_argument("config: cso reorder period must be >= 1");
            break;
        case OptimizerId::Fsa:
            if (fsa.school == 0) throw std::invalid_argument("config: fsa needs fish");
            if (!(fsa.crowding > 0.0 && fsa.crowding <= 1.0))
                throw std::invalid_argument("config: fsa crowding must lie in (0, 1]");
            break;
    }
}

namespace {

struct IterStats {
    Genome best;
    double best_fitness;
    double mean_fitness;
};

template <typename Step>
SingleRunResult drive_loop(Genome init_best, double init_best_fitness,
                           const TerminationSpec& term, Step step) {
    SingleRunResult result;
    result.best_genome = std::move(init_best);
    result.best_fitness = init_best_fitness;
    std::size_t stagnation = 0;
    for (std::size_t t = 0; t < term.max_iterations; ++t) {
        IterStats stats = step(t);
        if (stats.best_fitness > result.best_fitness) {
            result.best_genome = std::move(stats.best);
            result.best_fitness = stats.best_fitness;
            stagnation = 0;
        } else {
            ++stagnation;
        }
        result.history.push_back(
            {t, result.best_fitness, stats.mean_fitness, result.best_genome.selected_count()});
        if (term.target_fitness && result.best_fitness >= *term.target_fitness) break;
        if (term.stagnation_window && stagnation >= *term.stagnation_window) break;
    }
    return result;
}

SingleRunResult run_ga(bool steady_state, const FitnessFunction& fitness,
                       const OptimizerConfig& config, const TerminationSpec& term,
                       RngStream& rng) {
    const std::size_t n = fitness.dataset().cols;
    const GaParams& ga = config.ga;
    Population pop;
    if (ga.encoding == Encoding::BinaryMask) {
        pop = Population::random_binary(config.population, n, rng);
    } else {
        const std::size_t m = ga.subset_size ? ga.subset_size : std::max<std::size_t>(1, n / 2);
        pop = Population::random_subset(config.population, n, m, rng);
    }
    const FitnessFn fn = [&](const Genome& g) { return fitness(g); };
    pop.evaluate_all(fn);

    LocalSearchSpec local{ga.memetic_budget};
    const LocalSearchSpec* local_ptr = ga.memetic_budget > 0 ? &local : nullptr;

    const std::size_t best0 = pop.best_index();
    return drive_loop(pop[best0].genome, pop[best0].fitness, term, [&](std::size_t) {
        if (steady_state) {
            // one iteration = population-many in-place replacements, so SSGA
            // and GGA spend the same evaluation budget per iteration
            for (std::size_t s = 0; s < config.population; ++s)
                pop = ssga_step(std::move(pop), ga.selection, ga.variation, fn, rng, local_ptr);
        } else {
            pop = gga_step(pop, ga.selection, ga.variation, fn, rng, ga.elitism, local_ptr);
        }
        const std::size_t best = pop.best_index();
        return IterStats{pop[best].genome, pop[best].fitness, pop.mean_fitness()};
    });
}

SingleRunResult run_abc(const FitnessFunction& fitness, const OptimizerConfig& config,
                        const TerminationSpec& term, RngStream& rng) {
    const FitnessFn fn = [&](const Genome& g) { return fitness(g); };
    AbcColony colony(fitness.dataset().cols, config.abc, fn, rng);
    const auto& best0 = colony.foods()[colony.best_food()];
    return drive_loop(binarize_position(best0.position), best0.fitness, term, [&](std::size_t) {
        colony.step(fn, rng);
        const auto& best = colony.foods()[colony.best_food()];
        return IterStats{binarize_position(best.position), best.fitness, colony.mean_fitness()};
    });
}

SingleRunResult run_pso(const FitnessFunction& fitness, const OptimizerConfig& config,
                        const TerminationSpec& term, RngStream& rng) {
    const FitnessFn fn = [&](const Genome& g) { return fitness(g); };
    PsoSwarm swarm(fitness.dataset().cols, config.pso, fn, rng);
    return drive_loop(binarize_position(swarm.gbest_position()), swarm.gbest_fitness(), term,
                      [&](std::size_t t) {
                          swarm.step(fn, rng, t, term.max_iterations);
                          return IterStats{binarize_position(swarm.gbest_position()),
                                           swarm.gbest_fitness(), swarm.mean_fitness()};
                      });
}

Genome subset_to_genome(const std::vector<std::size_t>& subset, std::size_t n) {
    Genome g;
    g.encoding = Encoding::BinaryMask;
    g.n = n;
    g.mask.assign(n, 0);
    for (std::size_t j : subset) g.mask[j] = 1;
    return g;
}

SingleRunResult run_aco(const FitnessFunction& fitness, const OptimizerConfig& config,
                        const TerminationSpec& term, RngStream& rng) {
    const std::size_t n = fitness.dataset().cols;
    const FitnessFn fn = [&](const Genome& g) { return fitness(g); };
    // heuristic eta: per-feature filter scores, floored away from zero so no
    // feature is permanently unreachable
    std::vector<double> eta = fitness.feature_scores();
    for (auto& e : eta) e = std::max(e, 0.01);
    AcoState state(n, config.aco, std::move(eta), fn, rng);
    const Ant& best0 = state.ants()[state.best_ant()];
    return drive_loop(subset_to_genome(best0.subset, n), best0.fitness, term, [&](std::size_t) {
        state.step(fn, rng);
        const Ant& best = state.ants()[state.best_ant()];
        return IterStats{subset_to_genome(best.subset, n), best.fitness, state.mean_fitness()};
    });
}

SingleRunResult run_gwo(const FitnessFunction& fitness, const OptimizerConfig& config,
                        const TerminationSpec& term, RngStream& rng) {
    const FitnessFn fn = [&](const Genome& g) { return fitness(g); };
    GwoPack pack(fitness.dataset().cols, config.gwo, fn, rng);
    const std::size_t b0 = pack.best_wolf();
    return drive_loop(binarize_position(pack.positions()[b0]), pack.fitnesses()[b0], term,
                      [&](std::size_t t) {
                          pack.step(fn, rng, t, term.max_iterations);
                          const std::size_t b = pack.best_wolf();
                          return IterStats{binarize_position(pack.positions()[b]),
                                           pack.fitnesses()[b], pack.mean_fitness()};
                      });
}

SingleRunResult run_coa(const FitnessFunction& fitness, const OptimizerConfig& config,
                        const TerminationSpec& term, RngStream& rng) {
    const FitnessFn fn = [&](const Genome& g) { return fitness(g); };
    CoaSystem system(fitness.dataset().cols, config.coa, fn, rng);
    const auto [p0, c0] = system.best_coyote();
    return drive_loop(binarize_position(system.packs()[p0][c0].soc),
                      system.packs()[p0][c0].fitness, term, [&](std::size_t) {
                          system.step(fn, rng);
                          const auto [p, c] = system.best_coyote();
                          return IterStats{binarize_position(system.packs()[p][c].soc),
                                           system.packs()[p][c].fitness, system.mean_fitness()};
                      });
}

SingleRunResult run_cso(const FitnessFunction& fitness, const OptimizerConfig& config,
                        const TerminationSpec& term, RngStream& rng) {
    const FitnessFn fn = [&](const Genome& g) { return fitness(g); };
    CsoSwarm swarm(fitness.dataset().cols, config.cso, fn, rng);
    const auto& best0 = swarm.members()[swarm.best_member()];
    return drive_loop(binarize_position(best0.position), best0.fitness, term, [&](std::size_t t) {
        swarm.step(fn, rng, t);
        const auto& best = swarm.members()[swarm.best_member()];
        return IterStats{binarize_position(best.position), best.fitness, swarm.mean_fitness()};
    });
}

SingleRunResult run_fsa(const FitnessFunction& fitness, const OptimizerConfig& config,
                        const TerminationSpec& term, RngStream& rng) {
    const std::size_t n = fitness.dataset().cols;
    const RoughSetTable& table = fitness.rough_table();
    const FitnessFn fn = [&](const Genome& g) { return fitness(g); };
    FsaSchool school(table, config.fsa, fn, rng);
    const Fish& best0 = school.fish()[school.best_fish()];
    return drive_loop(subset_to_genome(best0.attrs, n), best0.fitness, term, [&](std::size_t) {
        school.step(table, fn, rng);
        const Fish& best = school.fish()[school.best_fish()];
        return IterStats{subset_to_genome(best.attrs, n), best.fitness, school.mean_fitness()};
    });
}

}  // namespace

SingleRunResult run_optimizer(OptimizerId id, const FitnessFunction& fitness,
                              const OptimizerConfig& config, const TerminationSpec& termination,
                              RngStream& rng) {
    config.validate(id, fitness.dataset().cols);
    switch (id) {
        case OptimizerId::GaSsga: return run_ga(true, fitness, config, termination, rng);
        case OptimizerId::GaGga: return run_ga(false, fitness, config, termination, rng);
        case OptimizerId::Abc: return run_abc(fitness, config, termination, rng);
        case OptimizerId::Pso: return run_pso(fitness, config, termination, rng);
        case OptimizerId::Aco: return run_aco(fitness, config, termination, rng);
        case OptimizerId::Gwo: return run_gwo(fitness, config, termination, rng);
        case OptimizerId::Coa: return run_coa(fitness, config, termination, rng);
        case OptimizerId::Cso: return run_cso(fitness, config, termination, rng);
        case OptimizerId::Fsa: return run_fsa(fitness, config, termination, rng);
    }
    throw std::logic_error("run_optimizer: unknown id");
}

}  // namespace evofs
