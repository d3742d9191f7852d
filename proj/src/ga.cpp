#include "evofs/ga.hpp"

namespace evofs {

namespace {

Individual finish_offspring(Genome child, const VariationSpec& variation, const FitnessFn& fitness,
                            RngStream& rng, const LocalSearchSpec* local) {
    Individual offspring{mutate(std::move(child), variation, rng)};
    offspring.fitness = fitness(offspring.genome);
    if (local && local->budget > 0) offspring = memetic_improve(offspring, fitness, *local, rng);
    return offspring;
}

}  // namespace

Population ssga_step(Population pop, const SelectionSpec& selection, const VariationSpec& variation,
                     const FitnessFn& fitness, RngStream& rng, const LocalSearchSpec* local) {
    const std::size_t pa = select_parent(pop, selection, rng);
    const std::size_t pb = select_parent(pop, selection, rng);
    auto children = crossover(pop[pa].genome, pop[pb].genome, variation, rng);
    Individual offspring =
        finish_offspring(std::move(children.first), variation, fitness, rng, local);

    const std::size_t worst = pop.worst_index();
    if (offspring.fitness >= pop[worst].fitness) pop.members[worst] = std::move(offspring);
    return pop;
}

Population gga_step(const Population& pop, const SelectionSpec& selection,
                    const VariationSpec& variation, const FitnessFn& fitness, RngStream& rng,
                    int elitism, const LocalSearchSpec* local) {
    const std::size_t capacity = pop.size();
    Population next;
    next.members.reserve(capacity);

    if (elitism > 0 && capacity > 0) next.members.push_back(pop[pop.best_index()]);

    while (next.size() < capacity) {
        const std::size_t pa = select_parent(pop, selection, rng);
        const std::size_t pb = select_parent(pop, selection, rng);
        auto children = crossover(pop[pa].genome, pop[pb].genome, variation, rng);
        next.members.push_back(
            finish_offspring(std::move(children.first), variation, fitness, rng, local));
        if (next.size() < capacity)
            next.members.push_back(
                finish_offspring(std::move(children.second), variation, fitness, rng, local));
    }
    return next;
}

}  // namespace evofs
