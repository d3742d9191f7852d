#include "evofs/population.hpp"

#include <stdexcept>

namespace evofs {

std::size_t Population::best_index() const {
    if (members.empty()) throw std::invalid_argument("population: empty");
    std::size_t best = 0;
    for (std::size_t i = 1; i < members.size(); ++i)
        if (members[i].fitness > members[best].fitness) best = i;
    return best;
}

std::size_t Population::worst_index() const {
    if (members.empty()) throw std::invalid_argument("population: empty");
    std::size_t worst = 0;
    for (std::size_t i = 1; i < members.size(); ++i)
        if (members[i].fitness < members[worst].fitness) worst = i;
    return worst;
}

double Population::mean_fitness() const {
    double sum = 0.0;
    std::size_t count = 0;
    for (const auto& m : members) {
        if (std::isfinite(m.fitness)) {
            sum += m.fitness;
            ++count;
        }
    }
    if (count == 0) return kInfeasibleFitness;
    return sum / static_cast<double>(count);
}

void Population::evaluate_all(const FitnessFn& fitness) {
    for (auto& m : members)
        if (!m.evaluated()) m.fitness = fitness(m.genome);
}

Population Population::random_binary(std::size_t capacity, std::size_t n, RngStream& rng) {
    Population pop;
    pop.members.reserve(capacity);
    for (std::size_t i = 0; i < capacity; ++i)
        pop.members.push_back({Genome::random_binary(n, rng)});
    return pop;
}

Population Population::random_subset(std::size_t capacity, std::size_t n, std::size_t m,
                                     RngStream& rng) {
    Population pop;
    pop.members.reserve(capacity);
    for (std::size_t i = 0; i < capacity; ++i)
        pop.members.push_back({Genome::random_subset(n, m, rng)});
    return pop;
}

}  // namespace evofs
