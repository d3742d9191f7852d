#include "evofs/selection.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "evofs/continuous.hpp"

namespace evofs {

std::size_t roulette_select(const Population& pop, RngStream& rng) {
    if (pop.size() == 0) throw std::invalid_argument("roulette_select: empty population");
    std::vector<double> fitnesses(pop.size());
    for (std::size_t i = 0; i < pop.size(); ++i) fitnesses[i] = pop[i].fitness;
    return roulette_pick(fitnesses, rng);
}

std::size_t tournament_select(const Population& pop, std::size_t k, RngStream& rng) {
    const std::size_t count = pop.size();
    if (count == 0) throw std::invalid_argument("tournament_select: empty population");
    if (k == 0 || k > count)
        throw std::invalid_argument("tournament_select: k must be in [1, population size]");

    // partial Fisher-Yates over the index set gives k distinct entrants
    std::vector<std::size_t> idx(count);
    for (std::size_t i = 0; i < count; ++i) idx[i] = i;
    std::size_t best = count;
    for (std::size_t i = 0; i < k; ++i) {
        std::swap(idx[i], idx[i + rng.index(count - i)]);
        const std::size_t c = idx[i];
        if (best == count || pop[c].fitness > pop[best].fitness ||
            (pop[c].fitness == pop[best].fitness && c < best))
            best = c;
    }
    return best;
}

std::size_t uniform_select(const Population& pop, RngStream& rng) {
    if (pop.size() == 0) throw std::invalid_argument("uniform_select: empty population");
    return rng.index(pop.size());
}

std::size_t select_parent(const Population& pop, const SelectionSpec& spec, RngStream& rng) {
    switch (spec.kind) {
        case SelectionKind::RouletteWheel:
            return roulette_select(pop, rng);
        case SelectionKind::Tournament:
            return tournament_select(pop, spec.tournament_k, rng);
        case SelectionKind::Uniform:
            return uniform_select(pop, rng);
    }
    throw std::logic_error("select_parent: unknown selection kind");
}

}  // namespace evofs
