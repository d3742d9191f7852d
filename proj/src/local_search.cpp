#include "evofs/local_search.hpp"

#include <algorithm>

namespace evofs {

namespace {

// Neighbor = one changed position. For binary genomes `alt` is unused; for
// integer subsets the slot takes the unused index `alt`.
struct Neighbor {
    std::size_t slot;
    std::size_t alt;
};

std::vector<Neighbor> neighbors_of(const Genome& g) {
    std::vector<Neighbor> out;
    if (g.encoding == Encoding::BinaryMask) {
        out.reserve(g.n);
        for (std::size_t i = 0; i < g.n; ++i) out.push_back({i, 0});
        return out;
    }
    std::vector<bool> used(g.n, false);
    for (std::size_t v : g.indices) used[v] = true;
    for (std::size_t j = 0; j < g.indices.size(); ++j)
        for (std::size_t u = 0; u < g.n; ++u)
            if (!used[u]) out.push_back({j, u});
    return out;
}

Genome apply_neighbor(const Genome& g, const Neighbor& nb) {
    Genome out = g;
    if (g.encoding == Encoding::BinaryMask)
        out.mask[nb.slot] ^= 1;
    else
        out.indices[nb.slot] = nb.alt;
    return out;
}

}  // namespace

Individual memetic_improve(const Individual& ind, const FitnessFn& fitness,
                           const LocalSearchSpec& spec, RngStream& rng) {
    Individual current = ind;
    if (!current.evaluated()) current.fitness = fitness(current.genome);
    if (spec.budget == 0) return current;

    std::size_t evals = 0;
    bool improved = true;
    while (improved) {
        improved = false;
        auto order = neighbors_of(current.genome);
        rng.shuffle(order);
        for (const auto& nb : order) {
            if (evals >= spec.budget) return current;
            Genome cand = apply_neighbor(current.genome, nb);
            const double f = fitness(cand);
            ++evals;
            if (f > current.fitness) {
                current.genome = std::move(cand);
                current.fitness = f;
                improved = true;
                break;  // restart the pass from the improved point
            }
        }
    }
    return current;
}

}  // namespace evofs
