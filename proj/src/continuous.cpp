#include "evofs/continuous.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace evofs {

Genome binarize_position(std::span<const double> position) {
    Genome g;
    g.encoding = Encoding::BinaryMask;
    g.n = position.size();
    g.mask.resize(position.size());
    for (std::size_t i = 0; i < position.size(); ++i) g.mask[i] = position[i] >= 0.5 ? 1 : 0;
    return g;
}

std::vector<double> random_position(std::size_t n, double lower, double upper, RngStream& rng) {
    std::vector<double> pos(n);
    for (auto& x : pos) x = rng.uniform(lower, upper);
    return pos;
}

void clamp_position(std::vector<double>& position, double lower, double upper) {
    for (auto& x : position) x = std::clamp(x, lower, upper);
}

double position_fitness(const FitnessFn& fitness, std::span<const double> position) {
    return fitness(binarize_position(position));
}

std::size_t roulette_pick(std::span<const double> fitnesses, RngStream& rng) {
    const std::size_t count = fitnesses.size();
    if (count == 0) throw std::invalid_argument("roulette_pick: empty fitness vector");

    double min_finite = std::numeric_limits<double>::infinity();
    bool any_finite = false;
    for (double f : fitnesses) {
        if (std::isfinite(f)) {
            any_finite = true;
            min_finite = std::min(min_finite, f);
        }
    }
    if (!any_finite) return rng.index(count);

    std::vector<double> weight(count, 0.0);
    double total = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
        const double f = fitnesses[i];
        if (!std::isfinite(f)) continue;
        weight[i] = min_finite > 0.0 ? f : (f - min_finite) + 1e-9;
        total += weight[i];
    }
    if (!(total > 0.0) || !std::isfinite(total)) return rng.index(count);

    const double u = rng.uniform01() * total;
    double cum = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
        cum += weight[i];
        if (u < cum) return i;
    }
    return count - 1;
}

}  // namespace evofs
