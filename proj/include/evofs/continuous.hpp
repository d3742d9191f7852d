#pragma once

#include <functional>
#include <span>
#include <vector>

#include "evofs/genome.hpp"
#include "evofs/population.hpp"
#include "evofs/rng.hpp"

namespace evofs {

// The swarm algorithms evolve vectors in [lower, upper]^n and binarize them
// for fitness evaluation: bit = 1 iff the component is >= 0.5.

Genome binarize_position(std::span<const double> position);

std::vector<double> random_position(std::size_t n, double lower, double upper, RngStream& rng);

void clamp_position(std::vector<double>& position, double lower, double upper);

/// Fitness of a continuous position = fitness of its binarized genome.
double position_fitness(const FitnessFn& fitness, std::span<const double> position);

/// Fitness-proportional pick over raw fitness values (shifted positive the
/// same way roulette_select shifts them).
std::size_t roulette_pick(std::span<const double> fitnesses, RngStream& rng);

}  // namespace evofs
