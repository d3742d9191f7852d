#pragma once

#include "evofs/population.hpp"
#include "evofs/rng.hpp"

namespace evofs {

enum class SelectionKind { RouletteWheel, Tournament, Uniform };

struct SelectionSpec {
    SelectionKind kind = SelectionKind::Tournament;
    std::size_t tournament_k = 2;
};

/// Fitness-proportional selection, p[i] = f'[i] / sum f'.
/// Fitnesses are used as-is when all positive; otherwise the vector is
/// shifted by the minimum plus 1e-9 so every weight is positive. Members
/// with non-finite fitness get weight zero. Degenerate weights fall back
/// to uniform selection.
std::size_t roulette_select(const Population& pop, RngStream& rng);

/// Samples k distinct members uniformly, returns the fittest of them
/// (ties broken by lowest index).
std::size_t tournament_select(const Population& pop, std::size_t k, RngStream& rng);

std::size_t uniform_select(const Population& pop, RngStream& rng);

std::size_t select_parent(const Population& pop, const SelectionSpec& spec, RngStream& rng);

}  // namespace evofs
