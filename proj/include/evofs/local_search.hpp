#pragma once

#include "evofs/population.hpp"
#include "evofs/rng.hpp"

namespace evofs {

// Single-flip hill climbing with strict-improvement acceptance. budget caps
// the number of fitness evaluations spent per call; 0 disables the pass.
struct LocalSearchSpec {
    std::size_t budget = 0;
};

/// Hill-climbs over single-change neighbors in random order (bit flips for
/// BinaryMask genomes, slot swaps with unused indices for IntegerSubset),
/// accepting strict improvements, until the budget is spent or a full pass
/// finds no improvement. The returned fitness is never below the input's.
Individual memetic_improve(const Individual& ind, const FitnessFn& fitness,
                           const LocalSearchSpec& spec, RngStream& rng);

}  // namespace evofs
