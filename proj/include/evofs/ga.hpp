#pragma once

#include "evofs/local_search.hpp"
#include "evofs/population.hpp"
#include "evofs/selection.hpp"
#include "evofs/variation.hpp"

namespace evofs {

/// One steady-state step: selects two parents, produces one offspring
/// (first crossover child, then mutated, then evaluated) and replaces the
/// worst member in place when the offspring is at least as fit. The best
/// population fitness never decreases across steps. A non-null local spec
/// turns the step memetic: each offspring is hill-climbed before insertion.
Population ssga_step(Population pop, const SelectionSpec& selection, const VariationSpec& variation,
                     const FitnessFn& fitness, RngStream& rng,
                     const LocalSearchSpec* local = nullptr);

/// One generational step: returns a freshly bred population of identical
/// capacity. With elitism depth 1 the incumbent best is copied in unchanged,
/// which makes the best fitness non-decreasing; elitism 0 drops that
/// guarantee. The input population is not modified.
Population gga_step(const Population& pop, const SelectionSpec& selection,
                    const VariationSpec& variation, const FitnessFn& fitness, RngStream& rng,
                    int elitism = 1, const LocalSearchSpec* local = nullptr);

}  // namespace evofs
