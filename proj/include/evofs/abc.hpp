#pragma once

#include <span>
#include <vector>

#include "evofs/continuous.hpp"

namespace evofs {

struct AbcParams {
    std::size_t colony_size = 30;  // employed + onlooker bees; food sources = colony_size / 2
    int limit = 20;                // failed trials before a food source is abandoned
    double lower_bound = 0.0;
    double upper_bound = 1.0;
};

/// Neighbor food source V_i = f_i + v * (f_i - f_j) componentwise, clamped
/// to [lower, upper]. v holds one draw per dimension.
std::vector<double> abc_neighbor(std::span<const double> f_i, std::span<const double> f_j,
                                 std::span<const double> v, double lower, double upper);

/// Scout re-initialization per dimension: lower + v' * (upper - lower).
double abc_scout_value(double lower, double upper, double v_prime);

struct FoodSource {
    std::vector<double> position;
    double fitness;
    int trials = 0;  // resets to 0 whenever the source improves or is scouted
};

// Employed/onlooker/scout colony over continuous positions. Greedy
// acceptance keeps each food source's fitness non-decreasing between scout
// resets; at most one scout acts per iteration.
class AbcColony {
public:
    AbcColony(std::size_t n_features, const AbcParams& params, const FitnessFn& fitness,
              RngStream& rng);

    /// One iteration: employed phase, onlooker phase, then at most one scout.
    void step(const FitnessFn& fitness, RngStream& rng);

    const std::vector<FoodSource>& foods() const { return foods_; }
    std::size_t best_food() const;
    double mean_fitness() const;
    std::size_t scout_resets_last_step() const { return scout_resets_; }

    /// Neighbor candidate for food i against distinct partner j.
    std::vector<double> neighbor_candidate(std::size_t i, std::size_t j, RngStream& rng) const;

private:
    void try_replace(std::size_t i, std::size_t j, const FitnessFn& fitness, RngStream& rng);

    std::size_t n_;
    AbcParams params_;
    std::vector<FoodSource> foods_;
    std::size_t scout_resets_ = 0;
};

}  // namespace evofs
