#pragma once

#include <utility>
#include <vector>

#include "evofs/continuous.hpp"

namespace evofs {

struct AcoParams {
    std::size_t ants = 30;
    double evaporation = 0.2;  // rho in (0, 1]
    double alpha = 1.0;        // pheromone exponent
    double beta = 1.0;         // heuristic exponent
    double tau_init = 1.0;
    double tau_min = 0.01;
    std::size_t deposit_top = 1;  // this many best ants deposit each iteration
};

struct PheromoneTable {
    std::vector<double> tau;  // learned desirability per feature, >= tau_min
    std::vector<double> eta;  // fixed heuristic per feature
    double evaporation = 0.2;
    double alpha = 1.0;
    double beta = 1.0;
    double tau_min = 0.01;
};

/// Transition probabilities over the available features:
/// P(j) = tau_j^alpha * eta_j^beta / sum over available.
std::vector<double> aco_feature_probability(const PheromoneTable& table,
                                            const std::vector<std::size_t>& available);

/// tau_j <- max(tau_min, (1 - rho) * tau_j + sum of fitness over deposits
/// whose subset contains j).
void aco_update_pheromone(PheromoneTable& table,
                          const std::vector<std::pair<std::vector<std::size_t>, double>>& deposits);

struct Ant {
    std::vector<std::size_t> subset;
    double fitness;
};

class AcoState {
public:
    /// eta is the per-feature heuristic (filter scores, floored away from 0).
    AcoState(std::size_t n_features, const AcoParams& params, std::vector<double> eta,
             const FitnessFn& fitness, RngStream& rng);

    /// One iteration: K ants build subsets, evaporation + top-q deposits.
    void step(const FitnessFn& fitness, RngStream& rng);

    const PheromoneTable& table() const { return table_; }
    const std::vector<Ant>& ants() const { return ants_; }
    std::size_t best_ant() const;
    double mean_fitness() const;

    /// One ant's subset: size drawn uniformly from [1, n], features sampled
    /// without replacement by the transition rule.
    std::vector<std::size_t> build_subset(RngStream& rng) const;

private:
    std::size_t n_;
    AcoParams params_;
    PheromoneTable table_;
    std::vector<Ant> ants_;
};

}  // namespace evofs
