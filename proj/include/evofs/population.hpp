#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include "evofs/genome.hpp"

namespace evofs {

/// Fitness of a genome; every optimizer maximizes this.
using FitnessFn = std::function<double(const Genome&)>;

constexpr double kInfeasibleFitness = -std::numeric_limits<double>::infinity();

struct Individual {
    Genome genome;
    double fitness = std::numeric_limits<double>::quiet_NaN();  // NaN = not evaluated
    int trial_counter = 0;  // ABC limit bookkeeping

    bool evaluated() const { return !std::isnan(fitness); }
};

struct Population {
    std::vector<Individual> members;

    std::size_t size() const { return members.size(); }
    Individual& operator[](std::size_t i) { return members[i]; }
    const Individual& operator[](std::size_t i) const { return members[i]; }

    /// Index of the highest-fitness member; ties broken by lowest index.
    std::size_t best_index() const;
    /// Index of the lowest-fitness member; ties broken by lowest index.
    std::size_t worst_index() const;
    double best_fitness() const { return members[best_index()].fitness; }
    /// Mean over finite fitnesses (infeasible members excluded).
    double mean_fitness() const;

    void evaluate_all(const FitnessFn& fitness);

    static Population random_binary(std::size_t capacity, std::size_t n, RngStream& rng);
    static Population random_subset(std::size_t capacity, std::size_t n, std::size_t m,
                                    RngStream& rng);
};

}  // namespace evofs
