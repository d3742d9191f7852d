#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "evofs/abc.hpp"
#include "evofs/aco.hpp"
#include "evofs/coa.hpp"
#include "evofs/cso.hpp"
#include "evofs/fitness.hpp"
#include "evofs/fsa.hpp"
#include "evofs/ga.hpp"
#include "evofs/gwo.hpp"
#include "evofs/pso.hpp"
#include "evofs/termination.hpp"

namespace evofs {

enum class OptimizerId { GaSsga, GaGga, Abc, Pso, Aco, Gwo, Coa, Cso, Fsa };

std::string optimizer_name(OptimizerId id);
OptimizerId optimizer_from_name(std::string_view name);
std::vector<OptimizerId> all_optimizers();

struct GaParams {
    Encoding encoding = Encoding::BinaryMask;
    std::size_t subset_size = 0;  // IntegerSubset slots; 0 means n/2
    SelectionSpec selection{SelectionKind::Tournament, 2};
    VariationSpec variation{};
    int elitism = 1;                 // GGA only
    std::size_t memetic_budget = 0;  // local-search evaluations per offspring
};

struct OptimizerConfig {
    std::size_t population = 30;  // population / swarm / colony size
    GaParams ga;
    AbcParams abc;
    PsoParams pso;
    AcoParams aco;
    GwoParams gwo;
    CoaParams coa;
    CsoParams cso;
    FsaParams fsa;

    /// Propagates one population size into every per-algorithm size field.
    void set_population(std::size_t population);
    void validate(OptimizerId id, std::size_t n_features) const;
};

struct HistoryEntry {
    std::size_t iteration;
    double best_fitness;  // best seen up to and including this iteration
    double mean_fitness;  // mean over the iteration's evaluated candidates
    std::size_t subset_size;
};

struct SingleRunResult {
    Genome best_genome;
    double best_fitness = kInfeasibleFitness;
    std::vector<HistoryEntry> history;
};

/// Runs one optimizer to termination. The best genome/fitness reported is
/// the maximum over everything evaluated, including the initial population,
/// so the history's best_fitness column is non-decreasing.
SingleRunResult run_optimizer(OptimizerId id, const FitnessFunction& fitness,
                              const OptimizerConfig& config, const TerminationSpec& termination,
                              RngStream& rng);

}  // namespace evofs
