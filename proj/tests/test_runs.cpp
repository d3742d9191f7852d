// run_optimizer contracts shared by all nine algorithms

#include <doctest.h>

#include <cmath>

#include "evofs/experiment.hpp"

using namespace evofs;

namespace {

// small shared fixture: prepared oracle dataset + wrapper objective
struct Fixture {
    Dataset ds;
    FitnessFunction fitness;

    Fixture()
        : ds(normalize_minmax(generate_oracle_dataset({8, 3, 60, 11}))),
          fitness(ds, [] {
              FitnessSpec spec;
              spec.fold_seed = 11;
              return spec;
          }()) {}
};

FitnessSpec rough_spec() {
    FitnessSpec spec;
    spec.mode = FitnessMode::RoughSetDependency;
    spec.fold_seed = 11;
    return spec;
}

bool identical(const SingleRunResult& a, const SingleRunResult& b) {
    if (!(a.best_genome == b.best_genome) || a.best_fitness != b.best_fitness) return false;
    if (a.history.size() != b.history.size()) return false;
    for (std::size_t i = 0; i < a.history.size(); ++i) {
        const auto& x = a.history[i];
        const auto& y = b.history[i];
        if (x.iteration != y.iteration || x.best_fitness != y.best_fitness ||
            x.mean_fitness != y.mean_fitness || x.subset_size != y.subset_size)
            return false;
    }
    return true;
}

}  // namespace

TEST_CASE("run: zero iterations reports only the evaluated initial population's best") {
    Fixture fx;
    const FitnessFunction rough_fn(fx.ds, rough_spec());
    OptimizerConfig config;
    config.set_population(12);
    TerminationSpec term;
    term.max_iterations = 0;
    for (OptimizerId id : all_optimizers()) {
        const FitnessFunction& fn = id == OptimizerId::Fsa ? rough_fn : fx.fitness;
        RngStream rng(3);
        const SingleRunResult result = run_optimizer(id, fn, config, term, rng);
        CHECK(result.history.empty());
        CHECK(std::isfinite(result.best_fitness));
        CHECK(result.best_genome.selected_count() >= 1);
    }
}

TEST_CASE("run: identical seed and config give bit-identical results") {
    Fixture fx;
    OptimizerConfig config;
    config.set_population(10);
    TerminationSpec term;
    term.max_iterations = 15;
    for (OptimizerId id : all_optimizers()) {
        FitnessSpec spec = id == OptimizerId::Fsa ? rough_spec() : fx.fitness.spec();
        const FitnessFunction fn(fx.ds, spec);
        RngStream rng_a(21), rng_b(21);
        const SingleRunResult a = run_optimizer(id, fn, config, term, rng_a);
        const SingleRunResult b = run_optimizer(id, fn, config, term, rng_b);
        CHECK(identical(a, b));
    }
}

TEST_CASE("run: reported best equals the maximum of the logged history") {
    Fixture fx;
    OptimizerConfig config;
    config.set_population(10);
    TerminationSpec term;
    term.max_iterations = 20;
    for (OptimizerId id : all_optimizers()) {
        FitnessSpec spec = id == OptimizerId::Fsa ? rough_spec() : fx.fitness.spec();
        const FitnessFunction fn(fx.ds, spec);
        RngStream rng(5);
        const SingleRunResult result = run_optimizer(id, fn, config, term, rng);
        REQUIRE_FALSE(result.history.empty());
        double max_logged = result.history.front().best_fitness;
        double prev = max_logged;
        for (const auto& entry : result.history) {
            CHECK(entry.best_fitness >= prev);  // best-so-far column is monotone
            prev = entry.best_fitness;
            max_logged = std::max(max_logged, entry.best_fitness);
        }
        CHECK(result.best_fitness == doctest::Approx(max_logged));
        CHECK(result.history.size() <= term.max_iterations);
    }
}

TEST_CASE("run: every optimizer stays at or below the exhaustive optimum") {
    Fixture fx;
    const ExhaustiveResult wrapper_best = exhaustive_best(fx.fitness);
    const FitnessFunction rough_fn(fx.ds, rough_spec());
    const ExhaustiveResult rough_best = exhaustive_best(rough_fn);

    OptimizerConfig config;
    config.set_population(14);
    TerminationSpec term;
    term.max_iterations = 30;
    for (OptimizerId id : all_optimizers()) {
        const bool rough = id == OptimizerId::Fsa;
        RngStream rng(9);
        const SingleRunResult result =
            run_optimizer(id, rough ? rough_fn : fx.fitness, config, term, rng);
        CHECK(result.best_fitness <= (rough ? rough_best : wrapper_best).fitness + 1e-12);
    }
}

TEST_CASE("run: target fitness stops the loop early") {
    Fixture fx;
    OptimizerConfig config;
    config.set_population(12);
    TerminationSpec term;
    term.max_iterations = 100;
    term.target_fitness = -1000.0;  // already met by the initial population
    RngStream rng(2);
    const SingleRunResult result =
        run_optimizer(OptimizerId::GaSsga, fx.fitness, config, term, rng);
    CHECK(result.history.size() == 1);
}

TEST_CASE("run: stagnation window stops a stalled search") {
    Fixture fx;
    OptimizerConfig config;
    config.set_population(12);
    config.ga.variation.mutation_rate = 0.0;  // stalls quickly
    TerminationSpec term;
    term.max_iterations = 500;
    term.stagnation_window = 10;
    RngStream rng(4);
    const SingleRunResult result =
        run_optimizer(OptimizerId::GaSsga, fx.fitness, config, term, rng);
    CHECK(result.history.size() < 500);
}

TEST_CASE("run: config/id mismatches and infeasible bounds are usage errors") {
    Fixture fx;
    TerminationSpec term;
    RngStream rng(1);

    OptimizerConfig bad_bounds;
    bad_bounds.abc.lower_bound = 0.9;
    bad_bounds.abc.upper_bound = 0.1;
    CHECK_THROWS_AS(run_optimizer(OptimizerId::Abc, fx.fitness, bad_bounds, term, rng),
                    std::invalid_argument);

    OptimizerConfig bad_ratios;
    bad_ratios.cso.rooster_ratio = 0.5;  // ratios now sum to 1.3
    CHECK_THROWS_AS(run_optimizer(OptimizerId::Cso, fx.fitness, bad_ratios, term, rng),
                    std::invalid_argument);

    OptimizerConfig tiny_gwo;
    tiny_gwo.population = 2;
    tiny_gwo.gwo.wolves = 2;
    CHECK_THROWS_AS(run_optimizer(OptimizerId::Gwo, fx.fitness, tiny_gwo, term, rng),
                    std::invalid_argument);

    OptimizerConfig big_tournament;
    big_tournament.ga.selection.tournament_k = 99;
    CHECK_THROWS_AS(run_optimizer(OptimizerId::GaSsga, fx.fitness, big_tournament, term, rng),
                    std::invalid_argument);
}

TEST_CASE("run: integer-subset GA keeps subset length fixed") {
    Fixture fx;
    OptimizerConfig config;
    config.set_population(10);
    config.ga.encoding = Encoding::IntegerSubset;
    config.ga.subset_size = 3;
    TerminationSpec term;
    term.max_iterations = 25;
    RngStream rng(6);
    const SingleRunResult result =
        run_optimizer(OptimizerId::GaGga, fx.fitness, config, term, rng);
    CHECK(result.best_genome.encoding == Encoding::IntegerSubset);
    CHECK(result.best_genome.indices.size() == 3);
    CHECK(result.best_genome.valid());
}
