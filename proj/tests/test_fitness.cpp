// fitness evaluators: subset objective, filter score, knn wrapper, rough sets

#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "evofs/fitness.hpp"
#include "evofs/population.hpp"
#include "evofs/rng.hpp"
#include "oracles.hpp"

using namespace evofs;

TEST_CASE("subset_objective: weight collapse, arithmetic, size penalty") {
    CHECK(subset_objective(0.7, 3, 10, 1.0) == doctest::Approx(0.7));
    CHECK(subset_objective(0.9, 3, 12, 0.8) == doctest::Approx(0.87));
    // fewer features wins at equal accuracy for any w < 1
    CHECK(subset_objective(0.9, 2, 12, 0.8) > subset_objective(0.9, 5, 12, 0.8));
    CHECK_THROWS_AS(subset_objective(0.5, 5, 4, 0.8), std::invalid_argument);
}

TEST_CASE("filter_score: perfect correlation, constants, affine invariance") {
    const std::vector<int> labels{0, 1, 0, 1, 1, 0};
    std::vector<double> same(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) same[i] = labels[i];
    CHECK(filter_score(same, labels) == doctest::Approx(1.0));

    const std::vector<double> constant(labels.size(), 3.25);
    CHECK(filter_score(constant, labels) == doctest::Approx(0.0));

    std::vector<double> scaled(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) scaled[i] = -7.0 * same[i] + 11.0;
    CHECK(filter_score(scaled, labels) == doctest::Approx(1.0));

    const std::vector<int> short_labels{0, 1};
    CHECK_THROWS_AS(filter_score(same, short_labels), std::invalid_argument);
}

TEST_CASE("filter_score: noisy feature lands in the expected band and matches the oracle") {
    RngStream rng(2024);
    const std::size_t rows = 1000;
    std::vector<int> labels(rows);
    std::vector<double> feature(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        labels[i] = rng.bernoulli(0.5) ? 1 : 0;
        feature[i] = static_cast<double>(labels[i]) + rng.normal(0.0, 1.0);
    }
    const double score = filter_score(feature, labels);
    CHECK(score > 0.3);
    CHECK(score < 0.9);
    CHECK(score == doctest::Approx(oracle::abs_pearson(feature, labels)).epsilon(1e-12));
    // frozen from this exact seeded draw; guards the generator and the estimator
    CHECK(score == doctest::Approx(0.453589111659).epsilon(1e-9));
}

namespace {

Dataset two_clusters(std::size_t rows_per_class) {
    // feature 0 separates the classes; feature 1 is constant noise
    std::vector<std::vector<double>> rows;
    std::vector<std::string> labels;
    RngStream rng(5);
    for (std::size_t i = 0; i < rows_per_class; ++i) {
        rows.push_back({0.1 + 0.05 * rng.uniform01(), rng.uniform01()});
        labels.push_back("neg");
        rows.push_back({0.9 - 0.05 * rng.uniform01(), rng.uniform01()});
        labels.push_back("pos");
    }
    return Dataset::from_rows(rows, labels);
}

}  // namespace

TEST_CASE("knn: 1-nn on the training data is perfect without conflicts") {
    const Dataset ds = two_clusters(10);
    ValidationSpec validation;
    validation.kind = ValidationKind::Resubstitution;
    const Genome all = Genome::binary({1, 1});
    CHECK(knn_accuracy(ds, all, 1, validation, 0) == doctest::Approx(1.0));
}

TEST_CASE("knn: separable clusters give holdout accuracy 1 with the informative feature") {
    const Dataset ds = two_clusters(30);
    ValidationSpec validation;  // holdout 0.3
    for (std::uint64_t seed : {0ULL, 1ULL, 2ULL}) {
        CHECK(knn_accuracy(ds, Genome::binary({1, 0}), 5, validation, seed) == doctest::Approx(1.0));
        CHECK(knn_accuracy(ds, Genome::binary({1, 1}), 5, validation, seed) == doctest::Approx(1.0));
    }
}

TEST_CASE("knn: k-fold accuracy is averaged over folds and row-permutation invariant") {
    const Dataset ds = two_clusters(15);
    ValidationSpec validation;
    validation.kind = ValidationKind::KFold;
    validation.folds = 5;
    const Genome mask = Genome::binary({1, 1});
    const double acc = knn_accuracy(ds, mask, 3, validation, 9);

    // same rows in reverse order
    std::vector<std::vector<double>> rows;
    std::vector<std::string> labels;
    for (std::size_t r = ds.rows; r > 0; --r) {
        rows.push_back({ds.at(r - 1, 0), ds.at(r - 1, 1)});
        labels.push_back(ds.label_names[ds.labels[r - 1]]);
    }
    const Dataset reversed = Dataset::from_rows(rows, labels);
    CHECK(knn_accuracy(reversed, mask, 3, validation, 9) == doctest::Approx(acc).epsilon(1e-12));
}

TEST_CASE("knn: empty mask throws; the evaluator turns it into the -inf sentinel") {
    const Dataset ds = two_clusters(5);
    ValidationSpec validation;
    CHECK_THROWS_AS(knn_accuracy(ds, Genome::binary({0, 0}), 1, validation, 0),
                    std::invalid_argument);

    FitnessSpec spec;
    spec.knn_k = 1;
    const FitnessFunction fitness(ds, spec);
    const Evaluation eval = fitness.evaluate(Genome::binary({0, 0}));
    CHECK(eval.fitness == kInfeasibleFitness);
}

TEST_CASE("knn: k larger than the training fold is a usage error") {
    const Dataset ds = two_clusters(3);  // 6 rows; holdout 0.3 leaves 4 train rows
    ValidationSpec validation;
    CHECK_THROWS_AS(knn_accuracy(ds, Genome::binary({1, 1}), 5, validation, 0),
                    std::invalid_argument);
}

TEST_CASE("rough set: full set on a consistent table, empty set, worked 4-object example") {
    RoughSetTable table;
    table.attributes = {{0}, {0}, {1}, {1}};
    table.decisions = {0, 1, 1, 1};
    // classes on {a}: {0,1} impure, {2,3} pure -> gamma = 0.5
    CHECK(rough_set_dependency(table, {0}) == doctest::Approx(0.5));
    CHECK(rough_set_dependency(table, {0}) == doctest::Approx(oracle::rough_dependency_naive(table, {0})));
    // B = empty with mixed decisions -> 0
    CHECK(rough_set_dependency(table, {}) == doctest::Approx(0.0));

    RoughSetTable consistent;
    consistent.attributes = {{0, 1}, {1, 0}, {1, 1}};
    consistent.decisions = {0, 1, 2};
    CHECK(rough_set_dependency(consistent, {0, 1}) == doctest::Approx(1.0));

    RoughSetTable agree;
    agree.attributes = {{0}, {1}};
    agree.decisions = {4, 4};
    CHECK(rough_set_dependency(agree, {}) == doctest::Approx(1.0));
}

TEST_CASE("rough set: matches the brute-force partition oracle on random tables") {
    RngStream rng(77);
    for (int trial = 0; trial < 200; ++trial) {
        RoughSetTable table;
        const std::size_t objects = 1 + rng.index(8);
        const std::size_t attrs = 1 + rng.index(4);
        table.attributes.resize(objects, std::vector<int>(attrs));
        table.decisions.resize(objects);
        for (std::size_t o = 0; o < objects; ++o) {
            for (std::size_t a = 0; a < attrs; ++a)
                table.attributes[o][a] = static_cast<int>(rng.index(3));
            table.decisions[o] = static_cast<int>(rng.index(3));
        }
        // random subset chain B1 subseteq B2
        std::vector<std::size_t> b2;
        for (std::size_t a = 0; a < attrs; ++a)
            if (rng.bernoulli(0.7)) b2.push_back(a);
        std::vector<std::size_t> b1;
        for (std::size_t a : b2)
            if (rng.bernoulli(0.5)) b1.push_back(a);

        const double g1 = rough_set_dependency(table, b1);
        const double g2 = rough_set_dependency(table, b2);
        CHECK(g1 == doctest::Approx(oracle::rough_dependency_naive(table, b1)).epsilon(1e-15));
        CHECK(g2 == doctest::Approx(oracle::rough_dependency_naive(table, b2)).epsilon(1e-15));
        CHECK(g1 <= g2 + 1e-15);  // monotone in the attribute set
    }
}

TEST_CASE("rough set: attribute indices outside the table are rejected") {
    RoughSetTable table;
    table.attributes = {{0}};
    table.decisions = {0};
    CHECK_THROWS_AS(rough_set_dependency(table, {3}), std::invalid_argument);
}

TEST_CASE("fitness function: modes agree with their building blocks") {
    const Dataset ds = two_clusters(10);
    FitnessSpec spec;
    spec.mode = FitnessMode::FilterCorrelation;
    spec.accuracy_weight = 0.8;
    const FitnessFunction filter_fn(ds, spec);
    const Genome mask = Genome::binary({1, 0});
    const double expected_quality = filter_fn.feature_scores()[0];
    const Evaluation eval = filter_fn.evaluate(mask);
    CHECK(eval.quality == doctest::Approx(expected_quality));
    CHECK(eval.fitness == doctest::Approx(subset_objective(expected_quality, 1, 2, 0.8)));

    spec.mode = FitnessMode::RoughSetDependency;
    const FitnessFunction rough_fn(ds, spec);
    const Evaluation rough_eval = rough_fn.evaluate(mask);
    CHECK(rough_eval.quality ==
          doctest::Approx(rough_set_dependency(rough_fn.rough_table(), {0})));
}

TEST_CASE("fitness function: caching returns identical evaluations") {
    const Dataset ds = two_clusters(10);
    FitnessSpec spec;
    const FitnessFunction fitness(ds, spec);
    const Genome mask = Genome::binary({1, 1});
    const Evaluation a = fitness.evaluate(mask);
    const Evaluation b = fitness.evaluate(mask);
    CHECK(a.fitness == b.fitness);
    CHECK(a.quality == b.quality);
    // same selection through the other encoding hits the same entry
    const Evaluation c = fitness.evaluate(Genome::subset({0, 1}, 2));
    CHECK(c.fitness == a.fitness);
}

TEST_CASE("fitness spec validation rejects bad parameters") {
    const Dataset ds = two_clusters(5);
    FitnessSpec spec;
    spec.accuracy_weight = 1.5;
    CHECK_THROWS_AS(FitnessFunction(ds, spec), std::invalid_argument);
    spec = {};
    spec.knn_k = 4;  // even
    CHECK_THROWS_AS(FitnessFunction(ds, spec), std::invalid_argument);
    spec = {};
    spec.validation.holdout_fraction = 1.0;
    CHECK_THROWS_AS(FitnessFunction(ds, spec), std::invalid_argument);
}
