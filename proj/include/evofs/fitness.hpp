#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "evofs/dataset.hpp"
#include "evofs/genome.hpp"

namespace evofs {

enum class FitnessMode { FilterCorrelation, WrapperKnn, RoughSetDependency };

std::string fitness_mode_name(FitnessMode mode);  // filter | knn | rough
FitnessMode fitness_mode_from_name(const std::string& name);

enum class ValidationKind { Holdout, KFold, Resubstitution };

struct ValidationSpec {
    ValidationKind kind = ValidationKind::Holdout;
    double holdout_fraction = 0.3;  // Holdout only
    std::size_t folds = 5;          // KFold only
};

struct FitnessSpec {
    FitnessMode mode = FitnessMode::WrapperKnn;
    double accuracy_weight = 0.8;  // w: accuracy vs subset-size trade-off
    std::size_t knn_k = 5;         // odd
    ValidationSpec validation;
    std::uint64_t fold_seed = 0;  // one objective per experiment: folds come from this, not per-run seeds
    std::size_t rough_bins = 5;

    void validate() const;
};

/// fitness = w * accuracy + (1 - w) * (1 - m/n).
double subset_objective(double accuracy, std::size_t selected_count, std::size_t total_features,
                        double w);

/// Absolute Pearson correlation between a feature column and the integer
/// label encoding; constant columns score 0.
double filter_score(std::span<const double> column, std::span<const int> labels);

/// Mean k-NN validation accuracy over the selected features (Euclidean
/// distance on normalized features, majority vote with ties to the smallest
/// label). Fold assignment is content-hashed from fold_seed, so it is
/// invariant under row permutations. Resubstitution evaluates on the
/// training data itself (diagnostic mode).
double knn_accuracy(const Dataset& ds, const Genome& mask, std::size_t k,
                    const ValidationSpec& validation, std::uint64_t fold_seed);

/// Rough-set dependency degree gamma_B(D) = |POS_B(D)| / |U|: the fraction of
/// objects whose B-indiscernibility class is pure in the decision attribute.
/// An empty B puts the whole universe in one class.
double rough_set_dependency(const RoughSetTable& table, const std::vector<std::size_t>& attrs);

struct Evaluation {
    double fitness;
    double quality;  // accuracy / mean filter score / dependency degree
};

// Scalar objective over genomes for one dataset + spec. Pure given its
// inputs; evaluations are memoized on the decoded feature subset (guarded
// for concurrent callers). Empty subsets get the -inf infeasible sentinel.
class FitnessFunction {
public:
    FitnessFunction(const Dataset& ds, FitnessSpec spec);

    Evaluation evaluate(const Genome& g) const;
    double operator()(const Genome& g) const { return evaluate(g).fitness; }

    const FitnessSpec& spec() const { return spec_; }
    const Dataset& dataset() const { return *data_; }
    /// Per-feature filter scores (also the ACO heuristic eta).
    const std::vector<double>& feature_scores() const { return feature_scores_; }
    /// Discretized table; built for RoughSetDependency mode, else on demand.
    const RoughSetTable& rough_table() const;

private:
    Evaluation evaluate_uncached(const std::vector<std::size_t>& selected) const;

    const Dataset* data_;
    FitnessSpec spec_;
    std::vector<double> feature_scores_;
    mutable std::unique_ptr<RoughSetTable> table_;
    mutable std::mutex mutex_;
    mutable std::unordered_map<std::string, Evaluation> cache_;
};

}  // namespace evofs
