#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace evofs {

// Numeric feature matrix with class labels. Missing cells are held as NaN
// between load_csv and impute_missing. Labels keep their original strings;
// integer codes follow sorted unique label order.
struct Dataset {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> values;  // row-major, rows x cols
    std::vector<int> labels;
    std::vector<std::string> label_names;  // code -> label string
    std::vector<std::string> feature_names;
    std::string source;
    std::vector<std::string> transform_log;

    double at(std::size_t r, std::size_t c) const { return values[r * cols + c]; }
    double& at(std::size_t r, std::size_t c) { return values[r * cols + c]; }
    std::vector<double> column(std::size_t c) const;
    std::size_t class_count() const { return label_names.size(); }
    bool has_missing() const;

    static Dataset from_rows(const std::vector<std::vector<double>>& rows,
                             const std::vector<std::string>& labels,
                             std::vector<std::string> feature_names = {});
};

struct LoadOptions {
    long label_column = -1;  // -1 = last column
};

/// Parses a comma-separated, UTF-8, headered file; empty cells become
/// missing values, the label column stays categorical.
Dataset load_csv(const std::string& path, const LoadOptions& options = {});

/// Replaces each missing cell with its column mean over observed values.
Dataset impute_missing(Dataset ds);

/// Maps each column to [0,1] by (x - min) / (max - min); constant columns
/// map to 0.5. Idempotent on already-normalized data.
Dataset normalize_minmax(Dataset ds);

void save_csv(const Dataset& ds, const std::string& path);

enum class SplitScheme { Holdout, KFold };

struct SplitPlan {
    SplitScheme scheme = SplitScheme::Holdout;
    double test_fraction = 0.3;  // Holdout only, in (0,1)
    std::size_t folds = 5;       // KFold only, >= 2
    std::uint64_t seed = 0;
    bool stratified = true;
};

/// Fold id per row: Holdout gives 0 = train, 1 = test; KFold gives the fold
/// index in [0, folds). Assignment is a function of row content and seed, so
/// permuting dataset rows permutes the assignment with them.
std::vector<std::size_t> split(const Dataset& ds, const SplitPlan& plan);

// Discretized decision table for rough-set computations.
struct RoughSetTable {
    std::vector<std::vector<int>> attributes;  // |U| rows, |C| columns
    std::vector<int> decisions;

    std::size_t objects() const { return attributes.size(); }
    std::size_t attribute_count() const { return attributes.empty() ? 0 : attributes[0].size(); }
};

/// Equal-width binning of a normalized dataset: bin = floor(x * bins),
/// clamped to bins - 1. Labels become the decision attribute.
RoughSetTable discretize_equal_width(const Dataset& ds, std::size_t bins);

}  // namespace evofs
