#include "evofs/fitness.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "evofs/population.hpp"

namespace evofs {

namespace {

double knn_fold_accuracy(const Dataset& ds, const std::vector<std::size_t>& features,
                         std::size_t k, const std::vector<std::size_t>& train,
                         const std::vector<std::size_t>& test) {
    if (k == 0 || k > train.size())
        throw std::invalid_argument("knn_accuracy: k exceeds training fold size");
    std::size_t correct = 0;
    std::vector<std::pair<double, std::size_t>> dist;
    dist.reserve(train.size());
    for (std::size_t t : test) {
        dist.clear();
        for (std::size_t s : train) {
            double d2 = 0.0;
            for (std::size_t f : features) {
                const double diff = ds.at(t, f) - ds.at(s, f);
                d2 += diff * diff;
            }
            dist.push_back({d2, s});
        }
        std::partial_sort(dist.begin(), dist.begin() + static_cast<std::ptrdiff_t>(k), dist.end(),
                          [](const auto& a, const auto& b) {
                              return a.first != b.first ? a.first < b.first : a.second < b.second;
                          });
        // majority vote, ties to the smallest label
        std::map<int, std::size_t> votes;
        for (std::size_t i = 0; i < k; ++i) ++votes[ds.labels[dist[i].second]];
        int best_label = votes.begin()->first;
        std::size_t best_count = votes.begin()->second;
        for (const auto& [label, count] : votes) {
            if (count > best_count) {
                best_label = label;
                best_count = count;
            }
        }
        if (best_label == ds.labels[t]) ++correct;
    }
    if (test.empty()) return 0.0;
    return static_cast<double>(correct) / static_cast<double>(test.size());
}

double knn_accuracy_selected(const Dataset& ds, const std::vector<std::size_t>& features,
                             std::size_t k, const ValidationSpec& validation,
                             std::uint64_t fold_seed) {
    if (features.empty()) throw std::invalid_argument("knn_accuracy: empty feature subset");
    std::vector<std::size_t> all(ds.rows);
    for (std::size_t r = 0; r < ds.rows; ++r) all[r] = r;

    switch (validation.kind) {
        case ValidationKind::Resubstitution:
            return knn_fold_accuracy(ds, features, k, all, all);
        case ValidationKind::Holdout: {
            SplitPlan plan{SplitScheme::Holdout, validation.holdout_fraction, 5, fold_seed, true};
            const auto fold = split(ds, plan);
            std::vector<std::size_t> train, test;
            for (std::size_t r = 0; r < ds.rows; ++r) (fold[r] == 1 ? test : train).push_back(r);
            return knn_fold_accuracy(ds, features, k, train, test);
        }
        case ValidationKind::KFold: {
            SplitPlan plan{SplitScheme::KFold, 0.3, validation.folds, fold_seed, true};
            const auto fold = split(ds, plan);
            double sum = 0.0;
            for (std::size_t f = 0; f < validation.folds; ++f) {
                std::vector<std::size_t> train, test;
                for (std::size_t r = 0; r < ds.rows; ++r)
                    (fold[r] == f ? test : train).push_back(r);
                sum += knn_fold_accuracy(ds, features, k, train, test);
            }
            return sum / static_cast<double>(validation.folds);
        }
    }
    throw std::logic_error("knn_accuracy: unknown validation kind");
}

std::string subset_cache_key(const std::vector<std::size_t>& selected) {
    std::string key;
    key.reserve(selected.size() * sizeof(std::size_t));
    for (std::size_t v : selected)
        key.append(reinterpret_cast<const char*>(&v), sizeof(std::size_t));
    return key;
}

}  // namespace

std::string fitness_mode_name(FitnessMode mode) {
    switch (mode) {
        case FitnessMode::FilterCorrelation: return "filter";
        case FitnessMode::WrapperKnn: return "knn";
        case FitnessMode::RoughSetDependency: return "rough";
    }
    throw std::logic_error("fitness_mode_name: unknown mode");
}

FitnessMode fitness_mode_from_name(const std::string& name) {
    if (name == "filter") return FitnessMode::FilterCorrelation;
    if (name == "knn") return FitnessMode::WrapperKnn;
    if (name == "rough") return FitnessMode::RoughSetDependency;
    throw std::invalid_argument("unknown fitness mode '" + name + "'");
}

void FitnessSpec::validate() const {
    if (accuracy_weight < 0.0 || accuracy_weight > 1.0)
        throw std::invalid_argument("fitness: accuracy_weight must lie in [0,1]");
    if (knn_k == 0 || knn_k % 2 == 0)
        throw std::invalid_argument("fitness: knn_k must be a positive odd integer");
    if (validation.kind == ValidationKind::Holdout &&
        !(validation.holdout_fraction > 0.0 && validation.holdout_fraction < 1.0))
        throw std::invalid_argument("fitness: holdout fraction must lie in (0,1)");
    if (validation.kind == ValidationKind::KFold && validation.folds < 2)
        throw std::invalid_argument("fitness: k-fold needs k >= 2");
    if (rough_bins < 2) throw std::invalid_argument("fitness: rough_bins must be >= 2");
}

double subset_objective(double accuracy, std::size_t selected_count, std::size_t total_features,
                        double w) {
    if (total_features == 0 || selected_count > total_features)
        throw std::invalid_argument("subset_objective: need 0 <= m <= n, n >= 1");
    const double size_term =
        1.0 - static_cast<double>(selected_count) / static_cast<double>(total_features);
    return w * accuracy + (1.0 - w) * size_term;
}

double filter_score(std::span<const double> column, std::span<const int> labels) {
    if (column.size() != labels.size())
        throw std::invalid_argument("filter_score: column and labels must have equal length");
    const std::size_t count = column.size();
    if (count < 2) throw std::invalid_argument("filter_score: need at least 2 rows");

    double mean_x = 0.0, mean_y = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
        mean_x += column[i];
        mean_y += static_cast<double>(labels[i]);
    }
    mean_x /= static_cast<double>(count);
    mean_y /= static_cast<double>(count);

    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
        const double dx = column[i] - mean_x;
        const double dy = static_cast<double>(labels[i]) - mean_y;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx <= 0.0 || syy <= 0.0) return 0.0;  // constant column or single-class labels
    const double r = sxy / std::sqrt(sxx * syy);
    return std::min(1.0, std::fabs(r));
}

double knn_accuracy(const Dataset& ds, const Genome& mask, std::size_t k,
                    const ValidationSpec& validation, std::uint64_t fold_seed) {
    return knn_accuracy_selected(ds, mask.selected(), k, validation, fold_seed);
}

double rough_set_dependency(const RoughSetTable& table, const std::vector<std::size_t>& attrs) {
    const std::size_t universe = table.objects();
    if (universe == 0) throw std::invalid_argument("rough_set_dependency: empty universe");
    for (std::size_t a : attrs)
        if (a >= table.attribute_count())
            throw std::invalid_argument("rough_set_dependency: attribute index out of range");

    // indiscernibility classes over B, with decision purity per class
    struct ClassInfo {
        int decision;
        bool pure = true;
        std::size_t count = 0;
    };
    std::map<std::vector<int>, ClassInfo> classes;
    std::vector<int> key(attrs.size());
    for (std::size_t obj = 0; obj < universe; ++obj) {
        for (std::size_t i = 0; i < attrs.size(); ++i) key[i] = table.attributes[obj][attrs[i]];
        auto [it, inserted] = classes.try_emplace(key, ClassInfo{table.decisions[obj]});
        if (!inserted && it->second.decision != table.decisions[obj]) it->second.pure = false;
        ++it->second.count;
    }
    std::size_t positive = 0;
    for (const auto& [unused, info] : classes)
        if (info.pure) positive += info.count;
    return static_cast<double>(positive) / static_cast<double>(universe);
}

FitnessFunction::FitnessFunction(const Dataset& ds, FitnessSpec spec)
    : data_(&ds), spec_(spec) {
    spec_.validate();
    feature_scores_.reserve(ds.cols);
    for (std::size_t c = 0; c < ds.cols; ++c) {
        const auto col = ds.column(c);
        feature_scores_.push_back(filter_score(col, ds.labels));
    }
    if (spec_.mode == FitnessMode::RoughSetDependency)
        table_ = std::make_unique<RoughSetTable>(discretize_equal_width(ds, spec_.rough_bins));
}

const RoughSetTable& FitnessFunction::rough_table() const {
    std::lock_guard<std::mutex> lock(mutex_);
    if (!table_)
        table_ = std::make_unique<RoughSetTable>(discretize_equal_width(*data_, spec_.rough_bins));
    return *table_;
}

Evaluation FitnessFunction::evaluate(const Genome& g) const {
    const auto selected = g.selected();
    if (selected.empty()) return {kInfeasibleFitness, 0.0};

    const std::string key = subset_cache_key(selected);
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
    }
    const Evaluation eval = evaluate_uncached(selected);
    {
        std::lock_guard<std::mutex> lock(mutex_);
        cache_.emplace(key, eval);
    }
    return eval;
}

Evaluation FitnessFunction::evaluate_uncached(const std::vector<std::size_t>& selected) const {
    double quality = 0.0;
    switch (spec_.mode) {
        case FitnessMode::FilterCorrelation: {
            double sum = 0.0;
            for (std::size_t f : selected) sum += feature_scores_[f];
            quality = sum / static_cast<double>(selected.size());
            break;
        }
        case FitnessMode::WrapperKnn:
            quality = knn_accuracy_selected(*data_, selected, spec_.knn_k, spec_.validation,
                                            spec_.fold_seed);
            break;
        case FitnessMode::RoughSetDependency:
            quality = rough_set_dependency(rough_table(), selected);
            break;
    }
    const double fitness =
        subset_objective(quality, selected.size(), data_->cols, spec_.accuracy_weight);
    return {fitness, quality};
}

}  // namespace evofs
