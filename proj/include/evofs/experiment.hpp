#pragma once

#include <map>
#include <string>
#include <vector>

#include "evofs/dataset.hpp"
#include "evofs/optimizer.hpp"

namespace evofs {

struct ExperimentConfig {
    std::string dataset_path;
    LoadOptions load_options;
    OptimizerId optimizer = OptimizerId::GaSsga;
    OptimizerConfig optimizer_config;
    FitnessSpec fitness;
    TerminationSpec termination;
    std::size_t repeats = 30;
    std::uint64_t base_seed = 1;  // run i uses base_seed + i; folds use base_seed
    std::string out_dir;          // empty: no files written
};

struct RunRecord {
    std::uint64_t seed = 0;
    Genome best_genome;
    double best_fitness = 0.0;
    double accuracy = 0.0;  // quality component of the best genome
    std::size_t subset_size = 0;
    std::vector<std::string> selected_features;
    std::vector<HistoryEntry> history;
    double wall_clock_seconds = 0.0;  // reported on stdout only; kept out of report files
    bool failed = false;
    std::string error;
};

struct ExperimentReport {
    std::string dataset_path;
    OptimizerId optimizer = OptimizerId::GaSsga;
    FitnessMode fitness_mode = FitnessMode::WrapperKnn;
    std::size_t repeats = 0;
    std::vector<RunRecord> runs;

    // aggregates over completed runs (sample standard deviation, n - 1)
    double mean_best_fitness = 0.0;
    double std_best_fitness = 0.0;
    double mean_accuracy = 0.0;
    double std_accuracy = 0.0;
    double mean_subset_size = 0.0;
    double std_subset_size = 0.0;
    double mean_wall_clock = 0.0;
    std::vector<std::string> flags;

    std::size_t completed() const;
};

/// Executes repeats independent runs with seeds base_seed + i against one
/// shared objective, aggregates, and (when out_dir is set) writes report.txt
/// and convergence.csv atomically.
ExperimentReport run_experiment(const ExperimentConfig& cfg);
/// Same, against an already-prepared (imputed, normalized) dataset.
ExperimentReport run_experiment(const ExperimentConfig& cfg, const Dataset& ds);

std::string render_report(const ExperimentReport& report);
std::string render_convergence_csv(const ExperimentReport& report);
void write_report_files(const ExperimentReport& report, const std::string& out_dir);

struct ComparisonRow {
    OptimizerId optimizer;
    double mean_fitness;
    double std_fitness;
    double mean_subset_size;
    double mean_wall_clock;
};

/// Runs every config (all must share one dataset) and tabulates rows sorted
/// by mean fitness descending, ties by smaller subset size.
std::vector<ComparisonRow> compare(const std::vector<ExperimentConfig>& cfgs);
std::string render_comparison(const std::vector<ComparisonRow>& rows);

// Synthetic verification dataset: binary labels from a linear rule over the
// first `informative` features plus Gaussian noise (sigma 0.1); the other
// features are i.i.d. noise.
struct OracleSpec {
    std::size_t n_features = 12;
    std::size_t informative = 4;
    std::size_t rows = 200;
    std::uint64_t seed = 7;
};

Dataset generate_oracle_dataset(const OracleSpec& spec);

struct ExhaustiveResult {
    Genome best;
    double fitness;
    double quality;
};

/// Brute force over all 2^n - 1 non-empty masks (n capped at 20).
ExhaustiveResult exhaustive_best(const FitnessFunction& fitness);

/// Writes the dataset CSV plus a sibling <path>.optimum.txt holding the
/// exhaustive-search optimum under the default wrapper objective.
void write_oracle_files(const OracleSpec& spec, const std::string& csv_path);

/// Flat key = value file with [section] headers; returns section.key -> value.
std::map<std::string, std::string> parse_config_file(const std::string& path);
/// Applies recognized keys onto a config (unknown keys are an error).
void apply_config_entries(ExperimentConfig& cfg, const std::map<std::string, std::string>& entries);

}  // namespace evofs
