#include "evofs/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "evofs/io.hpp"

namespace evofs {

namespace {

double mean_of(const std::vector<double>& values) {
    if (values.empty()) return 0.0;
    double sum = 0.0;
    for (double v : values) sum += v;
    return sum / static_cast<double>(values.size());
}

double sample_std(const std::vector<double>& values) {
    if (values.size() <= 1) return 0.0;
    const double m = mean_of(values);
    double acc = 0.0;
    for (double v : values) acc += (v - m) * (v - m);
    return std::sqrt(acc / static_cast<double>(values.size() - 1));
}

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

std::size_t to_size(const std::string& key, const std::string& value) {
    try {
        const long long v = std::stoll(value);
        if (v < 0) throw std::invalid_argument("negative");
        return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
        throw std::runtime_error("config: bad integer for " + key + ": '" + value + "'");
    }
}

double to_double(const std::string& key, const std::string& value) {
    try {
        return std::stod(value);
    } catch (const std::exception&) {
        throw std::runtime_error("config: bad number for " + key + ": '" + value + "'");
    }
}

}  // namespace

std::size_t ExperimentReport::completed() const {
    std::size_t count = 0;
    for (const auto& run : runs)
        if (!run.failed) ++count;
    return count;
}

ExperimentReport run_experiment(const ExperimentConfig& cfg) {
    Dataset ds = normalize_minmax(impute_missing(load_csv(cfg.dataset_path, cfg.load_options)));
    return run_experiment(cfg, ds);
}

ExperimentReport run_experiment(const ExperimentConfig& cfg, const Dataset& ds) {
    if (cfg.repeats == 0) throw std::invalid_argument("experiment: repeats must be >= 1");
    cfg.optimizer_config.validate(cfg.optimizer, ds.cols);  // abort before run 0

    FitnessSpec spec = cfg.fitness;
    spec.fold_seed = cfg.base_seed;  // folds are shared by all repeats
    const FitnessFunction fitness(ds, spec);

    ExperimentReport report;
    report.dataset_path = cfg.dataset_path.empty() ? ds.source : cfg.dataset_path;
    report.optimizer = cfg.optimizer;
    report.fitness_mode = spec.mode;
    report.repeats = cfg.repeats;

    for (std::size_t i = 0; i < cfg.repeats; ++i) {
        RunRecord record;
        record.seed = cfg.base_seed + i;
        const auto started = std::chrono::steady_clock::now();
        try {
            RngStream rng(record.seed);
            SingleRunResult run =
                run_optimizer(cfg.optimizer, fitness, cfg.optimizer_config, cfg.termination, rng);
            record.best_genome = run.best_genome;
            record.best_fitness = run.best_fitness;
            record.accuracy = fitness.evaluate(run.best_genome).quality;
            record.subset_size = run.best_genome.selected_count();
            for (std::size_t f : run.best_genome.selected())
                record.selected_features.push_back(ds.feature_names[f]);
            record.history = std::move(run.history);
        } catch (const std::exception& e) {
            record.failed = true;
            record.error = e.what();
        }
        record.wall_clock_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
        report.runs.push_back(std::move(record));
    }

    std::vector<double> fitnesses, accuracies, sizes, clocks;
    for (const auto& run : report.runs) {
        if (run.failed) continue;
        fitnesses.push_back(run.best_fitness);
        accuracies.push_back(run.accuracy);
        sizes.push_back(static_cast<double>(run.subset_size));
        clocks.push_back(run.wall_clock_seconds);
    }
    if (fitnesses.empty()) throw std::runtime_error("experiment: every run failed");
    report.mean_best_fitness = mean_of(fitnesses);
    report.std_best_fitness = sample_std(fitnesses);
    report.mean_accuracy = mean_of(accuracies);
    report.std_accuracy = sample_std(accuracies);
    report.mean_subset_size = mean_of(sizes);
    report.std_subset_size = sample_std(sizes);
    report.mean_wall_clock = mean_of(clocks);
    if (cfg.repeats == 1) report.flags.push_back("single-run");
    if (report.completed() < report.runs.size()) report.flags.push_back("partial-failures");

    if (!cfg.out_dir.empty()) write_report_files(report, cfg.out_dir);
    return report;
}

std::string render_report(const ExperimentReport& report) {
    std::ostringstream out;
    out << "[aggregate]\n";
    out << "dataset = " << report.dataset_path << '\n';
    out << "optimizer = " << optimizer_name(report.optimizer) << '\n';
    out << "fitness_mode = " << fitness_mode_name(report.fitness_mode) << '\n';
    out << "repeats = " << report.repeats << '\n';
    out << "completed_runs = " << report.completed() << '\n';
    out << "mean_best_fitness = " << format_double(report.mean_best_fitness, 12) << '\n';
    out << "std_best_fitness = " << format_double(report.std_best_fitness, 12) << '\n';
    out << "mean_accuracy = " << format_double(report.mean_accuracy, 12) << '\n';
    out << "std_accuracy = " << format_double(report.std_accuracy, 12) << '\n';
    out << "mean_subset_size = " << format_double(report.mean_subset_size, 12) << '\n';
    out << "std_subset_size = " << format_double(report.std_subset_size, 12) << '\n';
    out << "flags = ";
    if (report.flags.empty()) {
        out << '-';
    } else {
        for (std::size_t i = 0; i < report.flags.size(); ++i)
            out << (i ? "," : "") << report.flags[i];
    }
    out << '\n';

    for (std::size_t i = 0; i < report.runs.size(); ++i) {
        const RunRecord& run = report.runs[i];
        out << "\n[run " << i << "]\n";
        out << "seed = " << run.seed << '\n';
        if (run.failed) {
            out << "status = failed\n";
            out << "error = " << run.error << '\n';
            continue;
        }
        out << "status = ok\n";
        out << "best_fitness = " << format_double(run.best_fitness, 12) << '\n';
        out << "accuracy = " << format_double(run.accuracy, 12) << '\n';
        out << "subset_size = " << run.subset_size << '\n';
        out << "selected_features = ";
        for (std::size_t f = 0; f < run.selected_features.size(); ++f)
            out << (f ? "," : "") << run.selected_features[f];
        out << '\n';
        out << "iterations = " << run.history.size() << '\n';
    }
    return out.str();
}

std::string render_convergence_csv(const ExperimentReport& report) {
    std::ostringstream out;
    out << "run_id,iteration,best_fitness,mean_fitness,subset_size\n";
    for (std::size_t i = 0; i < report.runs.size(); ++i) {
        const RunRecord& run = report.runs[i];
        if (run.failed) continue;
        for (const HistoryEntry& entry : run.history) {
            out << i << ',' << entry.iteration << ',' << format_double(entry.best_fitness, 12)
                << ',' << format_double(entry.mean_fitness, 12) << ',' << entry.subset_size
                << '\n';
        }
    }
    return out.str();
}

void write_report_files(const ExperimentReport& report, const std::string& out_dir) {
    std::filesystem::create_directories(out_dir);
    write_file_atomic(out_dir + "/report.txt", render_report(report));
    write_file_atomic(out_dir + "/convergence.csv", render_convergence_csv(report));
}

std::vector<ComparisonRow> compare(const std::vector<ExperimentConfig>& cfgs) {
    if (cfgs.size() < 2) throw std::invalid_argument("compare: need at least two configs");
    for (const auto& cfg : cfgs)
        if (cfg.dataset_path != cfgs.front().dataset_path)
            throw std::invalid_argument("compare: configs must share one dataset");

    Dataset ds = normalize_minmax(
        impute_missing(load_csv(cfgs.front().dataset_path, cfgs.front().load_options)));

    std::vector<ComparisonRow> rows;
    for (const auto& cfg : cfgs) {
        ExperimentConfig local = cfg;
        if (!cfg.out_dir.empty()) local.out_dir = cfg.out_dir + "/" + optimizer_name(cfg.optimizer);
        const ExperimentReport report = run_experiment(local, ds);
        rows.push_back({cfg.optimizer, report.mean_best_fitness, report.std_best_fitness,
                        report.mean_subset_size, report.mean_wall_clock});
    }
    std::sort(rows.begin(), rows.end(), [](const ComparisonRow& a, const ComparisonRow& b) {
        if (a.mean_fitness != b.mean_fitness) return a.mean_fitness > b.mean_fitness;
        if (a.mean_subset_size != b.mean_subset_size) return a.mean_subset_size < b.mean_subset_size;
        return optimizer_name(a.optimizer) < optimizer_name(b.optimizer);
    });
    return rows;
}

std::string render_comparison(const std::vector<ComparisonRow>& rows) {
    std::ostringstream out;
    out << "optimizer  mean_fitness  std_fitness  mean_subset_size  mean_wall_clock_s\n";
    char line[160];
    for (const auto& row : rows) {
        std::snprintf(line, sizeof(line), "%-9s  %12.6f  %11.6f  %16.3f  %17.4f\n",
                      optimizer_name(row.optimizer).c_str(), row.mean_fitness, row.std_fitness,
                      row.mean_subset_size, row.mean_wall_clock);
        out << line;
    }
    return out.str();
}

Dataset generate_oracle_dataset(const OracleSpec& spec) {
    if (spec.informative >= spec.n_features && spec.informative != 0)
        throw std::invalid_argument("oracle: informative must be < n_features");
    RngStream rng(spec.seed);
    std::vector<std::vector<double>> rows(spec.rows, std::vector<double>(spec.n_features));
    std::vector<std::string> labels(spec.rows);
    for (std::size_t r = 0; r < spec.rows; ++r) {
        for (std::size_t c = 0; c < spec.n_features; ++c) rows[r][c] = rng.uniform01();
        double score = rng.normal(0.0, 0.1);
        for (std::size_t c = 0; c < spec.informative; ++c) score += rows[r][c] - 0.5;
        labels[r] = score > 0.0 ? "1" : "0";
    }
    Dataset ds = Dataset::from_rows(rows, labels);
    ds.source = "oracle(seed=" + std::to_string(spec.seed) + ")";
    return ds;
}

ExhaustiveResult exhaustive_best(const FitnessFunction& fitness) {
    const std::size_t n = fitness.dataset().cols;
    if (n == 0 || n > 20)
        throw std::invalid_argument("exhaustive_best: feature count must lie in [1, 20]");
    ExhaustiveResult best{{}, kInfeasibleFitness, 0.0};
    Genome g;
    g.encoding = Encoding::BinaryMask;
    g.n = n;
    g.mask.assign(n, 0);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        for (std::size_t b = 0; b < n; ++b) g.mask[b] = (mask >> b) & 1 ? 1 : 0;
        const Evaluation eval = fitness.evaluate(g);
        if (eval.fitness > best.fitness) {
            best.best = g;
            best.fitness = eval.fitness;
            best.quality = eval.quality;
        }
    }
    return best;
}

void write_oracle_files(const OracleSpec& spec, const std::string& csv_path) {
    const Dataset raw = generate_oracle_dataset(spec);
    save_csv(raw, csv_path);

    // the stored optimum refers to the default wrapper objective on the
    // normalized pipeline output, folds seeded by the dataset seed
    Dataset ds = normalize_minmax(impute_missing(load_csv(csv_path)));
    FitnessSpec fs;
    fs.fold_seed = spec.seed;
    const FitnessFunction fitness(ds, fs);
    const ExhaustiveResult best = exhaustive_best(fitness);

    std::ostringstream out;
    out << "optimum_fitness = " << format_double(best.fitness, 17) << '\n';
    out << "optimum_accuracy = " << format_double(best.quality, 17) << '\n';
    out << "optimum_mask = ";
    for (std::size_t b = 0; b < best.best.mask.size(); ++b)
        out << static_cast<int>(best.best.mask[b]);
    out << '\n';
    out << "fitness_mode = " << fitness_mode_name(fs.mode) << '\n';
    out << "accuracy_weight = " << format_double(fs.accuracy_weight, 17) << '\n';
    out << "knn_k = " << fs.knn_k << '\n';
    out << "holdout_fraction = " << format_double(fs.validation.holdout_fraction, 17) << '\n';
    out << "fold_seed = " << fs.fold_seed << '\n';
    write_file_atomic(csv_path + ".optimum.txt", out.str());
}

std::map<std::string, std::string> parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("config: cannot open " + path);
    std::map<std::string, std::string> entries;
    std::string line, section;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[' && line.back() == ']') {
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("config: expected key = value at line " +
                                     std::to_string(line_no));
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw std::runtime_error("config: empty key at line " + std::to_string(line_no));
        entries[section.empty() ? key : section + "." + key] = value;
    }
    return entries;
}

void apply_config_entries(ExperimentConfig& cfg,
                          const std::map<std::string, std::string>& entries) {
    bool population_set = false;
    std::size_t population = cfg.optimizer_config.population;

    for (const auto& [key, value] : entries) {
        if (key == "experiment.dataset") {
            cfg.dataset_path = value;
        } else if (key == "experiment.repeats") {
            cfg.repeats = to_size(key, value);
        } else if (key == "experiment.seed") {
            cfg.base_seed = to_size(key, value);
        } else if (key == "experiment.out_dir") {
            cfg.out_dir = value;
        } else if (key == "experiment.label_col") {
            cfg.load_options.label_column = value == "last" ? -1 : static_cast<long>(to_size(key, value));
        } else if (key == "optimizer.name") {
            cfg.optimizer = optimizer_from_name(value);
        } else if (key == "optimizer.pop_size") {
            population = to_size(key, value);
            population_set = true;
        } else if (key == "optimizer.encoding") {
            if (value == "binary") cfg.optimizer_config.ga.encoding = Encoding::BinaryMask;
            else if (value == "subset") cfg.optimizer_config.ga.encoding = Encoding::IntegerSubset;
            else throw std::runtime_error("config: unknown encoding '" + value + "'");
        } else if (key == "optimizer.subset_size") {
            cfg.optimizer_config.ga.subset_size = to_size(key, value);
        } else if (key == "optimizer.selection") {
            if (value == "roulette") cfg.optimizer_config.ga.selection.kind = SelectionKind::RouletteWheel;
            else if (value == "tournament") cfg.optimizer_config.ga.selection.kind = SelectionKind::Tournament;
            else if (value == "uniform") cfg.optimizer_config.ga.selection.kind = SelectionKind::Uniform;
            else throw std::runtime_error("config: unknown selection '" + value + "'");
        } else if (key == "optimizer.tournament_k") {
            cfg.optimizer_config.ga.selection.tournament_k = to_size(key, value);
        } else if (key == "optimizer.crossover") {
            if (value == "kpoint") cfg.optimizer_config.ga.variation.crossover = CrossoverKind::KPoint;
            else if (value == "uniform") cfg.optimizer_config.ga.variation.crossover = CrossoverKind::Uniform;
            else throw std::runtime_error("config: unknown crossover '" + value + "'");
        } else if (key == "optimizer.k_points") {
            cfg.optimizer_config.ga.variation.k_points = to_size(key, value);
        } else if (key == "optimizer.mutation_rate") {
            cfg.optimizer_config.ga.variation.mutation_rate = to_double(key, value);
        } else if (key == "optimizer.elitism") {
            cfg.optimizer_config.ga.elitism = static_cast<int>(to_size(key, value));
        } else if (key == "optimizer.memetic_budget") {
            cfg.optimizer_config.ga.memetic_budget = to_size(key, value);
        } else if (key == "optimizer.abc_limit") {
            cfg.optimizer_config.abc.limit = static_cast<int>(to_size(key, value));
        } else if (key == "optimizer.pack_size") {
            cfg.optimizer_config.coa.pack_size = to_size(key, value);
        } else if (key == "optimizer.reorder_period") {
            cfg.optimizer_config.cso.reorder_period = to_size(key, value);
        } else if (key == "optimizer.evaporation") {
            cfg.optimizer_config.aco.evaporation = to_double(key, value);
        } else if (key == "optimizer.deposit_top") {
            cfg.optimizer_config.aco.deposit_top = to_size(key, value);
        } else if (key == "optimizer.crowding") {
            cfg.optimizer_config.fsa.crowding = to_double(key, value);
        } else if (key == "fitness.mode") {
            cfg.fitness.mode = fitness_mode_from_name(value);
        } else if (key == "fitness.weight") {
            cfg.fitness.accuracy_weight = to_double(key, value);
        } else if (key == "fitness.knn_k") {
            cfg.fitness.knn_k = to_size(key, value);
        } else if (key == "fitness.validation") {
            if (value == "holdout") cfg.fitness.validation.kind = ValidationKind::Holdout;
            else if (value == "kfold") cfg.fitness.validation.kind = ValidationKind::KFold;
            else if (value == "resub") cfg.fitness.validation.kind = ValidationKind::Resubstitution;
            else throw std::runtime_error("config: unknown validation '" + value + "'");
        } else if (key == "fitness.holdout_fraction") {
            cfg.fitness.validation.holdout_fraction = to_double(key, value);
        } else if (key == "fitness.kfold") {
            cfg.fitness.validation.folds = to_size(key, value);
        } else if (key == "fitness.rough_bins") {
            cfg.fitness.rough_bins = to_size(key, value);
        } else if (key == "termination.iterations") {
            cfg.termination.max_iterations = to_size(key, value);
        } else if (key == "termination.target") {
            cfg.termination.target_fitness = to_double(key, value);
        } else if (key == "termination.stagnation") {
            cfg.termination.stagnation_window = to_size(key, value);
        } else {
            throw std::runtime_error("config: unknown key '" + key + "'");
        }
    }
    if (population_set) cfg.optimizer_config.set_population(population);
}

}  // namespace evofs
