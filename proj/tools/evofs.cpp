// evofs: nature-inspired feature selection and dimension reduction toolkit.
// Verbs: run, compare, gen-oracle, pca, gp-gen.

#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "evofs/experiment.hpp"
#include "evofs/gp.hpp"
#include "evofs/io.hpp"
#include "evofs/pca.hpp"

namespace {

using namespace evofs;

struct CommonFlags {
    std::string dataset;
    std::string optimizer = "ga-ssga";
    std::string fitness = "knn";
    std::size_t repeats = 30;
    std::uint64_t seed = 1;
    std::size_t iterations = 100;
    std::size_t pop_size = 30;
    std::string out_dir;
    std::string config_file;
    std::string label_col = "last";
    double mutation_rate = 0.05;
    double weight = 0.8;
    std::size_t knn_k = 5;
    std::size_t memetic_budget = 0;
    std::size_t stagnation = 0;
};

void add_common_flags(CLI::App* cmd, CommonFlags& flags, bool with_optimizer) {
    cmd->add_option("--dataset", flags.dataset, "CSV dataset (header row, label column last)");
    if (with_optimizer)
        cmd->add_option("--optimizer", flags.optimizer,
                        "ga-ssga|ga-gga|abc|pso|aco|gwo|coa|cso|fsa");
    cmd->add_option("--fitness", flags.fitness, "filter|knn|rough");
    cmd->add_option("--repeats", flags.repeats, "independent seeded runs to aggregate");
    cmd->add_option("--seed", flags.seed, "base seed; run i uses seed + i");
    cmd->add_option("--iterations", flags.iterations, "max iterations per run");
    cmd->add_option("--pop-size", flags.pop_size, "population / swarm size");
    cmd->add_option("--out-dir", flags.out_dir, "directory for report.txt and convergence.csv");
    cmd->add_option("--config", flags.config_file, "key = value config file; flags override it");
    cmd->add_option("--label-col", flags.label_col, "label column: 'last' or a 0-based index");
    cmd->add_option("--mutation-rate", flags.mutation_rate, "GA mutation rate");
    cmd->add_option("--weight", flags.weight, "accuracy weight w in the objective");
    cmd->add_option("--knn-k", flags.knn_k, "wrapper k-NN neighbor count (odd)");
    cmd->add_option("--memetic-budget", flags.memetic_budget,
                    "local-search evaluations per GA offspring (0 = off)");
    cmd->add_option("--stagnation", flags.stagnation, "stop after this many stale iterations");
}

ExperimentConfig build_config(const CLI::App* cmd, const CommonFlags& flags) {
    ExperimentConfig cfg;
    if (!flags.config_file.empty())
        apply_config_entries(cfg, parse_config_file(flags.config_file));

    auto flag_given = [&](const std::string& name) { return cmd->count(name) > 0; };
    const bool from_file = !flags.config_file.empty();

    if (!from_file || flag_given("--dataset")) cfg.dataset_path = flags.dataset;
    if (!from_file || flag_given("--optimizer"))
        cfg.optimizer = optimizer_from_name(flags.optimizer);
    if (!from_file || flag_given("--fitness"))
        cfg.fitness.mode = fitness_mode_from_name(flags.fitness);
    if (!from_file || flag_given("--repeats")) cfg.repeats = flags.repeats;
    if (!from_file || flag_given("--seed")) cfg.base_seed = flags.seed;
    if (!from_file || flag_given("--iterations"))
        cfg.termination.max_iterations = flags.iterations;
    if (!from_file || flag_given("--pop-size"))
        cfg.optimizer_config.set_population(flags.pop_size);
    if (!from_file || flag_given("--out-dir")) cfg.out_dir = flags.out_dir;
    if (!from_file || flag_given("--label-col"))
        cfg.load_options.label_column =
            flags.label_col == "last" ? -1 : std::stol(flags.label_col);
    if (!from_file || flag_given("--mutation-rate"))
        cfg.optimizer_config.ga.variation.mutation_rate = flags.mutation_rate;
    if (!from_file || flag_given("--weight")) cfg.fitness.accuracy_weight = flags.weight;
    if (!from_file || flag_given("--knn-k")) cfg.fitness.knn_k = flags.knn_k;
    if (!from_file || flag_given("--memetic-budget"))
        cfg.optimizer_config.ga.memetic_budget = flags.memetic_budget;
    if (flag_given("--stagnation") && flags.stagnation > 0)
        cfg.termination.stagnation_window = flags.stagnation;

    if (cfg.dataset_path.empty()) throw CLI::ValidationError("--dataset is required");
    return cfg;
}

Dataset load_pipeline(const std::string& path, const LoadOptions& options = {}) {
    return normalize_minmax(impute_missing(load_csv(path, options)));
}

int cmd_run(const CLI::App* cmd, const CommonFlags& flags) {
    const ExperimentConfig cfg = build_config(cmd, flags);
    const ExperimentReport report = run_experiment(cfg);
    std::cout << render_report(report);
    std::printf("mean_wall_clock_s = %.4f\n", report.mean_wall_clock);
    if (!cfg.out_dir.empty())
        std::cout << "wrote " << cfg.out_dir << "/report.txt and convergence.csv\n";
    return 0;
}

int cmd_compare(const CLI::App* cmd, const CommonFlags& flags, const std::string& optimizers) {
    ExperimentConfig base = build_config(cmd, flags);
    std::vector<ExperimentConfig> cfgs;
    std::string token;
    std::stringstream ss(optimizers);
    while (std::getline(ss, token, ',')) {
        if (token.empty()) continue;
        ExperimentConfig cfg = base;
        cfg.optimizer = optimizer_from_name(token);
        cfgs.push_back(std::move(cfg));
    }
    const auto rows = compare(cfgs);
    const std::string table = render_comparison(rows);
    std::cout << table;
    if (!base.out_dir.empty()) {
        write_file_atomic(base.out_dir + "/comparison.txt", table);
        std::cout << "wrote " << base.out_dir << "/comparison.txt\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"nature-inspired feature selection toolkit"};
    app.require_subcommand(1);

    CommonFlags flags;
    std::string optimizers = "ga-ssga,ga-gga,abc,pso,aco,gwo,coa,cso,fsa";

    CLI::App* run = app.add_subcommand("run", "repeated seeded runs of one optimizer");
    add_common_flags(run, flags, true);

    CLI::App* cmp = app.add_subcommand("compare", "run several optimizers on one dataset");
    add_common_flags(cmp, flags, false);
    cmp->add_option("--optimizers", optimizers, "comma-separated optimizer list");

    OracleSpec oracle;
    std::string oracle_out = "oracle.csv";
    CLI::App* gen = app.add_subcommand("gen-oracle", "write the synthetic verification dataset");
    gen->add_option("--out", oracle_out, "output CSV path");
    gen->add_option("--features", oracle.n_features, "total feature count");
    gen->add_option("--informative", oracle.informative, "features the label depends on");
    gen->add_option("--rows", oracle.rows, "row count");
    gen->add_option("--seed", oracle.seed, "generator seed");

    std::string pca_dataset, pca_model_out, pca_model_in, pca_out_csv;
    std::size_t pca_components = 2;
    CLI::App* pca_cmd = app.add_subcommand("pca", "fit or apply a PCA projection");
    pca_cmd->add_option("--dataset", pca_dataset)->required();
    pca_cmd->add_option("--components", pca_components, "projection rank r");
    pca_cmd->add_option("--model-out", pca_model_out, "save the fitted model here");
    pca_cmd->add_option("--model-in", pca_model_in, "reuse a saved model instead of fitting");
    pca_cmd->add_option("--out-csv", pca_out_csv, "write the transformed dataset");

    std::string gp_dataset, gp_out_csv = "augmented.csv";
    std::size_t gp_count = 2, gp_generations = 20;
    std::uint64_t gp_seed = 1;
    CLI::App* gp_cmd = app.add_subcommand("gp-gen", "append evolved feature columns");
    gp_cmd->add_option("--dataset", gp_dataset)->required();
    gp_cmd->add_option("--count", gp_count, "new feature columns to append");
    gp_cmd->add_option("--generations", gp_generations);
    gp_cmd->add_option("--seed", gp_seed);
    gp_cmd->add_option("--out-csv", gp_out_csv);

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) return cmd_run(run, flags);
        if (cmp->parsed()) return cmd_compare(cmp, flags, optimizers);
        if (gen->parsed()) {
            evofs::write_oracle_files(oracle, oracle_out);
            std::cout << "wrote " << oracle_out << " and " << oracle_out << ".optimum.txt\n";
            return 0;
        }
        if (pca_cmd->parsed()) {
            const evofs::Dataset ds = load_pipeline(pca_dataset);
            evofs::PcaModel model;
            if (!pca_model_in.empty()) {
                model = evofs::PcaModel::load(pca_model_in);
            } else {
                model = evofs::pca_fit(ds, pca_components);
            }
            if (!pca_model_out.empty()) {
                model.save(pca_model_out);
                std::cout << "wrote " << pca_model_out << '\n';
            }
            std::cout << "explained_variance =";
            for (double v : model.explained_variance) std::printf(" %.6g", v);
            std::cout << '\n';
            if (!pca_out_csv.empty()) {
                evofs::save_csv(evofs::pca_transform(model, ds), pca_out_csv);
                std::cout << "wrote " << pca_out_csv << '\n';
            }
            return 0;
        }
        if (gp_cmd->parsed()) {
            const evofs::Dataset ds = load_pipeline(gp_dataset);
            evofs::RngStream rng(gp_seed);
            const evofs::Dataset augmented =
                evofs::gp_generate_features(ds, gp_count, gp_generations, rng);
            evofs::save_csv(augmented, gp_out_csv);
            std::cout << "wrote " << gp_out_csv << " (" << augmented.cols << " columns)\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
