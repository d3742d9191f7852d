#include "evofs/aco.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace evofs {

std::vector<double> aco_feature_probability(const PheromoneTable& table,
                                            const std::vector<std::size_t>& available) {
    if (available.empty())
        throw std::invalid_argument("aco_feature_probability: no available features");
    std::vector<double> p(available.size());
    double total = 0.0;
    for (std::size_t i = 0; i < available.size(); ++i) {
        const std::size_t j = available[i];
        p[i] = std::pow(table.tau[j], table.alpha) * std::pow(table.eta[j], table.beta);
        total += p[i];
    }
    if (total <= 0.0) {  // degenerate weights: fall back to uniform
        std::fill(p.begin(), p.end(), 1.0 / static_cast<double>(available.size()));
        return p;
    }
    for (auto& x : p) x /= total;
    return p;
}

void aco_update_pheromone(PheromoneTable& table,
                          const std::vector<std::pair<std::vector<std::size_t>, double>>& deposits) {
    if (!(table.evaporation > 0.0 && table.evaporation <= 1.0))
        throw std::invalid_argument("aco_update_pheromone: evaporation must lie in (0, 1]");
    std::vector<double> gain(table.tau.size(), 0.0);
    for (const auto& [subset, fitness] : deposits)
        for (std::size_t j : subset) gain[j] += fitness;
    for (std::size_t j = 0; j < table.tau.size(); ++j)
        table.tau[j] = std::max(table.tau_min, (1.0 - table.evaporation) * table.tau[j] + gain[j]);
}

AcoState::AcoState(std::size_t n_features, const AcoParams& params, std::vector<double> eta,
                   const FitnessFn& fitness, RngStream& rng)
    : n_(n_features), params_(params) {
    if (params.ants == 0) throw std::invalid_argument("aco: need at least one ant");
    if (!(params.evaporation > 0.0 && params.evaporation <= 1.0))
        throw std::invalid_argument("aco: evaporation must lie in (0, 1]");
    if (eta.size() != n_) throw std::invalid_argument("aco: eta size mismatch");
    table_.tau.assign(n_, params.tau_init);
    table_.eta = std::move(eta);
    table_.evaporation = params.evaporation;
    table_.alpha = params.alpha;
    table_.beta = params.beta;
    table_.tau_min = params.tau_min;

    // initial batch: subsets built under the flat starting pheromone
    ants_.resize(params_.ants);
    for (auto& ant : ants_) {
        ant.subset = build_subset(rng);
        Genome g;
        g.encoding = Encoding::BinaryMask;
        g.n = n_;
        g.mask.assign(n_, 0);
        for (std::size_t j : ant.subset) g.mask[j] = 1;
        ant.fitness = fitness(g);
    }
}

std::vector<std::size_t> AcoState::build_subset(RngStream& rng) const {
    const std::size_t budget = 1 + rng.index(n_);
    std::vector<std::size_t> available(n_);
    for (std::size_t i = 0; i < n_; ++i) available[i] = i;
    std::vector<std::size_t> subset;
    subset.reserve(budget);
    while (subset.size() < budget) {
        const auto p = aco_feature_probability(table_, available);
        const double u = rng.uniform01();
        double cum = 0.0;
        std::size_t pick = available.size() - 1;
        for (std::size_t i = 0; i < p.size(); ++i) {
            cum += p[i];
            if (u < cum) {
                pick = i;
                break;
            }
        }
        subset.push_back(available[pick]);
        available.erase(available.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    std::sort(subset.begin(), subset.end());
    return subset;
}

void AcoState::step(const FitnessFn& fitness, RngStream& rng) {
    for (auto& ant : ants_) {
        ant.subset = build_subset(rng);
        Genome g;
        g.encoding = Encoding::BinaryMask;
        g.n = n_;
        g.mask.assign(n_, 0);
        for (std::size_t j : ant.subset) g.mask[j] = 1;
        ant.fitness = fitness(g);
    }
    // top-q ants by fitness deposit their subsets
    std::vector<std::size_t> order(ants_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return ants_[a].fitness != ants_[b].fitness ? ants_[a].fitness > ants_[b].fitness : a < b;
    });
    std::vector<std::pair<std::vector<std::size_t>, double>> deposits;
    const std::size_t q = std::min(params_.deposit_top, ants_.size());
    for (std::size_t i = 0; i < q; ++i) {
        const Ant& ant = ants_[order[i]];
        if (std::isfinite(ant.fitness)) deposits.push_back({ant.subset, ant.fitness});
    }
    aco_update_pheromone(table_, deposits);
}

std::size_t AcoState::best_ant() const {
    std::size_t best = 0;
    for (std::size_t i = 1; i < ants_.size(); ++i)
        if (ants_[i].fitness > ants_[best].fitness) best = i;
    return best;
}

double AcoState::mean_fitness() const {
    double sum = 0.0;
    std::size_t count = 0;
    for (const auto& ant : ants_) {
        if (std::isfinite(ant.fitness)) {
            sum += ant.fitness;
            ++count;
        }
    }
    return count == 0 ? kInfeasibleFitness : sum / static_cast<double>(count);
}

}  // namespace evofs
