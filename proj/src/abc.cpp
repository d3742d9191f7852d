#include "evofs/abc.hpp"

#include <algorithm>
#include <stdexcept>

namespace evofs {

std::vector<double> abc_neighbor(std::span<const double> f_i, std::span<const double> f_j,
                                 std::span<const double> v, double lower, double upper) {
    if (f_i.size() != f_j.size() || f_i.size() != v.size())
        throw std::invalid_argument("abc_neighbor: dimension mismatch");
    std::vector<double> out(f_i.size());
    for (std::size_t d = 0; d < f_i.size(); ++d)
        out[d] = std::clamp(f_i[d] + v[d] * (f_i[d] - f_j[d]), lower, upper);
    return out;
}

double abc_scout_value(double lower, double upper, double v_prime) {
    if (lower > upper) throw std::invalid_argument("abc_scout_value: lower > upper");
    return lower + v_prime * (upper - lower);
}

AbcColony::AbcColony(std::size_t n_features, const AbcParams& params, const FitnessFn& fitness,
                     RngStream& rng)
    : n_(n_features), params_(params) {
    if (params.colony_size < 4)
        throw std::invalid_argument("abc: colony_size must be at least 4");
    if (params.limit < 1) throw std::invalid_argument("abc: limit must be >= 1");
    if (params.lower_bound > params.upper_bound)
        throw std::invalid_argument("abc: infeasible bounds");
    const std::size_t n_foods = params.colony_size / 2;
    foods_.reserve(n_foods);
    for (std::size_t i = 0; i < n_foods; ++i) {
        FoodSource food;
        food.position = random_position(n_, params.lower_bound, params.upper_bound, rng);
        food.fitness = position_fitness(fitness, food.position);
        foods_.push_back(std::move(food));
    }
}

std::vector<double> AbcColony::neighbor_candidate(std::size_t i, std::size_t j,
                                                  RngStream& rng) const {
    if (i == j) throw std::invalid_argument("abc: neighbor partner must be a distinct source");
    // one dimension per probe: v is zero elsewhere, which keeps V = f there
    std::vector<double> v(n_, 0.0);
    v[rng.index(n_)] = rng.uniform01();
    return abc_neighbor(foods_[i].position, foods_[j].position, v, params_.lower_bound,
                        params_.upper_bound);
}

void AbcColony::try_replace(std::size_t i, std::size_t j, const FitnessFn& fitness,
                            RngStream& rng) {
    auto candidate = neighbor_candidate(i, j, rng);
    const double f = position_fitness(fitness, candidate);
    if (f > foods_[i].fitness) {
        foods_[i].position = std::move(candidate);
        foods_[i].fitness = f;
        foods_[i].trials = 0;
    } else {
        ++foods_[i].trials;
    }
}

void AbcColony::step(const FitnessFn& fitness, RngStream& rng) {
    const std::size_t n_foods = foods_.size();
    scout_resets_ = 0;

    // employed bees: each source probes one neighbor
    for (std::size_t i = 0; i < n_foods; ++i) {
        std::size_t j = rng.index(n_foods - 1);
        if (j >= i) ++j;
        try_replace(i, j, fitness, rng);
    }

    // onlooker bees: fitness-proportional source choice. Weights are shifted
    // by the colony minimum so near-equal absolute fitnesses still produce
    // selection pressure toward the better sources.
    std::vector<double> weight(n_foods);
    for (std::size_t b = 0; b < n_foods; ++b) {
        double min_fit = std::numeric_limits<double>::infinity();
        for (const auto& f : foods_)
            if (std::isfinite(f.fitness)) min_fit = std::min(min_fit, f.fitness);
        for (std::size_t i = 0; i < n_foods; ++i)
            weight[i] = std::isfinite(foods_[i].fitness)
                            ? foods_[i].fitness - min_fit + 1e-9
                            : 0.0;
        double total = 0.0;
        for (double w : weight) total += w;
        std::size_t i = n_foods - 1;
        if (total > 0.0) {
            const double u = rng.uniform01() * total;
            double cum = 0.0;
            for (std::size_t k = 0; k < n_foods; ++k) {
                cum += weight[k];
                if (u < cum) {
                    i = k;
                    break;
                }
            }
        } else {
            i = rng.index(n_foods);
        }
        std::size_t j = rng.index(n_foods - 1);
        if (j >= i) ++j;
        try_replace(i, j, fitness, rng);
    }

    // one scout: abandon the most exhausted source once it reaches the limit
    std::size_t worn = 0;
    for (std::size_t i = 1; i < n_foods; ++i)
        if (foods_[i].trials > foods_[worn].trials) worn = i;
    if (foods_[worn].trials >= params_.limit) {
        auto& food = foods_[worn];
        for (auto& x : food.position)
            x = abc_scout_value(params_.lower_bound, params_.upper_bound, rng.uniform01());
        food.fitness = position_fitness(fitness, food.position);
        food.trials = 0;
        scout_resets_ = 1;
    }
}

std::size_t AbcColony::best_food() const {
    std::size_t best = 0;
    for (std::size_t i = 1; i < foods_.size(); ++i)
        if (foods_[i].fitness > foods_[best].fitness) best = i;
    return best;
}

double AbcColony::mean_fitness() const {
    double sum = 0.0;
    std::size_t count = 0;
    for (const auto& f : foods_) {
        if (std::isfinite(f.fitness)) {
            sum += f.fitness;
            ++count;
        }
    }
    return count == 0 ? kInfeasibleFitness : sum / static_cast<double>(count);
}

}  // namespace evofs
