#include "evofs/gwo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace evofs {

std::vector<double> gwo_average_candidates(std::span<const double> c1, std::span<const double> c2,
                                           std::span<const double> c3) {
    if (c1.size() != c2.size() || c1.size() != c3.size())
        throw std::invalid_argument("gwo_average_candidates: dimension mismatch");
    std::vector<double> out(c1.size());
    for (std::size_t d = 0; d < c1.size(); ++d) out[d] = (c1[d] + c2[d] + c3[d]) / 3.0;
    return out;
}

std::vector<double> gwo_position_update(std::span<const double> x, std::span<const double> alpha,
                                        std::span<const double> beta, std::span<const double> delta,
                                        double a, RngStream& rng) {
    const std::size_t n = x.size();
    if (alpha.size() != n || beta.size() != n || delta.size() != n)
        throw std::invalid_argument("gwo_position_update: dimension mismatch");
    if (a < 0.0) throw std::invalid_argument("gwo_position_update: a must be >= 0");

    std::vector<double> c1(n), c2(n), c3(n);
    const std::array<std::span<const double>, 3> leaders = {alpha, beta, delta};
    const std::array<std::vector<double>*, 3> candidates = {&c1, &c2, &c3};
    for (std::size_t l = 0; l < 3; ++l) {
        for (std::size_t d = 0; d < n; ++d) {
            const double r1 = rng.uniform01();
            const double r2 = rng.uniform01();
            const double A = 2.0 * a * r1 - a;
            const double C = 2.0 * r2;
            const double D = std::fabs(C * leaders[l][d] - x[d]);
            (*candidates[l])[d] = leaders[l][d] - A * D;
        }
    }
    auto out = gwo_average_candidates(c1, c2, c3);
    for (auto& v : out) v = std::clamp(v, 0.0, 1.0);
    return out;
}

double gwo_control(std::size_t t, std::size_t max_iterations) {
    if (max_iterations == 0) return 2.0;
    return 2.0 * (1.0 - static_cast<double>(t) / static_cast<double>(max_iterations));
}

GwoPack::GwoPack(std::size_t n_features, const GwoParams& params, const FitnessFn& fitness,
                 RngStream& rng)
    : n_(n_features), params_(params) {
    if (params.wolves < 3) throw std::invalid_argument("gwo: need at least three wolves");
    positions_.reserve(params.wolves);
    fitnesses_.reserve(params.wolves);
    for (std::size_t i = 0; i < params.wolves; ++i) {
        positions_.push_back(random_position(n_, 0.0, 1.0, rng));
        fitnesses_.push_back(position_fitness(fitness, positions_.back()));
    }
    rank_leaders();
}

void GwoPack::rank_leaders() {
    // top three by fitness, ties to the lowest index
    std::array<std::size_t, 3> top{0, 0, 0};
    std::vector<std::size_t> order(positions_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::partial_sort(order.begin(), order.begin() + 3, order.end(),
                      [&](std::size_t a, std::size_t b) {
                          return fitnesses_[a] != fitnesses_[b] ? fitnesses_[a] > fitnesses_[b]
                                                                : a < b;
                      });
    top = {order[0], order[1], order[2]};
    leaders_ = top;
}

void GwoPack::step(const FitnessFn& fitness, RngStream& rng, std::size_t t,
                   std::size_t max_iterations) {
    const double a = gwo_control(t, max_iterations);
    const auto alpha = positions_[leaders_[0]];
    const auto beta = positions_[leaders_[1]];
    const auto delta = positions_[leaders_[2]];
    for (std::size_t i = 0; i < positions_.size(); ++i) {
        positions_[i] = gwo_position_update(positions_[i], alpha, beta, delta, a, rng);
        fitnesses_[i] = position_fitness(fitness, positions_[i]);
    }
    rank_leaders();
}

double GwoPack::mean_fitness() const {
    double sum = 0.0;
    std::size_t count = 0;
    for (double f : fitnesses_) {
        if (std::isfinite(f)) {
            sum += f;
            ++count;
        }
    }
    return count == 0 ? kInfeasibleFitness : sum / static_cast<double>(count);
}

}  // namespace evofs
