#pragma once

#include <array>
#include <span>
#include <vector>

#include "evofs/continuous.hpp"

namespace evofs {

struct GwoParams {
    std::size_t wolves = 30;  // >= 3 so the three leaders exist
};

/// Componentwise arithmetic mean of the three leader-driven candidates.
std::vector<double> gwo_average_candidates(std::span<const double> c1, std::span<const double> c2,
                                           std::span<const double> c3);

/// Candidate move averaged over the three leaders: per leader L, with fresh
/// r1, r2 per dimension, A = 2a*r1 - a, C = 2*r2, D = |C.L - X|,
/// X_L = L - A.D; returns the mean of the three candidates clamped to [0,1].
std::vector<double> gwo_position_update(std::span<const double> x, std::span<const double> alpha,
                                        std::span<const double> beta, std::span<const double> delta,
                                        double a, RngStream& rng);

/// Control scalar: linear decay 2 -> 0 over max_iterations.
double gwo_control(std::size_t t, std::size_t max_iterations);

class GwoPack {
public:
    GwoPack(std::size_t n_features, const GwoParams& params, const FitnessFn& fitness,
            RngStream& rng);

    void step(const FitnessFn& fitness, RngStream& rng, std::size_t t,
              std::size_t max_iterations);

    const std::vector<std::vector<double>>& positions() const { return positions_; }
    const std::vector<double>& fitnesses() const { return fitnesses_; }
    /// Leader indices (alpha, beta, delta), best first.
    std::array<std::size_t, 3> leaders() const { return leaders_; }
    std::size_t best_wolf() const { return leaders_[0]; }
    double mean_fitness() const;

private:
    void rank_leaders();

    std::size_t n_;
    GwoParams params_;
    std::vector<std::vector<double>> positions_;
    std::vector<double> fitnesses_;
    std::array<std::size_t, 3> leaders_{0, 0, 0};
};

}  // namespace evofs
