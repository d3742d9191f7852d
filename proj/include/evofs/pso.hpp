#pragma once

#include <span>
#include <vector>

#include "evofs/continuous.hpp"

namespace evofs {

struct PsoParams {
    std::size_t particles = 30;
    double c1 = 2.0;  // cognitive pull toward pbest
    double c2 = 2.0;  // social pull toward gbest
    double max_velocity = 0.25;
    double min_weight = 0.4;  // inertia endpoints
    double max_weight = 0.9;
};

/// v <- w*v + c1*r1.(pbest - x) + c2*r2.(gbest - x), fresh uniform r per
/// dimension, then componentwise clamp to [-max_velocity, +max_velocity].
std::vector<double> pso_velocity_update(std::span<const double> velocity,
                                        std::span<const double> position,
                                        std::span<const double> pbest,
                                        std::span<const double> gbest, double w, double c1,
                                        double c2, double max_velocity, RngStream& rng);

/// Linear inertia decrease from max_weight at t = 0 toward min_weight.
double pso_inertia(double min_weight, double max_weight, std::size_t t, std::size_t max_iterations);

/// P(bit = 1) under the sigmoid transfer rule, slope 10 around 0.5.
double pso_bit_probability(double position_component);
/// Deterministic rule used when reporting subsets: bit = 1 iff x >= 0.5.
bool pso_binarize(double position_component);
bool pso_binarize_stochastic(double position_component, RngStream& rng);

struct Particle {
    std::vector<double> position;
    std::vector<double> velocity;
    std::vector<double> pbest_position;
    double pbest_fitness;
    double fitness;
};

class PsoSwarm {
public:
    PsoSwarm(std::size_t n_features, const PsoParams& params, const FitnessFn& fitness,
             RngStream& rng);

    void step(const FitnessFn& fitness, RngStream& rng, std::size_t t, std::size_t max_iterations);

    const std::vector<Particle>& particles() const { return particles_; }
    const std::vector<double>& gbest_position() const { return gbest_position_; }
    double gbest_fitness() const { return gbest_fitness_; }
    double mean_fitness() const;

private:
    std::size_t n_;
    PsoParams params_;
    std::vector<Particle> particles_;
    std::vector<double> gbest_position_;
    double gbest_fitness_;
};

}  // namespace evofs
