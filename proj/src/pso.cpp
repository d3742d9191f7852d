#include "evofs/pso.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace evofs {

std::vector<double> pso_velocity_update(std::span<const double> velocity,
                                        std::span<const double> position,
                                        std::span<const double> pbest,
                                        std::span<const double> gbest, double w, double c1,
                                        double c2, double max_velocity, RngStream& rng) {
    const std::size_t n = velocity.size();
    if (position.size() != n || pbest.size() != n || gbest.size() != n)
        throw std::invalid_argument("pso_velocity_update: dimension mismatch");
    std::vector<double> out(n);
    for (std::size_t d = 0; d < n; ++d) {
        const double r1 = rng.uniform01();
        const double r2 = rng.uniform01();
        const double v = w * velocity[d] + c1 * r1 * (pbest[d] - position[d]) +
                         c2 * r2 * (gbest[d] - position[d]);
        out[d] = std::clamp(v, -max_velocity, max_velocity);
    }
    return out;
}

double pso_inertia(double min_weight, double max_weight, std::size_t t,
                   std::size_t max_iterations) {
    if (max_iterations == 0) return max_weight;
    const double frac = static_cast<double>(t) / static_cast<double>(max_iterations);
    return max_weight - (max_weight - min_weight) * frac;
}

double pso_bit_probability(double position_component) {
    return 1.0 / (1.0 + std::exp(-10.0 * (position_component - 0.5)));
}

bool pso_binarize(double position_component) { return position_component >= 0.5; }

bool pso_binarize_stochastic(double position_component, RngStream& rng) {
    return rng.uniform01() < pso_bit_probability(position_component);
}

PsoSwarm::PsoSwarm(std::size_t n_features, const PsoParams& params, const FitnessFn& fitness,
                   RngStream& rng)
    : n_(n_features), params_(params) {
    if (params.particles == 0) throw std::invalid_argument("pso: need at least one particle");
    if (params.max_velocity <= 0.0) throw std::invalid_argument("pso: max_velocity must be > 0");
    if (params.min_weight > params.max_weight)
        throw std::invalid_argument("pso: min_weight must not exceed max_weight");

    particles_.reserve(params.particles);
    gbest_fitness_ = kInfeasibleFitness;
    for (std::size_t i = 0; i < params.particles; ++i) {
        Particle p;
        p.position = random_position(n_, 0.0, 1.0, rng);
        p.velocity.resize(n_);
        for (auto& v : p.velocity) v = rng.uniform(-params.max_velocity, params.max_velocity);
        p.fitness = position_fitness(fitness, p.position);
        p.pbest_position = p.position;
        p.pbest_fitness = p.fitness;
        if (p.fitness > gbest_fitness_) {
            gbest_fitness_ = p.fitness;
            gbest_position_ = p.position;
        }
        particles_.push_back(std::move(p));
    }
    if (gbest_position_.empty()) gbest_position_ = particles_.front().position;
}

void PsoSwarm::step(const FitnessFn& fitness, RngStream& rng, std::size_t t,
                    std::size_t max_iterations) {
    const double w = pso_inertia(params_.min_weight, params_.max_weight, t, max_iterations);
    for (auto& p : particles_) {
        p.velocity = pso_velocity_update(p.velocity, p.position, p.pbest_position, gbest_position_,
                                         w, params_.c1, params_.c2, params_.max_velocity, rng);
        for (std::size_t d = 0; d < n_; ++d)
            p.position[d] = std::clamp(p.position[d] + p.velocity[d], 0.0, 1.0);
        p.fitness = position_fitness(fitness, p.position);
        if (p.fitness > p.pbest_fitness) {
            p.pbest_fitness = p.fitness;
            p.pbest_position = p.position;
        }
        if (p.fitness > gbest_fitness_) {
            gbest_fitness_ = p.fitness;
            gbest_position_ = p.position;
        }
    }
}

double PsoSwarm::mean_fitness() const {
    double sum = 0.0;
    std::size_t count = 0;
    for (const auto& p : particles_) {
        if (std::isfinite(p.fitness)) {
            sum += p.fitness;
            ++count;
        }
    }
    return count == 0 ? kInfeasibleFitness : sum / static_cast<double>(count);
}

}  // namespace evofs
