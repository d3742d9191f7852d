#pragma once

#include <vector>

#include "evofs/continuous.hpp"

namespace evofs {

struct CsoParams {
    std::size_t swarm = 30;
    double rooster_ratio = 0.2;
    double hens_ratio = 0.6;
    double chicks_ratio = 0.2;       // ratios must sum to 1
    std::size_t reorder_period = 10;  // iterations between role reassignment
};

enum class ChickenRole { Rooster, Hen, Chick };

struct RoleCounts {
    std::size_t roosters;
    std::size_t hens;
    std::size_t chicks;
};

/// floor(ratio * size) per role with the remainder assigned to hens. At
/// least one rooster is always kept so hens and chicks have a leader.
RoleCounts cso_role_counts(std::size_t size, double rooster_ratio, double hens_ratio,
                           double chicks_ratio);

struct Chicken {
    std::vector<double> position;
    double fitness;
    ChickenRole role = ChickenRole::Hen;
    std::size_t group_rooster = 0;  // hens: the rooster they follow
    std::size_t mother = 0;         // chicks: the hen they follow
};

// Role-dispatched swarm: the fittest members move as roosters (Gaussian
// perturbation scaled against a peer rooster), the worst as chicks
// (following their mother hen), the middle as hens (attracted to their
// rooster and a better neighbor). Roles are rebuilt from a fresh fitness
// ranking every reorder_period iterations.
class CsoSwarm {
public:
    CsoSwarm(std::size_t n_features, const CsoParams& params, const FitnessFn& fitness,
             RngStream& rng);

    void step(const FitnessFn& fitness, RngStream& rng, std::size_t t);

    const std::vector<Chicken>& members() const { return members_; }
    RoleCounts counts() const { return counts_; }
    std::size_t best_member() const;
    double mean_fitness() const;

private:
    void assign_roles(RngStream& rng);

    std::size_t n_;
    CsoParams params_;
    RoleCounts counts_{0, 0, 0};
    std::vector<Chicken> members_;
};

}  // namespace evofs
