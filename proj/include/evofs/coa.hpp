#pragma once

#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "evofs/continuous.hpp"

namespace evofs {

struct CoaParams {
    std::size_t n_packs = 6;
    std::size_t pack_size = 5;  // N_c >= 3
    double scatter = -1.0;      // P_s; negative means the 1/n default
    double association = -1.0;  // P_a; negative means the (1 - P_s)/2 default
};

/// Per-dimension median of the pack's social conditions (middle element for
/// odd pack sizes, mean of the two middle elements).
std::vector<double> coa_cultural_tendency(const std::vector<std::vector<double>>& pack_socs);

/// Pack-exchange probability P_e = min(1, 0.005 * N_c^2).
double coa_exchange_probability(std::size_t pack_size);

/// New social condition soc + r1*(alpha - peer1) + r2*(cult - peer2),
/// clamped to [0,1]; the candidate is kept only when its fitness improves.
/// Returns the surviving (condition, fitness) pair.
std::pair<std::vector<double>, double> coa_social_update(
    std::span<const double> soc, double soc_fitness, std::span<const double> alpha,
    std::span<const double> cult, std::span<const double> peer1, std::span<const double> peer2,
    double r1, double r2, const std::function<double(const std::vector<double>&)>& position_fit);

/// Pup gene per dimension j: parent 1 when j = j1 or rnd_j < P_s; parent 2
/// when j = j2 or rnd_j >= P_s + P_a; otherwise a fresh uniform value.
std::vector<double> coa_pup(std::span<const double> parent1, std::span<const double> parent2,
                            std::size_t j1, std::size_t j2, double scatter, double association,
                            RngStream& rng);

struct Coyote {
    std::vector<double> soc;
    double fitness;
    int age = 0;
};

class CoaSystem {
public:
    CoaSystem(std::size_t n_features, const CoaParams& params, const FitnessFn& fitness,
              RngStream& rng);

    void step(const FitnessFn& fitness, RngStream& rng);

    const std::vector<std::vector<Coyote>>& packs() const { return packs_; }
    std::size_t total_coyotes() const;
    std::pair<std::size_t, std::size_t> best_coyote() const;  // (pack, index)
    double mean_fitness() const;
    double scatter_probability() const { return scatter_; }
    double association_probability() const { return association_; }

private:
    std::size_t n_;
    CoaParams params_;
    double scatter_;
    double association_;
    std::vector<std::vector<Coyote>> packs_;
};

}  // namespace evofs
