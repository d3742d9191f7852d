#pragma once

#include <vector>

#include "evofs/continuous.hpp"
#include "evofs/dataset.hpp"

namespace evofs {

struct FsaParams {
    std::size_t school = 30;
    double crowding = 0.8;     // Swarm move is skipped when this fraction of the school is visible
    std::size_t visual = 0;    // Hamming radius; 0 means the ceil(n/4) default
};

struct Fish {
    std::vector<std::size_t> attrs;  // candidate attribute subset R_K, sorted
    double fitness;
};

// Attribute-reduct search over a discretized decision table. Each fish holds
// a candidate subset; per step it evaluates a Search / Swarm / Follow
// candidate and keeps the best. (R_min, L_min) track the shortest subset
// seen whose dependency degree matches the full attribute set's.
class FsaSchool {
public:
    FsaSchool(const RoughSetTable& table, const FsaParams& params, const FitnessFn& fitness,
              RngStream& rng);

    void step(const RoughSetTable& table, const FitnessFn& fitness, RngStream& rng);

    const std::vector<Fish>& fish() const { return fish_; }
    const std::vector<std::size_t>& reduct() const { return r_min_; }
    std::size_t reduct_size() const { return l_min_; }
    double full_dependency() const { return gamma_full_; }
    std::size_t best_fish() const;
    double mean_fitness() const;

    // candidate moves, exposed for targeted testing
    std::vector<std::size_t> search_candidate(std::size_t k, RngStream& rng) const;
    std::vector<std::size_t> swarm_candidate(std::size_t k) const;
    std::vector<std::size_t> follow_candidate(std::size_t k, RngStream& rng) const;

private:
    std::size_t n_;
    FsaParams params_;
    std::size_t visual_;
    double gamma_full_;
    std::vector<Fish> fish_;
    std::vector<std::size_t> r_min_;
    std::size_t l_min_;
};

}  // namespace evofs
