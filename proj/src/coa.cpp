#include "evofs/coa.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace evofs {

std::vector<double> coa_cultural_tendency(const std::vector<std::vector<double>>& pack_socs) {
    if (pack_socs.empty()) throw std::invalid_argument("coa_cultural_tendency: empty pack");
    const std::size_t count = pack_socs.size();
    const std::size_t n = pack_socs[0].size();
    std::vector<double> cult(n);
    std::vector<double> column(count);
    for (std::size_t d = 0; d < n; ++d) {
        for (std::size_t c = 0; c < count; ++c) column[c] = pack_socs[c][d];
        std::sort(column.begin(), column.end());
        cult[d] = count % 2 == 1 ? column[count / 2]
                                 : 0.5 * (column[count / 2 - 1] + column[count / 2]);
    }
    return cult;
}

double coa_exchange_probability(std::size_t pack_size) {
    return std::min(1.0, 0.005 * static_cast<double>(pack_size) * static_cast<double>(pack_size));
}

std::pair<std::vector<double>, double> coa_social_update(
    std::span<const double> soc, double soc_fitness, std::span<const double> alpha,
    std::span<const double> cult, std::span<const double> peer1, std::span<const double> peer2,
    double r1, double r2, const std::function<double(const std::vector<double>&)>& position_fit) {
    const std::size_t n = soc.size();
    if (alpha.size() != n || cult.size() != n || peer1.size() != n || peer2.size() != n)
        throw std::invalid_argument("coa_social_update: dimension mismatch");
    std::vector<double> candidate(n);
    for (std::size_t d = 0; d < n; ++d) {
        const double delta1 = alpha[d] - peer1[d];
        const double delta2 = cult[d] - peer2[d];
        candidate[d] = std::clamp(soc[d] + r1 * delta1 + r2 * delta2, 0.0, 1.0);
    }
    const double f = position_fit(candidate);
    if (f > soc_fitness) return {std::move(candidate), f};
    return {std::vector<double>(soc.begin(), soc.end()), soc_fitness};
}

std::vector<double> coa_pup(std::span<const double> parent1, std::span<const double> parent2,
                            std::size_t j1, std::size_t j2, double scatter, double association,
                            RngStream& rng) {
    const std::size_t n = parent1.size();
    if (parent2.size() != n) throw std::invalid_argument("coa_pup: dimension mismatch");
    if (j1 == j2 || j1 >= n || j2 >= n)
        throw std::invalid_argument("coa_pup: j1 and j2 must be distinct dimensions");
    std::vector<double> pup(n);
    for (std::size_t j = 0; j < n; ++j) {
        if (j == j1) {
            pup[j] = parent1[j];
            continue;
        }
        if (j == j2) {
            pup[j] = parent2[j];
            continue;
        }
        const double rnd = rng.uniform01();
        if (rnd < scatter)
            pup[j] = parent1[j];
        else if (rnd >= scatter + association)
            pup[j] = parent2[j];
        else
            pup[j] = rng.uniform01();  // R_j within the [0,1] bounds
    }
    return pup;
}

CoaSystem::CoaSystem(std::size_t n_features, const CoaParams& params, const FitnessFn& fitness,
                     RngStream& rng)
    : n_(n_features), params_(params) {
    if (params.n_packs < 1) throw std::invalid_argument("coa: need at least one pack");
    if (params.pack_size < 3) throw std::invalid_argument("coa: packs need at least 3 coyotes");
    scatter_ = params.scatter >= 0.0 ? params.scatter : 1.0 / static_cast<double>(n_);
    association_ = params.association >= 0.0 ? params.association : (1.0 - scatter_) / 2.0;
    if (scatter_ + association_ > 1.0)
        throw std::invalid_argument("coa: P_s + P_a must not exceed 1");

    packs_.resize(params.n_packs);
    for (auto& pack : packs_) {
        pack.reserve(params.pack_size);
        for (std::size_t c = 0; c < params.pack_size; ++c) {
            Coyote coyote;
            coyote.soc = random_position(n_, 0.0, 1.0, rng);
            coyote.fitness = position_fitness(fitness, coyote.soc);
            pack.push_back(std::move(coyote));
        }
    }
}

void CoaSystem::step(const FitnessFn& fitness, RngStream& rng) {
    const auto position_fit = [&](const std::vector<double>& pos) {
        return position_fitness(fitness, pos);
    };
    const std::size_t nc = params_.pack_size;

    for (auto& pack : packs_) {
        for (auto& coyote : pack) ++coyote.age;

        // pack alpha (best fitness, ties to lowest index) and cultural tendency
        std::size_t alpha_idx = 0;
        for (std::size_t c = 1; c < pack.size(); ++c)
            if (pack[c].fitness > pack[alpha_idx].fitness) alpha_idx = c;
        std::vector<std::vector<double>> socs;
        socs.reserve(pack.size());
        for (const auto& coyote : pack) socs.push_back(coyote.soc);
        const auto cult = coa_cultural_tendency(socs);
        const auto alpha_soc = pack[alpha_idx].soc;

        for (std::size_t c = 0; c < pack.size(); ++c) {
            std::size_t q1 = rng.index(pack.size() - 1);
            if (q1 >= c) ++q1;
            std::size_t q2 = rng.index(pack.size() - 1);
            if (q2 >= c) ++q2;
            const double r1 = rng.uniform01();
            const double r2 = rng.uniform01();
            auto [soc, fit] = coa_social_update(pack[c].soc, pack[c].fitness, alpha_soc, cult,
                                                pack[q1].soc, pack[q2].soc, r1, r2, position_fit);
            pack[c].soc = std::move(soc);
            pack[c].fitness = fit;
        }

        // birth: a pup from two distinct parents replaces the worst coyote if better
        std::size_t p1 = rng.index(pack.size());
        std::size_t p2 = rng.index(pack.size() - 1);
        if (p2 >= p1) ++p2;
        const std::size_t j1 = rng.index(n_);
        std::size_t j2 = n_ > 1 ? rng.index(n_ - 1) : 0;
        if (n_ > 1 && j2 >= j1) ++j2;
        if (n_ > 1) {
            auto pup = coa_pup(pack[p1].soc, pack[p2].soc, j1, j2, scatter_, association_, rng);
            const double pup_fit = position_fit(pup);
            std::size_t worst = 0;
            for (std::size_t c = 1; c < pack.size(); ++c)
                if (pack[c].fitness < pack[worst].fitness) worst = c;
            if (pup_fit > pack[worst].fitness) {
                pack[worst].soc = std::move(pup);
                pack[worst].fitness = pup_fit;
                pack[worst].age = 0;
            }
        }
    }

    // transition between packs
    if (packs_.size() >= 2 && rng.bernoulli(coa_exchange_probability(nc))) {
        const std::size_t a = rng.index(packs_.size());
        std::size_t b = rng.index(packs_.size() - 1);
        if (b >= a) ++b;
        const std::size_t ca = rng.index(packs_[a].size());
        const std::size_t cb = rng.index(packs_[b].size());
        std::swap(packs_[a][ca], packs_[b][cb]);
    }
}

std::size_t CoaSystem::total_coyotes() const {
    std::size_t total = 0;
    for (const auto& pack : packs_) total += pack.size();
    return total;
}

std::pair<std::size_t, std::size_t> CoaSystem::best_coyote() const {
    std::pair<std::size_t, std::size_t> best{0, 0};
    for (std::size_t p = 0; p < packs_.size(); ++p)
        for (std::size_t c = 0; c < packs_[p].size(); ++c)
            if (packs_[p][c].fitness > packs_[best.first][best.second].fitness) best = {p, c};
    return best;
}

double CoaSystem::mean_fitness() const {
    double sum = 0.0;
    std::size_t count = 0;
    for (const auto& pack : packs_)
        for (const auto& coyote : pack)
            if (std::isfinite(coyote.fitness)) {
                sum += coyote.fitness;
                ++count;
            }
    return count == 0 ? kInfeasibleFitness : sum / static_cast<double>(count);
}

}  // namespace evofs
