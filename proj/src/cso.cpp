#include "evofs/cso.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace evofs {

namespace {

constexpr double kEps = 1e-12;

double safe_fit(double f) { return std::isfinite(f) ? f : -1.0; }

double bounded_exp(double x) { return std::exp(std::clamp(x, -50.0, 50.0)); }

}  // namespace

RoleCounts cso_role_counts(std::size_t size, double rooster_ratio, double hens_ratio,
                           double chicks_ratio) {
    if (size == 0) throw std::invalid_argument("cso: empty swarm");
    if (std::fabs(rooster_ratio + hens_ratio + chicks_ratio - 1.0) > 1e-9)
        throw std::invalid_argument("cso: role ratios must sum to 1");
    RoleCounts counts{};
    counts.roosters = static_cast<std::size_t>(rooster_ratio * static_cast<double>(size));
    if (counts.roosters == 0) counts.roosters = 1;  // a leaderless swarm cannot move
    counts.chicks = std::min(static_cast<std::size_t>(chicks_ratio * static_cast<double>(size)),
                             size - counts.roosters);
    counts.hens = size - counts.roosters - counts.chicks;  // remainder goes to hens
    return counts;
}

CsoSwarm::CsoSwarm(std::size_t n_features, const CsoParams& params, const FitnessFn& fitness,
                   RngStream& rng)
    : n_(n_features), params_(params) {
    if (params.reorder_period == 0) throw std::invalid_argument("cso: reorder period must be >= 1");
    members_.reserve(params.swarm);
    for (std::size_t i = 0; i < params.swarm; ++i) {
        Chicken c;
        c.position = random_position(n_, 0.0, 1.0, rng);
        c.fitness = position_fitness(fitness, c.position);
        members_.push_back(std::move(c));
    }
    assign_roles(rng);
}

void CsoSwarm::assign_roles(RngStream& rng) {
    counts_ = cso_role_counts(members_.size(), params_.rooster_ratio, params_.hens_ratio,
                              params_.chicks_ratio);
    std::vector<std::size_t> order(members_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return members_[a].fitness != members_[b].fitness
                   ? members_[a].fitness > members_[b].fitness
                   : a < b;
    });

    std::vector<std::size_t> roosters, hens;
    for (std::size_t rank = 0; rank < order.size(); ++rank) {
        const std::size_t i = order[rank];
        if (rank < counts_.roosters) {
            members_[i].role = ChickenRole::Rooster;
            roosters.push_back(i);
        } else if (rank < counts_.roosters + counts_.hens) {
            members_[i].role = ChickenRole::Hen;
            hens.push_back(i);
        } else {
            members_[i].role = ChickenRole::Chick;
        }
    }
    for (auto& c : members_) {
        if (c.role == ChickenRole::Hen) {
            c.group_rooster = roosters[rng.index(roosters.size())];
        } else if (c.role == ChickenRole::Chick) {
            c.mother = hens.empty() ? roosters[rng.index(roosters.size())]
                                    : hens[rng.index(hens.size())];
        }
    }
}

void CsoSwarm::step(const FitnessFn& fitness, RngStream& rng, std::size_t t) {
    if (t > 0 && t % params_.reorder_period == 0) assign_roles(rng);

    std::vector<std::size_t> roosters;
    for (std::size_t i = 0; i < members_.size(); ++i)
        if (members_[i].role == ChickenRole::Rooster) roosters.push_back(i);

    for (std::size_t i = 0; i < members_.size(); ++i) {
        Chicken& c = members_[i];
        switch (c.role) {
            case ChickenRole::Rooster: {
                double sigma2 = 1.0;
                if (roosters.size() > 1) {
                    const std::size_t my_pos = static_cast<std::size_t>(
                        std::find(roosters.begin(), roosters.end(), i) - roosters.begin());
                    std::size_t peer_pos = rng.index(roosters.size() - 1);
                    if (peer_pos >= my_pos) ++peer_pos;
                    const std::size_t k = roosters[peer_pos];
                    const double fk = safe_fit(members_[k].fitness);
                    const double fi = safe_fit(c.fitness);
                    if (fk > fi) sigma2 = bounded_exp((fk - fi) / (std::fabs(fi) + kEps));
                }
                const double sigma = std::sqrt(sigma2);
                for (auto& x : c.position) x *= 1.0 + rng.normal(0.0, sigma);
                break;
            }
            case ChickenRole::Hen: {
                const Chicken& leader = members_[c.group_rooster];
                const double fi = safe_fit(c.fitness);
                const double s1 = bounded_exp((fi - safe_fit(leader.fitness)) /
                                              (std::fabs(fi) + kEps));
                // second attractor: a random strictly better member, if any
                std::vector<std::size_t> better;
                for (std::size_t j = 0; j < members_.size(); ++j)
                    if (j != i && j != c.group_rooster && members_[j].fitness > c.fitness)
                        better.push_back(j);
                const double r1 = rng.uniform01();
                for (std::size_t d = 0; d < n_; ++d)
                    c.position[d] += s1 * r1 * (leader.position[d] - c.position[d]);
                if (!better.empty()) {
                    const Chicken& other = members_[better[rng.index(better.size())]];
                    const double s2 = bounded_exp(safe_fit(other.fitness) - fi);
                    const double r2 = rng.uniform01();
                    for (std::size_t d = 0; d < n_; ++d)
                        c.position[d] += s2 * r2 * (other.position[d] - c.position[d]);
                }
                break;
            }
            case ChickenRole::Chick: {
                const Chicken& mother = members_[c.mother];
                const double fl = rng.uniform(0.0, 2.0);
                for (std::size_t d = 0; d < n_; ++d)
                    c.position[d] += fl * (mother.position[d] - c.position[d]);
                break;
            }
        }
        clamp_position(c.position, 0.0, 1.0);
        c.fitness = position_fitness(fitness, c.position);
    }
}

std::size_t CsoSwarm::best_member() const {
    std::size_t best = 0;
    for (std::size_t i = 1; i < members_.size(); ++i)
        if (members_[i].fitness > members_[best].fitness) best = i;
    return best;
}

double CsoSwarm::mean_fitness() const {
    double sum = 0.0;
    std::size_t count = 0;
    for (const auto& c : members_) {
        if (std::isfinite(c.fitness)) {
            sum += c.fitness;
            ++count;
        }
    }
    return count == 0 ? kInfeasibleFitness : sum / static_cast<double>(count);
}

}  // namespace evofs
