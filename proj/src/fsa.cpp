#include "evofs/fsa.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "evofs/fitness.hpp"

namespace evofs {

namespace {

Genome subset_genome(const std::vector<std::size_t>& attrs, std::size_t n) {
    Genome g;
    g.encoding = Encoding::BinaryMask;
    g.n = n;
    g.mask.assign(n, 0);
    for (std::size_t a : attrs) g.mask[a] = 1;
    return g;
}

std::size_t hamming(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    // symmetric difference of two sorted index sets
    std::size_t i = 0, j = 0, diff = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) {
            ++i;
            ++j;
        } else if (a[i] < b[j]) {
            ++diff;
            ++i;
        } else {
            ++diff;
            ++j;
        }
    }
    return diff + (a.size() - i) + (b.size() - j);
}

}  // namespace

FsaSchool::FsaSchool(const RoughSetTable& table, const FsaParams& params, const FitnessFn& fitness,
                     RngStream& rng)
    : n_(table.attribute_count()), params_(params) {
    if (n_ == 0) throw std::invalid_argument("fsa: empty conditional attribute set");
    if (params.school == 0) throw std::invalid_argument("fsa: empty school");
    visual_ = params.visual > 0
                  ? params.visual
                  : static_cast<std::size_t>(std::ceil(static_cast<double>(n_) / 4.0));

    std::vector<std::size_t> all(n_);
    for (std::size_t i = 0; i < n_; ++i) all[i] = i;
    gamma_full_ = rough_set_dependency(table, all);
    r_min_ = all;
    l_min_ = n_;

    fish_.reserve(params.school);
    for (std::size_t k = 0; k < params.school; ++k) {
        Fish f;
        f.attrs = {rng.index(n_)};
        f.fitness = fitness(subset_genome(f.attrs, n_));
        fish_.push_back(std::move(f));
    }
}

std::vector<std::size_t> FsaSchool::search_candidate(std::size_t k, RngStream& rng) const {
    const auto& cur = fish_[k].attrs;
    if (cur.size() >= n_) return cur;
    std::vector<std::size_t> missing;
    for (std::size_t a = 0; a < n_; ++a)
        if (!std::binary_search(cur.begin(), cur.end(), a)) missing.push_back(a);
    auto out = cur;
    out.push_back(missing[rng.index(missing.size())]);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::size_t> FsaSchool::swarm_candidate(std::size_t k) const {
    const auto& cur = fish_[k].attrs;
    std::vector<std::size_t> visible;
    for (std::size_t j = 0; j < fish_.size(); ++j)
        if (j != k && hamming(cur, fish_[j].attrs) <= visual_) visible.push_back(j);
    if (visible.empty()) return cur;
    // crowding: too many neighbors means the center brings no diversity
    if (static_cast<double>(visible.size()) >
        params_.crowding * static_cast<double>(fish_.size()))
        return cur;

    // attribute-frequency center over the visible fish plus self
    std::vector<std::size_t> freq(n_, 0);
    for (std::size_t a : cur) ++freq[a];
    for (std::size_t j : visible)
        for (std::size_t a : fish_[j].attrs) ++freq[a];
    const std::size_t quorum = (visible.size() + 1 + 1) / 2;  // majority
    std::vector<std::size_t> center;
    for (std::size_t a = 0; a < n_; ++a)
        if (freq[a] >= quorum) center.push_back(a);
    if (center.empty()) return cur;
    return center;
}

std::vector<std::size_t> FsaSchool::follow_candidate(std::size_t k, RngStream& rng) const {
    const auto& cur = fish_[k].attrs;
    std::size_t best = fish_.size();
    for (std::size_t j = 0; j < fish_.size(); ++j) {
        if (j == k || hamming(cur, fish_[j].attrs) > visual_) continue;
        if (best == fish_.size() || fish_[j].fitness > fish_[best].fitness) best = j;
    }
    if (best == fish_.size()) return cur;
    std::vector<std::size_t> fresh;
    for (std::size_t a : fish_[best].attrs)
        if (!std::binary_search(cur.begin(), cur.end(), a)) fresh.push_back(a);
    if (fresh.empty()) return cur;
    auto out = cur;
    out.push_back(fresh[rng.index(fresh.size())]);
    std::sort(out.begin(), out.end());
    return out;
}

void FsaSchool::step(const RoughSetTable& table, const FitnessFn& fitness, RngStream& rng) {
    for (std::size_t k = 0; k < fish_.size(); ++k) {
        std::vector<std::vector<std::size_t>> candidates;
        candidates.push_back(search_candidate(k, rng));
        candidates.push_back(swarm_candidate(k));
        candidates.push_back(follow_candidate(k, rng));

        std::size_t pick = 0;
        double pick_fitness = kInfeasibleFitness;
        for (std::size_t c = 0; c < candidates.size(); ++c) {
            const double f = fitness(subset_genome(candidates[c], n_));
            if (f > pick_fitness) {
                pick = c;
                pick_fitness = f;
            }
        }
        fish_[k].attrs = std::move(candidates[pick]);
        fish_[k].fitness = pick_fitness;

        // reduct bookkeeping: full dependency reached with a subset no longer
        // than the incumbent minimum
        if (!fish_[k].attrs.empty() && fish_[k].attrs.size() <= l_min_ &&
            rough_set_dependency(table, fish_[k].attrs) == gamma_full_) {
            r_min_ = fish_[k].attrs;
            l_min_ = r_min_.size();
        }
    }
}

std::size_t FsaSchool::best_fish() const {
    std::size_t best = 0;
    for (std::size_t k = 1; k < fish_.size(); ++k)
        if (fish_[k].fitness > fish_[best].fitness) best = k;
    return best;
}

double FsaSchool::mean_fitness() const {
    double sum = 0.0;
    std::size_t count = 0;
    for (const auto& f : fish_) {
        if (std::isfinite(f.fitness)) {
            sum += f.fitness;
            ++count;
        }
    }
    return count == 0 ? kInfeasibleFitness : sum / static_cast<double>(count);
}

}  // namespace evofs
