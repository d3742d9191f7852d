#include "evofs/variation.hpp"

#include <algorithm>
#include <stdexcept>

namespace evofs {

namespace {

// Resamples duplicate slots of an IntegerSubset child from the unused indices.
void repair_subset(Genome& g, RngStream& rng) {
    std::vector<bool> used(g.n, false);
    std::vector<std::size_t> dup_slots;
    for (std::size_t j = 0; j < g.indices.size(); ++j) {
        if (used[g.indices[j]]) {
            dup_slots.push_back(j);
        } else {
            used[g.indices[j]] = true;
        }
    }
    if (dup_slots.empty()) return;
    std::vector<std::size_t> unused;
    for (std::size_t i = 0; i < g.n; ++i)
        if (!used[i]) unused.push_back(i);
    for (std::size_t slot : dup_slots) {
        const std::size_t pick = rng.index(unused.size());
        g.indices[slot] = unused[pick];
        unused.erase(unused.begin() + static_cast<std::ptrdiff_t>(pick));
    }
}

template <typename Gene>
void exchange_at_cuts(std::vector<Gene>& c1, std::vector<Gene>& c2,
                      const std::vector<std::size_t>& cuts) {
    bool swapped = false;
    std::size_t cut_at = 0;
    for (std::size_t p = 0; p < c1.size(); ++p) {
        if (cut_at < cuts.size() && cuts[cut_at] == p) {
            swapped = !swapped;
            ++cut_at;
        }
        if (swapped) std::swap(c1[p], c2[p]);
    }
}

template <typename Gene>
void kpoint_exchange(std::vector<Gene>& c1, std::vector<Gene>& c2, std::size_t k,
                     RngStream& rng) {
    const std::size_t len = c1.size();
    // k distinct cut positions in [1, len-1]
    std::vector<std::size_t> cuts(len - 1);
    for (std::size_t i = 0; i < cuts.size(); ++i) cuts[i] = i + 1;
    for (std::size_t i = 0; i < k; ++i)
        std::swap(cuts[i], cuts[i + rng.index(cuts.size() - i)]);
    cuts.resize(k);
    std::sort(cuts.begin(), cuts.end());
    exchange_at_cuts(c1, c2, cuts);
}

template <typename Gene>
void uniform_exchange(std::vector<Gene>& c1, std::vector<Gene>& c2, RngStream& rng) {
    for (std::size_t p = 0; p < c1.size(); ++p)
        if (rng.bernoulli(0.5)) std::swap(c1[p], c2[p]);
}

}  // namespace

std::pair<Genome, Genome> crossover(const Genome& a, const Genome& b, const VariationSpec& spec,
                                    RngStream& rng) {
    if (a.encoding != b.encoding || a.n != b.n || a.length() != b.length())
        throw std::invalid_argument("crossover: parents must share encoding and length");
    if (spec.crossover == CrossoverKind::Arithmetic)
        throw std::invalid_argument(
            "crossover: arithmetic operator is defined only for continuous vectors");

    Genome c1 = a;
    Genome c2 = b;
    const std::size_t len = a.length();
    if (len < 2) return {c1, c2};  // nothing to cut or exchange

    if (spec.crossover == CrossoverKind::KPoint) {
        const std::size_t k = spec.k_points;
        if (k == 0 || k >= len)
            throw std::invalid_argument("crossover: k-point requires 1 <= k < genome length");
        if (a.encoding == Encoding::BinaryMask)
            kpoint_exchange(c1.mask, c2.mask, k, rng);
        else
            kpoint_exchange(c1.indices, c2.indices, k, rng);
    } else {  // Uniform
        if (a.encoding == Encoding::BinaryMask)
            uniform_exchange(c1.mask, c2.mask, rng);
        else
            uniform_exchange(c1.indices, c2.indices, rng);
    }

    if (a.encoding == Encoding::IntegerSubset) {
        repair_subset(c1, rng);
        repair_subset(c2, rng);
    }
    return {c1, c2};
}

std::pair<Genome, Genome> crossover_at_points(const Genome& a, const Genome& b,
                                              const std::vector<std::size_t>& cuts,
                                              RngStream& rng) {
    if (a.encoding != b.encoding || a.n != b.n || a.length() != b.length())
        throw std::invalid_argument("crossover: parents must share encoding and length");
    for (std::size_t i = 0; i < cuts.size(); ++i) {
        if (cuts[i] == 0 || cuts[i] >= a.length() || (i > 0 && cuts[i] <= cuts[i - 1]))
            throw std::invalid_argument("crossover: cut positions must be increasing in [1, len)");
    }
    Genome c1 = a;
    Genome c2 = b;
    if (a.encoding == Encoding::BinaryMask)
        exchange_at_cuts(c1.mask, c2.mask, cuts);
    else
        exchange_at_cuts(c1.indices, c2.indices, cuts);
    if (a.encoding == Encoding::IntegerSubset) {
        repair_subset(c1, rng);
        repair_subset(c2, rng);
    }
    return {c1, c2};
}

Genome mutate(const Genome& g, const VariationSpec& spec, RngStream& rng) {
    const double rate = spec.mutation_rate;
    if (rate < 0.0 || rate > 1.0)
        throw std::invalid_argument("mutate: mutation_rate must lie in [0, 1]");
    Genome out = g;
    if (g.encoding == Encoding::BinaryMask) {
        for (auto& bit : out.mask)
            if (rng.bernoulli(rate)) bit ^= 1;
        return out;
    }
    std::vector<bool> used(g.n, false);
    for (std::size_t v : out.indices) used[v] = true;
    for (std::size_t j = 0; j < out.indices.size(); ++j) {
        if (!rng.bernoulli(rate)) continue;
        std::vector<std::size_t> unused;
        for (std::size_t i = 0; i < g.n; ++i)
            if (!used[i]) unused.push_back(i);
        if (unused.empty()) continue;  // subset already covers every feature
        const std::size_t pick = unused[rng.index(unused.size())];
        used[out.indices[j]] = false;
        used[pick] = true;
        out.indices[j] = pick;
    }
    return out;
}

std::vector<double> arithmetic_blend(const std::vector<double>& a, const std::vector<double>& b,
                                     double lambda) {
    if (a.size() != b.size())
        throw std::invalid_argument("arithmetic_blend: vectors must have equal length");
    std::vector<double> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = lambda * a[i] + (1.0 - lambda) * b[i];
    return out;
}

}  // namespace evofs
