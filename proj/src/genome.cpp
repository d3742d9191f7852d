#include "evofs/genome.hpp"

#include <algorithm>
#include <stdexcept>

namespace evofs {

Genome Genome::binary(std::vector<std::uint8_t> bits) {
    Genome g;
    g.encoding = Encoding::BinaryMask;
    g.n = bits.size();
    g.mask = std::move(bits);
    for (auto& b : g.mask) b = b ? 1 : 0;
    return g;
}

Genome Genome::subset(std::vector<std::size_t> idx, std::size_t total_features) {
    Genome g;
    g.encoding = Encoding::IntegerSubset;
    g.n = total_features;
    g.indices = std::move(idx);
    if (!g.valid()) throw std::invalid_argument("genome: invalid integer subset");
    return g;
}

Genome Genome::random_binary(std::size_t n, RngStream& rng) {
    if (n == 0) throw std::invalid_argument("genome: n must be positive");
    Genome g;
    g.encoding = Encoding::BinaryMask;
    g.n = n;
    g.mask.resize(n);
    do {
        for (auto& b : g.mask) b = rng.bernoulli(0.5) ? 1 : 0;
    } while (std::all_of(g.mask.begin(), g.mask.end(), [](std::uint8_t b) { return b == 0; }));
    return g;
}

Genome Genome::random_subset(std::size_t n, std::size_t m, RngStream& rng) {
    if (m == 0 || m > n) throw std::invalid_argument("genome: subset size out of range");
    std::vector<std::size_t> pool(n);
    for (std::size_t i = 0; i < n; ++i) pool[i] = i;
    // partial Fisher-Yates: first m entries form the sample
    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t j = i + rng.index(n - i);
        std::swap(pool[i], pool[j]);
    }
    pool.resize(m);
    Genome g;
    g.encoding = Encoding::IntegerSubset;
    g.n = n;
    g.indices = std::move(pool);
    return g;
}

std::vector<std::size_t> Genome::selected() const {
    std::vector<std::size_t> out;
    if (encoding == Encoding::BinaryMask) {
        for (std::size_t i = 0; i < mask.size(); ++i)
            if (mask[i]) out.push_back(i);
    } else {
        out = indices;
        std::sort(out.begin(), out.end());
    }
    return out;
}

std::size_t Genome::selected_count() const {
    if (encoding == Encoding::BinaryMask)
        return static_cast<std::size_t>(std::count(mask.begin(), mask.end(), std::uint8_t{1}));
    return indices.size();
}

bool Genome::selects(std::size_t feature) const {
    if (encoding == Encoding::BinaryMask) return feature < mask.size() && mask[feature] != 0;
    return std::find(indices.begin(), indices.end(), feature) != indices.end();
}

bool Genome::valid() const {
    if (encoding == Encoding::BinaryMask) {
        if (mask.size() != n) return false;
        for (auto b : mask)
            if (b > 1) return false;
        return true;
    }
    if (indices.size() > n) return false;
    std::vector<std::size_t> sorted = indices;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] >= n) return false;
        if (i > 0 && sorted[i] == sorted[i - 1]) return false;
    }
    return true;
}

bool Genome::operator==(const Genome& other) const {
    return encoding == other.encoding && n == other.n && mask == other.mask &&
           indices == other.indices;
}

}  // namespace evofs
