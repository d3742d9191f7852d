#pragma once

#include <cstdint>
#include <vector>

#include "evofs/rng.hpp"

namespace evofs {

enum class Encoding { BinaryMask, IntegerSubset };

// Candidate feature subset. BinaryMask holds one bit per feature; the decoded
// subset is the set of positions with bit 1. IntegerSubset holds a fixed-length
// list of distinct feature indices (order carries no meaning beyond slot
// identity for the variation operators).
struct Genome {
    Encoding encoding = Encoding::BinaryMask;
    std::size_t n = 0;                   // total feature count
    std::vector<std::uint8_t> mask;      // BinaryMask: length n, entries 0/1
    std::vector<std::size_t> indices;    // IntegerSubset: distinct, each < n

    static Genome binary(std::vector<std::uint8_t> bits);
    static Genome subset(std::vector<std::size_t> idx, std::size_t total_features);

    /// Bernoulli(1/2) bits; all-zero masks are rejected and redrawn.
    static Genome random_binary(std::size_t n, RngStream& rng);
    /// m distinct indices drawn without replacement.
    static Genome random_subset(std::size_t n, std::size_t m, RngStream& rng);

    std::size_t length() const {
        return encoding == Encoding::BinaryMask ? mask.size() : indices.size();
    }
    /// Decoded feature subset, ascending.
    std::vector<std::size_t> selected() const;
    std::size_t selected_count() const;
    bool selects(std::size_t feature) const;
    bool valid() const;

    bool operator==(const Genome& other) const;
};

}  // namespace evofs
