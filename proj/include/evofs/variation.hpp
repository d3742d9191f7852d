#pragma once

#include <utility>

#include "evofs/genome.hpp"
#include "evofs/rng.hpp"

namespace evofs {

enum class CrossoverKind { KPoint, Uniform, Arithmetic };

struct VariationSpec {
    CrossoverKind crossover = CrossoverKind::KPoint;
    std::size_t k_points = 1;     // KPoint only; 1 <= k < genome length
    double mutation_rate = 0.05;  // alpha_M in [0, 1]
};

/// Recombines two genomes of matching encoding and length.
/// KPoint: k distinct cut positions, children alternate parental segments.
/// Uniform: each gene from either parent with probability 1/2; the second
/// child takes the complementary choice. Arithmetic is defined only for
/// continuous vectors (see arithmetic_blend) and is a usage error here.
/// IntegerSubset children are repaired: duplicate indices are resampled
/// uniformly from the unused indices.
std::pair<Genome, Genome> crossover(const Genome& a, const Genome& b, const VariationSpec& spec,
                                    RngStream& rng);

/// K-point crossover with explicit cut positions (each in [1, length-1],
/// strictly increasing). Deterministic; duplicates in IntegerSubset children
/// are still repaired with rng.
std::pair<Genome, Genome> crossover_at_points(const Genome& a, const Genome& b,
                                              const std::vector<std::size_t>& cuts,
                                              RngStream& rng);

/// BinaryMask: each bit flips independently with probability mutation_rate.
/// IntegerSubset: each slot resamples to an unused index with that probability.
Genome mutate(const Genome& g, const VariationSpec& spec, RngStream& rng);

/// Arithmetic crossover for the swarm algorithms' continuous vectors:
/// child = lambda * a + (1 - lambda) * b componentwise.
std::vector<double> arithmetic_blend(const std::vector<double>& a, const std::vector<double>& b,
                                     double lambda);

}  // namespace evofs
