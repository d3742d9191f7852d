#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "evofs/dataset.hpp"
#include "evofs/rng.hpp"

namespace evofs {

// Expression trees over the function set {+, -, *, protected /, sin, cos,
// tan, square} with feature variables and ephemeral constants as terminals.

enum class GpOp { Add, Sub, Mul, Div, Sin, Cos, Tan, Square, Var, Const };

int gp_arity(GpOp op);

struct GpNode {
    GpOp op = GpOp::Const;
    std::size_t var = 0;   // Var terminals
    double value = 0.0;    // Const terminals
    std::vector<GpNode> children;
};

struct ExprTree {
    GpNode root;

    int depth() const;  // levels; a lone terminal has depth 1
    std::size_t node_count() const;
    /// Arity matches per node, leaves are terminals, depth within the cap.
    bool valid(int max_depth) const;
    std::string to_string() const;
};

/// Recursive evaluation; protected division returns 1 when |denominator|
/// < 1e-9 and any non-finite intermediate collapses to 0, so evaluation is
/// total on finite inputs.
double gp_eval(const ExprTree& tree, std::span<const double> row);

/// Swaps uniformly chosen subtrees. A child that would exceed max_depth is
/// replaced by its unmodified parent.
std::pair<ExprTree, ExprTree> gp_subtree_crossover(const ExprTree& a, const ExprTree& b,
                                                   RngStream& rng, int max_depth = 7);

/// Same swap with explicit preorder node indices.
std::pair<ExprTree, ExprTree> gp_subtree_crossover_at(const ExprTree& a, const ExprTree& b,
                                                      std::size_t node_a, std::size_t node_b,
                                                      int max_depth = 7);

/// Replaces one uniformly chosen node: functions swap to another symbol of
/// equal arity, terminals are redrawn.
ExprTree gp_point_mutation(const ExprTree& tree, std::size_t n_vars, RngStream& rng);

/// Random tree of exactly (full) or at most (grow) the given depth.
ExprTree gp_random_tree(std::size_t n_vars, int depth, bool full, RngStream& rng);

struct GpConfig {
    std::size_t population = 40;
    std::size_t tournament_k = 3;
    double crossover_rate = 0.9;
    double mutation_rate = 0.1;
    int max_depth = 7;
    int init_depth_min = 2;  // ramped half-and-half initialization range
    int init_depth_max = 4;
};

/// Evolves trees scored by the filter correlation of their output column
/// against the labels, then appends the top-count outputs as new normalized
/// columns gp_0..gp_{count-1}. Original columns are retained.
Dataset gp_generate_features(const Dataset& ds, std::size_t count, std::size_t generations,
                             RngStream& rng, const GpConfig& config = {});

}  // namespace evofs
