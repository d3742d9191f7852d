#include "evofs/gp.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "evofs/fitness.hpp"

namespace evofs {

namespace {

constexpr GpOp kBinaryOps[] = {GpOp::Add, GpOp::Sub, GpOp::Mul, GpOp::Div};
constexpr GpOp kUnaryOps[] = {GpOp::Sin, GpOp::Cos, GpOp::Tan, GpOp::Square};

double sanitize(double v) { return std::isfinite(v) ? v : 0.0; }

double eval_node(const GpNode& node, std::span<const double> row) {
    switch (node.op) {
        case GpOp::Const: return node.value;
        case GpOp::Var:
            if (node.var >= row.size())
                throw std::invalid_argument("gp_eval: unbound variable x" +
                                            std::to_string(node.var));
            return row[node.var];
        case GpOp::Add:
            return sanitize(eval_node(node.children[0], row) + eval_node(node.children[1], row));
        case GpOp::Sub:
            return sanitize(eval_node(node.children[0], row) - eval_node(node.children[1], row));
        case GpOp::Mul:
            return sanitize(eval_node(node.children[0], row) * eval_node(node.children[1], row));
        case GpOp::Div: {
            const double num = eval_node(node.children[0], row);
            const double den = eval_node(node.children[1], row);
            if (std::fabs(den) < 1e-9) return 1.0;
            return sanitize(num / den);
        }
        case GpOp::Sin: return sanitize(std::sin(eval_node(node.children[0], row)));
        case GpOp::Cos: return sanitize(std::cos(eval_node(node.children[0], row)));
        case GpOp::Tan: return sanitize(std::tan(eval_node(node.children[0], row)));
        case GpOp::Square: {
            const double v = eval_node(node.children[0], row);
            return sanitize(v * v);
        }
    }
    throw std::logic_error("gp_eval: unknown op");
}

int node_depth(const GpNode& node) {
    int deepest = 0;
    for (const auto& child : node.children) deepest = std::max(deepest, node_depth(child));
    return deepest + 1;
}

std::size_t count_nodes(const GpNode& node) {
    std::size_t total = 1;
    for (const auto& child : node.children) total += count_nodes(child);
    return total;
}

bool node_valid(const GpNode& node) {
    if (static_cast<int>(node.children.size()) != gp_arity(node.op)) return false;
    for (const auto& child : node.children)
        if (!node_valid(child)) return false;
    return true;
}

void collect_nodes(GpNode& node, std::vector<GpNode*>& out) {
    out.push_back(&node);
    for (auto& child : node.children) collect_nodes(child, out);
}

GpNode random_terminal(std::size_t n_vars, RngStream& rng) {
    GpNode node;
    if (n_vars > 0 && rng.bernoulli(0.7)) {
        node.op = GpOp::Var;
        node.var = rng.index(n_vars);
    } else {
        node.op = GpOp::Const;
        node.value = rng.uniform(-5.0, 5.0);
    }
    return node;
}

GpNode random_node(std::size_t n_vars, int depth, bool full, RngStream& rng) {
    const bool want_function = depth > 1 && (full || rng.bernoulli(0.6));
    if (!want_function) return random_terminal(n_vars, rng);
    GpNode node;
    if (rng.bernoulli(0.5)) {
        node.op = kBinaryOps[rng.index(4)];
        node.children.push_back(random_node(n_vars, depth - 1, full, rng));
        node.children.push_back(random_node(n_vars, depth - 1, full, rng));
    } else {
        node.op = kUnaryOps[rng.index(4)];
        node.children.push_back(random_node(n_vars, depth - 1, full, rng));
    }
    return node;
}

void print_node(const GpNode& node, std::ostringstream& out) {
    switch (node.op) {
        case GpOp::Const: out << node.value; return;
        case GpOp::Var: out << 'x' << node.var; return;
        case GpOp::Add:
        case GpOp::Sub:
        case GpOp::Mul:
        case GpOp::Div: {
            const char* sym = node.op == GpOp::Add   ? "+"
                              : node.op == GpOp::Sub ? "-"
                              : node.op == GpOp::Mul ? "*"
                                                     : "/";
            out << '(';
            print_node(node.children[0], out);
            out << ' ' << sym << ' ';
            print_node(node.children[1], out);
            out << ')';
            return;
        }
        case GpOp::Sin: out << "sin("; break;
        case GpOp::Cos: out << "cos("; break;
        case GpOp::Tan: out << "tan("; break;
        case GpOp::Square: out << "sq("; break;
    }
    print_node(node.children[0], out);
    out << ')';
}

}  // namespace

int gp_arity(GpOp op) {
    switch (op) {
        case GpOp::Add:
        case GpOp::Sub:
        case GpOp::Mul:
        case GpOp::Div: return 2;
        case GpOp::Sin:
        case GpOp::Cos:
        case GpOp::Tan:
        case GpOp::Square: return 1;
        case GpOp::Var:
        case GpOp::Const: return 0;
    }
    throw std::logic_error("gp_arity: unknown op");
}

int ExprTree::depth() const { return node_depth(root); }

std::size_t ExprTree::node_count() const { return count_nodes(root); }

bool ExprTree::valid(int max_depth) const { return node_valid(root) && depth() <= max_depth; }

std::string ExprTree::to_string() const {
    std::ostringstream out;
    print_node(root, out);
    return out.str();
}

double gp_eval(const ExprTree& tree, std::span<const double> row) {
    return sanitize(eval_node(tree.root, row));
}

std::pair<ExprTree, ExprTree> gp_subtree_crossover_at(const ExprTree& a, const ExprTree& b,
                                                      std::size_t node_a, std::size_t node_b,
                                                      int max_depth) {
    ExprTree c1 = a;
    ExprTree c2 = b;
    std::vector<GpNode*> nodes1, nodes2;
    collect_nodes(c1.root, nodes1);
    collect_nodes(c2.root, nodes2);
    if (node_a >= nodes1.size() || node_b >= nodes2.size())
        throw std::invalid_argument("gp_subtree_crossover_at: node index out of range");
    std::swap(*nodes1[node_a], *nodes2[node_b]);
    if (c1.depth() > max_depth) c1 = a;
    if (c2.depth() > max_depth) c2 = b;
    return {std::move(c1), std::move(c2)};
}

std::pair<ExprTree, ExprTree> gp_subtree_crossover(const ExprTree& a, const ExprTree& b,
                                                   RngStream& rng, int max_depth) {
    const std::size_t node_a = rng.index(a.node_count());
    const std::size_t node_b = rng.index(b.node_count());
    return gp_subtree_crossover_at(a, b, node_a, node_b, max_depth);
}

ExprTree gp_point_mutation(const ExprTree& tree, std::size_t n_vars, RngStream& rng) {
    ExprTree out = tree;
    std::vector<GpNode*> nodes;
    collect_nodes(out.root, nodes);
    GpNode* pick = nodes[rng.index(nodes.size())];
    switch (gp_arity(pick->op)) {
        case 2: pick->op = kBinaryOps[rng.index(4)]; break;
        case 1: pick->op = kUnaryOps[rng.index(4)]; break;
        default: {
            GpNode fresh = random_terminal(n_vars, rng);
            pick->op = fresh.op;
            pick->var = fresh.var;
            pick->value = fresh.value;
            break;
        }
    }
    return out;
}

ExprTree gp_random_tree(std::size_t n_vars, int depth, bool full, RngStream& rng) {
    if (depth < 1) throw std::invalid_argument("gp_random_tree: depth must be >= 1");
    return {random_node(n_vars, depth, full, rng)};
}

Dataset gp_generate_features(const Dataset& ds, std::size_t count, std::size_t generations,
                             RngStream& rng, const GpConfig& config) {
    if (count == 0) throw std::invalid_argument("gp_generate_features: count must be >= 1");
    const std::size_t n_vars = ds.cols;

    struct Scored {
        ExprTree tree;
        double score;
    };
    auto score_tree = [&](const ExprTree& tree) {
        std::vector<double> out(ds.rows);
        std::vector<double> row(ds.cols);
        for (std::size_t r = 0; r < ds.rows; ++r) {
            for (std::size_t c = 0; c < ds.cols; ++c) row[c] = ds.at(r, c);
            out[r] = gp_eval(tree, row);
        }
        return filter_score(out, ds.labels);
    };

    // ramped half-and-half initial population
    std::vector<Scored> pop;
    pop.reserve(config.population);
    for (std::size_t i = 0; i < config.population; ++i) {
        const int span = config.init_depth_max - config.init_depth_min + 1;
        const int depth = config.init_depth_min + static_cast<int>(i % static_cast<std::size_t>(span));
        ExprTree tree = gp_random_tree(n_vars, depth, i % 2 == 0, rng);
        const double s = score_tree(tree);
        pop.push_back({std::move(tree), s});
    }

    auto best_index = [&]() {
        std::size_t best = 0;
        for (std::size_t i = 1; i < pop.size(); ++i)
            if (pop[i].score > pop[best].score) best = i;
        return best;
    };
    auto tournament = [&]() -> const Scored& {
        std::size_t best = rng.index(pop.size());
        for (std::size_t i = 1; i < config.tournament_k; ++i) {
            const std::size_t c = rng.index(pop.size());
            if (pop[c].score > pop[best].score) best = c;
        }
        return pop[best];
    };

    for (std::size_t g = 0; g < generations; ++g) {
        std::vector<Scored> next;
        next.reserve(pop.size());
        next.push_back(pop[best_index()]);  // elitism 1
        while (next.size() < pop.size()) {
            ExprTree child1, child2;
            if (rng.bernoulli(config.crossover_rate)) {
                auto pair = gp_subtree_crossover(tournament().tree, tournament().tree, rng,
                                                 config.max_depth);
                child1 = std::move(pair.first);
                child2 = std::move(pair.second);
            } else {
                child1 = tournament().tree;
                child2 = tournament().tree;
            }
            for (ExprTree* child : {&child1, &child2}) {
                if (next.size() >= pop.size()) break;
                if (rng.bernoulli(config.mutation_rate))
                    *child = gp_point_mutation(*child, n_vars, rng);
                const double s = score_tree(*child);
                next.push_back({std::move(*child), s});
            }
        }
        pop = std::move(next);
    }

    // top-count trees by score, ties to the lower index
    std::vector<std::size_t> order(pop.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return pop[a].score != pop[b].score ? pop[a].score > pop[b].score : a < b;
    });
    const std::size_t take = std::min(count, pop.size());

    Dataset out;
    out.rows = ds.rows;
    out.cols = ds.cols + take;
    out.values.resize(out.rows * out.cols);
    out.labels = ds.labels;
    out.label_names = ds.label_names;
    out.feature_names = ds.feature_names;
    out.source = ds.source;
    out.transform_log = ds.transform_log;
    for (std::size_t r = 0; r < ds.rows; ++r)
        for (std::size_t c = 0; c < ds.cols; ++c) out.at(r, c) = ds.at(r, c);

    std::vector<double> column(ds.rows);
    std::vector<double> row(ds.cols);
    for (std::size_t k = 0; k < take; ++k) {
        const ExprTree& tree = pop[order[k]].tree;
        for (std::size_t r = 0; r < ds.rows; ++r) {
            for (std::size_t c = 0; c < ds.cols; ++c) row[c] = ds.at(r, c);
            column[r] = gp_eval(tree, row);
        }
        const auto [lo_it, hi_it] = std::minmax_element(column.begin(), column.end());
        const double lo = *lo_it, hi = *hi_it;
        for (std::size_t r = 0; r < ds.rows; ++r)
            out.at(r, ds.cols + k) = lo == hi ? 0.5 : (column[r] - lo) / (hi - lo);
        out.feature_names.push_back("gp_" + std::to_string(k));
        out.transform_log.push_back("gp_feature(gp_" + std::to_string(k) + " = " +
                                    tree.to_string() + ")");
    }
    return out;
}

}  // namespace evofs
