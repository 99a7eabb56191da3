#include "simpson/paradox_tree.hpp"

#include "simpson/errors.hpp"

namespace simpson {

const ParadoxNode& ParadoxTree::node(const CellIndex& cell) const {
    if (cell.depth() > n_) {
        throw PreconditionError("cell " + cell.to_string() + " deeper than tree depth " +
                                std::to_string(n_));
    }
    return nodes_[cell.flat()];
}

std::span<const ParadoxNode> ParadoxTree::level(int depth) const {
    if (depth < 0 || depth > n_) {
        throw PreconditionError("depth " + std::to_string(depth) + " outside tree");
    }
    const std::size_t begin = (std::size_t{1} << depth) - 1;
    return std::span<const ParadoxNode>(nodes_).subspan(begin, std::size_t{1} << depth);
}

ParadoxTree ParadoxTree::with_quadruple(const CellIndex& cell, const Quadruple& quad) const {
    ParadoxTree copy = *this;
    if (cell.depth() > n_) throw PreconditionError("cell outside tree");
    copy.nodes_[cell.flat()].quad = quad;
    return copy;
}

ParadoxTree build(const Quadruple& seed, int n, const BuildOptions& options) {
    if (n < 0 || n > options.max_depth || n > CellIndex::kMaxDepth) {
        throw PreconditionError("depth " + std::to_string(n) + " outside [0, " +
                                std::to_string(options.max_depth) + "]");
    }
    validate_seed(seed);

    ParadoxTree tree;
    tree.n_ = n;
    tree.nodes_.resize((std::size_t{1} << (n + 1)) - 1);
    tree.nodes_[0] = {CellIndex{}, seed, direction_of(seed)};

    for (int depth = 0; depth < n; ++depth) {
        for (std::uint32_t pattern = 0; pattern < (1U << depth); ++pattern) {
            const CellIndex cell(depth, pattern);
            const ParadoxNode& parent = tree.nodes_[cell.flat()];
            Split split;
            try {
                split = decompose(parent.quad, options.policy);
            } catch (const DegenerateSeedError& e) {
                throw DegenerateSeedError(e.what(), cell.to_string());
            } catch (const DomainError& e) {
                throw DegenerateSeedError(e.what(), cell.to_string());
            } catch (const PreconditionError& e) {
                throw DegenerateSeedError(e.what(), cell.to_string());
            }
            const Direction child_dir = !parent.direction;
            const CellIndex inner = cell.child(1);
            const CellIndex outer = cell.child(0);
            tree.nodes_[inner.flat()] = {inner, split.inner, child_dir};
            tree.nodes_[outer.flat()] = {outer, split.outer, child_dir};
        }
    }
    return tree;
}

std::pair<double, double> node_conditionals(const ParadoxNode& node) {
    const auto& q = node.quad;
    return {q.a / (q.a + q.b), q.c / (q.c + q.d)};
}

ChainReport verify_alternation(const ParadoxTree& tree) {
    std::vector<DepthRecord> depths;
    depths.reserve(static_cast<std::size_t>(tree.n()) + 1);
    for (int depth = 0; depth <= tree.n(); ++depth) {
        std::vector<CellComparison> cells;
        cells.reserve(std::size_t{1} << depth);
        for (const auto& node : tree.level(depth)) {
            const auto [p1, p0] = node_conditionals(node);
            cells.push_back({node.index, p1, p0});
        }
        depths.push_back(summarize_depth(depth, std::move(cells)));
    }
    return make_report(std::move(depths));
}

}  // namespace simpson
