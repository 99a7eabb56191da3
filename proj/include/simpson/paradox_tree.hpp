#pragma once

#include <span>
#include <utility>
#include <vector>

#include "simpson/cell_index.hpp"
#include "simpson/chain_report.hpp"
#include "simpson/decomposition.hpp"

namespace simpson {

struct ParadoxNode {
    CellIndex index;
    Quadruple quad;
    Direction direction = Direction::greater;

    friend bool operator==(const ParadoxNode&, const ParadoxNode&) = default;
};

struct BuildOptions;

/// Complete binary tree of quadruples, stored flat in breadth-first order
/// (see CellIndex::flat). Children of a cell are cell+"1" (inner split) and
/// cell+"0" (outer split).
class ParadoxTree {
public:
    int n() const noexcept { return n_; }
    Direction root_direction() const noexcept { return nodes_.front().direction; }

    const ParadoxNode& node(const CellIndex& cell) const;
    const ParadoxNode& root() const noexcept { return nodes_.front(); }
    std::span<const ParadoxNode> nodes() const noexcept { return nodes_; }

    /// Nodes at one depth, in ascending pattern order.
    std::span<const ParadoxNode> level(int depth) const;

    std::size_t size() const noexcept { return nodes_.size(); }
    /// Elementary paradoxes: one per internal node, 2^n - 1.
    std::size_t internal_count() const noexcept { return nodes_.size() / 2; }

    /// Copy with one cell's masses replaced; stored directions are kept.
    ParadoxTree with_quadruple(const CellIndex& cell, const Quadruple& quad) const;

    friend bool operator==(const ParadoxTree&, const ParadoxTree&) = default;

private:
    friend ParadoxTree build(const Quadruple&, int, const BuildOptions&);

    int n_ = 0;
    std::vector<ParadoxNode> nodes_;
};

struct BuildOptions {
    int max_depth = 24;
    AnglePolicy policy = choose_angles;
};

/// Recursively splits `seed` down to depth n. Directions flip at every
/// level. DegenerateSeedError carries the cell that failed to split.
ParadoxTree build(const Quadruple& seed, int n, const BuildOptions& options = {});

/// (a/(a+b), c/(c+d)).
std::pair<double, double> node_conditionals(const ParadoxNode& node);

/// Recomputes every cell's conditionals from the raw masses, ignoring the
/// stored directions, and checks the alternating chain depth by depth.
ChainReport verify_alternation(const ParadoxTree& tree);

}  // namespace simpson
