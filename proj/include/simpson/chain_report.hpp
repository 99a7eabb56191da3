#pragma once

#include <optional>
#include <vector>

#include "simpson/cell_index.hpp"
#include "simpson/decomposition.hpp"

namespace simpson {

struct CellComparison {
    CellIndex cell;
    double p1 = 0.0;  // P(X1 | A1, cell)
    double p0 = 0.0;  // P(X1 | A0, cell)
};

struct DepthRecord {
    int depth = 0;
    /// Set only when every cell at this depth compares strictly the same way.
    std::optional<Direction> direction;
    /// Smallest |p1 - p0| over the cells, and where it occurs.
    double min_margin = 0.0;
    CellIndex worst_cell;
    std::vector<CellComparison> cells;
};

struct ChainReport {
    std::vector<DepthRecord> depths;
    bool verdict = false;

    /// True when some depth m >= 1 is uniform and opposite to a uniform depth m-1.
    bool has_flip() const;
};

/// Fills direction/min_margin/worst_cell of a depth from its cells.
DepthRecord summarize_depth(int depth, std::vector<CellComparison> cells);

/// Verdict: every depth uniform, strictly alternating, positive margins.
ChainReport make_report(std::vector<DepthRecord> depths);

}  // namespace simpson
