#include "simpson/chain_report.hpp"

#include <cmath>
#include <limits>

namespace simpson {

DepthRecord summarize_depth(int depth, std::vector<CellComparison> cells) {
    DepthRecord record;
    record.depth = depth;
    record.min_margin = std::numeric_limits<double>::infinity();
    bool all_greater = true;
    bool all_less = true;
    for (const auto& c : cells) {
        all_greater = all_greater && c.p1 > c.p0;
        all_less = all_less && c.p1 < c.p0;
        const double margin = std::abs(c.p1 - c.p0);
        if (margin < record.min_margin) {
            record.min_margin = margin;
            record.worst_cell = c.cell;
        }
    }
    if (cells.empty()) {
        record.min_margin = 0.0;
    } else if (all_greater) {
        record.direction = Direction::greater;
    } else if (all_less) {
        record.direction = Direction::less;
    }
    record.cells = std::move(cells);
    return record;
}

ChainReport make_report(std::vector<DepthRecord> depths) {
    ChainReport report;
    report.verdict = !depths.empty();
    for (std::size_t m = 0; m < depths.size(); ++m) {
        const auto& rec = depths[m];
        if (!rec.direction || !(rec.min_margin > 0.0)) {
            report.verdict = false;
        } else if (m > 0 && depths[m - 1].direction == rec.direction) {
            report.verdict = false;
        }
    }
    report.depths = std::move(depths);
    return report;
}

bool ChainReport::has_flip() const {
    for (std::size_t m = 1; m < depths.size(); ++m) {
        const auto& prev = depths[m - 1].direction;
        const auto& cur = depths[m].direction;
        if (prev && cur && *prev != *cur) return true;
    }
    return false;
}

}  // namespace simpson
