#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace simpson {

/// Outcome (i1, ..., im) of the first m stratifying factors. Bit i1 is the
/// most significant bit of `pattern`; depth 0 is the whole sample space.
class CellIndex {
public:
    static constexpr int kMaxDepth = 30;

    CellIndex() = default;
    CellIndex(int depth, std::uint32_t pattern);

    /// Parses "101"; "" and "()" give the root.
    static CellIndex parse(const std::string& bits);

    int depth() const noexcept { return depth_; }
    std::uint32_t pattern() const noexcept { return pattern_; }

    /// Value of factor position `position` (1-based, <= depth).
    int bit(int position) const;

    CellIndex child(int bit) const;
    CellIndex parent() const;

    /// Position in a breadth-first flat layout: 2^depth - 1 + pattern.
    std::size_t flat() const noexcept {
        return (std::size_t{1} << depth_) - 1 + pattern_;
    }

    std::string to_string() const;

    friend bool operator==(const CellIndex&, const CellIndex&) = default;
    friend auto operator<=>(const CellIndex&, const CellIndex&) = default;

private:
    int depth_ = 0;
    std::uint32_t pattern_ = 0;
};

}  // namespace simpson
